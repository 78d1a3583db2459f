#include "argannot/server.h"

#include <atomic>
#include <functional>

#include "argannot/scheme.h"
#include "httplib.h"
#include "json.hpp"

namespace argannot {

namespace {

using nlohmann::ordered_json;

constexpr const char *kJsonType = "application/json";

int StatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound:
    case ErrorCode::kUnknownSegment:
      return 404;
    case ErrorCode::kConflict:
      return 409;
    case ErrorCode::kValidationError:
    case ErrorCode::kDocumentMismatch:
    case ErrorCode::kUncoveredDisagreement:
    case ErrorCode::kInvalidResult:
    case ErrorCode::kReferentialIntegrity:
    case ErrorCode::kNoOverlap:
      return 422;
    case ErrorCode::kParseError:
    case ErrorCode::kSchemaVersionMismatch:
    case ErrorCode::kInvalidEncoding:
    case ErrorCode::kUnknownLabel:
    case ErrorCode::kEmptyInput:
      return 400;
    default:
      return 500;
  }
}

std::string ContentType(OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return kJsonType;
    case OutputFormat::kCsv:
      return "text/csv; charset=utf-8";
    case OutputFormat::kMarkdown:
      return "text/markdown; charset=utf-8";
  }
  return kJsonType;
}

void SendJson(httplib::Response &res, const ordered_json &body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(2) + "\n", kJsonType);
}

void SendError(httplib::Response &res, int status, std::string_view code,
               std::string_view message) {
  ordered_json body;
  body["error"]["code"] = code;
  body["error"]["message"] = message;
  SendJson(res, body, status);
}

ordered_json ViolationsJson(const std::vector<Violation> &violations) {
  ordered_json out = ordered_json::array();
  for (const Violation &v : violations) {
    out.push_back({{"code", ViolationCodeName(v.code)},
                   {"location", v.location},
                   {"message", v.message},
                   {"line", FormatViolation(v)}});
  }
  return out;
}

OutputFormat FormatParam(const httplib::Request &req) {
  if (!req.has_param("format")) return OutputFormat::kJson;
  return ParseOutputFormat(req.get_param_value("format"));
}

std::string RequiredParam(const httplib::Request &req, const char *name) {
  if (!req.has_param(name)) {
    throw Error(ErrorCode::kParseError,
                std::string("missing query parameter '") + name + "'");
  }
  return req.get_param_value(name);
}

// Accepts `3`, `"3"` and `W/"3"`.
std::optional<uint64_t> ParseRevisionToken(std::string token) {
  if (token.rfind("W/", 0) == 0) token = token.substr(2);
  if (token.size() >= 2 && token.front() == '"' && token.back() == '"') {
    token = token.substr(1, token.size() - 2);
  }
  if (token.empty() ||
      token.find_first_not_of("0123456789") != std::string::npos) {
    return std::nullopt;
  }
  try {
    return std::stoull(token);
  } catch (const std::exception &) {
    return std::nullopt;
  }
}

std::string EtagFor(uint64_t revision) {
  return "\"" + std::to_string(revision) + "\"";
}

using Handler =
    std::function<void(const httplib::Request &, httplib::Response &)>;

// Maps toolkit errors onto status codes so handlers can just throw.
httplib::Server::Handler Guarded(Handler handler) {
  return [handler = std::move(handler)](const httplib::Request &req,
                                        httplib::Response &res) {
    try {
      handler(req, res);
    } catch (const LayerRejected &e) {
      ordered_json body;
      body["error"]["code"] = ErrorCodeName(e.code());
      body["error"]["message"] = e.what();
      body["violations"] = ViolationsJson(e.violations());
      SendJson(res, body, 422);
    } catch (const Error &e) {
      SendError(res, StatusFor(e.code()), ErrorCodeName(e.code()), e.what());
    } catch (const std::exception &e) {
      SendError(res, 500, "InternalError", e.what());
    }
  };
}

}  // namespace

struct Server::Impl {
  Impl(CorpusStore &s, ServerOptions o) : store(s), options(std::move(o)) {}

  void Routes();

  CorpusStore &store;
  ServerOptions options;
  httplib::Server http;
  int bound_port = -1;
  std::atomic<bool> running{false};
};

void Server::Impl::Routes() {
  http.set_default_headers({
      {"Access-Control-Allow-Origin", "*"},
      {"Access-Control-Expose-Headers", "ETag, X-Revision"},
  });
  http.Options(R"(/api/.*)", [](const httplib::Request &,
                                httplib::Response &res) {
    res.set_header("Access-Control-Allow-Methods", "GET, PUT, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type, If-Match");
    res.status = 204;
  });

  http.Get("/api/scheme", Guarded([](const httplib::Request &,
                                     httplib::Response &res) {
             res.set_content(RenderCatalogJson(), kJsonType);
           }));

  http.Get("/api/documents", Guarded([this](const httplib::Request &,
                                            httplib::Response &res) {
             ordered_json docs = ordered_json::array();
             for (const DocumentInfo &info : store.ListDocuments()) {
               docs.push_back({{"id", info.id},
                               {"title", info.title},
                               {"n_paragraphs", info.n_paragraphs},
                               {"n_segments", info.n_segments}});
             }
             SendJson(res, {{"documents", docs}});
           }));

  http.Get(R"(/api/documents/([^/]+))",
           Guarded([this](const httplib::Request &req, httplib::Response &res) {
             res.set_content(store.GetDocumentBytes(req.matches[1].str()),
                             kJsonType);
           }));

  http.Get(R"(/api/documents/([^/]+)/layers)",
           Guarded([this](const httplib::Request &req, httplib::Response &res) {
             std::string doc_id = req.matches[1].str();
             ordered_json layers = ordered_json::array();
             for (const LayerInfo &info : store.ListLayers(doc_id)) {
               layers.push_back(
                   {{"annotator", info.annotator}, {"revision", info.revision}});
             }
             SendJson(res, {{"document_id", doc_id},
                            {"layers", layers},
                            {"gold", store.GetGoldBytes(doc_id).has_value()}});
           }));

  http.Get(R"(/api/documents/([^/]+)/layers/([^/]+))",
           Guarded([this](const httplib::Request &req, httplib::Response &res) {
             std::string doc_id = req.matches[1].str();
             std::string annotator = req.matches[2].str();
             if (annotator == kGoldName) {
               auto gold = store.GetGoldBytes(doc_id);
               if (!gold) throw Error(ErrorCode::kNotFound, "no gold layer");
               res.set_content(*gold, kJsonType);
               return;
             }
             auto stored = store.GetLayer(doc_id, annotator);
             if (!stored) {
               throw Error(ErrorCode::kNotFound,
                           "no layer '" + annotator + "' for '" + doc_id + "'");
             }
             res.set_header("ETag", EtagFor(stored->revision));
             res.set_header("X-Revision", std::to_string(stored->revision));
             res.set_content(stored->bytes, kJsonType);
           }));

  http.Put(R"(/api/documents/([^/]+)/layers/([^/]+))",
           Guarded([this](const httplib::Request &req, httplib::Response &res) {
             std::string doc_id = req.matches[1].str();
             std::string annotator = req.matches[2].str();
             std::string token = req.get_header_value("If-Match");
             if (token.empty()) token = req.get_header_value("X-Revision");
             if (token.empty()) {
               SendError(res, 428, "PreconditionRequired",
                         "PUT needs If-Match with the current revision "
                         "(0 for a new layer)");
               return;
             }
             auto expected = ParseRevisionToken(token);
             if (!expected) {
               throw Error(ErrorCode::kParseError,
                           "bad revision token '" + token + "'");
             }
             uint64_t revision =
                 store.PutLayer(doc_id, annotator, req.body, *expected);
             res.set_header("ETag", EtagFor(revision));
             res.set_header("X-Revision", std::to_string(revision));
             SendJson(res, {{"document_id", doc_id},
                            {"annotator", annotator},
                            {"revision", revision}});
           }));

  http.Get(R"(/api/documents/([^/]+)/diff)",
           Guarded([this](const httplib::Request &req, httplib::Response &res) {
             OutputFormat format = FormatParam(req);
             res.set_content(store.RenderDiff(req.matches[1].str(),
                                              RequiredParam(req, "a"),
                                              RequiredParam(req, "b"), format),
                             ContentType(format));
           }));

  http.Post(R"(/api/documents/([^/]+)/gold)",
            Guarded([this](const httplib::Request &req, httplib::Response &res) {
              res.set_content(
                  store.CreateGold(req.matches[1].str(), RequiredParam(req, "a"),
                                   RequiredParam(req, "b"), req.body),
                  kJsonType);
            }));

  http.Get(R"(/api/documents/([^/]+)/gold)",
           Guarded([this](const httplib::Request &req, httplib::Response &res) {
             auto gold = store.GetGoldBytes(req.matches[1].str());
             if (!gold) throw Error(ErrorCode::kNotFound, "no gold layer");
             res.set_content(*gold, kJsonType);
           }));

  http.Get(R"(/api/documents/([^/]+)/report)",
           Guarded([this](const httplib::Request &req, httplib::Response &res) {
             OutputFormat format = FormatParam(req);
             std::string layer = req.has_param("layer")
                                     ? req.get_param_value("layer")
                                     : std::string(kGoldName);
             res.set_content(
                 store.RenderReport(req.matches[1].str(), layer, format),
                 ContentType(format));
           }));

  http.Get(R"(/api/documents/([^/]+)/progress/([^/]+))",
           Guarded([this](const httplib::Request &req, httplib::Response &res) {
             std::string doc_id = req.matches[1].str();
             std::string annotator = req.matches[2].str();
             ordered_json paragraphs = ordered_json::array();
             size_t reviewed = 0;
             size_t total = 0;
             for (const ParagraphProgress &p : store.Progress(doc_id, annotator)) {
               paragraphs.push_back({{"index", p.index},
                                     {"reviewed", p.reviewed},
                                     {"total", p.total}});
               reviewed += p.reviewed;
               total += p.total;
             }
             SendJson(res, {{"document_id", doc_id},
                            {"annotator", annotator},
                            {"reviewed", reviewed},
                            {"total", total},
                            {"paragraphs", paragraphs}});
           }));

  if (!options.static_dir.empty()) {
    if (!http.set_mount_point("/", options.static_dir.string())) {
      throw Error(ErrorCode::kIoError,
                  "cannot serve " + options.static_dir.string());
    }
  }
}

Server::Server(CorpusStore &store, ServerOptions options)
    : impl_(std::make_unique<Impl>(store, std::move(options))) {
  impl_->Routes();
}

Server::~Server() { Stop(); }

int Server::Bind() {
  const ServerOptions &o = impl_->options;
  if (o.port == 0) {
    impl_->bound_port = impl_->http.bind_to_any_port(o.host);
  } else if (impl_->http.bind_to_port(o.host, o.port)) {
    impl_->bound_port = o.port;
  }
  if (impl_->bound_port <= 0) {
    throw Error(ErrorCode::kIoError, "cannot bind " + o.host + ":" +
                                         std::to_string(o.port));
  }
  return impl_->bound_port;
}

void Server::Run() {
  impl_->running = true;
  impl_->http.listen_after_bind();
  impl_->running = false;
}

void Server::Stop() {
  if (impl_->http.is_running()) impl_->http.stop();
}

bool Server::running() const { return impl_->http.is_running(); }

}  // namespace argannot
