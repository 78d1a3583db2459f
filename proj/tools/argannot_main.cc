// argannot: command-line front end for segmenting, validating, comparing,
// merging and reporting annotation layers.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "argannot/agreement.h"
#include "argannot/analysis.h"
#include "argannot/annotation.h"
#include "argannot/corpus.h"
#include "argannot/error.h"
#include "argannot/server.h"
#include "argannot/store.h"
#include "argannot/text.h"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace argannot;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Raised for problems that are the caller's fault rather than the data's.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string format = "json";
  std::string corpus;
  bool quiet = false;
};

std::string ReadInput(const std::string &path) {
  if (!fs::exists(path)) {
    throw Error(ErrorCode::kIoError, "no such file: " + path);
  }
  std::string bytes = ReadFile(path);
  if (HasUtf8Bom(bytes)) {
    throw Error(ErrorCode::kInvalidEncoding,
                path + " starts with a UTF-8 byte order mark; save it without one");
  }
  return bytes;
}

void WriteOutput(const std::string &path, const std::string &bytes) {
  if (path.empty() || path == "-") {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    std::fflush(stdout);
    return;
  }
  WriteFileAtomic(path, bytes);
}

OutputFormat Format(const GlobalOptions &global) {
  return ParseOutputFormat(global.format);
}

// The document a layer refers to: --doc if given, otherwise the corpus copy.
Document ResolveDocument(const std::string &doc_path,
                         const GlobalOptions &global,
                         const std::string &layer_bytes) {
  if (!doc_path.empty()) return LoadDocument(ReadInput(doc_path));
  if (global.corpus.empty()) {
    throw UsageError("--doc is required without --corpus");
  }
  std::string doc_id = ParseLayer(layer_bytes).document_id();
  CorpusStore store(global.corpus);
  return store.GetDocument(doc_id);
}

void Say(const GlobalOptions &global, const std::string &line) {
  if (!global.quiet) std::cout << line << "\n";
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIoError:
    case ErrorCode::kParseError:
    case ErrorCode::kInvalidEncoding:
    case ErrorCode::kSchemaVersionMismatch:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

// segment ------------------------------------------------------------------

struct SegmentArgs {
  std::string input;
  std::string output;
  std::string abbrev;
  std::string id;
  std::string title;
  bool no_semicolons = false;
  bool no_colons = false;
  bool no_dashes = false;
};

int RunSegment(const SegmentArgs &args, const GlobalOptions &global) {
  std::string raw = ReadInput(args.input);
  AbbreviationSet abbreviations = args.abbrev.empty()
                                      ? DefaultAbbreviations()
                                      : ParseAbbreviations(ReadInput(args.abbrev));
  SegmentationOptions options;
  options.split_semicolons = !args.no_semicolons;
  options.split_colons = !args.no_colons;
  options.split_dashes = !args.no_dashes;
  std::string id = args.id.empty() ? fs::path(args.input).stem().string() : args.id;
  Document doc = SegmentText(raw, abbreviations, options, id, args.title);
  std::string bytes = SaveDocument(doc);
  std::string summary = std::to_string(doc.num_segments()) + " segments";
  if (args.output.empty() || args.output == "-") {
    WriteOutput("", bytes);
    if (!global.quiet) std::cerr << summary << "\n";
  } else {
    WriteOutput(args.output, bytes);
    Say(global, summary);
  }
  return kExitOk;
}

// validate / lint ----------------------------------------------------------

struct LayerArgs {
  std::string layer;
  std::string doc;
};

int RunValidate(const LayerArgs &args, const GlobalOptions &global) {
  std::string bytes = ReadInput(args.layer);
  Document doc = ResolveDocument(args.doc, global, bytes);
  std::vector<Violation> violations = Validate(ParseLayer(bytes), doc);
  for (const Violation &v : violations) Say(global, FormatViolation(v));
  return violations.empty() ? kExitOk : kExitFailure;
}

int RunLint(const LayerArgs &args, const GlobalOptions &global) {
  std::string bytes = ReadInput(args.layer);
  Document doc = ResolveDocument(args.doc, global, bytes);
  for (const LintFinding &finding : Lint(ParseLayer(bytes), doc)) {
    Say(global, FormatLintFinding(finding));
  }
  return kExitOk;
}

// diff / merge -------------------------------------------------------------

struct DiffArgs {
  std::string a;
  std::string b;
  std::string doc;
  std::string output;
  bool check = false;
};

int RunDiff(const DiffArgs &args, const GlobalOptions &global) {
  std::string a_bytes = ReadInput(args.a);
  std::string b_bytes = ReadInput(args.b);
  Document doc = ResolveDocument(args.doc, global, a_bytes);
  AnnotationLayer a = LoadLayer(a_bytes, doc);
  AnnotationLayer b = LoadLayer(b_bytes, doc);
  std::string report = RenderDiffReport(a, b, doc, Format(global));
  if (!global.quiet || !args.output.empty()) WriteOutput(args.output, report);
  if (args.check && !DiffLayers(a, b, doc).empty()) return kExitFailure;
  return kExitOk;
}

struct MergeArgs {
  std::string a;
  std::string b;
  std::string doc;
  std::string resolutions;
  std::string output;
  std::string annotator = "gold";
};

int RunMerge(const MergeArgs &args, const GlobalOptions &global) {
  std::string a_bytes = ReadInput(args.a);
  Document doc = ResolveDocument(args.doc, global, a_bytes);
  AnnotationLayer a = LoadLayer(a_bytes, doc);
  AnnotationLayer b = LoadLayer(ReadInput(args.b), doc);
  std::vector<Resolution> resolutions;
  if (!args.resolutions.empty()) {
    resolutions = ParseResolutions(ReadInput(args.resolutions));
  }
  GoldLayer gold = Merge(a, b, resolutions, doc, args.annotator);
  WriteOutput(args.output, SerializeGold(gold));
  if (!args.output.empty()) {
    Say(global, std::to_string(gold.provenance.size()) + " resolutions applied");
  }
  return kExitOk;
}

// report -------------------------------------------------------------------

struct ReportArgs {
  std::string layer;
  std::string doc;
  std::string output;
  bool all = false;
  std::string out_dir;
};

std::string_view Extension(OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return "json";
    case OutputFormat::kCsv:
      return "csv";
    case OutputFormat::kMarkdown:
      return "md";
  }
  return "txt";
}

int RunReportAll(const ReportArgs &args, const GlobalOptions &global) {
  if (global.corpus.empty()) throw UsageError("report --all needs --corpus");
  if (args.out_dir.empty()) throw UsageError("report --all needs --out-dir");
  OutputFormat format = Format(global);
  CorpusStore store(global.corpus);
  fs::create_directories(args.out_dir);

  struct Job {
    std::string doc_id;
    std::future<std::string> result;
  };
  std::vector<Job> jobs;
  for (const DocumentInfo &info : store.ListDocuments()) {
    if (!store.GetGoldBytes(info.id)) continue;
    jobs.push_back({info.id, std::async(std::launch::async, [&store, id = info.id,
                                                               format] {
                      return store.RenderReport(id, kGoldName, format);
                    })});
  }
  int status = kExitOk;
  for (Job &job : jobs) {
    try {
      fs::path out = fs::path(args.out_dir) /
                     (job.doc_id + ".report." + std::string(Extension(format)));
      WriteFileAtomic(out, job.result.get());
      Say(global, out.string());
    } catch (const Error &e) {
      std::cerr << "argannot: " << job.doc_id << ": " << e.what() << "\n";
      status = kExitFailure;
    }
  }
  return status;
}

int RunReport(const ReportArgs &args, const GlobalOptions &global) {
  if (args.all) return RunReportAll(args, global);
  if (args.layer.empty()) throw UsageError("report needs a layer file or --all");
  std::string bytes = ReadInput(args.layer);
  Document doc = ResolveDocument(args.doc, global, bytes);
  WriteOutput(args.output,
              RenderReport(FullReport(doc, LoadLayer(bytes, doc)), Format(global)));
  return kExitOk;
}

// stats --------------------------------------------------------------------

struct StatsArgs {
  std::string doc;
};

int RunStats(const StatsArgs &args, const GlobalOptions &global) {
  Document doc = LoadDocument(ReadInput(args.doc));
  TextDescriptives text = ComputeTextDescriptives(doc);
  std::vector<std::pair<std::string, size_t>> rows = {
      {"n_paragraphs", doc.paragraphs().size()},
      {"n_segments", doc.num_segments()},
      {"n_sentences", text.n_sentences},
      {"n_words", text.n_words},
      {"n_distinct_words", text.n_distinct_words},
  };
  std::string out;
  switch (Format(global)) {
    case OutputFormat::kJson: {
      nlohmann::ordered_json body;
      body["document_id"] = doc.id();
      for (const auto &[key, value] : rows) body[key] = value;
      out = body.dump(2) + "\n";
      break;
    }
    case OutputFormat::kCsv:
      out = "metric,value\ndocument_id," + CsvField(doc.id()) + "\n";
      for (const auto &[key, value] : rows) {
        out += key + "," + std::to_string(value) + "\n";
      }
      break;
    case OutputFormat::kMarkdown:
      out = "# " + doc.id() + "\n\n| metric | value |\n|---|---|\n";
      for (const auto &[key, value] : rows) {
        out += "| " + key + " | " + std::to_string(value) + " |\n";
      }
      break;
  }
  WriteOutput("", out);
  return kExitOk;
}

// serve --------------------------------------------------------------------

struct ServeArgs {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
};

int RunServe(const ServeArgs &args, const GlobalOptions &global) {
  if (global.corpus.empty()) throw UsageError("serve needs --corpus");
  CorpusStore store(global.corpus);
  Server server(store, {args.host, args.port, args.static_dir});
  int port = server.Bind();
  if (!global.quiet) {
    std::cerr << "serving " << global.corpus << " on http://" << args.host
              << ":" << port << "\n";
  }
  server.Run();
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Segment, annotate, compare and report on argumentation layers"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "argannot 1.0.0");

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format: json, csv or md")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--corpus", global.corpus, "Corpus directory")
      ->envname("ARGANNOT_CORPUS");
  app.add_flag("-q,--quiet", global.quiet, "Suppress informational output");

  std::function<int()> action;

  SegmentArgs segment;
  auto *seg = app.add_subcommand("segment", "Split raw text into a document file");
  seg->add_option("input", segment.input, "UTF-8 text file")->required();
  seg->add_option("-o,--output", segment.output, "Document file to write");
  seg->add_option("--abbrev", segment.abbrev, "Abbreviation list replacing the default");
  seg->add_option("--id", segment.id, "Document id (default: input file stem)");
  seg->add_option("--title", segment.title, "Document title");
  seg->add_flag("--no-semicolons", segment.no_semicolons, "Do not split at semicolons");
  seg->add_flag("--no-colons", segment.no_colons, "Do not split at colons");
  seg->add_flag("--no-dashes", segment.no_dashes, "Do not split at spaced dashes");
  seg->callback([&] { action = [&] { return RunSegment(segment, global); }; });

  LayerArgs validate;
  auto *val = app.add_subcommand("validate", "Check a layer's structural rules");
  val->add_option("layer", validate.layer, "Layer file")->required();
  val->add_option("--doc", validate.doc, "Document file");
  val->callback([&] { action = [&] { return RunValidate(validate, global); }; });

  LayerArgs lint;
  auto *lin = app.add_subcommand("lint", "Print advisory warnings for a layer");
  lin->add_option("layer", lint.layer, "Layer file")->required();
  lin->add_option("--doc", lint.doc, "Document file");
  lin->callback([&] { action = [&] { return RunLint(lint, global); }; });

  DiffArgs diff;
  auto *dif = app.add_subcommand("diff", "List disagreements between two layers");
  dif->add_option("a", diff.a, "First layer")->required();
  dif->add_option("b", diff.b, "Second layer")->required();
  dif->add_option("--doc", diff.doc, "Document file");
  dif->add_option("-o,--output", diff.output, "Write the report here");
  dif->add_flag("--check", diff.check, "Exit 1 when the layers disagree");
  dif->callback([&] { action = [&] { return RunDiff(diff, global); }; });

  MergeArgs merge;
  auto *mer = app.add_subcommand("merge", "Build a gold layer from two layers");
  mer->add_option("a", merge.a, "First layer")->required();
  mer->add_option("b", merge.b, "Second layer")->required();
  mer->add_option("--doc", merge.doc, "Document file");
  mer->add_option("-r,--resolutions", merge.resolutions, "Resolution file");
  mer->add_option("-o,--output", merge.output, "Gold file to write");
  mer->add_option("--annotator", merge.annotator, "Annotator name of the result");
  mer->callback([&] { action = [&] { return RunMerge(merge, global); }; });

  ReportArgs report;
  auto *rep = app.add_subcommand("report", "Statistics report for a layer");
  rep->add_option("layer", report.layer, "Layer or gold file");
  rep->add_option("--doc", report.doc, "Document file");
  rep->add_option("-o,--output", report.output, "Write the report here");
  rep->add_flag("--all", report.all, "Report every gold layer in the corpus");
  rep->add_option("--out-dir", report.out_dir, "Directory for --all reports");
  rep->callback([&] { action = [&] { return RunReport(report, global); }; });

  StatsArgs stats;
  auto *sta = app.add_subcommand("stats", "Text descriptives of a document");
  sta->add_option("doc", stats.doc, "Document file")->required();
  sta->callback([&] { action = [&] { return RunStats(stats, global); }; });

  ServeArgs serve;
  auto *srv = app.add_subcommand("serve", "Run the HTTP API over a corpus");
  srv->add_option("--host", serve.host, "Interface to bind");
  srv->add_option("-p,--port", serve.port, "Port (0 picks a free one)");
  srv->add_option("--static", serve.static_dir, "UI bundle to serve at /");
  srv->callback([&] { action = [&] { return RunServe(serve, global); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError &e) {
    std::cerr << "argannot: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error &e) {
    std::cerr << "argannot: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception &e) {
    std::cerr << "argannot: " << e.what() << "\n";
    return kExitUsage;
  }
}
