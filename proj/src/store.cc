#include "argannot/store.h"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

namespace argannot {

namespace fs = std::filesystem;

namespace {

std::string RejectionMessage(const std::vector<Violation> &violations) {
  std::string message = std::to_string(violations.size()) + " violation(s)";
  for (const Violation &violation : violations) {
    message += "\n" + FormatViolation(violation);
  }
  return message;
}

void RequireSafe(std::string_view kind, std::string_view id) {
  if (!CorpusStore::IsSafeId(id)) {
    throw Error(ErrorCode::kNotFound,
                std::string(kind) + " '" + std::string(id) + "' is not a valid id");
  }
}

}  // namespace

LayerRejected::LayerRejected(std::vector<Violation> violations)
    : Error(ErrorCode::kValidationError, RejectionMessage(violations)),
      violations_(std::move(violations)) {}

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFileAtomic(const fs::path &path, std::string_view bytes) {
  static std::atomic<uint64_t> counter{0};
  fs::path temp = path;
  temp += ".tmp." + std::to_string(::getpid()) + "." +
          std::to_string(counter.fetch_add(1));
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + temp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(temp, ignored);
      throw Error(ErrorCode::kIoError, "short write to " + temp.string());
    }
  }
  std::error_code ec;
  fs::rename(temp, path, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw Error(ErrorCode::kIoError,
                "cannot replace " + path.string() + ": " + ec.message());
  }
}

CorpusStore::CorpusStore(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  for (const char *sub : {"documents", "layers", "gold"}) {
    fs::create_directories(root_ / sub, ec);
    if (ec) {
      throw Error(ErrorCode::kIoError,
                  "cannot create " + (root_ / sub).string() + ": " + ec.message());
    }
  }
}

bool CorpusStore::IsSafeId(std::string_view id) {
  if (id.empty() || id.front() == '.' || id.size() > 200) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
  });
}

fs::path CorpusStore::DocumentPath(std::string_view doc_id) const {
  RequireSafe("document", doc_id);
  return root_ / "documents" / (std::string(doc_id) + ".json");
}

fs::path CorpusStore::LayerPath(std::string_view doc_id,
                                std::string_view annotator) const {
  RequireSafe("document", doc_id);
  RequireSafe("annotator", annotator);
  return root_ / "layers" / std::string(doc_id) / (std::string(annotator) + ".json");
}

fs::path CorpusStore::RevisionPath(std::string_view doc_id,
                                   std::string_view annotator) const {
  RequireSafe("document", doc_id);
  RequireSafe("annotator", annotator);
  return root_ / "layers" / std::string(doc_id) / (std::string(annotator) + ".rev");
}

fs::path CorpusStore::GoldPath(std::string_view doc_id) const {
  RequireSafe("document", doc_id);
  return root_ / "gold" / (std::string(doc_id) + ".json");
}

std::shared_mutex &CorpusStore::KeyMutex(std::string_view doc_id,
                                         std::string_view annotator) const {
  std::lock_guard<std::mutex> lock(keys_mutex_);
  std::string key = std::string(doc_id) + "/" + std::string(annotator);
  auto &slot = key_mutexes_[key];
  if (!slot) slot = std::make_unique<std::shared_mutex>();
  return *slot;
}

std::vector<DocumentInfo> CorpusStore::ListDocuments() const {
  std::vector<std::string> ids;
  for (const auto &entry : fs::directory_iterator(root_ / "documents")) {
    if (entry.path().extension() != ".json") continue;
    ids.push_back(entry.path().stem().string());
  }
  std::sort(ids.begin(), ids.end());
  std::vector<DocumentInfo> out;
  for (const std::string &id : ids) {
    if (!IsSafeId(id)) continue;
    Document doc = GetDocument(id);
    out.push_back({doc.id(), doc.title(), doc.paragraphs().size(),
                   doc.num_segments()});
  }
  return out;
}

bool CorpusStore::HasDocument(std::string_view doc_id) const {
  return IsSafeId(doc_id) && fs::exists(DocumentPath(doc_id));
}

std::string CorpusStore::GetDocumentBytes(std::string_view doc_id) const {
  fs::path path = DocumentPath(doc_id);
  if (!fs::exists(path)) {
    throw Error(ErrorCode::kNotFound,
                "no document '" + std::string(doc_id) + "'");
  }
  return ReadFile(path);
}

Document CorpusStore::GetDocument(std::string_view doc_id) const {
  Document doc = LoadDocument(GetDocumentBytes(doc_id));
  if (doc.id() != doc_id) {
    throw Error(ErrorCode::kDocumentMismatch,
                "documents/" + std::string(doc_id) + ".json holds '" + doc.id() +
                    "'");
  }
  return doc;
}

void CorpusStore::PutDocument(const Document &doc) {
  WriteFileAtomic(DocumentPath(doc.id()), SaveDocument(doc));
}

uint64_t CorpusStore::ReadRevision(std::string_view doc_id,
                                   std::string_view annotator) const {
  fs::path path = RevisionPath(doc_id, annotator);
  if (!fs::exists(path)) {
    return fs::exists(LayerPath(doc_id, annotator)) ? 1 : 0;
  }
  std::string text = ReadFile(path);
  try {
    return std::stoull(text);
  } catch (const std::exception &) {
    throw Error(ErrorCode::kParseError, "corrupt revision file " + path.string());
  }
}

std::vector<LayerInfo> CorpusStore::ListLayers(std::string_view doc_id) const {
  GetDocumentBytes(doc_id);
  std::vector<LayerInfo> out;
  fs::path dir = root_ / "layers" / std::string(doc_id);
  if (!fs::exists(dir)) return out;
  std::vector<std::string> names;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") {
      names.push_back(entry.path().stem().string());
    }
  }
  std::sort(names.begin(), names.end());
  for (const std::string &name : names) {
    if (!IsSafeId(name)) continue;
    out.push_back({name, Revision(doc_id, name)});
  }
  return out;
}

uint64_t CorpusStore::Revision(std::string_view doc_id,
                               std::string_view annotator) const {
  std::shared_lock lock(KeyMutex(doc_id, annotator));
  return ReadRevision(doc_id, annotator);
}

std::optional<StoredLayer> CorpusStore::GetLayer(
    std::string_view doc_id, std::string_view annotator) const {
  Document doc = GetDocument(doc_id);
  std::shared_lock lock(KeyMutex(doc_id, annotator));
  fs::path path = LayerPath(doc_id, annotator);
  if (!fs::exists(path)) return std::nullopt;
  StoredLayer stored;
  stored.bytes = ReadFile(path);
  stored.layer = LoadLayer(stored.bytes, doc);
  stored.revision = ReadRevision(doc_id, annotator);
  return stored;
}

uint64_t CorpusStore::PutLayer(std::string_view doc_id,
                               std::string_view annotator,
                               std::string_view bytes,
                               uint64_t expected_revision) {
  if (annotator == kGoldName) {
    throw Error(ErrorCode::kDocumentMismatch,
                "'gold' is reserved for the consensus layer");
  }
  Document doc = GetDocument(doc_id);
  AnnotationLayer layer = ParseLayer(bytes);
  if (layer.document_id() != doc_id) {
    throw Error(ErrorCode::kDocumentMismatch,
                "layer names document '" + layer.document_id() + "'");
  }
  if (layer.annotator() != annotator) {
    throw Error(ErrorCode::kDocumentMismatch,
                "layer names annotator '" + layer.annotator() + "'");
  }
  std::vector<Violation> violations = Validate(layer, doc);
  if (!violations.empty()) throw LayerRejected(std::move(violations));

  std::unique_lock lock(KeyMutex(doc_id, annotator));
  uint64_t current = ReadRevision(doc_id, annotator);
  if (current != expected_revision) {
    throw Error(ErrorCode::kConflict,
                "layer is at revision " + std::to_string(current) +
                    ", request was based on " + std::to_string(expected_revision));
  }
  std::error_code ec;
  fs::create_directories(LayerPath(doc_id, annotator).parent_path(), ec);
  WriteFileAtomic(LayerPath(doc_id, annotator), SerializeLayer(layer));
  WriteFileAtomic(RevisionPath(doc_id, annotator),
                  std::to_string(current + 1) + "\n");
  return current + 1;
}

AnnotationLayer CorpusStore::GetNamedLayer(std::string_view doc_id,
                                           std::string_view name) const {
  if (name == kGoldName) {
    auto bytes = GetGoldBytes(doc_id);
    if (!bytes) {
      throw Error(ErrorCode::kNotFound,
                  "no gold layer for '" + std::string(doc_id) + "'");
    }
    return LoadLayer(*bytes, GetDocument(doc_id));
  }
  auto stored = GetLayer(doc_id, name);
  if (!stored) {
    throw Error(ErrorCode::kNotFound, "no layer '" + std::string(name) +
                                          "' for '" + std::string(doc_id) + "'");
  }
  return std::move(stored->layer);
}

std::optional<std::string> CorpusStore::GetGoldBytes(
    std::string_view doc_id) const {
  GetDocumentBytes(doc_id);
  std::shared_lock lock(KeyMutex(doc_id, kGoldName));
  fs::path path = GoldPath(doc_id);
  if (!fs::exists(path)) return std::nullopt;
  return ReadFile(path);
}

std::string CorpusStore::CreateGold(std::string_view doc_id,
                                    std::string_view annotator_a,
                                    std::string_view annotator_b,
                                    std::string_view resolution_bytes) {
  Document doc = GetDocument(doc_id);
  AnnotationLayer a = GetNamedLayer(doc_id, annotator_a);
  AnnotationLayer b = GetNamedLayer(doc_id, annotator_b);
  GoldLayer gold = Merge(a, b, ParseResolutions(resolution_bytes), doc);
  std::string bytes = SerializeGold(gold);
  std::unique_lock lock(KeyMutex(doc_id, kGoldName));
  WriteFileAtomic(GoldPath(doc_id), bytes);
  return bytes;
}

std::string CorpusStore::RenderDiff(std::string_view doc_id,
                                    std::string_view annotator_a,
                                    std::string_view annotator_b,
                                    OutputFormat format) const {
  Document doc = GetDocument(doc_id);
  return RenderDiffReport(GetNamedLayer(doc_id, annotator_a),
                          GetNamedLayer(doc_id, annotator_b), doc, format);
}

std::string CorpusStore::RenderReport(std::string_view doc_id,
                                      std::string_view layer_name,
                                      OutputFormat format) const {
  Document doc = GetDocument(doc_id);
  return argannot::RenderReport(
      FullReport(doc, GetNamedLayer(doc_id, layer_name)), format);
}

std::vector<ParagraphProgress> CorpusStore::Progress(
    std::string_view doc_id, std::string_view annotator) const {
  Document doc = GetDocument(doc_id);
  std::optional<AnnotationLayer> layer;
  if (annotator == kGoldName) {
    if (GetGoldBytes(doc_id)) layer = GetNamedLayer(doc_id, annotator);
  } else if (auto stored = GetLayer(doc_id, annotator)) {
    layer = std::move(stored->layer);
  }
  std::vector<ParagraphProgress> out;
  for (const Paragraph &paragraph : doc.paragraphs()) {
    ParagraphProgress progress{paragraph.index, 0, paragraph.segments.size()};
    if (layer) {
      for (const Segment &segment : paragraph.segments) {
        if (layer->IsReviewed(segment.id)) ++progress.reviewed;
      }
    }
    out.push_back(progress);
  }
  return out;
}

}  // namespace argannot
