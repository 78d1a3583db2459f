#ifndef ARGANNOT_STORE_H_
#define ARGANNOT_STORE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "argannot/agreement.h"
#include "argannot/analysis.h"
#include "argannot/annotation.h"
#include "argannot/corpus.h"
#include "argannot/error.h"
#include "argannot/format.h"

namespace argannot {

// A layer write refused because the layer does not validate. Carries the
// findings exactly as Validate() produced them.
class LayerRejected : public Error {
 public:
  explicit LayerRejected(std::vector<Violation> violations);

  const std::vector<Violation> &violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

struct DocumentInfo {
  std::string id;
  std::string title;
  size_t n_paragraphs = 0;
  size_t n_segments = 0;
};

struct LayerInfo {
  std::string annotator;
  uint64_t revision = 0;
};

struct StoredLayer {
  AnnotationLayer layer;
  std::string bytes;
  uint64_t revision = 0;
};

struct ParagraphProgress {
  size_t index = 0;
  size_t reviewed = 0;
  size_t total = 0;
};

// The name under which the consensus layer is addressed.
inline constexpr std::string_view kGoldName = "gold";

// Reads a whole file; throws kIoError.
std::string ReadFile(const std::filesystem::path &path);

// Writes to a temporary sibling and renames it over the target, so readers
// see either the old or the new content.
void WriteFileAtomic(const std::filesystem::path &path, std::string_view bytes);

// Flat-file corpus:
//   <root>/documents/<doc>.json
//   <root>/layers/<doc>/<annotator>.json  (+ <annotator>.rev)
//   <root>/gold/<doc>.json
// Reads may run concurrently; writes to one (document, annotator) key are
// serialized. Every stored layer validates against its document.
class CorpusStore {
 public:
  explicit CorpusStore(std::filesystem::path root);

  const std::filesystem::path &root() const { return root_; }

  std::vector<DocumentInfo> ListDocuments() const;
  bool HasDocument(std::string_view doc_id) const;
  Document GetDocument(std::string_view doc_id) const;
  std::string GetDocumentBytes(std::string_view doc_id) const;
  void PutDocument(const Document &doc);

  std::vector<LayerInfo> ListLayers(std::string_view doc_id) const;
  std::optional<StoredLayer> GetLayer(std::string_view doc_id,
                                      std::string_view annotator) const;
  uint64_t Revision(std::string_view doc_id, std::string_view annotator) const;

  // Replaces (or creates, at revision 0) a layer. Throws kConflict when
  // expected_revision is stale, LayerRejected when the layer is invalid,
  // kDocumentMismatch when the file names another document or annotator.
  // Returns the new revision.
  uint64_t PutLayer(std::string_view doc_id, std::string_view annotator,
                    std::string_view bytes, uint64_t expected_revision);

  // Layer by name, where "gold" selects the consensus layer.
  AnnotationLayer GetNamedLayer(std::string_view doc_id,
                                std::string_view name) const;

  std::optional<std::string> GetGoldBytes(std::string_view doc_id) const;

  // Merges two stored layers with the given resolution file and stores the
  // result as the document's gold layer. Returns the gold file.
  std::string CreateGold(std::string_view doc_id, std::string_view annotator_a,
                         std::string_view annotator_b,
                         std::string_view resolution_bytes);

  std::string RenderDiff(std::string_view doc_id, std::string_view annotator_a,
                         std::string_view annotator_b,
                         OutputFormat format) const;
  std::string RenderReport(std::string_view doc_id, std::string_view layer_name,
                           OutputFormat format) const;

  std::vector<ParagraphProgress> Progress(std::string_view doc_id,
                                          std::string_view annotator) const;

  // Ids usable as file names: [A-Za-z0-9._-], not starting with '.'.
  static bool IsSafeId(std::string_view id);

 private:
  std::filesystem::path DocumentPath(std::string_view doc_id) const;
  std::filesystem::path LayerPath(std::string_view doc_id,
                                  std::string_view annotator) const;
  std::filesystem::path RevisionPath(std::string_view doc_id,
                                     std::string_view annotator) const;
  std::filesystem::path GoldPath(std::string_view doc_id) const;
  std::shared_mutex &KeyMutex(std::string_view doc_id,
                              std::string_view annotator) const;
  uint64_t ReadRevision(std::string_view doc_id,
                        std::string_view annotator) const;

  std::filesystem::path root_;
  mutable std::mutex keys_mutex_;
  mutable std::map<std::string, std::unique_ptr<std::shared_mutex>> key_mutexes_;
};

}  // namespace argannot

#endif  // ARGANNOT_STORE_H_
