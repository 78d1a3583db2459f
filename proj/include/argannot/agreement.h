#ifndef ARGANNOT_AGREEMENT_H_
#define ARGANNOT_AGREEMENT_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argannot/annotation.h"
#include "argannot/corpus.h"
#include "argannot/format.h"

namespace argannot {

enum class DisagreementKind {
  kArgLabel,
  kRhetLabel,
  kDomainMain,
  kDomainSub,
  kRelationPresence,
  kRelationKind,
  kElaborationPresence,
};

inline constexpr size_t kNumDisagreementKinds = 7;

std::string_view Render(DisagreementKind kind);
DisagreementKind ParseDisagreementKind(std::string_view text);

// Placeholder readings used where a label or edge is missing on one side.
inline constexpr std::string_view kUnreviewed = "unreviewed";
inline constexpr std::string_view kAbsent = "absent";
inline constexpr std::string_view kPresent = "present";

// One divergence between layers a and b. location is a segment id for label
// kinds and "src->tgt" for edge kinds. Domain readings are leaf paths.
struct Disagreement {
  DisagreementKind kind;
  std::string location;
  std::string value_a;
  std::string value_b;

  bool operator==(const Disagreement &) const = default;
};

// Complete diff in a fixed order: per segment in document order (ArgLabel,
// RhetLabel, DomainMain or DomainSub), then elaboration edges, then relation
// pairs, edges ordered by source then target position. A segment reviewed
// by one side only yields ArgLabel and DomainMain entries against
// "unreviewed". Throws kDocumentMismatch unless both layers describe doc
// under the same scheme version.
std::vector<Disagreement> DiffLayers(const AnnotationLayer &a,
                                     const AnnotationLayer &b,
                                     const Document &doc);

struct DisagreementSummary {
  std::array<size_t, kNumDisagreementKinds> counts{};
  size_t total = 0;
  size_t n_segments = 0;  // denominator of the domain rate
  size_t domain_disagreements = 0;  // DomainMain + DomainSub
  double domain_rate_pct = 0.0;     // one decimal

  size_t count(DisagreementKind kind) const {
    return counts[static_cast<size_t>(kind)];
  }
};

DisagreementSummary SummarizeDisagreements(
    const std::vector<Disagreement> &diffs, const Document &doc);

enum class KappaLevel { kArg, kDomainMain, kDomainSub };

std::string_view Render(KappaLevel level);

struct KappaResult {
  double kappa = 0.0;
  double observed = 0.0;  // p_o
  double expected = 0.0;  // p_e
  size_t n_items = 0;
  size_t n_excluded = 0;  // reviewed by exactly one annotator
};

// Cohen's kappa from a square confusion matrix (rows a, columns b). When
// chance agreement is 1 (both raters constant on the same category) the
// statistic is taken to be 1. Throws kNoOverlap for an all-zero matrix.
KappaResult KappaFromConfusion(const std::vector<std::vector<size_t>> &matrix);

// Kappa over segments reviewed by both annotators, using the closed
// category set of the level.
KappaResult CohensKappa(const AnnotationLayer &a, const AnnotationLayer &b,
                        KappaLevel level);

enum class ResolutionChoice { kA, kB, kCustom };

std::string_view Render(ResolutionChoice choice);

struct Resolution {
  DisagreementKind kind;
  std::string location;
  ResolutionChoice choice = ResolutionChoice::kA;
  std::string value;  // Custom only: a legal label, domain leaf or relation kind
  std::string note;

  bool operator==(const Resolution &) const = default;
};

// Resolution file: {"scheme_version", "resolutions": [{kind, location,
// choice, value, note}]}; a bare array is accepted too.
std::vector<Resolution> ParseResolutions(std::string_view bytes);
std::string SerializeResolutions(const std::vector<Resolution> &resolutions);

// Consensus layer plus the resolution behind every diff location it
// settled, in diff order.
struct GoldLayer {
  AnnotationLayer layer;
  std::vector<Resolution> provenance;

  bool operator==(const GoldLayer &) const = default;
};

// Agreed entries of a and b plus the resolved ones. Throws
// kUncoveredDisagreement naming every unresolved location, and
// kInvalidResult for resolutions that match no disagreement, illegal custom
// values, or a result that fails Validate().
GoldLayer Merge(const AnnotationLayer &a, const AnnotationLayer &b,
                const std::vector<Resolution> &resolutions, const Document &doc,
                std::string gold_annotator = "gold");

// Layer file with an extra "provenance" array. ParseLayer/LoadLayer read
// gold files as plain layers.
std::string SerializeGold(const GoldLayer &gold);
GoldLayer LoadGold(std::string_view bytes, const Document &doc);

// Diff, summary and kappa of two layers rendered for CLI and HTTP alike.
std::string RenderDiffReport(const AnnotationLayer &a, const AnnotationLayer &b,
                             const Document &doc, OutputFormat format);

}  // namespace argannot

#endif  // ARGANNOT_AGREEMENT_H_
