#ifndef ARGANNOT_ANNOTATION_H_
#define ARGANNOT_ANNOTATION_H_

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argannot/corpus.h"
#include "argannot/scheme.h"

namespace argannot {

// src elaborates tgt; tgt precedes src in the same paragraph.
struct ElaborationEdge {
  std::string src;
  std::string tgt;

  auto operator<=>(const ElaborationEdge &) const = default;
};

// src supports or attacks tgt.
struct ArgRelation {
  std::string src;
  std::string tgt;
  RelationKind kind = RelationKind::kSupport;

  auto operator<=>(const ArgRelation &) const = default;
};

// "src->tgt", the location string used in findings and reports.
std::string EdgeLocation(std::string_view src, std::string_view tgt);

struct SetLabelsResult {
  std::vector<ArgRelation> removed_relations;
  std::optional<ElaborationEdge> removed_elaboration;
  // rhet was set to Elaboration but the segment has no outgoing edge yet;
  // the layer fails validation until AddElaboration is called.
  bool elaboration_pending = false;
};

// One annotator's stand-off annotation of one document. Segments absent
// from labels() are unreviewed. Edge lists are kept sorted, so two layers
// with the same content compare equal regardless of edit order.
//
// The checked operations keep the layer valid against its document. The
// Raw* inserters skip every check; they exist for loaders and for tests that
// need to build broken layers.
class AnnotationLayer {
 public:
  AnnotationLayer() = default;
  AnnotationLayer(std::string document_id, std::string annotator,
                  std::string scheme_version = std::string(kSchemeVersion));

  const std::string &document_id() const { return document_id_; }
  const std::string &annotator() const { return annotator_; }
  const std::string &scheme_version() const { return scheme_version_; }
  void set_annotator(std::string annotator) { annotator_ = std::move(annotator); }

  const std::map<std::string, LabelSet, std::less<>> &labels() const {
    return labels_;
  }
  const std::vector<ElaborationEdge> &elaborations() const {
    return elaborations_;
  }
  const std::vector<ArgRelation> &relations() const { return relations_; }

  const LabelSet *Labels(std::string_view segment_id) const;
  bool IsClaim(std::string_view segment_id) const;
  bool IsReviewed(std::string_view segment_id) const {
    return Labels(segment_id) != nullptr;
  }
  std::optional<std::string> ElaborationTarget(std::string_view src) const;
  const ArgRelation *FindRelation(std::string_view src,
                                  std::string_view tgt) const;

  SetLabelsResult SetLabels(const Document &doc, std::string_view segment_id,
                            const LabelSet &labels);

  // Marks a segment unreviewed again, dropping its labels and every edge
  // that touches it.
  void ClearLabels(const Document &doc, std::string_view segment_id);

  void AddRelation(const Document &doc, std::string_view src,
                   std::string_view tgt, RelationKind kind);
  bool RemoveRelation(std::string_view src, std::string_view tgt);

  void AddElaboration(const Document &doc, std::string_view src,
                      std::string_view tgt);
  bool RemoveElaboration(std::string_view src);

  void RawSetLabels(std::string segment_id, const LabelSet &labels);
  void RawAddRelation(ArgRelation relation);
  void RawAddElaboration(ElaborationEdge edge);

  bool operator==(const AnnotationLayer &) const = default;

 private:
  std::vector<ArgRelation> RemoveRelationsTouching(std::string_view segment_id);

  std::string document_id_;
  std::string annotator_;
  std::string scheme_version_ = std::string(kSchemeVersion);
  std::map<std::string, LabelSet, std::less<>> labels_;
  std::vector<ElaborationEdge> elaborations_;
  std::vector<ArgRelation> relations_;
};

enum class ViolationCode {
  kDocumentMismatch,
  kUnknownSegment,
  kSelfLoop,
  kCrossParagraph,
  kEndpointNotClaim,
  kDuplicatePair,
  kTargetNotPrior,
  kDuplicateOutgoing,
  kDanglingElaboration,
  kUnlabeledElaboration,
};

std::string_view ViolationCodeName(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string location;
  std::string message;

  bool operator==(const Violation &) const = default;
};

// "<Code> <location>: <message>", one line per finding as the CLI prints it.
std::string FormatViolation(const Violation &violation);

// Every structural problem of the layer, in a fixed order: document check,
// then labels by segment id, then elaborations, then relations (both in
// canonical order).
std::vector<Violation> Validate(const AnnotationLayer &layer,
                                const Document &doc);

enum class LintCode {
  kClaimWithoutDomain,
  kNonIRClaim,
  kSourceWithoutDomain,
  kPossibleMissedStructure,
  kRelationCycle,
};

std::string_view LintCodeName(LintCode code);

struct LintFinding {
  LintCode code;
  std::string location;
  std::string message;
};

std::string FormatLintFinding(const LintFinding &finding);

// Advisory warnings; never block saving.
std::vector<LintFinding> Lint(const AnnotationLayer &layer, const Document &doc);

// Canonical layer file. SerializeLayer writes any layer; SaveLayer first
// requires Validate() to be empty and throws kValidationError otherwise.
std::string SerializeLayer(const AnnotationLayer &layer);
std::string SaveLayer(const AnnotationLayer &layer, const Document &doc);

// Parses a layer file without a document (structure and labels only).
AnnotationLayer ParseLayer(std::string_view bytes);

// Parses and checks the scheme version and that every referenced segment
// exists in doc (kReferentialIntegrity).
AnnotationLayer LoadLayer(std::string_view bytes, const Document &doc);

}  // namespace argannot

#endif  // ARGANNOT_ANNOTATION_H_
