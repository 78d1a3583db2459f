#include "argannot/annotation.h"

#include <algorithm>
#include <set>

#include "argannot/error.h"
#include "argannot/text.h"
#include "graph.h"
#include "json.hpp"

namespace argannot {

using json = nlohmann::ordered_json;

std::string EdgeLocation(std::string_view src, std::string_view tgt) {
  std::string location(src);
  location += "->";
  location += tgt;
  return location;
}

AnnotationLayer::AnnotationLayer(std::string document_id, std::string annotator,
                                 std::string scheme_version)
    : document_id_(std::move(document_id)),
      annotator_(std::move(annotator)),
      scheme_version_(std::move(scheme_version)) {}

const LabelSet *AnnotationLayer::Labels(std::string_view segment_id) const {
  auto it = labels_.find(segment_id);
  return it == labels_.end() ? nullptr : &it->second;
}

bool AnnotationLayer::IsClaim(std::string_view segment_id) const {
  const LabelSet *labels = Labels(segment_id);
  return labels != nullptr && labels->arg == ArgLabel::kClaim;
}

std::optional<std::string> AnnotationLayer::ElaborationTarget(
    std::string_view src) const {
  for (const ElaborationEdge &edge : elaborations_) {
    if (edge.src == src) return edge.tgt;
  }
  return std::nullopt;
}

const ArgRelation *AnnotationLayer::FindRelation(std::string_view src,
                                                 std::string_view tgt) const {
  for (const ArgRelation &relation : relations_) {
    if (relation.src == src && relation.tgt == tgt) return &relation;
  }
  return nullptr;
}

std::vector<ArgRelation> AnnotationLayer::RemoveRelationsTouching(
    std::string_view segment_id) {
  std::vector<ArgRelation> removed;
  std::erase_if(relations_, [&](const ArgRelation &relation) {
    if (relation.src == segment_id || relation.tgt == segment_id) {
      removed.push_back(relation);
      return true;
    }
    return false;
  });
  return removed;
}

SetLabelsResult AnnotationLayer::SetLabels(const Document &doc,
                                           std::string_view segment_id,
                                           const LabelSet &labels) {
  doc.Get(segment_id);
  SetLabelsResult result;
  const LabelSet *previous = Labels(segment_id);
  if (previous != nullptr && previous->arg == ArgLabel::kClaim &&
      labels.arg != ArgLabel::kClaim) {
    result.removed_relations = RemoveRelationsTouching(segment_id);
  }
  auto target = ElaborationTarget(segment_id);
  if (labels.rhet == RhetLabel::kNone && target) {
    result.removed_elaboration = ElaborationEdge{std::string(segment_id), *target};
    RemoveElaboration(segment_id);
  }
  result.elaboration_pending =
      labels.rhet == RhetLabel::kElaboration && !target;
  labels_.insert_or_assign(std::string(segment_id), labels);
  return result;
}

void AnnotationLayer::ClearLabels(const Document &doc,
                                  std::string_view segment_id) {
  doc.Get(segment_id);
  RemoveRelationsTouching(segment_id);
  std::vector<std::string> orphaned;
  std::erase_if(elaborations_, [&](const ElaborationEdge &edge) {
    if (edge.tgt == segment_id && edge.src != segment_id) {
      orphaned.push_back(edge.src);
    }
    return edge.src == segment_id || edge.tgt == segment_id;
  });
  // Sources that elaborated this segment lose their Elaboration label with
  // the edge.
  for (const std::string &id : orphaned) {
    auto source = labels_.find(id);
    if (source != labels_.end()) source->second.rhet = RhetLabel::kNone;
  }
  auto it = labels_.find(segment_id);
  if (it != labels_.end()) labels_.erase(it);
}

void AnnotationLayer::AddRelation(const Document &doc, std::string_view src,
                                  std::string_view tgt, RelationKind kind) {
  SegmentPosition from = doc.PositionOf(src);
  SegmentPosition to = doc.PositionOf(tgt);
  std::string location = EdgeLocation(src, tgt);
  if (src == tgt) {
    throw Error(ErrorCode::kSelfLoop, location + ": a claim cannot relate to itself");
  }
  if (from.paragraph != to.paragraph) {
    throw Error(ErrorCode::kCrossParagraph,
                location + ": relations must stay within one paragraph");
  }
  for (std::string_view end : {src, tgt}) {
    if (!IsClaim(end)) {
      throw Error(ErrorCode::kEndpointNotClaim,
                  location + ": " + std::string(end) + " is not a Claim");
    }
  }
  if (FindRelation(src, tgt) != nullptr) {
    throw Error(ErrorCode::kDuplicatePair,
                location + ": the pair already carries a relation");
  }
  RawAddRelation({std::string(src), std::string(tgt), kind});
}

bool AnnotationLayer::RemoveRelation(std::string_view src,
                                     std::string_view tgt) {
  return std::erase_if(relations_, [&](const ArgRelation &relation) {
           return relation.src == src && relation.tgt == tgt;
         }) > 0;
}

void AnnotationLayer::AddElaboration(const Document &doc, std::string_view src,
                                     std::string_view tgt) {
  SegmentPosition from = doc.PositionOf(src);
  SegmentPosition to = doc.PositionOf(tgt);
  std::string location = EdgeLocation(src, tgt);
  if (from.paragraph != to.paragraph) {
    throw Error(ErrorCode::kCrossParagraph,
                location + ": elaboration must stay within one paragraph");
  }
  if (to.ordinal >= from.ordinal) {
    throw Error(ErrorCode::kTargetNotPrior,
                location + ": the elaborated segment must come first");
  }
  if (ElaborationTarget(src)) {
    throw Error(ErrorCode::kDuplicateOutgoing,
                location + ": " + std::string(src) +
                    " already elaborates another segment");
  }
  RawAddElaboration({std::string(src), std::string(tgt)});
  auto it = labels_.find(src);
  if (it == labels_.end()) {
    labels_.emplace(std::string(src),
                    LabelSet{ArgLabel::kNone, RhetLabel::kElaboration,
                             DomainLabel::kNone});
  } else {
    it->second.rhet = RhetLabel::kElaboration;
  }
}

bool AnnotationLayer::RemoveElaboration(std::string_view src) {
  bool removed = std::erase_if(elaborations_, [&](const ElaborationEdge &edge) {
                   return edge.src == src;
                 }) > 0;
  auto it = labels_.find(src);
  if (removed && it != labels_.end()) it->second.rhet = RhetLabel::kNone;
  return removed;
}

void AnnotationLayer::RawSetLabels(std::string segment_id,
                                   const LabelSet &labels) {
  labels_.insert_or_assign(std::move(segment_id), labels);
}

void AnnotationLayer::RawAddRelation(ArgRelation relation) {
  auto at = std::upper_bound(relations_.begin(), relations_.end(), relation);
  relations_.insert(at, std::move(relation));
}

void AnnotationLayer::RawAddElaboration(ElaborationEdge edge) {
  auto at = std::upper_bound(elaborations_.begin(), elaborations_.end(), edge);
  elaborations_.insert(at, std::move(edge));
}

std::string_view ViolationCodeName(ViolationCode code) {
  switch (code) {
    case ViolationCode::kDocumentMismatch: return "DocumentMismatch";
    case ViolationCode::kUnknownSegment: return "UnknownSegment";
    case ViolationCode::kSelfLoop: return "SelfLoop";
    case ViolationCode::kCrossParagraph: return "CrossParagraph";
    case ViolationCode::kEndpointNotClaim: return "EndpointNotClaim";
    case ViolationCode::kDuplicatePair: return "DuplicatePair";
    case ViolationCode::kTargetNotPrior: return "TargetNotPrior";
    case ViolationCode::kDuplicateOutgoing: return "DuplicateOutgoing";
    case ViolationCode::kDanglingElaboration: return "DanglingElaboration";
    case ViolationCode::kUnlabeledElaboration: return "UnlabeledElaboration";
  }
  return "Unknown";
}

std::string FormatViolation(const Violation &violation) {
  return std::string(ViolationCodeName(violation.code)) + " " +
         violation.location + ": " + violation.message;
}

std::vector<Violation> Validate(const AnnotationLayer &layer,
                                const Document &doc) {
  std::vector<Violation> out;
  auto report = [&](ViolationCode code, std::string location,
                    std::string message) {
    out.push_back({code, std::move(location), std::move(message)});
  };
  if (layer.document_id() != doc.id()) {
    report(ViolationCode::kDocumentMismatch, layer.document_id(),
           "layer belongs to '" + layer.document_id() + "', not '" + doc.id() +
               "'");
  }

  for (const auto &[id, labels] : layer.labels()) {
    if (doc.Find(id) == nullptr) {
      report(ViolationCode::kUnknownSegment, id, "no such segment");
      continue;
    }
    if (labels.rhet == RhetLabel::kElaboration && !layer.ElaborationTarget(id)) {
      report(ViolationCode::kDanglingElaboration, id,
             "labelled Elaboration but elaborates nothing");
    }
  }

  std::set<std::string, std::less<>> seen_sources;
  for (const ElaborationEdge &edge : layer.elaborations()) {
    std::string location = EdgeLocation(edge.src, edge.tgt);
    auto from = doc.Locate(edge.src);
    auto to = doc.Locate(edge.tgt);
    if (!from || !to) {
      report(ViolationCode::kUnknownSegment, location,
             "elaboration refers to " + (from ? edge.tgt : edge.src) +
                 ", which is not a segment");
      continue;
    }
    if (edge.src == edge.tgt) {
      report(ViolationCode::kSelfLoop, location, "segment elaborates itself");
    } else if (from->paragraph != to->paragraph) {
      report(ViolationCode::kCrossParagraph, location,
             "elaboration crosses a paragraph boundary");
    } else if (to->ordinal > from->ordinal) {
      report(ViolationCode::kTargetNotPrior, location,
             "elaborated segment comes after its elaboration");
    }
    if (!seen_sources.insert(edge.src).second) {
      report(ViolationCode::kDuplicateOutgoing, location,
             edge.src + " has more than one outgoing elaboration");
    }
    const LabelSet *labels = layer.Labels(edge.src);
    if (labels == nullptr || labels->rhet != RhetLabel::kElaboration) {
      report(ViolationCode::kUnlabeledElaboration, location,
             edge.src + " has an elaboration edge but is not labelled "
                        "Elaboration");
    }
  }

  const ArgRelation *previous = nullptr;
  for (const ArgRelation &relation : layer.relations()) {
    std::string location = EdgeLocation(relation.src, relation.tgt);
    bool duplicate = previous != nullptr && previous->src == relation.src &&
                     previous->tgt == relation.tgt;
    previous = &relation;
    auto from = doc.Locate(relation.src);
    auto to = doc.Locate(relation.tgt);
    if (!from || !to) {
      report(ViolationCode::kUnknownSegment, location,
             "relation refers to " + (from ? relation.tgt : relation.src) +
                 ", which is not a segment");
      continue;
    }
    if (relation.src == relation.tgt) {
      report(ViolationCode::kSelfLoop, location, "claim relates to itself");
    } else if (from->paragraph != to->paragraph) {
      report(ViolationCode::kCrossParagraph, location,
             "relation crosses a paragraph boundary");
    }
    for (const std::string *end : {&relation.src, &relation.tgt}) {
      if (!layer.IsClaim(*end)) {
        report(ViolationCode::kEndpointNotClaim, location,
               *end + " is not a Claim");
      }
      if (relation.src == relation.tgt) break;
    }
    if (duplicate) {
      report(ViolationCode::kDuplicatePair, location,
             "more than one relation on the same ordered pair");
    }
  }
  return out;
}

std::string_view LintCodeName(LintCode code) {
  switch (code) {
    case LintCode::kClaimWithoutDomain: return "ClaimWithoutDomain";
    case LintCode::kNonIRClaim: return "NonIRClaim";
    case LintCode::kSourceWithoutDomain: return "SourceWithoutDomain";
    case LintCode::kPossibleMissedStructure: return "PossibleMissedStructure";
    case LintCode::kRelationCycle: return "RelationCycle";
  }
  return "Unknown";
}

std::string FormatLintFinding(const LintFinding &finding) {
  return "warning " + std::string(LintCodeName(finding.code)) + " " +
         finding.location + ": " + finding.message;
}

namespace {

std::vector<std::vector<std::string>> RelationCycles(
    const AnnotationLayer &layer) {
  internal::Digraph graph;
  for (const ArgRelation &relation : layer.relations()) {
    graph[relation.src].push_back(relation.tgt);
  }
  std::vector<std::vector<std::string>> cycles;
  for (auto &component : internal::StronglyConnectedComponents(graph)) {
    if (component.size() > 1) cycles.push_back(std::move(component));
  }
  return cycles;
}

}  // namespace

std::vector<LintFinding> Lint(const AnnotationLayer &layer,
                              const Document &doc) {
  std::vector<LintFinding> out;
  std::set<std::string> sources;
  for (const ArgRelation &relation : layer.relations()) {
    sources.insert(relation.src);
  }
  for (const Segment *segment : doc.segments()) {
    const LabelSet *labels = layer.Labels(segment->id);
    if (labels == nullptr || labels->arg != ArgLabel::kClaim) continue;
    if (labels->domain == DomainLabel::kNone) {
      out.push_back({LintCode::kClaimWithoutDomain, segment->id,
                     "Claim has no domain category"});
      if (sources.count(segment->id)) {
        out.push_back({LintCode::kSourceWithoutDomain, segment->id,
                       "supporting/attacking Claim has no domain category"});
      }
    } else if (labels->domain == DomainLabel::kOtherDomain) {
      out.push_back({LintCode::kNonIRClaim, segment->id,
                     "Claim is outside the IR domain"});
    }
  }

  for (const Paragraph &paragraph : doc.paragraphs()) {
    size_t claims = 0;
    bool has_relation = false;
    bool has_elaboration = false;
    for (const Segment &segment : paragraph.segments) {
      if (layer.IsClaim(segment.id)) ++claims;
      if (sources.count(segment.id)) has_relation = true;
      if (layer.ElaborationTarget(segment.id)) has_elaboration = true;
    }
    if (has_relation && !has_elaboration && claims > 5) {
      out.push_back({LintCode::kPossibleMissedStructure,
                     "paragraph " + std::to_string(paragraph.index),
                     std::to_string(claims) +
                         " Claims with relations but no elaborations"});
    }
  }

  for (const auto &cycle : RelationCycles(layer)) {
    std::string members;
    for (const std::string &id : cycle) {
      if (!members.empty()) members += ",";
      members += id;
    }
    out.push_back({LintCode::kRelationCycle, members,
                   "support/attack relations form a cycle"});
  }
  return out;
}

std::string SerializeLayer(const AnnotationLayer &layer) {
  json root;
  root["document_id"] = layer.document_id();
  root["annotator"] = layer.annotator();
  root["scheme_version"] = layer.scheme_version();
  json segments = json::object();
  for (const auto &[id, labels] : layer.labels()) {
    json entry;
    entry["arg"] = Render(labels.arg);
    entry["rhet"] = Render(labels.rhet);
    entry["domain"] = Render(labels.domain);
    segments[id] = std::move(entry);
  }
  root["segments"] = std::move(segments);
  json elaborations = json::array();
  for (const ElaborationEdge &edge : layer.elaborations()) {
    json entry;
    entry["src"] = edge.src;
    entry["tgt"] = edge.tgt;
    elaborations.push_back(std::move(entry));
  }
  root["elaborations"] = std::move(elaborations);
  json relations = json::array();
  for (const ArgRelation &relation : layer.relations()) {
    json entry;
    entry["src"] = relation.src;
    entry["tgt"] = relation.tgt;
    entry["kind"] = Render(relation.kind);
    relations.push_back(std::move(entry));
  }
  root["relations"] = std::move(relations);
  return root.dump(2) + "\n";
}

std::string SaveLayer(const AnnotationLayer &layer, const Document &doc) {
  std::vector<Violation> violations = Validate(layer, doc);
  if (!violations.empty()) {
    std::string message = std::to_string(violations.size()) + " violation(s)";
    for (const Violation &violation : violations) {
      message += "\n" + FormatViolation(violation);
    }
    throw Error(ErrorCode::kValidationError, message);
  }
  return SerializeLayer(layer);
}

AnnotationLayer ParseLayer(std::string_view bytes) {
  if (HasUtf8Bom(bytes)) {
    throw Error(ErrorCode::kInvalidEncoding,
                "layer file starts with a byte order mark");
  }
  try {
    json root = json::parse(bytes);
    std::string version = root.at("scheme_version").get<std::string>();
    if (version != kSchemeVersion) {
      throw Error(ErrorCode::kSchemaVersionMismatch,
                  "layer uses scheme " + version + ", expected " +
                      std::string(kSchemeVersion));
    }
    AnnotationLayer layer(root.at("document_id").get<std::string>(),
                          root.at("annotator").get<std::string>(), version);
    for (const auto &[id, entry] : root.at("segments").items()) {
      LabelSet labels;
      labels.arg = ParseArgLabel(entry.at("arg").get<std::string>());
      labels.rhet = ParseRhetLabel(entry.at("rhet").get<std::string>());
      labels.domain = ParseDomainLabel(entry.at("domain").get<std::string>());
      layer.RawSetLabels(id, labels);
    }
    for (const json &entry : root.at("elaborations")) {
      layer.RawAddElaboration({entry.at("src").get<std::string>(),
                               entry.at("tgt").get<std::string>()});
    }
    for (const json &entry : root.at("relations")) {
      layer.RawAddRelation(
          {entry.at("src").get<std::string>(), entry.at("tgt").get<std::string>(),
           ParseRelationKind(entry.at("kind").get<std::string>())});
    }
    return layer;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kParseError,
                std::string("malformed layer file: ") + e.what());
  }
}

AnnotationLayer LoadLayer(std::string_view bytes, const Document &doc) {
  AnnotationLayer layer = ParseLayer(bytes);
  if (layer.document_id() != doc.id()) {
    throw Error(ErrorCode::kDocumentMismatch,
                "layer belongs to '" + layer.document_id() + "', not '" +
                    doc.id() + "'");
  }
  auto check = [&](const std::string &id, const std::string &where) {
    if (doc.Find(id) == nullptr) {
      throw Error(ErrorCode::kReferentialIntegrity,
                  where + " references unknown segment '" + id + "'");
    }
  };
  for (const auto &[id, labels] : layer.labels()) check(id, "segments");
  for (const ElaborationEdge &edge : layer.elaborations()) {
    check(edge.src, "elaborations");
    check(edge.tgt, "elaborations");
  }
  for (const ArgRelation &relation : layer.relations()) {
    check(relation.src, "relations");
    check(relation.tgt, "relations");
  }
  return layer;
}

}  // namespace argannot
