#include "argannot/agreement.h"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "argannot/error.h"
#include "json.hpp"

namespace argannot {

using json = nlohmann::ordered_json;

std::string_view Render(DisagreementKind kind) {
  switch (kind) {
    case DisagreementKind::kArgLabel: return "ArgLabel";
    case DisagreementKind::kRhetLabel: return "RhetLabel";
    case DisagreementKind::kDomainMain: return "DomainMain";
    case DisagreementKind::kDomainSub: return "DomainSub";
    case DisagreementKind::kRelationPresence: return "RelationPresence";
    case DisagreementKind::kRelationKind: return "RelationKind";
    case DisagreementKind::kElaborationPresence: return "ElaborationPresence";
  }
  return "";
}

DisagreementKind ParseDisagreementKind(std::string_view text) {
  for (size_t i = 0; i < kNumDisagreementKinds; ++i) {
    auto kind = static_cast<DisagreementKind>(i);
    if (Render(kind) == text) return kind;
  }
  throw Error(ErrorCode::kParseError,
              "unknown disagreement kind '" + std::string(text) + "'");
}

std::string_view Render(KappaLevel level) {
  switch (level) {
    case KappaLevel::kArg: return "arg";
    case KappaLevel::kDomainMain: return "domain_main";
    case KappaLevel::kDomainSub: return "domain_sub";
  }
  return "";
}

std::string_view Render(ResolutionChoice choice) {
  switch (choice) {
    case ResolutionChoice::kA: return "A";
    case ResolutionChoice::kB: return "B";
    case ResolutionChoice::kCustom: return "Custom";
  }
  return "";
}

namespace {

void CheckComparable(const AnnotationLayer &a, const AnnotationLayer &b,
                     const Document &doc) {
  if (a.document_id() != doc.id() || b.document_id() != doc.id()) {
    throw Error(ErrorCode::kDocumentMismatch,
                "layers describe '" + a.document_id() + "' and '" +
                    b.document_id() + "', document is '" + doc.id() + "'");
  }
  if (a.scheme_version() != b.scheme_version()) {
    throw Error(ErrorCode::kDocumentMismatch,
                "layers use scheme versions " + a.scheme_version() + " and " +
                    b.scheme_version());
  }
}

// Sort key for edges: document positions of source and target; ids the
// document does not know sort last, by text.
struct EdgeKey {
  size_t src_ordinal;
  size_t tgt_ordinal;
  std::string src;
  std::string tgt;

  auto operator<=>(const EdgeKey &) const = default;
};

EdgeKey MakeEdgeKey(const Document &doc, const std::string &src,
                    const std::string &tgt) {
  constexpr size_t kUnknown = std::numeric_limits<size_t>::max();
  auto from = doc.Locate(src);
  auto to = doc.Locate(tgt);
  return {from ? from->ordinal : kUnknown, to ? to->ordinal : kUnknown, src, tgt};
}

std::string ArgOrUnreviewed(const LabelSet *labels) {
  return labels ? std::string(Render(labels->arg)) : std::string(kUnreviewed);
}

std::string DomainOrUnreviewed(const LabelSet *labels) {
  return labels ? std::string(Render(labels->domain))
                : std::string(kUnreviewed);
}

}  // namespace

std::vector<Disagreement> DiffLayers(const AnnotationLayer &a,
                                     const AnnotationLayer &b,
                                     const Document &doc) {
  CheckComparable(a, b, doc);
  std::vector<Disagreement> out;
  for (const Segment *segment : doc.segments()) {
    const LabelSet *la = a.Labels(segment->id);
    const LabelSet *lb = b.Labels(segment->id);
    if (la == nullptr && lb == nullptr) continue;
    if (la == nullptr || lb == nullptr) {
      out.push_back({DisagreementKind::kArgLabel, segment->id,
                     ArgOrUnreviewed(la),
                     ArgOrUnreviewed(lb)});
      out.push_back({DisagreementKind::kDomainMain, segment->id,
                     DomainOrUnreviewed(la), DomainOrUnreviewed(lb)});
      continue;
    }
    if (la->arg != lb->arg) {
      out.push_back({DisagreementKind::kArgLabel, segment->id,
                     std::string(Render(la->arg)), std::string(Render(lb->arg))});
    }
    if (la->rhet != lb->rhet) {
      out.push_back({DisagreementKind::kRhetLabel, segment->id,
                     std::string(Render(la->rhet)),
                     std::string(Render(lb->rhet))});
    }
    if (la->domain != lb->domain) {
      DisagreementKind kind = MainCategory(la->domain) == MainCategory(lb->domain)
                                  ? DisagreementKind::kDomainSub
                                  : DisagreementKind::kDomainMain;
      out.push_back({kind, segment->id, std::string(Render(la->domain)),
                     std::string(Render(lb->domain))});
    }
  }

  std::map<EdgeKey, std::pair<bool, bool>> elaborations;
  for (const ElaborationEdge &edge : a.elaborations()) {
    elaborations[MakeEdgeKey(doc, edge.src, edge.tgt)].first = true;
  }
  for (const ElaborationEdge &edge : b.elaborations()) {
    elaborations[MakeEdgeKey(doc, edge.src, edge.tgt)].second = true;
  }
  for (const auto &[key, present] : elaborations) {
    if (present.first == present.second) continue;
    out.push_back({DisagreementKind::kElaborationPresence,
                   EdgeLocation(key.src, key.tgt),
                   std::string(present.first ? kPresent : kAbsent),
                   std::string(present.second ? kPresent : kAbsent)});
  }

  std::map<EdgeKey, std::pair<const ArgRelation *, const ArgRelation *>> pairs;
  for (const ArgRelation &relation : a.relations()) {
    pairs[MakeEdgeKey(doc, relation.src, relation.tgt)].first = &relation;
  }
  for (const ArgRelation &relation : b.relations()) {
    pairs[MakeEdgeKey(doc, relation.src, relation.tgt)].second = &relation;
  }
  for (const auto &[key, sides] : pairs) {
    auto [ra, rb] = sides;
    std::string location = EdgeLocation(key.src, key.tgt);
    if (ra != nullptr && rb != nullptr) {
      if (ra->kind != rb->kind) {
        out.push_back({DisagreementKind::kRelationKind, location,
                       std::string(Render(ra->kind)),
                       std::string(Render(rb->kind))});
      }
    } else {
      out.push_back({DisagreementKind::kRelationPresence, location,
                     ra ? std::string(Render(ra->kind)) : std::string(kAbsent),
                     rb ? std::string(Render(rb->kind)) : std::string(kAbsent)});
    }
  }
  return out;
}

DisagreementSummary SummarizeDisagreements(
    const std::vector<Disagreement> &diffs, const Document &doc) {
  DisagreementSummary summary;
  for (const Disagreement &diff : diffs) {
    ++summary.counts[static_cast<size_t>(diff.kind)];
  }
  summary.total = diffs.size();
  summary.n_segments = doc.num_segments();
  summary.domain_disagreements = summary.count(DisagreementKind::kDomainMain) +
                                 summary.count(DisagreementKind::kDomainSub);
  summary.domain_rate_pct =
      Percent(summary.domain_disagreements, summary.n_segments);
  return summary;
}

KappaResult KappaFromConfusion(const std::vector<std::vector<size_t>> &matrix) {
  const size_t k = matrix.size();
  std::vector<size_t> rows(k, 0), cols(k, 0);
  size_t n = 0, agree = 0;
  for (size_t i = 0; i < k; ++i) {
    if (matrix[i].size() != k) {
      throw Error(ErrorCode::kParseError, "confusion matrix is not square");
    }
    for (size_t j = 0; j < k; ++j) {
      rows[i] += matrix[i][j];
      cols[j] += matrix[i][j];
      n += matrix[i][j];
      if (i == j) agree += matrix[i][j];
    }
  }
  if (n == 0) {
    throw Error(ErrorCode::kNoOverlap, "no items rated by both annotators");
  }
  KappaResult result;
  result.n_items = n;
  const double total = static_cast<double>(n);
  result.observed = agree / total;
  double expected = 0.0;
  for (size_t i = 0; i < k; ++i) {
    expected += (rows[i] / total) * (cols[i] / total);
  }
  result.expected = expected;
  // p_e == 1 exactly when both raters use one and the same category, which
  // also forces p_o == 1.
  bool degenerate = true;
  for (size_t i = 0; i < k; ++i) {
    if (rows[i] != 0 && rows[i] != n) degenerate = false;
    if (rows[i] != cols[i]) degenerate = false;
  }
  result.kappa = degenerate ? 1.0
                            : (result.observed - expected) / (1.0 - expected);
  return result;
}

namespace {

size_t CategoryIndex(const LabelSet &labels, KappaLevel level) {
  switch (level) {
    case KappaLevel::kArg:
      return labels.arg == ArgLabel::kClaim ? 1 : 0;
    case KappaLevel::kDomainMain:
      return static_cast<size_t>(MainCategory(labels.domain));
    case KappaLevel::kDomainSub:
      return static_cast<size_t>(labels.domain);
  }
  return 0;
}

size_t CategoryCount(KappaLevel level) {
  switch (level) {
    case KappaLevel::kArg: return 2;
    case KappaLevel::kDomainMain: return kAllDomainMains.size();
    case KappaLevel::kDomainSub: return kAllDomainLabels.size();
  }
  return 0;
}

}  // namespace

KappaResult CohensKappa(const AnnotationLayer &a, const AnnotationLayer &b,
                        KappaLevel level) {
  const size_t k = CategoryCount(level);
  std::vector<std::vector<size_t>> matrix(k, std::vector<size_t>(k, 0));
  size_t excluded = 0;
  for (const auto &[id, la] : a.labels()) {
    const LabelSet *lb = b.Labels(id);
    if (lb == nullptr) {
      ++excluded;
      continue;
    }
    ++matrix[CategoryIndex(la, level)][CategoryIndex(*lb, level)];
  }
  for (const auto &[id, lb] : b.labels()) {
    if (!a.IsReviewed(id)) ++excluded;
  }
  KappaResult result = KappaFromConfusion(matrix);
  result.n_excluded = excluded;
  return result;
}

std::vector<Resolution> ParseResolutions(std::string_view bytes) {
  try {
    json root = json::parse(bytes);
    const json *list = &root;
    if (root.is_object()) {
      if (root.contains("scheme_version") &&
          root.at("scheme_version").get<std::string>() != kSchemeVersion) {
        throw Error(ErrorCode::kSchemaVersionMismatch,
                    "resolution file uses scheme " +
                        root.at("scheme_version").get<std::string>());
      }
      list = &root.at("resolutions");
    }
    std::vector<Resolution> out;
    for (const json &entry : *list) {
      Resolution resolution;
      resolution.kind = ParseDisagreementKind(entry.at("kind").get<std::string>());
      resolution.location = entry.at("location").get<std::string>();
      std::string choice = entry.at("choice").get<std::string>();
      if (choice == "A") {
        resolution.choice = ResolutionChoice::kA;
      } else if (choice == "B") {
        resolution.choice = ResolutionChoice::kB;
      } else if (choice == "Custom") {
        resolution.choice = ResolutionChoice::kCustom;
        resolution.value = entry.at("value").get<std::string>();
      } else {
        throw Error(ErrorCode::kParseError,
                    "resolution choice must be A, B or Custom, got '" + choice +
                        "'");
      }
      resolution.note = entry.value("note", std::string());
      out.push_back(std::move(resolution));
    }
    return out;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kParseError,
                std::string("malformed resolution file: ") + e.what());
  }
}

namespace {

json ResolutionsJson(const std::vector<Resolution> &resolutions) {
  json list = json::array();
  for (const Resolution &resolution : resolutions) {
    json entry;
    entry["kind"] = Render(resolution.kind);
    entry["location"] = resolution.location;
    entry["choice"] = Render(resolution.choice);
    if (resolution.choice == ResolutionChoice::kCustom) {
      entry["value"] = resolution.value;
    }
    entry["note"] = resolution.note;
    list.push_back(std::move(entry));
  }
  return list;
}

using ResolutionKey = std::pair<DisagreementKind, std::string>;

// Applies resolutions to the readings of one disagreement.
class Resolver {
 public:
  Resolver(const std::vector<Disagreement> &diffs,
           const std::vector<Resolution> &resolutions) {
    for (const Disagreement &diff : diffs) {
      diffs_.emplace(ResolutionKey{diff.kind, diff.location}, &diff);
    }
    for (const Resolution &resolution : resolutions) {
      ResolutionKey key{resolution.kind, resolution.location};
      if (!diffs_.count(key)) {
        throw Error(ErrorCode::kInvalidResult,
                    "resolution for " + std::string(Render(resolution.kind)) +
                        " at " + resolution.location +
                        " matches no disagreement");
      }
      if (!chosen_.emplace(key, &resolution).second) {
        throw Error(ErrorCode::kInvalidResult,
                    "more than one resolution for " +
                        std::string(Render(resolution.kind)) + " at " +
                        resolution.location);
      }
    }
    std::string uncovered;
    size_t missing = 0;
    for (const Disagreement &diff : diffs) {
      if (!chosen_.count({diff.kind, diff.location})) {
        ++missing;
        uncovered += "\n" + std::string(Render(diff.kind)) + " " + diff.location;
      }
    }
    if (missing > 0) {
      throw Error(ErrorCode::kUncoveredDisagreement,
                  std::to_string(missing) + " disagreement(s) without a "
                                            "resolution:" + uncovered);
    }
  }

  // The reading chosen for the disagreement; Custom values are checked
  // with validate_custom.
  template <typename Check>
  std::string Choose(DisagreementKind kind, const std::string &location,
                     Check validate_custom) const {
    const Resolution &resolution = *chosen_.at({kind, location});
    const Disagreement &diff = *diffs_.at({kind, location});
    switch (resolution.choice) {
      case ResolutionChoice::kA: return diff.value_a;
      case ResolutionChoice::kB: return diff.value_b;
      case ResolutionChoice::kCustom:
        try {
          validate_custom(resolution.value);
        } catch (const Error &e) {
          throw Error(ErrorCode::kInvalidResult,
                      "custom value for " + std::string(Render(kind)) + " at " +
                          location + ": " + e.what());
        }
        return resolution.value;
    }
    return diff.value_a;
  }

  std::vector<Resolution> Provenance(const std::vector<Disagreement> &diffs) const {
    std::vector<Resolution> out;
    for (const Disagreement &diff : diffs) {
      out.push_back(*chosen_.at({diff.kind, diff.location}));
    }
    return out;
  }

 private:
  std::map<ResolutionKey, const Disagreement *> diffs_;
  std::map<ResolutionKey, const Resolution *> chosen_;
};

[[noreturn]] void RejectCustom(const std::string &) {
  throw Error(ErrorCode::kInvalidResult, "Custom is not allowed here");
}

std::optional<std::string> Reviewed(const std::string &reading) {
  if (reading == kUnreviewed) return std::nullopt;
  return reading;
}

}  // namespace

GoldLayer Merge(const AnnotationLayer &a, const AnnotationLayer &b,
                const std::vector<Resolution> &resolutions, const Document &doc,
                std::string gold_annotator) {
  std::vector<Disagreement> diffs = DiffLayers(a, b, doc);
  Resolver resolver(diffs, resolutions);
  AnnotationLayer gold(doc.id(), std::move(gold_annotator), a.scheme_version());

  auto arg_check = [](const std::string &v) { ParseArgLabel(v); };
  auto rhet_check = [](const std::string &v) { ParseRhetLabel(v); };
  auto domain_check = [](const std::string &v) { ParseDomainLabel(v); };
  auto kind_check = [](const std::string &v) { ParseRelationKind(v); };

  for (const Segment *segment : doc.segments()) {
    const std::string &id = segment->id;
    const LabelSet *la = a.Labels(id);
    const LabelSet *lb = b.Labels(id);
    if (la == nullptr && lb == nullptr) continue;
    if (la != nullptr && lb != nullptr) {
      LabelSet labels = *la;
      if (la->arg != lb->arg) {
        labels.arg = ParseArgLabel(
            resolver.Choose(DisagreementKind::kArgLabel, id, arg_check));
      }
      if (la->rhet != lb->rhet) {
        labels.rhet = ParseRhetLabel(
            resolver.Choose(DisagreementKind::kRhetLabel, id, rhet_check));
      }
      if (la->domain != lb->domain) {
        DisagreementKind kind = MainCategory(la->domain) == MainCategory(lb->domain)
                                    ? DisagreementKind::kDomainSub
                                    : DisagreementKind::kDomainMain;
        labels.domain = ParseDomainLabel(resolver.Choose(kind, id, domain_check));
      }
      gold.RawSetLabels(id, labels);
      continue;
    }
    const LabelSet &reviewed = la != nullptr ? *la : *lb;
    auto arg = Reviewed(resolver.Choose(DisagreementKind::kArgLabel, id, arg_check));
    auto domain =
        Reviewed(resolver.Choose(DisagreementKind::kDomainMain, id, domain_check));
    if (!arg && !domain) continue;
    if (!arg || !domain) {
      throw Error(ErrorCode::kInvalidResult,
                  id + ": resolved as reviewed at one level and unreviewed at "
                       "the other");
    }
    gold.RawSetLabels(id, {ParseArgLabel(*arg), reviewed.rhet,
                           ParseDomainLabel(*domain)});
  }

  std::set<ElaborationEdge> elaborations(a.elaborations().begin(),
                                         a.elaborations().end());
  elaborations.insert(b.elaborations().begin(), b.elaborations().end());
  for (const ElaborationEdge &edge : elaborations) {
    bool in_a = std::binary_search(a.elaborations().begin(),
                                   a.elaborations().end(), edge);
    bool in_b = std::binary_search(b.elaborations().begin(),
                                   b.elaborations().end(), edge);
    bool keep = in_a && in_b;
    if (in_a != in_b) {
      keep = resolver.Choose(DisagreementKind::kElaborationPresence,
                             EdgeLocation(edge.src, edge.tgt),
                             RejectCustom) == kPresent;
    }
    if (keep) gold.RawAddElaboration(edge);
  }

  std::set<std::pair<std::string, std::string>> pairs;
  for (const ArgRelation &r : a.relations()) pairs.emplace(r.src, r.tgt);
  for (const ArgRelation &r : b.relations()) pairs.emplace(r.src, r.tgt);
  for (const auto &[src, tgt] : pairs) {
    const ArgRelation *ra = a.FindRelation(src, tgt);
    const ArgRelation *rb = b.FindRelation(src, tgt);
    std::string location = EdgeLocation(src, tgt);
    std::string reading;
    if (ra != nullptr && rb != nullptr && ra->kind == rb->kind) {
      reading = std::string(Render(ra->kind));
    } else if (ra != nullptr && rb != nullptr) {
      reading = resolver.Choose(DisagreementKind::kRelationKind, location,
                                kind_check);
    } else {
      reading = resolver.Choose(DisagreementKind::kRelationPresence, location,
                                kind_check);
    }
    if (reading != kAbsent) {
      gold.RawAddRelation({src, tgt, ParseRelationKind(reading)});
    }
  }

  std::vector<Violation> violations = Validate(gold, doc);
  if (!violations.empty()) {
    std::string message = "resolved layer is invalid:";
    for (const Violation &violation : violations) {
      message += "\n" + FormatViolation(violation);
    }
    throw Error(ErrorCode::kInvalidResult, message);
  }
  return {std::move(gold), resolver.Provenance(diffs)};
}

std::string SerializeResolutions(const std::vector<Resolution> &resolutions) {
  json root;
  root["scheme_version"] = kSchemeVersion;
  root["resolutions"] = ResolutionsJson(resolutions);
  return root.dump(2) + "\n";
}

std::string SerializeGold(const GoldLayer &gold) {
  json root = json::parse(SerializeLayer(gold.layer));
  root["provenance"] = ResolutionsJson(gold.provenance);
  return root.dump(2) + "\n";
}

GoldLayer LoadGold(std::string_view bytes, const Document &doc) {
  GoldLayer gold{LoadLayer(bytes, doc), {}};
  try {
    json root = json::parse(bytes);
    if (root.contains("provenance")) {
      json wrapper;
      wrapper["resolutions"] = root.at("provenance");
      gold.provenance = ParseResolutions(wrapper.dump());
    }
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kParseError,
                std::string("malformed gold file: ") + e.what());
  }
  return gold;
}

namespace {

std::optional<KappaResult> TryKappa(const AnnotationLayer &a,
                                    const AnnotationLayer &b, KappaLevel level) {
  try {
    return CohensKappa(a, b, level);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::kNoOverlap) throw;
    return std::nullopt;
  }
}

std::string FormatKappa(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value);
  return buffer;
}

}  // namespace

std::string RenderDiffReport(const AnnotationLayer &a, const AnnotationLayer &b,
                             const Document &doc, OutputFormat format) {
  std::vector<Disagreement> diffs = DiffLayers(a, b, doc);
  DisagreementSummary summary = SummarizeDisagreements(diffs, doc);
  constexpr KappaLevel kLevels[] = {KappaLevel::kArg, KappaLevel::kDomainMain,
                                    KappaLevel::kDomainSub};
  std::ostringstream out;
  switch (format) {
    case OutputFormat::kJson: {
      json root;
      root["document_id"] = doc.id();
      root["scheme_version"] = a.scheme_version();
      root["annotator_a"] = a.annotator();
      root["annotator_b"] = b.annotator();
      json rows = json::array();
      for (const Disagreement &diff : diffs) {
        json row;
        row["kind"] = Render(diff.kind);
        row["location"] = diff.location;
        row["value_a"] = diff.value_a;
        row["value_b"] = diff.value_b;
        rows.push_back(std::move(row));
      }
      root["disagreements"] = std::move(rows);
      json counts;
      for (size_t i = 0; i < kNumDisagreementKinds; ++i) {
        counts[std::string(Render(static_cast<DisagreementKind>(i)))] =
            summary.counts[i];
      }
      json s;
      s["counts"] = std::move(counts);
      s["total"] = summary.total;
      s["domain_disagreements"] = summary.domain_disagreements;
      s["domain_rate_denominator"] = summary.n_segments;
      s["domain_rate_pct"] = summary.domain_rate_pct;
      json kappa;
      for (KappaLevel level : kLevels) {
        auto result = TryKappa(a, b, level);
        if (!result) {
          kappa[std::string(Render(level))] = nullptr;
          continue;
        }
        json entry;
        entry["kappa"] = result->kappa;
        entry["observed"] = result->observed;
        entry["expected"] = result->expected;
        entry["n_items"] = result->n_items;
        entry["n_excluded"] = result->n_excluded;
        kappa[std::string(Render(level))] = std::move(entry);
      }
      s["kappa"] = std::move(kappa);
      root["summary"] = std::move(s);
      out << root.dump(2) << "\n";
      break;
    }
    case OutputFormat::kCsv: {
      out << "kind,location,value_a,value_b\n";
      for (const Disagreement &diff : diffs) {
        out << Render(diff.kind) << "," << CsvField(diff.location) << ","
            << CsvField(diff.value_a) << "," << CsvField(diff.value_b) << "\n";
      }
      out << "\nkind,count\n";
      for (size_t i = 0; i < kNumDisagreementKinds; ++i) {
        out << Render(static_cast<DisagreementKind>(i)) << ","
            << summary.counts[i] << "\n";
      }
      out << "total," << summary.total << "\n";
      break;
    }
    case OutputFormat::kMarkdown: {
      out << "# Disagreements: " << a.annotator() << " vs " << b.annotator()
          << " on " << doc.id() << "\n\n";
      out << "| kind | count |\n|---|---:|\n";
      for (size_t i = 0; i < kNumDisagreementKinds; ++i) {
        out << "| " << Render(static_cast<DisagreementKind>(i)) << " | "
            << summary.counts[i] << " |\n";
      }
      out << "| total | " << summary.total << " |\n\n";
      out << "Domain disagreements: " << summary.domain_disagreements << " of "
          << summary.n_segments << " segments ("
          << FormatPercent(summary.domain_rate_pct) << "%).\n\n";
      out << "| level | kappa | p_o | p_e | items | excluded |\n"
             "|---|---:|---:|---:|---:|---:|\n";
      for (KappaLevel level : kLevels) {
        auto result = TryKappa(a, b, level);
        if (!result) {
          out << "| " << Render(level) << " | n/a | | | 0 | |\n";
          continue;
        }
        out << "| " << Render(level) << " | " << FormatKappa(result->kappa)
            << " | " << FormatKappa(result->observed) << " | "
            << FormatKappa(result->expected) << " | " << result->n_items
            << " | " << result->n_excluded << " |\n";
      }
      if (!diffs.empty()) {
        out << "\n| kind | location | a | b |\n|---|---|---|---|\n";
        for (const Disagreement &diff : diffs) {
          out << "| " << Render(diff.kind) << " | " << diff.location << " | "
              << diff.value_a << " | " << diff.value_b << " |\n";
        }
      }
      break;
    }
  }
  return out.str();
}

}  // namespace argannot
