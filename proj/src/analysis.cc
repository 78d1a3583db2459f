#include "argannot/analysis.h"

#include <algorithm>
#include <functional>
#include <sstream>

#include "argannot/error.h"
#include "graph.h"
#include "json.hpp"

namespace argannot {

using json = nlohmann::ordered_json;

std::set<std::string> ArgumentativeSegments(const AnnotationLayer &layer) {
  std::set<std::string> out;
  for (const auto &[id, labels] : layer.labels()) {
    if (labels.arg == ArgLabel::kClaim) out.insert(id);
  }
  return out;
}

std::set<std::string> MajorClaims(const AnnotationLayer &layer) {
  std::set<std::string> out = ArgumentativeSegments(layer);
  for (const ElaborationEdge &edge : layer.elaborations()) out.erase(edge.src);
  return out;
}

SupportHistogram ComputeSupportHistogram(const AnnotationLayer &layer) {
  std::map<std::string, size_t> incoming;
  for (const ArgRelation &relation : layer.relations()) {
    if (relation.kind == RelationKind::kSupport) ++incoming[relation.tgt];
  }
  SupportHistogram histogram;
  for (const std::string &claim : ArgumentativeSegments(layer)) {
    auto it = incoming.find(claim);
    if (it == incoming.end()) {
      ++histogram.n_unsupported;
    } else {
      ++histogram.n_supported;
      ++histogram.claims_by_support_count[it->second];
    }
  }
  return histogram;
}

std::set<std::string> SupportSources(const AnnotationLayer &layer) {
  std::set<std::string> out;
  for (const ArgRelation &relation : layer.relations()) {
    if (relation.kind == RelationKind::kSupport && layer.IsClaim(relation.src)) {
      out.insert(relation.src);
    }
  }
  return out;
}

DomainDistribution DistributionOf(const AnnotationLayer &layer,
                                  const std::set<std::string> &segment_ids) {
  DomainDistribution dist;
  for (DomainMain main : kAllDomainMains) dist.by_main[main] = 0;
  for (DomainLabel leaf : kAllDomainLabels) dist.by_leaf[leaf] = 0;
  for (const std::string &id : segment_ids) {
    const LabelSet *labels = layer.Labels(id);
    DomainLabel leaf = labels ? labels->domain : DomainLabel::kNone;
    ++dist.by_leaf[leaf];
    ++dist.by_main[MainCategory(leaf)];
    ++dist.total;
  }
  return dist;
}

Rq1Report ComputeRq1(const AnnotationLayer &layer) {
  Rq1Report rq1;
  rq1.histogram = ComputeSupportHistogram(layer);
  rq1.n_supported = rq1.histogram.n_supported;
  rq1.n_unsupported = rq1.histogram.n_unsupported;
  rq1.n_claims = rq1.n_supported + rq1.n_unsupported;
  rq1.pct_supported = Percent(rq1.n_supported, rq1.n_claims);
  rq1.pct_supported_rounded = IntegerPercent(rq1.n_supported, rq1.n_claims);
  std::ostringstream narrative;
  narrative << rq1.n_supported << " of " << rq1.n_claims << " Claims ("
            << FormatPercent(rq1.pct_supported)
            << "%) have explicit supporting evidence in the text. The other "
            << rq1.n_unsupported
            << " are stated without supporting evidence.";
  rq1.narrative = narrative.str();
  return rq1;
}

Rq2Report ComputeRq2(const AnnotationLayer &layer) {
  Rq2Report rq2;
  rq2.claims = DistributionOf(layer, ArgumentativeSegments(layer));
  rq2.support_sources = DistributionOf(layer, SupportSources(layer));
  rq2.major_claims = DistributionOf(layer, MajorClaims(layer));
  size_t best = 0;
  for (DomainMain main : kAllDomainMains) {
    if (main == DomainMain::kNone) continue;
    size_t count = rq2.support_sources.by_main.at(main);
    if (count > best) {
      best = count;
      rq2.verdict = main;
    }
  }
  return rq2;
}

namespace {

class ChainBuilder {
 public:
  ChainBuilder(const AnnotationLayer &layer, const Document &doc) : doc_(doc) {
    for (const ArgRelation &relation : layer.relations()) {
      incoming_[relation.tgt].push_back(&relation);
    }
    for (auto &[tgt, relations] : incoming_) {
      std::sort(relations.begin(), relations.end(),
                [&](const ArgRelation *x, const ArgRelation *y) {
                  return Ordinal(x->src) < Ordinal(y->src);
                });
    }
  }

  ArgumentChain Build(const std::string &root) {
    ArgumentChain chain;
    chain.root = root;
    visited_.clear();
    path_.clear();
    cyclic_ = false;
    chain.tree = Expand(root, std::nullopt);
    chain.n_nodes = visited_.size();
    chain.cyclic = cyclic_;
    return chain;
  }

 private:
  size_t Ordinal(const std::string &id) const {
    auto position = doc_.Locate(id);
    return position ? position->ordinal : doc_.num_segments();
  }

  ChainNode Expand(const std::string &id, std::optional<RelationKind> kind) {
    ChainNode node;
    node.segment_id = id;
    node.kind = kind;
    visited_.insert(id);
    path_.insert(id);
    auto it = incoming_.find(id);
    if (it != incoming_.end()) {
      for (const ArgRelation *relation : it->second) {
        if (visited_.count(relation->src)) {
          if (path_.count(relation->src)) cyclic_ = true;
          node.omitted.push_back(relation->src);
          continue;
        }
        node.children.push_back(Expand(relation->src, relation->kind));
      }
    }
    path_.erase(id);
    return node;
  }

  const Document &doc_;
  std::map<std::string, std::vector<const ArgRelation *>> incoming_;
  std::set<std::string> visited_;
  std::set<std::string> path_;
  bool cyclic_ = false;
};

}  // namespace

std::vector<ArgumentChain> ArgumentChains(const AnnotationLayer &layer,
                                          const Document &doc) {
  internal::Digraph graph;
  std::set<std::string> has_incoming;
  for (const ArgRelation &relation : layer.relations()) {
    graph[relation.src].push_back(relation.tgt);
    has_incoming.insert(relation.tgt);
  }
  std::map<std::string, size_t> component_of;
  auto components = internal::StronglyConnectedComponents(graph);
  for (size_t c = 0; c < components.size(); ++c) {
    for (const std::string &id : components[c]) component_of[id] = c;
  }
  std::vector<std::string> roots;
  for (const std::string &id : has_incoming) {
    bool leaves_component = false;
    auto it = graph.find(id);
    if (it != graph.end()) {
      for (const std::string &tgt : it->second) {
        if (component_of[tgt] != component_of[id]) leaves_component = true;
      }
    }
    // Nodes of a cyclic component that has edges leaving it are not roots.
    if (!leaves_component) {
      for (const std::string &member : components[component_of[id]]) {
        auto out = graph.find(member);
        if (out == graph.end()) continue;
        for (const std::string &tgt : out->second) {
          if (component_of[tgt] != component_of[id]) leaves_component = true;
        }
      }
    }
    if (!leaves_component) roots.push_back(id);
  }
  std::sort(roots.begin(), roots.end(),
            [&](const std::string &x, const std::string &y) {
              auto px = doc.Locate(x);
              auto py = doc.Locate(y);
              size_t ox = px ? px->ordinal : doc.num_segments();
              size_t oy = py ? py->ordinal : doc.num_segments();
              return ox != oy ? ox < oy : x < y;
            });
  ChainBuilder builder(layer, doc);
  std::vector<ArgumentChain> chains;
  for (const std::string &root : roots) chains.push_back(builder.Build(root));
  return chains;
}

ArgStatsReport FullReport(const Document &doc, const AnnotationLayer &layer) {
  std::vector<Violation> violations = Validate(layer, doc);
  if (!violations.empty()) {
    throw Error(ErrorCode::kValidationError,
                "cannot report on an invalid layer: " +
                    FormatViolation(violations.front()) +
                    (violations.size() > 1
                         ? " (and " + std::to_string(violations.size() - 1) +
                               " more)"
                         : ""));
  }
  ArgStatsReport report;
  report.document_id = doc.id();
  report.annotator = layer.annotator();
  report.scheme_version = layer.scheme_version();
  report.text = ComputeTextDescriptives(doc);
  report.n_segments = doc.num_segments();
  report.n_reviewed = layer.labels().size();
  report.n_claims = ArgumentativeSegments(layer).size();
  report.n_non_argumentative = report.n_reviewed - report.n_claims;
  report.pct_non_argumentative =
      Percent(report.n_non_argumentative, report.n_segments);
  report.n_major_claims = MajorClaims(layer).size();
  report.n_elaborated_claims = report.n_claims - report.n_major_claims;
  report.pct_major_of_claims = Percent(report.n_major_claims, report.n_claims);
  report.pct_major_of_segments =
      Percent(report.n_major_claims, report.n_segments);
  for (const ArgRelation &relation : layer.relations()) {
    if (relation.kind == RelationKind::kSupport) {
      ++report.n_support_edges;
    } else {
      ++report.n_attack_edges;
    }
  }
  report.n_elaboration_edges = layer.elaborations().size();
  report.rq1 = ComputeRq1(layer);
  report.rq2 = ComputeRq2(layer);
  for (const ArgumentChain &chain : ArgumentChains(layer, doc)) {
    ++report.n_chains;
    if (chain.cyclic) ++report.n_cyclic_chains;
  }
  return report;
}

namespace {

json DistributionJson(const DomainDistribution &dist) {
  json out;
  out["total"] = dist.total;
  json by_main;
  json pct_main;
  for (DomainMain main : kAllDomainMains) {
    by_main[std::string(Render(main))] = dist.by_main.at(main);
    pct_main[std::string(Render(main))] =
        Percent(dist.by_main.at(main), dist.total);
  }
  json by_leaf;
  for (DomainLabel leaf : kAllDomainLabels) {
    by_leaf[std::string(Render(leaf))] = dist.by_leaf.at(leaf);
  }
  out["by_main"] = std::move(by_main);
  out["pct_by_main"] = std::move(pct_main);
  out["by_leaf"] = std::move(by_leaf);
  return out;
}

json ReportJson(const ArgStatsReport &r) {
  json root;
  root["document_id"] = r.document_id;
  root["annotator"] = r.annotator;
  root["scheme_version"] = r.scheme_version;
  json meta;
  meta["distinct_words_case_folded"] = true;
  meta["words_exclude_punctuation"] = true;
  meta["percent_decimals"] = 1;
  root["metadata"] = std::move(meta);

  json text;
  text["n_sentences"] = r.text.n_sentences;
  text["n_words"] = r.text.n_words;
  text["n_distinct_words"] = r.text.n_distinct_words;
  root["text"] = std::move(text);

  json coverage;
  coverage["n_segments"] = r.n_segments;
  coverage["n_reviewed"] = r.n_reviewed;
  coverage["n_claims"] = r.n_claims;
  coverage["n_non_argumentative"] = r.n_non_argumentative;
  coverage["pct_non_argumentative"] = r.pct_non_argumentative;
  coverage["pct_non_argumentative_rounded"] =
      IntegerPercent(r.n_non_argumentative, r.n_segments);
  root["coverage"] = std::move(coverage);

  json majors;
  majors["n_major_claims"] = r.n_major_claims;
  majors["n_elaborated_claims"] = r.n_elaborated_claims;
  majors["pct_major_of_claims"] = r.pct_major_of_claims;
  majors["pct_major_of_claims_rounded"] =
      IntegerPercent(r.n_major_claims, r.n_claims);
  majors["pct_major_of_segments"] = r.pct_major_of_segments;
  majors["pct_major_of_segments_rounded"] =
      IntegerPercent(r.n_major_claims, r.n_segments);
  root["major_claims"] = std::move(majors);

  json edges;
  edges["support"] = r.n_support_edges;
  edges["attack"] = r.n_attack_edges;
  edges["elaboration"] = r.n_elaboration_edges;
  root["edges"] = std::move(edges);

  json rq1;
  rq1["n_claims"] = r.rq1.n_claims;
  rq1["n_supported"] = r.rq1.n_supported;
  rq1["n_unsupported"] = r.rq1.n_unsupported;
  rq1["pct_supported"] = r.rq1.pct_supported;
  rq1["pct_supported_rounded"] = r.rq1.pct_supported_rounded;
  json histogram = json::object();
  for (const auto &[count, claims] : r.rq1.histogram.claims_by_support_count) {
    histogram[std::to_string(count)] = claims;
  }
  rq1["support_histogram"] = std::move(histogram);
  rq1["narrative"] = r.rq1.narrative;
  root["rq1"] = std::move(rq1);

  json rq2;
  rq2["claims"] = DistributionJson(r.rq2.claims);
  rq2["support_sources"] = DistributionJson(r.rq2.support_sources);
  rq2["major_claims"] = DistributionJson(r.rq2.major_claims);
  rq2["verdict"] = Render(r.rq2.verdict);
  root["rq2"] = std::move(rq2);

  json chains;
  chains["n_chains"] = r.n_chains;
  chains["n_cyclic"] = r.n_cyclic_chains;
  root["chains"] = std::move(chains);
  return root;
}

void FlattenCsv(const json &node, const std::string &prefix,
                std::ostringstream &out) {
  if (node.is_object()) {
    for (const auto &[key, value] : node.items()) {
      FlattenCsv(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  std::string value = node.is_string() ? node.get<std::string>() : node.dump();
  out << CsvField(prefix) << "," << CsvField(value) << "\n";
}

void DistributionRows(std::ostringstream &out, const DomainDistribution &dist) {
  out << "| category | count | share |\n|---|---:|---:|\n";
  for (DomainMain main : kAllDomainMains) {
    size_t n = dist.by_main.at(main);
    out << "| " << Render(main) << " | " << n << " | "
        << FormatPercent(Percent(n, dist.total)) << "% |\n";
  }
  out << "| total | " << dist.total << " | |\n\n";
  out << "| leaf | count |\n|---|---:|\n";
  for (DomainLabel leaf : kAllDomainLabels) {
    out << "| " << Render(leaf) << " | " << dist.by_leaf.at(leaf) << " |\n";
  }
  out << "\n";
}

std::string ReportMarkdown(const ArgStatsReport &r) {
  std::ostringstream out;
  auto pct = [](size_t part, size_t whole) {
    return FormatPercent(Percent(part, whole)) + "% [~" +
           std::to_string(IntegerPercent(part, whole)) + "%]";
  };
  out << "# Argumentation report: " << r.document_id << " (" << r.annotator
      << ")\n\n";
  out << "## Text descriptives\n\n"
      << "| feature | value |\n|---|---:|\n"
      << "| sentences | " << r.text.n_sentences << " |\n"
      << "| words (punctuation excluded) | " << r.text.n_words << " |\n"
      << "| distinct words (case-folded) | " << r.text.n_distinct_words
      << " |\n\n";

  out << "## Argumentative coverage\n\n"
      << r.n_claims << " of " << r.n_segments
      << " segments are part of the argumentation (Claims). "
      << r.n_non_argumentative << " reviewed segments ("
      << pct(r.n_non_argumentative, r.n_segments)
      << ") have no argumentative function";
  if (r.n_reviewed < r.n_segments) {
    out << "; " << (r.n_segments - r.n_reviewed) << " are not reviewed yet";
  }
  out << ".\n\n";

  out << "## Major claims\n\n"
      << r.n_elaborated_claims
      << " Claims are part of elaborated structures; " << r.n_major_claims
      << " are major claims: " << pct(r.n_major_claims, r.n_claims)
      << " of all Claims and " << pct(r.n_major_claims, r.n_segments)
      << " of all segments.\n\n";

  out << "## Explicit evidence\n\n" << r.rq1.narrative << "\n\n"
      << "| supporting statements | claims |\n|---:|---:|\n";
  for (const auto &[count, claims] : r.rq1.histogram.claims_by_support_count) {
    out << "| " << count << " | " << claims << " |\n";
  }
  out << "| 0 | " << r.rq1.n_unsupported << " |\n\n";

  const DomainDistribution &sources = r.rq2.support_sources;
  out << "## Grounding: theory or data\n\n"
      << "Out of " << r.rq2.claims.total << " Claims, "
      << r.rq2.claims.by_main.at(DomainMain::kData) << " are Data and "
      << r.rq2.claims.by_main.at(DomainMain::kTheory) << " are Theory. Of the "
      << sources.total << " supporting Claims, "
      << sources.by_main.at(DomainMain::kData) << " ("
      << pct(sources.by_main.at(DomainMain::kData), sources.total)
      << ") are grounded in Data and "
      << sources.by_main.at(DomainMain::kTheory) << " ("
      << pct(sources.by_main.at(DomainMain::kTheory), sources.total)
      << ") in Theory. Majority grounding of support: "
      << Render(r.rq2.verdict) << ".\n\n";
  out << "### All Claims\n\n";
  DistributionRows(out, r.rq2.claims);
  out << "### Supporting Claims\n\n";
  DistributionRows(out, sources);
  out << "### Major claims\n\n";
  DistributionRows(out, r.rq2.major_claims);

  out << "## Relations\n\n"
      << "| edges | count |\n|---|---:|\n"
      << "| Support | " << r.n_support_edges << " |\n"
      << "| Attack | " << r.n_attack_edges << " |\n"
      << "| Elaboration | " << r.n_elaboration_edges << " |\n\n"
      << r.n_chains << " argument chains";
  if (r.n_cyclic_chains > 0) out << " (" << r.n_cyclic_chains << " cyclic)";
  out << ".\n";
  return out.str();
}

}  // namespace

std::string RenderReport(const ArgStatsReport &report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return ReportJson(report).dump(2) + "\n";
    case OutputFormat::kCsv: {
      std::ostringstream out;
      out << "metric,value\n";
      FlattenCsv(ReportJson(report), "", out);
      return out.str();
    }
    case OutputFormat::kMarkdown:
      return ReportMarkdown(report);
  }
  return "";
}

}  // namespace argannot
