#ifndef ARGANNOT_ANALYSIS_H_
#define ARGANNOT_ANALYSIS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "argannot/annotation.h"
#include "argannot/corpus.h"
#include "argannot/format.h"
#include "argannot/scheme.h"

namespace argannot {

// Statistics over one (normally gold) layer. Functions taking only a layer
// assume it is valid; FullReport checks.

// Segments labelled Claim. Support and Attack sources are Claims too, so
// this is the whole argumentative part of the text.
std::set<std::string> ArgumentativeSegments(const AnnotationLayer &layer);

// Claims without an outgoing elaboration edge. They may be elaborated by
// later segments; every other Claim is part of an elaborated structure.
std::set<std::string> MajorClaims(const AnnotationLayer &layer);

struct SupportHistogram {
  std::map<size_t, size_t> claims_by_support_count;  // keys >= 1
  size_t n_supported = 0;
  size_t n_unsupported = 0;
};

// Incoming Support edges per Claim; Attack edges do not count.
SupportHistogram ComputeSupportHistogram(const AnnotationLayer &layer);

// Claims with at least one outgoing Support edge.
std::set<std::string> SupportSources(const AnnotationLayer &layer);

struct DomainDistribution {
  size_t total = 0;
  std::map<DomainMain, size_t> by_main;    // every main category present
  std::map<DomainLabel, size_t> by_leaf;   // every leaf present
};

DomainDistribution DistributionOf(const AnnotationLayer &layer,
                                  const std::set<std::string> &segment_ids);

struct Rq1Report {
  size_t n_claims = 0;
  size_t n_supported = 0;
  size_t n_unsupported = 0;
  double pct_supported = 0.0;
  long pct_supported_rounded = 0;
  SupportHistogram histogram;
  std::string narrative;
};

Rq1Report ComputeRq1(const AnnotationLayer &layer);

struct Rq2Report {
  DomainDistribution claims;
  DomainDistribution support_sources;
  DomainDistribution major_claims;
  // Majority main category among support sources (None if there are none).
  DomainMain verdict = DomainMain::kNone;
};

Rq2Report ComputeRq2(const AnnotationLayer &layer);

struct ChainNode {
  std::string segment_id;
  std::optional<RelationKind> kind;  // relation to the parent; empty at root
  std::vector<ChainNode> children;
  // Supporters/attackers not expanded here because they already appear in
  // the chain.
  std::vector<std::string> omitted;
};

struct ArgumentChain {
  std::string root;
  ChainNode tree;
  size_t n_nodes = 0;
  bool cyclic = false;  // a cycle was cut at its first revisit
};

// One chain per root Claim. Roots have incoming relations and no outgoing
// relation leaving their strongly connected component, so in a pure cycle
// every member is a root. Children are ordered by document position.
std::vector<ArgumentChain> ArgumentChains(const AnnotationLayer &layer,
                                          const Document &doc);

struct ArgStatsReport {
  std::string document_id;
  std::string annotator;
  std::string scheme_version;
  TextDescriptives text;
  size_t n_segments = 0;
  size_t n_reviewed = 0;
  size_t n_claims = 0;
  size_t n_non_argumentative = 0;  // reviewed, not a Claim
  double pct_non_argumentative = 0.0;
  size_t n_major_claims = 0;
  size_t n_elaborated_claims = 0;
  double pct_major_of_claims = 0.0;
  double pct_major_of_segments = 0.0;
  size_t n_support_edges = 0;
  size_t n_attack_edges = 0;
  size_t n_elaboration_edges = 0;
  Rq1Report rq1;
  Rq2Report rq2;
  size_t n_chains = 0;
  size_t n_cyclic_chains = 0;
};

// Throws kValidationError if the layer does not validate against doc.
ArgStatsReport FullReport(const Document &doc, const AnnotationLayer &layer);

std::string RenderReport(const ArgStatsReport &report, OutputFormat format);

}  // namespace argannot

#endif  // ARGANNOT_ANALYSIS_H_
