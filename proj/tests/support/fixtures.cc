#include "fixtures.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "argannot/error.h"
#include "argannot/text.h"

namespace argannot::testing {

namespace {

constexpr size_t kParagraphs = 156;
constexpr size_t kSources = 235;
constexpr size_t kFillers = 212;
constexpr size_t kMaxAttacks = 20;
constexpr size_t kNonClaims = 38;

enum class Role { kTarget, kSource, kFiller, kNonClaim };

struct Slot {
  Role role;
  DomainLabel domain = DomainLabel::kNone;
  bool elaborated = false;
  size_t supports = 0;  // of the paragraph's target; sources only
};

void Append(std::vector<DomainLabel> &out, DomainLabel label, size_t n) {
  out.insert(out.end(), n, label);
}

// Spreads runs of equal entries over the sequence with a fixed stride.
template <typename T>
std::vector<T> Stride(const std::vector<T> &in, size_t stride) {
  std::vector<T> out(in.size());
  for (size_t i = 0; i < in.size(); ++i) out[(i * stride) % in.size()] = in[i];
  return out;
}

std::vector<DomainLabel> TargetDomains() {
  std::vector<DomainLabel> out;
  Append(out, DomainLabel::kTheoryStatement, 61);
  Append(out, DomainLabel::kTheoryDefinition, 5);
  Append(out, DomainLabel::kDataEvaluative, 68);
  Append(out, DomainLabel::kDataSpeculative, 21);
  Append(out, DomainLabel::kDataOther, 1);
  return Stride(out, 7);
}

// Index 0 is the one source that is itself a major claim.
std::vector<DomainLabel> SourceDomains() {
  std::vector<DomainLabel> data;
  const DomainLabel data_leaves[] = {DomainLabel::kDataEvaluative,
                                     DomainLabel::kDataEvaluative,
                                     DomainLabel::kDataSpeculative,
                                     DomainLabel::kDataOther};
  for (size_t i = 0; i < 170; ++i) data.push_back(data_leaves[i % 4]);
  for (size_t i = 0; i < 64; ++i) {
    data.push_back(i % 3 == 2 ? DomainLabel::kTheoryDefinition
                              : DomainLabel::kTheoryStatement);
  }
  std::vector<DomainLabel> out = {DomainLabel::kIrOther};
  for (DomainLabel label : Stride(data, 5)) out.push_back(label);
  return out;
}

struct Filler {
  DomainLabel domain;
  bool major;
};

std::vector<Filler> Fillers() {
  std::vector<Filler> out;
  for (int i = 0; i < 2; ++i) out.push_back({DomainLabel::kIrOther, true});
  for (int i = 0; i < 4; ++i) out.push_back({DomainLabel::kTheoryDefinition, true});
  for (size_t i = 0; i < 60; ++i) {
    out.push_back({i % 2 ? DomainLabel::kTheoryDefinition
                         : DomainLabel::kTheoryStatement,
                   false});
  }
  const DomainLabel data_leaves[] = {DomainLabel::kDataEvaluative,
                                     DomainLabel::kDataSpeculative,
                                     DomainLabel::kDataOther};
  for (size_t i = 0; i < 146; ++i) out.push_back({data_leaves[i % 3], false});
  return Stride(out, 7);
}

std::vector<size_t> SupportCounts() {
  std::vector<size_t> counts(kParagraphs, 1);
  const size_t heavy_at[6] = {10, 35, 60, 85, 110, 135};
  for (size_t i = 0; i < 6; ++i) counts[heavy_at[i]] = kHeavySupportCounts[i];
  size_t twos = 0;
  for (size_t p = 1; p < kParagraphs && twos < 34; p += 4) {
    if (counts[p] == 1) {
      counts[p] = 2;
      ++twos;
    }
  }
  return counts;
}

std::string Sentence(size_t paragraph, size_t index, Role role) {
  static const char *kVerbs[] = {"shapes", "limits", "explains", "predicts",
                                 "reflects", "restrains"};
  static const char *kNouns[] = {"the balance of power", "state behaviour",
                                 "alliance formation", "the anarchic system",
                                 "great power politics", "relative gains"};
  char buffer[160];
  if (role == Role::kNonClaim) {
    std::snprintf(buffer, sizeof(buffer),
                  "Why does paragraph %zu turn to question %zu?", paragraph + 1,
                  index + 1);
  } else {
    std::snprintf(buffer, sizeof(buffer), "Point %zu of paragraph %zu %s %s.",
                  index + 1, paragraph + 1, kVerbs[(paragraph + index) % 6],
                  kNouns[(paragraph * 7 + index) % 6]);
  }
  return buffer;
}

}  // namespace

MarginalFixture BuildMarginalFixture() {
  std::vector<DomainLabel> targets = TargetDomains();
  std::vector<DomainLabel> sources = SourceDomains();
  std::vector<Filler> fillers = Fillers();
  std::vector<size_t> counts = SupportCounts();

  std::vector<std::vector<Slot>> layout(kParagraphs);
  size_t next_source = 0;
  for (size_t p = 0; p < kParagraphs; ++p) {
    layout[p].push_back({Role::kTarget, targets[p], false, 0});
    for (size_t k = 0; k < counts[p]; ++k, ++next_source) {
      layout[p].push_back({Role::kSource, sources[next_source], next_source != 0, 1});
    }
  }
  for (size_t f = 0; f < kFillers; ++f) {
    layout[f % kParagraphs].push_back(
        {Role::kFiller, fillers[f].domain, !fillers[f].major, 0});
  }
  for (size_t k = 0; k < kNonClaims; ++k) {
    layout[4 * k].push_back({Role::kNonClaim, DomainLabel::kNone, false, 0});
  }
  if (next_source != kSources) throw std::logic_error("source count drifted");

  std::string text;
  for (size_t p = 0; p < kParagraphs; ++p) {
    if (p > 0) text += "\n\n";
    for (size_t i = 0; i < layout[p].size(); ++i) {
      if (i > 0) text += " ";
      text += Sentence(p, i, layout[p][i].role);
    }
  }
  Document doc = SegmentText(text, DefaultAbbreviations(), {}, "marginal",
                             "Marginal fixture");
  if (doc.paragraphs().size() != kParagraphs) {
    throw std::logic_error("fixture text segmented into wrong paragraph count");
  }

  AnnotationLayer gold(doc.id(), "gold");
  size_t attacks = 0;
  for (size_t p = 0; p < kParagraphs; ++p) {
    const auto &segments = doc.paragraphs()[p].segments;
    if (segments.size() != layout[p].size()) {
      throw std::logic_error("fixture paragraph segmented unexpectedly");
    }
    const std::string &target = segments[0].id;
    for (size_t i = 0; i < segments.size(); ++i) {
      const Slot &slot = layout[p][i];
      const std::string &id = segments[i].id;
      if (slot.role == Role::kNonClaim) {
        gold.RawSetLabels(id, {});
        continue;
      }
      gold.RawSetLabels(id, {ArgLabel::kClaim,
                             slot.elaborated ? RhetLabel::kElaboration
                                             : RhetLabel::kNone,
                             slot.domain});
      if (slot.elaborated) gold.RawAddElaboration({id, segments[i - 1].id});
      if (slot.role == Role::kSource) {
        gold.RawAddRelation({id, target, RelationKind::kSupport});
      }
      if (slot.role == Role::kFiller && slot.elaborated && attacks < kMaxAttacks &&
          i % 5 == 3) {
        gold.RawAddRelation({id, target, RelationKind::kAttack});
        ++attacks;
      }
    }
  }
  return {std::move(doc), std::move(gold)};
}

AnnotationLayer BuildDisagreeingLayer(const MarginalFixture &fixture) {
  const AnnotationLayer &gold = fixture.gold;
  AnnotationLayer b(gold.document_id(), "b");

  size_t main_swaps = 0;
  size_t sub_swaps = 0;
  size_t claim_index = 0;
  for (const Segment *segment : fixture.doc.segments()) {
    const LabelSet *labels = gold.Labels(segment->id);
    if (labels == nullptr) continue;
    LabelSet changed = *labels;
    if (labels->arg == ArgLabel::kClaim) {
      DomainMain main = MainCategory(labels->domain);
      size_t k = claim_index++;
      if (k % 6 == 0 && main_swaps < 94) {
        changed.domain = main == DomainMain::kTheory
                             ? DomainLabel::kDataEvaluative
                             : DomainLabel::kTheoryStatement;
        ++main_swaps;
      } else if (k % 6 == 3 && sub_swaps < 65 &&
                 (main == DomainMain::kTheory || main == DomainMain::kData)) {
        switch (labels->domain) {
          case DomainLabel::kTheoryStatement:
            changed.domain = DomainLabel::kTheoryDefinition;
            break;
          case DomainLabel::kTheoryDefinition:
          case DomainLabel::kDataSpeculative:
            changed.domain = main == DomainMain::kTheory
                                 ? DomainLabel::kTheoryStatement
                                 : DomainLabel::kDataEvaluative;
            break;
          default:
            changed.domain = DomainLabel::kDataSpeculative;
            break;
        }
        ++sub_swaps;
      }
    }
    b.RawSetLabels(segment->id, changed);
  }
  if (main_swaps != 94 || sub_swaps != 65) {
    throw std::logic_error("disagreement fixture ran out of claims");
  }
  for (const ElaborationEdge &edge : gold.elaborations()) b.RawAddElaboration(edge);

  std::vector<ArgRelation> supports;
  for (const ArgRelation &relation : gold.relations()) {
    if (relation.kind == RelationKind::kSupport) {
      supports.push_back(relation);
    } else {
      b.RawAddRelation(relation);
    }
  }
  for (size_t i = 0; i < supports.size(); ++i) {
    size_t rank = (i * 2) % supports.size();
    if (rank < 140) continue;
    ArgRelation relation = supports[i];
    if (rank < 147) relation.kind = RelationKind::kAttack;
    b.RawAddRelation(relation);
  }
  return b;
}

std::vector<Resolution> ResolveAll(const AnnotationLayer &a,
                                   const AnnotationLayer &b,
                                   const Document &doc,
                                   ResolutionChoice choice) {
  std::vector<Resolution> out;
  for (const Disagreement &d : DiffLayers(a, b, doc)) {
    out.push_back({d.kind, d.location, choice, "", ""});
  }
  return out;
}

namespace {

const char *kWords[] = {"power",   "states",   "balance", "system",  "theory",
                        "anarchy", "alliance", "threat",  "war",     "order",
                        "gains",   "security", "rival",   "poles",   "structure",
                        "units",   "capacity", "ally",    "pressure", "outcome"};
constexpr size_t kNumWords = sizeof(kWords) / sizeof(kWords[0]);

size_t Uniform(Rng &rng, size_t lo, size_t hi) {
  return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

bool Chance(Rng &rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

const DomainLabel &RandomLeaf(Rng &rng) {
  return kAllDomainLabels[Uniform(rng, 0, kAllDomainLabels.size() - 1)];
}

}  // namespace

std::string RandomText(Rng &rng, size_t max_paragraphs, size_t max_sentences,
                       size_t min_paragraphs, size_t min_sentences) {
  static const char *kEnds[] = {".", "?", "!"};
  std::string out;
  size_t paragraphs = Uniform(rng, min_paragraphs, max_paragraphs);
  for (size_t p = 0; p < paragraphs; ++p) {
    if (p > 0) out += "\n\n";
    size_t sentences = Uniform(rng, min_sentences, max_sentences);
    for (size_t s = 0; s < sentences; ++s) {
      if (s > 0) out += " ";
      std::string first = kWords[Uniform(rng, 0, kNumWords - 1)];
      first[0] = static_cast<char>(first[0] - 'a' + 'A');
      out += first;
      size_t words = Uniform(rng, 1, 7);
      for (size_t w = 0; w < words; ++w) {
        out += " ";
        out += kWords[Uniform(rng, 0, kNumWords - 1)];
      }
      out += kEnds[Uniform(rng, 0, 2)];
    }
  }
  return out;
}

Document RandomDocument(Rng &rng, size_t max_paragraphs, size_t max_sentences,
                        size_t min_paragraphs, size_t min_sentences) {
  return SegmentText(RandomText(rng, max_paragraphs, max_sentences,
                                min_paragraphs, min_sentences),
                     DefaultAbbreviations(), {}, "rand");
}

AnnotationLayer RandomValidLayer(Rng &rng, const Document &doc,
                                 const std::string &annotator) {
  AnnotationLayer layer(doc.id(), annotator);
  for (const Paragraph &paragraph : doc.paragraphs()) {
    std::vector<std::string> claims;
    for (size_t i = 0; i < paragraph.segments.size(); ++i) {
      const std::string &id = paragraph.segments[i].id;
      if (Chance(rng, 0.15)) continue;
      LabelSet labels;
      if (Chance(rng, 0.65)) {
        labels.arg = ArgLabel::kClaim;
        labels.domain = RandomLeaf(rng);
        claims.push_back(id);
      }
      if (i > 0 && Chance(rng, 0.4)) {
        labels.rhet = RhetLabel::kElaboration;
        layer.RawAddElaboration({id, paragraph.segments[Uniform(rng, 0, i - 1)].id});
      }
      layer.RawSetLabels(id, labels);
    }
    if (claims.size() < 2) continue;
    size_t attempts = Uniform(rng, 0, claims.size() * 2);
    for (size_t k = 0; k < attempts; ++k) {
      const std::string &src = claims[Uniform(rng, 0, claims.size() - 1)];
      const std::string &tgt = claims[Uniform(rng, 0, claims.size() - 1)];
      if (src == tgt || layer.FindRelation(src, tgt) != nullptr) continue;
      layer.RawAddRelation({src, tgt,
                            Chance(rng, 0.75) ? RelationKind::kSupport
                                              : RelationKind::kAttack});
    }
  }
  return layer;
}

AnnotationLayer ShuffledCopy(Rng &rng, const AnnotationLayer &layer) {
  AnnotationLayer copy(layer.document_id(), layer.annotator(),
                       layer.scheme_version());
  std::vector<std::pair<std::string, LabelSet>> labels(layer.labels().begin(),
                                                       layer.labels().end());
  std::vector<ElaborationEdge> elaborations = layer.elaborations();
  std::vector<ArgRelation> relations = layer.relations();
  std::shuffle(labels.begin(), labels.end(), rng);
  std::shuffle(elaborations.begin(), elaborations.end(), rng);
  std::shuffle(relations.begin(), relations.end(), rng);
  // Interleave the three kinds of insert.
  size_t l = 0, e = 0, r = 0;
  while (l < labels.size() || e < elaborations.size() || r < relations.size()) {
    switch (Uniform(rng, 0, 2)) {
      case 0:
        if (l < labels.size()) copy.RawSetLabels(labels[l].first, labels[l].second), ++l;
        break;
      case 1:
        if (e < elaborations.size()) copy.RawAddElaboration(elaborations[e++]);
        break;
      default:
        if (r < relations.size()) copy.RawAddRelation(relations[r++]);
        break;
    }
  }
  return copy;
}

AnnotationLayer RandomEdits(Rng &rng, const Document &doc,
                            const AnnotationLayer &base, size_t n_edits) {
  AnnotationLayer layer = base;
  const auto &segments = doc.segments();
  auto pick = [&]() -> const std::string & {
    return segments[Uniform(rng, 0, segments.size() - 1)]->id;
  };
  for (size_t n = 0; n < n_edits; ++n) {
    try {
      switch (Uniform(rng, 0, 5)) {
        case 0: {
          const std::string &id = pick();
          LabelSet labels;
          labels.arg = Chance(rng, 0.6) ? ArgLabel::kClaim : ArgLabel::kNone;
          labels.domain = labels.arg == ArgLabel::kClaim ? RandomLeaf(rng)
                                                         : DomainLabel::kNone;
          labels.rhet = layer.ElaborationTarget(id) ? RhetLabel::kElaboration
                                                    : RhetLabel::kNone;
          layer.SetLabels(doc, id, labels);
          break;
        }
        case 1:
          layer.ClearLabels(doc, pick());
          break;
        case 2:
          layer.AddRelation(doc, pick(), pick(),
                            Chance(rng, 0.5) ? RelationKind::kSupport
                                             : RelationKind::kAttack);
          break;
        case 3:
          if (!layer.relations().empty()) {
            const ArgRelation relation =
                layer.relations()[Uniform(rng, 0, layer.relations().size() - 1)];
            layer.RemoveRelation(relation.src, relation.tgt);
          }
          break;
        case 4:
          layer.AddElaboration(doc, pick(), pick());
          break;
        default:
          layer.RemoveElaboration(pick());
          break;
      }
    } catch (const Error &) {
      // Rejected edits leave the layer unchanged.
    }
  }
  return layer;
}

namespace {

// Makes id a Claim without touching its rhetorical label or edges.
void Promote(AnnotationLayer &layer, const std::string &id) {
  LabelSet labels = layer.Labels(id) ? *layer.Labels(id) : LabelSet{};
  if (labels.arg == ArgLabel::kClaim) return;
  labels.arg = ArgLabel::kClaim;
  labels.domain = DomainLabel::kTheoryStatement;
  layer.RawSetLabels(id, labels);
}

const Paragraph &PickParagraph(Rng &rng, const Document &doc) {
  std::vector<const Paragraph *> usable;
  for (const Paragraph &p : doc.paragraphs()) {
    if (p.segments.size() >= 2) usable.push_back(&p);
  }
  if (usable.empty()) throw std::logic_error("no paragraph with two segments");
  return *usable[Uniform(rng, 0, usable.size() - 1)];
}

}  // namespace

AnnotationLayer InjectViolation(Rng &rng, const Document &doc,
                                const AnnotationLayer &valid, ViolationCode code) {
  if (doc.paragraphs().size() < 2) throw std::logic_error("need two paragraphs");
  AnnotationLayer layer = valid;
  const Paragraph &para = PickParagraph(rng, doc);
  size_t later = Uniform(rng, 1, para.segments.size() - 1);
  size_t earlier = Uniform(rng, 0, later - 1);
  const std::string &first = para.segments[earlier].id;
  const std::string &second = para.segments[later].id;

  switch (code) {
    case ViolationCode::kDocumentMismatch: {
      AnnotationLayer moved(valid.document_id() + "-other", valid.annotator());
      for (const auto &[id, labels] : valid.labels()) moved.RawSetLabels(id, labels);
      for (const auto &edge : valid.elaborations()) moved.RawAddElaboration(edge);
      for (const auto &relation : valid.relations()) moved.RawAddRelation(relation);
      return moved;
    }
    case ViolationCode::kUnknownSegment:
      layer.RawSetLabels(doc.id() + "-ghost", {ArgLabel::kClaim, RhetLabel::kNone,
                                               DomainLabel::kIrOther});
      return layer;
    case ViolationCode::kSelfLoop:
      Promote(layer, first);
      layer.RawAddRelation({first, first, RelationKind::kSupport});
      return layer;
    case ViolationCode::kCrossParagraph: {
      const Paragraph *other = nullptr;
      for (const Paragraph &p : doc.paragraphs()) {
        if (p.index != para.index) other = &p;
      }
      const std::string &far = other->segments.front().id;
      Promote(layer, first);
      Promote(layer, far);
      layer.RawAddRelation({first, far, RelationKind::kAttack});
      return layer;
    }
    case ViolationCode::kEndpointNotClaim: {
      LabelSet demoted = layer.Labels(second) ? *layer.Labels(second) : LabelSet{};
      demoted.arg = ArgLabel::kNone;
      demoted.domain = DomainLabel::kNone;
      layer.SetLabels(doc, second, demoted);  // drops its relations
      Promote(layer, first);
      layer.RawAddRelation({first, second, RelationKind::kSupport});
      return layer;
    }
    case ViolationCode::kDuplicatePair: {
      if (layer.relations().empty()) {
        Promote(layer, first);
        Promote(layer, second);
        layer.RawAddRelation({second, first, RelationKind::kSupport});
      }
      ArgRelation existing =
          layer.relations()[Uniform(rng, 0, layer.relations().size() - 1)];
      existing.kind = existing.kind == RelationKind::kSupport
                          ? RelationKind::kAttack
                          : RelationKind::kSupport;
      layer.RawAddRelation(existing);
      return layer;
    }
    case ViolationCode::kTargetNotPrior: {
      layer.RemoveElaboration(first);
      layer.RawAddElaboration({first, second});
      LabelSet labels = layer.Labels(first) ? *layer.Labels(first) : LabelSet{};
      labels.rhet = RhetLabel::kElaboration;
      layer.RawSetLabels(first, labels);
      return layer;
    }
    case ViolationCode::kDuplicateOutgoing: {
      if (!layer.ElaborationTarget(second)) {
        layer.AddElaboration(doc, second, first);
      }
      const std::string &extra = para.segments[Uniform(rng, 0, later - 1)].id;
      layer.RawAddElaboration({second, extra});
      return layer;
    }
    case ViolationCode::kDanglingElaboration: {
      layer.RemoveElaboration(second);
      LabelSet labels = layer.Labels(second) ? *layer.Labels(second) : LabelSet{};
      labels.rhet = RhetLabel::kElaboration;
      layer.RawSetLabels(second, labels);
      return layer;
    }
    case ViolationCode::kUnlabeledElaboration: {
      if (!layer.ElaborationTarget(second)) {
        layer.AddElaboration(doc, second, first);
      }
      LabelSet labels = *layer.Labels(second);
      labels.rhet = RhetLabel::kNone;
      layer.RawSetLabels(second, labels);
      return layer;
    }
  }
  throw std::logic_error("unhandled violation code");
}

std::string MessyText(Rng &rng) {
  static const char *kTokens[] = {
      "power", "States", "e.g.", "Dr.", "3.5", "K.", "U.S.", "—", "–", "--",
      "then;", "follows:", "\"quoted.\"", "(aside)", "Why?", "No!", "etc.",
      "2:1", "end.", "Begin", "über", "Éire", "wait...", "x", "7", "…",
      "-", "a-b", ";", ":", ".", "?", "'tis"};
  constexpr size_t n = sizeof(kTokens) / sizeof(kTokens[0]);
  std::uniform_int_distribution<size_t> token(0, n - 1);
  std::uniform_int_distribution<size_t> length(1, 40);
  std::uniform_int_distribution<int> gap(0, 19);
  std::string out;
  size_t words = length(rng);
  for (size_t i = 0; i < words; ++i) {
    if (i > 0) {
      int g = gap(rng);
      out += g == 0 ? "\n\n" : g == 1 ? "\n" : g == 2 ? "  " : " ";
    }
    out += kTokens[token(rng)];
  }
  return out;
}

bool IsLossless(const Document &doc) {
  const std::u32string &source = doc.source();
  size_t cursor = 0;
  for (const Segment *s : doc.segments()) {
    if (s->span.begin < cursor || s->span.end <= s->span.begin ||
        s->span.end > source.size()) {
      return false;
    }
    for (size_t i = cursor; i < s->span.begin; ++i) {
      if (!IsSpace(source[i])) return false;
    }
    std::u32string_view piece(source.data() + s->span.begin, s->span.length());
    if (EncodeUtf8(piece) != s->text) return false;
    if (IsSpace(piece.front()) || IsSpace(piece.back())) return false;
    cursor = s->span.end;
  }
  for (size_t i = cursor; i < source.size(); ++i) {
    if (!IsSpace(source[i])) return false;
  }
  return true;
}

std::vector<size_t> SplitPoints(const Document &doc, const Segment &segment) {
  std::vector<size_t> out;
  const std::u32string &src = doc.source();
  for (size_t o = segment.span.begin + 1; o < segment.span.end; ++o) {
    if (IsSpace(src[o]) || IsSpace(src[o - 1])) {
      std::u32string_view left(src.data() + segment.span.begin,
                               o - segment.span.begin);
      std::u32string_view right(src.data() + o, segment.span.end - o);
      if (!Trim(left).empty() && !Trim(right).empty()) out.push_back(o);
    }
  }
  return out;
}

double BruteForceKappa(const Matrix &m) {
  static std::vector<std::pair<size_t, size_t>> items;
  items.clear();
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = 0; j < m.size(); ++j) {
      for (size_t c = 0; c < m[i][j]; ++c) items.emplace_back(i, j);
    }
  }
  const double n = static_cast<double>(items.size());
  double agree = 0;
  for (const auto &[x, y] : items) agree += x == y;
  double chance = 0;
  for (size_t c = 0; c < m.size(); ++c) {
    double by_a = 0, by_b = 0;
    for (const auto &[x, y] : items) {
      by_a += x == c;
      by_b += y == c;
    }
    chance += (by_a / n) * (by_b / n);
  }
  double observed = agree / n;
  if (std::fabs(1.0 - chance) < 1e-15) return 1.0;
  return (observed - chance) / (1.0 - chance);
}

size_t EnumerateKappa(size_t k, const std::vector<size_t> &values,
                      size_t *mismatches, double tolerance) {
  std::vector<size_t> digits(k * k, 0);
  size_t checked = 0;
  Matrix m(k, std::vector<size_t>(k, 0));
  while (true) {
    size_t n = 0;
    for (size_t c = 0; c < k * k; ++c) {
      m[c / k][c % k] = values[digits[c]];
      n += values[digits[c]];
    }
    if (n > 0) {
      double expected = BruteForceKappa(m);
      double actual = KappaFromConfusion(m).kappa;
      if (!(std::fabs(expected - actual) <= tolerance)) ++*mismatches;
      ++checked;
    }
    size_t c = 0;
    while (c < k * k && ++digits[c] == values.size()) digits[c++] = 0;
    if (c == k * k) break;
  }
  return checked;
}

TempDir::TempDir() {
  static std::atomic<unsigned> counter{0};
  std::random_device device;
  path_ = std::filesystem::temp_directory_path() /
          ("argannot-test-" + std::to_string(device()) + "-" +
           std::to_string(counter++));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace argannot::testing
