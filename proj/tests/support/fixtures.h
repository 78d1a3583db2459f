#ifndef ARGANNOT_TESTS_SUPPORT_FIXTURES_H_
#define ARGANNOT_TESTS_SUPPORT_FIXTURES_H_

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "argannot/agreement.h"
#include "argannot/annotation.h"
#include "argannot/corpus.h"

namespace argannot::testing {

// Synthetic document and gold layer whose statistics hit the target
// corpus totals: 641 segments, 603 claims, 163 majors, 156 supported claims,
// 235 support sources (170 Data, 64 Theory), claims 406 Data / 194 Theory /
// 3 Other, majors 61 Theory.Statement / 68 Data.Evaluative /
// 21 Data.Speculative.
//
// The target histogram (116 claims with one supporter, 34 with two, 6
// with three to six) cannot carry 235 distinct sources when every source
// supports one claim: it tops out at 220 edges. The six heavily supported
// claims here have 3, 4, 6, 12, 13 and 13 supporters so that the edge count
// and the source count agree.
//
// The target also names 90 Data majors while its leaves sum to 89; one
// Data.Other major closes the gap. A separately mentioned non-IR claim would
// push the claims to 604, so the fixture has none and keeps 603.
struct MarginalFixture {
  Document doc;
  AnnotationLayer gold;
};

MarginalFixture BuildMarginalFixture();

// Supporter counts of the six heavily supported claims.
inline constexpr size_t kHeavySupportCounts[6] = {3, 4, 6, 12, 13, 13};

// A second annotator's layer that differs from the fixture gold by 140
// missing relations, 7 Support/Attack flips, 94 main-category domain
// changes and 65 sub-category changes.
AnnotationLayer BuildDisagreeingLayer(const MarginalFixture &fixture);

// Resolutions choosing side `choice` for every disagreement of a vs b.
std::vector<Resolution> ResolveAll(const AnnotationLayer &a,
                                   const AnnotationLayer &b,
                                   const Document &doc,
                                   ResolutionChoice choice);

using Rng = std::mt19937_64;

// Random plain text with min..max paragraphs of min..max sentences each. Every sentence ends with '.', '?' or '!' followed by a
// capitalized word, so each one becomes one segment.
std::string RandomText(Rng &rng, size_t max_paragraphs, size_t max_sentences,
                       size_t min_paragraphs = 1, size_t min_sentences = 1);

// A random document from RandomText, id "rand".
Document RandomDocument(Rng &rng, size_t max_paragraphs = 5,
                        size_t max_sentences = 8, size_t min_paragraphs = 1,
                        size_t min_sentences = 1);

// A random valid layer built directly from the structural rules (unchecked
// inserts), so Validate() is tested against an independent construction.
AnnotationLayer RandomValidLayer(Rng &rng, const Document &doc,
                                 const std::string &annotator = "r");

// The same layer content inserted in a shuffled order.
AnnotationLayer ShuffledCopy(Rng &rng, const AnnotationLayer &layer);

// Random edits of `base` through the checked API; the result stays valid.
AnnotationLayer RandomEdits(Rng &rng, const Document &doc,
                            const AnnotationLayer &base, size_t n_edits);

// Breaks a valid layer so that Validate() reports `code` and nothing else.
// Needs a document with at least two paragraphs of two segments each.
AnnotationLayer InjectViolation(Rng &rng, const Document &doc,
                                const AnnotationLayer &valid, ViolationCode code);

// Text exercising every boundary rule, including inputs the segmentation
// oracle does not enumerate.
std::string MessyText(Rng &rng);

// Segments tile the source in order: gaps are whitespace only, each text
// equals its span and has no surrounding whitespace.
bool IsLossless(const Document &doc);

// Offsets where splitting `segment` is legal: strictly inside, next to
// whitespace, with non-blank text on both sides.
std::vector<size_t> SplitPoints(const Document &doc, const Segment &segment);

using Matrix = std::vector<std::vector<size_t>>;

// Kappa from the expanded list of rated items, without row or column sums.
double BruteForceKappa(const Matrix &m);

// Walks every k x k matrix with cells drawn from `values`, comparing
// KappaFromConfusion with BruteForceKappa. Returns the number of non-empty
// matrices checked and adds disagreements beyond `tolerance` to *mismatches.
size_t EnumerateKappa(size_t k, const std::vector<size_t> &values,
                      size_t *mismatches, double tolerance);

// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace argannot::testing

#endif  // ARGANNOT_TESTS_SUPPORT_FIXTURES_H_
