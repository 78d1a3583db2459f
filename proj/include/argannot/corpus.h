#ifndef ARGANNOT_CORPUS_H_
#define ARGANNOT_CORPUS_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace argannot {

// Half-open interval of Unicode scalar offsets into a document's source text.
struct Span {
  size_t begin = 0;
  size_t end = 0;

  size_t length() const { return end - begin; }
  bool operator==(const Span &) const = default;
};

struct Segment {
  std::string id;
  size_t paragraph_index = 0;
  size_t sentence_index = 0;
  Span span;
  std::string text;  // UTF-8, equals the source substring at span

  bool operator==(const Segment &) const = default;
};

struct Paragraph {
  size_t index = 0;
  std::vector<Segment> segments;

  bool operator==(const Paragraph &) const = default;
};

// Where a segment sits: paragraph, position inside it, and position in the
// whole document.
struct SegmentPosition {
  size_t paragraph = 0;
  size_t sentence = 0;
  size_t ordinal = 0;
};

// Immutable segmented source text. Edits return a new Document. The
// constructor checks every structural invariant and throws on violation.
class Document {
 public:
  Document(std::string id, std::string title, std::u32string source,
           std::vector<Paragraph> paragraphs);
  Document(const Document &other);
  Document &operator=(const Document &other);
  Document(Document &&other) noexcept = default;
  Document &operator=(Document &&other) noexcept = default;

  const std::string &id() const { return id_; }
  const std::string &title() const { return title_; }
  const std::u32string &source() const { return source_; }
  std::string SourceUtf8() const;
  const std::vector<Paragraph> &paragraphs() const { return paragraphs_; }

  size_t num_segments() const { return ordered_.size(); }

  // Segments in document order.
  const std::vector<const Segment *> &segments() const { return ordered_; }

  const Segment *Find(std::string_view segment_id) const;
  std::optional<SegmentPosition> Locate(std::string_view segment_id) const;

  // Throws Error(kUnknownSegment) if absent.
  const Segment &Get(std::string_view segment_id) const;
  SegmentPosition PositionOf(std::string_view segment_id) const;

  bool SameParagraph(std::string_view a, std::string_view b) const;

  // Next unused id of the form "<doc id>-NNNN". Ids minted by the toolkit
  // grow monotonically, so the largest present id bounds every id ever
  // issued for this document.
  std::string NextSegmentId() const;
  static std::string MakeSegmentId(std::string_view doc_id, size_t counter);

  bool operator==(const Document &other) const;

 private:
  void Index();
  std::vector<SegmentPosition> OrderedPositions() const;

  std::string id_;
  std::string title_;
  std::u32string source_;
  std::vector<Paragraph> paragraphs_;
  std::vector<const Segment *> ordered_;
  std::unordered_map<std::string, SegmentPosition> positions_;
};

struct SegmentationOptions {
  bool split_semicolons = true;
  bool split_colons = true;
  bool split_dashes = true;
  // Treat single capital letters followed by a period ("J. Smith") as
  // abbreviations.
  bool initials_are_abbreviations = true;
};

using AbbreviationSet = std::set<std::string, std::less<>>;

// Lexicon shipped with the tool (also in data/abbreviations.txt).
const AbbreviationSet &DefaultAbbreviations();

// One abbreviation per line; blank lines and lines starting with '#' are
// ignored.
AbbreviationSet ParseAbbreviations(std::string_view text);

// Splits UTF-8 plain text into paragraphs (separated by blank lines) and
// sentence-like segments. Throws kEmptyInput when there is nothing but
// whitespace, kInvalidEncoding on malformed UTF-8.
Document SegmentText(std::string_view raw, const AbbreviationSet &abbreviations,
                     const SegmentationOptions &options = {},
                     std::string doc_id = "doc", std::string title = "");

// Splits a segment at an absolute source offset. The offset must lie
// strictly inside the span and touch whitespace on at least one side, so a
// split never cuts a word in half.
Document SplitSegment(const Document &doc, std::string_view segment_id,
                      size_t offset);

// Merges two adjacent segments of the same paragraph (left before right).
Document MergeSegments(const Document &doc, std::string_view left_id,
                       std::string_view right_id);

struct TextDescriptives {
  size_t n_sentences = 0;
  size_t n_words = 0;
  size_t n_distinct_words = 0;

  bool operator==(const TextDescriptives &) const = default;
};

// Words are whitespace tokens with leading/trailing punctuation stripped;
// punctuation-only tokens are dropped. Distinct words are case-folded.
TextDescriptives ComputeTextDescriptives(const Document &doc);

// Document file: {id, title, scheme_version, source_text, paragraphs}, keys
// in that order, pretty-printed, newline-terminated.
std::string SaveDocument(const Document &doc);

// Accepts files with or without source_text. Without it, the source is
// rebuilt from the segment spans with blank gaps.
Document LoadDocument(std::string_view bytes);

}  // namespace argannot

#endif  // ARGANNOT_CORPUS_H_
