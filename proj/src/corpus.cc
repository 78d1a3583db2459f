#include "argannot/corpus.h"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "argannot/error.h"
#include "argannot/scheme.h"
#include "argannot/text.h"
#include "json.hpp"

namespace argannot {

using json = nlohmann::ordered_json;

Document::Document(std::string id, std::string title, std::u32string source,
                   std::vector<Paragraph> paragraphs)
    : id_(std::move(id)),
      title_(std::move(title)),
      source_(std::move(source)),
      paragraphs_(std::move(paragraphs)) {
  Index();
}

Document::Document(const Document &other)
    : id_(other.id_),
      title_(other.title_),
      source_(other.source_),
      paragraphs_(other.paragraphs_),
      positions_(other.positions_) {
  for (const SegmentPosition &position : OrderedPositions()) {
    ordered_.push_back(
        &paragraphs_[position.paragraph].segments[position.sentence]);
  }
}

Document &Document::operator=(const Document &other) {
  if (this != &other) *this = Document(other);
  return *this;
}

std::vector<SegmentPosition> Document::OrderedPositions() const {
  std::vector<SegmentPosition> ordered(positions_.size());
  for (const auto &[id, position] : positions_) ordered[position.ordinal] = position;
  return ordered;
}

void Document::Index() {
  auto bad = [this](const std::string &what) {
    throw Error(ErrorCode::kValidationError,
                "document '" + id_ + "': " + what);
  };
  ordered_.clear();
  positions_.clear();
  size_t previous_end = 0;
  bool first = true;
  for (size_t p = 0; p < paragraphs_.size(); ++p) {
    const Paragraph &paragraph = paragraphs_[p];
    if (paragraph.index != p) bad("paragraph indices are not contiguous");
    if (paragraph.segments.empty()) {
      bad("paragraph " + std::to_string(p) + " has no segments");
    }
    for (size_t s = 0; s < paragraph.segments.size(); ++s) {
      const Segment &segment = paragraph.segments[s];
      if (segment.paragraph_index != p || segment.sentence_index != s) {
        bad("segment '" + segment.id + "' has inconsistent indices");
      }
      if (segment.id.empty()) bad("empty segment id");
      if (segment.span.begin >= segment.span.end ||
          segment.span.end > source_.size()) {
        bad("segment '" + segment.id + "' span lies outside the source");
      }
      if (!first && segment.span.begin < previous_end) {
        bad("segment '" + segment.id + "' overlaps or precedes its neighbour");
      }
      std::u32string_view piece(source_.data() + segment.span.begin,
                                segment.span.length());
      if (Trim(piece).empty()) bad("segment '" + segment.id + "' is blank");
      if (EncodeUtf8(piece) != segment.text) {
        bad("segment '" + segment.id + "' text does not match its span");
      }
      SegmentPosition position{p, s, ordered_.size()};
      if (!positions_.emplace(segment.id, position).second) {
        bad("duplicate segment id '" + segment.id + "'");
      }
      ordered_.push_back(&segment);
      previous_end = segment.span.end;
      first = false;
    }
  }
}

std::string Document::SourceUtf8() const { return EncodeUtf8(source_); }

const Segment *Document::Find(std::string_view segment_id) const {
  auto it = positions_.find(std::string(segment_id));
  if (it == positions_.end()) return nullptr;
  return ordered_[it->second.ordinal];
}

std::optional<SegmentPosition> Document::Locate(
    std::string_view segment_id) const {
  auto it = positions_.find(std::string(segment_id));
  if (it == positions_.end()) return std::nullopt;
  return it->second;
}

const Segment &Document::Get(std::string_view segment_id) const {
  const Segment *segment = Find(segment_id);
  if (segment == nullptr) {
    throw Error(ErrorCode::kUnknownSegment,
                "'" + std::string(segment_id) + "' is not a segment of '" +
                    id_ + "'");
  }
  return *segment;
}

SegmentPosition Document::PositionOf(std::string_view segment_id) const {
  auto position = Locate(segment_id);
  if (!position) Get(segment_id);  // throws
  return *position;
}

bool Document::SameParagraph(std::string_view a, std::string_view b) const {
  auto pa = Locate(a);
  auto pb = Locate(b);
  return pa && pb && pa->paragraph == pb->paragraph;
}

std::string Document::MakeSegmentId(std::string_view doc_id, size_t counter) {
  char digits[32];
  std::snprintf(digits, sizeof(digits), "%04zu", counter);
  return std::string(doc_id) + "-" + digits;
}

std::string Document::NextSegmentId() const {
  size_t highest = 0;
  const std::string prefix = id_ + "-";
  for (const Segment *segment : ordered_) {
    std::string_view id = segment->id;
    if (id.size() <= prefix.size() || id.substr(0, prefix.size()) != prefix) {
      continue;
    }
    std::string_view digits = id.substr(prefix.size());
    size_t value = 0;
    auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc() && end == digits.data() + digits.size()) {
      highest = std::max(highest, value);
    }
  }
  std::string candidate = MakeSegmentId(id_, highest + 1);
  for (size_t next = highest + 2; Find(candidate) != nullptr; ++next) {
    candidate = MakeSegmentId(id_, next);
  }
  return candidate;
}

bool Document::operator==(const Document &other) const {
  return id_ == other.id_ && title_ == other.title_ &&
         source_ == other.source_ && paragraphs_ == other.paragraphs_;
}

const AbbreviationSet &DefaultAbbreviations() {
  static const AbbreviationSet *set = new AbbreviationSet{
      "e.g.", "i.e.", "cf.", "etc.", "viz.", "vs.", "al.", "ibid.",
      "U.S.", "U.K.", "U.N.", "E.U.", "U.S.S.R.", "Mr.", "Mrs.", "Ms.",
      "Dr.", "Prof.", "St.", "Jr.", "Sr.", "No.", "no.", "Nos.", "Vol.",
      "vol.", "Vols.", "pp.", "p.", "ed.", "eds.", "Ed.", "Eds.", "ch.",
      "Ch.", "sec.", "Sec.", "fig.", "Fig.", "approx.", "ca.", "c.",
      "Jan.", "Feb.", "Mar.", "Apr.", "Jun.", "Jul.", "Aug.", "Sep.",
      "Sept.", "Oct.", "Nov.", "Dec.", "Gen.", "Col.", "Gov.", "Sen.",
      "Rep.", "Inc.", "Co.", "Corp.", "Ltd.", "esp.", "resp.",
  };
  return *set;
}

AbbreviationSet ParseAbbreviations(std::string_view text) {
  AbbreviationSet set;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
      line.remove_prefix(1);
    }
    if (!line.empty() && line.front() != '#') set.emplace(line);
    start = end + 1;
  }
  return set;
}

namespace {

bool IsTerminator(char32_t c) {
  return c == U'.' || c == U'?' || c == U'!' || c == 0x2026;
}

bool IsClauseDash(char32_t c) { return c == 0x2014 || c == 0x2013; }

class Segmenter {
 public:
  Segmenter(const std::u32string &source, const AbbreviationSet &abbreviations,
            const SegmentationOptions &options)
      : src_(source), abbreviations_(abbreviations), options_(options) {
    for (const std::string &entry : abbreviations_) {
      folded_.insert(EncodeUtf8(FoldCase(DecodeUtf8(entry))));
    }
  }

  // Segment spans of the paragraph occupying [begin, end).
  std::vector<Span> Split(size_t begin, size_t end) const {
    std::vector<Span> spans;
    size_t start = SkipSpace(begin, end);
    size_t pos = start;
    while (pos < end) {
      size_t next = pos + 1;
      size_t boundary = BoundaryAt(pos, start, begin, end, &next);
      if (boundary != kNoBoundary && HasAlnum(start, boundary)) {
        spans.push_back(TrimSpan(start, boundary));
        start = SkipSpace(boundary, end);
        pos = start;
      } else {
        pos = next;
      }
    }
    if (start < end) {
      Span tail = TrimSpan(start, end);
      if (tail.begin < tail.end) spans.push_back(tail);
    }
    return spans;
  }

 private:
  static constexpr size_t kNoBoundary = static_cast<size_t>(-1);

  // Returns the exclusive end of the left segment if a boundary is triggered
  // by the character at pos; sets *next to where scanning resumes otherwise.
  size_t BoundaryAt(size_t pos, size_t seg_start, size_t para_begin,
                    size_t end, size_t *next) const {
    char32_t c = src_[pos];
    if (IsTerminator(c)) {
      size_t run_end = pos;
      while (run_end < end && IsTerminator(src_[run_end])) ++run_end;
      *next = run_end;
      if (run_end - pos == 1 && c == U'.' &&
          IsAbbreviation(pos, std::max(seg_start, para_begin))) {
        return kNoBoundary;
      }
      size_t after = run_end;
      while (after < end && IsClosingMark(src_[after])) ++after;
      if (after == end) return after;
      if (!IsSpace(src_[after])) return kNoBoundary;
      size_t look = SkipSpace(after, end);
      while (look < end && IsOpeningMark(src_[look])) ++look;
      if (look < end && IsUpper(src_[look])) return after;
      return kNoBoundary;
    }
    if (c == U';' && options_.split_semicolons) {
      size_t after = pos + 1;
      if (after == end || IsSpace(src_[after])) return after;
      return kNoBoundary;
    }
    if (c == U':' && options_.split_colons) {
      size_t after = pos + 1;
      if (after >= end || !IsSpace(src_[after])) return kNoBoundary;
      size_t look = SkipSpace(after, end);
      while (look < end && IsOpeningMark(src_[look])) ++look;
      if (look < end && IsAlnum(src_[look])) return after;
      return kNoBoundary;
    }
    if (options_.split_dashes && pos > para_begin && IsSpace(src_[pos - 1])) {
      size_t after = kNoBoundary;
      if (IsClauseDash(c)) {
        after = pos + 1;
      } else if (c == U'-' && pos + 1 < end && src_[pos + 1] == U'-' &&
                 (pos + 2 == end || src_[pos + 2] != U'-')) {
        after = pos + 2;
      }
      if (after != kNoBoundary) {
        *next = after;
        if (after < end && IsSpace(src_[after])) return after;
      }
    }
    return kNoBoundary;
  }

  // The period at pos closes a lexicon entry, an initial, or sits inside a
  // number.
  bool IsAbbreviation(size_t pos, size_t floor) const {
    if (pos > floor && pos + 1 < src_.size() && IsDigit(src_[pos - 1]) &&
        IsDigit(src_[pos + 1])) {
      return true;
    }
    size_t token = pos;
    while (token > floor && !IsSpace(src_[token - 1])) --token;
    while (token < pos && IsOpeningMark(src_[token])) ++token;
    std::u32string_view word(src_.data() + token, pos + 1 - token);
    if (word.size() == 1) return false;
    std::string utf8 = EncodeUtf8(word);
    if (abbreviations_.count(utf8) > 0) return true;
    if (folded_.count(EncodeUtf8(FoldCase(word))) > 0) return true;
    return options_.initials_are_abbreviations && word.size() == 2 &&
           IsUpper(word[0]);
  }

  size_t SkipSpace(size_t pos, size_t end) const {
    while (pos < end && IsSpace(src_[pos])) ++pos;
    return pos;
  }

  bool HasAlnum(size_t begin, size_t end) const {
    for (size_t i = begin; i < end; ++i) {
      if (IsAlnum(src_[i])) return true;
    }
    return false;
  }

  Span TrimSpan(size_t begin, size_t end) const {
    while (begin < end && IsSpace(src_[begin])) ++begin;
    while (end > begin && IsSpace(src_[end - 1])) --end;
    return {begin, end};
  }

  const std::u32string &src_;
  const AbbreviationSet &abbreviations_;
  const SegmentationOptions &options_;
  std::set<std::string> folded_;
};

// Paragraph extents: maximal runs of non-blank lines, trimmed.
std::vector<Span> FindParagraphs(const std::u32string &source) {
  std::vector<Span> paragraphs;
  size_t line_start = 0;
  constexpr size_t kClosed = std::u32string::npos;
  size_t open_begin = kClosed;
  size_t last_content_end = 0;
  while (line_start <= source.size()) {
    size_t line_end = source.find(U'\n', line_start);
    if (line_end == std::u32string::npos) line_end = source.size();
    size_t first = line_start;
    while (first < line_end && IsSpace(source[first])) ++first;
    if (first == line_end) {
      if (open_begin != kClosed) {
        paragraphs.push_back({open_begin, last_content_end});
        open_begin = kClosed;
      }
    } else {
      size_t last = line_end;
      while (last > first && IsSpace(source[last - 1])) --last;
      if (open_begin == kClosed) open_begin = first;
      last_content_end = last;
    }
    line_start = line_end + 1;
  }
  if (open_begin != kClosed) paragraphs.push_back({open_begin, last_content_end});
  return paragraphs;
}

Segment MakeSegment(const std::u32string &source, std::string id,
                    size_t paragraph, size_t sentence, Span span) {
  Segment segment;
  segment.id = std::move(id);
  segment.paragraph_index = paragraph;
  segment.sentence_index = sentence;
  segment.span = span;
  segment.text = EncodeUtf8(
      std::u32string_view(source.data() + span.begin, span.length()));
  return segment;
}

void Renumber(std::vector<Paragraph> &paragraphs) {
  for (size_t p = 0; p < paragraphs.size(); ++p) {
    paragraphs[p].index = p;
    for (size_t s = 0; s < paragraphs[p].segments.size(); ++s) {
      paragraphs[p].segments[s].paragraph_index = p;
      paragraphs[p].segments[s].sentence_index = s;
    }
  }
}

size_t IdCounter(const std::string &id) {
  size_t dash = id.rfind('-');
  size_t value = 0;
  if (dash != std::string::npos) {
    std::from_chars(id.data() + dash + 1, id.data() + id.size(), value);
  }
  return value;
}

}  // namespace

Document SegmentText(std::string_view raw, const AbbreviationSet &abbreviations,
                     const SegmentationOptions &options, std::string doc_id,
                     std::string title) {
  if (HasUtf8Bom(raw)) {
    throw Error(ErrorCode::kInvalidEncoding,
                "input starts with a byte order mark; save it as UTF-8 "
                "without BOM");
  }
  std::u32string source = DecodeUtf8(raw);
  if (Trim(source).empty()) {
    throw Error(ErrorCode::kEmptyInput, "input contains no text");
  }
  Segmenter segmenter(source, abbreviations, options);
  std::vector<Paragraph> paragraphs;
  size_t counter = 1;
  for (const Span &extent : FindParagraphs(source)) {
    Paragraph paragraph;
    paragraph.index = paragraphs.size();
    for (const Span &span : segmenter.Split(extent.begin, extent.end)) {
      paragraph.segments.push_back(MakeSegment(
          source, Document::MakeSegmentId(doc_id, counter++), paragraph.index,
          paragraph.segments.size(), span));
    }
    if (!paragraph.segments.empty()) paragraphs.push_back(std::move(paragraph));
  }
  Renumber(paragraphs);
  return Document(std::move(doc_id), std::move(title), std::move(source),
                  std::move(paragraphs));
}

Document SplitSegment(const Document &doc, std::string_view segment_id,
                      size_t offset) {
  const Segment &segment = doc.Get(segment_id);
  const std::u32string &src = doc.source();
  if (offset <= segment.span.begin || offset >= segment.span.end) {
    throw Error(ErrorCode::kOffsetOutOfRange,
                "offset " + std::to_string(offset) + " is not strictly inside " +
                    segment.id + " [" + std::to_string(segment.span.begin) +
                    ", " + std::to_string(segment.span.end) + ")");
  }
  if (!IsSpace(src[offset - 1]) && !IsSpace(src[offset])) {
    throw Error(ErrorCode::kOffsetOutOfRange,
                "offset " + std::to_string(offset) + " falls inside a word of " +
                    segment.id);
  }
  Span left{segment.span.begin, offset};
  while (IsSpace(src[left.end - 1])) --left.end;
  Span right{offset, segment.span.end};
  while (IsSpace(src[right.begin])) ++right.begin;

  std::string left_id = doc.NextSegmentId();
  std::string right_id =
      Document::MakeSegmentId(doc.id(), IdCounter(left_id) + 1);
  std::vector<Paragraph> paragraphs = doc.paragraphs();
  auto &segments = paragraphs[segment.paragraph_index].segments;
  size_t at = segment.sentence_index;
  size_t p = segment.paragraph_index;
  segments[at] = MakeSegment(src, left_id, p, at, left);
  segments.insert(segments.begin() + at + 1,
                  MakeSegment(src, right_id, p, at + 1, right));
  Renumber(paragraphs);
  return Document(doc.id(), doc.title(), src, std::move(paragraphs));
}

Document MergeSegments(const Document &doc, std::string_view left_id,
                       std::string_view right_id) {
  SegmentPosition left = doc.PositionOf(left_id);
  SegmentPosition right = doc.PositionOf(right_id);
  if (left.paragraph != right.paragraph) {
    throw Error(ErrorCode::kCrossParagraph,
                std::string(left_id) + " and " + std::string(right_id) +
                    " are in different paragraphs");
  }
  if (right.sentence != left.sentence + 1) {
    throw Error(ErrorCode::kNotAdjacent,
                std::string(left_id) + " is not immediately followed by " +
                    std::string(right_id));
  }
  std::vector<Paragraph> paragraphs = doc.paragraphs();
  auto &segments = paragraphs[left.paragraph].segments;
  Span span{segments[left.sentence].span.begin,
            segments[right.sentence].span.end};
  segments[left.sentence] = MakeSegment(doc.source(), doc.NextSegmentId(),
                                        left.paragraph, left.sentence, span);
  segments.erase(segments.begin() + right.sentence);
  Renumber(paragraphs);
  return Document(doc.id(), doc.title(), doc.source(), std::move(paragraphs));
}

TextDescriptives ComputeTextDescriptives(const Document &doc) {
  TextDescriptives stats;
  std::set<std::u32string> types;
  for (const Segment *segment : doc.segments()) {
    ++stats.n_sentences;
    std::u32string text = DecodeUtf8(segment->text);
    size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && IsSpace(text[i])) ++i;
      size_t begin = i;
      while (i < text.size() && !IsSpace(text[i])) ++i;
      size_t end = i;
      while (begin < end && IsPunctuation(text[begin])) ++begin;
      while (end > begin && IsPunctuation(text[end - 1])) --end;
      if (begin == end) continue;
      ++stats.n_words;
      types.insert(FoldCase(std::u32string_view(text).substr(begin, end - begin)));
    }
  }
  stats.n_distinct_words = types.size();
  return stats;
}

std::string SaveDocument(const Document &doc) {
  json root;
  root["id"] = doc.id();
  root["title"] = doc.title();
  root["scheme_version"] = kSchemeVersion;
  root["source_text"] = doc.SourceUtf8();
  json paragraphs = json::array();
  for (const Paragraph &paragraph : doc.paragraphs()) {
    json segments = json::array();
    for (const Segment &segment : paragraph.segments) {
      json row;
      row["id"] = segment.id;
      row["start"] = segment.span.begin;
      row["end"] = segment.span.end;
      row["text"] = segment.text;
      segments.push_back(std::move(row));
    }
    json entry;
    entry["index"] = paragraph.index;
    entry["segments"] = std::move(segments);
    paragraphs.push_back(std::move(entry));
  }
  root["paragraphs"] = std::move(paragraphs);
  return root.dump(2) + "\n";
}

Document LoadDocument(std::string_view bytes) {
  if (HasUtf8Bom(bytes)) {
    throw Error(ErrorCode::kInvalidEncoding,
                "document file starts with a byte order mark");
  }
  try {
    json root = json::parse(bytes);
    if (root.contains("scheme_version") &&
        root.at("scheme_version").get<std::string>() != kSchemeVersion) {
      throw Error(ErrorCode::kSchemaVersionMismatch,
                  "document uses scheme " +
                      root.at("scheme_version").get<std::string>() +
                      ", expected " + std::string(kSchemeVersion));
    }
    std::vector<Paragraph> paragraphs;
    size_t extent = 0;
    for (const json &entry : root.at("paragraphs")) {
      Paragraph paragraph;
      paragraph.index = entry.at("index").get<size_t>();
      for (const json &row : entry.at("segments")) {
        Segment segment;
        segment.id = row.at("id").get<std::string>();
        segment.span.begin = row.at("start").get<size_t>();
        segment.span.end = row.at("end").get<size_t>();
        segment.text = row.at("text").get<std::string>();
        segment.paragraph_index = paragraph.index;
        segment.sentence_index = paragraph.segments.size();
        extent = std::max(extent, segment.span.end);
        paragraph.segments.push_back(std::move(segment));
      }
      paragraphs.push_back(std::move(paragraph));
    }
    std::u32string source;
    if (root.contains("source_text")) {
      source = DecodeUtf8(root.at("source_text").get<std::string>());
    } else {
      source.assign(extent, U' ');
      for (size_t p = 0; p < paragraphs.size(); ++p) {
        for (const Segment &segment : paragraphs[p].segments) {
          std::u32string text = DecodeUtf8(segment.text);
          if (segment.span.end < segment.span.begin ||
              text.size() != segment.span.length()) {
            throw Error(ErrorCode::kParseError,
                        "segment '" + segment.id +
                            "' text length does not match its span");
          }
          std::copy(text.begin(), text.end(),
                    source.begin() + segment.span.begin);
        }
        // Mark the paragraph break right after each paragraph's last segment.
        if (p + 1 < paragraphs.size() && !paragraphs[p].segments.empty() &&
            !paragraphs[p + 1].segments.empty()) {
          size_t gap = paragraphs[p].segments.back().span.end;
          size_t next = paragraphs[p + 1].segments.front().span.begin;
          for (size_t i = gap; i < next; ++i) source[i] = U'\n';
        }
      }
    }
    return Document(root.at("id").get<std::string>(),
                    root.value("title", std::string()), std::move(source),
                    std::move(paragraphs));
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kParseError,
                std::string("malformed document file: ") + e.what());
  }
}

}  // namespace argannot
