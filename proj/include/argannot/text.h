#ifndef ARGANNOT_TEXT_H_
#define ARGANNOT_TEXT_H_

#include <string>
#include <string_view>

namespace argannot {

// UTF-8 <-> Unicode scalar values. Decoding rejects malformed sequences,
// surrogates and overlong forms with kInvalidEncoding.
std::u32string DecodeUtf8(std::string_view utf8);
std::string EncodeUtf8(std::u32string_view text);

// True if the input starts with the UTF-8 byte order mark.
bool HasUtf8Bom(std::string_view bytes);

// Character classes used by the segmenter and tokenizer. Coverage is ASCII,
// Latin-1 and the general punctuation block, which is what English
// scholarly text needs.
bool IsSpace(char32_t c);
bool IsUpper(char32_t c);
bool IsLetter(char32_t c);
bool IsDigit(char32_t c);
bool IsAlnum(char32_t c);
bool IsPunctuation(char32_t c);
bool IsOpeningMark(char32_t c);  // ( [ { and opening quotes
bool IsClosingMark(char32_t c);  // ) ] } and closing quotes

// Simple case folding (ASCII, Latin-1, Latin Extended-A, Greek, Cyrillic).
char32_t FoldCase(char32_t c);
std::u32string FoldCase(std::u32string_view text);

// Trims IsSpace characters from both ends.
std::u32string_view Trim(std::u32string_view text);

}  // namespace argannot

#endif  // ARGANNOT_TEXT_H_
