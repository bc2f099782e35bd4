#include "skipgram/tokenize.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace skipgram {

Encoding parse_encoding(std::string_view name) {
  std::string folded(name);
  std::transform(folded.begin(), folded.end(), folded.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (folded == "utf-8" || folded == "utf8") {
    return Encoding::kUtf8;
  }
  if (folded == "ascii" || folded == "us-ascii") {
    return Encoding::kAscii;
  }
  throw std::invalid_argument("unsupported encoding: " + std::string(name));
}

EncodingError::EncodingError(std::size_t byte_offset, const std::string& message)
    : std::runtime_error(message + " at byte offset " + std::to_string(byte_offset)),
      byte_offset_(byte_offset) {}

namespace {

// Length of the well-formed UTF-8 sequence starting at `i`, or 0.
std::size_t utf8_sequence_length(std::string_view text, std::size_t i) {
  const auto byte = [&](std::size_t j) { return static_cast<unsigned char>(text[j]); };
  const unsigned char lead = byte(i);
  if (lead < 0x80) {
    return 1;
  }
  std::size_t len = 0;
  unsigned char lo = 0x80;
  unsigned char hi = 0xBF;
  if (lead >= 0xC2 && lead <= 0xDF) {
    len = 2;
  } else if (lead >= 0xE0 && lead <= 0xEF) {
    len = 3;
    if (lead == 0xE0) lo = 0xA0;  // overlong
    if (lead == 0xED) hi = 0x9F;  // surrogates
  } else if (lead >= 0xF0 && lead <= 0xF4) {
    len = 4;
    if (lead == 0xF0) lo = 0x90;  // overlong
    if (lead == 0xF4) hi = 0x8F;  // > U+10FFFF
  } else {
    return 0;
  }
  if (i + len > text.size()) {
    return 0;
  }
  if (byte(i + 1) < lo || byte(i + 1) > hi) {
    return 0;
  }
  for (std::size_t j = 2; j < len; ++j) {
    if (byte(i + j) < 0x80 || byte(i + j) > 0xBF) {
      return 0;
    }
  }
  return len;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

std::size_t find_invalid_byte(std::string_view text, Encoding encoding) {
  std::size_t i = 0;
  while (i < text.size()) {
    if (encoding == Encoding::kAscii) {
      if (static_cast<unsigned char>(text[i]) >= 0x80) {
        return i;
      }
      ++i;
      continue;
    }
    const std::size_t len = utf8_sequence_length(text, i);
    if (len == 0) {
      return i;
    }
    i += len;
  }
  return std::string_view::npos;
}

TokenSequence tokenize(std::string_view text, const TokenizeOptions& options) {
  if (const std::size_t bad = find_invalid_byte(text, options.encoding);
      bad != std::string_view::npos) {
    throw EncodingError(bad, options.encoding == Encoding::kUtf8 ? "invalid UTF-8"
                                                                 : "non-ASCII byte");
  }
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    const std::size_t begin = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > begin) {
      std::string token(text.substr(begin, i - begin));
      if (options.lowercase) {
        for (char& c : token) {
          if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        }
      }
      tokens.push_back(std::move(token));
    }
  }
  return TokenSequence(std::move(tokens));
}

}  // namespace skipgram
