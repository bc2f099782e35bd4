#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "skipgram/enumeration.hpp"

namespace skipgram {

enum class Encoding { kUtf8, kAscii };

/// Parses "utf-8" / "utf8" / "ascii" (case-insensitive). Throws
/// std::invalid_argument for anything else.
Encoding parse_encoding(std::string_view name);

/// Input bytes that are not valid in the declared encoding.
class EncodingError : public std::runtime_error {
 public:
  EncodingError(std::size_t byte_offset, const std::string& message);
  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

struct TokenizeOptions {
  bool lowercase = false;  // ASCII letters only
  Encoding encoding = Encoding::kUtf8;
};

/// Validates `text`, then splits it on runs of ASCII whitespace.
TokenSequence tokenize(std::string_view text, const TokenizeOptions& options = {});

/// Offset of the first byte that is not valid in `encoding`, or npos.
std::size_t find_invalid_byte(std::string_view text, Encoding encoding);

}  // namespace skipgram
