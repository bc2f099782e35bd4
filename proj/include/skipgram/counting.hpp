#pragma once

#include <cstdint>

#include "skipgram/count.hpp"

namespace skipgram {

/// Largest accepted value for L, n or k. Keeps derived binomial arguments
/// such as n + k - 2 inside int64.
inline constexpr std::uint64_t kMaxCountingArgument = std::uint64_t{1} << 62;

/// Gram length `n` and maximum total skips `k`.
struct SkipGramSpec {
  std::uint64_t n = 0;
  std::uint64_t k = 0;

  friend bool operator==(const SkipGramSpec&, const SkipGramSpec&) = default;
};

/// Number of tokens in a corpus.
struct CorpusLength {
  std::uint64_t value = 0;

  constexpr CorpusLength() = default;
  constexpr explicit CorpusLength(std::uint64_t v) : value(v) {}
  friend auto operator<=>(const CorpusLength&, const CorpusLength&) = default;
};

/// k' = min(L - n + 1, k), the skip budget after clamping. Only meaningful
/// for 1 <= n <= L.
std::uint64_t effective_skip(CorpusLength length, SkipGramSpec spec);

/// Number of position tuples i_1 < ... < i_n in a corpus of length L whose
/// span i_n - i_1 is exactly n + skips - 1. Returns 0 for every degenerate
/// shape (n = 0, window longer than the corpus, n = 1 with skips > 0).
Count exact_skip_count(CorpusLength length, std::uint64_t n, std::uint64_t skips);

/// Sum of exact_skip_count over skips = 0..k.
Count total_count_sum(CorpusLength length, SkipGramSpec spec);

/// Closed form (Ln + n + k' - n^2 - nk') / n * C(n - 1 + k', n - 1).
/// Zero when n = 0 or L < n. Throws InvariantViolation if the final division
/// by n is inexact.
Count total_count_closed(CorpusLength length, SkipGramSpec spec);

/// (k+1)(k+2)(3L - 2k - 6) / 6, the older k-skip-trigram count.
/// Throws std::domain_error unless L >= 3 and k <= L - 3.
Count trigram_count_reference(CorpusLength length, std::uint64_t k);

}  // namespace skipgram
