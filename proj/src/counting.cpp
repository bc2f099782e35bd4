#include "skipgram/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "skipgram/combinatorics.hpp"

namespace skipgram {

namespace {

void check_range(std::uint64_t value, const char* name) {
  if (value > kMaxCountingArgument) {
    throw std::out_of_range(std::string(name) + " exceeds the supported range (2^62)");
  }
}

void check_inputs(CorpusLength length, std::uint64_t n, std::uint64_t k) {
  check_range(length.value, "L");
  check_range(n, "n");
  check_range(k, "k");
}

std::int64_t as_signed(std::uint64_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

std::uint64_t effective_skip(CorpusLength length, SkipGramSpec spec) {
  if (spec.n == 0 || length.value < spec.n) {
    return 0;
  }
  return std::min(length.value - spec.n + 1, spec.k);
}

Count exact_skip_count(CorpusLength length, std::uint64_t n, std::uint64_t skips) {
  check_inputs(length, n, skips);
  const std::uint64_t L = length.value;
  if (n == 0) {
    return 0;
  }
  // Windows of length n + skips must fit: L - n - skips + 1 > 0.
  if (n + skips > L) {
    return 0;
  }
  const std::uint64_t windows = L - n - skips + 1;
  if (n == 1) {
    return skips == 0 ? Count(L) : Count(0);
  }
  // Choose which `skips` of the n + skips - 2 interior window slots are dropped.
  return binomial(as_signed(n + skips - 2), as_signed(skips)) * windows;
}

Count total_count_sum(CorpusLength length, SkipGramSpec spec) {
  check_inputs(length, spec.n, spec.k);
  Count total = 0;
  if (spec.n == 0 || length.value < spec.n) {
    return total;
  }
  // Terms with skips > L - n vanish.
  const std::uint64_t last = std::min(spec.k, length.value - spec.n);
  for (std::uint64_t i = 0; i <= last; ++i) {
    total += exact_skip_count(length, spec.n, i);
  }
  return total;
}

Count total_count_closed(CorpusLength length, SkipGramSpec spec) {
  check_inputs(length, spec.n, spec.k);
  if (spec.n == 0 || length.value < spec.n) {
    return 0;
  }
  const Count L = length.value;
  const Count n = spec.n;
  const std::uint64_t kp = effective_skip(length, spec);
  const Count k_eff = kp;

  const Count factor = L * n + n + k_eff - n * n - n * k_eff;
  const Count numerator =
      factor * binomial(as_signed(spec.n - 1 + kp), as_signed(spec.n - 1));
  return exact_divide(numerator, n);
}

Count trigram_count_reference(CorpusLength length, std::uint64_t k) {
  check_inputs(length, 3, k);
  const std::uint64_t L = length.value;
  if (L < 3 || k > L - 3) {
    throw std::domain_error("trigram_count_reference: requires L >= 3 and k <= L - 3 (L=" +
                            std::to_string(L) + ", k=" + std::to_string(k) + ")");
  }
  const Count kk = k;
  const Count numerator = (kk + 1) * (kk + 2) * (3 * Count(L) - 2 * kk - 6);
  return exact_divide(numerator, 6);
}

}  // namespace skipgram
