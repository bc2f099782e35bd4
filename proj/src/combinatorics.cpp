#include "skipgram/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace skipgram {

Count binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) {
    return 0;
  }
  const std::int64_t m = std::min(b, a - b);
  Count result = 1;
  // After step i the running value is C(a-m+i, i), so each division is exact.
  for (std::int64_t i = 1; i <= m; ++i) {
    result *= (a - m + i);
    result = exact_divide(result, i);
  }
  return result;
}

namespace {

void require_nonnegative(std::int64_t a, std::int64_t k, const char* what) {
  if (a < 0 || k < 0) {
    throw std::invalid_argument(std::string(what) + ": arguments must be nonnegative");
  }
}

}  // namespace

Count hockey_stick_sum(std::int64_t a, std::int64_t k) {
  require_nonnegative(a, k, "hockey_stick_sum");
  Count total = 0;
  for (std::int64_t i = 0; i <= k; ++i) {
    total += binomial(a + i, a);
  }
  return total;
}

Count weighted_identity_sum(std::int64_t a, std::int64_t k) {
  require_nonnegative(a, k, "weighted_identity_sum");
  Count total = 0;
  for (std::int64_t i = 0; i <= k; ++i) {
    total += i * binomial(a + i, a);
  }
  return total;
}

}  // namespace skipgram
