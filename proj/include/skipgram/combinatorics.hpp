#pragma once

#include <cstdint>

#include "skipgram/count.hpp"

namespace skipgram {

/// C(a, b), total over all integers: 0 when b < 0, a < 0 or b > a.
/// Uses the multiplicative formula with an exact division at every step.
Count binomial(std::int64_t a, std::int64_t b);

/// Sum_{i=0..k} C(a+i, a), summed term by term. Equals C(a+k+1, a+1).
Count hockey_stick_sum(std::int64_t a, std::int64_t k);

/// Sum_{i=0..k} i * C(a+i, a), summed term by term.
/// (a+2) times this equals k(k+1) C(a+k+1, a).
Count weighted_identity_sum(std::int64_t a, std::int64_t k);

}  // namespace skipgram
