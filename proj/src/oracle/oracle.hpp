#pragma once

// Brute-force reference for skip-gram counts. Walks every subset of corpus
// positions as a bitmask and keeps those of size n whose span leaves at most
// k skipped positions. Deliberately naive; used by tests and `verify` only.

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "skipgram/count.hpp"

namespace skipgram::oracle {

struct OracleConfig {
  /// Largest corpus length accepted; 2^L masks are visited.
  std::size_t max_length = 20;
};

/// Hard ceiling on OracleConfig::max_length (masks are 64-bit).
inline constexpr std::size_t kOracleHardLimit = 40;

using PositionTuple = std::vector<std::size_t>;

/// Every ascending n-tuple over [0, L) with (last - first) - (n - 1) <= k.
/// Throws std::out_of_range if L exceeds the configured bound.
std::set<PositionTuple> oracle_occurrences(std::size_t length, std::size_t n, std::uint64_t k,
                                           const OracleConfig& config = {});

Count oracle_count(std::size_t length, std::size_t n, std::uint64_t k,
                   const OracleConfig& config = {});

}  // namespace skipgram::oracle
