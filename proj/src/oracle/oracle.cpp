#include "oracle/oracle.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace skipgram::oracle {

namespace {

void check_bound(std::size_t length, const OracleConfig& config) {
  const std::size_t bound = config.max_length < kOracleHardLimit ? config.max_length
                                                                 : kOracleHardLimit;
  if (length > bound) {
    throw std::out_of_range("oracle: corpus length " + std::to_string(length) +
                            " exceeds the safety bound " + std::to_string(bound));
  }
}

bool qualifies(std::uint64_t mask, std::size_t n, std::uint64_t k) {
  if (static_cast<std::size_t>(std::popcount(mask)) != n) {
    return false;
  }
  const auto first = static_cast<std::uint64_t>(std::countr_zero(mask));
  const auto last = static_cast<std::uint64_t>(std::bit_width(mask)) - 1;
  return (last - first) - (n - 1) <= k;
}

template <typename Visit>
void for_each_match(std::size_t length, std::size_t n, std::uint64_t k, Visit&& visit) {
  if (n == 0 || n > length) {
    return;
  }
  const std::uint64_t end = std::uint64_t{1} << length;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    if (qualifies(mask, n, k)) {
      visit(mask);
    }
  }
}

}  // namespace

std::set<PositionTuple> oracle_occurrences(std::size_t length, std::size_t n, std::uint64_t k,
                                           const OracleConfig& config) {
  check_bound(length, config);
  std::set<PositionTuple> result;
  for_each_match(length, n, k, [&](std::uint64_t mask) {
    PositionTuple tuple;
    for (std::size_t bit = 0; bit < length; ++bit) {
      if (mask & (std::uint64_t{1} << bit)) {
        tuple.push_back(bit);
      }
    }
    result.insert(std::move(tuple));
  });
  return result;
}

Count oracle_count(std::size_t length, std::size_t n, std::uint64_t k,
                   const OracleConfig& config) {
  check_bound(length, config);
  std::uint64_t total = 0;
  for_each_match(length, n, k, [&](std::uint64_t) { ++total; });
  return Count(total);
}

}  // namespace skipgram::oracle
