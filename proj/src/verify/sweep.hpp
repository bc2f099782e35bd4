#pragma once

// Grid sweep comparing every counting route for (L, n, k) in a box:
// closed form, summation form, enumeration and the brute-force oracle, plus
// the trigram reference where it is defined.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "oracle/oracle.hpp"
#include "skipgram/count.hpp"

namespace skipgram::verify {

struct GridBounds {
  std::size_t max_length = 0;
  std::size_t max_n = 0;
  std::size_t max_k = 0;

  std::size_t cell_count() const { return (max_length + 1) * (max_n + 1) * (max_k + 1); }
};

struct CellResult {
  std::size_t length = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  Count closed;
  Count sum;
  Count enumerated;
  Count oracle;
  std::optional<Count> trigram;  // only for n = 3, L >= 3, k <= L - 3

  bool consistent() const;
  std::string describe() const;
};

struct SweepReport {
  std::size_t cells = 0;
  std::vector<CellResult> mismatches;  // ordered by (L, n, k)

  bool ok() const { return mismatches.empty(); }
};

CellResult evaluate_cell(std::size_t length, std::size_t n, std::size_t k,
                         const oracle::OracleConfig& config = {});

/// Reference sweep, one cell after another.
SweepReport verify_grid_serial(const GridBounds& bounds, const oracle::OracleConfig& config = {});

/// Cells evaluated concurrently; report identical to verify_grid_serial.
/// Throws std::out_of_range when max_length exceeds the oracle bound.
SweepReport verify_grid(const GridBounds& bounds, const oracle::OracleConfig& config = {});

}  // namespace skipgram::verify
