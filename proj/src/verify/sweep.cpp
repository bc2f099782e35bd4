#include "verify/sweep.hpp"

#include <cstdint>
#include <exception>
#include <sstream>
#include <stdexcept>

#include "skipgram/counting.hpp"
#include "skipgram/enumeration.hpp"

namespace skipgram::verify {

namespace {

TokenSequence synthetic_sequence(std::size_t length) {
  std::vector<std::string> tokens;
  tokens.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    tokens.push_back("t" + std::to_string(i));
  }
  return TokenSequence(std::move(tokens));
}

void check_bounds(const GridBounds& bounds, const oracle::OracleConfig& config) {
  if (bounds.max_length > config.max_length || bounds.max_length > oracle::kOracleHardLimit) {
    throw std::out_of_range("max length " + std::to_string(bounds.max_length) +
                            " exceeds the oracle safety bound " +
                            std::to_string(config.max_length));
  }
}

CellResult evaluate(const TokenSequence& seq, std::size_t n, std::size_t k,
                    const oracle::OracleConfig& config) {
  const std::size_t length = seq.size();
  const CorpusLength L(length);
  const SkipGramSpec spec{n, k};
  CellResult cell;
  cell.length = length;
  cell.n = n;
  cell.k = k;
  cell.closed = total_count_closed(L, spec);
  cell.sum = total_count_sum(L, spec);
  cell.enumerated = count_by_enumeration(seq, spec);
  cell.oracle = oracle::oracle_count(length, n, k, config);
  if (n == 3 && length >= 3 && k <= length - 3) {
    cell.trigram = trigram_count_reference(L, k);
  }
  return cell;
}

}  // namespace

bool CellResult::consistent() const {
  return closed == sum && closed == enumerated && closed == oracle &&
         (!trigram || *trigram == closed);
}

std::string CellResult::describe() const {
  std::ostringstream out;
  out << "MISMATCH L=" << length << " n=" << n << " k=" << k << " closed=" << closed
      << " sum=" << sum << " enumerate=" << enumerated << " oracle=" << oracle;
  if (trigram) {
    out << " trigram=" << *trigram;
  }
  return out.str();
}

CellResult evaluate_cell(std::size_t length, std::size_t n, std::size_t k,
                         const oracle::OracleConfig& config) {
  return evaluate(synthetic_sequence(length), n, k, config);
}

SweepReport verify_grid_serial(const GridBounds& bounds, const oracle::OracleConfig& config) {
  check_bounds(bounds, config);
  SweepReport report;
  for (std::size_t L = 0; L <= bounds.max_length; ++L) {
    const TokenSequence seq = synthetic_sequence(L);
    for (std::size_t n = 0; n <= bounds.max_n; ++n) {
      for (std::size_t k = 0; k <= bounds.max_k; ++k) {
        CellResult cell = evaluate(seq, n, k, config);
        ++report.cells;
        if (!cell.consistent()) {
          report.mismatches.push_back(std::move(cell));
        }
      }
    }
  }
  return report;
}

SweepReport verify_grid(const GridBounds& bounds, const oracle::OracleConfig& config) {
  check_bounds(bounds, config);
  std::vector<TokenSequence> sequences;
  sequences.reserve(bounds.max_length + 1);
  for (std::size_t L = 0; L <= bounds.max_length; ++L) {
    sequences.push_back(synthetic_sequence(L));
  }

  const auto total = static_cast<std::int64_t>(bounds.cell_count());
  const std::size_t per_length = (bounds.max_n + 1) * (bounds.max_k + 1);
  std::vector<CellResult> cells(static_cast<std::size_t>(total));
  std::exception_ptr failure;

  // Large L cells dominate, so hand them out dynamically.
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t index = 0; index < total; ++index) {
    const auto i = static_cast<std::size_t>(index);
    const std::size_t L = i / per_length;
    const std::size_t n = (i % per_length) / (bounds.max_k + 1);
    const std::size_t k = i % (bounds.max_k + 1);
    try {
      cells[i] = evaluate(sequences[L], n, k, config);
    } catch (...) {
#pragma omp critical(skipgram_verify_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  SweepReport report;
  report.cells = cells.size();
  for (auto& cell : cells) {
    if (!cell.consistent()) {
      report.mismatches.push_back(std::move(cell));
    }
  }
  return report;
}

}  // namespace skipgram::verify
