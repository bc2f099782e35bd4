#include "skipgram/parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skipgram {

int max_parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Count total_count_sum_parallel(CorpusLength length, SkipGramSpec spec) {
  // Range errors are raised here; workers never throw.
  if (length.value > kMaxCountingArgument || spec.n > kMaxCountingArgument ||
      spec.k > kMaxCountingArgument) {
    throw std::out_of_range("total_count_sum_parallel: argument exceeds 2^62");
  }
  if (spec.n == 0 || length.value < spec.n) {
    return 0;
  }
  const auto last = static_cast<std::int64_t>(std::min(spec.k, length.value - spec.n));
  std::vector<Count> partial(static_cast<std::size_t>(max_parallel_threads()));

#pragma omp parallel
  {
    Count local = 0;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i <= last; ++i) {
      local += exact_skip_count(length, spec.n, static_cast<std::uint64_t>(i));
    }
#ifdef _OPENMP
    partial[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
#else
    partial[0] = std::move(local);
#endif
  }

  Count total = 0;
  for (const Count& p : partial) {
    total += p;
  }
  return total;
}

}  // namespace skipgram
