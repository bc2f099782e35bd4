#pragma once

#include "skipgram/count.hpp"
#include "skipgram/counting.hpp"

namespace skipgram {

/// OpenMP version of total_count_sum: the exact-skip terms are split across
/// threads and the per-thread partial sums merged. Same result as the serial
/// total_count_sum, which stays the reference.
Count total_count_sum_parallel(CorpusLength length, SkipGramSpec spec);

/// Threads OpenMP would use for a parallel region (1 without OpenMP).
int max_parallel_threads();

}  // namespace skipgram
