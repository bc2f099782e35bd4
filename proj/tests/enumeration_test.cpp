#include "skipgram/enumeration.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include <gtest/gtest.h>

#include "counting_source.hpp"
#include "oracle/oracle.hpp"
#include "skipgram/counting.hpp"

namespace skipgram {
namespace {

using Positions = std::vector<std::size_t>;

TokenSequence letters(std::string_view text) {
  std::vector<std::string> tokens;
  for (char c : text) tokens.emplace_back(1, c);
  return TokenSequence(std::move(tokens));
}

TokenSequence numbered(std::size_t length) {
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < length; ++i) tokens.push_back(std::to_string(i));
  return TokenSequence(std::move(tokens));
}

template <typename Stream>
std::vector<Positions> positions_of(Stream stream) {
  std::vector<Positions> out;
  for (const auto& occ : stream) out.push_back(occ.positions);
  return out;
}

std::vector<std::string> joined(std::vector<std::string_view> tokens) {
  return {tokens.begin(), tokens.end()};
}

TEST(ExactSkipGrams, BigramsWithOneSkip) {
  const auto seq = letters("abcde");
  std::vector<std::vector<std::string>> forms;
  std::vector<Positions> positions;
  for (const auto& occ : exact_skip_grams(seq, 2, 1)) {
    forms.push_back(joined(occ.tokens));
    positions.push_back(occ.positions);
    EXPECT_EQ(occ.skips, 1u);
  }
  EXPECT_EQ(positions, (std::vector<Positions>{{0, 2}, {1, 3}, {2, 4}}));
  EXPECT_EQ(forms, (std::vector<std::vector<std::string>>{{"a", "c"}, {"b", "d"}, {"c", "e"}}));
}

TEST(ExactSkipGrams, PlainBigrams) {
  const auto seq = numbered(6);
  EXPECT_EQ(positions_of(exact_skip_grams(seq, 2, 0)),
            (std::vector<Positions>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}));
}

TEST(ExactSkipGrams, SingleWindowInteriorChoices) {
  const auto seq = letters("abcd");
  EXPECT_EQ(positions_of(exact_skip_grams(seq, 3, 1)),
            (std::vector<Positions>{{0, 2, 3}, {0, 1, 3}}));
}

TEST(ExactSkipGrams, UnigramsNeverSkip) {
  const auto seq = numbered(4);
  EXPECT_EQ(positions_of(exact_skip_grams(seq, 1, 0)),
            (std::vector<Positions>{{0}, {1}, {2}, {3}}));
  EXPECT_TRUE(positions_of(exact_skip_grams(seq, 1, 1)).empty());
  EXPECT_TRUE(positions_of(exact_skip_grams(seq, 0, 0)).empty());
}

TEST(ExactSkipGrams, BijectionWithOracleSpanFilter) {
  for (std::size_t L = 0; L <= 14; ++L) {
    const auto seq = numbered(L);
    for (std::size_t n = 2; n <= 5; ++n) {
      for (std::size_t j = 0; j <= 8; ++j) {
        const auto generated = positions_of(exact_skip_grams(seq, n, j));
        const std::set<Positions> as_set(generated.begin(), generated.end());
        ASSERT_EQ(as_set.size(), generated.size()) << "duplicate at " << L << "," << n << "," << j;

        auto expected = oracle::oracle_occurrences(L, n, j);
        if (j > 0) {
          for (const auto& shorter : oracle::oracle_occurrences(L, n, j - 1)) {
            expected.erase(shorter);
          }
        }
        ASSERT_EQ(as_set, expected) << L << "," << n << "," << j;
      }
    }
  }
}

TEST(AllSkipGrams, Examples) {
  const auto five = numbered(5);
  EXPECT_EQ(positions_of(all_skip_grams(five, {2, 1})).size(), 7u);
  for (std::size_t k : {0u, 3u, 9u}) {
    EXPECT_EQ(positions_of(all_skip_grams(five, {1, k})).size(), 5u);
  }
  const TokenSequence empty;
  EXPECT_TRUE(positions_of(all_skip_grams(empty, {2, 4})).empty());
  EXPECT_TRUE(positions_of(all_skip_grams(empty, {1, 0})).empty());
}

TEST(AllSkipGrams, MatchesOracleWithoutDuplicates) {
  for (std::size_t L = 0; L <= 14; ++L) {
    const auto seq = numbered(L);
    for (std::size_t n = 1; n <= 5; ++n) {
      for (std::size_t k = 0; k <= 10; ++k) {
        const auto generated = positions_of(all_skip_grams(seq, {n, k}));
        const std::set<Positions> as_set(generated.begin(), generated.end());
        ASSERT_EQ(as_set.size(), generated.size()) << L << "," << n << "," << k;
        ASSERT_EQ(as_set, oracle::oracle_occurrences(L, n, k)) << L << "," << n << "," << k;
        ASSERT_EQ(count_by_enumeration(seq, {n, k}), total_count_closed(CorpusLength(L), {n, k}));
      }
    }
  }
}

TEST(AllSkipGrams, OccurrencesAreWellFormed) {
  const auto seq = numbered(12);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 0; k <= 8; ++k) {
      for (const auto& occ : all_skip_grams(seq, {n, k})) {
        ASSERT_EQ(occ.positions.size(), n);
        ASSERT_TRUE(std::is_sorted(occ.positions.begin(), occ.positions.end()));
        ASSERT_EQ(std::adjacent_find(occ.positions.begin(), occ.positions.end()),
                  occ.positions.end());
        ASSERT_EQ(occ.skips, occ.positions.back() - occ.positions.front() - (n - 1));
        ASSERT_LE(occ.skips, k);
        for (std::size_t i = 0; i < n; ++i) {
          ASSERT_EQ(occ.tokens[i], seq[occ.positions[i]]);
        }
      }
    }
  }
}

TEST(AllSkipGrams, CanonicalOrder) {
  // Sort key: (skips, window start, skipped offsets lexicographically).
  const auto seq = numbered(10);
  const std::size_t n = 4;
  using Key = std::tuple<std::size_t, std::size_t, Positions>;
  std::vector<Key> keys;
  for (const auto& occ : all_skip_grams(seq, {n, 4})) {
    Positions skipped;
    const std::size_t start = occ.positions.front();
    for (std::size_t p = start, i = 0; p <= occ.positions.back(); ++p) {
      if (occ.positions[i] == p) {
        ++i;
      } else {
        skipped.push_back(p - start);
      }
    }
    keys.emplace_back(occ.skips, start, skipped);
  }
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_EQ(keys.size(), 140u);  // brute force over 4-subsets of 10 positions
  EXPECT_EQ(Count(keys.size()), total_count_closed(CorpusLength(10), {n, 4}));
}

TEST(WindowPlan, PositionsSkipInteriorOffsets) {
  EXPECT_EQ(plan_positions({3, {}}, 3), (Positions{3, 4, 5}));
  EXPECT_EQ(plan_positions({2, {1, 3}}, 3), (Positions{2, 4, 6}));
  EXPECT_EQ(plan_positions({0, {1}}, 2), (Positions{0, 2}));
}

TEST(WindowPlan, CursorNeverSkipsWindowEnds) {
  for (std::size_t n = 2; n <= 5; ++n) {
    WindowPlanCursor cursor(11, n, 0, 6);
    for (const WindowPlan* plan = cursor.current(); plan; cursor.advance(), plan = cursor.current()) {
      const std::size_t j = plan->skip_offsets.size();
      ASSERT_TRUE(std::is_sorted(plan->skip_offsets.begin(), plan->skip_offsets.end()));
      for (std::size_t offset : plan->skip_offsets) {
        ASSERT_GE(offset, 1u);
        ASSERT_LE(offset, n + j - 2);
      }
      ASSERT_LE(plan->start + n + j, 11u);
    }
  }
}

TEST(Streaming, ReadsOnlyEmittedPositions) {
  for (std::size_t n : {1u, 2u, 5u}) {
    for (std::size_t k : {0u, 3u, 20u}) {
      testing::CountingTokenSource source(1'000'000);
      auto stream = all_skip_grams(source, {n, k});
      for (std::size_t m = 0; m < 25; ++m) {
        ASSERT_TRUE(stream.next().has_value());
      }
      EXPECT_EQ(source.reads(), 25 * n);
      // First 25 occurrences are plain n-grams at starts 0..24.
      EXPECT_LE(source.touched_prefix(), 25 + n);
    }
  }
}

TEST(Streaming, SkipReadsNothing) {
  testing::CountingTokenSource source(50);
  auto stream = all_skip_grams(source, {3, 4});
  while (stream.skip()) {
  }
  EXPECT_EQ(source.reads(), 0u);
}

TEST(CountByEnumeration, Examples) {
  EXPECT_EQ(count_by_enumeration(numbered(10), {3, 2}), 40);
  EXPECT_EQ(count_by_enumeration(numbered(4), {2, 3}), 6);
  EXPECT_EQ(count_by_enumeration(numbered(9), {0, 4}), 0);
}

TEST(CountDistinctForms, Examples) {
  EXPECT_EQ(count_distinct_forms(letters("aaa"), {2, 0}), 1);
  EXPECT_EQ(count_by_enumeration(letters("aaa"), {2, 0}), 2);
  EXPECT_EQ(count_distinct_forms(letters("abab"), {2, 1}), 4);
  const auto distinct = numbered(9);
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::size_t k = 0; k <= 5; ++k) {
      EXPECT_EQ(count_distinct_forms(distinct, {n, k}), count_by_enumeration(distinct, {n, k}));
    }
  }
}

TEST(CountDistinctForms, NeverExceedsOccurrences) {
  const auto seq = letters("abracadabraabracadabra");
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 0; k <= 6; ++k) {
      EXPECT_LE(count_distinct_forms(seq, {n, k}), count_by_enumeration(seq, {n, k}));
    }
  }
}

TEST(RenderOccurrence, MarksSkips) {
  const auto seq = letters("abc");
  auto stream = exact_skip_grams(seq, 2, 1);
  const auto occ = stream.next();
  ASSERT_TRUE(occ.has_value());
  EXPECT_EQ(joined(render_occurrence(*occ, false, "_")), (std::vector<std::string>{"a", "c"}));
  EXPECT_EQ(joined(render_occurrence(*occ, true, "_")),
            (std::vector<std::string>{"a", "_", "c"}));

  auto plain = exact_skip_grams(seq, 2, 0);
  const auto adjacent = plain.next();
  ASSERT_TRUE(adjacent.has_value());
  EXPECT_EQ(render_occurrence(*adjacent, true, "_"), render_occurrence(*adjacent, false, "_"));
}

TEST(RenderOccurrence, WindowLengthIsGramPlusSkips) {
  const auto seq = numbered(9);
  for (const auto& occ : all_skip_grams(seq, {3, 4})) {
    EXPECT_EQ(render_occurrence(occ, true, "<skip>").size(), 3 + occ.skips);
  }
}

}  // namespace
}  // namespace skipgram
