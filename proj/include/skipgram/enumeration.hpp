#pragma once

#include <concepts>
#include <cstddef>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skipgram/count.hpp"
#include "skipgram/counting.hpp"

namespace skipgram {

/// Anything indexable by position that yields token text. The stream only
/// calls operator[] for positions it actually emits.
template <typename S>
concept TokenSource = requires(const S& source, std::size_t i) {
  { source.size() } -> std::convertible_to<std::size_t>;
  { source[i] } -> std::convertible_to<std::string_view>;
};

/// Immutable token sequence.
class TokenSequence {
 public:
  TokenSequence() = default;
  explicit TokenSequence(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {}

  std::size_t size() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }
  const std::string& operator[](std::size_t i) const { return tokens_[i]; }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }

  auto begin() const noexcept { return tokens_.begin(); }
  auto end() const noexcept { return tokens_.end(); }

 private:
  std::vector<std::string> tokens_;
};

/// One positional match. `tokens` views into the source the occurrence came
/// from and is valid while that source is alive.
struct SkipGramOccurrence {
  std::vector<std::size_t> positions;
  std::vector<std::string_view> tokens;
  std::size_t skips = 0;

  friend bool operator==(const SkipGramOccurrence&, const SkipGramOccurrence&) = default;
};

/// A window of length n + skip_offsets.size() starting at `start`, with the
/// listed interior offsets dropped. Offsets 0 and n + j - 1 are never dropped.
struct WindowPlan {
  std::size_t start = 0;
  std::vector<std::size_t> skip_offsets;  // ascending, each in [1, n + j - 2]
};

/// Source positions kept by `plan` for grams of length `n`.
std::vector<std::size_t> plan_positions(const WindowPlan& plan, std::size_t n);

/// Lazily walks window plans in canonical order: exact skip count ascending,
/// then window start ascending, then skip-offset sets in lexicographic order.
/// Pure position logic; knows the corpus length only.
class WindowPlanCursor {
 public:
  WindowPlanCursor(std::size_t length, std::size_t n, std::size_t min_skips,
                   std::size_t max_skips);

  /// Current plan, or nullptr once exhausted.
  const WindowPlan* current() const noexcept { return done_ ? nullptr : &plan_; }
  void advance();

  std::size_t gram_length() const noexcept { return n_; }

 private:
  bool enter_skip_level(std::size_t j);
  bool next_offset_set();

  std::size_t length_;
  std::size_t n_;
  std::size_t max_skips_;
  std::size_t skips_ = 0;
  WindowPlan plan_;
  bool done_ = false;
};

/// Single-consumer stream of occurrences over a token source.
template <TokenSource Source>
class SkipGramStream {
 public:
  SkipGramStream(const Source& source, std::size_t n, std::size_t min_skips,
                 std::size_t max_skips)
      : source_(&source), cursor_(source.size(), n, min_skips, max_skips) {}

  std::optional<SkipGramOccurrence> next() {
    const WindowPlan* plan = cursor_.current();
    if (plan == nullptr) {
      return std::nullopt;
    }
    SkipGramOccurrence occ;
    occ.positions = plan_positions(*plan, cursor_.gram_length());
    occ.skips = plan->skip_offsets.size();
    occ.tokens.reserve(occ.positions.size());
    for (std::size_t p : occ.positions) {
      occ.tokens.emplace_back((*source_)[p]);
    }
    cursor_.advance();
    return occ;
  }

  /// Advances without reading any tokens; returns false when exhausted.
  bool skip() {
    if (cursor_.current() == nullptr) {
      return false;
    }
    cursor_.advance();
    return true;
  }

  class iterator {
   public:
    using value_type = SkipGramOccurrence;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(SkipGramStream* stream) : stream_(stream) { ++*this; }

    const SkipGramOccurrence& operator*() const { return *current_; }
    const SkipGramOccurrence* operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = stream_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return !it.current_.has_value();
    }

   private:
    SkipGramStream* stream_ = nullptr;
    std::optional<SkipGramOccurrence> current_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

 private:
  const Source* source_;
  WindowPlanCursor cursor_;
};

/// Occurrences with exactly `skips` skipped positions.
template <TokenSource Source>
SkipGramStream<Source> exact_skip_grams(const Source& seq, std::size_t n, std::size_t skips) {
  return SkipGramStream<Source>(seq, n, skips, skips);
}

/// Occurrences with 0..spec.k skips, each position tuple exactly once.
template <TokenSource Source>
SkipGramStream<Source> all_skip_grams(const Source& seq, SkipGramSpec spec) {
  return SkipGramStream<Source>(seq, static_cast<std::size_t>(spec.n), 0,
                                static_cast<std::size_t>(spec.k));
}

/// Number of occurrences all_skip_grams yields; matches total_count_closed.
Count count_by_enumeration(const TokenSequence& seq, SkipGramSpec spec);

/// Number of distinct token tuples among all occurrences. Holds every
/// distinct form in memory.
Count count_distinct_forms(const TokenSequence& seq, SkipGramSpec spec);

/// Tokens of `occ`. With `mark_skips`, the whole window slice from the first
/// to the last position, with dropped positions replaced by `skip_token`.
std::vector<std::string_view> render_occurrence(const SkipGramOccurrence& occ, bool mark_skips,
                                                std::string_view skip_token);

}  // namespace skipgram
