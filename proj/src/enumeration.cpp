#include "skipgram/enumeration.hpp"

#include <set>

namespace skipgram {

std::vector<std::size_t> plan_positions(const WindowPlan& plan, std::size_t n) {
  const std::size_t window = n + plan.skip_offsets.size();
  std::vector<std::size_t> positions;
  positions.reserve(n);
  auto skip = plan.skip_offsets.begin();
  for (std::size_t offset = 0; offset < window; ++offset) {
    if (skip != plan.skip_offsets.end() && *skip == offset) {
      ++skip;
      continue;
    }
    positions.push_back(plan.start + offset);
  }
  return positions;
}

WindowPlanCursor::WindowPlanCursor(std::size_t length, std::size_t n, std::size_t min_skips,
                                   std::size_t max_skips)
    : length_(length), n_(n), max_skips_(max_skips) {
  if (n_ == 0) {
    done_ = true;
    return;
  }
  enter_skip_level(min_skips);
}

bool WindowPlanCursor::enter_skip_level(std::size_t j) {
  // A single token has no interior, so only j = 0 exists. Once the window
  // outgrows the corpus every larger j is empty too.
  if (j > max_skips_ || (n_ == 1 && j > 0) || j > length_ || n_ > length_ - j) {
    done_ = true;
    return false;
  }
  skips_ = j;
  plan_.start = 0;
  plan_.skip_offsets.resize(j);
  for (std::size_t i = 0; i < j; ++i) {
    plan_.skip_offsets[i] = i + 1;
  }
  return true;
}

bool WindowPlanCursor::next_offset_set() {
  auto& offsets = plan_.skip_offsets;
  const std::size_t j = offsets.size();
  if (j == 0) {
    return false;
  }
  // Interior slots are 1..n+j-2; slot i can hold at most (n+j-2) - (j-1-i).
  const std::size_t top = n_ + j - 2;
  std::size_t i = j;
  while (i > 0) {
    --i;
    if (offsets[i] < top - (j - 1 - i)) {
      ++offsets[i];
      for (std::size_t r = i + 1; r < j; ++r) {
        offsets[r] = offsets[r - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

void WindowPlanCursor::advance() {
  if (done_) {
    return;
  }
  if (next_offset_set()) {
    return;
  }
  const std::size_t window = n_ + skips_;
  if (plan_.start + 1 + window <= length_) {
    ++plan_.start;
    for (std::size_t i = 0; i < skips_; ++i) {
      plan_.skip_offsets[i] = i + 1;
    }
    return;
  }
  if (skips_ == max_skips_) {
    done_ = true;
    return;
  }
  enter_skip_level(skips_ + 1);
}

Count count_by_enumeration(const TokenSequence& seq, SkipGramSpec spec) {
  auto stream = all_skip_grams(seq, spec);
  std::uint64_t total = 0;
  while (stream.skip()) {
    ++total;
  }
  return Count(total);
}

Count count_distinct_forms(const TokenSequence& seq, SkipGramSpec spec) {
  std::set<std::vector<std::string_view>> forms;
  for (const auto& occ : all_skip_grams(seq, spec)) {
    forms.insert(occ.tokens);
  }
  return Count(forms.size());
}

std::vector<std::string_view> render_occurrence(const SkipGramOccurrence& occ, bool mark_skips,
                                                std::string_view skip_token) {
  if (!mark_skips || occ.positions.empty()) {
    return occ.tokens;
  }
  std::vector<std::string_view> rendered;
  rendered.reserve(occ.positions.size() + occ.skips);
  for (std::size_t i = 0; i < occ.positions.size(); ++i) {
    if (i > 0) {
      for (std::size_t gap = occ.positions[i - 1] + 1; gap < occ.positions[i]; ++gap) {
        rendered.push_back(skip_token);
      }
    }
    rendered.push_back(occ.tokens[i]);
  }
  return rendered;
}

}  // namespace skipgram
