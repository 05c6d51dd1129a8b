#pragma once

#include <cstddef>

#include "tracerec/seq.hpp"

namespace tracerec {

/// Substring text[start..end] (1-based; end == start - 1 when empty) at
/// minimum indel distance from the pattern.
struct MatchResult {
  std::size_t start = 1;
  std::size_t end = 0;
  std::size_t cost = 0;

  Interval interval() const noexcept { return {start, end}; }
  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

/// Best match of a nonempty pattern anywhere in text. Ties: smallest start,
/// then smallest end.
MatchResult best_match(const Seq& pattern, const Seq& text);

/// best_match restricted to text[from .. min(|text|, from + window_len - 1)];
/// positions are reported in text coordinates. `from` may be |text| + 1
/// (an empty window).
MatchResult best_match_windowed(const Seq& pattern, const Seq& text, std::size_t from,
                                std::size_t window_len);

}  // namespace tracerec
