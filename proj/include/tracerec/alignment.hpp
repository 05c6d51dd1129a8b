#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tracerec/seq.hpp"

namespace tracerec {

/// One matched position pair, both 1-based.
struct AlignedPair {
  std::size_t i = 0;  ///< position in the source sequence
  std::size_t j = 0;  ///< position in the target sequence

  friend bool operator==(const AlignedPair&, const AlignedPair&) = default;
};

/// Monotone partial matching between a source of length source_length() and
/// a target of length target_length(). Pairs are strictly increasing in both
/// coordinates. Stored sparsely: memory is proportional to len().
class Alignment {
public:
  Alignment() = default;
  Alignment(std::size_t source_length, std::size_t target_length, std::vector<AlignedPair> pairs);

  static Alignment identity(std::size_t n);
  static Alignment empty(std::size_t source_length, std::size_t target_length) {
    return Alignment(source_length, target_length, {});
  }

  std::size_t source_length() const noexcept { return source_length_; }
  std::size_t target_length() const noexcept { return target_length_; }
  std::span<const AlignedPair> pairs() const noexcept { return pairs_; }

  std::size_t len() const noexcept { return pairs_.size(); }
  /// Unmatched positions on both sides.
  std::size_t cost() const noexcept { return source_length_ + target_length_ - 2 * pairs_.size(); }

  /// Image of source position i, or nullopt when i is unmatched.
  std::optional<std::size_t> image(std::size_t i) const;

  /// Dense image table: entry i (1-based, entry 0 unused) is the matched
  /// target position or 0.
  std::vector<std::size_t> image_table() const;

  /// True when every pair joins equal symbols of x and y and lengths agree.
  bool valid_for(const Seq& x, const Seq& y) const;

  friend bool operator==(const Alignment&, const Alignment&) = default;

private:
  std::size_t source_length_ = 0;
  std::size_t target_length_ = 0;
  std::vector<AlignedPair> pairs_;
};

/// Result of mapping a source interval through an alignment.
struct IntervalMapping {
  Interval source;
  Interval image;  ///< spans the first and last matched images; empty if none
  std::size_t unmatched_source = 0;
  std::size_t unmatched_image = 0;

  std::size_t cost() const noexcept { return unmatched_source + unmatched_image; }
};

IntervalMapping map_interval(const Alignment& a, Interval source);

/// Image [A(l1), A(l2)] of x[i1..i2]; empty when nothing in it is matched.
Interval map_substring(const Alignment& a, std::size_t i1, std::size_t i2);

/// Unmatched positions of x[i1..i2] plus unmatched positions of its image.
std::size_t cost_on_substring(const Alignment& a, std::size_t i1, std::size_t i2);

/// Pairs (i, k) with A(i) = j and B(j) = k for some j.
Alignment compose(const Alignment& a, const Alignment& b);

Alignment invert(const Alignment& a);

/// Indel edit distance |x| + |y| - 2 LCS(x, y).
std::size_t edit_distance(const Seq& x, const Seq& y);

/// Minimum-cost alignment. The traceback from (|x|, |y|) prefers a match,
/// then leaving x[i] unmatched, then leaving y[j] unmatched.
Alignment optimal_alignment(const Seq& x, const Seq& y);
Alignment optimal_alignment(std::span<const Symbol> x, std::span<const Symbol> y);

}  // namespace tracerec
