#include "tracerec/alignment.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "tracerec/error.hpp"
#include "tracerec/kernels.hpp"

namespace tracerec {

Alignment::Alignment(std::size_t source_length, std::size_t target_length,
                     std::vector<AlignedPair> pairs)
    : source_length_(source_length), target_length_(target_length), pairs_(std::move(pairs)) {
  std::size_t last_i = 0, last_j = 0;
  for (const auto& p : pairs_) {
    if (p.i <= last_i || p.j <= last_j) throw InvalidArgument("alignment pairs must be strictly increasing");
    if (p.i > source_length_ || p.j > target_length_) {
      throw OutOfRange("alignment pair (" + std::to_string(p.i) + ", " + std::to_string(p.j) +
                       ") outside " + std::to_string(source_length_) + " x " +
                       std::to_string(target_length_));
    }
    last_i = p.i;
    last_j = p.j;
  }
}

Alignment Alignment::identity(std::size_t n) {
  std::vector<AlignedPair> pairs(n);
  for (std::size_t k = 0; k < n; ++k) pairs[k] = {k + 1, k + 1};
  return Alignment(n, n, std::move(pairs));
}

std::optional<std::size_t> Alignment::image(std::size_t i) const {
  const auto it = std::lower_bound(pairs_.begin(), pairs_.end(), i,
                                   [](const AlignedPair& p, std::size_t v) { return p.i < v; });
  if (it == pairs_.end() || it->i != i) return std::nullopt;
  return it->j;
}

std::vector<std::size_t> Alignment::image_table() const {
  std::vector<std::size_t> table(source_length_ + 1, 0);
  for (const auto& p : pairs_) table[p.i] = p.j;
  return table;
}

bool Alignment::valid_for(const Seq& x, const Seq& y) const {
  if (x.size() != source_length_ || y.size() != target_length_) return false;
  return std::all_of(pairs_.begin(), pairs_.end(),
                     [&](const AlignedPair& p) { return x.at(p.i) == y.at(p.j); });
}

IntervalMapping map_interval(const Alignment& a, Interval source) {
  if (source.first == 0 || source.first > source.last || source.last > a.source_length()) {
    throw OutOfRange("interval [" + std::to_string(source.first) + ", " + std::to_string(source.last) +
                     "] outside source of length " + std::to_string(a.source_length()));
  }
  const auto pairs = a.pairs();
  const auto lo = std::lower_bound(pairs.begin(), pairs.end(), source.first,
                                   [](const AlignedPair& p, std::size_t v) { return p.i < v; });
  const auto hi = std::upper_bound(pairs.begin(), pairs.end(), source.last,
                                   [](std::size_t v, const AlignedPair& p) { return v < p.i; });
  IntervalMapping out;
  out.source = source;
  const auto matched = static_cast<std::size_t>(hi - lo);
  if (matched == 0) {
    const std::size_t anchor = lo == pairs.begin() ? 1 : std::prev(lo)->j + 1;
    out.image = Interval::empty_at(anchor);
    out.unmatched_source = source.length();
    return out;
  }
  out.image = {lo->j, std::prev(hi)->j};
  out.unmatched_source = source.length() - matched;
  out.unmatched_image = out.image.length() - matched;
  return out;
}

Interval map_substring(const Alignment& a, std::size_t i1, std::size_t i2) {
  return map_interval(a, {i1, i2}).image;
}

std::size_t cost_on_substring(const Alignment& a, std::size_t i1, std::size_t i2) {
  return map_interval(a, {i1, i2}).cost();
}

Alignment compose(const Alignment& a, const Alignment& b) {
  if (a.target_length() != b.source_length()) {
    throw InvalidArgument("cannot compose: middle lengths " + std::to_string(a.target_length()) +
                          " and " + std::to_string(b.source_length()) + " differ");
  }
  std::vector<AlignedPair> out;
  const auto pa = a.pairs();
  const auto pb = b.pairs();
  std::size_t kb = 0;
  for (const auto& p : pa) {
    while (kb < pb.size() && pb[kb].i < p.j) ++kb;
    if (kb == pb.size()) break;
    if (pb[kb].i == p.j) out.push_back({p.i, pb[kb].j});
  }
  return Alignment(a.source_length(), b.target_length(), std::move(out));
}

Alignment invert(const Alignment& a) {
  std::vector<AlignedPair> out;
  out.reserve(a.len());
  for (const auto& p : a.pairs()) out.push_back({p.j, p.i});
  return Alignment(a.target_length(), a.source_length(), std::move(out));
}

std::size_t edit_distance(const Seq& x, const Seq& y) {
  require_same_alphabet(x, y);
  return kernels::indel_distance(x.symbols(), y.symbols());
}

namespace {

enum Move : std::uint8_t { kMatch = 0, kSkipX = 1, kSkipY = 2 };

// 2-bit traceback moves for a diagonal band, row-major.
class MoveTable {
public:
  MoveTable(std::size_t rows, std::size_t width) : width_(width), bits_((rows * width + 3) / 4, 0) {}

  void set(std::size_t row, std::size_t col, Move m) {
    const std::size_t k = row * width_ + col;
    bits_[k >> 2] |= static_cast<std::uint8_t>(m << ((k & 3) * 2));
  }
  Move get(std::size_t row, std::size_t col) const {
    const std::size_t k = row * width_ + col;
    return static_cast<Move>((bits_[k >> 2] >> ((k & 3) * 2)) & 3);
  }

private:
  std::size_t width_;
  std::vector<std::uint8_t> bits_;
};

}  // namespace

// Every optimal path stays inside the band of diagonals d = j - i with
// |d| + |(ny - nx) - d| <= D, where D is the exact distance, so the banded
// table reproduces the full-table traceback.
Alignment optimal_alignment(std::span<const Symbol> x, std::span<const Symbol> y) {
  const auto nx = static_cast<std::int64_t>(x.size());
  const auto ny = static_cast<std::int64_t>(y.size());
  const auto dist = static_cast<std::int64_t>(kernels::indel_distance(x, y));
  const std::int64_t delta = ny - nx;
  const std::int64_t half = (dist - std::abs(delta)) / 2;
  const std::int64_t dlo = std::min<std::int64_t>(0, delta) - half;
  const std::int64_t dhi = std::max<std::int64_t>(0, delta) + half;
  const auto width = static_cast<std::size_t>(dhi - dlo + 1);

  constexpr std::int64_t kInf = std::numeric_limits<std::int32_t>::max() / 2;
  std::vector<std::int64_t> prev(width + 2, kInf), cur(width + 2, kInf);
  // Slot for diagonal d is (d - dlo + 1); slots 0 and width + 1 stay infinite.
  const auto slot = [&](std::int64_t d) { return static_cast<std::size_t>(d - dlo + 1); };
  MoveTable moves(static_cast<std::size_t>(nx + 1), width);

  for (std::int64_t i = 0; i <= nx; ++i) {
    std::fill(cur.begin(), cur.end(), kInf);
    const std::int64_t jlo = std::max<std::int64_t>(0, i + dlo);
    const std::int64_t jhi = std::min<std::int64_t>(ny, i + dhi);
    for (std::int64_t j = jlo; j <= jhi; ++j) {
      const std::int64_t d = j - i;
      const std::size_t s = slot(d);
      if (i == 0 && j == 0) {
        cur[s] = 0;
        continue;
      }
      if (i > 0 && j > 0 && x[static_cast<std::size_t>(i - 1)] == y[static_cast<std::size_t>(j - 1)]) {
        cur[s] = prev[s];
        moves.set(static_cast<std::size_t>(i), s - 1, kMatch);
        continue;
      }
      const std::int64_t skip_x = i > 0 ? prev[s + 1] + 1 : kInf;
      const std::int64_t skip_y = j > 0 ? cur[s - 1] + 1 : kInf;
      if (skip_x <= skip_y) {
        cur[s] = skip_x;
        moves.set(static_cast<std::size_t>(i), s - 1, kSkipX);
      } else {
        cur[s] = skip_y;
        moves.set(static_cast<std::size_t>(i), s - 1, kSkipY);
      }
    }
    std::swap(prev, cur);
  }

  std::vector<AlignedPair> pairs;
  std::int64_t i = nx, j = ny;
  while (i > 0 || j > 0) {
    const Move mv = moves.get(static_cast<std::size_t>(i), slot(j - i) - 1);
    if (i > 0 && j > 0 && mv == kMatch) {
      pairs.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
      --i;
      --j;
    } else if (i > 0 && (mv == kSkipX || j == 0)) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(pairs.begin(), pairs.end());
  return Alignment(x.size(), y.size(), std::move(pairs));
}

Alignment optimal_alignment(const Seq& x, const Seq& y) {
  require_same_alphabet(x, y);
  return optimal_alignment(x.symbols(), y.symbols());
}

}  // namespace tracerec
