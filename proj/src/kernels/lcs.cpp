#include <algorithm>
#include <cstdint>
#include <vector>

#include "tracerec/kernels.hpp"

namespace tracerec::kernels {

std::size_t lcs_scalar(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::uint32_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (const Symbol ca : a) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = ca == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

// Hyyro's formulation of the Allison-Dix bit-vector LCS: bit i of V is 0
// iff row i of the LCS table increases at the current column.
std::size_t lcs_bitparallel(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.empty() || b.empty()) return 0;
  // Bit vectors run over the shorter string.
  if (a.size() > b.size()) std::swap(a, b);
  const std::size_t words = (a.size() + 63) / 64;

  Symbol max_sym = 0;
  for (const Symbol s : a) max_sym = std::max(max_sym, s);
  // Row index per symbol present in `a`; symbols absent from `a` never match.
  std::vector<std::int32_t> row_of(static_cast<std::size_t>(max_sym) + 1, -1);
  std::int32_t rows = 0;
  for (const Symbol s : a) {
    if (row_of[s] < 0) row_of[s] = rows++;
  }
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(rows) * words, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    masks[static_cast<std::size_t>(row_of[a[i]]) * words + i / 64] |= std::uint64_t{1} << (i % 64);
  }

  std::vector<std::uint64_t> v(words, ~std::uint64_t{0});
  for (const Symbol c : b) {
    if (c > max_sym || row_of[c] < 0) continue;
    const std::uint64_t* m = masks.data() + static_cast<std::size_t>(row_of[c]) * words;
    unsigned char carry = 0;
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t vw = v[w];
      const std::uint64_t u = vw & m[w];
      std::uint64_t sum;
      unsigned char c1 = __builtin_add_overflow(vw, u, &sum);
      unsigned char c2 = __builtin_add_overflow(sum, static_cast<std::uint64_t>(carry), &sum);
      carry = c1 | c2;
      v[w] = sum | (vw - u);
    }
  }

  std::size_t zeros = 0;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t live = ~v[w];
    const std::size_t bits_here = std::min<std::size_t>(64, a.size() - w * 64);
    if (bits_here < 64) live &= (std::uint64_t{1} << bits_here) - 1;
    zeros += static_cast<std::size_t>(__builtin_popcountll(live));
  }
  return zeros;
}

// Furthest-reaching D-paths on diagonals k = x - y. The indel distance is the
// smallest D whose path reaches (|a|, |b|).
std::optional<std::size_t> indel_distance_greedy(std::span<const Symbol> a,
                                                 std::span<const Symbol> b,
                                                 std::size_t max_distance) {
  const auto n = static_cast<std::int64_t>(a.size());
  const auto m = static_cast<std::int64_t>(b.size());
  const auto dmax =
      static_cast<std::int64_t>(std::min<std::size_t>(max_distance, a.size() + b.size()));
  const std::int64_t offset = dmax + 1;
  // far[offset + k] = furthest x on diagonal k, or -1 when unreachable.
  std::vector<std::int64_t> far(static_cast<std::size_t>(2 * dmax + 3), -1);
  const auto slide = [&](std::int64_t x, std::int64_t y) {
    while (x < n && y < m && a[static_cast<std::size_t>(x)] == b[static_cast<std::size_t>(y)]) {
      ++x;
      ++y;
    }
    return x;
  };
  far[static_cast<std::size_t>(offset)] = slide(0, 0);
  if (far[static_cast<std::size_t>(offset)] >= n && n == m) return 0;
  for (std::int64_t d = 1; d <= dmax; ++d) {
    for (std::int64_t k = -d; k <= d; k += 2) {
      const auto idx = static_cast<std::size_t>(offset + k);
      if (k < -m || k > n) {
        far[idx] = -1;
        continue;
      }
      std::int64_t x = -1;
      if (k + 1 <= d - 1 && far[idx + 1] >= 0 && far[idx + 1] - k <= m) {
        x = far[idx + 1];  // one more symbol of b left unmatched
      }
      if (k - 1 >= -(d - 1) && far[idx - 1] >= 0 && far[idx - 1] + 1 <= n) {
        x = std::max(x, far[idx - 1] + 1);  // one more symbol of a left unmatched
      }
      if (x < 0) {
        far[idx] = -1;
        continue;
      }
      x = slide(x, x - k);
      far[idx] = x;
      if (x >= n && x - k >= m) return static_cast<std::size_t>(d);
    }
  }
  return std::nullopt;
}

}  // namespace tracerec::kernels
