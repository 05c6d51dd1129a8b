#include <vector>

#include "tracerec/error.hpp"
#include "tracerec/kernels.hpp"

namespace tracerec::kernels {
namespace {

// (cost, start) ordered lexicographically; start is the 1-based text position
// where the aligned substring begins.
struct Cell {
  std::size_t cost;
  std::size_t start;

  Cell step() const noexcept { return {cost + 1, start}; }
  friend bool operator<(const Cell& l, const Cell& r) noexcept {
    return l.cost != r.cost ? l.cost < r.cost : l.start < r.start;
  }
};

Cell lesser(const Cell& a, const Cell& b) noexcept { return b < a ? b : a; }

}  // namespace

FitResult fit_scalar(std::span<const Symbol> pattern, std::span<const Symbol> text) {
  if (pattern.empty()) throw InvalidArgument("fitting alignment needs a nonempty pattern");
  const std::size_t m = pattern.size();

  // col[i] = best (cost, start) aligning pattern[1..i] to a substring ending at column j.
  std::vector<Cell> col(m + 1), next(m + 1);
  for (std::size_t i = 0; i <= m; ++i) col[i] = {i, 1};

  FitResult best{1, 0, m};
  Cell best_cell = col[m];
  for (std::size_t j = 1; j <= text.size(); ++j) {
    const Symbol t = text[j - 1];
    next[0] = {0, j + 1};
    for (std::size_t i = 1; i <= m; ++i) {
      Cell c = lesser(col[i].step(), next[i - 1].step());
      if (pattern[i - 1] == t) c = lesser(c, col[i - 1]);
      next[i] = c;
    }
    std::swap(col, next);
    if (col[m] < best_cell) {
      best_cell = col[m];
      best = {col[m].start, j, col[m].cost};
    }
  }
  return best;
}

}  // namespace tracerec::kernels
