#include "tracerec/median.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>

#include "tracerec/alignment.hpp"
#include "tracerec/error.hpp"
#include "tracerec/kernels.hpp"

namespace tracerec {
namespace {

// Cells reachable at row i of x1: a (j, k) rectangle.
struct Box {
  std::size_t jlo, jhi, klo, khi;
  std::size_t offset = 0;

  std::size_t kw() const noexcept { return khi - klo + 1; }
  std::size_t cells() const noexcept { return (jhi - jlo + 1) * kw(); }
};

std::vector<Box> full_boxes(std::size_t l1, std::size_t l2, std::size_t l3) {
  return std::vector<Box>(l1 + 1, Box{0, l2, 0, l3});
}

// Per-row span [lo, hi] of target positions a guide path visits, widened by radius.
std::vector<std::pair<std::size_t, std::size_t>> guide_spans(const Alignment& guide, std::size_t radius) {
  const std::size_t rows = guide.source_length();
  const std::size_t cols = guide.target_length();
  std::vector<std::pair<std::size_t, std::size_t>> spans(rows + 1);
  const auto pairs = guide.pairs();
  std::size_t next = 0;
  std::size_t prev_j = 0;
  for (std::size_t i = 0; i <= rows; ++i) {
    if (next < pairs.size() && pairs[next].i == i) prev_j = pairs[next++].j;
    const std::size_t next_j = next < pairs.size() ? pairs[next].j : cols + 1;
    const std::size_t lo = prev_j > radius ? prev_j - radius : 0;
    const std::size_t hi = std::min(cols, next_j - 1 + radius);
    spans[i] = {lo, hi};
  }
  return spans;
}

template <class Cost>
class MedianTable {
public:
  static constexpr std::uint32_t kInf = std::numeric_limits<Cost>::max();

  MedianTable(std::span<const Symbol> x1, std::span<const Symbol> x2, std::span<const Symbol> x3,
              std::vector<Box> boxes)
      : x1_(x1), x2_(x2), x3_(x3), boxes_(std::move(boxes)) {
    std::size_t total = 0;
    for (auto& b : boxes_) {
      b.offset = total;
      total += b.cells();
    }
    cells_.assign(total, static_cast<Cost>(kInf));
  }

  void fill();
  Seq traceback(Alphabet alphabet) const;
  std::uint32_t final_cost() const { return at(x1_.size(), x2_.size(), x3_.size()); }

private:
  std::uint32_t at(std::size_t i, std::size_t j, std::size_t k) const {
    const Box& b = boxes_[i];
    if (j < b.jlo || j > b.jhi || k < b.klo || k > b.khi) return kInf;
    return cells_[b.offset + (j - b.jlo) * b.kw() + (k - b.klo)];
  }

  std::span<const Symbol> x1_, x2_, x3_;
  std::vector<Box> boxes_;
  std::vector<Cost> cells_;
};

template <class Cost>
void MedianTable<Cost>::fill() {
  const auto in = [](std::size_t v, std::size_t lo, std::size_t hi) { return v >= lo && v <= hi; };
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    const Box& cur = boxes_[i];
    const Box* prev = i > 0 ? &boxes_[i - 1] : nullptr;
    const int a = i > 0 ? x1_[i - 1] : -1;
    for (std::size_t j = cur.jlo; j <= cur.jhi; ++j) {
      const int b = j > 0 ? x2_[j - 1] : -2;
      Cost* row = cells_.data() + cur.offset + (j - cur.jlo) * cur.kw();
      const Cost* row_jm = j > cur.jlo ? row - cur.kw() : nullptr;
      const Cost* prev_j = nullptr;
      const Cost* prev_jm = nullptr;
      if (prev) {
        if (in(j, prev->jlo, prev->jhi)) prev_j = cells_.data() + prev->offset + (j - prev->jlo) * prev->kw();
        if (j > 0 && in(j - 1, prev->jlo, prev->jhi)) {
          prev_jm = cells_.data() + prev->offset + (j - 1 - prev->jlo) * prev->kw();
        }
      }
      const bool ab = a == b;
      for (std::size_t k = cur.klo; k <= cur.khi; ++k) {
        if (i == 0 && j == 0 && k == 0) {
          row[0] = 0;
          continue;
        }
        const int c = k > 0 ? x3_[k - 1] : -3;
        std::uint32_t best = kInf;
        const bool pk = prev && in(k, prev->klo, prev->khi);
        const bool pkm = prev && k > 0 && in(k - 1, prev->klo, prev->khi);
        const bool ck = k > cur.klo;
        if (prev_j && pk) best = std::min<std::uint32_t>(best, prev_j[k - prev->klo] + 1u);
        if (row_jm) best = std::min<std::uint32_t>(best, row_jm[k - cur.klo] + 1u);
        if (ck) best = std::min<std::uint32_t>(best, row[k - 1 - cur.klo] + 1u);
        if (ab) {
          if (a == c && prev_jm && pkm) best = std::min<std::uint32_t>(best, prev_jm[k - 1 - prev->klo]);
          if (prev_jm && pk) best = std::min<std::uint32_t>(best, prev_jm[k - prev->klo] + 1u);
        }
        if (a == c && prev_j && pkm) best = std::min<std::uint32_t>(best, prev_j[k - 1 - prev->klo] + 1u);
        if (b == c && row_jm && ck) best = std::min<std::uint32_t>(best, row_jm[k - 1 - cur.klo] + 1u);
        row[k - cur.klo] = static_cast<Cost>(std::min(best, kInf));
      }
    }
  }
}

template <class Cost>
Seq MedianTable<Cost>::traceback(Alphabet alphabet) const {
  std::vector<Symbol> out;
  std::size_t i = x1_.size(), j = x2_.size(), k = x3_.size();
  if (at(i, j, k) >= kInf) throw Error("median table has no path to the final cell");
  while (i > 0 || j > 0 || k > 0) {
    const std::uint32_t v = at(i, j, k);
    const int a = i > 0 ? x1_[i - 1] : -1;
    const int b = j > 0 ? x2_[j - 1] : -2;
    const int c = k > 0 ? x3_[k - 1] : -3;
    const auto fits = [&](std::size_t ii, std::size_t jj, std::size_t kk, std::uint32_t w) {
      const std::uint32_t pv = at(ii, jj, kk);
      return pv < kInf && pv + w == v;
    };
    if (a == b && b == c && fits(i - 1, j - 1, k - 1, 0)) {
      out.push_back(static_cast<Symbol>(a));
      --i, --j, --k;
      continue;
    }
    // Pairs in fixed order {1,2}, {1,3}, {2,3}; the smallest symbol wins.
    int pick = -1;
    int pick_sym = std::numeric_limits<int>::max();
    const auto consider = [&](int which, int sym, bool ok) {
      if (ok && sym < pick_sym) {
        pick = which;
        pick_sym = sym;
      }
    };
    consider(0, a, i > 0 && j > 0 && a == b && fits(i - 1, j - 1, k, 1));
    consider(1, a, i > 0 && k > 0 && a == c && fits(i - 1, j, k - 1, 1));
    consider(2, b, j > 0 && k > 0 && b == c && fits(i, j - 1, k - 1, 1));
    if (pick >= 0) {
      out.push_back(static_cast<Symbol>(pick_sym));
      if (pick == 0) --i, --j;
      if (pick == 1) --i, --k;
      if (pick == 2) --j, --k;
      continue;
    }
    if (i > 0 && fits(i - 1, j, k, 1)) {
      --i;
    } else if (j > 0 && fits(i, j - 1, k, 1)) {
      --j;
    } else if (k > 0 && fits(i, j, k - 1, 1)) {
      --k;
    } else {
      throw Error("median traceback lost the optimal path");
    }
  }
  std::reverse(out.begin(), out.end());
  return Seq(alphabet, std::move(out));
}

MedianResult solve(const Seq& x1, const Seq& x2, const Seq& x3, std::vector<Box> boxes,
                   std::size_t cell_budget) {
  std::size_t total = 0;
  for (const auto& b : boxes) total += b.cells();
  if (total > cell_budget) throw BudgetExceeded(total, cell_budget);

  Seq median;
  if (x1.size() + x2.size() + x3.size() < 0xFFFF) {
    MedianTable<std::uint16_t> table(x1.symbols(), x2.symbols(), x3.symbols(), std::move(boxes));
    table.fill();
    median = table.traceback(x1.alphabet());
  } else {
    MedianTable<std::uint32_t> table(x1.symbols(), x2.symbols(), x3.symbols(), std::move(boxes));
    table.fill();
    median = table.traceback(x1.alphabet());
  }
  MedianResult out;
  out.per_input_distance = {edit_distance(median, x1), edit_distance(median, x2),
                            edit_distance(median, x3)};
  out.objective = out.per_input_distance[0] + out.per_input_distance[1] + out.per_input_distance[2];
  out.median = std::move(median);
  return out;
}

void check_three(const Seq& x1, const Seq& x2, const Seq& x3) {
  require_same_alphabet(x1, x2);
  require_same_alphabet(x1, x3);
}

std::size_t saturating_cube(std::size_t a, std::size_t b, std::size_t c) {
  std::size_t ab = 0, abc = 0;
  if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(ab, c, &abc)) {
    return std::numeric_limits<std::size_t>::max();
  }
  return abc;
}

}  // namespace

std::size_t objective(std::span<const Seq> inputs, const Seq& y) {
  if (inputs.empty()) throw InvalidArgument("median objective over an empty set");
  std::size_t total = 0;
  for (const auto& x : inputs) total += edit_distance(y, x);
  return total;
}

MedianResult median3_exact(const Seq& x1, const Seq& x2, const Seq& x3, std::size_t cell_budget) {
  check_three(x1, x2, x3);
  const std::size_t cells = saturating_cube(x1.size() + 1, x2.size() + 1, x3.size() + 1);
  if (cells > cell_budget) throw BudgetExceeded(cells, cell_budget);
  return solve(x1, x2, x3, full_boxes(x1.size(), x2.size(), x3.size()), cell_budget);
}

MedianResult median3_guided(const Seq& x1, const Seq& x2, const Seq& x3, std::size_t radius,
                            std::size_t cell_budget) {
  if (radius == 0) return median3_exact(x1, x2, x3, cell_budget);
  check_three(x1, x2, x3);
  const auto s2 = guide_spans(optimal_alignment(x1, x2), radius);
  const auto s3 = guide_spans(optimal_alignment(x1, x3), radius);
  std::vector<Box> boxes(x1.size() + 1);
  for (std::size_t i = 0; i <= x1.size(); ++i) {
    boxes[i] = Box{s2[i].first, s2[i].second, s3[i].first, s3[i].second};
  }
  return solve(x1, x2, x3, std::move(boxes), cell_budget);
}

std::pair<Seq, std::size_t> best_of_inputs(std::span<const Seq> inputs) {
  if (inputs.empty()) throw InvalidArgument("best_of_inputs over an empty set");
  std::size_t best = 0;
  std::size_t best_value = std::numeric_limits<std::size_t>::max();
  for (std::size_t t = 0; t < inputs.size(); ++t) {
    const std::size_t v = objective(inputs, inputs[t]);
    if (v < best_value) {
      best_value = v;
      best = t;
    }
  }
  return {inputs[best], best_value};
}

MedianResult median_brute(std::span<const Seq> inputs, std::size_t max_len,
                          std::size_t candidate_budget) {
  if (inputs.empty()) throw InvalidArgument("median over an empty set");
  const Alphabet alphabet = inputs.front().alphabet();
  for (const auto& x : inputs) {
    if (x.alphabet() != alphabet) throw AlphabetMismatch("median inputs use different alphabets");
  }
  std::size_t count = 0;
  std::size_t layer = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    count += layer;
    if (count > candidate_budget) throw BudgetExceeded(count, candidate_budget);
    if (len < max_len) {
      if (layer > candidate_budget / alphabet.size() + 1) throw BudgetExceeded(candidate_budget + 1, candidate_budget);
      layer *= alphabet.size();
    }
  }

  MedianResult best;
  best.median = Seq(alphabet);
  best.objective = objective(inputs, best.median);
  std::vector<Symbol> word;
  for (std::size_t len = 1; len <= max_len; ++len) {
    word.assign(len, 0);
    for (;;) {
      Seq candidate(alphabet, word);
      const std::size_t v = objective(inputs, candidate);
      if (v < best.objective) {
        best.objective = v;
        best.median = std::move(candidate);
      }
      // Odometer increment, last position fastest: lexicographic order.
      std::size_t pos = len;
      while (pos > 0 && word[pos - 1] + 1u == alphabet.size()) word[--pos] = 0;
      if (pos == 0) break;
      ++word[pos - 1];
    }
  }
  for (const auto& x : inputs) best.per_input_distance.push_back(edit_distance(best.median, x));
  return best;
}

}  // namespace tracerec
