#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tracerec/seq.hpp"

namespace tracerec {

struct MedianResult {
  Seq median;
  std::size_t objective = 0;
  std::vector<std::size_t> per_input_distance;
};

/// Sum of indel distances from y to every member of S.
std::size_t objective(std::span<const Seq> inputs, const Seq& y);

inline constexpr std::size_t kDefaultMedianCellBudget = std::size_t{1} << 31;

/// Exact median of three sequences by the cubic dynamic program over
/// (i, j, k). A step either leaves one input symbol unmatched (cost 1) or
/// emits a median symbol matched by an agreeing subset of the next symbols
/// (cost 3 - |subset|). Among optimal medians the traceback prefers the
/// larger subset, then the smaller symbol, then skipping x1 < x2 < x3.
/// Throws BudgetExceeded when (|x1|+1)(|x2|+1)(|x3|+1) > cell_budget.
MedianResult median3_exact(const Seq& x1, const Seq& x2, const Seq& x3,
                           std::size_t cell_budget = kDefaultMedianCellBudget);

/// Same recurrence restricted to a tube around the pairwise optimal
/// alignments x1~x2 and x1~x3: at row i of x1 the x2 (x3) coordinate may
/// stray at most `radius` from where the guide alignment passes. Radius 0
/// falls back to median3_exact. Equal to the exact median whenever an
/// optimal median path fits in the tube; never worse than the objective of
/// the guide-consistent path.
MedianResult median3_guided(const Seq& x1, const Seq& x2, const Seq& x3, std::size_t radius,
                            std::size_t cell_budget = kDefaultMedianCellBudget);

/// Input minimising the objective (first on ties) and its objective value.
std::pair<Seq, std::size_t> best_of_inputs(std::span<const Seq> inputs);

/// Exhaustive minimum over every sequence of length <= max_len. Ties go to
/// the shorter, then lexicographically smaller, candidate. Throws
/// BudgetExceeded past `candidate_budget` candidates.
MedianResult median_brute(std::span<const Seq> inputs, std::size_t max_len,
                          std::size_t candidate_budget = std::size_t{1} << 22);

}  // namespace tracerec
