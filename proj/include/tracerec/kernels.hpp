#pragma once

// Inner-loop kernels for the indel metric.
//
// Every kernel has a scalar reference next to the fast variants; the fast
// variants are selected at runtime and must agree with the reference
// bit-for-bit (tests/unit/test_kernels.cpp).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "tracerec/seq.hpp"

namespace tracerec::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Best instruction set the running CPU supports and the binary was built with.
Isa detected_isa() noexcept;

/// Instruction set the dispatchers use; defaults to detected_isa().
Isa active_isa() noexcept;

/// Pin the dispatchers to `isa` (clamped to what is available). Process-wide.
void force_isa(Isa isa) noexcept;
void reset_isa() noexcept;

// ---------------------------------------------------------------------------
// Longest common subsequence / indel distance

/// O(|a||b|) two-row dynamic program. Reference implementation.
std::size_t lcs_scalar(std::span<const Symbol> a, std::span<const Symbol> b);

/// Bit-vector LCS, O(|a||b|/64) word operations.
std::size_t lcs_bitparallel(std::span<const Symbol> a, std::span<const Symbol> b);

/// Greedy furthest-reaching diagonal search for the indel distance.
/// Returns nullopt when the distance exceeds `max_distance`.
std::optional<std::size_t> indel_distance_greedy(std::span<const Symbol> a,
                                                 std::span<const Symbol> b,
                                                 std::size_t max_distance);

/// |a| + |b| - 2 LCS(a, b); picks greedy or bit-parallel by expected work.
std::size_t indel_distance(std::span<const Symbol> a, std::span<const Symbol> b);

// ---------------------------------------------------------------------------
// Fitting alignment: pattern against any substring of text, indel costs.

/// Best substring text[start..end] (1-based, end == start - 1 for the empty
/// substring). Ties: smallest cost, then smallest start, then smallest end.
struct FitResult {
  std::size_t start = 1;
  std::size_t end = 0;
  std::size_t cost = 0;

  friend bool operator==(const FitResult&, const FitResult&) = default;
};

FitResult fit_scalar(std::span<const Symbol> pattern, std::span<const Symbol> text);

/// Striped 8x32-bit kernel. Requires pattern.size() <= kFitAvx2MaxPattern and
/// text.size() <= kFitAvx2MaxText; only callable when detected_isa() == avx2.
FitResult fit_avx2(std::span<const Symbol> pattern, std::span<const Symbol> text);

inline constexpr std::size_t kFitAvx2MaxPattern = 16383;
inline constexpr std::size_t kFitAvx2MaxText = 65534;

/// Dispatching entry point. Pattern must be nonempty.
FitResult fit(std::span<const Symbol> pattern, std::span<const Symbol> text);

}  // namespace tracerec::kernels
