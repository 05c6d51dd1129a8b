#pragma once

// Approximate reconstruction of a random string from three traces.
//
// Trace 1 is cut into equal blocks; the centred anchor of each block is
// located in traces 2 and 3 by a sequential windowed best-match search; the
// other traces are cut halfway between consecutive anchor matches; each
// triple of corresponding blocks is replaced by its median, and the block
// medians are concatenated.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tracerec/patmatch.hpp"
#include "tracerec/seq.hpp"

namespace tracerec {

enum class PlanPreset { paper, desk, custom };

std::string_view preset_name(PlanPreset preset) noexcept;
PlanPreset parse_preset(std::string_view name);

struct ReconstructionPlan {
  std::size_t anchor_len = 1;
  std::size_t gap_len = 0;
  std::size_t window_len = 1;
  /// Tube radius of the block median; 0 runs the full cubic program.
  std::size_t median_radius = 16;
  PlanPreset preset = PlanPreset::custom;

  std::size_t block_len() const noexcept { return anchor_len + gap_len; }

  /// anchor = ceil(log2(n)^2), gap = ceil((240/p) log2(n)^1.5),
  /// window = ceil(10 log2(n)^2).
  static ReconstructionPlan paper(std::size_t n, double p);

  /// anchor = ceil(log2(n)^2), gap = ceil((4/p) log2(n)), window = anchor + 4 gap.
  /// Both lengths are capped so that one block always fits in n symbols.
  static ReconstructionPlan desk(std::size_t n, double p);

  static ReconstructionPlan custom(std::size_t anchor_len, std::size_t gap_len, std::size_t window_len);

  static ReconstructionPlan make(PlanPreset preset, std::size_t n, double p);

  /// Throws InvalidArgument naming the violated constraint.
  void validate(std::size_t s1_len) const;
  std::string describe(std::size_t s1_len) const;
};

struct BlockSpec {
  Interval block;
  Interval anchor;
};

/// floor(|s1| / block_len) consecutive blocks, the remainder joined to the
/// last one; anchors are centred in the nominal block_len span.
std::vector<BlockSpec> plan_blocks(const Seq& s1, const ReconstructionPlan& plan);

/// nullopt marks an anchor declared lost.
using AnchorMatch = std::optional<MatchResult>;

/// Sequential windowed search. The window for anchor i starts one past the
/// previous match; a match costing more than anchor_len / 3 (or overlapping
/// its predecessor) is lost, and the next window then starts one further
/// block_len ahead for every lost anchor.
std::vector<AnchorMatch> locate_anchors(std::span<const Seq> anchors, const Seq& trace,
                                        const ReconstructionPlan& plan);

/// Cut [1, length] halfway between consecutive matches. The first non-empty
/// block starts at 1 and the last ends at `length`; lost anchors get empty
/// blocks. Throws InvalidArgument on overlapping or decreasing matches.
std::vector<Interval> carve_blocks(std::size_t length, std::span<const AnchorMatch> matches);
std::vector<Interval> carve_blocks(std::size_t length, std::span<const MatchResult> matches);

struct ReconstructionDetail {
  ReconstructionPlan plan;
  std::vector<BlockSpec> blocks;
  std::array<std::vector<AnchorMatch>, 2> matches;  ///< traces 2 and 3
  std::array<std::vector<Interval>, 2> carved;      ///< traces 2 and 3
  std::vector<std::size_t> block_objective;
  Seq z;

  std::size_t lost_anchors() const;
};

ReconstructionDetail reconstruct3_detailed(const Seq& s1, const Seq& s2, const Seq& s3,
                                           const ReconstructionPlan& plan, unsigned workers = 1);

Seq reconstruct3(const Seq& s1, const Seq& s2, const Seq& s3, double p,
                 const ReconstructionPlan& plan, unsigned workers = 1);

}  // namespace tracerec
