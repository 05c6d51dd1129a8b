#include "tracerec/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "tracerec/error.hpp"
#include "tracerec/median.hpp"
#include "tracerec/parallel.hpp"

namespace tracerec {

namespace {

std::size_t ceil_size(double v) {
  if (!std::isfinite(v) || v > 1e18) throw InvalidArgument("plan length overflows: " + std::to_string(v));
  return static_cast<std::size_t>(std::ceil(v));
}

double log2n(std::size_t n) {
  if (n < 2) throw InvalidArgument("plan presets need n >= 2, got " + std::to_string(n));
  return std::log2(static_cast<double>(n));
}

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("p must lie in [0, 1], got " + std::to_string(p));
}

}  // namespace

std::string_view preset_name(PlanPreset preset) noexcept {
  switch (preset) {
    case PlanPreset::paper: return "paper";
    case PlanPreset::desk: return "desk";
    case PlanPreset::custom: return "custom";
  }
  return "?";
}

PlanPreset parse_preset(std::string_view name) {
  if (name == "paper") return PlanPreset::paper;
  if (name == "desk") return PlanPreset::desk;
  if (name == "custom") return PlanPreset::custom;
  throw InvalidArgument("unknown preset '" + std::string(name) + "' (expected paper, desk or custom)");
}

ReconstructionPlan ReconstructionPlan::paper(std::size_t n, double p) {
  check_p(p);
  if (p == 0.0) throw InvalidArgument("paper preset needs p > 0 (its gap length is 240/p log^1.5 n)");
  const double lg = log2n(n);
  ReconstructionPlan plan;
  plan.anchor_len = ceil_size(lg * lg);
  plan.gap_len = ceil_size(240.0 / p * std::pow(lg, 1.5));
  plan.window_len = ceil_size(10.0 * lg * lg);
  plan.preset = PlanPreset::paper;
  return plan;
}

ReconstructionPlan ReconstructionPlan::desk(std::size_t n, double p) {
  check_p(p);
  ReconstructionPlan plan;
  plan.preset = PlanPreset::desk;
  if (n < 2) {
    // Degenerate input: one block, one anchor covering it.
    plan.anchor_len = std::max<std::size_t>(n, 1);
    plan.gap_len = 0;
    plan.window_len = plan.anchor_len;
    return plan;
  }
  const double lg = log2n(n);
  plan.anchor_len = std::min(n, ceil_size(lg * lg));
  const std::size_t room = n - plan.anchor_len;
  plan.gap_len = p == 0.0 ? room : std::min(room, ceil_size(4.0 / p * lg));
  plan.window_len = plan.anchor_len + 4 * plan.gap_len;
  return plan;
}

ReconstructionPlan ReconstructionPlan::custom(std::size_t anchor_len, std::size_t gap_len,
                                              std::size_t window_len) {
  ReconstructionPlan plan;
  plan.anchor_len = anchor_len;
  plan.gap_len = gap_len;
  plan.window_len = window_len;
  plan.preset = PlanPreset::custom;
  return plan;
}

ReconstructionPlan ReconstructionPlan::make(PlanPreset preset, std::size_t n, double p) {
  switch (preset) {
    case PlanPreset::paper: return paper(n, p);
    case PlanPreset::desk: return desk(n, p);
    case PlanPreset::custom: break;
  }
  throw InvalidArgument("custom plans need explicit anchor, gap and window lengths");
}

void ReconstructionPlan::validate(std::size_t s1_len) const {
  if (anchor_len == 0) throw InvalidArgument("anchor length must be at least 1");
  if (window_len < anchor_len) {
    throw InvalidArgument("window length " + std::to_string(window_len) + " is shorter than the anchor length " +
                          std::to_string(anchor_len));
  }
  if (s1_len < block_len()) {
    throw InvalidArgument(std::string(preset_name(preset)) + " plan does not fit: block length " +
                          std::to_string(block_len()) + " (anchor " + std::to_string(anchor_len) + " + gap " +
                          std::to_string(gap_len) + ") exceeds |s1| = " + std::to_string(s1_len) +
                          ", so there would be no block to reconstruct");
  }
}

std::string ReconstructionPlan::describe(std::size_t s1_len) const {
  std::ostringstream os;
  os << "preset=" << preset_name(preset) << " anchor=" << anchor_len << " gap=" << gap_len
     << " block=" << block_len() << " window=" << window_len << " radius=" << median_radius;
  if (block_len() > 0) os << " blocks=" << s1_len / block_len();
  return os.str();
}

std::vector<BlockSpec> plan_blocks(const Seq& s1, const ReconstructionPlan& plan) {
  plan.validate(s1.size());
  const std::size_t len = plan.block_len();
  const std::size_t r = s1.size() / len;
  const std::size_t offset = plan.gap_len / 2;
  std::vector<BlockSpec> out(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t first = i * len + 1;
    const std::size_t last = i + 1 == r ? s1.size() : first + len - 1;
    out[i].block = {first, last};
    out[i].anchor = {first + offset, first + offset + plan.anchor_len - 1};
  }
  return out;
}

std::vector<AnchorMatch> locate_anchors(std::span<const Seq> anchors, const Seq& trace,
                                        const ReconstructionPlan& plan) {
  std::vector<AnchorMatch> out;
  out.reserve(anchors.size());
  std::size_t prev_end = 0;  // end of the last accepted match
  std::size_t lost = 0;      // anchors lost since then
  for (const Seq& anchor : anchors) {
    require_same_alphabet(anchor, trace);
    const std::size_t from = prev_end + 1 + lost * plan.block_len();
    AnchorMatch found;
    if (from <= trace.size()) {
      const MatchResult m = best_match_windowed(anchor, trace, from, plan.window_len);
      const bool cheap = 3 * m.cost <= anchor.size();
      if (cheap && m.end >= m.start && m.start > prev_end) found = m;
    }
    if (found) {
      prev_end = found->end;
      lost = 0;
    } else {
      ++lost;
    }
    out.push_back(found);
  }
  return out;
}

std::vector<Interval> carve_blocks(std::size_t length, std::span<const AnchorMatch> matches) {
  std::vector<std::size_t> found;
  for (std::size_t i = 0; i < matches.size(); ++i) {
    const auto& m = matches[i];
    if (!m) continue;
    if (m->start == 0 || m->end > length || m->end + 1 < m->start) {
      throw InvalidArgument("match [" + std::to_string(m->start) + ", " + std::to_string(m->end) +
                            "] outside a trace of length " + std::to_string(length));
    }
    if (!found.empty() && matches[found.back()]->end >= m->start) {
      throw InvalidArgument("matches " + std::to_string(found.back() + 1) + " and " + std::to_string(i + 1) +
                            " overlap or are out of order");
    }
    found.push_back(i);
  }

  std::vector<Interval> blocks(matches.size(), Interval::empty_at(length + 1));
  if (found.empty()) {
    if (!blocks.empty()) blocks.front() = {1, length};
    return blocks;
  }
  // Empty blocks before a found anchor sit at that block's start.
  std::size_t boundary = 1;
  std::size_t next_found = 0;
  for (std::size_t i = 0; i < matches.size(); ++i) {
    if (!matches[i]) {
      blocks[i] = Interval::empty_at(boundary);
      continue;
    }
    const std::size_t t = next_found++;
    std::size_t start = 1;
    if (t > 0) start = (matches[found[t - 1]]->end + matches[i]->start) / 2;
    std::size_t end = length;
    if (t + 1 < found.size()) end = (matches[i]->end + matches[found[t + 1]]->start) / 2 - 1;
    blocks[i] = {start, end};
    boundary = end + 1;
  }
  // Leading lost anchors: empty at 1.
  for (std::size_t i = 0; i < found.front(); ++i) blocks[i] = Interval::empty_at(1);
  return blocks;
}

std::vector<Interval> carve_blocks(std::size_t length, std::span<const MatchResult> matches) {
  std::vector<AnchorMatch> wrapped(matches.begin(), matches.end());
  return carve_blocks(length, std::span<const AnchorMatch>(wrapped));
}

std::size_t ReconstructionDetail::lost_anchors() const {
  std::size_t lost = 0;
  for (const auto& trace : matches) {
    lost += static_cast<std::size_t>(std::count(trace.begin(), trace.end(), std::nullopt));
  }
  return lost;
}

ReconstructionDetail reconstruct3_detailed(const Seq& s1, const Seq& s2, const Seq& s3,
                                           const ReconstructionPlan& plan, unsigned workers) {
  require_same_alphabet(s1, s2);
  require_same_alphabet(s1, s3);
  ReconstructionDetail d;
  d.plan = plan;
  d.blocks = plan_blocks(s1, plan);
  const std::size_t r = d.blocks.size();

  std::vector<Seq> anchors;
  anchors.reserve(r);
  for (const auto& b : d.blocks) anchors.push_back(s1.slice(b.anchor));

  const Seq* others[2] = {&s2, &s3};
  parallel_for(2, workers, [&](std::size_t t) {
    d.matches[t] = locate_anchors(anchors, *others[t], plan);
    d.carved[t] = carve_blocks(others[t]->size(), std::span<const AnchorMatch>(d.matches[t]));
  });

  std::vector<Seq> parts(r);
  d.block_objective.assign(r, 0);
  parallel_for(r, workers, [&](std::size_t i) {
    const Seq x1 = s1.slice(d.blocks[i].block);
    const Seq x2 = s2.slice(d.carved[0][i]);
    const Seq x3 = s3.slice(d.carved[1][i]);
    auto res = median3_guided(x1, x2, x3, plan.median_radius);
    d.block_objective[i] = res.objective;
    parts[i] = std::move(res.median);
  });
  d.z = concat(parts, s1.alphabet());
  return d;
}

Seq reconstruct3(const Seq& s1, const Seq& s2, const Seq& s3, double p, const ReconstructionPlan& plan,
                 unsigned workers) {
  check_p(p);
  return reconstruct3_detailed(s1, s2, s3, plan, workers).z;
}

}  // namespace tracerec
