#pragma once

// Seeded desk-scale experiments. Each experiment produces one row per trial,
// aggregates over the rows, a few derived scalars, and pass/fail outcomes
// against thresholds carried in the config (never hard-coded at the check).

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tracerec/alignment.hpp"
#include "tracerec/reconstruct.hpp"

namespace tracerec {

/// Where a threshold comes from: a closed-form expectation or bound
/// ("analytic"), a one-off simulation pinned with margin ("calibrated"), or
/// an identity that must hold exactly ("exact").
enum class Basis { analytic, calibrated, exact };
std::string_view basis_name(Basis basis) noexcept;

/// Pass iff lo <= quantity <= hi. Quantities are "mean(col)", "stddev(col)",
/// "min(col)", "max(col)", "median(col)" for any row column, or the name of
/// a derived scalar.
struct Threshold {
  std::string check;
  std::string quantity;
  double lo = -1e300;
  double hi = 1e300;
  Basis basis = Basis::calibrated;
};

struct ExperimentConfig {
  std::size_t n = 100000;
  double p = 0.01;
  double epsilon = 0.2;
  double delta = 0.05;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::uint32_t alphabet_size = 2;
  std::size_t m = 3;
  unsigned workers = 1;
  bool timing = false;

  // reconstruct-bench only
  PlanPreset preset = PlanPreset::desk;
  std::optional<std::size_t> anchor_len, gap_len, window_len, median_radius;
  std::vector<std::size_t> scaling_n;  ///< extra lengths for the timing-ratio check

  /// Empty means "use the experiment's defaults for this config".
  std::vector<Threshold> thresholds;

  /// Throws InvalidArgument on out-of-range parameters (trials >= 1,
  /// 0 <= p < 1, alphabet size, ...).
  void validate() const;
  ReconstructionPlan plan_for(std::size_t n) const;
};

struct Aggregate {
  double mean = 0, stddev = 0, min = 0, max = 0, median = 0;
};
Aggregate aggregate(const std::vector<double>& values);

struct CheckOutcome {
  Threshold threshold;
  double value = 0;
  bool pass = false;
};

struct ExperimentReport {
  std::string experiment;
  ExperimentConfig config;
  std::vector<std::uint64_t> trial_seeds;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::map<std::string, double> derived;
  std::map<std::string, std::string> notes;
  std::vector<CheckOutcome> outcomes;

  std::vector<double> column(std::string_view name) const;
  std::map<std::string, Aggregate> aggregates() const;
  /// Value of a threshold quantity; throws InvalidArgument if unknown.
  double quantity(std::string_view q) const;
  bool passed() const;

  /// {"experiment", "config", "rows", "aggregates", "derived", "pass",
  ///  "checks", "provenance"}; byte-stable for a fixed config.
  std::string to_json() const;
  std::string to_csv() const;
};

/// Fraction of edited positions and trace length ratio under the two-stage channel.
ExperimentReport channel_stats(const ExperimentConfig& cfg);
/// ED(x, y) / (pn) for y a trace of x.
ExperimentReport ed_concentration(const ExperimentConfig& cfg);
/// Agreement of the canonical optimal alignment with the planted one on
/// isolated edits.
ExperimentReport alignment_agreement(const ExperimentConfig& cfg);
/// Two chained channels at p against one channel at q(p).
ExperimentReport transitivity_check(const ExperimentConfig& cfg);
/// Exact median of three traces against the source.
ExperimentReport median_robustness(const ExperimentConfig& cfg);
/// Objective of the source over m traces.
ExperimentReport mtrace_objective(const ExperimentConfig& cfg);
/// End-to-end reconstruction quality (and optional timing / scaling).
ExperimentReport reconstruct_bench(const ExperimentConfig& cfg);

const std::vector<std::string>& experiment_names();
/// The desk-scale setting each experiment runs at unless overridden.
ExperimentConfig default_config(std::string_view experiment);
/// Dispatch by CLI name ("channel-stats", ...); throws InvalidArgument on unknown names.
ExperimentReport run_experiment(std::string_view name, const ExperimentConfig& cfg);

/// The thresholds an experiment applies when cfg.thresholds is empty.
std::vector<Threshold> default_thresholds(std::string_view experiment, const ExperimentConfig& cfg);

/// Index sets for the agreement experiment, exposed for tests.
struct AgreementCounts {
  std::size_t well_separated = 0;  ///< |Ĩ|
  std::size_t agreeing = 0;        ///< |Ĩ_M|: boundaries agree and window cost is 1
  std::size_t zero_cost = 0;       ///< i in Ĩ whose window M matches at cost 0
  std::size_t boundary_agree = 0;  ///< boundaries agree, any cost
};
AgreementCounts agreement_counts(const Alignment& planted, const Alignment& m,
                                 const std::vector<std::size_t>& well_separated, std::size_t half_width);

}  // namespace tracerec
