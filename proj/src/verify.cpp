#include "tracerec/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "tracerec/alignment.hpp"
#include "tracerec/channel.hpp"
#include "tracerec/error.hpp"
#include "tracerec/median.hpp"
#include "tracerec/parallel.hpp"
#include "tracerec/rng.hpp"

#ifndef TRACEREC_VERSION
#define TRACEREC_VERSION "dev"
#endif

namespace tracerec {

namespace {

using json = nlohmann::ordered_json;

double ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Trial {
  std::uint64_t seed;
  Alphabet alphabet;
  double p;

  Seq source(std::size_t n) const { return random_seq(n, alphabet, seed, 0); }
  ChannelParams channel(std::uint64_t stream, double rate) const {
    ChannelParams c;
    c.p = rate;
    c.alphabet = alphabet;
    c.seed = seed;
    c.stream_id = stream;
    return c;
  }
};

// Runs one row-producing body per trial (possibly in parallel), then applies
// thresholds.
ExperimentReport run_trials(std::string name, const ExperimentConfig& cfg, std::vector<std::string> columns,
                            const std::function<std::vector<double>(const Trial&)>& body) {
  cfg.validate();
  ExperimentReport rep;
  rep.experiment = std::move(name);
  rep.config = cfg;
  rep.columns = std::move(columns);
  rep.trial_seeds.resize(cfg.trials);
  rep.rows.resize(cfg.trials);
  const Alphabet alphabet(cfg.alphabet_size);
  for (std::size_t t = 0; t < cfg.trials; ++t) rep.trial_seeds[t] = derive_seed(cfg.seed, t);
  parallel_for(cfg.trials, cfg.workers, [&](std::size_t t) {
    rep.rows[t] = body(Trial{rep.trial_seeds[t], alphabet, cfg.p});
    if (rep.rows[t].size() != rep.columns.size()) throw Error("experiment row has the wrong width");
  });
  return rep;
}

void finish(ExperimentReport& rep) {
  const auto thresholds =
      rep.config.thresholds.empty() ? default_thresholds(rep.experiment, rep.config) : rep.config.thresholds;
  rep.outcomes.clear();
  for (const auto& th : thresholds) {
    const double v = rep.quantity(th.quantity);
    rep.outcomes.push_back({th, v, v >= th.lo && v <= th.hi});
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void note_epsilon_range(ExperimentReport& rep, double factor) {
  const auto& c = rep.config;
  if (c.p <= 0.0) return;
  const double lower = factor * c.p * std::log2(1.0 / c.p);
  const bool held = c.epsilon >= lower && c.epsilon <= 1.0 / 6.0;
  rep.notes["epsilon_range"] = "formal range [" + fmt(factor) + " p log2(1/p), 1/6] = [" + fmt(lower) +
                               ", 0.166667]: " + (held ? "held" : "not held");
}

}  // namespace

std::string_view basis_name(Basis basis) noexcept {
  switch (basis) {
    case Basis::analytic: return "analytic";
    case Basis::calibrated: return "calibrated";
    case Basis::exact: return "exact";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  if (trials == 0) throw InvalidArgument("trials must be at least 1");
  if (!(p >= 0.0 && p < 1.0)) throw InvalidArgument("p must lie in [0, 1), got " + fmt(p));
  if (alphabet_size < 2 || alphabet_size > Alphabet::kMaxSize) {
    throw InvalidArgument("alphabet size must lie in [2, 65536], got " + std::to_string(alphabet_size));
  }
  if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be positive, got " + fmt(epsilon));
  if (!(delta >= 0.0)) throw InvalidArgument("delta must be non-negative, got " + fmt(delta));
  if (m == 0) throw InvalidArgument("m must be at least 1");
}

ReconstructionPlan ExperimentConfig::plan_for(std::size_t len) const {
  ReconstructionPlan plan;
  if (preset == PlanPreset::custom) {
    if (!anchor_len || !gap_len || !window_len) {
      throw InvalidArgument("custom preset needs --anchor-len, --gap-len and --window-len");
    }
    plan = ReconstructionPlan::custom(*anchor_len, *gap_len, *window_len);
  } else {
    plan = ReconstructionPlan::make(preset, len, p);
    if (anchor_len) plan.anchor_len = *anchor_len;
    if (gap_len) plan.gap_len = *gap_len;
    if (window_len) plan.window_len = *window_len;
  }
  if (median_radius) plan.median_radius = *median_radius;
  return plan;
}

Aggregate aggregate(const std::vector<double>& values) {
  Aggregate a;
  if (values.empty()) return a;
  double sum = 0;
  for (double v : values) sum += v;
  a.mean = sum / static_cast<double>(values.size());
  double ss = 0;
  for (double v : values) ss += (v - a.mean) * (v - a.mean);
  a.stddev = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
  auto sorted = values;
  std::sort(sorted.begin(), sorted.end());
  a.min = sorted.front();
  a.max = sorted.back();
  const std::size_t h = sorted.size() / 2;
  a.median = sorted.size() % 2 ? sorted[h] : 0.5 * (sorted[h - 1] + sorted[h]);
  return a;
}

std::vector<double> ExperimentReport::column(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw InvalidArgument("report has no column '" + std::string(name) + "'");
  const auto c = static_cast<std::size_t>(it - columns.begin());
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[c]);
  return out;
}

std::map<std::string, Aggregate> ExperimentReport::aggregates() const {
  std::map<std::string, Aggregate> out;
  for (const auto& c : columns) out[c] = aggregate(column(c));
  return out;
}

double ExperimentReport::quantity(std::string_view q) const {
  if (const auto it = derived.find(std::string(q)); it != derived.end()) return it->second;
  const auto open = q.find('(');
  if (open != std::string_view::npos && q.back() == ')') {
    const auto stat = q.substr(0, open);
    const auto col = q.substr(open + 1, q.size() - open - 2);
    const Aggregate a = aggregate(column(col));
    if (stat == "mean") return a.mean;
    if (stat == "stddev") return a.stddev;
    if (stat == "min") return a.min;
    if (stat == "max") return a.max;
    if (stat == "median") return a.median;
  }
  throw InvalidArgument("unknown report quantity '" + std::string(q) + "'");
}

bool ExperimentReport::passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const CheckOutcome& o) { return o.pass; });
}

std::string ExperimentReport::to_json() const {
  json cfg = {{"n", config.n},
              {"p", config.p},
              {"epsilon", config.epsilon},
              {"delta", config.delta},
              {"trials", config.trials},
              {"seed", config.seed},
              {"alphabet_size", config.alphabet_size},
              {"m", config.m}};
  if (experiment == "reconstruct-bench") {
    const auto plan = config.plan_for(config.n);
    cfg["preset"] = std::string(preset_name(plan.preset));
    cfg["anchor_len"] = plan.anchor_len;
    cfg["gap_len"] = plan.gap_len;
    cfg["window_len"] = plan.window_len;
    cfg["median_radius"] = plan.median_radius;
    if (!config.scaling_n.empty()) cfg["scaling_n"] = config.scaling_n;
  }

  json jrows = json::array();
  for (const auto& r : rows) {
    json row = json::object();
    for (std::size_t c = 0; c < columns.size(); ++c) row[columns[c]] = r[c];
    jrows.push_back(std::move(row));
  }
  json aggs = json::object();
  for (const auto& c : columns) {
    const Aggregate a = aggregate(column(c));
    aggs[c] = {{"mean", a.mean}, {"stddev", a.stddev}, {"min", a.min}, {"max", a.max}, {"median", a.median}};
  }
  json der = json::object();
  for (const auto& [k, v] : derived) der[k] = v;
  json pass = json::object();
  json checks = json::array();
  for (const auto& o : outcomes) {
    pass[o.threshold.check] = o.pass;
    checks.push_back({{"check", o.threshold.check},
                      {"quantity", o.threshold.quantity},
                      {"value", o.value},
                      {"lo", o.threshold.lo},
                      {"hi", o.threshold.hi},
                      {"basis", std::string(basis_name(o.threshold.basis))},
                      {"pass", o.pass}});
  }
  json notes_j = json::object();
  for (const auto& [k, v] : notes) notes_j[k] = v;

  json out = {{"experiment", experiment},
              {"config", cfg},
              {"rows", jrows},
              {"aggregates", aggs},
              {"derived", der},
              {"pass", pass},
              {"checks", checks},
              {"notes", notes_j},
              {"provenance", {{"version", TRACEREC_VERSION}, {"trial_seeds", trial_seeds}}}};
  return out.dump(2) + "\n";
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "trial,seed";
  for (const auto& c : columns) os << ',' << c;
  os << '\n';
  for (std::size_t t = 0; t < rows.size(); ++t) {
    os << t << ',' << trial_seeds[t];
    for (double v : rows[t]) os << ',' << v;
    os << '\n';
  }
  return os.str();
}

std::vector<Threshold> default_thresholds(std::string_view experiment, const ExperimentConfig& cfg) {
  const double p = cfg.p;
  const bool zero = p == 0.0;
  const auto exact0 = [](std::string check, std::string q) {
    return Threshold{std::move(check), std::move(q), 0.0, 0.0, Basis::exact};
  };
  if (experiment == "channel-stats") {
    if (zero) {
      return {exact0("no_edits", "max(edit_density)"),
              Threshold{"length_preserved", "min(length_ratio)", 1.0, 1.0, Basis::exact}};
    }
    // P(i carries an edit) = p, and every input position emits one symbol in expectation.
    return {{"edit_density", "mean(edit_density)", 0.95 * p, 1.05 * p, Basis::analytic},
            {"length_ratio", "mean(length_ratio)", 0.99, 1.01, Basis::analytic}};
  }
  if (experiment == "ed-concentration") {
    if (zero) return {exact0("identical", "max(ed)")};
    return {{"ed_ratio", "mean(ed_ratio)", 0.85, 1.10, Basis::calibrated}};
  }
  if (experiment == "alignment-agreement") {
    if (zero) return {exact0("degenerate", "max(agreeing)")};
    return {{"agreement", "mean(agree_ratio)", 0.5, 1e300, Basis::calibrated},
            {"zero_cost_windows", "mean(zero_cost_ratio)", 0.0, 6.0 * cfg.epsilon, Basis::analytic},
            {"near_optimal", "mean(cost_ratio)", 0.0, 1.0 + cfg.delta, Basis::analytic}};
  }
  if (experiment == "transitivity") {
    if (zero) return {exact0("double_zero", "max(ed_double)"), exact0("direct_zero", "max(ed_direct)")};
    return {{"relative_gap", "relative_gap", 0.0, 0.03, Basis::calibrated}};
  }
  if (experiment == "median-robustness") {
    if (zero) return {exact0("median_is_source", "max(ed_source_median)")};
    return {{"median_beats_trace", "median_vs_trace", 0.0, 0.5, Basis::calibrated},
            {"opt_scale", "mean(opt_ratio)", 0.8, 1.2, Basis::calibrated}};
  }
  if (experiment == "mtrace-objective") {
    if (zero) return {exact0("objective_zero", "max(objective)")};
    return {{"objective_scale", "mean(objective_ratio)", 0.9, 1.1, Basis::calibrated}};
  }
  if (experiment == "reconstruct-bench") {
    if (zero) return {exact0("exact_recovery", "max(ed_source_output)")};
    std::vector<Threshold> out = {{"quality", "median(ed_ratio)", 0.0, 0.3, Basis::calibrated},
                                  {"beats_single_trace", "min(beats_trace)", 1.0, 1.0, Basis::calibrated}};
    if (!cfg.scaling_n.empty()) out.push_back({"near_linear", "max_time_ratio", 0.0, 2.5, Basis::calibrated});
    return out;
  }
  throw InvalidArgument("unknown experiment '" + std::string(experiment) + "'");
}

AgreementCounts agreement_counts(const Alignment& planted, const Alignment& m,
                                 const std::vector<std::size_t>& well_separated, std::size_t half_width) {
  AgreementCounts out;
  out.well_separated = well_separated.size();
  const auto ap = planted.image_table();
  const std::size_t n = planted.source_length();
  for (const std::size_t i : well_separated) {
    if (i <= half_width || i + half_width > n) continue;
    const std::size_t lo = i - half_width, hi = i + half_width;
    const auto window = map_interval(m, {lo, hi});
    if (window.cost() == 0) ++out.zero_cost;
    const bool agree =
        !window.image.empty() && ap[lo] != 0 && ap[hi] != 0 && window.image.first == ap[lo] && window.image.last == ap[hi];
    if (!agree) continue;
    ++out.boundary_agree;
    if (window.cost() == 1) ++out.agreeing;
  }
  return out;
}

ExperimentReport channel_stats(const ExperimentConfig& cfg) {
  const std::size_t n = cfg.n;
  auto rep = run_trials("channel-stats", cfg,
                        {"edit_density", "length_ratio", "deletion_rate", "insertion_rate"}, [&](const Trial& t) {
                          const Seq x = t.source(n);
                          const auto [y, planted] = apply_gp(x, t.channel(1, t.p));
                          std::size_t del = 0, ins = 0;
                          for (const auto& op : planted.ops) {
                            del += op.kind == EditKind::erase;
                            ins += op.kind == EditKind::insert;
                          }
                          const double dn = static_cast<double>(n);
                          return std::vector<double>{ratio(edit_op_positions(planted, n).size(), dn),
                                                     ratio(y.size(), dn), ratio(del, dn), ratio(ins, dn)};
                        });
  finish(rep);
  return rep;
}

ExperimentReport ed_concentration(const ExperimentConfig& cfg) {
  const std::size_t n = cfg.n;
  const double eps = cfg.epsilon;
  auto rep = run_trials("ed-concentration", cfg, {"ed", "ed_ratio", "below_bound"}, [&](const Trial& t) {
    const Seq x = t.source(n);
    const Seq y = apply_gp(x, t.channel(1, t.p)).first;
    const double ed = static_cast<double>(edit_distance(x, y));
    const double pn = t.p * static_cast<double>(n);
    return std::vector<double>{ed, ratio(ed, pn), pn > 0 && ed < (1 - 6 * eps) * pn ? 1.0 : 0.0};
  });
  rep.notes["below_bound"] = "1 when ED(x,y) < (1 - 6 eps) p n";
  note_epsilon_range(rep, 15.0);
  finish(rep);
  return rep;
}

ExperimentReport alignment_agreement(const ExperimentConfig& cfg) {
  if (cfg.p > 0 && cfg.epsilon < cfg.p) throw InvalidArgument("agreement needs epsilon >= p");
  if (cfg.p > 0 && (cfg.delta < cfg.p || cfg.delta > cfg.epsilon)) {
    throw InvalidArgument("agreement needs p <= delta <= epsilon, got delta = " + fmt(cfg.delta));
  }
  const std::size_t n = cfg.n;
  auto rep = run_trials(
      "alignment-agreement", cfg,
      {"cost_ratio", "well_separated_ratio", "agree_ratio", "boundary_ratio", "zero_cost_ratio", "agreeing"},
      [&](const Trial& t) {
        const Seq x = t.source(n);
        const auto [y, planted] = apply_gp(x, t.channel(1, t.p));
        const double pn = t.p * static_cast<double>(n);
        if (t.p == 0.0) return std::vector<double>{0, 0, 0, 0, 0, 0};
        const Alignment m = optimal_alignment(x, y);
        const auto ws = well_separated(planted, n, t.p, cfg.epsilon);
        const auto c = agreement_counts(planted.alignment, m, ws.indices, ws.half_width);
        return std::vector<double>{ratio(m.cost(), pn),          ratio(c.well_separated, pn),
                                   ratio(c.agreeing, pn),        ratio(c.boundary_agree, pn),
                                   ratio(c.zero_cost, pn),       static_cast<double>(c.agreeing)};
      });
  note_epsilon_range(rep, 110.0);
  finish(rep);
  return rep;
}

ExperimentReport transitivity_check(const ExperimentConfig& cfg) {
  const std::size_t n = cfg.n;
  const double q = q_of_p(cfg.p);
  auto rep = run_trials("transitivity", cfg, {"ed_double", "ed_direct"}, [&](const Trial& t) {
    const Seq x = t.source(n);
    const Seq y1 = apply_gp(x, t.channel(1, t.p)).first;
    const Seq y2 = apply_gp(y1, t.channel(2, t.p)).first;
    const Seq z = apply_gp(x, t.channel(3, q)).first;
    return std::vector<double>{static_cast<double>(edit_distance(x, y2)), static_cast<double>(edit_distance(x, z))};
  });
  const double a = aggregate(rep.column("ed_double")).mean;
  const double b = aggregate(rep.column("ed_direct")).mean;
  rep.derived["q"] = q;
  rep.derived["relative_gap"] = ratio(std::abs(a - b), b);
  finish(rep);
  return rep;
}

ExperimentReport median_robustness(const ExperimentConfig& cfg) {
  const std::size_t n = cfg.n;
  auto rep = run_trials("median-robustness", cfg,
                        {"ed_source_median", "ed_source_trace", "opt", "opt_ratio", "max_input_ratio"},
                        [&](const Trial& t) {
                          const Seq s = t.source(n);
                          const Seq x1 = apply_gp(s, t.channel(1, t.p)).first;
                          const Seq x2 = apply_gp(s, t.channel(2, t.p)).first;
                          const Seq x3 = apply_gp(s, t.channel(3, t.p)).first;
                          const auto med = median3_exact(x1, x2, x3);
                          const double pn = t.p * static_cast<double>(n);
                          const auto worst = *std::max_element(med.per_input_distance.begin(),
                                                               med.per_input_distance.end());
                          return std::vector<double>{static_cast<double>(edit_distance(s, med.median)),
                                                     static_cast<double>(edit_distance(s, x1)),
                                                     static_cast<double>(med.objective),
                                                     ratio(med.objective, 3 * pn), ratio(worst, pn)};
                        });
  rep.derived["median_vs_trace"] =
      ratio(aggregate(rep.column("ed_source_median")).mean, aggregate(rep.column("ed_source_trace")).mean);
  finish(rep);
  return rep;
}

ExperimentReport mtrace_objective(const ExperimentConfig& cfg) {
  const std::size_t n = cfg.n;
  const std::size_t m = cfg.m;
  auto rep = run_trials("mtrace-objective", cfg, {"objective", "objective_ratio", "best_input_ratio"},
                        [&](const Trial& t) {
                          const Seq s = t.source(n);
                          std::vector<Seq> traces;
                          traces.reserve(m);
                          for (std::size_t k = 1; k <= m; ++k) traces.push_back(apply_gp(s, t.channel(k, t.p)).first);
                          const double obj = static_cast<double>(objective(traces, s));
                          const double pnm = t.p * static_cast<double>(n * m);
                          const auto best = best_of_inputs(traces);
                          return std::vector<double>{obj, ratio(obj, pnm), ratio(best.second, pnm)};
                        });
  finish(rep);
  return rep;
}

ExperimentReport reconstruct_bench(const ExperimentConfig& cfg) {
  const std::size_t n = cfg.n;
  std::vector<std::string> cols = {"ed_source_output", "ed_source_trace", "ed_ratio", "ed_ratio_p2log",
                                   "beats_trace", "lost_anchors"};
  if (cfg.timing) cols.push_back("seconds");
  // Trials run one after another; the pipeline itself uses the workers.
  ExperimentConfig serial = cfg;
  serial.workers = 1;
  auto rep = run_trials("reconstruct-bench", serial, cols, [&](const Trial& t) {
    const Seq s = t.source(n);
    const Seq s1 = apply_gp(s, t.channel(1, t.p)).first;
    const Seq s2 = apply_gp(s, t.channel(2, t.p)).first;
    const Seq s3 = apply_gp(s, t.channel(3, t.p)).first;
    const auto t0 = std::chrono::steady_clock::now();
    const auto d = reconstruct3_detailed(s1, s2, s3, cfg.plan_for(s1.size()), cfg.workers);
    const double secs = seconds_since(t0);
    const double ed_z = static_cast<double>(edit_distance(s, d.z));
    const double ed_1 = static_cast<double>(edit_distance(s, s1));
    const double pn = t.p * static_cast<double>(n);
    const double p2log = t.p > 0 && t.p < 1 ? t.p * t.p * std::log2(1.0 / t.p) * static_cast<double>(n) : 0.0;
    std::vector<double> row = {ed_z, ed_1, ratio(ed_z, pn), ratio(ed_z, p2log), ed_z < ed_1 ? 1.0 : 0.0,
                               static_cast<double>(d.lost_anchors())};
    if (cfg.timing) row.push_back(secs);
    return row;
  });
  rep.config = cfg;

  if (!cfg.scaling_n.empty()) {
    auto sizes = cfg.scaling_n;
    std::sort(sizes.begin(), sizes.end());
    std::vector<double> secs;
    const Trial t{derive_seed(cfg.seed, 0), Alphabet(cfg.alphabet_size), cfg.p};
    for (const std::size_t len : sizes) {
      const Seq s = t.source(len);
      const Seq s1 = apply_gp(s, t.channel(1, t.p)).first;
      const Seq s2 = apply_gp(s, t.channel(2, t.p)).first;
      const Seq s3 = apply_gp(s, t.channel(3, t.p)).first;
      const auto plan = cfg.plan_for(s1.size());
      const auto t0 = std::chrono::steady_clock::now();
      (void)reconstruct3(s1, s2, s3, cfg.p, plan, 1);
      secs.push_back(seconds_since(t0));
      rep.derived["seconds_n" + std::to_string(len)] = secs.back();
    }
    double worst = 0;
    for (std::size_t k = 1; k < sizes.size(); ++k) {
      // Normalise to a doubling of n.
      const double growth = std::log2(static_cast<double>(sizes[k]) / static_cast<double>(sizes[k - 1]));
      worst = std::max(worst, std::pow(secs[k] / secs[k - 1], 1.0 / std::max(growth, 1e-9)));
    }
    rep.derived["max_time_ratio"] = worst;
  }
  finish(rep);
  return rep;
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {"channel-stats",     "ed-concentration", "alignment-agreement",
                                                 "transitivity",      "median-robustness", "mtrace-objective",
                                                 "reconstruct-bench"};
  return names;
}

ExperimentConfig default_config(std::string_view experiment) {
  ExperimentConfig c;
  if (experiment == "channel-stats") {
    c.n = 100000, c.p = 0.1, c.trials = 20;
  } else if (experiment == "ed-concentration") {
    c.n = 100000, c.p = 0.05, c.trials = 20;
  } else if (experiment == "alignment-agreement") {
    c.n = 100000, c.p = 0.01, c.epsilon = 0.2, c.delta = 0.05, c.trials = 10;
  } else if (experiment == "transitivity") {
    c.n = 100000, c.p = 0.05, c.trials = 30;
  } else if (experiment == "median-robustness") {
    c.n = 600, c.p = 0.02, c.trials = 10;
  } else if (experiment == "mtrace-objective") {
    c.n = 10000, c.p = 0.05, c.m = 10, c.trials = 10;
  } else if (experiment == "reconstruct-bench") {
    c.n = std::size_t{1} << 20, c.p = 0.01, c.trials = 5;
  } else {
    (void)run_experiment(experiment, c);  // throws the usage error
  }
  return c;
}

ExperimentReport run_experiment(std::string_view name, const ExperimentConfig& cfg) {
  if (name == "channel-stats") return channel_stats(cfg);
  if (name == "ed-concentration") return ed_concentration(cfg);
  if (name == "alignment-agreement") return alignment_agreement(cfg);
  if (name == "transitivity") return transitivity_check(cfg);
  if (name == "median-robustness") return median_robustness(cfg);
  if (name == "mtrace-objective") return mtrace_objective(cfg);
  if (name == "reconstruct-bench") return reconstruct_bench(cfg);
  std::string known;
  for (const auto& n : experiment_names()) known += (known.empty() ? "" : ", ") + n;
  throw InvalidArgument("unknown experiment '" + std::string(name) + "' (expected one of: " + known + ")");
}

}  // namespace tracerec
