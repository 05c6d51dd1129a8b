// tracerec: generate traces, reconstruct, take medians, evaluate, and run
// the seeded experiments.
//
// Exit status: 0 on success (and, for experiments, when every check
// passes), 1 when a check fails, 2 on usage or input errors.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tracerec/alignment.hpp"
#include "tracerec/channel.hpp"
#include "tracerec/error.hpp"
#include "tracerec/kernels.hpp"
#include "tracerec/median.hpp"
#include "tracerec/reconstruct.hpp"
#include "tracerec/verify.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace tracerec;

namespace {

struct Common {
  std::uint32_t alphabet_size = 2;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  bool json_out = false;
  bool timing = false;
  std::string out;
};

struct PlanFlags {
  std::string preset = "desk";
  std::optional<std::size_t> anchor_len, gap_len, window_len, median_radius;
};

void add_plan_flags(CLI::App* cmd, PlanFlags& f) {
  cmd->add_option("--preset", f.preset, "Plan geometry: paper, desk or custom")
      ->check(CLI::IsMember({"paper", "desk", "custom"}));
  cmd->add_option("--anchor-len", f.anchor_len, "Anchor length (overrides the preset)");
  cmd->add_option("--gap-len", f.gap_len, "Gap length between anchors (overrides the preset)");
  cmd->add_option("--window-len", f.window_len, "Anchor search window (overrides the preset)");
  cmd->add_option("--median-radius", f.median_radius, "Block median tube radius; 0 = full cubic DP");
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw Error("write failed: " + path);
}

// Three sequences from either one file of three lines or three files.
std::vector<Seq> read_three(const std::vector<std::string>& inputs, Alphabet alphabet) {
  std::vector<Seq> seqs;
  for (const auto& path : inputs) {
    auto part = read_sequences(path, alphabet);
    seqs.insert(seqs.end(), part.begin(), part.end());
  }
  if (seqs.size() != 3) {
    throw InvalidArgument("expected exactly three sequences, got " + std::to_string(seqs.size()));
  }
  return seqs;
}

Seq read_one(const std::string& path, Alphabet alphabet) {
  auto seqs = read_sequences(path, alphabet);
  if (seqs.size() != 1) {
    throw InvalidArgument(path + ": expected one sequence, got " + std::to_string(seqs.size()));
  }
  return seqs.front();
}

// ---------------------------------------------------------------------------

struct GenFlags {
  std::size_t n = 1000;
  double p = 0.01;
  std::size_t m = 3;
  std::string base_out;
  std::string planted;
  bool streaming = false;
};

int cmd_gen(const Common& c, const GenFlags& g) {
  if (g.n == 0) throw InvalidArgument("--n must be at least 1");
  if (g.m == 0) throw InvalidArgument("--m must be at least 1");
  if (c.out.empty()) throw InvalidArgument("gen needs --out for the traces");
  if (g.streaming && !g.planted.empty()) throw InvalidArgument("--planted needs the two-stage channel (drop --streaming)");

  const Alphabet alphabet(c.alphabet_size);
  const Seq base = random_seq(g.n, alphabet, c.seed, 0);
  ChannelParams params;
  params.p = g.p;
  params.alphabet = alphabet;
  params.seed = c.seed;
  params.validate();

  std::vector<Seq> traces;
  std::string sidecar;
  for (std::size_t k = 1; k <= g.m; ++k) {
    if (g.streaming) {
      traces.push_back(apply_rp(base, params.with_stream(k)));
      continue;
    }
    auto [trace, planted] = apply_gp(base, params.with_stream(k));
    if (!g.planted.empty()) sidecar += ops_to_jsonl(planted.ops, static_cast<int>(k));
    traces.push_back(std::move(trace));
  }

  const std::string base_path = g.base_out.empty() ? c.out + ".base" : g.base_out;
  const Seq base_only[] = {base};
  write_text(base_path, format_sequences(base_only));
  write_text(c.out, format_sequences(traces));
  if (!g.planted.empty()) write_text(g.planted, sidecar);

  if (c.json_out) {
    json lengths = json::array();
    for (const auto& t : traces) lengths.push_back(t.size());
    std::cout << json{{"base", base_path}, {"traces", c.out}, {"n", g.n}, {"m", g.m}, {"trace_lengths", lengths}}.dump()
              << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

ReconstructionPlan resolve_plan(const PlanFlags& f, std::size_t n, std::optional<double> p) {
  const PlanPreset preset = parse_preset(f.preset);
  ReconstructionPlan plan;
  if (preset == PlanPreset::custom) {
    if (!f.anchor_len || !f.gap_len || !f.window_len) {
      throw InvalidArgument("--preset custom needs --anchor-len, --gap-len and --window-len");
    }
    plan = ReconstructionPlan::custom(*f.anchor_len, *f.gap_len, *f.window_len);
  } else {
    if (!p) throw InvalidArgument("--preset " + f.preset + " derives its geometry from --p");
    plan = ReconstructionPlan::make(preset, n, *p);
    if (f.anchor_len) plan.anchor_len = *f.anchor_len;
    if (f.gap_len) plan.gap_len = *f.gap_len;
    if (f.window_len) plan.window_len = *f.window_len;
  }
  if (f.median_radius) plan.median_radius = *f.median_radius;
  return plan;
}

int cmd_reconstruct(const Common& c, const std::vector<std::string>& inputs, std::optional<double> p,
                    const PlanFlags& pf) {
  const auto seqs = read_three(inputs, Alphabet(c.alphabet_size));
  const auto plan = resolve_plan(pf, seqs[0].size(), p);
  plan.validate(seqs[0].size());
  std::cerr << "plan: " << plan.describe(seqs[0].size()) << "\n";

  const auto t0 = std::chrono::steady_clock::now();
  const auto d = reconstruct3_detailed(seqs[0], seqs[1], seqs[2], plan, c.workers);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.timing) std::cerr << "time: " << secs << " s (" << kernels::isa_name(kernels::active_isa()) << ")\n";

  const Seq out[] = {d.z};
  if (!c.json_out || !c.out.empty()) write_text(c.out, format_sequences(out));
  if (c.json_out) {
    json j = {{"length", d.z.size()},
              {"blocks", d.blocks.size()},
              {"lost_anchors", d.lost_anchors()},
              {"anchor_len", plan.anchor_len},
              {"gap_len", plan.gap_len},
              {"window_len", plan.window_len},
              {"median_radius", plan.median_radius}};
    if (c.out.empty()) j["z"] = d.z.to_text();
    std::cout << j.dump() << "\n";
  }
  if (d.lost_anchors() > 0) std::cerr << "lost anchors: " << d.lost_anchors() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_median(const Common& c, const std::vector<std::string>& inputs, std::size_t max_cells) {
  const auto seqs = read_three(inputs, Alphabet(c.alphabet_size));
  const auto r = median3_exact(seqs[0], seqs[1], seqs[2], max_cells);
  const Seq out[] = {r.median};
  if (c.json_out) {
    if (!c.out.empty()) write_text(c.out, format_sequences(out));
    std::cout << json{{"median", r.median.to_text()},
                      {"objective", r.objective},
                      {"per_input_distance", r.per_input_distance}}
                     .dump()
              << "\n";
    return 0;
  }
  write_text(c.out, format_sequences(out));
  std::cerr << "objective: " << r.objective << " (distances " << r.per_input_distance[0] << ", "
            << r.per_input_distance[1] << ", " << r.per_input_distance[2] << ")\n";
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_eval(const Common& c, const std::string& truth_path, const std::string& cand_path,
             std::optional<double> p) {
  const Alphabet alphabet(c.alphabet_size);
  const Seq truth = read_one(truth_path, alphabet);
  const Seq cand = read_one(cand_path, alphabet);
  const std::size_t ed = edit_distance(truth, cand);
  json out = {{"ed", ed}, {"n", truth.size()}, {"candidate_length", cand.size()}};
  if (p && *p > 0 && !truth.empty()) {
    const double n = static_cast<double>(truth.size());
    out["ed_over_pn"] = static_cast<double>(ed) / (*p * n);
    if (*p < 1) out["ed_over_p2logn"] = static_cast<double>(ed) / (*p * *p * std::log2(1 / *p) * n);
  }
  std::string text;
  if (c.json_out) {
    text = out.dump() + "\n";
  } else {
    for (const auto& [k, v] : out.items()) text += k + ": " + v.dump() + "\n";
  }
  write_text(c.out, text);
  return 0;
}

// ---------------------------------------------------------------------------

struct ExperimentFlags {
  std::string name;
  std::optional<std::size_t> n, trials, m;
  std::optional<double> p, epsilon, delta;
  std::string csv;
  std::vector<std::size_t> scaling;
};

int cmd_experiment(const Common& c, const ExperimentFlags& f, const PlanFlags& pf, bool seed_given) {
  ExperimentConfig cfg = default_config(f.name);
  if (f.n) cfg.n = *f.n;
  if (f.p) cfg.p = *f.p;
  if (f.epsilon) cfg.epsilon = *f.epsilon;
  if (f.delta) cfg.delta = *f.delta;
  if (f.trials) cfg.trials = *f.trials;
  if (f.m) cfg.m = *f.m;
  if (seed_given) cfg.seed = c.seed;
  cfg.alphabet_size = c.alphabet_size;
  cfg.workers = c.workers;
  cfg.timing = c.timing;
  cfg.preset = parse_preset(pf.preset);
  cfg.anchor_len = pf.anchor_len;
  cfg.gap_len = pf.gap_len;
  cfg.window_len = pf.window_len;
  cfg.median_radius = pf.median_radius;
  cfg.scaling_n = f.scaling;
  if (!cfg.scaling_n.empty()) cfg.timing = true;

  const auto rep = run_experiment(f.name, cfg);
  if (!c.out.empty()) write_text(c.out, rep.to_json());
  if (!f.csv.empty()) write_text(f.csv, rep.to_csv());
  if (c.json_out) std::cout << rep.to_json();

  for (const auto& o : rep.outcomes) {
    std::fprintf(stderr, "%-4s %-22s %s = %.6g  (allowed [%.6g, %.6g], %s)\n", o.pass ? "ok" : "FAIL",
                 o.threshold.check.c_str(), o.threshold.quantity.c_str(), o.value, o.threshold.lo,
                 o.threshold.hi, std::string(basis_name(o.threshold.basis)).c_str());
  }
  for (const auto& [k, v] : rep.notes) std::cerr << "note " << k << ": " << v << "\n";
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace reconstruction and three-string medians under the indel metric"};
  app.require_subcommand(1);

  Common common;
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--alphabet-size", common.alphabet_size, "Alphabet size (2..65536)")
        ->check(CLI::Range(2u, 65536u));
    cmd->add_option("--seed", common.seed, "Master seed");
    cmd->add_option("--workers", common.workers, "Worker threads (0 = all cores); never changes results");
    cmd->add_option("--out", common.out, "Output file (default stdout)");
    cmd->add_flag("--json", common.json_out, "Machine-readable JSON on stdout");
    cmd->add_flag("--timing", common.timing, "Report wall-clock times (output is then not reproducible)");
  };

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Draw a uniform base string and m traces of it");
  add_common(gen_cmd);
  gen_cmd->add_option("--n", gen.n, "Base length");
  gen_cmd->add_option("--p", gen.p, "Channel rate in [0, 1)");
  gen_cmd->add_option("--m", gen.m, "Number of traces");
  gen_cmd->add_option("--base-out", gen.base_out, "Base string file (default <out>.base)");
  gen_cmd->add_option("--planted", gen.planted, "Write the planted op log (JSON lines) here");
  gen_cmd->add_flag("--streaming", gen.streaming, "Use the streaming channel (no planted alignment)");

  std::vector<std::string> rec_inputs;
  std::optional<double> rec_p;
  PlanFlags rec_plan;
  auto* rec_cmd = app.add_subcommand("reconstruct", "Approximate the source from three traces");
  add_common(rec_cmd);
  rec_cmd->add_option("inputs", rec_inputs, "One file of three traces, or three files")->required();
  rec_cmd->add_option("--p", rec_p, "Channel rate the preset geometry is derived from");
  add_plan_flags(rec_cmd, rec_plan);

  std::vector<std::string> med_inputs;
  std::size_t max_cells = kDefaultMedianCellBudget;
  auto* med_cmd = app.add_subcommand("median", "Exact median of three sequences");
  add_common(med_cmd);
  med_cmd->add_option("inputs", med_inputs, "One file of three sequences, or three files")->required();
  med_cmd->add_option("--max-cells", max_cells, "Dynamic-program cell budget");

  std::string truth, candidate;
  std::optional<double> eval_p;
  auto* eval_cmd = app.add_subcommand("eval", "Edit distance of a candidate from the truth");
  add_common(eval_cmd);
  eval_cmd->add_option("truth", truth, "Truth file")->required();
  eval_cmd->add_option("candidate", candidate, "Candidate file")->required();
  eval_cmd->add_option("--p", eval_p, "Channel rate, for normalised distances");

  ExperimentFlags exp;
  PlanFlags exp_plan;
  auto* exp_cmd = app.add_subcommand("experiment", "Run a seeded experiment and check its thresholds");
  add_common(exp_cmd);
  exp_cmd->add_option("name", exp.name, "Experiment name")->required()->check(CLI::IsMember(experiment_names()));
  exp_cmd->add_option("--n", exp.n, "Source length");
  exp_cmd->add_option("--p", exp.p, "Channel rate");
  exp_cmd->add_option("--epsilon", exp.epsilon, "Window parameter");
  exp_cmd->add_option("--delta", exp.delta, "Near-optimality slack");
  exp_cmd->add_option("--trials", exp.trials, "Number of seeded trials");
  exp_cmd->add_option("--m", exp.m, "Number of traces (mtrace-objective)");
  exp_cmd->add_option("--csv", exp.csv, "Also write per-trial rows as CSV");
  exp_cmd->add_option("--scaling", exp.scaling, "reconstruct-bench: lengths for the timing-ratio check");
  add_plan_flags(exp_cmd, exp_plan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen_cmd) return cmd_gen(common, gen);
    if (*rec_cmd) return cmd_reconstruct(common, rec_inputs, rec_p, rec_plan);
    if (*med_cmd) return cmd_median(common, med_inputs, max_cells);
    if (*eval_cmd) return cmd_eval(common, truth, candidate, eval_p);
    if (*exp_cmd) return cmd_experiment(common, exp, exp_plan, exp_cmd->count("--seed") > 0);
  } catch (const std::exception& e) {
    std::cerr << "tracerec: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
