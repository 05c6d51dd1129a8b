#include "tracerec/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tracerec/error.hpp"

namespace tracerec {

void ChannelParams::validate() const {
  if (!(p >= 0.0 && p < 1.0)) {
    throw InvalidArgument("channel rate p must lie in [0, 1), got " + std::to_string(p));
  }
}

Seq PlantedAlignment::replay(const Seq& x) const {
  std::vector<Symbol> out;
  out.reserve(alignment.target_length());
  for (const auto& op : ops) {
    switch (op.kind) {
      case EditKind::match:
        out.push_back(x.at(op.i));
        break;
      case EditKind::insert:
        out.push_back(op.symbol);
        break;
      case EditKind::erase:
        break;
    }
  }
  return Seq(x.alphabet(), std::move(out));
}

Seq random_seq(std::size_t n, Alphabet alphabet, Rng& rng) {
  std::vector<Symbol> out(n);
  for (auto& s : out) s = static_cast<Symbol>(rng.below(alphabet.size()));
  return Seq(alphabet, std::move(out));
}

Seq random_seq(std::size_t n, Alphabet alphabet, std::uint64_t seed, std::uint64_t stream_id) {
  Rng rng(seed, stream_id);
  return random_seq(n, alphabet, rng);
}

Seq apply_rp(const Seq& x, const ChannelParams& params) {
  params.validate();
  if (x.alphabet() != params.alphabet) throw AlphabetMismatch("channel alphabet differs from input");
  Rng rng(params.seed, params.stream_id);
  const double keep = 1.0 - params.p;
  const double keep_or_drop = 1.0 - params.p / 2.0;
  std::vector<Symbol> out;
  out.reserve(x.size() + x.size() / 16);
  std::size_t i = 0;
  while (i < x.size()) {
    const double u = rng.uniform();
    if (u < keep) {
      out.push_back(x[i++]);
    } else if (u < keep_or_drop) {
      ++i;
    } else {
      out.push_back(static_cast<Symbol>(rng.below(params.alphabet.size())));
    }
  }
  return Seq(x.alphabet(), std::move(out));
}

std::pair<Seq, PlantedAlignment> apply_gp(const Seq& x, const ChannelParams& params) {
  params.validate();
  if (x.alphabet() != params.alphabet) throw AlphabetMismatch("channel alphabet differs from input");
  Rng rng(params.seed, params.stream_id);
  const double keep = 1.0 - params.p;
  const double keep_or_drop = 1.0 - params.p / 2.0;

  // Stage one: the alignment alone.
  std::vector<EditOp> ops;
  ops.reserve(x.size() + x.size() / 8);
  std::vector<AlignedPair> pairs;
  pairs.reserve(x.size());
  std::size_t i = 1, j = 1;
  while (i <= x.size()) {
    const double u = rng.uniform();
    if (u < keep) {
      ops.push_back({EditKind::match, i, j, 0});
      pairs.push_back({i, j});
      ++i;
      ++j;
    } else if (u < keep_or_drop) {
      ops.push_back({EditKind::erase, i, 0, 0});
      ++i;
    } else {
      ops.push_back({EditKind::insert, i, j, 0});
      ++j;
    }
  }
  const std::size_t trace_len = j - 1;

  // Stage two: copy matched symbols, draw inserted ones.
  std::vector<Symbol> y(trace_len);
  for (auto& op : ops) {
    if (op.kind == EditKind::match) {
      y[op.j - 1] = x[op.i - 1];
    } else if (op.kind == EditKind::insert) {
      op.symbol = static_cast<Symbol>(rng.below(params.alphabet.size()));
      y[op.j - 1] = op.symbol;
    }
  }

  PlantedAlignment planted{Alignment(x.size(), trace_len, std::move(pairs)), std::move(ops)};
  return {Seq(x.alphabet(), std::move(y)), std::move(planted)};
}

double q_of_p(double p) {
  if (!(p >= 0.0 && p < 1.0)) throw InvalidArgument("q(p) needs p in [0, 1), got " + std::to_string(p));
  return p * (4.0 - 3.0 * p) / (2.0 - p * p);
}

EditOpIndexSet edit_op_positions(const PlantedAlignment& planted, std::size_t n) {
  std::vector<char> hit(n + 1, 0);
  for (const auto& op : planted.ops) {
    if (op.kind == EditKind::match) continue;
    const std::size_t at = std::min(op.i, n);
    if (at >= 1) hit[at] = 1;
  }
  EditOpIndexSet out;
  for (std::size_t i = 1; i <= n; ++i) {
    if (hit[i]) out.indices.push_back(i);
  }
  return out;
}

WellSeparatedSet well_separated(const PlantedAlignment& planted, std::size_t n, double p,
                                double epsilon) {
  if (!(p > 0.0) || epsilon < p) {
    throw InvalidArgument("well-separated positions need 0 < p <= epsilon");
  }
  WellSeparatedSet out;
  out.epsilon = epsilon;
  out.half_width = static_cast<std::size_t>(std::floor(epsilon / p));
  out.reach = static_cast<std::size_t>(std::floor(2.0 * epsilon / p));
  const std::size_t reach = out.reach;
  const std::size_t margin = std::max<std::size_t>(reach, 1);
  if (n < 2 * margin + 1) return out;

  const auto img = planted.alignment.image_table();
  // steady[k] = 1 iff x[k-1] and x[k] are matched to adjacent trace positions.
  // prefix[k] = steady[2] + ... + steady[k].
  std::vector<std::size_t> prefix(n + 1, 0);
  for (std::size_t k = 2; k <= n; ++k) {
    const bool steady = img[k] != 0 && img[k - 1] != 0 && img[k] == img[k - 1] + 1;
    prefix[k] = prefix[k - 1] + (steady ? 1 : 0);
  }
  const auto all_steady = [&](std::size_t lo, std::size_t hi) {
    if (lo > hi) return true;
    return prefix[hi] - prefix[lo - 1] == hi - lo + 1;
  };

  for (std::size_t i = margin + 1; i + margin <= n; ++i) {
    const bool left_calm = all_steady(i + 1 - reach, i - 1);  // j in [2, reach] to the left
    if (!left_calm) continue;
    const bool lone_delete = img[i - 1] != 0 && img[i + 1] != 0 && img[i + 1] == img[i - 1] + 1 &&
                             all_steady(i + 2, i + reach);
    const bool lone_insert = img[i] != 0 && img[i - 1] != 0 && img[i] == img[i - 1] + 2 &&
                             all_steady(i + 1, i + reach);
    if (lone_delete || lone_insert) out.indices.push_back(i);
  }
  return out;
}

std::string ops_to_jsonl(std::span<const EditOp> ops, int trace_index) {
  std::string out;
  out.reserve(ops.size() * 24);
  const std::string prefix = trace_index >= 0 ? "{\"trace\":" + std::to_string(trace_index) + "," : "{";
  for (const auto& op : ops) {
    out += prefix;
    switch (op.kind) {
      case EditKind::match:
        out += "\"op\":\"M\",\"i\":" + std::to_string(op.i) + ",\"j\":" + std::to_string(op.j);
        break;
      case EditKind::erase:
        out += "\"op\":\"D\",\"i\":" + std::to_string(op.i);
        break;
      case EditKind::insert:
        out += "\"op\":\"I\",\"j\":" + std::to_string(op.j) + ",\"sym\":" + std::to_string(op.symbol);
        break;
    }
    out += "}\n";
  }
  return out;
}

}  // namespace tracerec
