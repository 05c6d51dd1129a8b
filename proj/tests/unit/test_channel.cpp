#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tracerec/channel.hpp"
#include "tracerec/error.hpp"

using namespace tracerec;

namespace {

// Planted alignment from a script of M / D / I steps over a source of length n.
PlantedAlignment scripted(const std::string& script, std::size_t n) {
  std::vector<EditOp> ops;
  std::vector<AlignedPair> pairs;
  std::size_t i = 1, j = 1;
  for (const char c : script) {
    if (c == 'M') {
      ops.push_back({EditKind::match, i, j, 0});
      pairs.push_back({i++, j++});
    } else if (c == 'D') {
      ops.push_back({EditKind::erase, i++, 0, 0});
    } else {
      ops.push_back({EditKind::insert, i, j++, 1});
    }
  }
  REQUIRE(i == n + 1);
  return {Alignment(n, j - 1, pairs), ops};
}

std::string with_op_at(std::size_t n, std::size_t pos, char op) {
  std::string s;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == pos && op == 'D') {
      s += 'D';
      continue;
    }
    if (i == pos && op == 'I') s += 'I';
    s += 'M';
  }
  return s;
}

ChannelParams params(double p, std::uint64_t seed, std::uint64_t stream = 0, std::uint32_t sigma = 2) {
  ChannelParams c;
  c.p = p;
  c.alphabet = Alphabet(sigma);
  c.seed = seed;
  c.stream_id = stream;
  return c;
}

// Two-sample Kolmogorov-Smirnov statistic.
double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
  }
  return d;
}

}  // namespace

TEST_CASE("noiseless channel is the identity") {
  const Seq x = random_seq(500, Alphabet(4), 7, 0);
  CHECK(apply_rp(x, params(0, 1, 0, 4)) == x);
  const auto [y, planted] = apply_gp(x, params(0, 1, 0, 4));
  CHECK(y == x);
  CHECK(planted.alignment == Alignment::identity(500));
  CHECK(std::all_of(planted.ops.begin(), planted.ops.end(), [](const EditOp& op) { return op.kind == EditKind::match; }));
  CHECK(edit_op_positions(planted, 500).size() == 0);
  CHECK(well_separated(planted, 500, 0.01, 0.2).size() == 0);
}

TEST_CASE("empty input yields an empty trace") {
  const Seq x(Alphabet{});
  CHECK(apply_rp(x, params(0.3, 2)).empty());
  CHECK(apply_gp(x, params(0.3, 2)).first.empty());
}

TEST_CASE("channel parameters are validated") {
  const Seq x = oracle::bits("0101");
  CHECK_THROWS_AS(apply_rp(x, params(1.0, 1)), InvalidArgument);
  CHECK_THROWS_AS(apply_gp(x, params(-0.1, 1)), InvalidArgument);
  CHECK_THROWS_AS(apply_gp(x, params(0.1, 1, 0, 3)), AlphabetMismatch);
}

TEST_CASE("planted alignment is consistent with the trace") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Seq x = random_seq(2000, Alphabet(3), seed, 0);
    const auto [y, planted] = apply_gp(x, params(0.2, seed, 1, 3));
    CHECK(planted.alignment.valid_for(x, y));
    CHECK(planted.replay(x) == y);
    CHECK(planted.alignment.cost() == static_cast<std::size_t>(std::count_if(
                                          planted.ops.begin(), planted.ops.end(),
                                          [](const EditOp& op) { return op.kind != EditKind::match; })));
  }
}

TEST_CASE("channel output depends only on seed and stream") {
  const Seq x = random_seq(1000, Alphabet{}, 5, 0);
  CHECK(apply_gp(x, params(0.1, 9, 3)).first == apply_gp(x, params(0.1, 9, 3)).first);
  CHECK(apply_gp(x, params(0.1, 9, 3)).first != apply_gp(x, params(0.1, 9, 4)).first);
}

TEST_CASE("q(p)") {
  CHECK(q_of_p(0) == 0.0);
  CHECK(q_of_p(0.1) == doctest::Approx(0.37 / 1.99).epsilon(1e-15));
  CHECK(q_of_p(0.1) == doctest::Approx(0.18592964824).epsilon(1e-10));
  // q = 2p - Theta(p^2)
  for (double p : {1e-2, 1e-3, 1e-4}) CHECK(q_of_p(p) / (2 * p) == doctest::Approx(1).epsilon(2 * p));
  CHECK_THROWS_AS(q_of_p(1.0), InvalidArgument);
  CHECK_THROWS_AS(q_of_p(-0.5), InvalidArgument);
}

TEST_CASE("edit positions from scripted op logs") {
  const auto del = scripted(with_op_at(10, 5, 'D'), 10);
  CHECK(edit_op_positions(del, 10).indices == std::vector<std::size_t>{5});
  // Insertion while the pointer sits at 7 counts toward 7.
  const auto ins = scripted(with_op_at(10, 7, 'I'), 10);
  CHECK(edit_op_positions(ins, 10).indices == std::vector<std::size_t>{7});
  // Several insertions at one pointer position are one index.
  const auto two = scripted("MMIIMD", 4);
  CHECK(edit_op_positions(two, 4).indices == std::vector<std::size_t>{3, 4});
}

TEST_CASE("well-separated positions") {
  // p = 0.1, eps = 0.2: half width 2, reach 4.
  const std::size_t n = 40;
  SUBCASE("lone deletion") {
    const auto s = well_separated(scripted(with_op_at(n, 20, 'D'), n), n, 0.1, 0.2);
    CHECK(s.half_width == 2);
    CHECK(s.reach == 4);
    CHECK(s.indices == std::vector<std::size_t>{20});
  }
  SUBCASE("lone insertion") {
    CHECK(well_separated(scripted(with_op_at(n, 20, 'I'), n), n, 0.1, 0.2).indices ==
          std::vector<std::size_t>{20});
  }
  SUBCASE("double insertion is not isolated") {
    std::string s = with_op_at(n, 20, 'I');
    s.insert(s.find('I'), "I");
    CHECK(well_separated(scripted(s, n), n, 0.1, 0.2).size() == 0);
  }
  SUBCASE("edits within reach exclude each other") {
    std::string s;
    for (std::size_t i = 1; i <= n; ++i) s += i == 20 || i == 23 ? 'D' : 'M';
    REQUIRE(edit_op_positions(scripted(s, n), n).indices == std::vector<std::size_t>{20, 23});
    CHECK(well_separated(scripted(s, n), n, 0.1, 0.2).size() == 0);
    // With reach 2 (eps = 0.1) they no longer interact.
    CHECK(well_separated(scripted(s, n), n, 0.1, 0.1).indices == std::vector<std::size_t>{20, 23});
  }
  SUBCASE("positions near the ends are excluded") {
    CHECK(well_separated(scripted(with_op_at(n, 3, 'D'), n), n, 0.1, 0.2).size() == 0);
    CHECK(well_separated(scripted(with_op_at(n, 38, 'D'), n), n, 0.1, 0.2).size() == 0);
  }
  SUBCASE("epsilon below p is rejected") {
    CHECK_THROWS_AS(well_separated(scripted(with_op_at(n, 20, 'D'), n), n, 0.1, 0.05), InvalidArgument);
  }
}

TEST_CASE("well-separated set is a subset of the edited positions") {
  const std::size_t n = 20000;
  const Seq x = random_seq(n, Alphabet{}, 3, 0);
  const auto planted = apply_gp(x, params(0.02, 3, 1)).second;
  const auto all = edit_op_positions(planted, n).indices;
  const auto ws = well_separated(planted, n, 0.02, 0.2).indices;
  CHECK(!ws.empty());
  CHECK(std::includes(all.begin(), all.end(), ws.begin(), ws.end()));
  // Neighbouring well-separated indices are more than the reach apart.
  for (std::size_t k = 1; k < ws.size(); ++k) CHECK(ws[k] - ws[k - 1] > 20);
}

TEST_CASE("streaming and two-stage channels have the same law") {
  // Compare trace lengths and distances to the source over many draws.
  const Seq x = random_seq(300, Alphabet{}, 11, 0);
  std::vector<double> len_r, len_g, ones_r, ones_g;
  for (std::uint64_t s = 0; s < 3000; ++s) {
    const Seq yr = apply_rp(x, params(0.15, 100 + s));
    const Seq yg = apply_gp(x, params(0.15, 900000 + s)).first;
    len_r.push_back(static_cast<double>(yr.size()));
    len_g.push_back(static_cast<double>(yg.size()));
    ones_r.push_back(static_cast<double>(std::count(yr.symbols().begin(), yr.symbols().end(), 1)));
    ones_g.push_back(static_cast<double>(std::count(yg.symbols().begin(), yg.symbols().end(), 1)));
  }
  // alpha = 0.001 critical value for two samples of 3000.
  const double crit = 1.95 * std::sqrt(2.0 / 3000.0);
  CHECK(ks_statistic(len_r, len_g) < crit);
  CHECK(ks_statistic(ones_r, ones_g) < crit);
}

TEST_CASE("channel output is symmetric in law") {
  // For uniform x the trace is uniform too, insertions and deletions are
  // equally frequent, and |y| - |x| is symmetric about 0.
  std::size_t ins = 0, del = 0, ones = 0, total = 0;
  long long diff_sum = 0;
  std::vector<double> diffs;
  for (std::uint64_t s = 0; s < 400; ++s) {
    const Seq x = random_seq(1000, Alphabet{}, s, 0);
    const auto [y, planted] = apply_gp(x, params(0.1, s, 1));
    for (const auto& op : planted.ops) {
      ins += op.kind == EditKind::insert;
      del += op.kind == EditKind::erase;
    }
    ones += static_cast<std::size_t>(std::count(y.symbols().begin(), y.symbols().end(), 1));
    total += y.size();
    const long long d = static_cast<long long>(y.size()) - 1000;
    diff_sum += d;
    diffs.push_back(static_cast<double>(d));
  }
  // ~21000 edits of each kind; 5 sigma is ~1000.
  CHECK(std::abs(static_cast<double>(ins) - static_cast<double>(del)) < 1000);
  CHECK(static_cast<double>(ones) / static_cast<double>(total) == doctest::Approx(0.5).epsilon(0.01));
  CHECK(std::abs(static_cast<double>(diff_sum) / 400.0) < 2.5);
  std::vector<double> mirrored;
  for (double d : diffs) mirrored.push_back(-d);
  CHECK(ks_statistic(diffs, mirrored) < 1.95 * std::sqrt(2.0 / 400.0));
}

TEST_CASE("op log serialisation") {
  const auto planted = scripted("MDIM", 3);
  const std::string want =
      "{\"op\":\"M\",\"i\":1,\"j\":1}\n{\"op\":\"D\",\"i\":2}\n{\"op\":\"I\",\"j\":2,\"sym\":1}\n"
      "{\"op\":\"M\",\"i\":3,\"j\":3}\n";
  CHECK(ops_to_jsonl(planted.ops) == want);
  CHECK(ops_to_jsonl(planted.ops, 2).rfind("{\"trace\":2,\"op\":\"M\"", 0) == 0);
}
