#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TRACEREC_CLI) + " " + args + " 2>/dev/null";
  Run r{0, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "tracerec_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("gen with p=0 writes three copies of the base") {
  const auto out = scratch("copies.txt");
  REQUIRE(run("gen --n 200 --p 0 --m 3 --seed 4 --out " + out.string()).status == 0);
  const std::string base = slurp(out.string() + ".base");
  CHECK(base.size() == 201);
  CHECK(slurp(out) == base + base + base);
}

TEST_CASE("gen is byte-reproducible and writes the planted sidecar") {
  const auto a = scratch("a.txt"), b = scratch("b.txt"), pa = scratch("a.jsonl"), pb = scratch("b.jsonl");
  REQUIRE(run("gen --n 3000 --p 0.1 --seed 9 --out " + a.string() + " --planted " + pa.string()).status == 0);
  REQUIRE(run("gen --n 3000 --p 0.1 --seed 9 --out " + b.string() + " --planted " + pb.string()).status == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(pa) == slurp(pb));
  std::istringstream lines(slurp(pa));
  std::string first;
  std::getline(lines, first);
  const auto op = nlohmann::json::parse(first);
  CHECK(op["trace"] == 1);
  CHECK(op.contains("op"));
}

TEST_CASE("reconstruct from noiseless traces returns trace 1") {
  const auto t = scratch("clean.txt"), z = scratch("clean_z.txt");
  REQUIRE(run("gen --n 5000 --p 0 --seed 2 --out " + t.string()).status == 0);
  REQUIRE(run("reconstruct " + t.string() + " --p 0 --out " + z.string()).status == 0);
  CHECK(slurp(z) == slurp(t.string() + ".base"));
}

TEST_CASE("reconstruct rejects bad inputs") {
  const auto two = scratch("two.txt");
  spit(two, "0101\n0110\n");
  CHECK(run("reconstruct " + two.string() + " --p 0.1").status == 2);
  const auto t = scratch("small.txt");
  REQUIRE(run("gen --n 2000 --p 0.01 --seed 2 --out " + t.string()).status == 0);
  CHECK(run("reconstruct " + t.string() + " --p 0.01 --preset paper").status == 2);
  CHECK(run("reconstruct " + t.string() + " --preset custom --anchor-len 10").status == 2);
}

TEST_CASE("median subcommand") {
  const auto in = scratch("med.txt");
  spit(in, "00\n01\n11\n");
  const auto r = run("median " + in.string() + " --json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["objective"] == 4);
  CHECK(j["median"] == "01");

  spit(in, std::string(60, '0') + "\n" + std::string(60, '1') + "\n" + std::string(60, '0') + "\n");
  CHECK(run("median " + in.string() + " --max-cells 1000").status == 2);
}

TEST_CASE("eval subcommand") {
  const auto a = scratch("eval_a.txt"), b = scratch("eval_b.txt");
  spit(a, "0101\n");
  spit(b, "011\n");
  const auto same = nlohmann::json::parse(run("eval " + a.string() + " " + a.string() + " --json").out);
  CHECK(same["ed"] == 0);
  const auto diff = nlohmann::json::parse(run("eval " + a.string() + " " + b.string() + " --p 0.25 --json").out);
  CHECK(diff["ed"] == 1);
  CHECK(diff["ed_over_pn"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("experiment subcommand") {
  CHECK(run("experiment no-such-thing").status == 2);
  const auto r = run("experiment channel-stats --p 0 --n 1000 --trials 2 --json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"]["no_edits"] == true);
  CHECK(j["aggregates"]["edit_density"]["max"] == 0);
  CHECK(run("experiment ed-concentration --n 2000 --p 0.05 --trials 2 --alphabet-size 1024").status == 0);
  // A failing check gives exit status 1: at p = 0.5 most of a trace is noise.
  CHECK(run("experiment median-robustness --n 30 --p 0.5 --trials 2").status == 1);
}

TEST_CASE("outputs do not depend on the worker count") {
  const auto t = scratch("w.txt"), z1 = scratch("w1.txt"), z4 = scratch("w4.txt");
  REQUIRE(run("gen --n 40000 --p 0.02 --seed 3 --out " + t.string()).status == 0);
  REQUIRE(run("reconstruct " + t.string() + " --p 0.02 --workers 1 --out " + z1.string()).status == 0);
  REQUIRE(run("reconstruct " + t.string() + " --p 0.02 --workers 4 --out " + z4.string()).status == 0);
  CHECK(slurp(z1) == slurp(z4));
  const auto e1 = run("experiment transitivity --n 5000 --trials 4 --workers 1 --json").out;
  const auto e3 = run("experiment transitivity --n 5000 --trials 4 --workers 3 --json").out;
  CHECK(e1 == e3);
}
