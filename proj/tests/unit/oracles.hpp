#pragma once

// Slow, obviously-correct reference computations used as test oracles. None
// of these share code with the library.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "tracerec/seq.hpp"

namespace oracle {

using Sym = std::vector<std::uint16_t>;

inline Sym syms(const tracerec::Seq& s) { return {s.symbols().begin(), s.symbols().end()}; }

inline tracerec::Seq seq(const Sym& v, std::uint32_t alphabet = 2) {
  return tracerec::Seq(tracerec::Alphabet(alphabet), std::vector<tracerec::Symbol>(v.begin(), v.end()));
}

inline tracerec::Seq bits(const std::string& s) { return tracerec::Seq::parse(s); }

inline Sym random_sym(std::mt19937_64& g, std::size_t len, std::uint32_t alphabet) {
  std::uniform_int_distribution<std::uint32_t> d(0, alphabet - 1);
  Sym out(len);
  for (auto& c : out) c = static_cast<std::uint16_t>(d(g));
  return out;
}

/// Is `sub` a subsequence of `s`?
inline bool is_subsequence(const Sym& sub, const Sym& s) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < s.size() && k < sub.size(); ++i) {
    if (s[i] == sub[k]) ++k;
  }
  return k == sub.size();
}

/// LCS by enumerating every subsequence of the shorter string (length <= 20).
inline std::size_t lcs_enumerate(const Sym& a, const Sym& b) {
  const Sym& s = a.size() <= b.size() ? a : b;
  const Sym& t = a.size() <= b.size() ? b : a;
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << s.size()); ++mask) {
    const auto pc = static_cast<std::size_t>(__builtin_popcount(mask));
    if (pc <= best) continue;
    Sym sub;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (mask >> i & 1u) sub.push_back(s[i]);
    }
    if (is_subsequence(sub, t)) best = pc;
  }
  return best;
}

/// LCS by a full suffix table (any length, quadratic memory).
inline std::size_t lcs_suffix(const Sym& a, const Sym& b) {
  std::vector<std::vector<std::size_t>> t(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = a.size(); i-- > 0;) {
    for (std::size_t j = b.size(); j-- > 0;) {
      t[i][j] = a[i] == b[j] ? t[i + 1][j + 1] + 1 : std::max(t[i + 1][j], t[i][j + 1]);
    }
  }
  return t[0][0];
}

inline std::size_t ed(const Sym& a, const Sym& b) { return a.size() + b.size() - 2 * lcs_suffix(a, b); }

struct Fit {
  std::size_t cost, start, end;
  bool operator==(const Fit&) const = default;
};

/// Exhaustive substring minimum of ED(pattern, text[start..end]); ties by
/// (cost, start, end). Empty substrings are [a, a-1].
inline Fit best_substring(const Sym& pattern, const Sym& text) {
  Fit best{std::numeric_limits<std::size_t>::max(), 0, 0};
  for (std::size_t a = 1; a <= text.size() + 1; ++a) {
    for (std::size_t b = a - 1; b <= text.size(); ++b) {
      const Sym sub(text.begin() + static_cast<std::ptrdiff_t>(a - 1), text.begin() + static_cast<std::ptrdiff_t>(b));
      const Fit f{ed(pattern, sub), a, b};
      if (std::tie(f.cost, f.start, f.end) < std::tie(best.cost, best.start, best.end)) best = f;
    }
  }
  return best;
}

/// Minimum of sum_k ED(y, inputs[k]) over all y of length <= max_len.
inline std::size_t median_opt(const std::vector<Sym>& inputs, std::uint32_t alphabet, std::size_t max_len) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  Sym y;
  const auto eval = [&] {
    std::size_t s = 0;
    for (const auto& x : inputs) s += ed(y, x);
    best = std::min(best, s);
  };
  // Odometer over all lengths.
  for (std::size_t len = 0; len <= max_len; ++len) {
    y.assign(len, 0);
    for (;;) {
      eval();
      std::size_t k = 0;
      while (k < len && y[k] + 1u == alphabet) y[k++] = 0;
      if (k == len) break;
      ++y[k];
    }
  }
  return best;
}

}  // namespace oracle
