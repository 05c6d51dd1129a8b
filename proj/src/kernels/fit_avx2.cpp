// Striped (Farrar-layout) fitting alignment with 8 x int32 lanes.
//
// Each lane carries a packed key  cost << 16 | start  so that one signed
// 32-bit min reproduces the lexicographic (cost, start) order of the scalar
// reference, and adding 1 << 16 charges one unit of cost.

#include <cstdint>
#include <vector>

#include "tracerec/error.hpp"
#include "tracerec/kernels.hpp"

#if defined(TRACEREC_HAVE_AVX2_KERNEL)
#include <immintrin.h>
#endif

namespace tracerec::kernels {

#if defined(TRACEREC_HAVE_AVX2_KERNEL)
namespace {

constexpr int kLanes = 8;
constexpr std::int32_t kStep = 1 << 16;
constexpr std::int32_t kInf = 0x60000000;

static_assert(((static_cast<std::int64_t>(kFitAvx2MaxPattern) + 8) << 16) + 0xFFFF < kInf);

__attribute__((target("avx2"))) inline __m256i shift_in(__m256i v, std::int32_t lane0) {
  const __m256i rotated = _mm256_permutevar8x32_epi32(v, _mm256_setr_epi32(7, 0, 1, 2, 3, 4, 5, 6));
  return _mm256_blend_epi32(rotated, _mm256_set1_epi32(lane0), 0x01);
}

__attribute__((target("avx2"))) inline __m256i load(const std::int32_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

__attribute__((target("avx2"))) inline void store(std::int32_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

__attribute__((target("avx2"))) FitResult fit_striped(std::span<const Symbol> pattern,
                                                      std::span<const Symbol> text) {
  const std::size_t m = pattern.size();
  const std::size_t seg = (m + kLanes - 1) / kLanes;

  Symbol max_sym = 0;
  for (const Symbol s : pattern) max_sym = std::max(max_sym, s);
  std::vector<std::int32_t> profile_of(static_cast<std::size_t>(max_sym) + 1, -1);
  std::size_t profiles = 0;
  for (const Symbol s : pattern) {
    if (profile_of[s] < 0) profile_of[s] = static_cast<std::int32_t>(profiles++);
  }
  // profile[p][s][lane] = -1 when pattern row (lane*seg + s + 1) holds symbol p.
  std::vector<std::int32_t> profile(profiles * seg * kLanes, 0);
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t s = r % seg;
    const std::size_t lane = r / seg;
    profile[(static_cast<std::size_t>(profile_of[pattern[r]]) * seg + s) * kLanes + lane] = -1;
  }

  std::vector<std::int32_t> prev(seg * kLanes), cur(seg * kLanes);
  for (std::size_t s = 0; s < seg; ++s) {
    for (int lane = 0; lane < kLanes; ++lane) {
      const auto row = static_cast<std::int32_t>(static_cast<std::size_t>(lane) * seg + s + 1);
      prev[s * kLanes + static_cast<std::size_t>(lane)] = (row << 16) | 1;
    }
  }

  const std::size_t out_seg = (m - 1) % seg;
  const std::size_t out_lane = (m - 1) / seg;
  const __m256i step = _mm256_set1_epi32(kStep);
  const __m256i inf = _mm256_set1_epi32(kInf);

  std::int32_t best_key = (static_cast<std::int32_t>(m) << 16) | 1;
  std::size_t best_end = 0;

  for (std::size_t j = 1; j <= text.size(); ++j) {
    const Symbol t = text[j - 1];
    const std::int32_t* prof = nullptr;
    if (t <= max_sym && profile_of[t] >= 0) {
      prof = profile.data() + static_cast<std::size_t>(profile_of[t]) * seg * kLanes;
    }

    __m256i diag = shift_in(load(prev.data() + (seg - 1) * kLanes), static_cast<std::int32_t>(j));
    __m256i vf = _mm256_blend_epi32(inf, _mm256_set1_epi32(static_cast<std::int32_t>(j + 1) + kStep), 0x01);

    for (std::size_t s = 0; s < seg; ++s) {
      const __m256i up = load(prev.data() + s * kLanes);
      __m256i h = _mm256_add_epi32(up, step);
      if (prof) {
        const __m256i hit = load(prof + s * kLanes);
        h = _mm256_min_epi32(h, _mm256_blendv_epi8(inf, diag, hit));
      }
      h = _mm256_min_epi32(h, vf);
      store(cur.data() + s * kLanes, h);
      vf = _mm256_add_epi32(h, step);
      diag = up;
    }

    // Vertical carries crossing lane boundaries.
    vf = shift_in(vf, kInf);
    std::size_t s = 0;
    for (;;) {
      __m256i h = load(cur.data() + s * kLanes);
      if (_mm256_movemask_epi8(_mm256_cmpgt_epi32(h, vf)) == 0) break;
      h = _mm256_min_epi32(h, vf);
      store(cur.data() + s * kLanes, h);
      vf = _mm256_add_epi32(h, step);
      if (++s == seg) {
        s = 0;
        vf = shift_in(vf, kInf);
      }
    }

    const std::int32_t key = cur[out_seg * kLanes + out_lane];
    if (key < best_key) {
      best_key = key;
      best_end = j;
    }
    std::swap(prev, cur);
  }

  const auto cost = static_cast<std::size_t>(best_key >> 16);
  const auto start = static_cast<std::size_t>(best_key & 0xFFFF);
  return {start, best_end, cost};
}

}  // namespace
#endif

FitResult fit_avx2(std::span<const Symbol> pattern, std::span<const Symbol> text) {
  if (pattern.empty()) throw InvalidArgument("fitting alignment needs a nonempty pattern");
  if (pattern.size() > kFitAvx2MaxPattern || text.size() > kFitAvx2MaxText) {
    throw InvalidArgument("input exceeds the packed-key range of the avx2 fitting kernel");
  }
#if defined(TRACEREC_HAVE_AVX2_KERNEL)
  if (detected_isa() != Isa::avx2) throw Error("avx2 kernel requested on a CPU without avx2");
  return fit_striped(pattern, text);
#else
  throw Error("built without the avx2 fitting kernel");
#endif
}

}  // namespace tracerec::kernels
