#include <atomic>
#include <cmath>

#include "tracerec/error.hpp"
#include "tracerec/kernels.hpp"

namespace tracerec::kernels {
namespace {

Isa probe() noexcept {
#if defined(TRACEREC_HAVE_AVX2_KERNEL) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
  return Isa::scalar;
}

std::atomic<int> g_forced{-1};

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::avx2:
      return "avx2";
    case Isa::scalar:
      break;
  }
  return "scalar";
}

Isa detected_isa() noexcept {
  static const Isa isa = probe();
  return isa;
}

Isa active_isa() noexcept {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced < 0) return detected_isa();
  return static_cast<Isa>(forced);
}

void force_isa(Isa isa) noexcept {
  if (isa == Isa::avx2 && detected_isa() != Isa::avx2) isa = Isa::scalar;
  g_forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() noexcept { g_forced.store(-1, std::memory_order_relaxed); }

std::size_t indel_distance(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.empty() || b.empty()) return a.size() + b.size();
  // The greedy search costs about d^2 steps; stop it once that passes the
  // bit-parallel cost and fall back.
  const double words = static_cast<double>(a.size()) * static_cast<double>(b.size()) / 64.0;
  const auto cap = static_cast<std::size_t>(std::sqrt(words)) + 64;
  const std::size_t floor_distance = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
  if (floor_distance <= cap) {
    if (auto d = indel_distance_greedy(a, b, cap)) return *d;
  }
  return a.size() + b.size() - 2 * lcs_bitparallel(a, b);
}

FitResult fit(std::span<const Symbol> pattern, std::span<const Symbol> text) {
  if (pattern.empty()) throw InvalidArgument("fitting alignment needs a nonempty pattern");
#ifdef TRACEREC_HAVE_AVX2_KERNEL
  if (active_isa() == Isa::avx2 && pattern.size() <= kFitAvx2MaxPattern &&
      text.size() <= kFitAvx2MaxText) {
    return fit_avx2(pattern, text);
  }
#endif
  return fit_scalar(pattern, text);
}

}  // namespace tracerec::kernels
