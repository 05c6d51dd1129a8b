#pragma once

// Insertion-deletion channel: the streaming form (keep / delete / insert per
// step) and the two-stage form that first plants the alignment and then fills
// in symbols. Both run on finite inputs and stop once the input is consumed.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tracerec/alignment.hpp"
#include "tracerec/rng.hpp"
#include "tracerec/seq.hpp"

namespace tracerec {

struct ChannelParams {
  double p = 0.0;  ///< total edit rate: keep 1-p, delete p/2, insert p/2
  Alphabet alphabet;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  /// Throws InvalidArgument unless 0 <= p < 1.
  void validate() const;
  ChannelParams with_stream(std::uint64_t stream) const {
    ChannelParams out = *this;
    out.stream_id = stream;
    return out;
  }
};

enum class EditKind : std::uint8_t { match, erase, insert };

/// One step of the channel. For match: i and j. For erase: i. For insert: j,
/// symbol, and `i` = input position the pointer sat at when it happened.
struct EditOp {
  EditKind kind = EditKind::match;
  std::size_t i = 0;
  std::size_t j = 0;
  Symbol symbol = 0;

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

struct PlantedAlignment {
  Alignment alignment;
  std::vector<EditOp> ops;

  /// Rebuild the trace from x and the op log.
  Seq replay(const Seq& x) const;
};

/// Uniform random sequence of length n.
Seq random_seq(std::size_t n, Alphabet alphabet, Rng& rng);
Seq random_seq(std::size_t n, Alphabet alphabet, std::uint64_t seed, std::uint64_t stream_id);

/// Streaming channel.
Seq apply_rp(const Seq& x, const ChannelParams& params);

/// Two-stage channel; returns the trace and the planted alignment x -> trace.
std::pair<Seq, PlantedAlignment> apply_gp(const Seq& x, const ChannelParams& params);

/// Rate of two chained channels: p(4 - 3p) / (2 - p^2).
double q_of_p(double p);

/// Sorted positions i in [1, n] with at least one insertion between x[i-1]
/// and x[i], or a deletion of x[i]. Insertions after x[n] count toward n.
struct EditOpIndexSet {
  std::vector<std::size_t> indices;
  std::size_t size() const noexcept { return indices.size(); }
};

EditOpIndexSet edit_op_positions(const PlantedAlignment& planted, std::size_t n);

/// Positions carrying a single isolated edit: a lone deletion or a lone
/// insertion with every neighbour within floor(2 eps / p) matched
/// consecutively. Positions whose neighbourhood leaves [1, n] are excluded.
struct WellSeparatedSet {
  std::vector<std::size_t> indices;
  double epsilon = 0.0;
  std::size_t half_width = 0;  ///< floor(eps / p): half-width of the comparison window
  std::size_t reach = 0;       ///< floor(2 eps / p): isolation radius

  std::size_t size() const noexcept { return indices.size(); }
};

WellSeparatedSet well_separated(const PlantedAlignment& planted, std::size_t n, double p,
                                double epsilon);

/// Planted-alignment op log as line-delimited JSON, one op per line:
/// {"op":"M","i":..,"j":..} / {"op":"D","i":..} / {"op":"I","j":..,"sym":..}.
std::string ops_to_jsonl(std::span<const EditOp> ops, int trace_index = -1);

}  // namespace tracerec
