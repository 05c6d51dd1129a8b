#include "tracerec/patmatch.hpp"

#include <algorithm>
#include <string>

#include "tracerec/error.hpp"
#include "tracerec/kernels.hpp"

namespace tracerec {

MatchResult best_match(const Seq& pattern, const Seq& text) {
  return best_match_windowed(pattern, text, 1, text.size());
}

MatchResult best_match_windowed(const Seq& pattern, const Seq& text, std::size_t from,
                                std::size_t window_len) {
  require_same_alphabet(pattern, text);
  if (pattern.empty()) throw InvalidArgument("best match needs a nonempty pattern");
  if (from == 0 || from > text.size() + 1) {
    throw OutOfRange("window start " + std::to_string(from) + " outside [1, " +
                     std::to_string(text.size() + 1) + "]");
  }
  const std::size_t take = std::min(text.size() + 1 - from, window_len);
  const auto window = text.symbols().subspan(from - 1, take);
  const auto fit = kernels::fit(pattern.symbols(), window);
  return {fit.start + from - 1, fit.end + from - 1, fit.cost};
}

}  // namespace tracerec
