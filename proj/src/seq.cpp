#include "tracerec/seq.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "tracerec/error.hpp"

namespace tracerec {
namespace {

constexpr std::string_view kCompactDigits =
    "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

}  // namespace

Alphabet::Alphabet(std::uint32_t size) : size_(size) {
  if (size < 2 || size > kMaxSize) {
    throw InvalidArgument("alphabet size must lie in [2, 65536], got " + std::to_string(size));
  }
}

char Alphabet::to_char(Symbol s) const {
  if (!compact() || !contains(s)) {
    throw OutOfRange("symbol " + std::to_string(s) + " has no character form");
  }
  return kCompactDigits[s];
}

Symbol Alphabet::from_char(char c) const {
  const auto pos = kCompactDigits.find(c);
  if (pos == std::string_view::npos || !contains(static_cast<std::uint32_t>(pos))) {
    throw InvalidArgument(std::string("character '") + c + "' is not in an alphabet of size " +
                          std::to_string(size_));
  }
  return static_cast<Symbol>(pos);
}

Seq::Seq(Alphabet alphabet, std::vector<Symbol> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
  for (const Symbol s : symbols_) {
    if (!alphabet_.contains(s)) {
      throw InvalidArgument("symbol " + std::to_string(s) + " outside alphabet of size " +
                            std::to_string(alphabet_.size()));
    }
  }
}

Seq Seq::parse(std::string_view line, Alphabet alphabet) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<Symbol> out;
  if (alphabet.compact()) {
    out.reserve(line.size());
    for (const char c : line) out.push_back(alphabet.from_char(c));
    return Seq(alphabet, std::move(out));
  }
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) break;
    std::uint32_t v = 0;
    const auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{}) {
      throw InvalidArgument("malformed symbol index in sequence line");
    }
    if (!alphabet.contains(v)) {
      throw InvalidArgument("symbol " + std::to_string(v) + " outside alphabet");
    }
    out.push_back(static_cast<Symbol>(v));
    p = next;
  }
  return Seq(alphabet, std::move(out));
}

Symbol Seq::at(std::size_t pos) const {
  if (pos == 0 || pos > symbols_.size()) {
    throw OutOfRange("position " + std::to_string(pos) + " outside [1, " +
                     std::to_string(symbols_.size()) + "]");
  }
  return symbols_[pos - 1];
}

std::span<const Symbol> Seq::view(Interval iv) const {
  if (iv.empty()) {
    if (iv.first == 0 || iv.first > symbols_.size() + 1) {
      throw OutOfRange("empty interval anchored outside the sequence");
    }
    return {};
  }
  if (iv.first == 0 || iv.last > symbols_.size() || iv.first > iv.last) {
    throw OutOfRange("interval [" + std::to_string(iv.first) + ", " + std::to_string(iv.last) +
                     "] outside sequence of length " + std::to_string(symbols_.size()));
  }
  return std::span<const Symbol>(symbols_).subspan(iv.first - 1, iv.length());
}

Seq Seq::slice(Interval iv) const {
  const auto v = view(iv);
  Seq out(alphabet_);
  out.symbols_.assign(v.begin(), v.end());
  return out;
}

std::string Seq::to_text() const {
  std::string out;
  if (alphabet_.compact()) {
    out.reserve(symbols_.size());
    for (const Symbol s : symbols_) out.push_back(kCompactDigits[s]);
    return out;
  }
  for (std::size_t k = 0; k < symbols_.size(); ++k) {
    if (k) out.push_back(' ');
    out += std::to_string(symbols_[k]);
  }
  return out;
}

Seq concat(std::span<const Seq> parts, Alphabet alphabet) {
  std::size_t total = 0;
  for (const auto& part : parts) {
    if (part.alphabet() != alphabet) throw AlphabetMismatch("concat over mixed alphabets");
    total += part.size();
  }
  std::vector<Symbol> out;
  out.reserve(total);
  for (const auto& part : parts) out.insert(out.end(), part.symbols().begin(), part.symbols().end());
  return Seq(alphabet, std::move(out));
}

void require_same_alphabet(const Seq& a, const Seq& b) {
  if (a.alphabet() != b.alphabet()) {
    throw AlphabetMismatch("sequences use alphabets of size " + std::to_string(a.alphabet().size()) +
                           " and " + std::to_string(b.alphabet().size()));
  }
}

std::vector<Seq> parse_sequences(std::string_view text, Alphabet alphabet) {
  std::vector<Seq> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    out.push_back(Seq::parse(text.substr(pos, nl - pos), alphabet));
    pos = nl + 1;
  }
  return out;
}

std::vector<Seq> read_sequences(const std::filesystem::path& path, Alphabet alphabet) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequences(buf.str(), alphabet);
}

std::string format_sequences(std::span<const Seq> seqs) {
  std::string out;
  for (const auto& s : seqs) {
    out += s.to_text();
    out.push_back('\n');
  }
  return out;
}

void write_sequences(const std::filesystem::path& path, std::span<const Seq> seqs) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << format_sequences(seqs);
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace tracerec
