#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tracerec {

using Symbol = std::uint16_t;

/// Finite alphabet {0, ..., size-1}.
///
/// Alphabets of up to 62 symbols render each symbol as one character of
/// "0-9A-Za-z"; larger alphabets render whitespace-separated decimal indices.
class Alphabet {
public:
  static constexpr std::uint32_t kMaxSize = 65536;
  static constexpr std::uint32_t kMaxCompactSize = 62;

  constexpr Alphabet() noexcept = default;
  explicit Alphabet(std::uint32_t size);

  static Alphabet binary() noexcept { return Alphabet{}; }

  constexpr std::uint32_t size() const noexcept { return size_; }
  constexpr bool contains(std::uint32_t s) const noexcept { return s < size_; }
  constexpr bool compact() const noexcept { return size_ <= kMaxCompactSize; }

  /// Only valid when compact().
  char to_char(Symbol s) const;
  Symbol from_char(char c) const;

  friend constexpr bool operator==(Alphabet, Alphabet) noexcept = default;

private:
  std::uint32_t size_ = 2;
};

/// Closed interval [first, last] of 1-based positions; empty when last + 1 == first.
struct Interval {
  std::size_t first = 1;
  std::size_t last = 0;

  static constexpr Interval empty_at(std::size_t pos) noexcept { return {pos, pos - 1}; }

  constexpr bool empty() const noexcept { return last + 1 == first; }
  constexpr std::size_t length() const noexcept { return last + 1 - first; }
  constexpr bool contains(std::size_t pos) const noexcept { return pos >= first && pos <= last; }

  friend constexpr bool operator==(Interval, Interval) noexcept = default;
};

/// Immutable-by-convention sequence of symbols tagged with its alphabet.
///
/// operator[] and symbols() use 0-based storage offsets; every API that talks
/// about string positions (alignments, intervals, matches) is 1-based.
class Seq {
public:
  Seq() = default;
  explicit Seq(Alphabet alphabet) : alphabet_(alphabet) {}
  Seq(Alphabet alphabet, std::vector<Symbol> symbols);

  /// Parse the text form of one line (see format_text).
  static Seq parse(std::string_view line, Alphabet alphabet = Alphabet{});

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t offset) const noexcept { return symbols_[offset]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  /// Symbol at 1-based position `pos`.
  Symbol at(std::size_t pos) const;

  /// Copy of the substring covering a 1-based interval (which may be empty).
  Seq slice(Interval iv) const;
  std::span<const Symbol> view(Interval iv) const;

  std::string to_text() const;

  friend bool operator==(const Seq&, const Seq&) = default;

private:
  Alphabet alphabet_;
  std::vector<Symbol> symbols_;
};

Seq concat(std::span<const Seq> parts, Alphabet alphabet);

/// Throws AlphabetMismatch unless both sequences share an alphabet.
void require_same_alphabet(const Seq& a, const Seq& b);

/// One sequence per line; an empty line is an empty sequence.
std::vector<Seq> read_sequences(const std::filesystem::path& path, Alphabet alphabet);
std::vector<Seq> parse_sequences(std::string_view text, Alphabet alphabet);
void write_sequences(const std::filesystem::path& path, std::span<const Seq> seqs);
std::string format_sequences(std::span<const Seq> seqs);

}  // namespace tracerec
