#include <doctest.h>

#include <filesystem>

#include "tracerec/error.hpp"
#include "tracerec/seq.hpp"

using namespace tracerec;

TEST_CASE("compact alphabets round-trip through text") {
  const Alphabet a(16);
  const Seq s(a, {0, 9, 10, 15});
  CHECK(s.to_text() == "09AF");
  CHECK(Seq::parse("09AF", a) == s);
  CHECK_THROWS_AS(Seq::parse("0G", a), Error);
}

TEST_CASE("wide alphabets use whitespace separated indices") {
  const Alphabet a(1024);
  const Seq s(a, {1023, 0, 17});
  CHECK(s.to_text() == "1023 0 17");
  CHECK(Seq::parse("1023 0 17\r", a) == s);
  CHECK_THROWS(Seq::parse("1024", a));
}

TEST_CASE("symbols outside the alphabet are rejected") {
  CHECK_THROWS_AS(Seq(Alphabet(2), {0, 2}), Error);
  CHECK_THROWS_AS(Alphabet(1), InvalidArgument);
}

TEST_CASE("slices use 1-based closed intervals") {
  const Seq s = Seq::parse("0110");
  CHECK(s.at(2) == 1);
  CHECK(s.slice({2, 3}).to_text() == "11");
  CHECK(s.slice(Interval::empty_at(5)).empty());
  CHECK_THROWS_AS(s.slice({3, 5}), OutOfRange);
  CHECK_THROWS_AS(s.at(0), OutOfRange);
}

TEST_CASE("sequence files keep empty lines as empty sequences") {
  const auto seqs = parse_sequences("01\n\n110\n", Alphabet{});
  REQUIRE(seqs.size() == 3);
  CHECK(seqs[1].empty());
  CHECK(format_sequences(seqs) == "01\n\n110\n");

  const auto path = std::filesystem::temp_directory_path() / "tracerec_seq_roundtrip.txt";
  write_sequences(path, seqs);
  CHECK(read_sequences(path, Alphabet{}) == seqs);
  std::filesystem::remove(path);
}

TEST_CASE("concat checks alphabets") {
  const Seq a = Seq::parse("01"), b = Seq::parse("1");
  const Seq parts[] = {a, b};
  CHECK(concat(parts, Alphabet{}).to_text() == "011");
  const Seq wide[] = {a, Seq(Alphabet(4), {3})};
  CHECK_THROWS_AS(concat(wide, Alphabet{}), AlphabetMismatch);
}
