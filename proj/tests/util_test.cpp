#include <doctest.h>

#include <set>
#include <stdexcept>

#include <zlib.h>

#include "aspecthier/errors.hpp"
#include "aspecthier/util.hpp"
#include "test_util.hpp"

using namespace aspecthier;

TEST_CASE("string helpers") {
  CHECK(to_lower_ascii("The CASE") == "the case");
  CHECK(trim("  x  ") == "x");
  CHECK(trim("") == "");
  CHECK(is_blank("  \t "));
  CHECK_FALSE(is_blank(" a "));
  CHECK(collapse_spaces("  battery   life \t") == "battery life");
  auto cols = split_tabs("a\tb\t\tc");
  REQUIRE(cols.size() == 4);
  CHECK(cols[2] == "");
  CHECK(split_tabs("plain").size() == 1);
}

TEST_CASE("nfc normalization") {
  // e + combining acute collapses to the precomposed code point
  const std::string decomposed = "caf\x65\xcc\x81";
  const std::string precomposed = "caf\xc3\xa9";
  CHECK(nfc(decomposed) == precomposed);
  CHECK(nfc(precomposed) == precomposed);
  CHECK(nfc("plain ascii") == "plain ascii");
  CHECK_THROWS_AS(nfc("bad \xff\xfe bytes"), InputError);
}

TEST_CASE("gz line reader handles plain and compressed files") {
  testutil::TempDir tmp;
  testutil::write_file(tmp.str("plain.txt"), "one\ntwo\r\nthree");
  GzLineReader plain(tmp.str("plain.txt"));
  std::string line;
  REQUIRE(plain.next(line));
  CHECK(line == "one");
  REQUIRE(plain.next(line));
  CHECK(line == "two");
  REQUIRE(plain.next(line));
  CHECK(line == "three");
  CHECK_FALSE(plain.next(line));

  gzFile gz = gzopen(tmp.str("lines.gz").c_str(), "wb");
  REQUIRE(gz != nullptr);
  const std::string payload = "alpha\nbeta\n";
  gzwrite(gz, payload.data(), static_cast<unsigned>(payload.size()));
  gzclose(gz);
  GzLineReader reader(tmp.str("lines.gz"));
  REQUIRE(reader.next(line));
  CHECK(line == "alpha");
  REQUIRE(reader.next(line));
  CHECK(line == "beta");
  CHECK_FALSE(reader.next(line));

  CHECK_THROWS_AS(GzLineReader(tmp.str("missing.txt")), InputError);
}

TEST_CASE("sample_indices draws sorted distinct indices") {
  auto s = sample_indices(100, 10, 7);
  REQUIRE(s.size() == 10);
  CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK(std::set<std::size_t>(s.begin(), s.end()).size() == 10);
  for (auto i : s) CHECK(i < 100);

  CHECK(sample_indices(100, 10, 7) == s);  // same seed, same draw
  CHECK(sample_indices(100, 10, 8) != s);

  auto all = sample_indices(5, 5, 1);
  CHECK(all == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(sample_indices(5, 0, 1).empty());
  CHECK_THROWS_AS(sample_indices(3, 4, 1), std::invalid_argument);
}
