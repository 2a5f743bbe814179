#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace aspecthier {

std::string to_lower_ascii(std::string_view s);
std::string_view trim(std::string_view s);
bool is_blank(std::string_view s);

// Collapses whitespace runs to single spaces and trims the ends.
std::string collapse_spaces(std::string_view s);

std::vector<std::string_view> split_tabs(std::string_view line);

// NFC normalization of UTF-8 text.
std::string nfc(std::string_view utf8);

// Line reader over plain or gzip-compressed files (zlib reads both).
class GzLineReader {
 public:
  explicit GzLineReader(const std::string& path);
  ~GzLineReader();
  GzLineReader(const GzLineReader&) = delete;
  GzLineReader& operator=(const GzLineReader&) = delete;

  // Returns false at end of file. Strips the trailing newline.
  bool next(std::string& line);

 private:
  void* file_ = nullptr;  // gzFile
};

// Draws k distinct indices from [0, population) with a seeded generator and
// returns them sorted ascending, so sampled corpora keep their file order.
// Self-contained (partial Fisher-Yates) so results do not depend on the
// standard library's distribution implementations.
std::vector<std::size_t> sample_indices(std::size_t population, std::size_t k,
                                        std::uint64_t seed);

}  // namespace aspecthier
