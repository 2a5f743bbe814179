#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace aspecthier {

struct Review {
  std::string id;    // unique within the corpus
  std::string text;  // NFC-normalized review body
};

// Reads a JSON Lines corpus: one object per line, review body under
// `text_field`. When `id_field` is empty, ids are zero-based line indices
// rendered as decimal strings. Blank lines are skipped. Errors carry the
// offending 1-based line number.
std::vector<Review> load_reviews(const std::string& path,
                                 const std::string& text_field,
                                 const std::string& id_field = "");

struct CorpusStats {
  std::uint64_t review_count = 0;
  double avg_words = 0.0;
  double avg_sentences = 0.0;
  std::map<int, std::uint64_t> reviews_with_min_aspects;  // threshold -> count
};

// Words are whitespace-delimited chunks; sentences are spans closed by a
// run of . ! ? (a trailing span without a terminator still counts).
std::size_t count_words(std::string_view text);
std::size_t count_sentences(std::string_view text);

// `aspect_counts` maps review id -> number of distinct aspects; reviews
// missing from the map count as zero. An unknown id is an error.
CorpusStats compute_stats(std::span<const Review> reviews,
                          const std::map<std::string, std::uint64_t>& aspect_counts,
                          const std::vector<int>& thresholds = {2, 10});

nlohmann::ordered_json stats_to_json(const CorpusStats& stats);

}  // namespace aspecthier
