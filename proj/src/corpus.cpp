#include "aspecthier/corpus.hpp"

#include <fstream>
#include <set>

#include "aspecthier/errors.hpp"
#include "aspecthier/util.hpp"

namespace aspecthier {

std::vector<Review> load_reviews(const std::string& path,
                                 const std::string& text_field,
                                 const std::string& id_field) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);

  std::vector<Review> reviews;
  std::set<std::string> seen_ids;
  std::string line;
  std::size_t line_index = 0;  // zero-based; default ids come from here
  while (std::getline(in, line)) {
    const std::string lineno = std::to_string(line_index + 1);
    if (is_blank(line)) {
      ++line_index;
      continue;
    }
    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object())
      throw InputError("line " + lineno + ": malformed JSON record");
    if (!record.contains(text_field))
      throw InputError("line " + lineno + ": missing field " + text_field);
    if (!record[text_field].is_string())
      throw InputError("line " + lineno + ": field " + text_field +
                       " is not a string");

    Review review;
    review.text = nfc(record[text_field].get<std::string>());
    if (is_blank(review.text))
      throw InputError("line " + lineno + ": empty review text");

    if (id_field.empty()) {
      review.id = std::to_string(line_index);
    } else {
      if (!record.contains(id_field))
        throw InputError("line " + lineno + ": missing field " + id_field);
      const auto& idval = record[id_field];
      if (idval.is_string())
        review.id = idval.get<std::string>();
      else if (idval.is_number_integer())
        review.id = std::to_string(idval.get<std::int64_t>());
      else
        throw InputError("line " + lineno + ": field " + id_field +
                         " is not a string or integer");
      if (review.id.empty())
        throw InputError("line " + lineno + ": empty review id");
    }
    if (!seen_ids.insert(review.id).second)
      throw InputError("line " + lineno + ": duplicate review id " + review.id);

    reviews.push_back(std::move(review));
    ++line_index;
  }
  return reviews;
}

std::size_t count_words(std::string_view text) {
  std::size_t words = 0;
  bool in_word = false;
  for (char c : text) {
    bool space = static_cast<unsigned char>(c) < 0x80 &&
                 std::isspace(static_cast<unsigned char>(c));
    if (space) {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++words;
    }
  }
  return words;
}

std::size_t count_sentences(std::string_view text) {
  std::size_t sentences = 0;
  bool has_content = false;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '.' || c == '!' || c == '?') {
      if (has_content) {
        ++sentences;
        has_content = false;
      }
      while (i < text.size() &&
             (text[i] == '.' || text[i] == '!' || text[i] == '?'))
        ++i;
      continue;
    }
    if (!(static_cast<unsigned char>(c) < 0x80 &&
          std::isspace(static_cast<unsigned char>(c))))
      has_content = true;
    ++i;
  }
  if (has_content) ++sentences;
  return sentences;
}

CorpusStats compute_stats(std::span<const Review> reviews,
                          const std::map<std::string, std::uint64_t>& aspect_counts,
                          const std::vector<int>& thresholds) {
  std::set<std::string> known;
  for (const auto& r : reviews) known.insert(r.id);
  for (const auto& [id, count] : aspect_counts)
    if (known.count(id) == 0)
      throw InputError("aspect count references unknown review id " + id);

  CorpusStats stats;
  stats.review_count = reviews.size();
  std::uint64_t total_words = 0;
  std::uint64_t total_sentences = 0;
  for (const auto& r : reviews) {
    total_words += count_words(r.text);
    total_sentences += count_sentences(r.text);
  }
  if (!reviews.empty()) {
    stats.avg_words = static_cast<double>(total_words) /
                      static_cast<double>(reviews.size());
    stats.avg_sentences = static_cast<double>(total_sentences) /
                          static_cast<double>(reviews.size());
  }
  for (int k : thresholds) {
    std::uint64_t count = 0;
    for (const auto& r : reviews) {
      auto it = aspect_counts.find(r.id);
      std::uint64_t aspects = it == aspect_counts.end() ? 0 : it->second;
      if (aspects >= static_cast<std::uint64_t>(k)) ++count;
    }
    stats.reviews_with_min_aspects[k] = count;
  }
  return stats;
}

nlohmann::ordered_json stats_to_json(const CorpusStats& stats) {
  nlohmann::ordered_json j;
  j["review_count"] = stats.review_count;
  j["avg_words"] = stats.avg_words;
  j["avg_sentences"] = stats.avg_sentences;
  for (const auto& [k, count] : stats.reviews_with_min_aspects)
    j["reviews_with_min_" + std::to_string(k) + "_aspects"] = count;
  return j;
}

}  // namespace aspecthier
