#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aspecthier/corpus.hpp"
#include "aspecthier/discourse.hpp"
#include "aspecthier/knowledge_graph.hpp"
#include "aspecthier/segmentation.hpp"

namespace aspecthier {

namespace artifact {
inline constexpr const char* kTuples = "tuples.tsv";
inline constexpr const char* kRankedPairs = "ranked_pairs.tsv";
inline constexpr const char* kForestJson = "forest.json";
inline constexpr const char* kForestDot = "forest.dot";
inline constexpr const char* kSkips = "skips.tsv";
inline constexpr const char* kCoverageTsv = "coverage.tsv";
inline constexpr const char* kCoverageJson = "coverage.json";
inline constexpr const char* kStats = "stats.json";
}  // namespace artifact

struct PipelineConfig {
  // exactly one of the two inputs
  std::string reviews_path;
  std::string trees_dir;
  std::string kg_path;
  std::string out_dir;

  std::string text_field = "reviewText";
  std::string id_field;  // empty: zero-based line index

  std::optional<std::size_t> sample_size;
  std::uint64_t sample_seed = 0;

  std::vector<std::size_t> top_n = {5, 10, 20, 30, 40, 50};
  int max_hops = 3;
  RelatedToClass relatedto = RelatedToClass::Hierarchical;
  int workers = 1;

  std::string lexicon_path;      // empty: built-in lexicon
  std::string connectives_path;  // empty: built-in connectives

  // Throws ConfigError; checks everything except corpus-dependent limits.
  void validate() const;
};

Tagger make_tagger(const std::string& lexicon_path);
Segmenter make_segmenter(const std::string& lexicon_path,
                         const std::string& connectives_path);

struct Document {
  std::string id;
  std::string text;  // review body, or EDU texts joined for tree input
  DiscourseTree tree;
};

// Reviews are segmented into naive right-branching trees; a tree directory
// is read as *.json sorted by filename with the stem as document id.
// Sampling keeps corpus order. Throws ConfigError when sample_size exceeds
// the corpus.
std::vector<Document> load_documents(const PipelineConfig& config,
                                     const Segmenter& segmenter);

// Runs fn over [0, count) on up to `workers` threads. Results must be
// written to disjoint slots; the first exception wins and is rethrown.
void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& fn);

// Replaces filename-hostile characters so document ids can name files.
std::string sanitize_filename(const std::string& id);

// Full pipeline. Writes, in order: tuples.tsv, ranked_pairs.tsv,
// forest.json, forest.dot, skips.tsv, coverage.tsv, stats.json under
// config.out_dir. Any failure removes the partial artifacts and rethrows
// with a stage-named message.
void run_pipeline(const PipelineConfig& config, std::ostream* log = nullptr);

}  // namespace aspecthier
