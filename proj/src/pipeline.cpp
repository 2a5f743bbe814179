#include "aspecthier/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>
#include <utility>

#include "aspecthier/aspects.hpp"
#include "aspecthier/coverage.hpp"
#include "aspecthier/errors.hpp"
#include "aspecthier/hierarchy.hpp"
#include "aspecthier/tree_json.hpp"
#include "aspecthier/tuples.hpp"
#include "aspecthier/util.hpp"

namespace fs = std::filesystem;

namespace aspecthier {

void PipelineConfig::validate() const {
  if (reviews_path.empty() == trees_dir.empty()) {
    throw ConfigError("exactly one of --input and --trees is required");
  }
  if (kg_path.empty()) throw ConfigError("--kg is required");
  if (out_dir.empty()) throw ConfigError("--out is required");
  if (top_n.empty()) throw ConfigError("--top-n must not be empty");
  for (size_t i = 0; i < top_n.size(); ++i) {
    if (top_n[i] == 0 || (i > 0 && top_n[i] <= top_n[i - 1])) {
      throw ConfigError("--top-n entries must be positive and strictly increasing");
    }
  }
  if (max_hops < 1) throw ConfigError("--max-hops must be >= 1");
  if (workers < 1) throw ConfigError("--workers must be >= 1");
  if (sample_size && *sample_size == 0) throw ConfigError("--sample must be >= 1");
  if (reviews_path.empty() && !id_field.empty()) {
    throw ConfigError("--id-field only applies to --input corpora");
  }
  if (text_field.empty()) throw ConfigError("--text-field must not be empty");
}

Tagger make_tagger(const std::string& lexicon_path) {
  if (lexicon_path.empty()) return Tagger();
  return Tagger::from_tsv(lexicon_path);
}

Segmenter make_segmenter(const std::string& lexicon_path,
                         const std::string& connectives_path) {
  std::set<std::string> connectives = connectives_path.empty()
                                          ? Segmenter::default_connectives()
                                          : Segmenter::connectives_from_file(connectives_path);
  return Segmenter(make_tagger(lexicon_path), std::move(connectives));
}

void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& fn) {
  const size_t nthreads = std::min<size_t>(static_cast<size_t>(std::max(workers, 1)), count);
  if (nthreads <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::mutex mu;
  std::exception_ptr first_error;
  auto body = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::string sanitize_filename(const std::string& id) {
  std::string out = id;
  for (char& c : out) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
    if (!ok) c = '_';
  }
  return out.empty() ? "_" : out;
}

namespace {

std::vector<std::string> list_tree_files(const std::string& dir) {
  if (!fs::is_directory(dir)) throw InputError(dir + " is not a directory");
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::string joined_edu_text(const DiscourseTree& tree) {
  std::vector<const Edu*> leaves;
  collect_leaves(*tree.root, leaves);
  std::string text;
  for (const Edu* leaf : leaves) {
    if (!text.empty()) text += ' ';
    text += leaf->text;
  }
  return text;
}

template <typename T>
std::vector<T> sample_subset(std::vector<T> items, std::size_t k, std::uint64_t seed) {
  std::vector<std::size_t> keep = sample_indices(items.size(), k, seed);
  std::vector<T> out;
  out.reserve(k);
  for (std::size_t idx : keep) out.push_back(std::move(items[idx]));
  return out;
}

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const InputError& e) {
    throw InputError(std::string("stage ") + name + ": " + e.what());
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("stage ") + name + ": " + e.what());
  }
}

}  // namespace

std::vector<Document> load_documents(const PipelineConfig& config,
                                     const Segmenter& segmenter) {
  std::vector<Document> docs;
  if (!config.reviews_path.empty()) {
    std::vector<Review> reviews =
        load_reviews(config.reviews_path, config.text_field, config.id_field);
    if (config.sample_size) {
      if (*config.sample_size > reviews.size()) {
        throw ConfigError("sample size " + std::to_string(*config.sample_size) +
                          " exceeds corpus size " + std::to_string(reviews.size()));
      }
      reviews = sample_subset(std::move(reviews), *config.sample_size, config.sample_seed);
    }
    docs.resize(reviews.size());
    parallel_for(reviews.size(), config.workers, [&](size_t i) {
      Document d;
      d.id = reviews[i].id;
      d.text = reviews[i].text;
      d.tree = build_naive_tree(segmenter.segment(reviews[i].text));
      docs[i] = std::move(d);
    });
    return docs;
  }

  std::vector<std::string> files = list_tree_files(config.trees_dir);
  if (config.sample_size) {
    if (*config.sample_size > files.size()) {
      throw ConfigError("sample size " + std::to_string(*config.sample_size) +
                        " exceeds corpus size " + std::to_string(files.size()));
    }
    files = sample_subset(std::move(files), *config.sample_size, config.sample_seed);
  }
  docs.resize(files.size());
  parallel_for(files.size(), config.workers, [&](size_t i) {
    Document d;
    d.id = fs::path(files[i]).stem().string();
    d.tree = load_discourse_tree(files[i]);
    d.text = joined_edu_text(d.tree);
    docs[i] = std::move(d);
  });
  return docs;
}

void run_pipeline(const PipelineConfig& config, std::ostream* log) {
  config.validate();
  fs::create_directories(config.out_dir);
  const auto out_path = [&](const char* name) {
    return (fs::path(config.out_dir) / name).string();
  };
  const char* artifacts[] = {artifact::kTuples,      artifact::kRankedPairs,
                             artifact::kForestJson,  artifact::kForestDot,
                             artifact::kSkips,       artifact::kCoverageTsv,
                             artifact::kStats};

  try {
    Segmenter segmenter = stage("load", [&] {
      return make_segmenter(config.lexicon_path, config.connectives_path);
    });
    std::vector<Document> docs =
        stage("load", [&] { return load_documents(config, segmenter); });
    if (log) *log << "loaded " << docs.size() << " documents\n";

    std::vector<std::vector<AspectTuple>> doc_tuples(docs.size());
    std::vector<std::set<std::string>> doc_labels(docs.size());
    stage("aspects", [&] {
      parallel_for(docs.size(), config.workers, [&](size_t i) {
        AspectDiscourseTree adt = extract_adt(docs[i].tree, segmenter.tagger());
        collect_labels(*adt.root, doc_labels[i]);
        doc_tuples[i] = extract_tuples(adt);
      });
    });

    RankedPairs ranked = stage("tuples", [&] {
      std::ofstream tsv(out_path(artifact::kTuples));
      if (!tsv) throw InputError("cannot open " + out_path(artifact::kTuples) + " for writing");
      PairCounts counts;
      for (size_t i = 0; i < docs.size(); ++i) {
        for (const auto& t : doc_tuples[i]) {
          tsv << t.nucleus.label << '\t' << t.satellite.label << '\t' << t.relation
              << '\t' << docs[i].id << '\n';
        }
        merge_counts(counts, count_tuples(doc_tuples[i]));
      }
      tsv.close();
      RankedPairs pairs = rank_pairs(counts);
      save_ranked_pairs(pairs, out_path(artifact::kRankedPairs));
      return pairs;
    });
    if (log) *log << "ranked " << ranked.size() << " pairs\n";

    stage("build", [&] {
      std::vector<PairEvent> events;
      AspectForest forest = build_hierarchy(ranked, &events);
      save_forest(forest, out_path(artifact::kForestJson));
      std::ofstream dot(out_path(artifact::kForestDot));
      if (!dot) throw InputError("cannot open " + out_path(artifact::kForestDot) + " for writing");
      dot << export_dot(forest, true);
      dot.close();
      write_skip_log(events, out_path(artifact::kSkips));
    });

    stage("coverage", [&] {
      KnowledgeGraph kg = [&] {
        KgConfig kc;
        kc.relatedto = config.relatedto;
        return load_kg(config.kg_path, kc, log);
      }();
      std::vector<CoverageReport> reports;
      reports.reserve(config.top_n.size());
      for (std::size_t n : config.top_n) {
        reports.push_back(coverage(kg, ranked, n, config.max_hops));
      }
      write_coverage_tsv(reports, out_path(artifact::kCoverageTsv));
    });

    stage("stats", [&] {
      std::vector<Review> reviews;
      reviews.reserve(docs.size());
      std::map<std::string, std::uint64_t> aspect_counts;
      for (size_t i = 0; i < docs.size(); ++i) {
        reviews.push_back(Review{docs[i].id, docs[i].text});
        aspect_counts[docs[i].id] = doc_labels[i].size();
      }
      CorpusStats stats = compute_stats(reviews, aspect_counts);
      std::ofstream out(out_path(artifact::kStats));
      if (!out) throw InputError("cannot open " + out_path(artifact::kStats) + " for writing");
      out << stats_to_json(stats).dump(2) << '\n';
    });
  } catch (...) {
    for (const char* name : artifacts) {
      std::error_code ec;
      fs::remove(out_path(name), ec);
    }
    throw;
  }
  if (log) *log << "pipeline complete: " << config.out_dir << "\n";
}

}  // namespace aspecthier
