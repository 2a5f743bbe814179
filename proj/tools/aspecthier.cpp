#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aspecthier/aspects.hpp"
#include "aspecthier/corpus.hpp"
#include "aspecthier/coverage.hpp"
#include "aspecthier/errors.hpp"
#include "aspecthier/hierarchy.hpp"
#include "aspecthier/knowledge_graph.hpp"
#include "aspecthier/pipeline.hpp"
#include "aspecthier/tree_json.hpp"
#include "aspecthier/tuples.hpp"

namespace fs = std::filesystem;
using namespace aspecthier;

namespace {

struct CliArgs {
  PipelineConfig cfg;
  std::string adts_dir;
  std::string pairs_path;
  std::string relatedto = "hierarchical";
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw ConfigError(msg);
}

void apply_relatedto(CliArgs& args) {
  auto cls = relatedto_class_from_string(args.relatedto);
  require(cls.has_value(), "invalid --relatedto-class " + args.relatedto);
  args.cfg.relatedto = *cls;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path + " for writing");
  return out;
}

std::vector<std::string> sorted_json_files(const std::string& dir) {
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

int do_stats(CliArgs& args) {
  require(args.cfg.reviews_path.empty() != args.cfg.trees_dir.empty(),
          "exactly one of --input and --trees is required");
  require(!args.cfg.out_dir.empty(), "--out is required");
  Segmenter segmenter = make_segmenter(args.cfg.lexicon_path, args.cfg.connectives_path);
  std::vector<Document> docs = load_documents(args.cfg, segmenter);
  std::vector<std::set<std::string>> labels(docs.size());
  parallel_for(docs.size(), args.cfg.workers, [&](size_t i) {
    AspectDiscourseTree adt = extract_adt(docs[i].tree, segmenter.tagger());
    collect_labels(*adt.root, labels[i]);
  });
  std::vector<Review> reviews;
  reviews.reserve(docs.size());
  std::map<std::string, std::uint64_t> aspect_counts;
  for (size_t i = 0; i < docs.size(); ++i) {
    reviews.push_back(Review{docs[i].id, docs[i].text});
    aspect_counts[docs[i].id] = labels[i].size();
  }
  CorpusStats stats = compute_stats(reviews, aspect_counts);
  fs::create_directories(args.cfg.out_dir);
  auto out = open_out((fs::path(args.cfg.out_dir) / artifact::kStats).string());
  out << stats_to_json(stats).dump(2) << '\n';
  std::cout << "stats for " << docs.size() << " documents written\n";
  return 0;
}

int do_segment(CliArgs& args) {
  require(!args.cfg.reviews_path.empty(), "--input is required");
  require(args.cfg.trees_dir.empty(), "segment only reads --input corpora");
  require(!args.cfg.out_dir.empty(), "--out is required");
  Segmenter segmenter = make_segmenter(args.cfg.lexicon_path, args.cfg.connectives_path);
  std::vector<Document> docs = load_documents(args.cfg, segmenter);
  fs::create_directories(args.cfg.out_dir);
  std::set<std::string> names;
  for (const auto& doc : docs) {
    std::string name = sanitize_filename(doc.id) + ".json";
    if (!names.insert(name).second) {
      throw InputError("sanitized tree filename collision for id " + doc.id);
    }
    save_discourse_tree(doc.tree, (fs::path(args.cfg.out_dir) / name).string());
  }
  std::cout << "wrote " << docs.size() << " trees\n";
  return 0;
}

int do_aspects(CliArgs& args) {
  require(!args.cfg.trees_dir.empty(), "--trees is required");
  require(args.cfg.reviews_path.empty(), "aspects only reads --trees input");
  require(!args.cfg.out_dir.empty(), "--out is required");
  Tagger tagger = make_tagger(args.cfg.lexicon_path);
  std::vector<std::string> files = sorted_json_files(args.cfg.trees_dir);
  fs::create_directories(args.cfg.out_dir);
  parallel_for(files.size(), args.cfg.workers, [&](size_t i) {
    DiscourseTree tree = load_discourse_tree(files[i]);
    AspectDiscourseTree adt = extract_adt(tree, tagger);
    std::string name = fs::path(files[i]).filename().string();
    save_adt(adt, (fs::path(args.cfg.out_dir) / name).string());
  });
  std::cout << "wrote " << files.size() << " aspect trees\n";
  return 0;
}

int do_tuples(CliArgs& args) {
  require(!args.adts_dir.empty(), "--adts is required");
  require(!args.cfg.out_dir.empty(), "--out is required");
  std::vector<std::string> files = sorted_json_files(args.adts_dir);
  std::vector<std::vector<AspectTuple>> doc_tuples(files.size());
  parallel_for(files.size(), args.cfg.workers, [&](size_t i) {
    doc_tuples[i] = extract_tuples(load_adt(files[i]));
  });
  fs::create_directories(args.cfg.out_dir);
  auto tsv = open_out((fs::path(args.cfg.out_dir) / artifact::kTuples).string());
  PairCounts counts;
  for (size_t i = 0; i < files.size(); ++i) {
    const std::string stem = fs::path(files[i]).stem().string();
    for (const auto& t : doc_tuples[i]) {
      tsv << t.nucleus.label << '\t' << t.satellite.label << '\t' << t.relation << '\t'
          << stem << '\n';
    }
    merge_counts(counts, count_tuples(doc_tuples[i]));
  }
  tsv.close();
  RankedPairs ranked = rank_pairs(counts);
  save_ranked_pairs(ranked, (fs::path(args.cfg.out_dir) / artifact::kRankedPairs).string());
  std::cout << "ranked " << ranked.size() << " pairs\n";
  return 0;
}

int do_build(CliArgs& args) {
  require(!args.pairs_path.empty(), "--pairs is required");
  require(!args.cfg.out_dir.empty(), "--out is required");
  RankedPairs ranked = load_ranked_pairs(args.pairs_path);
  std::vector<PairEvent> events;
  AspectForest forest = build_hierarchy(ranked, &events);
  fs::create_directories(args.cfg.out_dir);
  save_forest(forest, (fs::path(args.cfg.out_dir) / artifact::kForestJson).string());
  auto dot = open_out((fs::path(args.cfg.out_dir) / artifact::kForestDot).string());
  dot << export_dot(forest, true);
  dot.close();
  write_skip_log(events, (fs::path(args.cfg.out_dir) / artifact::kSkips).string());
  std::cout << "forest with " << forest.roots.size() << " roots, " << forest.nodes.size()
            << " nodes\n";
  return 0;
}

int do_coverage(CliArgs& args) {
  require(!args.pairs_path.empty(), "--pairs is required");
  require(!args.cfg.kg_path.empty(), "--kg is required");
  require(!args.cfg.out_dir.empty(), "--out is required");
  require(!args.cfg.top_n.empty(), "--top-n must not be empty");
  for (size_t i = 0; i < args.cfg.top_n.size(); ++i) {
    require(args.cfg.top_n[i] > 0 && (i == 0 || args.cfg.top_n[i] > args.cfg.top_n[i - 1]),
            "--top-n entries must be positive and strictly increasing");
  }
  require(args.cfg.max_hops >= 1, "--max-hops must be >= 1");
  RankedPairs ranked = load_ranked_pairs(args.pairs_path);
  KgConfig kc;
  kc.relatedto = args.cfg.relatedto;
  KnowledgeGraph kg = load_kg(args.cfg.kg_path, kc, &std::cerr);
  std::vector<CoverageReport> reports;
  nlohmann::ordered_json js = nlohmann::ordered_json::array();
  for (std::size_t n : args.cfg.top_n) {
    reports.push_back(coverage(kg, ranked, n, args.cfg.max_hops));
    js.push_back(coverage_to_json(reports.back()));
  }
  fs::create_directories(args.cfg.out_dir);
  write_coverage_tsv(reports, (fs::path(args.cfg.out_dir) / artifact::kCoverageTsv).string());
  auto out = open_out((fs::path(args.cfg.out_dir) / artifact::kCoverageJson).string());
  out << js.dump(2) << '\n';
  for (const auto& r : reports) {
    std::cout << "top " << r.n << ": " << r.covered << "/" << r.total << "\n";
  }
  return 0;
}

int do_run(CliArgs& args) {
  run_pipeline(args.cfg, &std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aspect hierarchy extraction pipeline"};
  app.set_version_flag("--version", "aspecthier 0.1.0");
  app.require_subcommand(1);

  CliArgs args;

  auto add_corpus_opts = [&](CLI::App* cmd) {
    cmd->add_option("--input", args.cfg.reviews_path, "JSONL review corpus (.gz accepted)");
    cmd->add_option("--text-field", args.cfg.text_field, "review body field")
        ->capture_default_str();
    cmd->add_option("--id-field", args.cfg.id_field, "review id field");
    cmd->add_option("--sample", args.cfg.sample_size, "sample this many documents");
    cmd->add_option("--seed", args.cfg.sample_seed, "sampling seed")->capture_default_str();
    cmd->add_option("--lexicon", args.cfg.lexicon_path, "tagger lexicon TSV");
    cmd->add_option("--connectives", args.cfg.connectives_path, "connective list file");
    cmd->add_option("--workers", args.cfg.workers, "worker threads")->capture_default_str();
  };
  auto add_kg_opts = [&](CLI::App* cmd) {
    cmd->add_option("--kg", args.cfg.kg_path, "knowledge graph TSV (.gz accepted)");
    cmd->add_option("--max-hops", args.cfg.max_hops, "distance bound")->capture_default_str();
    cmd->add_option("--top-n", args.cfg.top_n, "coverage cut-offs")->capture_default_str();
    cmd->add_option("--relatedto-class", args.relatedto,
                    "RelatedTo handling: hierarchical|substitution|ignore")
        ->check(CLI::IsMember({"hierarchical", "substitution", "ignore"}))
        ->capture_default_str();
  };

  CLI::App* stats_cmd = app.add_subcommand("stats", "corpus statistics");
  add_corpus_opts(stats_cmd);
  stats_cmd->add_option("--trees", args.cfg.trees_dir, "discourse tree directory");
  stats_cmd->add_option("--out", args.cfg.out_dir, "output directory")->required();

  CLI::App* segment_cmd = app.add_subcommand("segment", "segment reviews into naive trees");
  add_corpus_opts(segment_cmd);
  segment_cmd->add_option("--out", args.cfg.out_dir, "output directory")->required();

  CLI::App* aspects_cmd = app.add_subcommand("aspects", "rewrite trees into aspect trees");
  aspects_cmd->add_option("--trees", args.cfg.trees_dir, "discourse tree directory")
      ->required();
  aspects_cmd->add_option("--lexicon", args.cfg.lexicon_path, "tagger lexicon TSV");
  aspects_cmd->add_option("--workers", args.cfg.workers, "worker threads")
      ->capture_default_str();
  aspects_cmd->add_option("--out", args.cfg.out_dir, "output directory")->required();

  CLI::App* tuples_cmd = app.add_subcommand("tuples", "extract and rank aspect tuples");
  tuples_cmd->add_option("--adts", args.adts_dir, "aspect tree directory")->required();
  tuples_cmd->add_option("--workers", args.cfg.workers, "worker threads")
      ->capture_default_str();
  tuples_cmd->add_option("--out", args.cfg.out_dir, "output directory")->required();

  CLI::App* build_cmd = app.add_subcommand("build", "build the aspect hierarchy");
  build_cmd->add_option("--pairs", args.pairs_path, "ranked pairs TSV")->required();
  build_cmd->add_option("--out", args.cfg.out_dir, "output directory")->required();

  CLI::App* coverage_cmd = app.add_subcommand("coverage", "evaluate ranked pairs");
  coverage_cmd->add_option("--pairs", args.pairs_path, "ranked pairs TSV")->required();
  add_kg_opts(coverage_cmd);
  coverage_cmd->add_option("--out", args.cfg.out_dir, "output directory")->required();

  CLI::App* run_cmd = app.add_subcommand("run", "full pipeline");
  add_corpus_opts(run_cmd);
  run_cmd->add_option("--trees", args.cfg.trees_dir, "discourse tree directory");
  add_kg_opts(run_cmd);
  run_cmd->add_option("--out", args.cfg.out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    apply_relatedto(args);
    if (stats_cmd->parsed()) return do_stats(args);
    if (segment_cmd->parsed()) return do_segment(args);
    if (aspects_cmd->parsed()) return do_aspects(args);
    if (tuples_cmd->parsed()) return do_tuples(args);
    if (build_cmd->parsed()) return do_build(args);
    if (coverage_cmd->parsed()) return do_coverage(args);
    if (run_cmd->parsed()) return do_run(args);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
