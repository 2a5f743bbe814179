#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aspecthier/knowledge_graph.hpp"
#include "aspecthier/tuples.hpp"

namespace aspecthier {

// Minimal path cost between the two labels where hierarchical edges cost 1
// (either direction) and substitution edges cost 0, computed by a 0-1 BFS.
// Absent when a label is unknown or every path costs more than max_hops.
std::optional<int> hierarchical_distance(const KnowledgeGraph& kg, const std::string& a,
                                         const std::string& b, int max_hops);

struct PairCoverage {
  std::string nucleus;
  std::string satellite;
  bool covered = false;
  std::optional<int> distance;
};

struct CoverageReport {
  std::size_t n = 0;        // requested cut-off
  std::size_t covered = 0;
  std::size_t total = 0;    // actual pairs evaluated, min(n, ranking size)
  double value = 0.0;       // covered / total
  std::vector<PairCoverage> per_pair;
};

// Evaluates the top-n ranked pairs against the graph. Throws
// std::domain_error when the ranking is empty (coverage undefined).
CoverageReport coverage(const KnowledgeGraph& kg, const RankedPairs& pairs,
                        std::size_t n, int max_hops = 3);

nlohmann::ordered_json coverage_to_json(const CoverageReport& report);

// Table-style TSV `top_n<TAB>coverage`, coverage printed with 2 decimals.
void write_coverage_tsv(const std::vector<CoverageReport>& reports,
                        const std::string& path);

}  // namespace aspecthier
