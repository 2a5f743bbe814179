#include "aspecthier/coverage.hpp"

#include <cstdio>
#include <deque>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "aspecthier/errors.hpp"

namespace aspecthier {

std::optional<int> hierarchical_distance(const KnowledgeGraph& kg, const std::string& a,
                                         const std::string& b, int max_hops) {
  if (max_hops < 1) throw std::invalid_argument("max_hops must be >= 1");
  auto src = kg.concept_id(a);
  auto dst = kg.concept_id(b);
  if (!src || !dst) return std::nullopt;
  if (*src == *dst) return 0;

  // 0-1 BFS: zero-cost arcs go to the front of the deque, so live entries
  // pop in nondecreasing cost order; stale entries are skipped
  constexpr int kUnseen = -1;
  std::vector<int> dist(kg.concepts().size(), kUnseen);
  std::deque<std::pair<int, int>> queue;  // (node, cost at push)
  dist[static_cast<size_t>(*src)] = 0;
  queue.emplace_back(*src, 0);
  while (!queue.empty()) {
    auto [u, du] = queue.front();
    queue.pop_front();
    if (du != dist[static_cast<size_t>(u)]) continue;
    if (du > max_hops) break;
    if (u == *dst) return du;
    for (const auto& arc : kg.arcs(u)) {
      int cost = arc.zero_cost ? 0 : 1;
      int& dv = dist[static_cast<size_t>(arc.target)];
      if (dv == kUnseen || du + cost < dv) {
        dv = du + cost;
        if (cost == 0) {
          queue.emplace_front(arc.target, dv);
        } else {
          queue.emplace_back(arc.target, dv);
        }
      }
    }
  }
  return std::nullopt;
}

CoverageReport coverage(const KnowledgeGraph& kg, const RankedPairs& pairs,
                        std::size_t n, int max_hops) {
  RankedPairs cut = top_n(pairs, n);
  if (cut.empty()) throw std::domain_error("coverage is undefined for an empty ranking");
  CoverageReport report;
  report.n = n;
  report.total = cut.size();
  report.per_pair.reserve(cut.size());
  for (const auto& p : cut) {
    PairCoverage pc;
    pc.nucleus = p.nucleus;
    pc.satellite = p.satellite;
    pc.distance = hierarchical_distance(kg, p.nucleus, p.satellite, max_hops);
    pc.covered = pc.distance.has_value();
    if (pc.covered) ++report.covered;
    report.per_pair.push_back(std::move(pc));
  }
  report.value = static_cast<double>(report.covered) / static_cast<double>(report.total);
  return report;
}

nlohmann::ordered_json coverage_to_json(const CoverageReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["covered"] = report.covered;
  j["total"] = report.total;
  j["coverage"] = report.value;
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (const auto& pc : report.per_pair) {
    nlohmann::ordered_json pj;
    pj["nucleus"] = pc.nucleus;
    pj["satellite"] = pc.satellite;
    pj["covered"] = pc.covered;
    if (pc.distance) {
      pj["distance"] = *pc.distance;
    } else {
      pj["distance"] = nullptr;
    }
    pairs.push_back(std::move(pj));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

void write_coverage_tsv(const std::vector<CoverageReport>& reports,
                        const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path + " for writing");
  char buf[32];
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof buf, "%.2f", r.value);
    out << r.n << '\t' << buf << '\n';
  }
}

}  // namespace aspecthier
