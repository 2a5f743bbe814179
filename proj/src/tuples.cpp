#include "aspecthier/tuples.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <stdexcept>

#include "aspecthier/errors.hpp"
#include "aspecthier/util.hpp"

namespace aspecthier {

namespace {

const AdtNode& head_leaf(const AdtNode& node) {
  const AdtNode* cur = &node;
  while (!cur->is_leaf()) {
    const AdtNode* next = nullptr;
    for (const auto& c : cur->children) {
      if (c.nuclearity == Nuclearity::Nucleus) {
        next = c.node.get();
        break;
      }
    }
    if (!next) throw std::invalid_argument("internal ADT node has no nucleus child");
    cur = next;
  }
  return *cur;
}

}  // namespace

std::vector<AspectTuple> extract_tuples(const AspectDiscourseTree& adt) {
  std::vector<AspectTuple> out;
  if (!adt.root) throw std::invalid_argument("ADT has no root");
  std::deque<const AdtNode*> queue{adt.root.get()};
  while (!queue.empty()) {
    const AdtNode* node = queue.front();
    queue.pop_front();
    if (node->is_leaf()) continue;
    bool has_n = false;
    bool has_s = false;
    for (const auto& c : node->children) {
      (c.nuclearity == Nuclearity::Nucleus ? has_n : has_s) = true;
    }
    if (has_n && has_s) {
      for (const auto& nc : node->children) {
        if (nc.nuclearity != Nuclearity::Nucleus) continue;
        const AdtNode& nh = head_leaf(*nc.node);
        for (const auto& sc : node->children) {
          if (sc.nuclearity != Nuclearity::Satellite) continue;
          const AdtNode& sh = head_leaf(*sc.node);
          for (const auto& na : nh.aspects) {
            for (const auto& sa : sh.aspects) {
              if (na.label == sa.label) continue;
              out.push_back(AspectTuple{na, sa, node->relation});
            }
          }
        }
      }
    }
    for (const auto& c : node->children) queue.push_back(c.node.get());
  }
  return out;
}

PairCounts count_tuples(std::span<const AspectTuple> tuples) {
  PairCounts counts;
  for (const auto& t : tuples) {
    ++counts[{t.nucleus.label, t.satellite.label}];
  }
  return counts;
}

void merge_counts(PairCounts& acc, const PairCounts& other) {
  for (const auto& [key, n] : other) acc[key] += n;
}

RankedPairs rank_pairs(const PairCounts& counts) {
  RankedPairs pairs;
  pairs.reserve(counts.size());
  for (const auto& [key, n] : counts) {
    pairs.push_back(RankedPair{key.first, key.second, n});
  }
  std::sort(pairs.begin(), pairs.end(), [](const RankedPair& a, const RankedPair& b) {
    if (a.count != b.count) return a.count > b.count;
    if (a.nucleus != b.nucleus) return a.nucleus < b.nucleus;
    return a.satellite < b.satellite;
  });
  return pairs;
}

RankedPairs aggregate(std::span<const AspectTuple> tuples) {
  return rank_pairs(count_tuples(tuples));
}

RankedPairs top_n(const RankedPairs& pairs, std::size_t n) {
  if (n == 0) throw std::invalid_argument("top_n needs n >= 1");
  RankedPairs out(pairs.begin(), pairs.begin() + std::min(n, pairs.size()));
  return out;
}

void save_ranked_pairs(const RankedPairs& pairs, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path + " for writing");
  for (const auto& p : pairs) {
    out << p.nucleus << '\t' << p.satellite << '\t' << p.count << '\n';
  }
}

RankedPairs load_ranked_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  RankedPairs pairs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    auto cols = split_tabs(line);
    if (cols.size() != 3 || cols[0].empty() || cols[1].empty()) {
      throw InputError("line " + std::to_string(line_no) +
                       ": expected nucleus<TAB>satellite<TAB>count");
    }
    std::uint64_t n = 0;
    auto [ptr, ec] = std::from_chars(cols[2].data(), cols[2].data() + cols[2].size(), n);
    if (ec != std::errc{} || ptr != cols[2].data() + cols[2].size() || n == 0) {
      throw InputError("line " + std::to_string(line_no) + ": invalid count " +
                       std::string(cols[2]));
    }
    pairs.push_back(RankedPair{std::string(cols[0]), std::string(cols[1]), n});
  }
  return pairs;
}

}  // namespace aspecthier
