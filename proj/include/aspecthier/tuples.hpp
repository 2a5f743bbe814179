#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aspecthier/aspects.hpp"

namespace aspecthier {

// (nucleus, satellite, relation), labels always distinct.
struct AspectTuple {
  Aspect nucleus;
  Aspect satellite;
  std::string relation;

  friend auto operator<=>(const AspectTuple&, const AspectTuple&) = default;
};

struct RankedPair {
  std::string nucleus;
  std::string satellite;
  std::uint64_t count = 0;

  friend auto operator<=>(const RankedPair&, const RankedPair&) = default;
};

// Sorted by count descending, ties by (nucleus, satellite) ascending.
using RankedPairs = std::vector<RankedPair>;

using PairCounts = std::map<std::pair<std::string, std::string>, std::uint64_t>;

// Breadth-first tuple generation. At each internal node with at least one
// Nucleus and one Satellite child, the head-leaf aspects of every Nucleus
// child are crossed with the head-leaf aspects of every Satellite child
// (head leaf: repeatedly descend the leftmost Nucleus child). Equal-label
// pairs are dropped. Output order is BFS node order, then nucleus child
// order, satellite child order, and aspect order within each leaf.
std::vector<AspectTuple> extract_tuples(const AspectDiscourseTree& adt);

PairCounts count_tuples(std::span<const AspectTuple> tuples);

// other is folded into acc, pointwise sum.
void merge_counts(PairCounts& acc, const PairCounts& other);

RankedPairs rank_pairs(const PairCounts& counts);

// count_tuples followed by rank_pairs.
RankedPairs aggregate(std::span<const AspectTuple> tuples);

// First min(n, pairs.size()) entries.
RankedPairs top_n(const RankedPairs& pairs, std::size_t n);

// TSV `nucleus<TAB>satellite<TAB>count`, one row per pair.
void save_ranked_pairs(const RankedPairs& pairs, const std::string& path);
RankedPairs load_ranked_pairs(const std::string& path);

}  // namespace aspecthier
