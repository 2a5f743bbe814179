#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "aspecthier/tuples.hpp"

namespace aspecthier {

struct HierarchyNode {
  int id = 0;
  std::string label;
  std::vector<int> children;          // insertion order
  std::optional<int> parent;
  std::uint64_t weight = 0;           // count of the pair that created the parent edge
};

struct AspectForest {
  std::vector<HierarchyNode> nodes;   // id == index
  std::vector<int> roots;             // insertion order
  std::map<std::string, int> canonical;

  const HierarchyNode& node(int id) const { return nodes.at(static_cast<size_t>(id)); }
  int root_of(int id) const;
  bool is_root(int id) const { return !node(id).parent.has_value(); }
};

enum class PairOutcome { Attached, Merged, Reflected, Skipped };

enum class SkipReason { Cycle, SelfMerge };

std::string to_string(PairOutcome o);
std::string to_string(SkipReason r);

// One entry per input pair; Skipped entries carry a reason.
struct PairEvent {
  std::string nucleus;
  std::string satellite;
  std::uint64_t count = 0;
  PairOutcome outcome = PairOutcome::Attached;
  std::optional<SkipReason> reason;
};

// Greedy fold over pairs in rank order. For each (nuc, sat):
//   1. ensure a canonical node for nuc, creating a new root if absent;
//   2. if sat labels the root of another tree, re-parent that root here;
//   3. if sat already labels a node on the attachment point's root path,
//      skip the pair (cycle guard);
//   4. if the attachment point already has a child labeled sat, no-op;
//   5. otherwise append a fresh child labeled sat (duplicates across the
//      forest are fine).
class HierarchyBuilder {
 public:
  PairEvent push(const RankedPair& pair);
  AspectForest take() { return std::move(forest_); }
  const AspectForest& forest() const { return forest_; }

 private:
  int new_node(const std::string& label);
  AspectForest forest_;
};

AspectForest build_hierarchy(const RankedPairs& pairs,
                             std::vector<PairEvent>* events = nullptr);

// DOT digraph; node identifiers are ids so duplicate labels stay distinct.
// annotate_counts adds the pair count as an edge label.
std::string export_dot(const AspectForest& forest, bool annotate_counts = false);

// Deduplicated (parent_label, child_label) edges.
std::set<std::pair<std::string, std::string>> hierarchy_pairs(const AspectForest& forest);

nlohmann::ordered_json forest_to_json(const AspectForest& forest);
void save_forest(const AspectForest& forest, const std::string& path);

// TSV `nucleus<TAB>satellite<TAB>reason` of the Skipped events.
void write_skip_log(const std::vector<PairEvent>& events, const std::string& path);

}  // namespace aspecthier
