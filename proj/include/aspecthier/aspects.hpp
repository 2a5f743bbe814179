#pragma once

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "aspecthier/discourse.hpp"
#include "aspecthier/tagger.hpp"

namespace aspecthier {

// A noun-phrase label: lowercased, single-space normalized.
struct Aspect {
  std::string label;

  friend auto operator<=>(const Aspect&, const Aspect&) = default;
};

// Maximal (ADJ)*(NOUN|PROPN)+ chunks, with the adjectives stripped from the
// label. Duplicate labels within one EDU are kept once, first occurrence.
// Requires a tagged EDU; an EDU without nouns yields an empty sequence.
std::vector<Aspect> extract_aspects(const Edu& edu);

struct AdtNode;
using AdtNodePtr = std::unique_ptr<AdtNode>;

struct AdtChild {
  Nuclearity nuclearity = Nuclearity::Nucleus;
  AdtNodePtr node;
};

struct AdtNode {
  bool leaf = false;
  // leaf payload
  std::vector<Aspect> aspects;
  int edu_id = 0;
  // internal payload
  std::string relation;
  std::vector<AdtChild> children;

  bool is_leaf() const { return leaf; }
};

struct AspectDiscourseTree {
  AdtNodePtr root;
};

// Relation label of the synthetic root that holds a dissolved forest.
inline constexpr const char* kForestRelation = "FOREST";

AdtNodePtr make_adt_leaf(std::vector<Aspect> aspects, int edu_id);
AdtNodePtr make_adt_internal(std::string relation, std::vector<AdtChild> children);

int leaf_count(const AdtNode& node);
bool structurally_equal(const AdtNode& a, const AdtNode& b);

// Distinct aspect labels over all leaves under `node`.
void collect_labels(const AdtNode& node, std::set<std::string>& labels);

// Rewrites a discourse tree into an aspect discourse tree: leaves become
// aspect lists, and internal nodes whose children are all nuclei are
// dissolved by splicing their children into the parent under the dissolved
// node's own nuclearity. A dissolved root becomes a synthetic FOREST node.
// Leaves without tokens are tagged on the fly with `tagger`.
AspectDiscourseTree extract_adt(const DiscourseTree& tree, const Tagger& tagger);

}  // namespace aspecthier
