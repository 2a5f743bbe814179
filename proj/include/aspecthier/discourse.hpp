#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aspecthier {

// Coarse part-of-speech inventory; everything the chunker does not care
// about collapses into Other.
enum class PosTag { Noun, Propn, Adj, Det, Verb, Adp, Punct, Other };

const char* to_string(PosTag tag);
std::optional<PosTag> pos_from_string(std::string_view name);

struct Token {
  std::string surface;
  PosTag pos = PosTag::Other;
  int index = 0;  // position within the EDU
};

// Elementary Discourse Unit: the leaf span of a discourse tree. Tokens are
// filled in by the tagger; trees loaded from disk carry text only until a
// downstream stage tags them.
struct Edu {
  int id = 0;
  std::string text;
  std::vector<Token> tokens;
};

enum class Nuclearity { Nucleus, Satellite };

struct DtNode;
using DtNodePtr = std::unique_ptr<DtNode>;

struct DtChild {
  Nuclearity nuclearity = Nuclearity::Nucleus;
  DtNodePtr node;
};

// Leaf iff `edu` is set. Internal nodes carry a relation label and at least
// two children, at least one of them a nucleus.
struct DtNode {
  std::optional<Edu> edu;
  std::string relation;
  std::vector<DtChild> children;

  bool is_leaf() const { return edu.has_value(); }
};

struct DiscourseTree {
  DtNodePtr root;
};

DtNodePtr make_leaf(Edu edu);
DtNodePtr make_internal(std::string relation, std::vector<DtChild> children);

int leaf_count(const DtNode& node);
void collect_leaves(const DtNode& node, std::vector<const Edu*>& out);
DtNodePtr clone(const DtNode& node);

// Node-by-node equality over shape, relations, nuclearities and EDU id/text.
// Token annotations are derived data and do not participate.
bool structurally_equal(const DtNode& a, const DtNode& b);

// Throws InputError when any tree invariant is violated (node with fewer
// than two children, internal node without a nucleus, EDU ids not strictly
// increasing left to right).
void validate(const DiscourseTree& tree);

}  // namespace aspecthier
