#include "aspecthier/discourse.hpp"

#include <limits>

#include "aspecthier/errors.hpp"

namespace aspecthier {

const char* to_string(PosTag tag) {
  switch (tag) {
    case PosTag::Noun: return "NOUN";
    case PosTag::Propn: return "PROPN";
    case PosTag::Adj: return "ADJ";
    case PosTag::Det: return "DET";
    case PosTag::Verb: return "VERB";
    case PosTag::Adp: return "ADP";
    case PosTag::Punct: return "PUNCT";
    case PosTag::Other: return "OTHER";
  }
  return "OTHER";
}

std::optional<PosTag> pos_from_string(std::string_view name) {
  if (name == "NOUN") return PosTag::Noun;
  if (name == "PROPN") return PosTag::Propn;
  if (name == "ADJ") return PosTag::Adj;
  if (name == "DET") return PosTag::Det;
  if (name == "VERB") return PosTag::Verb;
  if (name == "ADP") return PosTag::Adp;
  if (name == "PUNCT") return PosTag::Punct;
  if (name == "OTHER") return PosTag::Other;
  return std::nullopt;
}

DtNodePtr make_leaf(Edu edu) {
  auto node = std::make_unique<DtNode>();
  node->edu = std::move(edu);
  return node;
}

DtNodePtr make_internal(std::string relation, std::vector<DtChild> children) {
  auto node = std::make_unique<DtNode>();
  node->relation = std::move(relation);
  node->children = std::move(children);
  return node;
}

int leaf_count(const DtNode& node) {
  if (node.is_leaf()) return 1;
  int n = 0;
  for (const auto& c : node.children) n += leaf_count(*c.node);
  return n;
}

void collect_leaves(const DtNode& node, std::vector<const Edu*>& out) {
  if (node.is_leaf()) {
    out.push_back(&*node.edu);
    return;
  }
  for (const auto& c : node.children) collect_leaves(*c.node, out);
}

DtNodePtr clone(const DtNode& node) {
  auto copy = std::make_unique<DtNode>();
  copy->edu = node.edu;
  copy->relation = node.relation;
  copy->children.reserve(node.children.size());
  for (const auto& c : node.children)
    copy->children.push_back({c.nuclearity, clone(*c.node)});
  return copy;
}

bool structurally_equal(const DtNode& a, const DtNode& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.edu->id == b.edu->id && a.edu->text == b.edu->text;
  if (a.relation != b.relation) return false;
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (a.children[i].nuclearity != b.children[i].nuclearity) return false;
    if (!structurally_equal(*a.children[i].node, *b.children[i].node)) return false;
  }
  return true;
}

namespace {

void validate_node(const DtNode& node, int& last_leaf_id, const std::string& path) {
  if (node.is_leaf()) {
    if (node.edu->id <= last_leaf_id)
      throw InputError(path + ": EDU id " + std::to_string(node.edu->id) +
                       " not strictly increasing left to right");
    last_leaf_id = node.edu->id;
    return;
  }
  if (node.children.size() < 2)
    throw InputError(path + ": internal node needs at least 2 children");
  bool has_nucleus = false;
  for (const auto& c : node.children)
    if (c.nuclearity == Nuclearity::Nucleus) has_nucleus = true;
  if (!has_nucleus)
    throw InputError(path + ": internal node has no nucleus child");
  for (std::size_t i = 0; i < node.children.size(); ++i)
    validate_node(*node.children[i].node, last_leaf_id,
                  path + "/children/" + std::to_string(i) + "/node");
}

}  // namespace

void validate(const DiscourseTree& tree) {
  if (!tree.root) throw InputError("discourse tree has no root");
  int last_leaf_id = std::numeric_limits<int>::min();
  validate_node(*tree.root, last_leaf_id, "");
}

}  // namespace aspecthier
