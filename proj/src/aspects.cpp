#include "aspecthier/aspects.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "aspecthier/util.hpp"

namespace aspecthier {

namespace {

bool is_noun(PosTag t) { return t == PosTag::Noun || t == PosTag::Propn; }

}  // namespace

std::vector<Aspect> extract_aspects(const Edu& edu) {
  if (!edu.text.empty() && edu.tokens.empty()) {
    throw std::invalid_argument("EDU has no tokens; tag it first");
  }
  std::vector<Aspect> out;
  std::set<std::string> seen;
  const auto& toks = edu.tokens;
  size_t i = 0;
  while (i < toks.size()) {
    if (toks[i].pos != PosTag::Adj && !is_noun(toks[i].pos)) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < toks.size() && toks[i].pos == PosTag::Adj) ++i;
    size_t noun_start = i;
    while (i < toks.size() && is_noun(toks[i].pos)) ++i;
    if (noun_start == i) {
      // adjectives with no noun head, not a chunk
      i = start + 1;
      continue;
    }
    std::string label;
    for (size_t j = noun_start; j < i; ++j) {
      if (!label.empty()) label += ' ';
      label += to_lower_ascii(toks[j].surface);
    }
    if (seen.insert(label).second) out.push_back(Aspect{std::move(label)});
  }
  return out;
}

AdtNodePtr make_adt_leaf(std::vector<Aspect> aspects, int edu_id) {
  auto n = std::make_unique<AdtNode>();
  n->leaf = true;
  n->aspects = std::move(aspects);
  n->edu_id = edu_id;
  return n;
}

AdtNodePtr make_adt_internal(std::string relation, std::vector<AdtChild> children) {
  auto n = std::make_unique<AdtNode>();
  n->leaf = false;
  n->relation = std::move(relation);
  n->children = std::move(children);
  return n;
}

int leaf_count(const AdtNode& node) {
  if (node.is_leaf()) return 1;
  int total = 0;
  for (const auto& c : node.children) total += leaf_count(*c.node);
  return total;
}

void collect_labels(const AdtNode& node, std::set<std::string>& labels) {
  if (node.is_leaf()) {
    for (const auto& a : node.aspects) labels.insert(a.label);
    return;
  }
  for (const auto& c : node.children) collect_labels(*c.node, labels);
}

bool structurally_equal(const AdtNode& a, const AdtNode& b) {
  if (a.leaf != b.leaf) return false;
  if (a.leaf) return a.edu_id == b.edu_id && a.aspects == b.aspects;
  if (a.relation != b.relation) return false;
  if (a.children.size() != b.children.size()) return false;
  for (size_t i = 0; i < a.children.size(); ++i) {
    if (a.children[i].nuclearity != b.children[i].nuclearity) return false;
    if (!structurally_equal(*a.children[i].node, *b.children[i].node)) return false;
  }
  return true;
}

namespace {

AdtNodePtr transform(const DtNode& node, const Tagger& tagger) {
  if (node.is_leaf()) {
    const Edu& edu = *node.edu;
    if (edu.tokens.empty() && !edu.text.empty()) {
      Edu tagged = edu;
      tagged.tokens = tagger.tag(edu.text);
      return make_adt_leaf(extract_aspects(tagged), edu.id);
    }
    return make_adt_leaf(extract_aspects(edu), edu.id);
  }
  std::vector<AdtChild> kids;
  kids.reserve(node.children.size());
  for (const auto& c : node.children) {
    AdtNodePtr sub = transform(*c.node, tagger);
    bool dissolve = false;
    if (!sub->is_leaf()) {
      dissolve = true;
      for (const auto& sc : sub->children) {
        if (sc.nuclearity != Nuclearity::Nucleus) {
          dissolve = false;
          break;
        }
      }
    }
    if (dissolve) {
      // all-nucleus relation carries no ranking signal, splice the children
      // through under the dissolved node's own tag
      for (auto& sc : sub->children) {
        kids.push_back(AdtChild{c.nuclearity, std::move(sc.node)});
      }
    } else {
      kids.push_back(AdtChild{c.nuclearity, std::move(sub)});
    }
  }
  return make_adt_internal(node.relation, std::move(kids));
}

}  // namespace

AspectDiscourseTree extract_adt(const DiscourseTree& tree, const Tagger& tagger) {
  validate(tree);
  AdtNodePtr root = transform(*tree.root, tagger);
  if (!root->is_leaf()) {
    bool all_nucleus = true;
    for (const auto& c : root->children) {
      if (c.nuclearity != Nuclearity::Nucleus) {
        all_nucleus = false;
        break;
      }
    }
    if (all_nucleus) {
      root->relation = kForestRelation;
    }
  }
  AspectDiscourseTree adt;
  adt.root = std::move(root);
  return adt;
}

}  // namespace aspecthier
