#include "aspecthier/hierarchy.hpp"

#include <fstream>
#include <stdexcept>

#include "aspecthier/errors.hpp"

namespace aspecthier {

int AspectForest::root_of(int id) const {
  int cur = id;
  while (node(cur).parent) cur = *node(cur).parent;
  return cur;
}

std::string to_string(PairOutcome o) {
  switch (o) {
    case PairOutcome::Attached: return "attached";
    case PairOutcome::Merged: return "merged";
    case PairOutcome::Reflected: return "reflected";
    case PairOutcome::Skipped: return "skipped";
  }
  return "?";
}

std::string to_string(SkipReason r) {
  switch (r) {
    case SkipReason::Cycle: return "cycle";
    case SkipReason::SelfMerge: return "self-merge";
  }
  return "?";
}

int HierarchyBuilder::new_node(const std::string& label) {
  int id = static_cast<int>(forest_.nodes.size());
  HierarchyNode n;
  n.id = id;
  n.label = label;
  forest_.nodes.push_back(std::move(n));
  forest_.canonical.emplace(label, id);  // keeps the first (minimal) id
  return id;
}

PairEvent HierarchyBuilder::push(const RankedPair& pair) {
  if (pair.nucleus == pair.satellite) {
    throw std::invalid_argument("pair has equal labels: " + pair.nucleus);
  }
  PairEvent ev;
  ev.nucleus = pair.nucleus;
  ev.satellite = pair.satellite;
  ev.count = pair.count;

  auto nuc_it = forest_.canonical.find(pair.nucleus);
  int p;
  if (nuc_it == forest_.canonical.end()) {
    p = new_node(pair.nucleus);
    forest_.roots.push_back(p);
  } else {
    p = nuc_it->second;
  }

  // merge: the satellite heads its own tree somewhere else
  auto sat_it = forest_.canonical.find(pair.satellite);
  if (sat_it != forest_.canonical.end() && forest_.is_root(sat_it->second) &&
      forest_.root_of(p) != sat_it->second) {
    int r = sat_it->second;
    std::erase(forest_.roots, r);
    forest_.nodes[static_cast<size_t>(r)].parent = p;
    forest_.nodes[static_cast<size_t>(r)].weight = pair.count;
    forest_.nodes[static_cast<size_t>(p)].children.push_back(r);
    ev.outcome = PairOutcome::Merged;
    return ev;
  }

  // cycle guard: the satellite label may not already sit on p's root path
  for (int cur = p;;) {
    if (forest_.node(cur).label == pair.satellite) {
      ev.outcome = PairOutcome::Skipped;
      ev.reason = SkipReason::Cycle;
      return ev;
    }
    if (!forest_.node(cur).parent) break;
    cur = *forest_.node(cur).parent;
  }

  for (int c : forest_.node(p).children) {
    if (forest_.node(c).label == pair.satellite) {
      ev.outcome = PairOutcome::Reflected;
      return ev;
    }
  }

  int child = new_node(pair.satellite);
  forest_.nodes[static_cast<size_t>(child)].parent = p;
  forest_.nodes[static_cast<size_t>(child)].weight = pair.count;
  forest_.nodes[static_cast<size_t>(p)].children.push_back(child);
  ev.outcome = PairOutcome::Attached;
  return ev;
}

AspectForest build_hierarchy(const RankedPairs& pairs, std::vector<PairEvent>* events) {
  HierarchyBuilder builder;
  for (const auto& pr : pairs) {
    PairEvent ev = builder.push(pr);
    if (events) events->push_back(std::move(ev));
  }
  return builder.take();
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const AspectForest& forest, bool annotate_counts) {
  std::string out = "digraph aspects {\n  rankdir=TB;\n";
  for (const auto& n : forest.nodes) {
    out += "  n" + std::to_string(n.id) + " [label=\"" + dot_escape(n.label) + "\"];\n";
  }
  for (const auto& n : forest.nodes) {
    for (int c : n.children) {
      out += "  n" + std::to_string(n.id) + " -> n" + std::to_string(c);
      if (annotate_counts) {
        out += " [label=\"" + std::to_string(forest.node(c).weight) + "\"]";
      }
      out += ";\n";
    }
  }
  out += "}\n";
  return out;
}

std::set<std::pair<std::string, std::string>> hierarchy_pairs(const AspectForest& forest) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& n : forest.nodes) {
    for (int c : n.children) {
      out.emplace(n.label, forest.node(c).label);
    }
  }
  return out;
}

nlohmann::ordered_json forest_to_json(const AspectForest& forest) {
  nlohmann::ordered_json j;
  j["roots"] = forest.roots;
  nlohmann::ordered_json nodes = nlohmann::ordered_json::object();
  for (const auto& n : forest.nodes) {
    nlohmann::ordered_json nj;
    nj["label"] = n.label;
    nj["children"] = n.children;
    nodes[std::to_string(n.id)] = std::move(nj);
  }
  j["nodes"] = std::move(nodes);
  return j;
}

void save_forest(const AspectForest& forest, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << forest_to_json(forest).dump(2) << '\n';
}

void write_skip_log(const std::vector<PairEvent>& events, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path + " for writing");
  for (const auto& ev : events) {
    if (ev.outcome != PairOutcome::Skipped) continue;
    out << ev.nucleus << '\t' << ev.satellite << '\t' << to_string(*ev.reason) << '\n';
  }
}

}  // namespace aspecthier
