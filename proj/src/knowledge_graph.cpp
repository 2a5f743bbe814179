#include "aspecthier/knowledge_graph.hpp"

#include <algorithm>
#include <ostream>

#include "aspecthier/errors.hpp"
#include "aspecthier/util.hpp"

namespace aspecthier {

std::optional<RelatedToClass> relatedto_class_from_string(const std::string& s) {
  if (s == "hierarchical") return RelatedToClass::Hierarchical;
  if (s == "substitution") return RelatedToClass::Substitution;
  if (s == "ignore") return RelatedToClass::Ignore;
  return std::nullopt;
}

std::optional<bool> KgConfig::zero_cost(const std::string& relation) const {
  if (relation == "RelatedTo") {
    switch (relatedto) {
      case RelatedToClass::Hierarchical: return false;
      case RelatedToClass::Substitution: return true;
      case RelatedToClass::Ignore: return std::nullopt;
    }
  }
  if (hierarchical_relations.count(relation)) return false;
  if (substitution_relations.count(relation)) return true;
  return std::nullopt;
}

KnowledgeGraph KnowledgeGraph::from_edges(std::vector<KgEdge> edges,
                                          const KgConfig& config) {
  KnowledgeGraph kg;
  std::erase_if(edges, [&](const KgEdge& e) { return !config.zero_cost(e.relation); });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  kg.edges_ = std::move(edges);

  for (const auto& e : kg.edges_) {
    kg.concepts_.push_back(e.subject);
    kg.concepts_.push_back(e.object);
  }
  std::sort(kg.concepts_.begin(), kg.concepts_.end());
  kg.concepts_.erase(std::unique(kg.concepts_.begin(), kg.concepts_.end()),
                     kg.concepts_.end());

  kg.adjacency_.assign(kg.concepts_.size(), {});
  for (const auto& e : kg.edges_) {
    int s = *kg.concept_id(e.subject);
    int o = *kg.concept_id(e.object);
    bool zero = *config.zero_cost(e.relation);
    kg.adjacency_[static_cast<size_t>(s)].push_back(Arc{o, zero});
    kg.adjacency_[static_cast<size_t>(o)].push_back(Arc{s, zero});
  }
  return kg;
}

std::optional<int> KnowledgeGraph::concept_id(const std::string& label) const {
  auto it = std::lower_bound(concepts_.begin(), concepts_.end(), label);
  if (it == concepts_.end() || *it != label) return std::nullopt;
  return static_cast<int>(it - concepts_.begin());
}

const std::vector<KnowledgeGraph::Arc>& KnowledgeGraph::arcs(int concept_id) const {
  return adjacency_.at(static_cast<size_t>(concept_id));
}

namespace {

// "/c/en/mobile_phone/n" -> "mobile phone"; bare labels pass through.
// Returns nullopt for non-English URIs.
std::optional<std::string> parse_concept(std::string_view field, int line_no) {
  std::string term;
  if (!field.empty() && field.front() == '/') {
    std::vector<std::string_view> segs;
    size_t start = 1;
    while (start <= field.size()) {
      size_t slash = field.find('/', start);
      if (slash == std::string_view::npos) {
        segs.push_back(field.substr(start));
        break;
      }
      segs.push_back(field.substr(start, slash - start));
      start = slash + 1;
    }
    if (segs.size() < 3 || segs[0] != "c" || segs[2].empty()) {
      throw InputError("line " + std::to_string(line_no) + ": malformed concept URI " +
                       std::string(field));
    }
    if (segs[1] != "en") return std::nullopt;
    term = std::string(segs[2]);
  } else {
    term = std::string(field);
  }
  for (char& c : term) {
    if (c == '_') c = ' ';
  }
  return to_lower_ascii(term);
}

std::string parse_relation(std::string_view field, int line_no) {
  if (!field.empty() && field.front() == '/') {
    std::vector<std::string_view> segs;
    size_t start = 1;
    while (start <= field.size()) {
      size_t slash = field.find('/', start);
      if (slash == std::string_view::npos) {
        segs.push_back(field.substr(start));
        break;
      }
      segs.push_back(field.substr(start, slash - start));
      start = slash + 1;
    }
    if (segs.size() < 2 || segs[0] != "r" || segs[1].empty()) {
      throw InputError("line " + std::to_string(line_no) + ": malformed relation URI " +
                       std::string(field));
    }
    return std::string(segs[1]);
  }
  return std::string(field);
}

}  // namespace

KnowledgeGraph load_kg(const std::string& path, const KgConfig& config,
                       std::ostream* warnings) {
  GzLineReader reader(path);
  std::vector<KgEdge> edges;
  std::string line;
  int line_no = 0;
  while (reader.next(line)) {
    ++line_no;
    if (is_blank(line)) continue;
    auto cols = split_tabs(line);
    if (cols.size() < 3) {
      throw InputError("line " + std::to_string(line_no) + ": expected at least 3 columns");
    }
    std::string relation = parse_relation(cols[0], line_no);
    if (!config.zero_cost(relation)) continue;
    auto subject = parse_concept(cols[1], line_no);
    auto object = parse_concept(cols[2], line_no);
    if (!subject || !object) continue;
    if (subject->empty() || object->empty()) {
      throw InputError("line " + std::to_string(line_no) + ": empty concept label");
    }
    edges.push_back(KgEdge{std::move(*subject), relation, std::move(*object)});
  }
  KnowledgeGraph kg = KnowledgeGraph::from_edges(std::move(edges), config);
  if (kg.empty() && warnings) {
    *warnings << "warning: knowledge graph is empty after filtering " << path << "\n";
  }
  return kg;
}

}  // namespace aspecthier
