#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace aspecthier {

struct KgEdge {
  std::string subject;
  std::string relation;
  std::string object;

  friend auto operator<=>(const KgEdge&, const KgEdge&) = default;
};

enum class RelatedToClass { Hierarchical, Substitution, Ignore };

std::optional<RelatedToClass> relatedto_class_from_string(const std::string& s);

struct KgConfig {
  std::set<std::string> hierarchical_relations = {"LocatedNear", "HasA", "PartOf",
                                                  "MadeOf", "IsA"};
  std::set<std::string> substitution_relations = {"Synonym"};
  RelatedToClass relatedto = RelatedToClass::Hierarchical;

  // Hierarchical edges cost 1, substitution edges cost 0, nullopt means drop.
  std::optional<bool> zero_cost(const std::string& relation) const;
};

class KnowledgeGraph {
 public:
  struct Arc {
    int target = 0;
    bool zero_cost = false;
  };

  // Keeps edges whose relation falls in a configured class, deduplicates
  // exact triples, and collects endpoint concepts.
  static KnowledgeGraph from_edges(std::vector<KgEdge> edges, const KgConfig& config);

  const std::vector<std::string>& concepts() const { return concepts_; }
  const std::vector<KgEdge>& edges() const { return edges_; }
  std::optional<int> concept_id(const std::string& label) const;
  const std::vector<Arc>& arcs(int concept_id) const;
  bool empty() const { return edges_.empty(); }

 private:
  std::vector<std::string> concepts_;  // sorted
  std::vector<KgEdge> edges_;          // sorted, deduplicated
  std::vector<std::vector<Arc>> adjacency_;
};

// TSV columns (relation, subject, object), extra columns ignored. Accepts
// ConceptNet URIs (/r/PartOf, /c/en/phone) and bare labels. Non-English
// concepts and unconfigured relations drop the whole row. Concepts are
// lowercased with underscores mapped to spaces. Reads gz or plain files.
// An empty result prints a warning to `warnings` when given.
KnowledgeGraph load_kg(const std::string& path, const KgConfig& config = {},
                       std::ostream* warnings = nullptr);

}  // namespace aspecthier
