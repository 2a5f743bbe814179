#pragma once

#include <string>

#include <json.hpp>

#include "aspecthier/aspects.hpp"
#include "aspecthier/discourse.hpp"

namespace aspecthier {

// Tree-JSON schema. A node is either
//   {"edu": {"id": int, "text": string}}
// or
//   {"relation": string, "children": [{"nuclearity": "N"|"S", "node": ...}...]}
// with at least two children per internal node. ADT nodes reuse the shape
// with leaf payload {"aspects": [string], "edu_id": int}.
//
// Schema errors are InputError naming the offending node path ("" is the
// root, descent appends "/children/<i>/node").

DiscourseTree discourse_tree_from_json(const nlohmann::json& j);
nlohmann::ordered_json discourse_tree_to_json(const DiscourseTree& tree);

AspectDiscourseTree adt_from_json(const nlohmann::json& j);
nlohmann::ordered_json adt_to_json(const AspectDiscourseTree& adt);

// File wrappers; load validates the DiscourseTree invariants after parsing.
DiscourseTree load_discourse_tree(const std::string& path);
void save_discourse_tree(const DiscourseTree& tree, const std::string& path);
AspectDiscourseTree load_adt(const std::string& path);
void save_adt(const AspectDiscourseTree& adt, const std::string& path);

}  // namespace aspecthier
