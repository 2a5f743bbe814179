#include "aspecthier/tree_json.hpp"

#include <fstream>
#include <utility>

#include "aspecthier/errors.hpp"

namespace aspecthier {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw InputError("node " + (path.empty() ? std::string("<root>") : path) + ": " + what);
}

DtNodePtr parse_dt_node(const json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  if (j.contains("edu")) {
    const json& e = j.at("edu");
    if (!e.is_object()) schema_error(path, "edu must be an object");
    if (!e.contains("id") || !e.at("id").is_number_integer()) {
      schema_error(path, "edu.id must be an integer");
    }
    if (!e.contains("text") || !e.at("text").is_string()) {
      schema_error(path, "edu.text must be a string");
    }
    Edu edu;
    edu.id = e.at("id").get<int>();
    edu.text = e.at("text").get<std::string>();
    return make_leaf(std::move(edu));
  }
  if (!j.contains("relation") || !j.at("relation").is_string()) {
    schema_error(path, "expected edu or relation");
  }
  if (!j.contains("children") || !j.at("children").is_array()) {
    schema_error(path, "children must be an array");
  }
  const json& kids = j.at("children");
  if (kids.size() < 2) schema_error(path, "internal node needs at least 2 children");
  std::vector<DtChild> children;
  children.reserve(kids.size());
  for (size_t i = 0; i < kids.size(); ++i) {
    const std::string child_path = path + "/children/" + std::to_string(i) + "/node";
    const json& c = kids[i];
    if (!c.is_object()) schema_error(child_path, "expected an object");
    if (!c.contains("nuclearity") || !c.at("nuclearity").is_string()) {
      schema_error(child_path, "nuclearity must be \"N\" or \"S\"");
    }
    const std::string nuc = c.at("nuclearity").get<std::string>();
    Nuclearity n;
    if (nuc == "N") {
      n = Nuclearity::Nucleus;
    } else if (nuc == "S") {
      n = Nuclearity::Satellite;
    } else {
      schema_error(child_path, "nuclearity must be \"N\" or \"S\"");
    }
    if (!c.contains("node")) schema_error(child_path, "missing node");
    children.push_back(DtChild{n, parse_dt_node(c.at("node"), child_path)});
  }
  return make_internal(j.at("relation").get<std::string>(), std::move(children));
}

ordered_json dt_node_to_json(const DtNode& node) {
  ordered_json j;
  if (node.is_leaf()) {
    j["edu"] = {{"id", node.edu->id}, {"text", node.edu->text}};
    return j;
  }
  j["relation"] = node.relation;
  ordered_json kids = ordered_json::array();
  for (const auto& c : node.children) {
    ordered_json k;
    k["nuclearity"] = c.nuclearity == Nuclearity::Nucleus ? "N" : "S";
    k["node"] = dt_node_to_json(*c.node);
    kids.push_back(std::move(k));
  }
  j["children"] = std::move(kids);
  return j;
}

AdtNodePtr parse_adt_node(const json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  if (j.contains("aspects")) {
    if (!j.at("aspects").is_array()) schema_error(path, "aspects must be an array");
    if (!j.contains("edu_id") || !j.at("edu_id").is_number_integer()) {
      schema_error(path, "edu_id must be an integer");
    }
    std::vector<Aspect> aspects;
    for (const json& a : j.at("aspects")) {
      if (!a.is_string()) schema_error(path, "aspects must be strings");
      aspects.push_back(Aspect{a.get<std::string>()});
    }
    return make_adt_leaf(std::move(aspects), j.at("edu_id").get<int>());
  }
  if (!j.contains("relation") || !j.at("relation").is_string()) {
    schema_error(path, "expected aspects or relation");
  }
  if (!j.contains("children") || !j.at("children").is_array()) {
    schema_error(path, "children must be an array");
  }
  const json& kids = j.at("children");
  if (kids.size() < 2) schema_error(path, "internal node needs at least 2 children");
  std::vector<AdtChild> children;
  children.reserve(kids.size());
  for (size_t i = 0; i < kids.size(); ++i) {
    const std::string child_path = path + "/children/" + std::to_string(i) + "/node";
    const json& c = kids[i];
    if (!c.is_object()) schema_error(child_path, "expected an object");
    if (!c.contains("nuclearity") || !c.at("nuclearity").is_string()) {
      schema_error(child_path, "nuclearity must be \"N\" or \"S\"");
    }
    const std::string nuc = c.at("nuclearity").get<std::string>();
    Nuclearity n;
    if (nuc == "N") {
      n = Nuclearity::Nucleus;
    } else if (nuc == "S") {
      n = Nuclearity::Satellite;
    } else {
      schema_error(child_path, "nuclearity must be \"N\" or \"S\"");
    }
    if (!c.contains("node")) schema_error(child_path, "missing node");
    children.push_back(AdtChild{n, parse_adt_node(c.at("node"), child_path)});
  }
  return make_adt_internal(j.at("relation").get<std::string>(), std::move(children));
}

ordered_json adt_node_to_json(const AdtNode& node) {
  ordered_json j;
  if (node.is_leaf()) {
    ordered_json labels = ordered_json::array();
    for (const auto& a : node.aspects) labels.push_back(a.label);
    j["aspects"] = std::move(labels);
    j["edu_id"] = node.edu_id;
    return j;
  }
  j["relation"] = node.relation;
  ordered_json kids = ordered_json::array();
  for (const auto& c : node.children) {
    ordered_json k;
    k["nuclearity"] = c.nuclearity == Nuclearity::Nucleus ? "N" : "S";
    k["node"] = adt_node_to_json(*c.node);
    kids.push_back(std::move(k));
  }
  j["children"] = std::move(kids);
  return j;
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw InputError(path + ": malformed JSON");
  return j;
}

void write_file(const std::string& path, const ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
}

}  // namespace

DiscourseTree discourse_tree_from_json(const json& j) {
  DiscourseTree t;
  t.root = parse_dt_node(j, "");
  return t;
}

ordered_json discourse_tree_to_json(const DiscourseTree& tree) {
  return dt_node_to_json(*tree.root);
}

AspectDiscourseTree adt_from_json(const json& j) {
  AspectDiscourseTree t;
  t.root = parse_adt_node(j, "");
  return t;
}

ordered_json adt_to_json(const AspectDiscourseTree& adt) {
  return adt_node_to_json(*adt.root);
}

DiscourseTree load_discourse_tree(const std::string& path) {
  DiscourseTree t = discourse_tree_from_json(parse_file(path));
  validate(t);
  return t;
}

void save_discourse_tree(const DiscourseTree& tree, const std::string& path) {
  write_file(path, discourse_tree_to_json(tree));
}

AspectDiscourseTree load_adt(const std::string& path) {
  return adt_from_json(parse_file(path));
}

void save_adt(const AspectDiscourseTree& adt, const std::string& path) {
  write_file(path, adt_to_json(adt));
}

}  // namespace aspecthier
