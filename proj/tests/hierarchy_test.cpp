#include <doctest.h>

#include <random>
#include <stdexcept>

#include "aspecthier/hierarchy.hpp"
#include "test_oracles.hpp"
#include "test_util.hpp"

using namespace aspecthier;

namespace {

// the worked example: counts are rank positions reversed
RankedPairs nine_pair_ranking() {
  return {
      {"phone", "case", 9},     {"phone", "battery", 8}, {"phone", "headset", 7},
      {"phone", "bluetooth", 6}, {"case", "phone", 5},    {"price", "battery", 4},
      {"battery", "charge", 3}, {"headset", "bluetooth", 2}, {"phone", "price", 1},
  };
}

}  // namespace

TEST_CASE("single pair creates a two node tree") {
  auto forest = build_hierarchy({{"phone", "battery", 3}});
  REQUIRE(forest.nodes.size() == 2);
  CHECK(forest.roots == std::vector<int>{0});
  CHECK(forest.nodes[0].label == "phone");
  CHECK(forest.nodes[0].children == std::vector<int>{1});
  CHECK_FALSE(forest.nodes[0].parent.has_value());
  CHECK(forest.nodes[1].label == "battery");
  CHECK(forest.nodes[1].parent == 0);
  CHECK(forest.nodes[1].weight == 3);
  CHECK(forest.canonical.at("phone") == 0);
  CHECK(forest.canonical.at("battery") == 1);
  CHECK(forest.root_of(1) == 0);
  CHECK(forest.is_root(0));
  CHECK_FALSE(forest.is_root(1));
}

TEST_CASE("the worked nine pair example folds into one tree") {
  std::vector<PairEvent> events;
  auto forest = build_hierarchy(nine_pair_ranking(), &events);

  REQUIRE(forest.nodes.size() == 9);
  CHECK(forest.roots == std::vector<int>{0});

  CHECK(forest.nodes[0].label == "phone");
  CHECK(forest.nodes[0].children == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(forest.nodes[1].label == "case");
  CHECK(forest.nodes[2].label == "battery");
  CHECK(forest.nodes[3].label == "headset");
  CHECK(forest.nodes[4].label == "bluetooth");
  CHECK(forest.nodes[5].label == "price");

  // price arrived as its own root, grew a battery child, then merged under
  // phone on the last pair
  CHECK(forest.nodes[5].parent == 0);
  CHECK(forest.nodes[5].weight == 1);
  CHECK(forest.nodes[6].label == "battery");
  CHECK(forest.nodes[6].parent == 5);
  CHECK(forest.nodes[7].label == "charge");
  CHECK(forest.nodes[7].parent == 2);
  CHECK(forest.nodes[8].label == "bluetooth");
  CHECK(forest.nodes[8].parent == 3);

  // canonical ids stay on the first node carrying each label
  CHECK(forest.canonical.at("battery") == 2);
  CHECK(forest.canonical.at("bluetooth") == 4);

  REQUIRE(events.size() == 9);
  CHECK(events[0].outcome == PairOutcome::Attached);
  CHECK(events[4].outcome == PairOutcome::Skipped);
  REQUIRE(events[4].reason.has_value());
  CHECK(*events[4].reason == SkipReason::Cycle);
  CHECK(events[5].outcome == PairOutcome::Attached);
  CHECK(events[8].outcome == PairOutcome::Merged);

  auto edges = hierarchy_pairs(forest);
  CHECK(edges.size() == 8);
  CHECK(edges.count({"phone", "case"}) == 1);
  CHECK(edges.count({"price", "battery"}) == 1);
  CHECK(edges.count({"phone", "price"}) == 1);
  CHECK(edges.count({"case", "phone"}) == 0);

  std::string violation = oracles::check_forest(forest);
  CHECK_MESSAGE(violation.empty(), violation);
  violation = oracles::check_events(forest, events);
  CHECK_MESSAGE(violation.empty(), violation);
}

TEST_CASE("a mutual pair skips its reverse as a cycle") {
  std::vector<PairEvent> events;
  auto forest = build_hierarchy({{"a", "b", 2}, {"b", "a", 1}}, &events);
  REQUIRE(forest.nodes.size() == 2);
  CHECK(forest.roots == std::vector<int>{0});
  CHECK(forest.nodes[0].children == std::vector<int>{1});
  REQUIRE(events.size() == 2);
  CHECK(events[1].outcome == PairOutcome::Skipped);
  CHECK(to_string(*events[1].reason) == "cycle");
}

TEST_CASE("an indirect ancestor also trips the cycle guard") {
  std::vector<PairEvent> events;
  build_hierarchy({{"a", "b", 3}, {"b", "c", 2}, {"c", "a", 1}}, &events);
  REQUIRE(events.size() == 3);
  CHECK(events[2].outcome == PairOutcome::Skipped);
  REQUIRE(events[2].reason.has_value());
  CHECK(*events[2].reason == SkipReason::Cycle);
}

TEST_CASE("repeating a pair reflects instead of duplicating the child") {
  std::vector<PairEvent> events;
  auto forest = build_hierarchy({{"a", "b", 3}, {"a", "b", 1}}, &events);
  CHECK(forest.nodes.size() == 2);
  CHECK(events[1].outcome == PairOutcome::Reflected);
  CHECK(to_string(events[1].outcome) == "reflected");
}

TEST_CASE("same label may appear in several trees") {
  // b gets a canonical node under a; c starts a second tree and grows its
  // own b child because canonical b is not a root
  auto forest = build_hierarchy({{"a", "b", 3}, {"c", "b", 2}});
  REQUIRE(forest.nodes.size() == 4);
  CHECK(forest.roots == std::vector<int>{0, 2});
  CHECK(forest.nodes[2].label == "c");
  CHECK(forest.nodes[3].label == "b");
  CHECK(forest.nodes[3].parent == 2);
  CHECK(forest.canonical.at("b") == 1);

  auto edges = hierarchy_pairs(forest);
  CHECK(edges == std::set<std::pair<std::string, std::string>>{{"a", "b"}, {"c", "b"}});
}

TEST_CASE("merge pulls a whole subtree under the nucleus") {
  // d{e} exists first, then a{b}, then (b, d) must merge tree d under a's b?
  // no: canonical d is a root of another tree, so it re-parents under b's
  // canonical node only when b is the nucleus
  auto forest = build_hierarchy({{"d", "e", 5}, {"a", "b", 4}, {"b", "d", 3}});
  REQUIRE(forest.nodes.size() == 4);
  CHECK(forest.roots == std::vector<int>{2});
  CHECK(forest.nodes[0].label == "d");
  CHECK(forest.nodes[0].parent == 3);
  CHECK(forest.nodes[0].weight == 3);
  CHECK(forest.nodes[0].children == std::vector<int>{1});
  CHECK(forest.root_of(1) == 2);
}

TEST_CASE("builder state grows monotonically and stays valid") {
  std::mt19937_64 rng(555);
  for (int iter = 0; iter < 200; ++iter) {
    auto pairs = oracles::gen_ranking(rng);
    HierarchyBuilder builder;
    size_t last_nodes = 0;
    std::vector<PairEvent> events;
    for (const auto& p : pairs) {
      events.push_back(builder.push(p));
      CHECK(builder.forest().nodes.size() >= last_nodes);
      last_nodes = builder.forest().nodes.size();
      std::string violation = oracles::check_forest(builder.forest());
      REQUIRE_MESSAGE(violation.empty(), violation);
    }
    std::string violation = oracles::check_events(builder.forest(), events);
    REQUIRE_MESSAGE(violation.empty(), violation);
  }
}

TEST_CASE("push rejects a pair with equal labels") {
  HierarchyBuilder builder;
  CHECK_THROWS_WITH_AS(builder.push({"phone", "phone", 2}),
                       "pair has equal labels: phone", std::invalid_argument);
}

TEST_CASE("dot export lists every node and edge") {
  auto forest = build_hierarchy(nine_pair_ranking());
  auto dot = export_dot(forest);
  CHECK(dot.find("digraph aspects {") == 0);
  CHECK(dot.find("rankdir=TB;") != std::string::npos);
  CHECK(dot.find("n0 [label=\"phone\"];") != std::string::npos);
  CHECK(dot.find("n6 [label=\"battery\"];") != std::string::npos);
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
  CHECK(dot.find("n5 -> n6;") != std::string::npos);
  CHECK(dot.back() == '\n');
  // without annotation there are no edge labels
  CHECK(dot.find("->") != std::string::npos);
  CHECK(dot.find("[label=\"9\"]") == std::string::npos);

  auto annotated = export_dot(forest, true);
  CHECK(annotated.find("n0 -> n1 [label=\"9\"];") != std::string::npos);
  CHECK(annotated.find("n0 -> n5 [label=\"1\"];") != std::string::npos);
}

TEST_CASE("dot export escapes quotes and backslashes") {
  auto forest = build_hierarchy({{"a\"b", "c\\d", 1}});
  auto dot = export_dot(forest);
  CHECK(dot.find("label=\"a\\\"b\"") != std::string::npos);
  CHECK(dot.find("label=\"c\\\\d\"") != std::string::npos);
}

TEST_CASE("forest json carries roots and nodes keyed by id") {
  auto forest = build_hierarchy({{"phone", "case", 2}, {"camera", "lens", 1}});
  auto j = forest_to_json(forest);
  CHECK(j["roots"].get<std::vector<int>>() == std::vector<int>{0, 2});
  CHECK(j["nodes"]["0"]["label"] == "phone");
  CHECK(j["nodes"]["0"]["children"].get<std::vector<int>>() == std::vector<int>{1});
  CHECK(j["nodes"]["1"]["label"] == "case");
  CHECK(j["nodes"]["1"]["children"].empty());
  CHECK(j["nodes"]["3"]["label"] == "lens");

  testutil::TempDir tmp;
  save_forest(forest, tmp.str("forest.json"));
  auto raw = testutil::read_file(tmp.str("forest.json"));
  CHECK(raw.front() == '{');
  CHECK(raw.back() == '\n');
  CHECK(nlohmann::ordered_json::parse(raw) == j);
}

TEST_CASE("skip log records skipped pairs as TSV") {
  std::vector<PairEvent> events;
  build_hierarchy({{"a", "b", 2}, {"b", "a", 1}}, &events);
  testutil::TempDir tmp;
  write_skip_log(events, tmp.str("skips.tsv"));
  CHECK(testutil::read_file(tmp.str("skips.tsv")) == "b\ta\tcycle\n");

  // no skips still produces the file
  std::vector<PairEvent> clean;
  build_hierarchy({{"a", "b", 1}}, &clean);
  write_skip_log(clean, tmp.str("empty.tsv"));
  CHECK(testutil::read_file(tmp.str("empty.tsv")).empty());
}

TEST_CASE("outcome names are stable") {
  CHECK(to_string(PairOutcome::Attached) == "attached");
  CHECK(to_string(PairOutcome::Merged) == "merged");
  CHECK(to_string(PairOutcome::Reflected) == "reflected");
  CHECK(to_string(PairOutcome::Skipped) == "skipped");
  CHECK(to_string(SkipReason::Cycle) == "cycle");
  CHECK(to_string(SkipReason::SelfMerge) == "self-merge");
}
