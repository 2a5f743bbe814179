#include <doctest.h>

#include <random>
#include <stdexcept>

#include "aspecthier/coverage.hpp"
#include "aspecthier/knowledge_graph.hpp"
#include "aspecthier/tuples.hpp"
#include "test_oracles.hpp"
#include "test_util.hpp"

using namespace aspecthier;

TEST_CASE("distances on the three edge example") {
  auto kg = load_kg(testutil::fixture("kg_tiny.tsv").string());
  // receiver-telephone is one hop, antenna two, and the synonym makes
  // phone interchangeable with telephone
  CHECK(hierarchical_distance(kg, "receiver", "telephone", 3) == 1);
  CHECK(hierarchical_distance(kg, "antenna", "telephone", 3) == 2);
  CHECK(hierarchical_distance(kg, "phone", "receiver", 3) == 1);
  CHECK(hierarchical_distance(kg, "phone", "antenna", 3) == 2);
  CHECK(hierarchical_distance(kg, "telephone", "phone", 3) == 0);
}

TEST_CASE("distance edge cases") {
  auto kg = load_kg(testutil::fixture("kg_tiny.tsv").string());
  // identical labels are distance zero when present
  CHECK(hierarchical_distance(kg, "phone", "phone", 3) == 0);
  // absent labels yield no distance at all
  CHECK_FALSE(hierarchical_distance(kg, "phone", "wheel", 3).has_value());
  CHECK_FALSE(hierarchical_distance(kg, "wheel", "phone", 3).has_value());
  CHECK_FALSE(hierarchical_distance(kg, "wheel", "wheel", 3).has_value());
  // hop bound is inclusive
  CHECK(hierarchical_distance(kg, "antenna", "telephone", 2) == 2);
  CHECK_FALSE(hierarchical_distance(kg, "antenna", "telephone", 1).has_value());
  CHECK_THROWS_WITH_AS(hierarchical_distance(kg, "phone", "case", 0),
                       "max_hops must be >= 1", std::invalid_argument);
}

TEST_CASE("fixture graph distances agree with hand counts") {
  auto kg = load_kg(testutil::fixture("kg_fixture.tsv").string());
  CHECK(hierarchical_distance(kg, "phone", "case", 3) == 1);
  CHECK(hierarchical_distance(kg, "phone", "battery", 3) == 1);
  CHECK(hierarchical_distance(kg, "phone", "screen", 3) == 1);
  // battery - charger - charge, both RelatedTo edges counting 1
  CHECK(hierarchical_distance(kg, "phone", "charge", 3) == 3);
  CHECK(hierarchical_distance(kg, "phone", "charger", 3) == 2);
  // telephone is a free synonym, then receiver, then antenna
  CHECK(hierarchical_distance(kg, "phone", "antenna", 3) == 2);
  CHECK(hierarchical_distance(kg, "camera", "lens", 3) == 1);
  CHECK(hierarchical_distance(kg, "screen", "glass", 3) == 1);
  // display - screen is zero cost, then screen - phone
  CHECK(hierarchical_distance(kg, "phone", "display", 3) == 1);
  CHECK(hierarchical_distance(kg, "headset", "bluetooth", 3) == 1);
  // charge needs five unit hops to reach antenna, over any budget we use
  CHECK_FALSE(hierarchical_distance(kg, "charge", "antenna", 3).has_value());
  CHECK_FALSE(hierarchical_distance(kg, "charge", "antenna", 4).has_value());
  CHECK(hierarchical_distance(kg, "charge", "antenna", 5) == 5);
  // the car cluster is disconnected from the phone cluster
  CHECK_FALSE(hierarchical_distance(kg, "phone", "wheel", 3).has_value());
  CHECK_FALSE(hierarchical_distance(kg, "phone", "wheel", 10).has_value());
}

TEST_CASE("distance is symmetric") {
  auto kg = load_kg(testutil::fixture("kg_fixture.tsv").string());
  const auto& concepts = kg.concepts();
  for (const auto& a : concepts) {
    for (const auto& b : concepts) {
      CHECK(hierarchical_distance(kg, a, b, 3) == hierarchical_distance(kg, b, a, 3));
    }
  }
}

TEST_CASE("raising max_hops never loses a pair") {
  auto kg = load_kg(testutil::fixture("kg_fixture.tsv").string());
  const auto& concepts = kg.concepts();
  for (const auto& a : concepts) {
    for (const auto& b : concepts) {
      auto d3 = hierarchical_distance(kg, a, b, 3);
      auto d5 = hierarchical_distance(kg, a, b, 5);
      if (d3) {
        REQUIRE(d5.has_value());
        CHECK(*d5 == *d3);
      }
    }
  }
}

TEST_CASE("distances match the path enumeration oracle on random graphs") {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 300; ++iter) {
    KgConfig config;
    if (oracles::draw(rng, 3) == 0) config.relatedto = RelatedToClass::Substitution;
    auto random = oracles::gen_kg(rng, config);
    auto oracle = oracles::oracle_graph(random.raw_edges, config);
    const int max_hops = 1 + static_cast<int>(oracles::draw(rng, 4));
    for (const auto& a : random.labels) {
      auto expected = oracles::oracle_distances(oracle, a, max_hops);
      for (const auto& b : random.labels) {
        auto got = hierarchical_distance(random.kg, a, b, max_hops);
        auto it = expected.find(b);
        if (!random.kg.concept_id(a) || !random.kg.concept_id(b)) {
          CHECK_FALSE(got.has_value());
        } else if (it == expected.end()) {
          CHECK_FALSE(got.has_value());
        } else {
          REQUIRE(got.has_value());
          CHECK(*got == it->second);
        }
      }
    }
  }
}

TEST_CASE("coverage over the frozen ranking") {
  auto kg = load_kg(testutil::fixture("kg_fixture.tsv").string());
  auto pairs = load_ranked_pairs(testutil::fixture("ranked12.tsv").string());
  REQUIRE(pairs.size() == 12);

  auto top10 = coverage(kg, pairs, 10);
  CHECK(top10.n == 10);
  CHECK(top10.total == 10);
  CHECK(top10.covered == 9);
  CHECK(top10.value == doctest::Approx(0.9));
  REQUIRE(top10.per_pair.size() == 10);
  CHECK(top10.per_pair[0].nucleus == "phone");
  CHECK(top10.per_pair[0].satellite == "case");
  CHECK(top10.per_pair[0].covered);
  CHECK(top10.per_pair[0].distance == 1);
  // the one miss in the top ten: warranty is not in the graph
  CHECK_FALSE(top10.per_pair[9].covered);
  CHECK(top10.per_pair[9].nucleus == "phone");
  CHECK(top10.per_pair[9].satellite == "warranty");
  CHECK_FALSE(top10.per_pair[9].distance.has_value());

  auto top12 = coverage(kg, pairs, 12);
  CHECK(top12.covered == 10);
  CHECK(top12.total == 12);
  CHECK(top12.value == doctest::Approx(10.0 / 12.0));
  // charge-antenna sits five hops apart, beyond the default bound
  CHECK_FALSE(top12.per_pair[10].covered);
  CHECK(top12.per_pair[11].covered);

  // n larger than the ranking clamps
  auto all = coverage(kg, pairs, 100);
  CHECK(all.n == 100);
  CHECK(all.total == 12);

  CHECK_THROWS_AS(coverage(kg, {}, 10), std::domain_error);
}

TEST_CASE("coverage respects the hop budget") {
  auto kg = load_kg(testutil::fixture("kg_fixture.tsv").string());
  RankedPairs pairs = {{"phone", "charge", 5}, {"phone", "case", 1}};
  auto tight = coverage(kg, pairs, 2, 2);
  CHECK(tight.covered == 1);
  auto loose = coverage(kg, pairs, 2, 3);
  CHECK(loose.covered == 2);
}

TEST_CASE("coverage serializes to json") {
  auto kg = load_kg(testutil::fixture("kg_tiny.tsv").string());
  RankedPairs pairs = {{"phone", "antenna", 4}, {"phone", "wheel", 1}};
  auto report = coverage(kg, pairs, 2);
  auto j = coverage_to_json(report);
  CHECK(j["n"] == 2);
  CHECK(j["covered"] == 1);
  CHECK(j["total"] == 2);
  CHECK(j["coverage"].get<double>() == doctest::Approx(0.5));
  REQUIRE(j["pairs"].size() == 2);
  CHECK(j["pairs"][0]["nucleus"] == "phone");
  CHECK(j["pairs"][0]["satellite"] == "antenna");
  CHECK(j["pairs"][0]["covered"] == true);
  CHECK(j["pairs"][0]["distance"] == 2);
  CHECK(j["pairs"][1]["covered"] == false);
  CHECK(j["pairs"][1]["distance"].is_null());
}

TEST_CASE("coverage table rows print two decimals") {
  auto kg = load_kg(testutil::fixture("kg_fixture.tsv").string());
  auto pairs = load_ranked_pairs(testutil::fixture("ranked12.tsv").string());
  std::vector<CoverageReport> reports = {coverage(kg, pairs, 5), coverage(kg, pairs, 10),
                                         coverage(kg, pairs, 12)};
  testutil::TempDir tmp;
  write_coverage_tsv(reports, tmp.str("coverage.tsv"));
  CHECK(testutil::read_file(tmp.str("coverage.tsv")) ==
        "5\t1.00\n10\t0.90\n12\t0.83\n");
}
