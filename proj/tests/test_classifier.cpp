#include <algorithm>  // for count
#include <map>        // for map
#include <random>     // for mt19937
#include <set>        // for set

#include "catch_amalgamated.hpp"  // for TEST_CASE, REQUIRE, ...

#include "sgforge/catalog.hpp"
#include "sgforge/classifier.hpp"
#include "sgforge/enumeration.hpp"
#include "sgforge/error.hpp"
#include "sgforge/satisfaction.hpp"

using namespace sgforge;

namespace {
  struct Fixture {
    ClassificationReport             report;
    std::map<std::string, Semigroup> by_key;
  };

  Fixture const& fixture() {
    static Fixture const f = [] {
      Fixture f;
      f.report = classify_small_orders(5);
      for (size_t n = 2; n <= 5; ++n) {
        auto const r = enumerate_semigroups(n, CanonMode::iso_antiiso);
        for (size_t i = 0; i < r.keys.size(); ++i) {
          f.by_key.emplace(r.keys[i], r.classes[i]);
        }
      }
      return f;
    }();
    return f;
  }
}  // namespace

TEST_CASE("single classifications", "[classifier]") {
  auto r = classify_one(build_named("B2"));
  REQUIRE(r.verdict == Verdict::ji);
  REQUIRE(r.target == "B2");
  REQUIRE(r.condition_id == "A22");
  r = classify_one(build_named("W"));
  REQUIRE(r.verdict == Verdict::non_ji);
  REQUIRE(r.condition_id == "B13");
  REQUIRE(r.target.empty());
  r = classify_one(Semigroup({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}));
  REQUIRE(r.target == "Z2");
  REQUIRE(r.condition_id == "A1");
  r = classify_one(build_named("R2"));
  REQUIRE(r.target == "R2");
  REQUIRE(r.dual_applied);
  r = classify_one(build_named("Z_6"), true);
  REQUIRE(r.verdict == Verdict::non_ji);
  REQUIRE(!r.all_matches.empty());
  REQUIRE(verdict_name(Verdict::ji) == "ji");
  REQUIRE(verdict_name(Verdict::non_ji) == "non_ji");
  REQUIRE_THROWS_AS(classify_one(trivial_semigroup()), BadParams);
}

TEST_CASE("small order counts", "[classifier]") {
  auto const& rep = fixture().report;
  std::map<size_t, std::pair<size_t, size_t>> const expected = {
      {2, {4, 0}}, {3, {8, 10}}, {4, {33, 93}}, {5, {196, 964}}};
  for (auto const& [n, c] : expected) {
    REQUIRE(rep.counts.at(n).ji == c.first);
    REQUIRE(rep.counts.at(n).non_ji == c.second);
    REQUIRE(rep.counts.at(n).unclassified == 0);
    REQUIRE(rep.counts.at(n).total == c.first + c.second);
  }
  REQUIRE(rep.ji_targets.size() == 30);
  auto const names = ji_target_names();
  REQUIRE(rep.ji_targets == std::set<std::string>(names.begin(), names.end()));
  REQUIRE(rep.records.size() == 1308);
}

TEST_CASE("records replay", "[classifier]") {
  auto const& f = fixture();
  for (auto const& r : f.report.records) {
    auto const& S = f.by_key.at(r.canonical_key);
    INFO(r.canonical_key << " " << r.condition_id);
    REQUIRE(replay_condition(r, S));
    if (r.verdict == Verdict::ji) {
      REQUIRE(replay_basis(r, S));
    }
  }
}

TEST_CASE("duality coherence", "[classifier]") {
  auto const& f   = fixture();
  auto const& cat = condition_catalog();
  for (auto const& r : f.report.records) {
    auto const S = f.by_key.at(r.canonical_key);
    auto const d = classify_one(opposite(S));
    REQUIRE(d.verdict == r.verdict);
    if (r.verdict == Verdict::ji) {
      REQUIRE(d.target == cat.dual_name(r.target));
    }
  }
}

TEST_CASE("same target means no separator", "[classifier]") {
  auto const&                                   f = fixture();
  std::map<std::string, std::vector<Semigroup>> members;
  for (auto const& r : f.report.records) {
    if (r.verdict == Verdict::ji) {
      members[r.target].push_back(f.by_key.at(r.canonical_key));
    }
  }
  std::mt19937 rng(17);
  size_t       pairs = 0;
  for (auto const& [target, list] : members) {
    if (list.size() < 2) {
      continue;
    }
    for (int i = 0; i < 10; ++i) {
      auto const& A = list[rng() % list.size()];
      auto const& B = list[rng() % list.size()];
      INFO(target);
      REQUIRE(!separation_search(A, B));
      ++pairs;
    }
  }
  REQUIRE(pairs > 100);
}

TEST_CASE("report formats", "[classifier]") {
  auto const rep = classify_small_orders(3);
  auto const csv = report_csv(rep);
  REQUIRE(csv.rfind("order,canonical_key,verdict,target,condition_id,dual_applied\n", 0)
          == 0);
  REQUIRE(std::count(csv.begin(), csv.end(), '\n') == 23);
  auto const js = summary_json(rep);
  REQUIRE(js.find("\"orders\"") != std::string::npos);
  REQUIRE(js.find("\"ji_targets\"") != std::string::npos);
  REQUIRE(report_csv(classify_small_orders(3, 2)) == csv);
}
