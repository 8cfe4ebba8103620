#include <doctest.h>

#include <algorithm>
#include <map>

#include "cuspatlas/obstruct.hpp"

using namespace cuspatlas;

namespace {

CuspType c(std::int64_t p, std::int64_t q) { return CuspType::make(p, q); }

CuspCombo combo(std::vector<CuspType> cs, int d) { return CuspCombo::make(std::move(cs), d); }

std::vector<CuspType> times(int n, CuspType x) { return std::vector<CuspType>(std::size_t(n), x); }

}  // namespace

TEST_CASE("Riemann-Hurwitz") {
  auto v = riemann_hurwitz(combo({c(3, 5), c(2, 3), c(2, 3)}, 5));
  CHECK(v.failed());
  CHECK(v.witness.count("base"));
  CHECK(riemann_hurwitz(combo(times(6, c(2, 3)), 5)).failed());
  CHECK(!riemann_hurwitz(combo(times(3, c(2, 5)), 5)).failed());
  CHECK(!riemann_hurwitz(combo({c(4, 5)}, 5)).failed());
}

TEST_CASE("sextic rule") {
  auto simple = [](const CuspType& x) { return x.p == 2 || x == CuspType::make(3, 4) || x == CuspType::make(3, 5); };
  int all_simple = 0, three_two = 0;
  for (const auto& cc : enumerate_combos(6)) {
    if (!std::all_of(cc.cusps.begin(), cc.cusps.end(), simple)) continue;
    ++all_simple;
    three_two += cc.cusps.front().p == 3 && std::count_if(cc.cusps.begin(), cc.cusps.end(), [](auto x) { return x.p == 3; }) == 1;
    const auto v = sextic_simple(cc);
    CHECK(v.failed());
    CHECK(v.witness.at("mu") == 20);
    CHECK(run_pipeline(cc).final_status.kind == FinalKind::Obstructed);
  }
  CHECK(three_two > 0);
  CHECK(all_simple > three_two);
  CHECK(!sextic_simple(combo({c(4, 5), c(2, 9)}, 6)).failed());
  CHECK(!sextic_simple(combo({c(4, 5)}, 5)).failed());
  CHECK(sextic_simple(combo({c(4, 5)}, 5)).outcome == Outcome::Pass);
}

TEST_CASE("pipeline examples") {
  const auto r37 = run_pipeline(combo({c(3, 7)}, 5));
  CHECK(r37.final_status.kind == FinalKind::Obstructed);
  CHECK(r37.verdict(Rule::Semigroup).failed());
  CHECK(r37.verdict(Rule::NoAdjunctiveEmbedding).failed());
  CHECK(r37.verdict(Rule::Spectrum).outcome == Outcome::Disabled);
  CHECK(run_pipeline(combo({c(3, 4), c(2, 7)}, 5)).final_status == FinalStatus{FinalKind::UniqueInPlane, 0});
  CHECK(run_pipeline(combo({c(2, 11), c(2, 3)}, 5)).final_status == FinalStatus{FinalKind::UniqueInBlowup, 4});
  CHECK_THROWS_AS(run_pipeline(combo({c(2, 3)}, 5)), DomainError);
}

TEST_CASE("degree 5 table") {
  const std::map<std::string, std::string> expected{
      {"(4,5)", "UniqueInPlane"},
      {"(3,7)", "Obstructed"},
      {"(3,5)+(2,5)", "UniqueInPlane"},
      {"(3,5)+(2,3)+(2,3)", "Obstructed"},
      {"(3,4)+(3,4)", "Obstructed"},
      {"(3,4)+(2,7)", "UniqueInPlane"},
      {"(3,4)+(2,5)+(2,3)", "UniqueInPlane"},
      {"(3,4)+(2,3)+(2,3)+(2,3)", "Obstructed"},
      {"(2,13)", "UniqueInPlane"},
      {"(2,11)+(2,3)", "UniqueInBlowup(4)"},
      {"(2,9)+(2,5)", "UniqueInPlane"},
      {"(2,9)+(2,3)+(2,3)", "Obstructed"},
      {"(2,7)+(2,7)", "UniqueInBlowup(4)"},
      {"(2,7)+(2,5)+(2,3)", "Obstructed"},
      {"(2,7)+(2,3)+(2,3)+(2,3)", "UniqueInPlane"},
      {"(2,5)+(2,5)+(2,5)", "UniqueInPlane"},
      {"(2,5)+(2,5)+(2,3)+(2,3)", "Obstructed"},
      {"(2,5)+(2,3)+(2,3)+(2,3)+(2,3)", "Obstructed"},
      {"(2,3)+(2,3)+(2,3)+(2,3)+(2,3)+(2,3)", "Obstructed"},
  };
  const auto recs = classify_degree(5);
  REQUIRE(recs.size() == expected.size());
  for (const auto& r : recs) {
    std::string key;
    for (const auto& x : r.combo.cusps) key += (key.empty() ? "" : "+") + x.str();
    CAPTURE(key);
    REQUIRE(expected.count(key));
    CHECK(r.final_status.str() == expected.at(key));
  }
}

TEST_CASE("degree 4 and 3") {
  const auto recs = classify_degree(4, PipelineOptions{2});
  REQUIRE(recs.size() == 4);
  for (const auto& r : recs) CHECK(r.final_status.kind == FinalKind::UniqueInPlane);
  CHECK(classify_degree(3).size() == 1);
}

TEST_CASE("classify is independent of the thread count") {
  auto key = [](const std::vector<ClassificationRecord>& v) {
    std::vector<std::string> out;
    for (const auto& r : v) out.push_back(r.combo.str() + " " + r.final_status.str() + " " + std::to_string(r.embeddings.size()));
    return out;
  };
  CHECK(key(classify_degree(5, PipelineOptions{1})) == key(classify_degree(5, PipelineOptions{3})));
}
