#include <catch2/catch_amalgamated.hpp>

#include "ks7/verify.hpp"

using namespace ks7;

namespace {

// s2 shifted by k/(12l): breaks the PL/homeo criterion for family M.
KSInvariants corrupted(const BundleParams& p) {
  KSInvariants inv = s_closed_form(p);
  inv.s2 = qz_add(inv.s2, qz(Rational(p.k, 12 * p.l)));
  return inv;
}

}  // namespace

TEST_CASE("crosscheck on a small window passes") {
  for (Family f : {Family::Xi, Family::XiPrime}) {
    for (Relation rel : kInvariantRelations) {
      const auto r = crosscheck_oracles({-2, 1, 3}, {-15, 15}, f, rel);
      CHECK(r.passed());
      CHECK(r.total_tested() == 3 * 31 * 31);
    }
  }
  const auto single = crosscheck_oracles({1}, {0, 6}, Family::Xi, Relation::Homeo);
  CHECK(single.passed());
}

TEST_CASE("crosscheck preconditions and vacuous input") {
  CHECK_THROWS_AS(crosscheck_oracles({0}, {0, 1}, Family::Xi, Relation::PL), ks7::domain_error);
  CHECK_THROWS_AS(crosscheck_oracles({1}, {0, 1}, Family::Xi, Relation::Homotopy), unsupported_error);
  const auto r = crosscheck_oracles({1, 2}, IntRange{}, Family::Xi, Relation::Diffeo);
  CHECK(r.passed());
  CHECK(r.total_tested() == 0);
  CHECK(r.checks().size() == 1);
}

TEST_CASE("a corrupted invariant surfaces as counterexamples") {
  const auto r = crosscheck_oracles({1, -2}, {-10, 10}, Family::Xi, Relation::PL, corrupted);
  CHECK_FALSE(r.passed());
  const auto checks = r.checks();
  REQUIRE(checks.size() == 1);
  const auto& fails = checks[0].failures;
  REQUIRE(!fails.empty());
  CHECK(std::is_sorted(fails.begin(), fails.end()));
  const auto& ce = fails.front();
  CHECK(ce.relation == Relation::PL);
  CHECK(ce.family == Family::Xi);
  REQUIRE(ce.verdicts.size() == 2);
  CHECK(ce.verdicts[0].first == "congruence");
  CHECK(ce.verdicts[1].first == "invariants");
  CHECK(ce.verdicts[0].second != ce.verdicts[1].second);
}

TEST_CASE("reports are deterministic and merge order does not matter") {
  const auto a = crosscheck_oracles({1}, {-10, 10}, Family::Xi, Relation::PL, corrupted);
  const auto b = crosscheck_oracles({-2}, {-10, 10}, Family::Xi, Relation::PL, corrupted);
  const auto c = corollary_identity({1, 3}, {0, 5});
  VerifyReport x, y;
  x.merge(a);
  x.merge(b);
  x.merge(c);
  y.merge(c);
  y.merge(b);
  y.merge(a);
  REQUIRE(x.checks().size() == y.checks().size());
  for (std::size_t i = 0; i < x.checks().size(); ++i) {
    CHECK(x.checks()[i].name == y.checks()[i].name);
    CHECK(x.checks()[i].tested == y.checks()[i].tested);
    CHECK(x.checks()[i].failures == y.checks()[i].failures);
  }
  const auto again = crosscheck_oracles({1, -2}, {-10, 10}, Family::Xi, Relation::PL, corrupted);
  CHECK(again.checks()[0].failures == x.filtered("oracle_equivalence").checks()[0].failures);
}

TEST_CASE("corollary identity") {
  CHECK(corollary_identity({1}, {0, 0}).passed());
  CHECK(corollary_identity({3}, {5, 5}).passed());
  CHECK(corollary_identity({-1}, {-10, 10}).passed());
  CHECK(corollary_identity({-9, -7, -5, -3, -1, 1, 3, 5, 7, 9}, {-20, 20}).passed());
  CHECK_THROWS_AS(corollary_identity({2}, {0, 1}), ks7::domain_error);
  CHECK_THROWS_AS(corollary_identity({0}, {0, 1}), ks7::domain_error);
  // Even l would give l * (-1/(2l)) = -1/2 as well, but the statement is
  // only about odd l; s2 corruption breaks it.
  CHECK_FALSE(corollary_identity({1}, {0, 3}, corrupted).passed());
}

TEST_CASE("class counts") {
  for (Family f : {Family::Xi, Family::XiPrime}) CHECK(class_count_check({-3, -1, 1, 2, 4}, f).passed());
  CHECK(class_count_check({}, Family::Xi).passed());
  CHECK_THROWS_AS(class_count_check({0}, Family::Xi), ks7::domain_error);
}

TEST_CASE("periodicity") {
  CHECK(periodicity_check({1}, Family::Xi).passed());
  CHECK(periodicity_check({2}, Family::XiPrime).passed());
  const auto r = periodicity_check({1}, Family::Xi, IntRange{0, 0});
  CHECK(r.passed());
}

TEST_CASE("refinement, l = 0 branch, axioms, dual path, smoothing") {
  for (Family f : {Family::Xi, Family::XiPrime}) {
    CHECK(refinement_check({-2, 3}, {-20, 20}, f).passed());
    CHECK(l_zero_check({-12, 12}, f).passed());
    for (Relation rel : kAllRelations) CHECK(axioms_check({-1, 0, 2}, {-30, 30}, f, rel, 300, 1).passed());
    CHECK(smoothing_check({-1, 2}, {-5, 5}, f).passed());
  }
  CHECK(dual_path_check(50, 9).passed());
  CHECK_FALSE(dual_path_check(50, 9, 1000, 10, corrupted).passed());
}

TEST_CASE("run_all on a reduced window") {
  VerifyConfig cfg;
  cfg.l_range = {-2, 2};
  cfg.k_range = {-12, 12};
  cfg.corollary_l_range = {-3, 3};
  cfg.corollary_k_range = {-4, 4};
  cfg.l_zero_k_range = {-6, 6};
  cfg.axiom_samples = 200;
  cfg.dual_path_samples = 20;
  cfg.periodicity_max_l = 1;
  const auto r = run_all(cfg);
  CHECK(r.passed());
  CHECK(r.total_tested() > 0);
  CHECK_FALSE(run_all(cfg, corrupted).passed());

  VerifyConfig empty;
  empty.l_range = {1, 0};
  empty.k_range = {1, 0};
  empty.corollary_l_range = {1, 0};
  empty.corollary_k_range = {1, 0};
  empty.l_zero_k_range = {1, 0};
  const auto v = run_all(empty);
  CHECK(v.passed());
  CHECK(v.total_tested() == 0);
}

TEST_CASE("ranges parse") {
  CHECK(IntRange::parse("-6..6") == IntRange{-6, 6});
  CHECK(IntRange::parse("3..1").empty());
  CHECK(IntRange::parse("0..0").size() == 1);
  CHECK_THROWS_AS(IntRange::parse("1-2"), parse_error);
  CHECK_THROWS_AS(IntRange::parse("a..2"), parse_error);
  CHECK_THROWS_AS(IntRange::parse("1..99999999999999999999"), parse_error);
}
