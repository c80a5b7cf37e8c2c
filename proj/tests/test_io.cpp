#include <catch2/catch_amalgamated.hpp>

#include "ks7/io.hpp"

using namespace ks7;

TEST_CASE("manifold JSON") {
  const auto j = to_json(spin_manifold(3, -2));
  CHECK(j.dump() == R"({"k":3,"l":-2,"family":"XI_PRIME"})");
  CHECK(bundle_params_from_json(j) == spin_manifold(3, -2));

  const BundleParams huge{Integer(1) << 80, 1, Family::Xi};
  CHECK(to_json(huge)["k"] == (Integer(1) << 80).str());
  CHECK(bundle_params_from_json(to_json(huge)) == huge);
  CHECK_THROWS_AS(bundle_params_from_json(json{{"k", 1}}), parse_error);
}

TEST_CASE("invariant and key JSON") {
  const auto inv = s_closed_form(nonspin_manifold(0, 1));
  CHECK(to_json(inv).dump() == R"({"s1":"167/168","s2":"1/6","s3":"1/2"})");
  CHECK(invariants_from_json(to_json(inv)) == inv);
  const auto top = to_json(comparison_key(inv, KeyKind::Top));
  CHECK(top["kind"] == "TOP");
  CHECK(top["s1"] == "5/6");  // 28 * 167/168 = 167/6
  CHECK(to_json(s_closed_form(spin_manifold(0, 1)))["s2"] == "0");
}

TEST_CASE("class table renderings") {
  const auto t = enumerate_classes(1, Family::Xi, Relation::Homotopy);
  const auto j = to_json(t);
  CHECK(j["modulus"] == 6);
  CHECK(j["class_count"] == 6);
  CHECK(j["relation"] == "HOMOTOPY");
  CHECK(j["classes"][5]["members"] == json::array({5}));

  const std::string csv = to_csv(enumerate_classes(2, Family::XiPrime, Relation::PL));
  CHECK(csv.rfind("modulus,class_index,representative,members\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 25);
  CHECK(csv.find("24,23,23,23\n") != std::string::npos);

  const std::string diffeo_csv = to_csv(enumerate_classes(1, Family::Xi, Relation::Diffeo));
  CHECK(diffeo_csv.find("168,0,0,0 ") != std::string::npos);

  const std::string md = to_markdown(t);
  CHECK(md.find("| 0 | 0 | 0 | 167/168 | 1/6 | 1/2 |") != std::string::npos);
}

TEST_CASE("report JSON carries counterexample tuples") {
  VerifyReport r;
  r.check("demo", 3);
  r.fail("demo", {2, Family::XiPrime, Relation::Diffeo, 1, 5, {{"congruence", "true"}, {"invariants", "false"}}});
  const auto j = to_json(r);
  CHECK(j["passed"] == false);
  CHECK(j["total_tested"] == 3);
  const auto& f = j["checks"][0]["failures"][0];
  CHECK(f["l"] == 2);
  CHECK(f["family"] == "XI_PRIME");
  CHECK(f["relation"] == "DIFFEO");
  CHECK(f["k"] == 1);
  CHECK(f["k_prime"] == 5);
  CHECK(f["verdicts"]["invariants"] == "false");
}
