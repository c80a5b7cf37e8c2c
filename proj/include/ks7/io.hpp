#pragma once

/**
 * @file io.hpp
 * @brief JSON, CSV and Markdown renderings.
 *
 * Rationals and Q/Z values are strings "p/q" (just "p" when q = 1), always
 * reduced. Integers that fit in 64 bits are JSON numbers; larger ones are
 * decimal strings.
 */

#include <cstdint>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "ks7/bundles.hpp"
#include "ks7/classify.hpp"
#include "ks7/exactq.hpp"
#include "ks7/kreck_stolz.hpp"
#include "ks7/verify.hpp"

namespace ks7 {

using json = nlohmann::ordered_json;

inline json integer_json(const Integer& v) {
  if (v >= Integer(INT64_MIN) && v <= Integer(INT64_MAX)) return static_cast<std::int64_t>(v);
  return v.str();
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return detail::parse_integer(j.get<std::string>());
  throw parse_error("expected an integer, got " + j.dump());
}

inline json to_json(const BundleParams& p) {
  return {{"k", integer_json(p.k)}, {"l", integer_json(p.l)}, {"family", std::string(family_name(p.family))}};
}

inline BundleParams bundle_params_from_json(const json& j) {
  try {
    return {integer_from_json(j.at("k")), integer_from_json(j.at("l")), parse_family(j.at("family").get<std::string>())};
  } catch (const json::exception& e) {
    throw parse_error(std::string("bad manifold JSON: ") + e.what());
  }
}

inline json to_json(const KSInvariants& inv) {
  return {{"s1", inv.s1.str()}, {"s2", inv.s2.str()}, {"s3", inv.s3.str()}};
}

inline KSInvariants invariants_from_json(const json& j) {
  return {QmodZ::parse(j.at("s1").get<std::string>()), QmodZ::parse(j.at("s2").get<std::string>()),
          QmodZ::parse(j.at("s3").get<std::string>())};
}

inline json to_json(const ComparisonKey& key) {
  return {{"kind", std::string(key_kind_name(key.kind))},
          {"s1", key.components[0].str()},
          {"s2", key.components[1].str()},
          {"s3", key.components[2].str()}};
}

inline json to_json(const ClassTable& t) {
  json classes = json::array();
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    json members = json::array();
    for (const auto& m : t.classes[i].members) members.push_back(integer_json(m));
    classes.push_back({{"class_index", i},
                       {"representative", integer_json(t.classes[i].representative)},
                       {"members", std::move(members)}});
  }
  return {{"l", integer_json(t.l)},
          {"family", std::string(family_name(t.family))},
          {"relation", std::string(relation_name(t.relation))},
          {"modulus", integer_json(t.modulus)},
          {"class_count", t.classes.size()},
          {"classes", std::move(classes)}};
}

/// Columns: modulus, class_index, representative, members (space separated).
inline std::string to_csv(const ClassTable& t) {
  std::ostringstream os;
  os << "modulus,class_index,representative,members\n";
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    os << t.modulus << ',' << i << ',' << t.classes[i].representative << ',';
    for (std::size_t j = 0; j < t.classes[i].members.size(); ++j) os << (j ? " " : "") << t.classes[i].members[j];
    os << '\n';
  }
  return os.str();
}

/// Markdown section: one row per class with the invariants of its
/// representative.
inline std::string to_markdown(const ClassTable& t) {
  std::ostringstream os;
  os << "### " << family_symbol(t.family) << "(k," << t.l << ") up to " << relation_name(t.relation) << "\n\n";
  os << "k modulo " << t.modulus << ", " << t.classes.size() << " classes.\n\n";
  os << "| class | representative | members | s1 | s2 | s3 |\n";
  os << "|---:|---:|---|---|---|---|\n";
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    const auto& c = t.classes[i];
    const KSInvariants inv = s_closed_form({c.representative, t.l, t.family});
    os << "| " << i << " | " << c.representative << " | ";
    for (std::size_t j = 0; j < c.members.size(); ++j) os << (j ? ", " : "") << c.members[j];
    os << " | " << inv.s1 << " | " << inv.s2 << " | " << inv.s3 << " |\n";
  }
  os << '\n';
  return os.str();
}

inline json to_json(const Counterexample& ce) {
  json verdicts = json::object();
  for (const auto& [k, v] : ce.verdicts) verdicts[k] = v;
  return {{"l", ce.l},
          {"family", std::string(family_name(ce.family))},
          {"relation", ce.relation ? json(std::string(relation_name(*ce.relation))) : json(nullptr)},
          {"k", integer_json(ce.k)},
          {"k_prime", integer_json(ce.k_prime)},
          {"verdicts", std::move(verdicts)}};
}

inline json to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks()) {
    json failures = json::array();
    for (const auto& f : c.failures) failures.push_back(to_json(f));
    checks.push_back({{"name", c.name}, {"tested", c.tested}, {"passed", c.passed()}, {"failures", std::move(failures)}});
  }
  json scope = json::object();
  for (const auto& [k, v] : r.scope) scope[k] = v;
  return {{"passed", r.passed()},
          {"total_tested", r.total_tested()},
          {"total_failures", r.total_failures()},
          {"scope", std::move(scope)},
          {"checks", std::move(checks)}};
}

}  // namespace ks7
