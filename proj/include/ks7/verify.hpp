#pragma once

/**
 * @file verify.hpp
 * @brief Windowed exhaustive cross-checks of the classification oracles.
 *
 * Every check returns a VerifyReport. Failures are collected, never thrown;
 * reports merge associatively and commutatively (checks keyed by name,
 * counterexamples kept sorted), so results do not depend on how the grid is
 * split across workers.
 */

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "ks7/bundles.hpp"
#include "ks7/classify.hpp"
#include "ks7/errors.hpp"
#include "ks7/exactq.hpp"
#include "ks7/kreck_stolz.hpp"

namespace ks7 {

/// Closed integer interval lo..hi; empty when lo > hi.
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  bool empty() const { return lo > hi; }
  std::size_t size() const { return empty() ? 0 : static_cast<std::size_t>(hi - lo + 1); }
  bool contains(std::int64_t v) const { return lo <= v && v <= hi; }

  std::vector<std::int64_t> values() const {
    std::vector<std::int64_t> out;
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }

  std::string str() const { return std::to_string(lo) + ".." + std::to_string(hi); }

  /// "a..b" with a, b signed 64-bit integers.
  static IntRange parse(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) throw parse_error("range must look like a..b, got '" + std::string(text) + "'");
    const auto to_i64 = [&](std::string_view s) {
      const Integer v = detail::parse_integer(s);
      if (v > Integer(INT64_MAX) || v < Integer(INT64_MIN)) throw parse_error("range bound out of 64-bit range");
      return static_cast<std::int64_t>(v);
    };
    return {to_i64(text.substr(0, dots)), to_i64(text.substr(dots + 2))};
  }

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// A failing instance, with enough context to reproduce it.
struct Counterexample {
  std::int64_t l = 0;
  Family family = Family::Xi;
  std::optional<Relation> relation;
  Integer k;
  Integer k_prime;
  std::vector<std::pair<std::string, std::string>> verdicts;  // e.g. {"congruence", "true"}

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
  friend bool operator<(const Counterexample& a, const Counterexample& b) {
    return std::tie(a.l, a.family, a.relation, a.k, a.k_prime, a.verdicts) <
           std::tie(b.l, b.family, b.relation, b.k, b.k_prime, b.verdicts);
  }
};

struct CheckResult {
  std::string name;
  std::uint64_t tested = 0;
  std::vector<Counterexample> failures;

  bool passed() const { return failures.empty(); }
};

class VerifyReport {
 public:
  VerifyReport() = default;

  /// Adds `tested` cases to the check `name` (creating it if needed).
  CheckResult& check(const std::string& name, std::uint64_t tested = 0) {
    auto& c = checks_[name];
    c.name = name;
    c.tested += tested;
    return c;
  }

  void fail(const std::string& name, Counterexample ce) { check(name).failures.push_back(std::move(ce)); }

  void merge(VerifyReport other) {
    for (auto& [name, c] : other.checks_) {
      auto& mine = check(name, c.tested);
      for (auto& f : c.failures) mine.failures.push_back(std::move(f));
    }
    normalize();
  }

  void normalize() {
    for (auto& [name, c] : checks_) std::sort(c.failures.begin(), c.failures.end());
  }

  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const auto& kv) { return kv.second.passed(); });
  }

  std::uint64_t total_tested() const {
    std::uint64_t n = 0;
    for (const auto& [name, c] : checks_) n += c.tested;
    return n;
  }

  std::size_t total_failures() const {
    std::size_t n = 0;
    for (const auto& [name, c] : checks_) n += c.failures.size();
    return n;
  }

  /// Checks in name order.
  std::vector<CheckResult> checks() const {
    std::vector<CheckResult> out;
    for (const auto& [name, c] : checks_) out.push_back(c);
    return out;
  }

  /// Checks whose name starts with `prefix` (e.g. "oracle_equivalence").
  VerifyReport filtered(std::string_view prefix) const {
    VerifyReport r;
    for (const auto& [name, c] : checks_) {
      if (std::string_view(name).starts_with(prefix)) r.checks_[name] = c;
    }
    return r;
  }

  /// Free-form description of what was covered.
  std::map<std::string, std::string> scope;

 private:
  std::map<std::string, CheckResult> checks_;
};

/// Source of invariants used on the invariant side of a check. Tests swap
/// in a corrupted formula to exercise the failure path.
using InvariantFn = std::function<KSInvariants(const BundleParams&)>;

inline KSInvariants default_invariants(const BundleParams& p) { return s_closed_form(p); }

namespace detail {

inline unsigned worker_count() {
  if (const char* env = std::getenv("KS7_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs job(i) for i in [0, n) on a small worker pool and merges the reports.
template <class Job>
VerifyReport run_parallel(std::size_t n, Job job) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
  std::vector<VerifyReport> partial(workers);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) partial[0].merge(job(i));
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += workers) partial[w].merge(job(i));
      });
    }
    for (auto& t : pool) t.join();
  }
  VerifyReport out;
  for (auto& p : partial) out.merge(std::move(p));
  return out;
}

inline std::string check_name(std::string_view base, Family f, std::optional<Relation> rel = std::nullopt) {
  std::string s(base);
  s += "[";
  s += family_name(f);
  if (rel) {
    s += ",";
    s += relation_name(*rel);
  }
  s += "]";
  return s;
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline void require_nonzero(const std::vector<std::int64_t>& ls) {
  for (auto l : ls) {
    if (l == 0) throw domain_error("l = 0 is not allowed in this check");
  }
}

}  // namespace detail

/// Congruence oracle vs invariant oracle on every (k, k') in k_range^2 for
/// each l. `rel` must be decided by invariants (not HOMOTOPY).
inline VerifyReport crosscheck_oracles(const std::vector<std::int64_t>& l_values, const IntRange& k_range,
                                       Family family, Relation rel,
                                       const InvariantFn& invariants = default_invariants) {
  detail::require_nonzero(l_values);
  key_kind_for(rel);
  const std::string name = detail::check_name("oracle_equivalence", family, rel);
  const auto ks = k_range.values();
  VerifyReport report = detail::run_parallel(l_values.size(), [&](std::size_t li) {
    VerifyReport r;
    const std::int64_t l = l_values[li];
    std::vector<BundleParams> ps;
    std::vector<KSInvariants> inv;
    for (auto k : ks) {
      ps.push_back({k, l, family});
      inv.push_back(invariants(ps.back()));
    }
    r.check(name, ps.size() * ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = 0; j < ps.size(); ++j) {
        const bool by_congruence = equivalent(ps[i], ps[j], rel);
        const bool by_invariants = invariants_agree(inv[i], inv[j], rel);
        if (by_congruence != by_invariants) {
          r.fail(name, {l, family, rel, ps[i].k, ps[j].k,
                        {{"congruence", detail::yes_no(by_congruence)},
                         {"invariants", detail::yes_no(by_invariants)}}});
        }
      }
    }
    return r;
  });
  report.check(name);
  return report;
}

/// l * (s2(M'_{k+6,l}) - s2(M'_{k,l})) = 1/2 in Q/Z for odd l.
inline VerifyReport corollary_identity(const std::vector<std::int64_t>& odd_l_values, const IntRange& k_range,
                                       const InvariantFn& invariants = default_invariants) {
  for (auto l : odd_l_values) {
    if (l % 2 == 0) throw domain_error("corollary identity needs odd l, got " + std::to_string(l));
  }
  const std::string name = "corollary_pi4_identity[XI_PRIME]";
  const QmodZ half = qz(Rational(1, 2));
  VerifyReport r;
  r.check(name);
  for (auto l : odd_l_values) {
    for (auto k : k_range.values()) {
      r.check(name, 1);
      const QmodZ d = qz_sub(invariants(spin_manifold(k + 6, l)).s2, invariants(spin_manifold(k, l)).s2);
      const QmodZ scaled = qz_scale(d, l);
      if (scaled != half) {
        r.fail(name, {l, Family::XiPrime, std::nullopt, k, k + 6, {{"l*delta_s2", scaled.str()}, {"expected", "1/2"}}});
      }
    }
  }
  r.normalize();
  return r;
}

/// Class-count consistency at fixed l:
///   6 homotopy classes; |l| (M) or 2|l| (M') PL classes in each;
///   HOMEO table == PL table;
///   count_smooth_structures within [1, 28] and equal to the number of
///   diffeo classes inside the PL class.
inline VerifyReport class_count_check(const std::vector<std::int64_t>& l_values, Family family) {
  detail::require_nonzero(l_values);
  const std::string n_htpy = detail::check_name("homotopy_class_count", family);
  const std::string n_pl = detail::check_name("pl_classes_per_homotopy_class", family);
  const std::string n_homeo = detail::check_name("homeo_table_equals_pl_table", family);
  const std::string n_smooth = detail::check_name("smooth_structure_count", family);
  VerifyReport report = detail::run_parallel(l_values.size(), [&](std::size_t li) {
    VerifyReport r;
    const std::int64_t l = l_values[li];
    const auto htpy = enumerate_classes(l, family, Relation::Homotopy);
    const auto pl = enumerate_classes(l, family, Relation::PL);
    const auto homeo = enumerate_classes(l, family, Relation::Homeo);
    const auto diffeo = enumerate_classes(l, family, Relation::Diffeo);

    r.check(n_htpy, 1);
    if (htpy.classes.size() != 6) {
      r.fail(n_htpy, {l, family, Relation::Homotopy, 0, 0,
                      {{"classes", std::to_string(htpy.classes.size())}, {"expected", "6"}}});
    }

    const std::int64_t expected_pl = (family == Family::Xi ? 1 : 2) * (l < 0 ? -l : l);
    for (const auto& hc : htpy.classes) {
      r.check(n_pl, 1);
      std::int64_t inside = 0;
      for (const auto& pc : pl.classes) {
        if (equivalent({pc.representative, l, family}, {hc.representative, l, family}, Relation::Homotopy)) ++inside;
      }
      if (inside != expected_pl) {
        r.fail(n_pl, {l, family, Relation::PL, hc.representative, hc.representative,
                      {{"pl_classes", std::to_string(inside)}, {"expected", std::to_string(expected_pl)}}});
      }
    }

    r.check(n_homeo, 1);
    if (homeo.modulus != pl.modulus || homeo.classes != pl.classes) {
      r.fail(n_homeo, {l, family, Relation::Homeo, 0, 0,
                       {{"homeo_classes", std::to_string(homeo.classes.size())},
                        {"pl_classes", std::to_string(pl.classes.size())}}});
    }

    for (const auto& pc : pl.classes) {
      r.check(n_smooth, 1);
      const int count = count_smooth_structures({pc.representative, l, family});
      std::size_t diffeo_inside = 0;
      for (const auto& dc : diffeo.classes) {
        if (equivalent({dc.representative, l, family}, {pc.representative, l, family}, Relation::PL)) ++diffeo_inside;
      }
      if (count < 1 || count > 28 || static_cast<std::size_t>(count) != diffeo_inside) {
        r.fail(n_smooth, {l, family, Relation::Diffeo, pc.representative, pc.representative,
                          {{"count_smooth_structures", std::to_string(count)},
                           {"diffeo_classes_in_pl_class", std::to_string(diffeo_inside)}}});
      }
    }
    return r;
  });
  for (const auto& n : {n_htpy, n_pl, n_homeo, n_smooth}) report.check(n);
  return report;
}

/// Shifting both k and k' by P = 168|l| leaves the diffeo verdict unchanged,
/// and k ~ k + P. Default window is k, k' in [0, P).
inline VerifyReport periodicity_check(const std::vector<std::int64_t>& l_values, Family family,
                                      std::optional<IntRange> window = std::nullopt) {
  detail::require_nonzero(l_values);
  const std::string n_shift = detail::check_name("diffeo_periodicity", family, Relation::Diffeo);
  const std::string n_self = detail::check_name("diffeo_period_self_equivalence", family, Relation::Diffeo);
  VerifyReport report = detail::run_parallel(l_values.size(), [&](std::size_t li) {
    VerifyReport r;
    const std::int64_t l = l_values[li];
    const std::int64_t period = 168 * (l < 0 ? -l : l);
    const IntRange ks = window.value_or(IntRange{0, period - 1});
    for (auto k : ks.values()) {
      r.check(n_self, 1);
      if (!equivalent({k, l, family}, {k + period, l, family}, Relation::Diffeo)) {
        r.fail(n_self, {l, family, Relation::Diffeo, k, k + period, {{"equivalent", "false"}}});
      }
      for (auto k2 : ks.values()) {
        r.check(n_shift, 1);
        const bool base = equivalent({k, l, family}, {k2, l, family}, Relation::Diffeo);
        const bool shifted = equivalent({k + period, l, family}, {k2 + period, l, family}, Relation::Diffeo);
        if (base != shifted) {
          r.fail(n_shift, {l, family, Relation::Diffeo, k, k2,
                           {{"unshifted", detail::yes_no(base)}, {"shifted", detail::yes_no(shifted)}}});
        }
      }
    }
    return r;
  });
  report.check(n_shift);
  report.check(n_self);
  return report;
}

/// DIFFEO => PL => HOMOTOPY and HOMEO == PL on every pair, for both oracles.
inline VerifyReport refinement_check(const std::vector<std::int64_t>& l_values, const IntRange& k_range,
                                     Family family, const InvariantFn& invariants = default_invariants) {
  detail::require_nonzero(l_values);
  const std::string n_chain = detail::check_name("refinement_chain", family);
  const std::string n_coinc = detail::check_name("homeo_equals_pl", family);
  const auto ks = k_range.values();
  VerifyReport report = detail::run_parallel(l_values.size(), [&](std::size_t li) {
    VerifyReport r;
    const std::int64_t l = l_values[li];
    std::vector<KSInvariants> inv;
    for (auto k : ks) inv.push_back(invariants({k, l, family}));
    for (std::size_t i = 0; i < ks.size(); ++i) {
      for (std::size_t j = 0; j < ks.size(); ++j) {
        const BundleParams a{ks[i], l, family}, b{ks[j], l, family};
        const bool d = equivalent(a, b, Relation::Diffeo);
        const bool h = equivalent(a, b, Relation::Homeo);
        const bool p = equivalent(a, b, Relation::PL);
        const bool t = equivalent(a, b, Relation::Homotopy);
        const bool di = invariants_agree(inv[i], inv[j], Relation::Diffeo);
        const bool hi = invariants_agree(inv[i], inv[j], Relation::Homeo);
        const bool pi = invariants_agree(inv[i], inv[j], Relation::PL);
        r.check(n_chain, 1);
        if ((d && !p) || (p && !t) || (di && !pi)) {
          r.fail(n_chain, {l, family, std::nullopt, a.k, b.k,
                           {{"diffeo", detail::yes_no(d)}, {"pl", detail::yes_no(p)},
                            {"homotopy", detail::yes_no(t)}, {"diffeo_invariants", detail::yes_no(di)},
                            {"pl_invariants", detail::yes_no(pi)}}});
        }
        r.check(n_coinc, 1);
        if (h != p || hi != pi) {
          r.fail(n_coinc, {l, family, std::nullopt, a.k, b.k,
                           {{"homeo", detail::yes_no(h)}, {"pl", detail::yes_no(p)},
                            {"homeo_invariants", detail::yes_no(hi)}, {"pl_invariants", detail::yes_no(pi)}}});
        }
      }
    }
    return r;
  });
  report.check(n_chain);
  report.check(n_coinc);
  return report;
}

/// l = 0: diffeo, homeo and PL iff k = k'; homotopy iff 6 | k - k'. The
/// expected verdicts are computed with plain 64-bit arithmetic.
inline VerifyReport l_zero_check(const IntRange& k_range, Family family) {
  const std::string name = detail::check_name("l_zero_branch", family);
  VerifyReport r;
  r.check(name);
  for (auto k : k_range.values()) {
    for (auto k2 : k_range.values()) {
      for (Relation rel : kAllRelations) {
        r.check(name, 1);
        const bool expected = rel == Relation::Homotopy ? (k - k2) % 6 == 0 : k == k2;
        const bool got = equivalent({k, 0, family}, {k2, 0, family}, rel);
        if (got != expected) {
          r.fail(name, {0, family, rel, k, k2, {{"oracle", detail::yes_no(got)}, {"expected", detail::yes_no(expected)}}});
        }
      }
    }
  }
  r.normalize();
  return r;
}

/// Reflexivity, symmetry and transitivity of both oracles on `samples`
/// random triples per l. Half of the triples are drawn inside one residue
/// class of the relation's coarse modulus so that transitivity premises
/// actually occur.
inline VerifyReport axioms_check(const std::vector<std::int64_t>& l_values, const IntRange& k_range, Family family,
                                 Relation rel, std::size_t samples, std::uint64_t seed,
                                 const InvariantFn& invariants = default_invariants) {
  const std::string name = detail::check_name("equivalence_axioms", family, rel);
  if (k_range.empty()) {
    VerifyReport r;
    r.check(name);
    return r;
  }
  VerifyReport report = detail::run_parallel(l_values.size(), [&](std::size_t li) {
    VerifyReport r;
    const std::int64_t l = l_values[li];
    const bool with_invariants = l != 0 && rel != Relation::Homotopy;
    std::map<std::int64_t, KSInvariants> cache;
    const auto inv_of = [&](std::int64_t k) -> const KSInvariants& {
      auto it = cache.find(k);
      if (it == cache.end()) it = cache.emplace(k, invariants({k, l, family})).first;
      return it->second;
    };

    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(l + 1000003) * 0x9E3779B97F4A7C15ULL) ^
                        (static_cast<std::uint64_t>(family) << 8) ^ static_cast<std::uint64_t>(rel));
    std::uniform_int_distribution<std::int64_t> pick(k_range.lo, k_range.hi);
    std::bernoulli_distribution coin(0.5);
    const std::int64_t m = [&] {
      if (rel == Relation::Homotopy) return std::int64_t{6};
      if (l == 0) return std::int64_t{0};
      return static_cast<std::int64_t>(pl_modulus(family, l));
    }();
    const auto near = [&](std::int64_t a) {
      std::int64_t v = pick(rng);
      if (m == 0) return a;
      v = a + m * ((v - a) / m);
      return k_range.contains(v) ? v : a;
    };

    for (std::size_t s = 0; s < samples; ++s) {
      const std::int64_t a = pick(rng);
      const bool clustered = coin(rng);
      const std::int64_t b = clustered ? near(a) : pick(rng);
      const std::int64_t c = clustered ? near(a) : pick(rng);
      const BundleParams pa{a, l, family}, pb{b, l, family}, pc{c, l, family};

      const auto test = [&](std::string_view oracle, auto&& eq) {
        r.check(name, 1);
        const bool aa = eq(pa, pa, a, a), ab = eq(pa, pb, a, b), ba = eq(pb, pa, b, a);
        const bool bc = eq(pb, pc, b, c), ac = eq(pa, pc, a, c);
        std::string broken;
        if (!aa) broken = "reflexivity";
        else if (ab != ba) broken = "symmetry";
        else if (ab && bc && !ac) broken = "transitivity(c=" + std::to_string(c) + ")";
        if (!broken.empty()) r.fail(name, {l, family, rel, a, b, {{"oracle", std::string(oracle)}, {"axiom", broken}}});
      };
      test("congruence", [&](const BundleParams& x, const BundleParams& y, std::int64_t, std::int64_t) {
        return equivalent(x, y, rel);
      });
      if (with_invariants) {
        test("invariants", [&](const BundleParams&, const BundleParams&, std::int64_t x, std::int64_t y) {
          return invariants_agree(inv_of(x), inv_of(y), rel);
        });
      }
    }
    return r;
  });
  report.check(name);
  return report;
}

/// qz(S_eval(coboundary_char_numbers(p))) == closed form on random (k, l),
/// |k| <= k_max, 1 <= |l| <= l_max, both families.
inline VerifyReport dual_path_check(std::size_t samples, std::uint64_t seed, std::int64_t k_max = 1'000'000,
                                    std::int64_t l_max = 10'000,
                                    const InvariantFn& closed_form = default_invariants) {
  const std::string name = "dual_path_identity";
  VerifyReport r;
  r.check(name);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick_k(-k_max, k_max);
  std::uniform_int_distribution<std::int64_t> pick_l(1, l_max);
  std::bernoulli_distribution negative(0.5);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::int64_t k = pick_k(rng);
    const std::int64_t l = negative(rng) ? -pick_l(rng) : pick_l(rng);
    for (Family f : {Family::Xi, Family::XiPrime}) {
      r.check(name, 1);
      const BundleParams p{k, l, f};
      const KSInvariants general = s_via_coboundary(p);
      const KSInvariants closed = closed_form(p);
      if (general != closed) {
        r.fail(name, {l, f, std::nullopt, k, k,
                      {{"general", general.s1.str() + "," + general.s2.str() + "," + general.s3.str()},
                       {"closed_form", closed.s1.str() + "," + closed.s2.str() + "," + closed.s3.str()}}});
      }
    }
  }
  r.normalize();
  return r;
}

/// count_smooth_structures <= 28 and constant on PL classes; the exotic
/// sphere action has order exactly 28 on s1 and fixes the PL key.
inline VerifyReport smoothing_check(const std::vector<std::int64_t>& l_values, const IntRange& k_range,
                                    Family family, const InvariantFn& invariants = default_invariants) {
  detail::require_nonzero(l_values);
  const std::string n_count = detail::check_name("smoothing_count_bound", family);
  const std::string n_action = detail::check_name("exotic_action_order", family);
  const std::string n_pl = detail::check_name("pl_key_exotic_invariance", family);
  VerifyReport report = detail::run_parallel(l_values.size(), [&](std::size_t li) {
    VerifyReport r;
    const std::int64_t l = l_values[li];
    const Integer step = pl_modulus(family, l);
    for (auto k : k_range.values()) {
      const BundleParams p{k, l, family};
      r.check(n_count, 1);
      const int count = count_smooth_structures(p);
      const int shifted = count_smooth_structures({k + step, l, family});
      if (count < 1 || count > 28 || count != shifted) {
        r.fail(n_count, {l, family, Relation::Diffeo, k, k + step,
                         {{"count", std::to_string(count)}, {"count_pl_shifted", std::to_string(shifted)}}});
      }

      const KSInvariants inv = invariants(p);
      r.check(n_action, 1);
      KSInvariants it = inv;
      int order = 0;
      for (int j = 1; j <= 28; ++j) {
        it = add_exotic(it, 1);
        if (it == inv) {
          order = j;
          break;
        }
      }
      if (order != 28 || add_exotic(inv, 28) != inv || add_exotic(inv, 0) != inv) {
        r.fail(n_action, {l, family, std::nullopt, k, k, {{"order", std::to_string(order)}, {"expected", "28"}}});
      }

      r.check(n_pl, 1);
      const ComparisonKey base = comparison_key(inv, KeyKind::PL);
      for (int j = 0; j < 28; ++j) {
        if (comparison_key(add_exotic(inv, j), KeyKind::PL) != base) {
          r.fail(n_pl, {l, family, std::nullopt, k, k, {{"j", std::to_string(j)}, {"pl_key", "changed"}}});
          break;
        }
      }
    }
    return r;
  });
  for (const auto& n : {n_count, n_action, n_pl}) report.check(n);
  return report;
}

/// Ranges for a full run. Defaults are the acceptance window.
struct VerifyConfig {
  IntRange l_range{-6, 6};             // grid l values; 0 routes to the l = 0 check
  IntRange k_range{-60, 60};           // grid k values
  IntRange corollary_l_range{-9, 9};   // odd values are used
  IntRange corollary_k_range{-20, 20};
  IntRange l_zero_k_range{-30, 30};
  std::vector<Family> families{Family::Xi, Family::XiPrime};
  std::size_t axiom_samples = 10'000;
  std::size_t dual_path_samples = 1'000;
  std::int64_t dual_path_k_max = 1'000'000;
  std::int64_t dual_path_l_max = 10'000;
  std::int64_t periodicity_max_l = 3;
  std::uint64_t seed = 20240229;
};

inline std::vector<std::int64_t> nonzero_values(const IntRange& r) {
  std::vector<std::int64_t> out;
  for (auto v : r.values()) {
    if (v != 0) out.push_back(v);
  }
  return out;
}

/// Every check, over the configured ranges.
inline VerifyReport run_all(const VerifyConfig& cfg, const InvariantFn& invariants = default_invariants) {
  VerifyReport report;
  const auto ls = nonzero_values(cfg.l_range);
  std::vector<std::int64_t> small_ls;
  for (auto l : ls) {
    if ((l < 0 ? -l : l) <= cfg.periodicity_max_l) small_ls.push_back(l);
  }
  std::vector<std::int64_t> odd_ls;
  for (auto l : cfg.corollary_l_range.values()) {
    if (l % 2 != 0) odd_ls.push_back(l);
  }
  std::vector<std::int64_t> axiom_ls = ls;
  if (cfg.l_range.contains(0)) axiom_ls.push_back(0);

  for (Family f : cfg.families) {
    for (Relation rel : kInvariantRelations) report.merge(crosscheck_oracles(ls, cfg.k_range, f, rel, invariants));
    report.merge(refinement_check(ls, cfg.k_range, f, invariants));
    report.merge(class_count_check(ls, f));
    report.merge(smoothing_check(ls, cfg.k_range, f, invariants));
    report.merge(periodicity_check(small_ls, f));
    if (cfg.l_range.contains(0)) report.merge(l_zero_check(cfg.l_zero_k_range, f));
    for (Relation rel : kAllRelations) {
      report.merge(axioms_check(axiom_ls, cfg.k_range, f, rel, cfg.axiom_samples, cfg.seed, invariants));
    }
  }
  report.merge(corollary_identity(odd_ls, cfg.corollary_k_range, invariants));
  if (!ls.empty()) {
    report.merge(dual_path_check(cfg.dual_path_samples, cfg.seed, cfg.dual_path_k_max, cfg.dual_path_l_max, invariants));
  }

  report.scope["l_range"] = cfg.l_range.str();
  report.scope["k_range"] = cfg.k_range.str();
  report.scope["corollary_l_range"] = cfg.corollary_l_range.str();
  report.scope["corollary_k_range"] = cfg.corollary_k_range.str();
  report.scope["l_zero_k_range"] = cfg.l_zero_k_range.str();
  std::string fams;
  for (Family f : cfg.families) fams += (fams.empty() ? "" : ",") + std::string(family_name(f));
  report.scope["families"] = fams;
  report.scope["axiom_samples"] = std::to_string(cfg.axiom_samples);
  report.scope["dual_path_samples"] = std::to_string(cfg.dual_path_samples);
  report.scope["periodicity_max_l"] = std::to_string(cfg.periodicity_max_l);
  report.scope["seed"] = std::to_string(cfg.seed);
  return report;
}

}  // namespace ks7
