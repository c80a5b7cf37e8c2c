#pragma once

/**
 * @file classify.hpp
 * @brief Classification oracles for M_{k,l} and M'_{k,l} at fixed l.
 *
 * Two independent deciders:
 *   - equivalent(): congruences in k, k' (l != 0), or the l = 0 rules
 *     (k = k' for diffeo/homeo/PL, k = k' mod 6 for homotopy);
 *   - equivalent_via_invariants(): compare Kreck-Stolz keys.
 *
 * Only manifolds with the same family and the same l are comparable; any
 * other pair raises incomparable_error.
 */

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ks7/bundles.hpp"
#include "ks7/errors.hpp"
#include "ks7/exactq.hpp"
#include "ks7/kreck_stolz.hpp"

namespace ks7 {

/// Ordered finest first: Diffeo => PL <=> Homeo => Homotopy.
enum class Relation { Diffeo, Homeo, PL, Homotopy };

inline constexpr Relation kAllRelations[] = {Relation::Diffeo, Relation::Homeo, Relation::PL, Relation::Homotopy};
inline constexpr Relation kInvariantRelations[] = {Relation::Diffeo, Relation::Homeo, Relation::PL};

inline std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::Diffeo: return "DIFFEO";
    case Relation::Homeo: return "HOMEO";
    case Relation::PL: return "PL";
    case Relation::Homotopy: return "HOMOTOPY";
  }
  return "?";
}

inline Relation parse_relation(std::string_view s) {
  if (s == "diffeo" || s == "DIFFEO") return Relation::Diffeo;
  if (s == "homeo" || s == "HOMEO") return Relation::Homeo;
  if (s == "pl" || s == "PL") return Relation::PL;
  if (s == "homotopy" || s == "HOMOTOPY") return Relation::Homotopy;
  throw parse_error("unknown relation '" + std::string(s) + "' (expected diffeo, homeo, pl or homotopy)");
}

/// Which invariant key decides a relation. Homotopy has none.
inline KeyKind key_kind_for(Relation r) {
  switch (r) {
    case Relation::Diffeo: return KeyKind::Smooth;
    case Relation::Homeo: return KeyKind::Top;
    case Relation::PL: return KeyKind::PL;
    case Relation::Homotopy: break;
  }
  throw unsupported_error("no invariant criterion for homotopy equivalence");
}

/// One congruence appearing in a classification statement.
struct Condition {
  std::string text;
  bool held = false;
};

/// 6|l| for M, 12|l| for M'.
inline Integer pl_modulus(Family f, const Integer& l) {
  return (f == Family::Xi ? 6 : 12) * Integer(abs(l));
}

/// Period in k of the relation's class structure. For diffeo this is
/// 168|l| in both families (lcm(6l, 168l) and lcm(12l, 56l)). Zero for the
/// l = 0 rigid relations, where only k = k' is allowed.
inline Integer relation_modulus(Family f, const Integer& l, Relation rel) {
  if (rel == Relation::Homotopy) return 6;
  if (rel == Relation::Diffeo) return 168 * Integer(abs(l));
  return pl_modulus(f, l);
}

namespace detail {

inline void require_comparable(const BundleParams& a, const BundleParams& b) {
  if (a.family != b.family) {
    throw incomparable_error("cannot compare " + to_spec(a) + " with " + to_spec(b) +
                             ": one total space is spin and the other is not");
  }
  if (a.l != b.l) {
    throw incomparable_error("cannot compare " + to_spec(a) + " with " + to_spec(b) +
                             ": classification is only known at fixed l");
  }
}

}  // namespace detail

/// The congruences deciding `rel` for the pair, each with its verdict.
inline std::vector<Condition> congruence_conditions(const BundleParams& a, const BundleParams& b, Relation rel) {
  detail::require_comparable(a, b);
  const Integer& l = a.l;
  const Integer d = a.k - b.k;
  if (rel == Relation::Homotopy) return {{"k ≡ k' (mod 6)", divides(6, d)}};
  if (l.is_zero()) return {{"k = k'", d.is_zero()}};

  std::vector<Condition> out;
  if (a.family == Family::Xi) {
    out.push_back({"k ≡ k' (mod 6l)", divides(6 * l, d)});
    if (rel == Relation::Diffeo) {
      out.push_back({"(k-k')(3(k+k'-l)+1) ≡ 0 (mod 168l)", divides(168 * l, d * (3 * (a.k + b.k - l) + 1))});
    }
  } else {
    out.push_back({"k ≡ k' (mod 12l)", divides(12 * l, d)});
    if (rel == Relation::Diffeo) {
      out.push_back({"(k-k')(k+k'-l+2) ≡ 0 (mod 56l)", divides(56 * l, d * (a.k + b.k - l + 2))});
    }
  }
  return out;
}

inline bool equivalent(const BundleParams& a, const BundleParams& b, Relation rel) {
  for (const auto& c : congruence_conditions(a, b, rel)) {
    if (!c.held) return false;
  }
  return true;
}

/// Invariant-side verdict from precomputed invariants.
inline bool invariants_agree(const KSInvariants& a, const KSInvariants& b, Relation rel) {
  const KeyKind kind = key_kind_for(rel);
  return comparison_key(a, kind) == comparison_key(b, kind);
}

inline bool equivalent_via_invariants(const BundleParams& a, const BundleParams& b, Relation rel) {
  detail::require_comparable(a, b);
  if (a.l.is_zero()) throw unsupported_error("Kreck-Stolz invariants undefined for l=0");
  const KeyKind kind = key_kind_for(rel);
  return comparison_key(a, kind) == comparison_key(b, kind);
}

/// Least nonnegative k' equivalent to p. For l = 0 and a rigid relation the
/// class is {k} itself, so k is returned even when negative.
inline Integer canonical_representative(const BundleParams& p, Relation rel) {
  if (p.l.is_zero() && rel != Relation::Homotopy) return p.k;
  if (rel != Relation::Diffeo) return mod_floor(p.k, relation_modulus(p.family, p.l, rel));

  // Diffeo classes sit inside PL classes, and k ~ k + 168|l|, so the answer
  // is one of the PL-equivalent residues below 168|l|.
  const Integer step = pl_modulus(p.family, p.l);
  const Integer period = relation_modulus(p.family, p.l, rel);
  for (Integer t = mod_floor(p.k, step); t < period; t += step) {
    if (equivalent(p, {t, p.l, p.family}, Relation::Diffeo)) return t;
  }
  throw std::logic_error("no diffeo representative below period for " + to_spec(p));
}

struct EquivalenceClass {
  Integer representative;
  std::vector<Integer> members;  // ascending residues, representative first

  friend bool operator==(const EquivalenceClass&, const EquivalenceClass&) = default;
};

struct ClassTable {
  Integer l;
  Family family = Family::Xi;
  Relation relation = Relation::Diffeo;
  Integer modulus;
  std::vector<EquivalenceClass> classes;  // ordered by representative

  friend bool operator==(const ClassTable&, const ClassTable&) = default;
};

/// Partitions the residues 0 .. modulus-1 into classes of `rel`.
inline ClassTable enumerate_classes(const Integer& l, Family family, Relation rel) {
  if (l.is_zero()) throw unsupported_error("class tables need l != 0 (for l=0 every class is a single k)");
  ClassTable table{l, family, rel, relation_modulus(family, l, rel), {}};

  // Residues in different PL classes never share a diffeo class; bucket by
  // the coarser residue so each residue is only tested against nearby reps.
  const Integer bucket_mod = rel == Relation::Diffeo ? pl_modulus(family, l) : table.modulus;
  std::map<Integer, std::vector<std::size_t>> buckets;
  for (Integer r = 0; r < table.modulus; ++r) {
    auto& bucket = buckets[r % bucket_mod];
    const BundleParams p{r, l, family};
    bool placed = false;
    for (std::size_t idx : bucket) {
      auto& cls = table.classes[idx];
      if (equivalent(p, {cls.representative, l, family}, rel)) {
        cls.members.push_back(r);
        placed = true;
        break;
      }
    }
    if (!placed) {
      bucket.push_back(table.classes.size());
      table.classes.push_back({r, {r}});
    }
  }
  return table;
}

/// Number of diffeomorphism types inside the PL class of p, i.e. how many
/// of the 28 concordance classes of smoothings are realized by some M_{k',l}
/// (resp. M'_{k',l}). Equals 1 for l = 0, where PL and diffeo agree.
inline int count_smooth_structures(const BundleParams& p) {
  if (p.l.is_zero()) return 1;
  const Integer step = pl_modulus(p.family, p.l);
  std::vector<BundleParams> reps;
  for (int t = 0; t < 28; ++t) {
    BundleParams q{p.k + step * t, p.l, p.family};
    bool seen = false;
    for (const auto& r : reps) {
      if (equivalent(q, r, Relation::Diffeo)) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(std::move(q));
  }
  return static_cast<int>(reps.size());
}

}  // namespace ks7
