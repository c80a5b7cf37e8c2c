#pragma once

/**
 * @file kreck_stolz.hpp
 * @brief Kreck-Stolz invariants s1, s2, s3 of M_{k,l} and M'_{k,l}.
 *
 * For a type-l manifold M bounding (W, z) the invariants are the
 * characteristic numbers S_i(W, z) reduced mod Z. Two routes are provided:
 *
 *   - s_eval(coboundary_char_numbers(p)): the general S_i formulas applied
 *     to the disk bundle W of the defining rank-4 bundle;
 *   - s_closed_form(p): the same numbers, simplified by hand in k and l.
 *
 * The two must agree exactly; the tests hold them to that.
 *
 * Topological and PL classification use s-bar = (28 s1, s2, s3). The
 * occasionally printed variant "s-bar_2 = s_1" is a misprint: with it the
 * homeomorphism criterion would not reduce to k = k' (mod 6l) / (mod 12l).
 */

#include <array>
#include <string_view>

#include "ks7/bundles.hpp"
#include "ks7/errors.hpp"
#include "ks7/exactq.hpp"

namespace ks7 {

/// Characteristic numbers of a coboundary (W, z) of M, evaluated on [W, M].
struct CharNumbers {
  int sign_w = 1;    // signature of W, +-1 for these coboundaries
  Rational p1_sq;    // <p1(W)^2, [W,M]>
  Rational p1_z2;    // <p1(W) z^2, [W,M]>
  Rational z4;       // <z^4, [W,M]>
  bool spin = false; // M (and W) spin

  friend bool operator==(const CharNumbers&, const CharNumbers&) = default;
};

struct KSInvariants {
  QmodZ s1;
  QmodZ s2;
  QmodZ s3;

  friend bool operator==(const KSInvariants&, const KSInvariants&) = default;
};

enum class KeyKind { Smooth, Top, PL };

inline std::string_view key_kind_name(KeyKind k) {
  switch (k) {
    case KeyKind::Smooth: return "SMOOTH";
    case KeyKind::Top: return "TOP";
    case KeyKind::PL: return "PL";
  }
  return "?";
}

/// The tuple compared when classifying. Keys of different kinds
/// never compare equal.
struct ComparisonKey {
  KeyKind kind = KeyKind::Smooth;
  std::array<QmodZ, 3> components;

  friend bool operator==(const ComparisonKey&, const ComparisonKey&) = default;
};

/// (S1, S2, S3) as exact rationals, with the spin or nonspin formulas
/// selected by ch.spin.
inline std::array<Rational, 3> s_eval(const CharNumbers& ch) {
  const Rational sig(ch.sign_w);
  if (ch.spin) {
    return {
        -sig / 224 + ch.p1_sq / 896,
        -ch.p1_z2 / 48 + ch.z4 / 24,
        -ch.p1_z2 / 12 + Rational(2, 3) * ch.z4,
    };
  }
  return {
      -sig / 224 + ch.p1_sq / 896 - ch.p1_z2 / 192 + ch.z4 / 384,
      -ch.p1_z2 / 24 + Rational(5, 24) * ch.z4,
      -ch.p1_z2 / 8 + Rational(13, 8) * ch.z4,
  };
}

namespace detail {

inline void require_nonzero_l(const BundleParams& p) {
  if (p.l.is_zero()) throw domain_error("Kreck-Stolz invariants undefined for l=0");
}

}  // namespace detail

/// Characteristic numbers of the disk bundle W_{k,l} with z the pullback of
/// the generator of H^2(CP^2). With P = p1(W)/z^2 = 4k - 2l + 3 (nonspin M)
/// or 4k - 2l + 4 (spin M): p1^2 = P^2/l, p1 z^2 = P/l, z^4 = 1/l and
/// sign(W) = sign(l).
inline CharNumbers coboundary_char_numbers(const BundleParams& p) {
  detail::require_nonzero_l(p);
  const bool spin = manifold_is_spin(p);
  const Integer P = 4 * p.k - 2 * p.l + (spin ? 4 : 3);
  CharNumbers ch;
  ch.sign_w = p.l.sign();
  ch.p1_sq = Rational(P * P, p.l);
  ch.p1_z2 = Rational(P, p.l);
  ch.z4 = Rational(1, p.l);
  ch.spin = spin;
  return ch;
}

inline KSInvariants s_closed_form(const BundleParams& p) {
  detail::require_nonzero_l(p);
  const Integer& k = p.k;
  const Integer& l = p.l;
  const Rational sig(l.sign());
  if (p.family == Family::Xi) {
    const Integer P = 4 * k - 2 * l + 3;
    return {
        qz(-sig / 224 + Rational(P * P, 896 * l) - Rational(8 * k - 4 * l + 5, 384 * l)),
        qz(-Rational(2 * k - l - 1, 12 * l)),
        qz(-Rational(2 * k - l - 5, 4 * l)),
    };
  }
  const Integer Q = 2 * k - l + 2;
  return {
      qz(-sig / 224 + Rational(Q * Q, 224 * l)),
      qz(-Rational(2 * k - l + 1, 24 * l)),
      qz(-Rational(2 * k - l - 2, 6 * l)),
  };
}

/// s_closed_form through the general formulas instead of the simplified ones.
inline KSInvariants s_via_coboundary(const BundleParams& p) {
  const auto S = s_eval(coboundary_char_numbers(p));
  return {qz(S[0]), qz(S[1]), qz(S[2])};
}

inline ComparisonKey comparison_key(const KSInvariants& inv, KeyKind kind) {
  if (kind == KeyKind::Smooth) return {kind, {inv.s1, inv.s2, inv.s3}};
  return {kind, {qz_scale(inv.s1, 28), inv.s2, inv.s3}};
}

inline ComparisonKey comparison_key(const BundleParams& p, KeyKind kind) {
  return comparison_key(s_closed_form(p), kind);
}

/// Invariants of M # (j * Sigma_1), Sigma_1 the generator of Theta_7 with
/// s1 = 1/28 and s2 = s3 = 0.
inline KSInvariants add_exotic(const KSInvariants& inv, const Integer& j) {
  return {qz_add(inv.s1, qz(Rational(j, 28))), inv.s2, inv.s3};
}

}  // namespace ks7
