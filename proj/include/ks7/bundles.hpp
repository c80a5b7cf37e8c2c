#pragma once

/**
 * @file bundles.hpp
 * @brief Rank-4 bundles over CP^2 and the S^3-bundles they define.
 *
 * Each oriented rank-4 bundle over CP^2 is xi_{k,l} (w2 = 0) or xi'_{k,l}
 * (w2 != 0), pulled back from k*alpha + l*beta over S^4. The sphere-bundle
 * total spaces are written M_{k,l} and M'_{k,l}.
 *
 * Watch the crossover: the spin bundle xi_{k,l} has a NONSPIN total space
 * M_{k,l}, while the nonspin bundle xi'_{k,l} has a SPIN total space M'_{k,l}
 * (CP^2 itself is nonspin). Use manifold_is_spin() rather than reasoning
 * from the bundle.
 */

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "ks7/errors.hpp"
#include "ks7/exactq.hpp"

namespace ks7 {

/// Which bundle family a total space comes from.
///   Xi      : xi_{k,l},  spin bundle,    total space M_{k,l}  is nonspin.
///   XiPrime : xi'_{k,l}, nonspin bundle, total space M'_{k,l} is spin.
enum class Family { Xi, XiPrime };

struct BundleParams {
  Integer k;  // coefficient of alpha
  Integer l;  // coefficient of beta, the Euler number
  Family family = Family::Xi;

  friend bool operator==(const BundleParams&, const BundleParams&) = default;
};

inline BundleParams nonspin_manifold(Integer k, Integer l) { return {std::move(k), std::move(l), Family::Xi}; }
inline BundleParams spin_manifold(Integer k, Integer l) { return {std::move(k), std::move(l), Family::XiPrime}; }

inline bool manifold_is_spin(Family f) { return f == Family::XiPrime; }
inline bool manifold_is_spin(const BundleParams& p) { return manifold_is_spin(p.family); }

/// Coefficients of w_{CP^2} in p1 and e.
struct CharClasses {
  Integer p1_coeff;
  Integer e_coeff;

  friend bool operator==(const CharClasses&, const CharClasses&) = default;
};

inline CharClasses char_classes(const BundleParams& p) {
  Integer p1 = 4 * p.k - 2 * p.l;
  if (p.family == Family::XiPrime) p1 += 1;
  return {p1, p.l};
}

/// Order of H^4(M; Z) = Z_|l|. std::nullopt stands for l = 0, where H^4 = Z
/// (cohomology ring of CP^2 x S^3).
inline std::optional<Integer> h4_order(const BundleParams& p) {
  if (p.l.is_zero()) return std::nullopt;
  return abs(p.l);
}

/// |pi_4(M'_{k,l})|: Z_2 for even l, trivial for odd l. Only known for the
/// spin total spaces.
inline int pi4_order(const BundleParams& p) {
  if (p.family != Family::XiPrime) {
    throw unsupported_error("pi_4 is only tabulated for the spin total spaces M'(k,l)");
  }
  return (p.l % 2).is_zero() ? 2 : 1;
}

inline std::string_view family_name(Family f) { return f == Family::Xi ? "XI" : "XI_PRIME"; }

/// "M" or "M'", the short form used on the command line.
inline std::string_view family_symbol(Family f) { return f == Family::Xi ? "M" : "M'"; }

inline Family parse_family(std::string_view s) {
  if (s == "XI" || s == "M" || s == "xi") return Family::Xi;
  if (s == "XI_PRIME" || s == "M'" || s == "xi'" || s == "xi_prime") return Family::XiPrime;
  throw parse_error("unknown family '" + std::string(s) + "' (expected M or M')");
}

/// "M(k,l)" or "M'(k,l)".
inline std::string to_spec(const BundleParams& p) {
  return std::string(family_symbol(p.family)) + "(" + p.k.str() + "," + p.l.str() + ")";
}

/// Parses "M(k,l)" / "M'(k,l)". Whitespace around the integers is tolerated.
inline BundleParams parse_manifold(std::string_view text) {
  const auto fail = [&]() -> parse_error {
    return parse_error("cannot parse manifold '" + std::string(text) + "' (expected M(k,l) or M'(k,l))");
  };
  const auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  Family family;
  if (s.starts_with("M'(")) {
    family = Family::XiPrime;
    s.remove_prefix(3);
  } else if (s.starts_with("M(")) {
    family = Family::Xi;
    s.remove_prefix(2);
  } else {
    throw fail();
  }
  if (!s.ends_with(')')) throw fail();
  s.remove_suffix(1);
  const auto comma = s.find(',');
  if (comma == std::string_view::npos || s.find(',', comma + 1) != std::string_view::npos) throw fail();
  try {
    return {detail::parse_integer(trim(s.substr(0, comma))), detail::parse_integer(trim(s.substr(comma + 1))),
            family};
  } catch (const parse_error&) {
    throw fail();
  }
}

inline std::ostream& operator<<(std::ostream& os, const BundleParams& p) { return os << to_spec(p); }
inline std::ostream& operator<<(std::ostream& os, Family f) { return os << family_name(f); }

}  // namespace ks7
