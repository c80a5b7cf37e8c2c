#pragma once

/**
 * @file exactq.hpp
 * @brief Exact rationals and the group Q/Z.
 *
 * Rational keeps (num, den) reduced with den > 0 after every operation, so
 * equality is structural. QmodZ stores the representative in [0, 1).
 * Big integers come from Boost.Multiprecision (cpp_int backend, header-only).
 */

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "ks7/errors.hpp"

namespace ks7 {

// Expression templates off: every arithmetic result is a plain Integer.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

namespace detail {

inline std::strong_ordering compare(const Integer& a, const Integer& b) {
  const int c = a.compare(b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Accepts an optional leading '-' followed by at least one decimal digit.
inline Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw parse_error("expected an integer, got '" + std::string(text) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw parse_error("expected an integer, got '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

}  // namespace detail

/// Floor division for d > 0.
inline Integer floor_div(const Integer& n, const Integer& d) {
  Integer q = n / d;
  if (n.sign() < 0 && q * d != n) --q;
  return q;
}

/// Least nonnegative residue of a modulo |m|; m must be nonzero.
inline Integer mod_floor(const Integer& a, const Integer& m) {
  if (m.is_zero()) throw domain_error("modulus must be nonzero");
  const Integer am = abs(m);
  Integer r = a % am;
  if (r.sign() < 0) r += am;
  return r;
}

class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  template <std::integral T>
  Rational(T n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw domain_error("rational with zero denominator");
    normalize();
  }

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  Integer floor() const { return floor_div(num_, den_); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return detail::compare(a.num_ * b.den_, b.num_ * a.den_);
  }

  /// "num/den", or just "num" when the denominator is 1.
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  /// Inverse of str(); also accepts non-reduced input such as "4/8".
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_integer(text));
    return Rational(detail::parse_integer(text.substr(0, slash)),
                    detail::parse_integer(text.substr(slash + 1)));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void normalize() {
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    Integer g = gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Integer num_;
  Integer den_;
};

inline Rational rat(Integer num, Integer den) { return Rational(std::move(num), std::move(den)); }

/// An element of Q/Z, represented by the unique rational in [0, 1).
class QmodZ {
 public:
  QmodZ() = default;
  explicit QmodZ(const Rational& r) : rep_(r - Rational(r.floor())) {}

  const Rational& rep() const { return rep_; }

  /// Additive order; the reduced denominator of the representative.
  const Integer& order() const { return rep_.den(); }
  bool is_zero() const { return rep_.is_zero(); }

  QmodZ operator-() const { return QmodZ(-rep_); }
  friend QmodZ operator+(const QmodZ& a, const QmodZ& b) { return QmodZ(a.rep_ + b.rep_); }
  friend QmodZ operator-(const QmodZ& a, const QmodZ& b) { return QmodZ(a.rep_ - b.rep_); }
  friend QmodZ operator*(const Integer& n, const QmodZ& a) { return QmodZ(Rational(n) * a.rep_); }

  friend bool operator==(const QmodZ&, const QmodZ&) = default;
  friend std::strong_ordering operator<=>(const QmodZ& a, const QmodZ& b) { return a.rep_ <=> b.rep_; }

  std::string str() const { return rep_.str(); }

  /// Parses "p/q" and checks 0 <= p/q < 1.
  static QmodZ parse(std::string_view text) {
    Rational r = Rational::parse(text);
    if (r.sign() < 0 || r >= Rational(1)) {
      throw parse_error("Q/Z representative out of [0,1): '" + std::string(text) + "'");
    }
    return QmodZ(r);
  }

  friend std::ostream& operator<<(std::ostream& os, const QmodZ& q) { return os << q.str(); }

 private:
  Rational rep_;
};

inline QmodZ qz(const Rational& r) { return QmodZ(r); }
inline QmodZ qz_add(const QmodZ& a, const QmodZ& b) { return a + b; }
inline QmodZ qz_sub(const QmodZ& a, const QmodZ& b) { return a - b; }
inline QmodZ qz_scale(const QmodZ& a, const Integer& n) { return n * a; }
inline bool qz_eq(const QmodZ& a, const QmodZ& b) { return a == b; }

/// m | a, insensitive to the sign of m. A zero modulus means a == 0, which
/// turns "k = k' (mod 0)" into plain equality.
inline bool divides(const Integer& m, const Integer& a) {
  if (m.is_zero()) return a.is_zero();
  return (a % m).is_zero();
}

}  // namespace ks7
