#pragma once

#include <stdexcept>
#include <string>

namespace ks7 {

/// An argument lies outside the mathematical domain of an operation
/// (zero denominator, l = 0 where the coboundary degenerates, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two manifolds were compared that no classification statement covers:
/// different families or different Euler numbers l.
class incomparable_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The request is well-formed but has no supported answer
/// (homotopy via invariants, pi_4 of the nonspin family, ...).
class unsupported_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed textual input (manifold specs, rationals, ranges).
class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ks7
