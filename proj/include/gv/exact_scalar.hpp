#pragma once

#include <map>
#include <string>

#include "gv/errors.hpp"
#include "gv/rat.hpp"

namespace gv {

/// A nonzero value sign * prod_p p^(e_p) * pi^m with e_p half-integers and
/// m an integer, or zero. Closed under product and quotient; no addition.
///
/// Exponents are stored doubled (e2 = 2*e_p) so they stay integral.
class ExactScalar {
 public:
  ExactScalar() : sign_(1) {}  // one

  static ExactScalar zero();
  static ExactScalar one() { return ExactScalar(); }
  static ExactScalar integer(long v);
  static ExactScalar from_rational(const Rat& v);
  static ExactScalar pi_power(long m);
  /// p^(e2/2) for a prime p.
  static ExactScalar prime_power(long p, long e2);
  /// sqrt of a positive rational, e.g. sqrt(1/2) = 2^(-1/2).
  static ExactScalar sqrt_rational(const Rat& v);

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  long pi_exponent() const { return pi_; }
  const std::map<long, long>& prime_exponents2() const { return e2_; }

  /// True when the value is rational (all exponents even, no pi part).
  bool is_rational() const;
  Rat rational_value() const;  // throws unless is_rational()

  ExactScalar operator*(const ExactScalar& o) const;
  ExactScalar operator/(const ExactScalar& o) const;
  ExactScalar inverse() const;
  ExactScalar operator-() const;
  ExactScalar abs() const;
  ExactScalar pow(long k) const;
  /// v^(k/2); requires a nonnegative value unless k is even.
  ExactScalar pow_half(long k) const;

  bool operator==(const ExactScalar& o) const;
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }

  /// Canonical rendering, e.g. "-2^19*3^(69/2)*7^4*11^16*13*pi^-16".
  std::string str() const;
  static ExactScalar parse(const std::string& s);

  /// Decimal approximation with the given number of fractional digits.
  std::string decimal(int digits) const;

  std::string json() const;  // {"sign":..,"primes":{..},"pi":..}

 private:
  int sign_;                 // -1, 0, +1; zero has empty e2_ and pi_ = 0
  std::map<long, long> e2_;  // prime -> doubled exponent, never 0
  long pi_ = 0;

  void mul_prime(long p, long e2);
};

}  // namespace gv
