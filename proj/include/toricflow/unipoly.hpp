#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toricflow/lattice.hpp"

namespace toricflow {

/// Univariate polynomial in the curve parameter t with rational
/// coefficients, stored low degree first with no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t k);
  static UniPoly t() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& lead() const { return c_.back(); }

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  UniPoly pow(unsigned k) const;
  Rational operator()(const Rational& x) const;
  UniPoly derivative() const;
  /// p(q(t)).
  UniPoly compose(const UniPoly& q) const;
  /// Scaled so the leading coefficient is 1 (zero stays zero).
  UniPoly monic() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder. Throws DomainError when dividing by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// s*a + u*b = g with g = gcd(a, b) monic, deg s < deg b - deg g.
struct ExtendedGcd {
  UniPoly g, s, u;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

}  // namespace toricflow
