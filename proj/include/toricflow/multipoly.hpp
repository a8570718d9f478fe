#pragma once

#include <map>
#include <string>
#include <vector>

#include "toricflow/quotient.hpp"
#include "toricflow/unipoly.hpp"

namespace toricflow {

/// Sparse polynomial in x_1, ..., x_n over Q. Terms are keyed by exponent
/// vector; zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t i);
  static MultiPoly monomial(const Exponent& e, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of x^e (zero if absent).
  Rational coeff(const Exponent& e) const;

  /// Total degree; -1 for zero.
  long degree() const;
  /// Highest power of x_i occurring; -1 for zero.
  long degree_in(std::size_t i) const;
  bool involves(std::size_t i) const { return degree_in(i) > 0; }

  void add_term(const Exponent& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  MultiPoly pow(unsigned k) const;

  /// Replace x_i by q and expand.
  MultiPoly substitute(std::size_t i, const MultiPoly& q) const;
  /// d/dx_i.
  MultiPoly partial(std::size_t i) const;

  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// p(x_1(t), ..., x_n(t)).
UniPoly evaluate_on_curve(const MultiPoly& p, const std::vector<UniPoly>& curve);

/// q(p) for univariate q, i.e. sum_k q_k p^k.
MultiPoly compose(const UniPoly& q, const MultiPoly& p);

}  // namespace toricflow
