#pragma once

#include <optional>
#include <vector>

#include "toricflow/cone.hpp"
#include "toricflow/multipoly.hpp"
#include "toricflow/quotient.hpp"

namespace toricflow {

/// e in M with <e, rho_i> = -1 and <e, rho_j> >= 0 for j != i. The lifted
/// exponent is pi^*(chi^e) with its (negative) i-th entry replaced by 0.
struct DemazureRoot {
  std::size_t ray_index = 0;
  LatticeVector ray;  // rho_i
  LatticeVector e;
  Exponent lifted_exponent;

  friend bool operator==(const DemazureRoot&, const DemazureRoot&) = default;
};

/// Validates the root conditions. Throws DomainError when they fail.
DemazureRoot make_root(const SimplicialCone& c, std::size_t i, const LatticeVector& e);

/// All roots for ray i whose other pairings lie in [0, height_bound],
/// ordered lexicographically by pairing vector.
std::vector<DemazureRoot> enumerate_roots(const SimplicialCone& c, std::size_t i, unsigned height_bound);

/// d(chi^m) = <m, rho_i> chi^{m+e}; scale 0 means m is in the kernel.
struct DerivationImage {
  Integer scale;
  LatticeVector m;
};
DerivationImage apply_derivation(const DemazureRoot& root, const LatticeVector& m);

/// coefficient * x^{lifted_exponent} d/dx_i on A^n. The coefficient is a
/// pullback from k[D_i]: free of x_i and a sum of G-invariant monomials.
struct LiftedField {
  DemazureRoot root;
  MultiPoly coefficient;

  /// coefficient * x^{lifted_exponent}
  MultiPoly multiplier() const;
  /// The derivation applied to p.
  MultiPoly apply(const MultiPoly& p) const;
};

/// Field of a root, optionally a replica g * field. Throws DomainError if g
/// involves x_i or has a non-invariant monomial.
LiftedField lift_field(const QuotientPresentation& p, const DemazureRoot& root,
                       const std::optional<MultiPoly>& g = std::nullopt);

/// Flow of a field for the given time: x_i -> x_i + time * multiplier.
struct FlowStep {
  LiftedField field;
  Rational time = 1;
};

/// p composed with the flow map (substitution x_i -> x_i + time * multiplier).
MultiPoly flow_on_polynomial(const FlowStep& step, const MultiPoly& p);

/// Composition of flows. As a map of points, steps[0] is applied first.
struct AutomorphismWord {
  std::vector<FlowStep> steps;

  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }
};

/// p composed with the point map of the word.
MultiPoly word_apply(const AutomorphismWord& word, const MultiPoly& p);

/// Reversed steps with negated times.
AutomorphismWord word_inverse(const AutomorphismWord& word);

/// The point map of `first` followed by that of `second`.
AutomorphismWord concatenate(const AutomorphismWord& first, const AutomorphismWord& second);

/// Images of x_1, ..., x_n under the word's point map.
std::vector<MultiPoly> word_coordinates(const AutomorphismWord& word, std::size_t n);

/// Determinant of the Jacobian matrix of a polynomial map, by cofactor expansion.
MultiPoly jacobian_determinant(const std::vector<MultiPoly>& map);

/// The step's substitution fixes every x_j (j != i) and d(image of x_i)/dx_i == 1.
bool is_unit_triangular(const FlowStep& step, std::size_t n);

/// For every invariant generator, every monomial of field(pi^*(chi^m)) is G-invariant.
bool verify_descends(const QuotientPresentation& p, const LiftedField& field);

}  // namespace toricflow
