#pragma once

#include <cstdint>
#include <vector>

#include "toricflow/cone.hpp"
#include "toricflow/lattice.hpp"

namespace toricflow {

/// Exponent vector of a monomial in x_1, ..., x_n.
using Exponent = std::vector<std::uint32_t>;

/// Diagonal group element acting by x_j -> zeta^{weights[j]} x_j, where
/// zeta is a primitive root of unity of the given order.
struct GroupCharacter {
  Integer order;
  std::vector<Integer> weights;
};

/// pi^*(chi^m) = prod_l x_l^{<m, rho_l>}.
struct InvariantMonomial {
  LatticeVector m;
  Exponent exponents;
};

/// The finite diagonal group G with A^n / G = X_sigma together with the
/// monomial quotient map.
class QuotientPresentation {
 public:
  /// G = N / (Z rho_1 + ... + Z rho_n), one generator per nontrivial Smith
  /// elementary divisor of the ray matrix.
  static QuotientPresentation build(const SimplicialCone& c);

  const SimplicialCone& cone() const { return cone_; }
  std::size_t rank() const { return cone_.rank(); }
  const Integer& group_order() const { return group_order_; }
  const std::vector<GroupCharacter>& characters() const { return characters_; }
  const DualConeData& dual() const { return dual_; }

  /// (<m, rho_1>, ..., <m, rho_n>), signed.
  std::vector<Integer> exponent(const LatticeVector& m) const { return cone_.pairings(m); }

  /// Character weight of x^a under g, reduced into [0, order).
  Integer weight(const Exponent& a, const GroupCharacter& g) const;
  bool is_invariant(const Exponent& a) const;

  /// Every generator's weights sum to 0 modulo its order (G inside SL_n).
  bool special_linear() const;

  /// Pullbacks of the dual Hilbert basis; they generate k[X_sigma].
  const std::vector<InvariantMonomial>& invariant_generators() const { return generators_; }

  /// Pullbacks of the Hilbert basis of tau_i; none involves x_i.
  const std::vector<InvariantMonomial>& facet_generators(std::size_t i) const { return facet_generators_.at(i); }

  /// Pullbacks of the Hilbert basis of the semigroup orthogonal to a face.
  std::vector<InvariantMonomial> face_generators(const Face& face) const;

 private:
  SimplicialCone cone_;
  Integer group_order_;
  std::vector<GroupCharacter> characters_;
  DualConeData dual_;
  std::vector<InvariantMonomial> generators_;
  std::vector<std::vector<InvariantMonomial>> facet_generators_;
};

/// Exponent vector of pi^*(chi^m). Throws DomainError when m is outside the
/// dual cone (a negative exponent).
InvariantMonomial pullback_monomial(const QuotientPresentation& p, const LatticeVector& m);

/// At most one coordinate vanishes; sufficient for the image point to lie in
/// the regular locus.
bool in_E_locus(const std::vector<bool>& vanishing);

}  // namespace toricflow
