#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricflow/lattice.hpp"

namespace toricflow {

/// A set of ray indices (0-based, increasing) spanning a face of a simplicial cone.
using Face = std::vector<std::size_t>;

/// Full-dimensional simplicial cone in N_R given by n primitive,
/// linearly independent ray generators.
class SimplicialCone {
 public:
  /// Validates and normalizes the rays to primitive representatives.
  /// Throws DimensionError (shape), DomainError (zero ray) or
  /// NotSimplicialError (dependent rays).
  static SimplicialCone build(const std::vector<LatticeVector>& rays);

  std::size_t rank() const { return rays_.size(); }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const LatticeVector& ray(std::size_t i) const { return rays_.at(i); }
  const Integer& det_abs() const { return det_abs_; }

  /// Integer matrix whose columns are the rays.
  IntMatrix ray_matrix() const { return IntMatrix::from_columns(rays_); }

  /// (<m, rho_1>, ..., <m, rho_n>).
  std::vector<Integer> pairings(const LatticeVector& m) const;

  /// sum_j <m, rho_j>; strictly positive on the dual cone minus the origin.
  Integer height(const LatticeVector& m) const;

  bool in_dual(const LatticeVector& m) const;

  /// The m in M with the given pairing vector, if it is integral.
  std::optional<LatticeVector> from_pairings(const std::vector<Integer>& p) const;

 private:
  std::vector<LatticeVector> rays_;
  Integer det_abs_;
  std::vector<std::vector<Rational>> inverse_;  // inverse of ray_matrix()
};

/// All ray subsets of size k, lexicographically. Throws DomainError unless 0 <= k <= n.
std::vector<Face> faces(const SimplicialCone& c, std::size_t k);

/// The face's rays extend to a basis of N.
bool is_face_regular(const SimplicialCone& c, const Face& face);

/// Largest k such that every face of dimension <= k is regular.
std::size_t smooth_in_codim(const SimplicialCone& c);

struct DualConeData {
  std::vector<LatticeVector> dual_rays;      // dual_rays[i] pairs positively with rho_i only
  std::vector<LatticeVector> hilbert_basis;  // sorted by (height, lex)
};

/// Dual rays and the Hilbert basis of the dual semigroup, computed from the
/// lattice points of the half-open fundamental parallelepiped of the dual rays.
DualConeData dual_cone(const SimplicialCone& c);

struct FacetSemigroup {
  std::size_t ray_index = 0;
  std::vector<LatticeVector> hilbert_basis;
};

/// Hilbert basis of tau_i = rho_i^perp cap dual cone cap M.
FacetSemigroup facet_semigroup(const SimplicialCone& c, std::size_t i);

/// Hilbert basis of the semigroup of dual points orthogonal to every ray of
/// `face` (tau_l cap tau_j for a 2-face).
std::vector<LatticeVector> face_semigroup_basis(const SimplicialCone& c, const DualConeData& dual,
                                                const Face& face);

}  // namespace toricflow
