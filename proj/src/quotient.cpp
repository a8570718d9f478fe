#include "toricflow/quotient.hpp"

#include <algorithm>

#include "toricflow/errors.hpp"

namespace toricflow {

QuotientPresentation QuotientPresentation::build(const SimplicialCone& c) {
  QuotientPresentation p;
  p.cone_ = c;
  // t in G iff prod_j t_j^{<e_k*, rho_j>} = 1 for every k, i.e. R w = 0 mod d
  // with R the ray-column matrix. With U R V = D the solutions are spanned
  // by the columns of V reduced modulo the matching diagonal entry.
  auto snf = smith_normal_form(c.ray_matrix());
  p.group_order_ = 1;
  for (std::size_t k = 0; k < snf.diag.size(); ++k) {
    const Integer& d = snf.diag[k];
    p.group_order_ *= d;
    if (d == 1) continue;
    GroupCharacter g{d, {}};
    for (std::size_t j = 0; j < c.rank(); ++j) {
      Integer w;
      mpz_fdiv_r(w.get_mpz_t(), snf.right(j, k).get_mpz_t(), d.get_mpz_t());
      g.weights.push_back(w);
    }
    p.characters_.push_back(std::move(g));
  }

  p.dual_ = dual_cone(c);
  for (const auto& m : p.dual_.hilbert_basis) p.generators_.push_back(pullback_monomial(p, m));
  for (std::size_t i = 0; i < c.rank(); ++i) p.facet_generators_.push_back(p.face_generators(Face{i}));
  return p;
}

Integer QuotientPresentation::weight(const Exponent& a, const GroupCharacter& g) const {
  if (a.size() != g.weights.size()) throw DimensionError("exponent length differs from rank");
  Integer s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += g.weights[j] * a[j];
  mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), g.order.get_mpz_t());
  return s;
}

bool QuotientPresentation::is_invariant(const Exponent& a) const {
  return std::all_of(characters_.begin(), characters_.end(),
                     [&](const GroupCharacter& g) { return weight(a, g) == 0; });
}

bool QuotientPresentation::special_linear() const {
  return std::all_of(characters_.begin(), characters_.end(), [](const GroupCharacter& g) {
    Integer s = 0;
    for (const auto& w : g.weights) s += w;
    return mpz_divisible_p(s.get_mpz_t(), g.order.get_mpz_t()) != 0;
  });
}

std::vector<InvariantMonomial> QuotientPresentation::face_generators(const Face& face) const {
  std::vector<InvariantMonomial> out;
  for (const auto& m : face_semigroup_basis(cone_, dual_, face)) out.push_back(pullback_monomial(*this, m));
  return out;
}

InvariantMonomial pullback_monomial(const QuotientPresentation& p, const LatticeVector& m) {
  auto e = p.exponent(m);
  Exponent a;
  a.reserve(e.size());
  for (const auto& x : e) {
    if (x < 0) throw DomainError("negative exponent: m is outside the dual cone");
    if (!x.fits_ulong_p() || x.get_ui() > UINT32_MAX) throw DomainError("exponent too large");
    a.push_back(static_cast<std::uint32_t>(x.get_ui()));
  }
  return {m, std::move(a)};
}

bool in_E_locus(const std::vector<bool>& vanishing) {
  return std::count(vanishing.begin(), vanishing.end(), true) <= 1;
}

}  // namespace toricflow
