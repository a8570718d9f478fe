#include "toricflow/cone.hpp"

#include <algorithm>
#include <numeric>

#include "toricflow/errors.hpp"

namespace toricflow {

SimplicialCone SimplicialCone::build(const std::vector<LatticeVector>& rays) {
  const std::size_t n = rays.size();
  if (n == 0) throw DimensionError("cone needs at least one ray");
  SimplicialCone c;
  for (const auto& r : rays) {
    if (r.size() != n) throw DimensionError("cone needs n rays of length n");
    if (r.is_zero()) throw DomainError("zero ray");
    c.rays_.push_back(primitive_part(r));
  }
  Integer det = determinant(c.ray_matrix());
  if (det == 0) throw NotSimplicialError("rays dependent");
  c.det_abs_ = abs(det);
  c.inverse_ = rational_inverse(c.ray_matrix());
  return c;
}

std::vector<Integer> SimplicialCone::pairings(const LatticeVector& m) const {
  std::vector<Integer> p;
  p.reserve(rank());
  for (const auto& r : rays_) p.push_back(pair(m, r));
  return p;
}

Integer SimplicialCone::height(const LatticeVector& m) const {
  Integer h = 0;
  for (const auto& r : rays_) h += pair(m, r);
  return h;
}

bool SimplicialCone::in_dual(const LatticeVector& m) const {
  return std::all_of(rays_.begin(), rays_.end(), [&](const LatticeVector& r) { return pair(m, r) >= 0; });
}

std::optional<LatticeVector> SimplicialCone::from_pairings(const std::vector<Integer>& p) const {
  const std::size_t n = rank();
  if (p.size() != n) throw DimensionError("pairing vector length differs from rank");
  // R^T m = p, so m_k = sum_j (R^{-1})_{jk} p_j.
  std::vector<Integer> m(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) s += inverse_[j][k] * p[j];
    if (s.get_den() != 1) return std::nullopt;
    m[k] = s.get_num();
  }
  return LatticeVector(std::move(m));
}

std::vector<Face> faces(const SimplicialCone& c, std::size_t k) {
  const std::size_t n = c.rank();
  if (k > n) throw DomainError("face dimension out of range");
  std::vector<Face> out;
  Face cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  for (;;) {
    out.push_back(cur);
    // next combination
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool is_face_regular(const SimplicialCone& c, const Face& face) {
  std::vector<LatticeVector> vs;
  for (std::size_t i : face) {
    if (i >= c.rank()) throw DomainError("face index out of range");
    vs.push_back(c.ray(i));
  }
  return extends_to_basis(vs);
}

std::size_t smooth_in_codim(const SimplicialCone& c) {
  std::size_t k = 0;
  for (std::size_t d = 1; d <= c.rank(); ++d) {
    auto fs = faces(c, d);
    bool all = std::all_of(fs.begin(), fs.end(), [&](const Face& f) { return is_face_regular(c, f); });
    if (!all) break;
    k = d;
  }
  return k;
}

namespace {

struct ByHeight {
  const SimplicialCone& cone;
  bool operator()(const LatticeVector& a, const LatticeVector& b) const {
    Integer ha = cone.height(a), hb = cone.height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  }
};

}  // namespace

DualConeData dual_cone(const SimplicialCone& c) {
  const std::size_t n = c.rank();
  auto inv = rational_inverse(c.ray_matrix());

  DualConeData out;
  std::vector<Integer> scale(n);  // scale[i] = <dual_rays[i], rho_i>
  for (std::size_t i = 0; i < n; ++i) {
    Integer den_lcm = 1;
    for (const auto& x : inv[i]) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> row(n);
    for (std::size_t k = 0; k < n; ++k) {
      Rational v = inv[i][k] * den_lcm;
      row[k] = v.get_num();
    }
    out.dual_rays.push_back(primitive_part(LatticeVector(std::move(row))));
    scale[i] = pair(out.dual_rays[i], c.ray(i));
  }

  // M / (sum Z v_i) via Smith normal form of the dual-ray row matrix V:
  // U V W = D, so m -> m W identifies the quotient with prod Z/d_k.
  IntMatrix v = IntMatrix::from_rows(out.dual_rays);
  auto snf = smith_normal_form(v);
  auto w_inv = rational_inverse(snf.right);

  std::vector<LatticeVector> candidates = out.dual_rays;
  std::vector<Integer> digit(n, 0);
  for (;;) {
    // representative a W^{-1}
    std::vector<Integer> m(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k) s += digit[k] * w_inv[k][j];
      m[j] = s.get_num();
    }
    LatticeVector pt(std::move(m));
    // Shift into the half-open parallelepiped: 0 <= <pt, rho_i> < scale[i].
    for (std::size_t i = 0; i < n; ++i) {
      Integer q;
      Integer p = pair(pt, c.ray(i));
      mpz_fdiv_q(q.get_mpz_t(), p.get_mpz_t(), scale[i].get_mpz_t());
      if (q != 0) pt -= q * out.dual_rays[i];
    }
    if (!pt.is_zero()) candidates.push_back(std::move(pt));

    std::size_t k = 0;
    while (k < n) {
      ++digit[k];
      if (digit[k] < snf.diag[k]) break;
      digit[k] = 0;
      ++k;
    }
    if (k == n) break;
  }

  std::sort(candidates.begin(), candidates.end(), ByHeight{c});
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // x is reducible iff x - y is a nonzero dual point for another candidate y.
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    bool reducible = false;
    for (std::size_t b = 0; b < candidates.size() && !reducible; ++b) {
      if (a == b) continue;
      LatticeVector diff = candidates[a] - candidates[b];
      reducible = !diff.is_zero() && c.in_dual(diff);
    }
    if (!reducible) out.hilbert_basis.push_back(candidates[a]);
  }
  return out;
}

std::vector<LatticeVector> face_semigroup_basis(const SimplicialCone& c, const DualConeData& dual,
                                                const Face& face) {
  // A face of the dual semigroup: its irreducibles are the irreducibles of
  // the whole semigroup that lie in it.
  std::vector<LatticeVector> out;
  for (const auto& m : dual.hilbert_basis) {
    bool orth = std::all_of(face.begin(), face.end(), [&](std::size_t i) { return pair(m, c.ray(i)) == 0; });
    if (orth) out.push_back(m);
  }
  return out;
}

FacetSemigroup facet_semigroup(const SimplicialCone& c, std::size_t i) {
  if (i >= c.rank()) throw DomainError("ray index out of range");
  return {i, face_semigroup_basis(c, dual_cone(c), Face{i})};
}

}  // namespace toricflow
