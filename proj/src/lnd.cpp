#include "toricflow/lnd.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "toricflow/errors.hpp"

namespace toricflow {

DemazureRoot make_root(const SimplicialCone& c, std::size_t i, const LatticeVector& e) {
  if (i >= c.rank()) throw DomainError("ray index out of range");
  auto p = c.pairings(e);
  if (p[i] != -1) throw DomainError("root must pair to -1 with its ray");
  Exponent lifted(c.rank(), 0);
  for (std::size_t j = 0; j < c.rank(); ++j) {
    if (j == i) continue;
    if (p[j] < 0) throw DomainError("root pairs negatively with another ray");
    if (!p[j].fits_ulong_p() || p[j].get_ui() > UINT32_MAX) throw DomainError("root exponent too large");
    lifted[j] = static_cast<std::uint32_t>(p[j].get_ui());
  }
  return {i, c.ray(i), e, std::move(lifted)};
}

std::vector<DemazureRoot> enumerate_roots(const SimplicialCone& c, std::size_t i, unsigned height_bound) {
  if (i >= c.rank()) throw DomainError("ray index out of range");
  const std::size_t n = c.rank();
  std::vector<DemazureRoot> out;
  std::vector<Integer> p(n, 0);
  p[i] = -1;
  // odometer over the other pairings
  for (;;) {
    if (auto e = c.from_pairings(p)) out.push_back(make_root(c, i, *e));
    std::size_t k = n;
    while (k-- > 0) {
      if (k == i) continue;
      if (p[k] < height_bound) {
        ++p[k];
        break;
      }
      p[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

DerivationImage apply_derivation(const DemazureRoot& root, const LatticeVector& m) {
  return {pair(m, root.ray), m + root.e};
}

MultiPoly LiftedField::multiplier() const { return coefficient * MultiPoly::monomial(root.lifted_exponent); }

MultiPoly LiftedField::apply(const MultiPoly& p) const { return multiplier() * p.partial(root.ray_index); }

LiftedField lift_field(const QuotientPresentation& p, const DemazureRoot& root, const std::optional<MultiPoly>& g) {
  const std::size_t n = p.rank();
  if (root.lifted_exponent.size() != n) throw DimensionError("root rank differs from presentation");
  if (!g) return {root, MultiPoly::constant(n, 1)};
  if (g->nvars() != n) throw DimensionError("kernel coefficient in wrong number of variables");
  if (g->involves(root.ray_index)) throw DomainError("kernel coefficient involves the flowing coordinate");
  for (const auto& [e, c] : g->terms())
    if (!p.is_invariant(e)) throw DomainError("kernel coefficient has a non-invariant monomial");
  return {root, *g};
}

MultiPoly flow_on_polynomial(const FlowStep& step, const MultiPoly& p) {
  const std::size_t i = step.field.root.ray_index;
  if (!p.involves(i)) return p;
  MultiPoly image = MultiPoly::variable(p.nvars(), i) + step.time * step.field.multiplier();
  return p.substitute(i, image);
}

MultiPoly word_apply(const AutomorphismWord& word, const MultiPoly& p) {
  // (p o phi_k o ... o phi_1): substitute the last step first.
  MultiPoly out = p;
  for (auto it = word.steps.rbegin(); it != word.steps.rend(); ++it) out = flow_on_polynomial(*it, out);
  return out;
}

AutomorphismWord word_inverse(const AutomorphismWord& word) {
  AutomorphismWord inv;
  for (auto it = word.steps.rbegin(); it != word.steps.rend(); ++it) {
    FlowStep s = *it;
    s.time = -s.time;
    inv.steps.push_back(std::move(s));
  }
  return inv;
}

AutomorphismWord concatenate(const AutomorphismWord& first, const AutomorphismWord& second) {
  AutomorphismWord out = first;
  out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
  return out;
}

std::vector<MultiPoly> word_coordinates(const AutomorphismWord& word, std::size_t n) {
  std::vector<MultiPoly> out;
  for (std::size_t j = 0; j < n; ++j) out.push_back(word_apply(word, MultiPoly::variable(n, j)));
  return out;
}

MultiPoly jacobian_determinant(const std::vector<MultiPoly>& map) {
  const std::size_t n = map.size();
  std::vector<std::vector<MultiPoly>> jac(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) jac[r].push_back(map[r].partial(c));

  // Laplace expansion along rows, memoized on the set of used columns.
  std::map<unsigned long, MultiPoly> memo;
  std::function<MultiPoly(std::size_t, unsigned long)> minor = [&](std::size_t row, unsigned long used) -> MultiPoly {
    if (row == n) return MultiPoly::constant(n, 1);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    MultiPoly acc(n);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (1ul << c)) continue;
      if (!jac[row][c].is_zero()) {
        MultiPoly term = jac[row][c] * minor(row + 1, used | (1ul << c));
        if (sign > 0) acc += term;
        else acc -= term;
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return minor(0, 0);
}

bool is_unit_triangular(const FlowStep& step, std::size_t n) {
  const std::size_t i = step.field.root.ray_index;
  MultiPoly mult = step.field.multiplier();
  if (mult.nvars() != n || mult.involves(i)) return false;
  AutomorphismWord w{{step}};
  auto coords = word_coordinates(w, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    if (coords[j] != MultiPoly::variable(n, j)) return false;
  }
  return coords[i].partial(i) == MultiPoly::constant(n, 1);
}

bool verify_descends(const QuotientPresentation& p, const LiftedField& field) {
  for (const auto& gen : p.invariant_generators()) {
    MultiPoly image = field.apply(MultiPoly::monomial(gen.exponents));
    for (const auto& [e, c] : image.terms())
      if (!p.is_invariant(e)) return false;
  }
  return true;
}

}  // namespace toricflow
