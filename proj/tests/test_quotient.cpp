#include <doctest.h>

#include "support.hpp"
#include "toricflow/errors.hpp"

using namespace toricflow;
using namespace fixture;

namespace {

// All group elements as weight vectors, enumerated from the generators.
std::set<std::vector<long>> group_elements(const QuotientPresentation& p) {
  std::set<std::vector<long>> out{std::vector<long>(p.rank(), 0)};
  long big = p.group_order().get_si();
  for (const auto& g : p.characters()) {
    std::set<std::vector<long>> next;
    long ord = g.order.get_si();
    for (const auto& e : out)
      for (long k = 0; k < ord; ++k) {
        std::vector<long> w = e;
        // common denominator: scale into Z / big
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = (w[j] + k * g.weights[j].get_si() * (big / ord)) % big;
        next.insert(w);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("presentations of the fixture cones") {
  auto o = QuotientPresentation::build(orthant(4));
  CHECK(o.group_order() == 1);
  CHECK(o.characters().empty());

  auto p = QuotientPresentation::build(order5());
  CHECK(p.group_order() == 5);
  CHECK(p.group_order() == p.cone().det_abs());
  REQUIRE(p.characters().size() == 1);
  const auto& g = p.characters()[0];
  CHECK(g.order == 5);
  Integer s = 0;
  for (const auto& w : g.weights) s += w;
  CHECK(s % 5 == 0);
  CHECK(p.special_linear());
  auto expect = oracle::smith_diagonal(plain(order5_rays()));
  CHECK(expect.back() == 5);
}

TEST_CASE("group order equals the Smith product and the determinant") {
  for (const auto& rays : std::vector<std::vector<LatticeVector>>{
           order5_rays(), order2_rays(), {{1, 0}, {1, 2}}, {{1, 0, 0}, {0, 1, 0}, {1, 1, 3}}, {{2, 1}, {1, 3}}}) {
    auto p = QuotientPresentation::build(SimplicialCone::build(rays));
    long prod = 1;
    for (auto d : oracle::smith_diagonal(plain(rays))) prod *= d;
    CHECK(p.group_order() == prod);
    CHECK(p.group_order() == p.cone().det_abs());
    CHECK(group_elements(p).size() == static_cast<std::size_t>(prod));
  }
}

TEST_CASE("special linear is reported, not assumed") {
  // 1/5 (1, 3) in dimension 2 is not in SL_2.
  auto p = QuotientPresentation::build(SimplicialCone::build({{1, 0}, {2, 5}}));
  CHECK(p.group_order() == 5);
  CHECK_FALSE(p.special_linear());
}

TEST_CASE("pullbacks of the dual Hilbert basis are invariant") {
  for (const auto& rays : {order5_rays(), order2_rays(), orthant_rays(4)}) {
    auto p = QuotientPresentation::build(SimplicialCone::build(rays));
    for (const auto& m : p.dual().hilbert_basis) {
      auto im = pullback_monomial(p, m);
      CHECK(p.is_invariant(im.exponents));
      for (const auto& g : p.characters()) CHECK(p.weight(im.exponents, g) % g.order == 0);
      oracle::Vec a(im.exponents.begin(), im.exponents.end());
      CHECK(oracle::monomial_invariant(a, plain(rays)));
      CHECK(a == oracle::pairings(plain(m), plain(rays)));
    }
  }
}

TEST_CASE("pullback_monomial") {
  auto o = QuotientPresentation::build(orthant(4));
  CHECK(pullback_monomial(o, {1, 0, 0, 0}).exponents == Exponent{1, 0, 0, 0});
  CHECK(pullback_monomial(o, {0, 0, 0, 0}).exponents == Exponent{0, 0, 0, 0});
  auto p = QuotientPresentation::build(order5());
  auto im = pullback_monomial(p, {0, 0, 0, 1});
  CHECK(im.exponents == Exponent{0, 0, 0, 5});
  CHECK(p.is_invariant(im.exponents));
  CHECK_THROWS_AS(pullback_monomial(p, {-1, 0, 0, 0}), DomainError);
}

TEST_CASE("invariant generators") {
  auto o = QuotientPresentation::build(orthant(4));
  std::set<Exponent> got;
  for (const auto& g : o.invariant_generators()) got.insert(g.exponents);
  CHECK(got == std::set<Exponent>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
}

TEST_CASE("invariant generators span every invariant monomial up to degree 10") {
  for (const auto& rays : {order5_rays(), order2_rays()}) {
    auto p = QuotientPresentation::build(SimplicialCone::build(rays));
    std::vector<oracle::Vec> gens;
    for (const auto& g : p.invariant_generators()) gens.push_back(oracle::Vec(g.exponents.begin(), g.exponents.end()));
    // Invariant monomials in exponent space, decomposed greedily by height.
    std::set<oracle::Vec> inv;
    for (const auto& a : oracle::exponents_up_to(4, 10))
      if (std::any_of(a.begin(), a.end(), [](long long x) { return x != 0; }) && oracle::monomial_invariant(a, plain(rays)))
        inv.insert(a);
    CHECK(!inv.empty());
    // decomposition in exponent space: heights are total degrees
    oracle::Mat unit{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    CHECK(oracle::decomposes(inv, gens, unit));
    for (const auto& a : inv) {
      Exponent e(a.begin(), a.end());
      CHECK(p.is_invariant(e));
    }
  }
}

TEST_CASE("weights detect non-invariant monomials") {
  auto p = QuotientPresentation::build(order5());
  for (const auto& a : oracle::exponents_up_to(4, 6)) {
    Exponent e(a.begin(), a.end());
    CHECK(p.is_invariant(e) == oracle::monomial_invariant(a, plain(order5_rays())));
  }
}

TEST_CASE("no nontrivial group element fixes a coordinate hyperplane pointwise") {
  for (const auto& rays : {order5_rays(), order2_rays()}) {
    auto p = QuotientPresentation::build(SimplicialCone::build(rays));
    for (const auto& w : group_elements(p)) {
      std::size_t support = std::count_if(w.begin(), w.end(), [](long x) { return x != 0; });
      if (support > 0) CHECK(support != 1);
    }
  }
}

TEST_CASE("E locus") {
  CHECK(in_E_locus({false, false, false, false}));
  CHECK(in_E_locus({false, true, false, false}));
  CHECK_FALSE(in_E_locus({true, true, false, false}));
}
