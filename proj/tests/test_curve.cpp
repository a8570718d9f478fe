#include <doctest.h>

#include "support.hpp"
#include "toricflow/errors.hpp"
#include "toricflow/solvers.hpp"

using namespace toricflow;
using namespace fixture;

namespace {

UniPoly T = UniPoly::t();

oracle::Poly plain_poly(const UniPoly& f) {
  oracle::Poly out;
  for (const auto& c : f.coeffs()) out.push_back(c.get_num().get_si());
  return out;
}

bool pairwise_resultants_nonzero(const std::vector<UniPoly>& cs) {
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (oracle::resultant(plain_poly(cs[i]), plain_poly(cs[j])) == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("curves") {
  CHECK_THROWS_AS(curve({UniPoly{1}, UniPoly{2}}), DomainError);
  auto c = curve({T, UniPoly{1, 0, 1}});
  CHECK(c.max_degree() == 2);
  auto r = c.reparameterized(2, 1);
  CHECK(r.coord(0) == UniPoly{1, 2});
  CHECK(r.coord(1) == UniPoly{2, 4, 4});
  CHECK_THROWS_AS(c.reparameterized(0, 1), DomainError);
}

TEST_CASE("check_regular_locus") {
  std::vector<UniPoly> a{T, UniPoly{1, 1}, UniPoly{2, 1}, UniPoly{3, 1}};
  CHECK(check_regular_locus(curve(a)));
  CHECK(pairwise_resultants_nonzero(a));
  CHECK_FALSE(check_regular_locus(curve({T, T, UniPoly{1}, UniPoly{1}})));
  std::vector<UniPoly> b{T, UniPoly{1, 0, 1}, UniPoly{-1, 1}, UniPoly{2}};
  CHECK(pairwise_resultants_nonzero(b));
  CHECK(check_regular_locus(curve(b)));
}

TEST_CASE("check_regular_locus agrees with resultants, is symmetric and reparameterization invariant") {
  Gen g(31);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<UniPoly> cs;
    for (int k = 0; k < 4; ++k) {
      std::vector<Rational> co;
      long d = g.range(1, 2);
      for (long j = 0; j <= d; ++j) co.push_back(g.range(-2, 2));
      if (co.back() == 0) co.back() = 1;
      cs.push_back(UniPoly(co));
    }
    auto c = curve(cs);
    bool expect = pairwise_resultants_nonzero(cs);
    CHECK(check_regular_locus(c) == expect);
    auto rev = cs;
    std::reverse(rev.begin(), rev.end());
    CHECK(check_regular_locus(curve(rev)) == expect);
    Rational a = g.rational(5);
    if (a == 0) a = 1;
    CHECK(check_regular_locus(c.reparameterized(a, g.rational(5))) == expect);
  }
}

TEST_CASE("check_regular_part") {
  auto o = QuotientPresentation::build(orthant(4));
  CHECK(check_regular_part(o, curve({T, T, T, UniPoly{1}})));
  auto p = QuotientPresentation::build(order5());
  // two shared zeros span a regular 2-face
  CHECK(check_regular_part(p, curve({T, T, UniPoly{1}, UniPoly{1, 1}})));
  // all four vanish at t = 0: the cone point is singular
  CHECK_FALSE(check_regular_part(p, curve({T, T, T, T.pow(2)})));
  CHECK(check_regular_part(p, curve({T, UniPoly{1, 1}, UniPoly{3, 1}, UniPoly{2, 0, 1}})));
}

TEST_CASE("kappa embedding") {
  auto o = QuotientPresentation::build(orthant(4));
  auto a = check_kappa_embedding(o, curve({T, T.pow(2), T.pow(3), T.pow(5)}), 0);
  CHECK(a.decision != Decision::yes);
  CHECK(extend_with_retry({T.pow(2), T.pow(3), T.pow(5)}, T, 16).status != ExtensionStatus::solved);

  auto b = check_kappa_embedding(o, curve({T, UniPoly{0, 1, 1}, T.pow(3), UniPoly{1, 1}}), 0);
  REQUIRE(b.decision == Decision::yes);
  // re-substitution identity over the facet generators
  auto c = curve({T, UniPoly{0, 1, 1}, T.pow(3), UniPoly{1, 1}});
  std::vector<UniPoly> vals;
  for (const auto& g : o.facet_generators(0)) vals.push_back(evaluate_on_curve(MultiPoly::monomial(g.exponents), c.coords()));
  CHECK(evaluate_words(vals, b.witness.words, b.witness.coefficients) == T);

  auto point = check_kappa_embedding(o, curve({T, UniPoly{2}, UniPoly{3}, UniPoly{4}}), 0);
  CHECK(point.decision == Decision::no);
}

TEST_CASE("psi birational") {
  auto o = QuotientPresentation::build(orthant(4));
  CHECK(check_psi_birational(o, curve({T, T.pow(2), T.pow(3), T.pow(5)}), {0, 1}));
  CHECK_FALSE(check_psi_birational(o, curve({T, T, UniPoly{1}, UniPoly{2}}), {0, 1}));
  UniPoly m{1, 0, 1};
  CHECK_FALSE(check_psi_birational(o, curve({T, UniPoly{1}, Rational(3) * m, Rational(-2) * m}), {0, 1}));
  // nonproportional but only even functions of t: not birational
  CHECK_FALSE(check_psi_birational(o, curve({T, UniPoly{1}, T.pow(2), T.pow(4) + UniPoly{1}}), {0, 1}));
  auto bad = QuotientPresentation::build(SimplicialCone::build({{1, 0, 0, 0}, {1, 2, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK_THROWS_AS(check_psi_birational(bad, curve({T, T, T, T}), {0, 1}), HypothesisError);
}

TEST_CASE("full certificate") {
  auto o = QuotientPresentation::build(orthant(4));
  // generic degree <= 3 curve from a pinned seed
  Gen g(2024);
  std::vector<UniPoly> cs;
  for (int k = 0; k < 4; ++k) {
    std::vector<Rational> co;
    for (int j = 0; j <= 3; ++j) co.push_back(g.range(-9, 9));
    cs.push_back(UniPoly(co));
  }
  auto cert = full_certificate(o, curve(cs));
  CHECK(cert.passes());
  CHECK(cert.diagnostics.empty());

  auto broken = full_certificate(o, curve({T, T, UniPoly{1}, UniPoly{1}}));
  CHECK_FALSE(broken.in_regular_locus);
  CHECK_FALSE(broken.passes());

  auto again = full_certificate(o, curve(cs));
  CHECK(again.embedding_ok == cert.embedding_ok);
  CHECK(again.birational_ok == cert.birational_ok);
  CHECK(again.diagnostics == cert.diagnostics);

  auto two = QuotientPresentation::build(SimplicialCone::build({{1, 0}, {1, 2}}));
  CHECK_THROWS_AS(full_certificate(two, curve({T, UniPoly{1, 1}})), HypothesisError);
  CHECK_THROWS_AS(full_certificate(o, curve({T, UniPoly{1, 1}})), HypothesisError);
}

TEST_CASE("order-5 fixture curve is certified") {
  auto p = QuotientPresentation::build(order5());
  auto cert = full_certificate(p, curve({T, UniPoly{1, 1}, UniPoly{3, 1}, UniPoly{2, 0, 1}}));
  CHECK(cert.passes());
  CHECK(cert.immersion);
}

TEST_CASE("apply_word moves exactly one coordinate per step") {
  auto p = QuotientPresentation::build(order5());
  auto c = curve({T, UniPoly{1, 1}, UniPoly{3, 1}, UniPoly{2, 0, 1}});
  for (std::size_t i = 0; i < 4; ++i)
    for (const auto& root : enumerate_roots(p.cone(), i, 1)) {
      FlowStep s{lift_field(p, root), Rational(2, 3)};
      auto moved = apply_step(s, c);
      for (std::size_t j = 0; j < 4; ++j) {
        if (j != i) CHECK(moved.coord(j) == c.coord(j));
        // pointwise agrees with the symbolic flow on coordinates
        CHECK(moved.coord(j) == evaluate_on_curve(flow_on_polynomial(s, MultiPoly::variable(4, j)), c.coords()));
      }
    }
}
