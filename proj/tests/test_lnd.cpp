#include <doctest.h>

#include "support.hpp"
#include "toricflow/errors.hpp"
#include "toricflow/lnd.hpp"

using namespace toricflow;
using namespace fixture;

namespace {

MultiPoly pullback(const QuotientPresentation& p, const LatticeVector& m) {
  return MultiPoly::monomial(pullback_monomial(p, m).exponents);
}

std::vector<QuotientPresentation> presentations() {
  return {QuotientPresentation::build(orthant(4)), QuotientPresentation::build(order5()),
          QuotientPresentation::build(order2())};
}

}  // namespace

TEST_CASE("orthant roots") {
  auto c = orthant(4);
  auto roots = enumerate_roots(c, 0, 1);
  CHECK(roots.size() == 8);
  CHECK(std::any_of(roots.begin(), roots.end(), [](const DemazureRoot& r) { return r.e == LatticeVector{-1, 0, 0, 0}; }));
  auto r = make_root(c, 0, {-1, 0, 0, 0});
  CHECK(r.lifted_exponent == Exponent{0, 0, 0, 0});
  CHECK_THROWS_AS(make_root(c, 0, {1, 0, 0, 0}), DomainError);
  CHECK_THROWS_AS(make_root(c, 0, {-1, -1, 0, 0}), DomainError);
}

TEST_CASE("roots agree with a box scan") {
  for (const auto& rays : {orthant_rays(4), order5_rays(), order2_rays()}) {
    auto c = SimplicialCone::build(rays);
    for (std::size_t i = 0; i < c.rank(); ++i) {
      for (unsigned bound : {1u, 2u}) {
        auto roots = enumerate_roots(c, i, bound);
        std::set<oracle::Vec> got;
        for (const auto& r : roots) {
          got.insert(plain(r.e));
          CHECK(pair(r.e, c.ray(i)) == -1);
          for (std::size_t j = 0; j < c.rank(); ++j) {
            if (j != i) CHECK(pair(r.e, c.ray(j)) >= 0);
            CHECK(r.lifted_exponent[j] == (j == i ? 0u : pair(r.e, c.ray(j)).get_ui()));
          }
        }
        CHECK(got == oracle::roots_by_scan(plain(rays), i, bound, 12));
      }
    }
  }
  CHECK_FALSE(enumerate_roots(order5(), 3, 2).empty());
}

TEST_CASE("apply_derivation") {
  auto c = orthant(4);
  auto r = make_root(c, 0, {-1, 0, 0, 0});
  auto img = apply_derivation(r, {1, 0, 0, 0});
  CHECK(img.scale == 1);
  CHECK(img.m == LatticeVector{0, 0, 0, 0});
  CHECK(apply_derivation(r, {0, 1, 0, 0}).scale == 0);
}

TEST_CASE("equivariance of lifted fields") {
  for (const auto& p : presentations()) {
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (const auto& root : enumerate_roots(p.cone(), i, 2)) {
        auto field = lift_field(p, root);
        for (const auto& m : p.dual().hilbert_basis) {
          auto down = apply_derivation(root, m);
          MultiPoly expect(p.rank());
          if (down.scale != 0) expect = Rational(down.scale) * pullback(p, down.m);
          CHECK(field.apply(pullback(p, m)) == expect);
        }
      }
  }
}

TEST_CASE("local nilpotency on generators") {
  for (const auto& p : presentations()) {
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (const auto& root : enumerate_roots(p.cone(), i, 2)) {
        auto field = lift_field(p, root);
        for (const auto& m : p.dual().hilbert_basis) {
          long k = pair(m, root.ray).get_si();
          // downstairs: the scale sequence reaches 0 after exactly k + 1 steps
          LatticeVector cur = m;
          long steps = 0;
          for (;;) {
            auto img = apply_derivation(root, cur);
            ++steps;
            if (img.scale == 0) break;
            cur = img.m;
          }
          CHECK(steps == k + 1);
          // upstairs: k applications leave a nonzero term, k + 1 annihilate
          MultiPoly f = pullback(p, m);
          for (long s = 0; s < k; ++s) f = field.apply(f);
          CHECK_FALSE(f.is_zero());
          CHECK(field.apply(f).is_zero());
        }
      }
  }
}

TEST_CASE("lift_field validates the kernel coefficient") {
  auto p = QuotientPresentation::build(order5());
  auto root = enumerate_roots(p.cone(), 0, 2).front();
  CHECK_THROWS_AS(lift_field(p, root, MultiPoly::variable(4, 0)), DomainError);
  // x_2 alone has weight 1, not invariant
  CHECK_THROWS_AS(lift_field(p, root, MultiPoly::variable(4, 1)), DomainError);
  MultiPoly g = MultiPoly::monomial(p.facet_generators(0).front().exponents, 3);
  auto f = lift_field(p, root, g);
  CHECK(f.multiplier() == g * MultiPoly::monomial(root.lifted_exponent));
  auto plain_field = lift_field(p, root);
  CHECK(plain_field.coefficient == MultiPoly::constant(4, 1));
}

TEST_CASE("flows") {
  auto p = QuotientPresentation::build(orthant(4));
  auto root = make_root(p.cone(), 0, {-1, 1, 0, 2});
  FlowStep step{lift_field(p, root), Rational(3, 2)};
  MultiPoly x1 = MultiPoly::variable(4, 0);
  CHECK(flow_on_polynomial(step, x1) == x1 + Rational(3, 2) * MultiPoly::monomial(root.lifted_exponent));
  MultiPoly y = MultiPoly::variable(4, 1) * MultiPoly::variable(4, 3);
  CHECK(flow_on_polynomial(step, y) == y);
  FlowStep back{step.field, -step.time};
  MultiPoly q = x1.pow(3) + y;
  CHECK(flow_on_polynomial(back, flow_on_polynomial(step, q)) == q);
  // group law s1 then s2 equals s1 + s2
  FlowStep s1{step.field, 2}, s2{step.field, Rational(-1, 3)}, s12{step.field, Rational(5, 3)};
  CHECK(flow_on_polynomial(s2, flow_on_polynomial(s1, q)) == flow_on_polynomial(s12, q));
}

TEST_CASE("words") {
  auto p = QuotientPresentation::build(order5());
  AutomorphismWord w;
  Gen g(99);
  for (int k = 0; k < 4; ++k) {
    std::size_t i = static_cast<std::size_t>(g.range(0, 3));
    auto roots = enumerate_roots(p.cone(), i, 2);
    auto root = roots[static_cast<std::size_t>(g.range(0, static_cast<long>(roots.size()) - 1))];
    w.steps.push_back({lift_field(p, root), g.rational(5)});
  }
  MultiPoly x = MultiPoly::variable(4, 2);
  CHECK(word_apply(AutomorphismWord{}, x) == x);
  AutomorphismWord single{{w.steps[0]}};
  for (const auto& gen : p.invariant_generators()) {
    MultiPoly m = MultiPoly::monomial(gen.exponents);
    CHECK(word_apply(single, m) == flow_on_polynomial(w.steps[0], m));
    CHECK(word_apply(w, word_apply(word_inverse(w), m)) == m);
    CHECK(word_apply(word_inverse(w), word_apply(w, m)) == m);
    CHECK(word_apply(concatenate(w, word_inverse(w)), m) == m);
  }
  auto coords = word_coordinates(w, 4);
  REQUIRE(coords.size() == 4);
  CHECK(jacobian_determinant(coords) == MultiPoly::constant(4, 1));
}

TEST_CASE("steps are unit triangular") {
  for (const auto& p : presentations())
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (const auto& root : enumerate_roots(p.cone(), i, 2)) {
        FlowStep s{lift_field(p, root), Rational(7, 3)};
        CHECK(is_unit_triangular(s, p.rank()));
        CHECK(jacobian_determinant(word_coordinates(AutomorphismWord{{s}}, p.rank())) == MultiPoly::constant(p.rank(), 1));
      }
}

TEST_CASE("jacobian of a nontrivial map") {
  MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  CHECK(jacobian_determinant({x * y, x + y}) == y - x);
  CHECK(jacobian_determinant({Rational(2) * x, Rational(3) * y}) == MultiPoly::constant(2, 6));
}

TEST_CASE("verify_descends") {
  auto o = QuotientPresentation::build(orthant(4));
  for (const auto& root : enumerate_roots(o.cone(), 1, 2)) CHECK(verify_descends(o, lift_field(o, root)));
  auto p = QuotientPresentation::build(order5());
  for (std::size_t i = 0; i < 4; ++i)
    for (const auto& root : enumerate_roots(p.cone(), i, 2)) {
      auto field = lift_field(p, root);
      CHECK(verify_descends(p, field));
      // corrupt e': bump one off-slot entry
      LiftedField bad = field;
      bad.root.lifted_exponent[(i + 1) % 4] += 1;
      CHECK_FALSE(verify_descends(p, bad));
    }
}

TEST_CASE("flow images of invariant generators stay invariant") {
  for (const auto& p : presentations())
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (const auto& root : enumerate_roots(p.cone(), i, 2)) {
        FlowStep s{lift_field(p, root), Rational(-2, 7)};
        for (const auto& g : p.invariant_generators()) {
          MultiPoly image = flow_on_polynomial(s, MultiPoly::monomial(g.exponents));
          for (const auto& [e, c] : image.terms()) CHECK(p.is_invariant(e));
        }
      }
}
