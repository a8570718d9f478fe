// Fixtures and small helpers shared by the test executables.
#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "toricflow/cone.hpp"
#include "toricflow/curve.hpp"
#include "toricflow/lattice.hpp"
#include "toricflow/quotient.hpp"

namespace fixture {

using namespace toricflow;

inline std::vector<LatticeVector> orthant_rays(std::size_t n = 4) {
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVector v(n);
    v[i] = 1;
    out.push_back(v);
  }
  return out;
}

inline std::vector<LatticeVector> order5_rays() { return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-1, -1, -2, 5}}; }

// 1/2 (1,1,1,1): the group is generated by -1 on every coordinate.
inline std::vector<LatticeVector> order2_rays() { return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-1, -1, -1, 2}}; }

inline SimplicialCone orthant(std::size_t n = 4) { return SimplicialCone::build(orthant_rays(n)); }
inline SimplicialCone order5() { return SimplicialCone::build(order5_rays()); }
inline SimplicialCone order2() { return SimplicialCone::build(order2_rays()); }

inline oracle::Vec plain(const LatticeVector& v) {
  oracle::Vec out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

inline oracle::Mat plain(const std::vector<LatticeVector>& vs) {
  oracle::Mat out;
  for (const auto& v : vs) out.push_back(plain(v));
  return out;
}

inline LatticeVector lattice(const oracle::Vec& v) {
  std::vector<Integer> c;
  for (auto x : v) c.emplace_back(static_cast<long>(x));
  return LatticeVector(std::move(c));
}

inline UniPoly poly(std::initializer_list<long> c) { return UniPoly(c); }

inline LiftedCurve curve(std::vector<UniPoly> coords) { return LiftedCurve(std::move(coords)); }

// Seeded generator for hand-rolled property tests.
struct Gen {
  std::mt19937_64 engine;
  explicit Gen(std::uint64_t seed) : engine(seed) {}
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine); }
  Rational rational(long bound) {
    Rational q(range(-bound, bound), range(1, bound));
    q.canonicalize();
    return q;
  }
  UniPoly unipoly(long max_degree, long bound) {
    std::vector<Rational> c;
    long d = range(0, max_degree);
    for (long k = 0; k <= d; ++k) c.push_back(rational(bound));
    return UniPoly(std::move(c));
  }
  IntMatrix unimodular(std::size_t n, int ops) {
    IntMatrix u = IntMatrix::identity(n);
    for (int k = 0; k < ops; ++k) {
      std::size_t a = static_cast<std::size_t>(range(0, static_cast<long>(n) - 1));
      std::size_t b = static_cast<std::size_t>(range(0, static_cast<long>(n) - 1));
      if (a == b) continue;
      long f = range(-2, 2);
      for (std::size_t c = 0; c < n; ++c) u(a, c) += f * u(b, c);
    }
    return u;
  }
};

}  // namespace fixture
