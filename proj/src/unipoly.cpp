#include "toricflow/unipoly.hpp"

#include <sstream>

#include "toricflow/errors.hpp"

namespace toricflow {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1, 0);
  v[k] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UniPoly operator-(const UniPoly& a) {
  UniPoly out = a;
  for (auto& c : out.c_) c = -c;
  return out;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::pow(unsigned k) const {
  UniPoly result = constant(1), base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::compose(const UniPoly& q) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  UniPoly out = *this;
  out *= 1 / lead();
  return out;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    bool unit = a == 1;
    if (!unit || k == 0) os << a.get_str();
    if (k > 0) {
      if (!unit) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const auto& bc = b.coeffs();
  if (r.size() < bc.size()) return {UniPoly(), a};
  std::vector<Rational> q(r.size() - bc.size() + 1, 0);
  Rational inv = 1 / b.lead();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational f = r[k + bc.size() - 1] * inv;
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) r[k + j] -= f * bc[j];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) { return extended_gcd(a, b).g; }

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(1), s1;
  UniPoly u0, u1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    UniPoly u2 = u0 - q * u1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.is_zero()) return {UniPoly(), UniPoly(), UniPoly()};
  Rational inv = 1 / r0.lead();
  r0 *= inv;
  s0 *= inv;
  u0 *= inv;
  return {r0, s0, u0};
}

}  // namespace toricflow
