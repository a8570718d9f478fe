#include "toricflow/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "toricflow/errors.hpp"

namespace toricflow {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DomainError("variable index out of range");
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

Rational MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

long MultiPoly::degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) {
    long s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

long MultiPoly::degree_in(std::size_t i) const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e.at(i)));
  return d;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw DimensionError("exponent length differs from variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw DimensionError("polynomials in different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw DimensionError("polynomials in different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw DimensionError("polynomials in different variable counts");
  MultiPoly out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(nvars_, 1), base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(std::size_t i, const MultiPoly& q) const {
  if (i >= nvars_) throw DomainError("variable index out of range");
  if (q.nvars_ != nvars_) throw DimensionError("substitution in different variable counts");
  // Group by the power of x_i, then Horner in q.
  std::map<std::uint32_t, MultiPoly, std::greater<>> by_power;
  for (const auto& [e, c] : terms_) {
    Exponent rest = e;
    rest[i] = 0;
    auto [it, ins] = by_power.try_emplace(e[i], nvars_);
    it->second.add_term(rest, c);
  }
  MultiPoly acc(nvars_);
  std::uint32_t current = by_power.empty() ? 0 : by_power.begin()->first;
  for (auto& [power, coeff] : by_power) {
    while (current > power) {
      acc = acc * q;
      --current;
    }
    acc += coeff;
  }
  while (current > 0) {
    acc = acc * q;
    --current;
  }
  return acc;
}

MultiPoly MultiPoly::partial(std::size_t i) const {
  if (i >= nvars_) throw DomainError("variable index out of range");
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent d = e;
    --d[i];
    out.add_term(d, c * static_cast<unsigned long>(e[i]));
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    bool constant_term = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    bool wrote = false;
    if (a != 1 || constant_term) {
      os << a.get_str();
      wrote = true;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (wrote) os << '*';
      os << 'x' << (k + 1);
      if (e[k] > 1) os << '^' << e[k];
      wrote = true;
    }
  }
  return os.str();
}

UniPoly evaluate_on_curve(const MultiPoly& p, const std::vector<UniPoly>& curve) {
  if (curve.size() != p.nvars()) throw DimensionError("curve length differs from variable count");
  std::vector<std::map<std::uint32_t, UniPoly>> powers(curve.size());
  auto power = [&](std::size_t i, std::uint32_t k) -> const UniPoly& {
    auto it = powers[i].find(k);
    if (it == powers[i].end()) it = powers[i].emplace(k, curve[i].pow(k)).first;
    return it->second;
  };
  UniPoly out;
  for (const auto& [e, c] : p.terms()) {
    UniPoly term = UniPoly::constant(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

MultiPoly compose(const UniPoly& q, const MultiPoly& p) {
  MultiPoly acc(p.nvars());
  const auto& c = q.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * p + MultiPoly::constant(p.nvars(), *it);
  return acc;
}

}  // namespace toricflow
