#include "toricflow/solvers.hpp"

#include <algorithm>
#include <map>

#include "toricflow/errors.hpp"

namespace toricflow {

namespace {

BezoutResult failure(UniPoly g, std::size_t n) { return {false, std::vector<UniPoly>(n), std::move(g)}; }

}  // namespace

BezoutResult bezout_combination(const std::vector<UniPoly>& fs, const UniPoly& target) {
  if (fs.empty()) throw DomainError("Bezout combination of an empty list");
  const std::size_t n = fs.size();

  UniPoly g;
  for (const auto& f : fs) g = gcd(g, f);
  if (g.is_zero()) throw DomainError("Bezout combination of zero polynomials");
  if (!divmod(target, g).second.is_zero()) return failure(g, n);

  BezoutResult out{true, std::vector<UniPoly>(n), g};
  if (target.is_zero()) return out;

  for (std::size_t j = 0; j < n; ++j) {
    if (fs[j].degree() == 0) {
      out.coefficients[j] = (1 / fs[j].lead()) * target;
      return out;
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    if (fs[j].is_zero()) continue;
    for (std::size_t k = j + 1; k < n; ++k) {
      if (fs[k].is_zero()) continue;
      auto eg = extended_gcd(fs[j], fs[k]);
      auto [scale, rem] = divmod(target, eg.g);
      if (!rem.is_zero()) continue;
      // Reduce a_j modulo f_k / g; then a_k is forced.
      UniPoly aj = divmod(eg.s * scale, divmod(fs[k], eg.g).first).second;
      UniPoly ak = divmod(target - aj * fs[j], fs[k]).first;
      out.coefficients[j] = std::move(aj);
      out.coefficients[k] = std::move(ak);
      return out;
    }
  }

  // gcd chain with cofactor tracking
  std::vector<UniPoly> cof(n);
  UniPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (fs[j].is_zero()) continue;
    auto eg = extended_gcd(acc, fs[j]);
    for (auto& c : cof) c = eg.s * c;
    cof[j] = eg.u;
    acc = eg.g;
  }
  UniPoly scale = divmod(target, acc).first;
  for (std::size_t j = 0; j < n; ++j) out.coefficients[j] = cof[j] * scale;
  return out;
}

std::optional<std::vector<Rational>> solve_linear_system(const std::vector<std::vector<Rational>>& rows,
                                                         const std::vector<Rational>& rhs) {
  if (rows.size() != rhs.size()) throw DimensionError("row count differs from right-hand side length");
  const std::size_t m = rows.size();
  const std::size_t ncols = m ? rows[0].size() : 0;

  // Scale each augmented row to integers, then eliminate without fractions,
  // dividing every updated row by its content.
  std::vector<std::vector<Integer>> a(m, std::vector<Integer>(ncols + 1));
  for (std::size_t r = 0; r < m; ++r) {
    if (rows[r].size() != ncols) throw DimensionError("ragged linear system");
    Integer l = rhs[r].get_den();
    for (const auto& x : rows[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t c = 0; c < ncols; ++c) a[r][c] = Rational(rows[r][c] * l).get_num();
    a[r][ncols] = Rational(rhs[r] * l).get_num();
  }

  auto normalize = [&](std::vector<Integer>& row) {
    Integer g = 0;
    for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
      for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  };

  std::vector<std::size_t> pivot_cols;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < ncols && prow < m; ++c) {
    std::size_t p = prow;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[prow]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == prow || a[r][c] == 0) continue;
      Integer f = a[r][c], piv = a[prow][c];
      for (std::size_t k = 0; k <= ncols; ++k) a[r][k] = a[r][k] * piv - a[prow][k] * f;
      normalize(a[r]);
    }
    pivot_cols.push_back(c);
    ++prow;
  }
  for (std::size_t r = prow; r < m; ++r)
    if (a[r][ncols] != 0) return std::nullopt;

  std::vector<Rational> x(ncols, 0);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
    x[pivot_cols[r]] = Rational(a[r][ncols], a[r][pivot_cols[r]]);
    x[pivot_cols[r]].canonicalize();
  }
  return x;
}

namespace {

bool proportional(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return false;
  Rational r = a.lead() / b.lead();
  return a == r * b;
}

// Multiplicity vectors of total length <= bound over k letters in graded
// lexicographic order: by length, then lexicographically ascending.
std::vector<Exponent> graded_words(std::size_t k, unsigned bound) {
  std::vector<Exponent> out;
  out.push_back(Exponent(k, 0));
  std::vector<Exponent> layer{Exponent(k, 0)};
  for (unsigned len = 1; len <= bound; ++len) {
    std::vector<Exponent> next;
    for (const auto& w : layer) {
      // extend only at or after the last nonzero slot to avoid duplicates
      std::size_t start = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (w[j]) start = j;
      for (std::size_t j = start; j < k; ++j) {
        Exponent v = w;
        ++v[j];
        next.push_back(std::move(v));
      }
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// C(k + bound, bound), saturating at cap + 1.
std::size_t word_count(std::size_t k, unsigned bound, std::size_t cap) {
  Integer c = 1;
  for (unsigned i = 1; i <= bound; ++i) {
    c *= static_cast<unsigned long>(k + i);
    c /= i;
    if (c > static_cast<unsigned long>(cap)) return cap + 1;
  }
  return c.get_ui();
}

}  // namespace

CurveExtension extend_from_curve(const std::vector<UniPoly>& values, const UniPoly& target,
                                 unsigned degree_bound, const ExtensionLimits& limits) {
  CurveExtension out;
  out.bound = degree_bound;
  const std::size_t n = values.size();

  std::vector<std::size_t> usable;
  for (std::size_t j = 0; j < n; ++j) {
    if (values[j].is_constant()) continue;
    bool dup = std::any_of(usable.begin(), usable.end(), [&](std::size_t u) { return proportional(values[u], values[j]); });
    if (!dup) usable.push_back(j);
  }
  const std::size_t k = usable.size();
  if (word_count(k, degree_bound, limits.max_words) > limits.max_words) {
    out.status = ExtensionStatus::too_large;
    return out;
  }

  auto words = graded_words(k, degree_bound);
  std::map<Exponent, UniPoly> value_of;
  std::vector<const UniPoly*> column(words.size());
  long max_deg = std::max(target.degree(), 0L);
  for (std::size_t w = 0; w < words.size(); ++w) {
    const Exponent& word = words[w];
    UniPoly v;
    std::size_t first = k;
    for (std::size_t j = 0; j < k; ++j)
      if (word[j]) {
        first = j;
        break;
      }
    if (first == k) {
      v = UniPoly::constant(1);
    } else {
      Exponent parent = word;
      --parent[first];
      v = value_of.at(parent) * values[usable[first]];
    }
    max_deg = std::max(max_deg, v.degree());
    column[w] = &value_of.emplace(word, std::move(v)).first->second;
  }

  std::vector<std::vector<Rational>> rows(max_deg + 1, std::vector<Rational>(words.size(), 0));
  std::vector<Rational> rhs(max_deg + 1, 0);
  for (std::size_t w = 0; w < words.size(); ++w)
    for (std::size_t d = 0; d < column[w]->coeffs().size(); ++d) rows[d][w] = column[w]->coeffs()[d];
  for (std::size_t d = 0; d < target.coeffs().size(); ++d) rhs[d] = target.coeffs()[d];

  auto x = solve_linear_system(rows, rhs);
  if (!x) return out;

  out.status = ExtensionStatus::solved;
  for (std::size_t w = 0; w < words.size(); ++w) {
    if ((*x)[w] == 0) continue;
    Exponent full(n, 0);
    for (std::size_t j = 0; j < k; ++j) full[usable[j]] = words[w][j];
    out.words.push_back(std::move(full));
    out.coefficients.push_back((*x)[w]);
  }
  return out;
}

CurveExtension extend_with_retry(const std::vector<UniPoly>& values, const UniPoly& target,
                                 unsigned max_bound, const ExtensionLimits& limits) {
  CurveExtension last;
  for (unsigned b = 1;; b *= 2) {
    unsigned bound = std::min(b, max_bound);
    last = extend_from_curve(values, target, bound, limits);
    if (last.status != ExtensionStatus::unsolvable || bound >= max_bound) return last;
  }
}

UniPoly evaluate_words(const std::vector<UniPoly>& values, const std::vector<Exponent>& words,
                       const std::vector<Rational>& coefficients) {
  UniPoly out;
  for (std::size_t w = 0; w < words.size(); ++w) {
    UniPoly term = UniPoly::constant(coefficients.at(w));
    for (std::size_t j = 0; j < values.size(); ++j)
      if (words[w][j]) term = term * values[j].pow(words[w][j]);
    out += term;
  }
  return out;
}

}  // namespace toricflow
