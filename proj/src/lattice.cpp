#include "toricflow/lattice.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "toricflow/errors.hpp"

namespace toricflow {

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  if (other.size() != size()) throw DimensionError("lattice vector lengths differ");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  if (other.size() != size()) throw DimensionError("lattice vector lengths differ");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LatticeVector operator*(const Integer& s, const LatticeVector& v) {
  LatticeVector out = v;
  for (auto& c : out.coords_) c *= s;
  return out;
}

LatticeVector operator-(const LatticeVector& v) {
  LatticeVector out = v;
  for (auto& c : out.coords_) c = -c;
  return out;
}

std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  return os << ')';
}

Integer pair(const LatticeVector& m, const LatticeVector& u) {
  if (m.size() != u.size()) throw DimensionError("pairing of vectors with different lengths");
  Integer s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * u[i];
  return s;
}

namespace {

Integer content(const LatticeVector& u) {
  Integer g = 0;
  for (const auto& c : u) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

}  // namespace

bool is_primitive(const LatticeVector& u) {
  if (u.is_zero()) throw DomainError("primitivity of the zero vector");
  return content(u) == 1;
}

LatticeVector primitive_part(const LatticeVector& u) {
  if (u.is_zero()) throw DomainError("primitive part of the zero vector");
  Integer g = content(u);
  std::vector<Integer> out(u.coords());
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return LatticeVector(std::move(out));
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const LatticeVector> rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw DimensionError("rows of unequal length");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const LatticeVector> cols) {
  return from_rows(cols).transposed();
}

LatticeVector IntMatrix::row(std::size_t r) const {
  std::vector<Integer> v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return LatticeVector(std::move(v));
}

LatticeVector IntMatrix::column(std::size_t c) const {
  std::vector<Integer> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return LatticeVector(std::move(v));
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

namespace {

// Row/column operations applied simultaneously to the working matrix and
// to the transform that records them.
struct SmithState {
  IntMatrix d, left, right;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(a, c), d(b, c));
    for (std::size_t c = 0; c < left.cols(); ++c) std::swap(left(a, c), left(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d(r, a), d(r, b));
    for (std::size_t r = 0; r < right.rows(); ++r) std::swap(right(r, a), right(r, b));
  }
  // row[dst] += q * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(dst, c) += q * d(src, c);
    for (std::size_t c = 0; c < left.cols(); ++c) left(dst, c) += q * left(src, c);
  }
  // col[dst] += q * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t r = 0; r < d.rows(); ++r) d(r, dst) += q * d(r, src);
    for (std::size_t r = 0; r < right.rows(); ++r) right(r, dst) += q * right(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(r, c) = -d(r, c);
    for (std::size_t c = 0; c < left.cols(); ++c) left(r, c) = -left(r, c);
  }

  std::optional<std::pair<std::size_t, std::size_t>> min_entry(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t r = t; r < d.rows(); ++r)
      for (std::size_t c = t; c < d.cols(); ++c) {
        if (d(r, c) == 0) continue;
        Integer a = abs(d(r, c));
        if (!best || a < best_abs) {
          best = {r, c};
          best_abs = a;
        }
      }
    return best;
  }
};

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw DomainError("Smith normal form of an empty matrix");
  SmithState s{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  const std::size_t steps = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      auto pivot = s.min_entry(t);
      if (!pivot) break;
      s.swap_rows(t, pivot->first);
      s.swap_cols(t, pivot->second);

      bool dirty = false;
      for (std::size_t r = t + 1; r < s.d.rows(); ++r) {
        if (s.d(r, t) == 0) continue;
        s.add_row(r, t, -floor_div(s.d(r, t), s.d(t, t)));
        dirty = dirty || s.d(r, t) != 0;
      }
      for (std::size_t c = t + 1; c < s.d.cols(); ++c) {
        if (s.d(t, c) == 0) continue;
        s.add_col(c, t, -floor_div(s.d(t, c), s.d(t, t)));
        dirty = dirty || s.d(t, c) != 0;
      }
      if (dirty) continue;

      // The pivot must divide the remaining block; otherwise fold an
      // offending row into the pivot row and reduce again.
      std::optional<std::size_t> offender;
      for (std::size_t r = t + 1; r < s.d.rows() && !offender; ++r)
        for (std::size_t c = t + 1; c < s.d.cols(); ++c)
          if (!mpz_divisible_p(s.d(r, c).get_mpz_t(), s.d(t, t).get_mpz_t())) {
            offender = r;
            break;
          }
      if (!offender) break;
      s.add_row(t, *offender, 1);
    }
    if (s.d(t, t) < 0) s.negate_row(t);
  }

  SmithDecomposition out{std::move(s.left), {}, std::move(s.right)};
  out.diag.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diag.push_back(s.d(t, t));
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a(r, c);
    m[r][n + r] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) throw DomainError("singular matrix has no inverse");
    std::swap(m[p], m[col]);
    Rational inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out[r][c] = m[r][n + c];
  return out;
}

bool extends_to_basis(std::span<const LatticeVector> vs) {
  if (vs.empty()) return true;
  const std::size_t n = vs[0].size();
  if (vs.size() > n) throw DomainError("more vectors than the lattice rank");
  auto snf = smith_normal_form(IntMatrix::from_rows(vs));
  return std::all_of(snf.diag.begin(), snf.diag.end(), [](const Integer& d) { return d == 1; });
}

}  // namespace toricflow
