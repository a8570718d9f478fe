#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace toricflow {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element of N or M, both identified with Z^n.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t n) : coords_(n, 0) {}
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long> coords);

  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;

  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Integer& s, const LatticeVector& v);
  friend LatticeVector operator-(const LatticeVector& v);

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ == b.coords_;
  }
  /// Lexicographic order; vectors of different length compare by length first.
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b);

  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// The pairing <m, u> = sum m_i u_i. Throws DimensionError on length mismatch.
Integer pair(const LatticeVector& m, const LatticeVector& u);

/// gcd of the coordinates is 1. Throws DomainError for the zero vector.
bool is_primitive(const LatticeVector& u);

/// u divided by the gcd of its coordinates. Throws DomainError for zero.
LatticeVector primitive_part(const LatticeVector& u);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const LatticeVector> rows);
  static IntMatrix from_columns(std::span<const LatticeVector> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  LatticeVector row(std::size_t r) const;
  LatticeVector column(std::size_t c) const;
  IntMatrix transposed() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// left * A * right == diag(diag), with unimodular left/right and
/// diag[0] | diag[1] | ...  (diag has min(rows, cols) entries).
struct SmithDecomposition {
  IntMatrix left;
  std::vector<Integer> diag;
  IntMatrix right;
};

/// Smith normal form by gcd-pivot row/column reduction, always pivoting on
/// an entry of minimal absolute value. Throws DomainError on an empty matrix.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Determinant of a square matrix (Bareiss fraction-free elimination).
Integer determinant(const IntMatrix& a);

/// Rational inverse of a square nonsingular matrix, row-major.
/// Throws DomainError when singular.
std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& a);

/// True iff the vectors can be extended to a basis of Z^n, i.e. the Smith
/// diagonal of the k x n matrix is all ones. Throws DomainError when k > n.
bool extends_to_basis(std::span<const LatticeVector> vs);

}  // namespace toricflow
