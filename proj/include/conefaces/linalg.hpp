#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace conefaces {

// Exact arbitrary-precision fraction. gmpxx keeps results of arithmetic in
// canonical form (reduced, positive denominator, zero as 0/1).
using Rational = mpq_class;
using Vector = std::vector<Rational>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Parses "a", "-a" or "a/b" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;

  void append_row(std::span<const Rational> values);
  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Vector operator*(std::span<const Rational> v) const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// A linear subspace of Q^ambient_dim, stored as the reduced row echelon basis
/// with zero rows removed. Two subspaces are equal iff their data is equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

  /// Takes any spanning matrix; the stored basis is its canonical RREF.
  static Subspace from_spanning_rows(Matrix rows);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool operator==(const Subspace& other) const {
    return ambient_dim_ == other.ambient_dim_ && basis_ == other.basis_;
  }

 private:
  std::size_t ambient_dim_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical reduced row echelon form. Rows of the result are in pivot order;
/// zero rows trail.
Matrix rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Exact rank when an upper bound is known in advance. A modular rank is a
/// lower bound; if it reaches `upper` no rational elimination is done.
/// Throws if the bound is violated.
std::size_t rank_with_bound(const Matrix& m, std::size_t upper);
/// Rank of m over GF(p), or nullopt if p divides a denominator. Never
/// exceeds rank(m).
std::optional<std::size_t> rank_mod_p(const Matrix& m, std::uint32_t p);
Subspace nullspace(const Matrix& m);
Subspace span(std::span<const Vector> vectors, std::size_t ambient_dim);
bool contains(const Subspace& s, std::span<const Rational> v);
/// True iff every basis vector of inner lies in outer.
bool is_subspace_of(const Subspace& inner, const Subspace& outer);
Rational determinant(Matrix m);
/// Throws if m is singular.
Matrix inverse(const Matrix& m);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero(std::span<const Rational> v);

/// Scales v to a primitive integer vector whose first nonzero entry is positive.
Vector primitive(std::span<const Rational> v);

}  // namespace conefaces
