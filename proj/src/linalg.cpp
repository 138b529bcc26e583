#include "conefaces/linalg.hpp"

#include <algorithm>
#include <utility>

namespace conefaces {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw Error("empty rational literal");
  s = s.substr(first, last - first + 1);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    if (allow_sign && !part.empty() && part.front() == '-') part.remove_prefix(1);
    return !part.empty() && std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (slash == std::string::npos ? !digits_ok(s, true)
                                 : !digits_ok(std::string_view(s).substr(0, slash), true) ||
                                       !digits_ok(std::string_view(s).substr(slash + 1), false)) {
    throw Error("malformed rational literal '" + std::string(text) + "'");
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error("malformed rational literal '" + std::string(text) + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(0, cols);
  m.data_.reserve(rows.size() * cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto view = row(r);
  return Vector(view.begin(), view.end());
}

void Matrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) {
    throw DimensionMismatch("row of length " + std::to_string(values.size()) + " appended to matrix with " +
                            std::to_string(cols_) + " columns");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

Vector Matrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = dot(row(i), v);
  return out;
}

namespace {

// Gauss-Jordan elimination in place. Returns pivot columns in row order.
std::vector<std::size_t> reduce_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Rational factor;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));

    if (m(r, c) != 1) {
      const Rational inv = 1 / m(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(r, j)) != 0) m(r, j) *= inv;
    }
    // Columns right of c with a nonzero pivot-row entry.
    std::vector<std::size_t> support;
    for (std::size_t j = c + 1; j < cols; ++j)
      if (sgn(m(r, j)) != 0) support.push_back(j);

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      factor = m(i, c);
      for (std::size_t j : support) m(i, j) -= factor * m(r, j);
      m(i, c) = 0;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix rref(Matrix m) {
  reduce_in_place(m);
  return m;
}

namespace {

constexpr std::uint32_t kPrimes[] = {2147483647u, 2147483629u};

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (b %= p; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// Fraction-free (Bareiss) forward elimination on the integer rows obtained by
// clearing denominators row by row.
std::size_t bareiss_rank(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class den = 1;
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(m(i, j)) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j).get_num() * (den / m(i, j).get_den());
  }
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * cols + j]; };
  mpz_class prev = 1, t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(at(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(at(p, j), at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

}  // namespace

std::optional<std::size_t> rank_mod_p(const Matrix& m, std::uint32_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& q = m(i, j);
      if (sgn(q) == 0) continue;
      const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
      if (den == 0) return std::nullopt;
      const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
      a[i * cols + j] = num * pow_mod(den, p - 2, p) % p;
    }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    const std::uint64_t inv = pow_mod(a[r * cols + c], p - 2, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t f = a[i * cols + c] * inv % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] = (a[i * cols + j] + (p - f) * a[r * cols + j]) % p;
    }
    ++r;
  }
  return r;
}

std::size_t rank_with_bound(const Matrix& m, std::size_t upper) {
  std::size_t lower = 0;
  for (std::uint32_t p : kPrimes) {
    if (auto r = rank_mod_p(m, p)) lower = std::max(lower, *r);
    if (lower == upper) return upper;
  }
  if (lower > upper) throw Error("internal: rank exceeds its stated upper bound");
  const std::size_t exact = bareiss_rank(m);
  if (exact > upper) throw Error("internal: rank exceeds its stated upper bound");
  return exact;
}

std::size_t rank(const Matrix& m) { return rank_with_bound(m, std::min(m.rows(), m.cols())); }

Subspace Subspace::from_spanning_rows(Matrix rows) {
  Subspace s(rows.cols());
  s.pivots_ = reduce_in_place(rows);
  Matrix basis(0, rows.cols());
  for (std::size_t i = 0; i < s.pivots_.size(); ++i) basis.append_row(rows.row(i));
  s.basis_ = std::move(basis);
  return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vector(i));
  return out;
}

Subspace nullspace(const Matrix& m) {
  Matrix reduced = m;
  auto pivots = reduce_in_place(reduced);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  Matrix kernel(0, cols);
  Vector v(cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, f);
    kernel.append_row(v);
  }
  return Subspace::from_spanning_rows(std::move(kernel));
}

Subspace span(std::span<const Vector> vectors, std::size_t ambient_dim) {
  return Subspace::from_spanning_rows(Matrix::from_rows(vectors, ambient_dim));
}

bool contains(const Subspace& s, std::span<const Rational> v) {
  if (v.size() != s.ambient_dim()) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " tested against subspace of R^" +
                            std::to_string(s.ambient_dim()));
  }
  Vector residual(v.begin(), v.end());
  const auto& basis = s.basis();
  const auto& pivots = s.pivots();
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Rational coeff = residual[pivots[i]];
    if (sgn(coeff) == 0) continue;
    auto row = basis.row(i);
    for (std::size_t j = pivots[i]; j < row.size(); ++j)
      if (sgn(row[j]) != 0) residual[j] -= coeff * row[j];
  }
  return is_zero(residual);
}

bool is_subspace_of(const Subspace& inner, const Subspace& outer) {
  for (std::size_t i = 0; i < inner.dim(); ++i)
    if (!contains(outer, inner.basis().row(i))) return false;
  return true;
}

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      const Rational factor = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix augmented(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = m(i, j);
    augmented(i, n + i) = 1;
  }
  const auto pivots = reduce_in_place(augmented);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error("matrix is singular");
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = augmented(i, n + j);
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors with different lengths");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Vector primitive(std::span<const Rational> v) {
  mpz_class lcm_den = 1;
  for (const auto& q : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class g = 0;
  for (const auto& q : v) {
    mpz_class z = q.get_num() * (lcm_den / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    ints.push_back(std::move(z));
  }
  Vector out(v.size());
  if (g == 0) return out;
  auto lead = std::find_if(ints.begin(), ints.end(), [](const mpz_class& z) { return z != 0; });
  if (*lead < 0) g = -g;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g);
  return out;
}

}  // namespace conefaces
