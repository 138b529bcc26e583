#include "conefaces/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace conefaces {

unsigned Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0u); }

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 0; i < k; ++i) result = result * (n - i) / (i + 1);
  return result;
}

std::size_t form_space_dim(std::size_t n, unsigned d) {
  if (n == 0) return d == 0 ? 1 : 0;
  return binomial(n + d - 1, d);
}

namespace {

void enumerate(std::size_t var, unsigned remaining, Exponents& current, std::vector<Monomial>& out) {
  const std::size_t n = current.size();
  if (var + 1 == n) {
    current[var] = remaining;
    out.push_back({current});
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current[var] = e;
    enumerate(var + 1, remaining - e, current, out);
  }
}

// Table of x_i^e for e <= max_degree.
std::vector<Vector> power_table(std::span<const Rational> x, unsigned max_degree) {
  std::vector<Vector> table(x.size(), Vector(max_degree + 1));
  for (std::size_t i = 0; i < x.size(); ++i) {
    table[i][0] = 1;
    for (unsigned e = 1; e <= max_degree; ++e) table[i][e] = table[i][e - 1] * x[i];
  }
  return table;
}

}  // namespace

std::vector<Monomial> monomial_basis(std::size_t n, unsigned d) {
  if (n == 0) throw Error("monomial basis needs at least one variable");
  std::vector<Monomial> out;
  out.reserve(form_space_dim(n, d));
  Exponents current(n, 0);
  enumerate(0, d, current, out);
  return out;
}

std::size_t monomial_index(std::span<const unsigned> e) {
  const std::size_t n = e.size();
  std::size_t remaining = std::accumulate(e.begin(), e.end(), std::size_t{0});
  std::size_t index = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t tail_vars = n - i - 1;
    // Monomials sharing the prefix but with a larger exponent at position i.
    if (remaining > e[i]) index += binomial(remaining - e[i] - 1 + tail_vars, tail_vars);
    remaining -= e[i];
  }
  return index;
}

// ---------------------------------------------------------------------------

ProjectivePoint::ProjectivePoint(Vector coords) : coords_(std::move(coords)) {
  if (coords_.empty() || conefaces::is_zero(coords_)) throw Error("projective point must be a nonzero vector");
}

ProjectivePoint::ProjectivePoint(std::initializer_list<long> coords)
    : ProjectivePoint(Vector(coords.begin(), coords.end())) {}

Vector ProjectivePoint::canonical() const {
  auto lead = std::find_if(coords_.begin(), coords_.end(), [](const Rational& q) { return sgn(q) != 0; });
  const Rational scale = 1 / *lead;
  Vector out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = coords_[i] * scale;
  return out;
}

bool ProjectivePoint::projectively_equal(const ProjectivePoint& other) const {
  return n() == other.n() && canonical() == other.canonical();
}

// ---------------------------------------------------------------------------

Form::Form(std::size_t n, unsigned degree) : n_(n), degree_(degree), coeffs_(form_space_dim(n, degree)) {
  if (n == 0) throw Error("form needs at least one variable");
}

Form::Form(std::size_t n, unsigned degree, Vector coeffs) : n_(n), degree_(degree), coeffs_(std::move(coeffs)) {
  if (n == 0) throw Error("form needs at least one variable");
  if (coeffs_.size() != form_space_dim(n, degree)) {
    throw DimensionMismatch("form of degree " + std::to_string(degree) + " in " + std::to_string(n) +
                            " variables needs " + std::to_string(form_space_dim(n, degree)) + " coefficients, got " +
                            std::to_string(coeffs_.size()));
  }
}

Form Form::monomial(std::span<const unsigned> exponents, Rational coeff) {
  Form f(exponents.size(), std::accumulate(exponents.begin(), exponents.end(), 0u));
  f.coeff(exponents) = std::move(coeff);
  return f;
}

Form Form::variable(std::size_t n, std::size_t i) {
  if (i >= n) throw Error("variable index out of range");
  Exponents e(n, 0);
  e[i] = 1;
  return monomial(e);
}

Form Form::constant(std::size_t n, Rational value) {
  Form f(n, 0);
  f.coeffs_[0] = std::move(value);
  return f;
}

Form& Form::operator+=(const Form& other) {
  if (n_ != other.n_ || degree_ != other.degree_) throw DimensionMismatch("adding forms from different spaces");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Form& Form::operator-=(const Form& other) {
  if (n_ != other.n_ || degree_ != other.degree_) throw DimensionMismatch("subtracting forms from different spaces");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Form& Form::operator*=(const Rational& c) {
  for (auto& q : coeffs_) q *= c;
  return *this;
}

Form operator*(const Form& a, const Form& b) { return multiply(a, b); }

Form multiply(const Form& f, const Form& g) {
  if (f.n() != g.n()) throw DimensionMismatch("multiplying forms in different numbers of variables");
  const std::size_t n = f.n();
  Form out(n, f.degree() + g.degree());
  const auto fm = monomial_basis(n, f.degree());
  const auto gm = monomial_basis(n, g.degree());
  Exponents sum(n);
  for (std::size_t i = 0; i < fm.size(); ++i) {
    const Rational& a = f.coeffs()[i];
    if (sgn(a) == 0) continue;
    for (std::size_t j = 0; j < gm.size(); ++j) {
      const Rational& b = g.coeffs()[j];
      if (sgn(b) == 0) continue;
      for (std::size_t k = 0; k < n; ++k) sum[k] = fm[i].exponents[k] + gm[j].exponents[k];
      out.coeff(sum) += a * b;
    }
  }
  return out;
}

Form power(const Form& f, unsigned k) {
  Form out = Form::constant(f.n(), 1);
  for (unsigned i = 0; i < k; ++i) out = multiply(out, f);
  return out;
}

Rational evaluate(const Form& f, std::span<const Rational> x) {
  if (x.size() != f.n()) throw DimensionMismatch("evaluating a form at a point of the wrong dimension");
  const auto values = monomial_values(f.n(), f.degree(), x);
  return dot(f.coeffs(), values);
}

Rational evaluate(const Form& f, const ProjectivePoint& p) { return evaluate(f, p.coords()); }

Form partial(const Form& f, std::size_t var) {
  if (f.degree() == 0) throw Error("cannot differentiate a degree-0 form as a form of degree -1");
  if (var >= f.n()) throw DimensionMismatch("partial derivative variable out of range");
  Form out(f.n(), f.degree() - 1);
  const auto basis = monomial_basis(f.n(), f.degree());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const unsigned e = basis[i].exponents[var];
    if (e == 0 || sgn(f.coeffs()[i]) == 0) continue;
    Exponents lowered = basis[i].exponents;
    --lowered[var];
    out.coeff(lowered) += f.coeffs()[i] * e;
  }
  return out;
}

Vector gradient_eval(const Form& f, std::span<const Rational> x) {
  if (f.degree() == 0) throw Error("gradient of a degree-0 form");
  if (x.size() != f.n()) throw DimensionMismatch("gradient at a point of the wrong dimension");
  const auto rows = monomial_gradient_rows(f.n(), f.degree(), x);
  Vector out(f.n());
  for (std::size_t j = 0; j < f.n(); ++j) out[j] = dot(f.coeffs(), rows[j]);
  return out;
}

Vector gradient_eval(const Form& f, const ProjectivePoint& p) { return gradient_eval(f, p.coords()); }

Matrix hessian_eval(const Form& f, const ProjectivePoint& p) {
  if (f.degree() < 2) throw Error("Hessian of a form of degree < 2");
  if (p.n() != f.n()) throw DimensionMismatch("Hessian at a point of the wrong dimension");
  const std::size_t n = f.n();
  Matrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector row = gradient_eval(partial(f, i), p);
    for (std::size_t j = 0; j < n; ++j) h(i, j) = row[j];
  }
  return h;
}

Form linear_form(std::span<const Rational> v) {
  if (v.empty() || conefaces::is_zero(v)) throw Error("linear form needs a nonzero coefficient vector");
  // Degree-one monomials in graded-lex order are x1, ..., xn.
  return Form(v.size(), 1, Vector(v.begin(), v.end()));
}

Form normalized(const Form& f) {
  auto lead = std::find_if(f.coeffs().begin(), f.coeffs().end(), [](const Rational& q) { return sgn(q) != 0; });
  if (lead == f.coeffs().end()) return f;
  return f * Rational(1 / *lead);
}

bool proportional(const Form& f, const Form& g) {
  if (f.n() != g.n() || f.degree() != g.degree() || f.is_zero() || g.is_zero()) return false;
  return normalized(f) == normalized(g);
}

Vector monomial_values(std::size_t n, unsigned d, std::span<const Rational> x) {
  if (x.size() != n) throw DimensionMismatch("monomial values at a point of the wrong dimension");
  const auto pw = power_table(x, d);
  const auto basis = monomial_basis(n, d);
  Vector out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Rational v = 1;
    for (std::size_t k = 0; k < n; ++k)
      if (basis[i].exponents[k]) v *= pw[k][basis[i].exponents[k]];
    out[i] = std::move(v);
  }
  return out;
}

std::vector<Vector> monomial_gradient_rows(std::size_t n, unsigned d, std::span<const Rational> x) {
  if (x.size() != n) throw DimensionMismatch("monomial gradients at a point of the wrong dimension");
  const auto pw = power_table(x, d);
  const auto basis = monomial_basis(n, d);
  std::vector<Vector> rows(n, Vector(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& e = basis[i].exponents;
    for (std::size_t j = 0; j < n; ++j) {
      if (e[j] == 0) continue;
      Rational v = e[j];
      for (std::size_t k = 0; k < n; ++k) {
        const unsigned ek = k == j ? e[k] - 1 : e[k];
        if (ek) v *= pw[k][ek];
      }
      rows[j][i] = std::move(v);
    }
  }
  return rows;
}

std::string to_string(const Form& f) {
  const auto basis = monomial_basis(f.n(), f.degree());
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Rational c = f.coeffs()[i];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    c = abs(c);
    bool has_vars = basis[i].degree() > 0;
    if (c != 1 || !has_vars) os << c.get_str() << (has_vars ? "*" : "");
    bool first_var = true;
    for (std::size_t k = 0; k < f.n(); ++k) {
      const unsigned e = basis[i].exponents[k];
      if (!e) continue;
      if (!first_var) os << "*";
      os << "x" << (k + 1);
      if (e > 1) os << "^" << e;
      first_var = false;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace conefaces
