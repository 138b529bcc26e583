#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "conefaces/linalg.hpp"

namespace conefaces {

using Exponents = std::vector<unsigned>;

struct Monomial {
  Exponents exponents;
  unsigned degree() const;
  bool operator==(const Monomial&) const = default;
};

std::size_t binomial(std::size_t n, std::size_t k);

/// dim H_{n,d}: number of monomials of degree d in n variables.
std::size_t form_space_dim(std::size_t n, unsigned d);

/// All monomials of degree d in n variables in graded-lex order
/// (x1^d first, xn^d last).
std::vector<Monomial> monomial_basis(std::size_t n, unsigned d);

/// Position of a degree-d monomial within monomial_basis(n, d).
std::size_t monomial_index(std::span<const unsigned> exponents);

/// Nonzero vector in Q^n standing for a point of real projective space.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(Vector coords);
  ProjectivePoint(std::initializer_list<long> coords);

  std::size_t n() const { return coords_.size(); }
  const Vector& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  /// Representative with first nonzero coordinate equal to 1.
  Vector canonical() const;
  bool projectively_equal(const ProjectivePoint& other) const;
  /// Literal coordinate equality (not projective).
  bool operator==(const ProjectivePoint&) const = default;

 private:
  Vector coords_;
};

/// Homogeneous polynomial of fixed degree, dense over monomial_basis(n, degree).
class Form {
 public:
  Form(std::size_t n, unsigned degree);
  Form(std::size_t n, unsigned degree, Vector coeffs);

  static Form monomial(std::span<const unsigned> exponents, Rational coeff = 1);
  static Form variable(std::size_t n, std::size_t i);
  static Form constant(std::size_t n, Rational value);

  std::size_t n() const { return n_; }
  unsigned degree() const { return degree_; }
  const Vector& coeffs() const { return coeffs_; }
  Rational& coeff(std::span<const unsigned> exponents) { return coeffs_[monomial_index(exponents)]; }
  const Rational& coeff(std::span<const unsigned> exponents) const { return coeffs_[monomial_index(exponents)]; }
  bool is_zero() const { return conefaces::is_zero(coeffs_); }

  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form& operator*=(const Rational& c);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Rational& c) { return a *= c; }
  friend Form operator*(const Rational& c, Form a) { return a *= c; }
  friend Form operator*(const Form& a, const Form& b);

  bool operator==(const Form&) const = default;

 private:
  std::size_t n_;
  unsigned degree_;
  Vector coeffs_;
};

Rational evaluate(const Form& f, std::span<const Rational> x);
Rational evaluate(const Form& f, const ProjectivePoint& p);
Form multiply(const Form& f, const Form& g);
Form power(const Form& f, unsigned k);

/// Partial derivative with respect to x_{var}.
Form partial(const Form& f, std::size_t var);
Vector gradient_eval(const Form& f, const ProjectivePoint& p);
Vector gradient_eval(const Form& f, std::span<const Rational> x);
Matrix hessian_eval(const Form& f, const ProjectivePoint& p);

/// <v, x> as a degree-one form. v must be nonzero.
Form linear_form(std::span<const Rational> v);

/// Scales f so that its first nonzero coefficient in graded-lex order is 1.
Form normalized(const Form& f);
/// True iff f and g are nonzero multiples of each other.
bool proportional(const Form& f, const Form& g);

/// Row of monomial values m(x) for every monomial of degree d.
Vector monomial_values(std::size_t n, unsigned d, std::span<const Rational> x);
/// n rows; row j holds d m / d x_j evaluated at x for every monomial m of degree d.
std::vector<Vector> monomial_gradient_rows(std::size_t n, unsigned d, std::span<const Rational> x);

/// Human-readable rendering, e.g. "x1^2 - 3/2*x2*x3".
std::string to_string(const Form& f);

}  // namespace conefaces
