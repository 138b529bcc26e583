#include "conefaces/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "conefaces/independence.hpp"

namespace conefaces {

namespace {

// d x_i - k M
Form shifted_coordinate(std::size_t n, std::size_t i, unsigned d, unsigned k) {
  Vector v(n, Rational(-static_cast<long>(k)));
  v[i] += d;
  return linear_form(v);
}

Vector unique_kernel_vector(const Matrix& m, const std::string& what) {
  const auto kernel = nullspace(m);
  if (kernel.dim() != 1) {
    throw Error(what + ": expected a one-dimensional kernel, found dimension " + std::to_string(kernel.dim()));
  }
  return primitive(kernel.basis().row(0));
}

Vector normal_to(const PointConfiguration& g, std::span<const std::size_t> indices, const std::string& what) {
  Matrix m(0, g.n());
  for (auto i : indices) m.append_row(g[i].coords());
  return unique_kernel_vector(m, what);
}

std::vector<Vector> dual_basis(const std::vector<Vector>& rows, const std::string& what) {
  Matrix u = Matrix::from_rows(rows, rows.front().size());
  Matrix inv;
  try {
    inv = inverse(u);
  } catch (const Error&) {
    throw Error(what + " do not form a basis");
  }
  std::vector<Vector> dual;
  for (std::size_t j = 0; j < inv.cols(); ++j) {
    Vector col(inv.rows());
    for (std::size_t i = 0; i < inv.rows(); ++i) col[i] = inv(i, j);
    dual.push_back(std::move(col));
  }
  return dual;
}

Form product_of_linear(const std::vector<Vector>& normals) {
  Form out = Form::constant(normals.front().size(), 1);
  for (const auto& u : normals) out = multiply(out, linear_form(u));
  return out;
}

bool vanishes_on(const Form& f, const PointConfiguration& g) {
  return std::all_of(g.points().begin(), g.points().end(),
                     [&](const ProjectivePoint& p) { return sgn(evaluate(f, p)) == 0; });
}

bool singular_on(const Form& f, const PointConfiguration& g) {
  return std::all_of(g.points().begin(), g.points().end(),
                     [&](const ProjectivePoint& p) { return is_zero(gradient_eval(f, p)); });
}

std::string index_name(const char* base, std::size_t i, const char* suffix = "") {
  return base + std::to_string(i + 1) + suffix;
}

}  // namespace

PointConfiguration sbar_points(std::size_t n, unsigned d) {
  if (n < 1 || d < 1) throw Error("partition points need n >= 1 and d >= 1");
  std::vector<ProjectivePoint> pts;
  for (const auto& m : monomial_basis(n, d)) pts.emplace_back(Vector(m.exponents.begin(), m.exponents.end()));
  return PointConfiguration(n, std::move(pts));
}

PointConfiguration snd_points(std::size_t n, unsigned d) {
  if (n < 2 || d < 2) throw Error("S_{n,d} needs n >= 2 and d >= 2");
  std::vector<ProjectivePoint> pts;
  for (const auto& m : monomial_basis(n, d)) {
    const auto nonzero = std::count_if(m.exponents.begin(), m.exponents.end(), [](unsigned e) { return e > 0; });
    if (nonzero >= 2) pts.emplace_back(Vector(m.exponents.begin(), m.exponents.end()));
  }
  return PointConfiguration(n, std::move(pts));
}

std::vector<Form> snd_basis(std::size_t n, unsigned d) {
  if (n < 2 || d < 2) throw Error("S_{n,d} basis needs n >= 2 and d >= 2");
  std::vector<Form> out;
  for (std::size_t i = 0; i < n; ++i) {
    Form q = Form::constant(n, 1);
    for (unsigned k = 0; k < d; ++k) q = multiply(q, shifted_coordinate(n, i, d, k));
    out.push_back(std::move(q));
  }
  return out;
}

Form interpolant_at(std::span<const unsigned> s, std::size_t n, unsigned d) {
  if (s.size() != n || std::accumulate(s.begin(), s.end(), 0u) != d) {
    throw Error("interpolation point is not a partition of " + std::to_string(d) + " into " + std::to_string(n) +
                " parts");
  }
  Form p = Form::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (unsigned k = 0; k < s[i]; ++k) p = multiply(p, shifted_coordinate(n, i, d, k));
  return p;
}

// ---------------------------------------------------------------------------

std::array<Triple, 4> default_triples() { return {{{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}}}; }

bool is_valid_triple_covering(const std::array<Triple, 4>& triples) {
  std::array<int, 6> count{};
  for (const auto& t : triples) {
    for (auto i : t)
      if (i >= 6) return false;
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) return false;
    for (auto i : t) ++count[i];
  }
  if (std::any_of(count.begin(), count.end(), [](int c) { return c != 2; })) return false;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) {
      int shared = 0;
      for (auto i : triples[a])
        shared += static_cast<int>(std::count(triples[b].begin(), triples[b].end(), i));
      if (shared != 1) return false;
    }
  return true;
}

SixPointScheme six_point_scheme(const PointConfiguration& g, std::optional<std::array<Triple, 4>> triples) {
  if (g.n() != 4 || g.size() != 6) throw Error("six-point scheme needs six points in R^4");
  const auto cover = triples.value_or(default_triples());
  if (!is_valid_triple_covering(cover)) throw Error("invalid triple covering");

  std::vector<Vector> u, v;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& t = cover[i];
    Triple complement{};
    std::size_t k = 0;
    for (std::size_t j = 0; j < 6; ++j)
      if (std::find(t.begin(), t.end(), j) == t.end()) complement[k++] = j;
    u.push_back(normal_to(g, t, index_name("normal u", i)));
    v.push_back(normal_to(g, complement, index_name("normal v", i)));
  }
  auto u_dual = dual_basis(u, "normals u_i");
  auto v_dual = dual_basis(v, "normals v_i");

  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (sgn(dot(u[i], v_dual[j])) == 0 || sgn(dot(v[i], u_dual[j])) == 0) {
        throw Error("degenerate six-point configuration: vanishing inner product between normals and dual normals at (" +
                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }

  std::vector<Form> Q;
  for (std::size_t i = 0; i < 4; ++i) Q.push_back(normalized(multiply(linear_form(u[i]), linear_form(v[i]))));
  Form R = normalized(product_of_linear(u));

  for (const auto& q : Q)
    if (!vanishes_on(q, g)) throw Error("internal: six-point basis form does not vanish on the configuration");
  if (!singular_on(R, g)) throw Error("internal: R is not singular on the configuration");

  return SixPointScheme{g, cover, std::move(u), std::move(v), std::move(u_dual), std::move(v_dual), std::move(Q),
                        std::move(R)};
}

// ---------------------------------------------------------------------------

SevenPointScheme seven_point_scheme(const PointConfiguration& g) {
  if (g.n() != 3 || g.size() != 7) throw Error("seven-point scheme needs seven points in P^2");
  if (is_d_independent(g, 3).verdict != Verdict::yes) throw Error("seven-point scheme needs a 3-independent set");

  std::vector<Vector> u;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::array<std::size_t, 2> pair{2 * i, 2 * i + 1};
    u.push_back(normal_to(g, pair, index_name("line normal u", i)));
  }
  auto u_dual = dual_basis(u, "line normals u_i");

  // K_i passes through the five points off the i-th line.
  std::vector<Form> conics;
  for (std::size_t i = 0; i < 3; ++i) {
    Matrix m(0, form_space_dim(3, 2));
    for (std::size_t j = 0; j < 7; ++j)
      if (j / 2 != i || j == 6) m.append_row(monomial_values(3, 2, g[j].coords()));
    conics.push_back(normalized(Form(3, 2, unique_kernel_vector(m, index_name("conic K", i)))));
  }

  Matrix cubic_conditions(0, form_space_dim(3, 3));
  for (std::size_t j = 0; j < 6; ++j) cubic_conditions.append_row(monomial_values(3, 3, g[j].coords()));
  for (const auto& row : monomial_gradient_rows(3, 3, g[6].coords())) cubic_conditions.append_row(row);
  Form K = normalized(Form(3, 3, unique_kernel_vector(cubic_conditions, "cubic K")));

  std::vector<std::pair<std::string, std::string>> failures;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j && sgn(evaluate(conics[i], u_dual[j])) == 0)
        failures.emplace_back(index_name("K", i), index_name("u", j, "*"));
  if (!failures.empty()) {
    std::string message = "genericity guard failed:";
    for (const auto& [form, point] : failures) message += " " + form + "(" + point + ") = 0;";
    message += " perturb the configuration";
    throw GenericityError(message, std::move(failures));
  }

  const Subspace cubics = vanishing_component(g, 3);
  auto is_basis = [&](const std::vector<Form>& q) {
    std::vector<Vector> coeffs;
    for (const auto& f : q) coeffs.push_back(f.coeffs());
    return span(coeffs, form_space_dim(3, 3)) == cubics;
  };
  std::vector<Form> Q;
  for (std::size_t i = 0; i < 3; ++i) Q.push_back(normalized(multiply(linear_form(u[i]), conics[i])));
  unsigned q3_factor = 3;
  if (!is_basis(Q)) {
    Q[2] = normalized(multiply(linear_form(u[0]), conics[2]));
    q3_factor = 1;
    if (!is_basis(Q)) throw Error("no candidate cubic family is a basis of I_3");
  }

  Form R = normalized(multiply(K, product_of_linear(u)));
  if (!singular_on(R, g)) throw Error("internal: R is not singular on the configuration");

  // K(u_j*) != 0 is sufficient for R outside (I^2)_6 but not necessary, so
  // zeros are recorded and the conclusion is tested directly.
  std::vector<std::string> k_zeros;
  for (std::size_t j = 0; j < 3; ++j)
    if (sgn(evaluate(K, u_dual[j])) == 0) k_zeros.push_back(index_name("u", j, "*"));
  if (contains(ordinary_square_component(g, 6), R.coeffs())) {
    std::vector<std::pair<std::string, std::string>> k_failures;
    std::string message = "R lies in (I^2)_6:";
    for (const auto& p : k_zeros) {
      k_failures.emplace_back("K", p);
      message += " K(" + p + ") = 0;";
    }
    throw GenericityError(message + " perturb the configuration", std::move(k_failures));
  }

  return SevenPointScheme{g,           std::move(u), std::move(u_dual), std::move(conics), std::move(K),
                          std::move(Q), std::move(R), q3_factor,       std::move(k_zeros)};
}

// ---------------------------------------------------------------------------

namespace {

Form lin(std::initializer_list<long> coeffs) {
  Vector v(coeffs.begin(), coeffs.end());
  return linear_form(v);
}

}  // namespace

ExampleForms example_six_point_forms() {
  ExampleForms out{{}, Form(4, 4)};
  for (std::size_t i = 0; i < 4; ++i) {
    Vector v(4, Rational(-1));
    v[i] = 1;
    out.Q.push_back(multiply(Form::variable(4, i), linear_form(v)));
  }
  out.R = Form::variable(4, 0) * Form::variable(4, 1) * Form::variable(4, 2) * Form::variable(4, 3);
  return out;
}

ExampleForms example_seven_point_forms() {
  const Form x1 = Form::variable(3, 0), x2 = Form::variable(3, 1), x3 = Form::variable(3, 2);
  ExampleForms out{{}, Form(3, 6)};
  out.Q.push_back((Rational(3) * x1 * x2 - x1 * x3 - Rational(2) * x2 * x3) * lin({1, 1, -1}));
  out.Q.push_back(lin({0, 1, -1}) * lin({1, 0, -1}) * lin({2, 1, 0}));
  out.Q.push_back(x3 * (Rational(8) * x1 * x1 + x2 * x2 - Rational(8) * x1 * x3 - x2 * x3));
  out.R = Rational(-1) * x3 * power(lin({2, 1, 0}), 2) * lin({1, 1, -1}) * lin({0, 1, -1}) * lin({1, 0, -1});
  return out;
}

PointConfiguration example_six_points() {
  return PointConfiguration(4, {{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}});
}

PointConfiguration example_seven_points_perturbed() {
  return PointConfiguration(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -2, 2}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}

PointConfiguration example_seven_points_unperturbed() {
  return PointConfiguration(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}

}  // namespace conefaces
