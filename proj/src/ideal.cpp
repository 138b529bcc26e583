#include "conefaces/ideal.hpp"

#include <algorithm>

#include "conefaces/independence.hpp"

namespace conefaces {

PointConfiguration::PointConfiguration(std::size_t n, std::vector<ProjectivePoint> points)
    : n_(n), points_(std::move(points)) {
  if (n_ == 0) throw Error("point configuration needs n >= 1");
  if (points_.empty()) throw Error("point configuration needs at least one point");
  std::vector<Vector> canonical;
  canonical.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].n() != n_) {
      throw DimensionMismatch("point " + std::to_string(i + 1) + " has " + std::to_string(points_[i].n()) +
                              " coordinates, expected " + std::to_string(n_));
    }
    canonical.push_back(points_[i].canonical());
    for (std::size_t j = 0; j < i; ++j)
      if (canonical[j] == canonical[i]) {
        throw Error("points " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                    " are projectively equal");
      }
  }
}

PointConfiguration PointConfiguration::without(std::size_t index) const {
  auto pts = points_;
  pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(index));
  return PointConfiguration(n_, std::move(pts));
}

PointConfiguration PointConfiguration::with(const ProjectivePoint& extra) const {
  auto pts = points_;
  pts.push_back(extra);
  return PointConfiguration(n_, std::move(pts));
}

Matrix evaluation_matrix(const PointConfiguration& g, unsigned d) {
  Matrix m(0, form_space_dim(g.n(), d));
  for (const auto& p : g.points()) m.append_row(monomial_values(g.n(), d, p.coords()));
  return m;
}

Matrix gradient_matrix(const PointConfiguration& g, unsigned e) {
  Matrix m(0, form_space_dim(g.n(), e));
  for (const auto& p : g.points())
    for (const auto& row : monomial_gradient_rows(g.n(), e, p.coords())) m.append_row(row);
  return m;
}

Subspace vanishing_component(const PointConfiguration& g, unsigned d) {
  if (d == 0) throw Error("vanishing component needs degree >= 1");
  return nullspace(evaluation_matrix(g, d));
}

Subspace symbolic_square_component(const PointConfiguration& g, unsigned e) {
  if (e < 2) throw Error("symbolic square component needs degree >= 2");
  // Euler's identity makes the evaluation rows redundant.
  return nullspace(gradient_matrix(g, e));
}

Form form_of(std::span<const Rational> coeffs, std::size_t n, unsigned d) {
  return Form(n, d, primitive(coeffs));
}

std::vector<Form> forms_of(const Subspace& s, std::size_t n, unsigned d) {
  std::vector<Form> out;
  out.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(form_of(s.basis().row(i), n, d));
  return out;
}

Subspace ordinary_square_component(const PointConfiguration& g, unsigned e) {
  if (e < 2) throw Error("ordinary square component needs degree >= 2");
  const unsigned a0 = alpha(g);
  std::vector<Vector> products;
  for (unsigned a = a0; 2 * a <= e; ++a) {
    const unsigned b = e - a;
    const auto left = forms_of(vanishing_component(g, a), g.n(), a);
    const auto right = a == b ? left : forms_of(vanishing_component(g, b), g.n(), b);
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = a == b ? i : 0; j < right.size(); ++j)
        products.push_back(multiply(left[i], right[j]).coeffs());
  }
  return span(products, form_space_dim(g.n(), e));
}

Subspace pairwise_product_span(const std::vector<Form>& forms) {
  if (forms.empty()) throw Error("pairwise product span of an empty family");
  const std::size_t n = forms.front().n();
  const unsigned d = forms.front().degree();
  std::vector<Vector> products;
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i; j < forms.size(); ++j) products.push_back(multiply(forms[i], forms[j]).coeffs());
  return span(products, form_space_dim(n, 2 * d));
}

unsigned alpha(const PointConfiguration& g) {
  unsigned first_large = 1;
  while (form_space_dim(g.n(), first_large) <= g.size()) ++first_large;
  const unsigned cap = 2 * first_large;
  for (unsigned d = 1; d <= cap; ++d)
    if (vanishing_component(g, d).dim() > 0) return d;
  throw Error("no vanishing form found up to degree " + std::to_string(cap));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "yes") return Verdict::yes;
  if (s == "no") return Verdict::no;
  if (s == "indeterminate") return Verdict::indeterminate;
  throw Error("unknown verdict '" + s + "'");
}

FaceReport face_report(const PointConfiguration& g, unsigned d) {
  if (d == 0) throw Error("face report needs d >= 1");
  FaceReport r;
  r.n = g.n();
  r.d = d;
  r.gamma_size = g.size();
  r.dim_Id = vanishing_component(g, d).dim();
  r.dim_I2_2d = ordinary_square_component(g, 2 * d).dim();
  r.dim_Isym2_2d = symbolic_square_component(g, 2 * d).dim();
  r.alpha = alpha(g);
  r.d_independent = is_d_independent(g, d).verdict;
  if (r.dim_I2_2d > r.dim_Isym2_2d) throw Error("internal: ordinary square exceeds symbolic square");
  r.gap = r.dim_Isym2_2d - r.dim_I2_2d;
  const std::size_t full = form_space_dim(g.n(), 2 * d);
  const std::size_t conditions = g.n() * g.size();
  r.naive_symbolic_count = full > conditions ? full - conditions : 0;
  r.matches_naive_count = r.naive_symbolic_count == r.dim_Isym2_2d;
  return r;
}

}  // namespace conefaces
