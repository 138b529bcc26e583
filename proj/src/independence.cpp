#include "conefaces/independence.hpp"

#include <numeric>

namespace conefaces {

namespace {

std::optional<std::size_t> first_failing_point(const PointConfiguration& g, unsigned d) {
  const std::size_t n = g.n();
  const std::size_t target = g.size() + n - 1;
  if (form_space_dim(n, d) < target) return 0;
  std::vector<Vector> eval_rows;
  eval_rows.reserve(g.size());
  for (const auto& p : g.points()) eval_rows.push_back(monomial_values(n, d, p.coords()));
  for (std::size_t s = 0; s < g.size(); ++s) {
    Matrix m(0, form_space_dim(n, d));
    for (std::size_t t = 0; t < g.size(); ++t)
      if (t != s) m.append_row(eval_rows[t]);
    for (const auto& row : monomial_gradient_rows(n, d, g[s].coords())) m.append_row(row);
    if (rank(m) != target) return s;
  }
  return std::nullopt;
}

// Products m*q for all monomials m of degree k - d and all q in `generators`,
// which must vanish on g; the span then sits inside I_k(g).
std::size_t generated_dim(const std::vector<Form>& generators, const PointConfiguration& g, unsigned d,
                          unsigned k) {
  const std::size_t n = g.n();
  const std::size_t cols = form_space_dim(n, k);
  if (generators.empty()) return 0;
  const auto shifts = monomial_basis(n, k - d);
  const auto base = monomial_basis(n, d);
  Matrix m(0, cols);
  Vector row(cols);
  Exponents sum(n);
  for (const auto& q : generators) {
    for (const auto& shift : shifts) {
      std::fill(row.begin(), row.end(), Rational(0));
      for (std::size_t i = 0; i < base.size(); ++i) {
        if (sgn(q.coeffs()[i]) == 0) continue;
        for (std::size_t v = 0; v < n; ++v) sum[v] = base[i].exponents[v] + shift.exponents[v];
        row[monomial_index(sum)] = q.coeffs()[i];
      }
      m.append_row(row);
    }
  }
  const std::size_t upper = cols - rank(evaluation_matrix(g, k));
  return rank_with_bound(m, upper);
}

}  // namespace

bool condition2_holds(const PointConfiguration& g, unsigned d) {
  const std::size_t target = g.size() + g.n() - 1;
  if (form_space_dim(g.n(), d) < target) {
    throw Error("codimension " + std::to_string(target) + " unreachable in H_{" + std::to_string(g.n()) + "," +
                std::to_string(d) + "} of dimension " + std::to_string(form_space_dim(g.n(), d)));
  }
  return !first_failing_point(g, d).has_value();
}

std::size_t hilbert_function(const PointConfiguration& g, unsigned d, unsigned k) {
  if (d == 0) throw Error("Hilbert function needs d >= 1");
  if (k < d) throw Error("Hilbert function degree k must be at least d");
  const auto generators = forms_of(vanishing_component(g, d), g.n(), d);
  return form_space_dim(g.n(), k) - generated_dim(generators, g, d, k);
}

IndependenceReport is_d_independent(const PointConfiguration& g, unsigned d) {
  if (d == 0) throw Error("d-independence needs d >= 1");
  IndependenceReport report;
  const std::size_t n = g.n();
  report.condition2_failed_at = first_failing_point(g, d);
  report.condition2 = !report.condition2_failed_at.has_value();

  const auto generators = forms_of(vanishing_component(g, d), n, d);
  auto hf = [&](unsigned k) {
    const std::size_t value = form_space_dim(n, k) - generated_dim(generators, g, d, k);
    report.hilbert_values.emplace_back(k, value);
    return value;
  };

  const unsigned k_star = static_cast<unsigned>((n - 1) * (d - 1) + d);
  report.stabilization_degree_used = k_star;
  std::size_t previous = hf(k_star);
  std::optional<std::size_t> stable;
  std::size_t current = hf(k_star + 1);
  if (current == previous) stable = current;

  if (!report.condition2) {
    report.verdict = Verdict::no;
    return report;
  }
  for (unsigned k = k_star + 2; !stable && k <= k_star + n; ++k) {
    previous = current;
    current = hf(k);
    if (current == previous) {
      stable = current;
      report.stabilization_degree_used = k - 1;
    }
  }
  if (!stable) {
    report.verdict = Verdict::indeterminate;
  } else if (*stable == g.size()) {
    report.verdict = Verdict::yes;
  } else {
    report.verdict = Verdict::no;
  }
  return report;
}

bool is_general_linear_position(const PointConfiguration& g) {
  const std::size_t n = g.n();
  const std::size_t m = g.size();
  if (m <= n) {
    Matrix coords(0, n);
    for (const auto& p : g.points()) coords.append_row(p.coords());
    return rank(coords) == m;
  }
  // Every n-subset must be a basis of Q^n.
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Matrix sub(0, n);
    for (auto i : idx) sub.append_row(g[i].coords());
    if (sgn(determinant(sub)) == 0) return false;
    std::size_t pos = n;
    while (pos-- > 0) {
      if (idx[pos] < m - n + pos) break;
      if (pos == 0) return true;
    }
    ++idx[pos];
    for (std::size_t j = pos + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace conefaces
