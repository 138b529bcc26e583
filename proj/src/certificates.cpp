#include "conefaces/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "conefaces/parallel.hpp"

namespace conefaces {

namespace {

// Double-precision copy of a form for the numeric search.
class NumericForm {
 public:
  explicit NumericForm(const Form& f) : n_(f.n()), degree_(f.degree()) {
    const auto basis = monomial_basis(f.n(), f.degree());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (sgn(f.coeffs()[i]) == 0) continue;
      coeffs_.push_back(f.coeffs()[i].get_d());
      exponents_.push_back(basis[i].exponents);
    }
  }

  double value(const std::vector<double>& x) const {
    double total = 0.0;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
      double term = coeffs_[t];
      for (std::size_t k = 0; k < n_; ++k)
        for (unsigned e = 0; e < exponents_[t][k]; ++e) term *= x[k];
      total += term;
    }
    return total;
  }

  void gradient(const std::vector<double>& x, std::vector<double>& out) const {
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
      for (std::size_t j = 0; j < n_; ++j) {
        const unsigned ej = exponents_[t][j];
        if (ej == 0) continue;
        double term = coeffs_[t] * ej;
        for (std::size_t k = 0; k < n_; ++k) {
          const unsigned e = k == j ? ej - 1 : exponents_[t][k];
          for (unsigned r = 0; r < e; ++r) term *= x[k];
        }
        out[j] += term;
      }
    }
  }

  std::size_t n() const { return n_; }
  unsigned degree() const { return degree_; }

 private:
  std::size_t n_;
  unsigned degree_;
  std::vector<double> coeffs_;
  std::vector<Exponents> exponents_;
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform point on the unit sphere, Box-Muller on a per-sample splitmix stream.
std::vector<double> sphere_sample(std::size_t n, std::uint64_t seed, std::size_t index) {
  std::uint64_t state = splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL);
  auto uniform = [&state]() {
    state = splitmix64(state);
    return (static_cast<double>(state >> 11) + 0.5) * 0x1.0p-53;
  };
  std::vector<double> x(n);
  double norm2 = 0.0;
  while (norm2 < 1e-12) {
    for (std::size_t k = 0; k < n; ++k) {
      const double r = std::sqrt(-2.0 * std::log(uniform()));
      x[k] = r * std::cos(2.0 * M_PI * uniform());
    }
    norm2 = 0.0;
    for (double v : x) norm2 += v * v;
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& v : x) v *= inv;
  return x;
}

void normalize(std::vector<double>& x) {
  double norm2 = 0.0;
  for (double v : x) norm2 += v * v;
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& v : x) v *= inv;
}

NumericMinimum refine(const NumericForm& f, std::vector<double> x, std::size_t steps) {
  const std::size_t n = f.n();
  double fx = f.value(x);
  double step = 0.0;  // set on the first iteration: a move of length 1/2
  std::vector<double> g(n), y(n);
  for (std::size_t it = 0; it < steps && (it == 0 || step > 1e-18); ++it) {
    f.gradient(x, g);
    double radial = 0.0;
    for (std::size_t k = 0; k < n; ++k) radial += g[k] * x[k];
    double tangent2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      g[k] -= radial * x[k];
      tangent2 += g[k] * g[k];
    }
    if (tangent2 < 1e-30) break;
    if (it == 0) step = 0.5 / std::sqrt(tangent2);
    for (std::size_t k = 0; k < n; ++k) y[k] = x[k] - step * g[k];
    normalize(y);
    const double fy = f.value(y);
    if (fy < fx) {
      x.swap(y);
      fx = fy;
    } else {
      step *= 0.5;
    }
  }
  return {fx, std::move(x)};
}

}  // namespace

NumericMinimum numeric_min_on_sphere(const Form& p, std::size_t samples, std::size_t refine_steps,
                                     std::uint64_t seed) {
  if (samples == 0) throw Error("numeric minimisation needs at least one sample");
  const NumericForm f(p);
  const std::size_t workers = std::min(worker_count(), samples);

  struct Best {
    double value = std::numeric_limits<double>::infinity();
    std::size_t index = 0;
    std::vector<double> point;
  };
  std::vector<Best> best(workers);
  parallel_for(workers, [&](std::size_t w) {
    for (std::size_t i = w; i < samples; i += workers) {
      auto result = refine(f, sphere_sample(p.n(), seed, i), refine_steps);
      if (result.value < best[w].value || (result.value == best[w].value && i < best[w].index))
        best[w] = {result.value, i, std::move(result.point)};
    }
  });
  const auto winner = std::min_element(best.begin(), best.end(), [](const Best& a, const Best& b) {
    return a.value < b.value || (a.value == b.value && a.index < b.index);
  });
  return {winner->value, winner->point};
}

bool check_double_vanishing(const Form& p, const PointConfiguration& g) {
  if (p.n() != g.n()) throw DimensionMismatch("form and configuration have different numbers of variables");
  if (p.degree() == 0) return p.is_zero();
  return std::all_of(g.points().begin(), g.points().end(),
                     [&](const ProjectivePoint& s) { return is_zero(gradient_eval(p, s)); });
}

bool roundness_at(const Form& p, const ProjectivePoint& s) {
  if (p.degree() < 2 || !is_zero(gradient_eval(p, s))) {
    throw Error("roundness is only defined at points where the form vanishes to order 2");
  }
  const std::size_t n = p.n();
  Matrix normal(0, n);
  normal.append_row(s.coords());
  const Matrix complement = nullspace(normal).basis();  // (n-1) x n
  const Matrix restricted = complement * hessian_eval(p, s) * complement.transpose();
  const std::size_t m = restricted.rows();
  for (std::size_t k = 1; k <= m; ++k) {
    Matrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = restricted(i, j);
    if (sgn(determinant(std::move(minor))) <= 0) return false;
  }
  return true;
}

namespace {

Form sum_of_squares(const std::vector<Form>& Qs) {
  Form total(Qs.front().n(), 2 * Qs.front().degree());
  for (const auto& q : Qs) total += multiply(q, q);
  return total;
}

void check_certificate_inputs(const std::vector<Form>& Qs, const Form& R, const PointConfiguration& gamma) {
  if (Qs.empty()) throw Error("certificate needs at least one form Q_i");
  const unsigned d = Qs.front().degree();
  for (const auto& q : Qs)
    if (q.degree() != d || q.n() != gamma.n()) throw DimensionMismatch("forms Q_i must share degree and variables");
  if (R.degree() != 2 * d || R.n() != gamma.n()) {
    throw DimensionMismatch("R must have degree " + std::to_string(2 * d) + " in " + std::to_string(gamma.n()) +
                            " variables");
  }
}

}  // namespace

Certificate build_certificate(const std::vector<Form>& Qs, const Form& R, const Rational& epsilon,
                              const PointConfiguration& gamma, const NumericOptions& numeric) {
  check_certificate_inputs(Qs, R, gamma);
  if (sgn(epsilon) < 0) throw Error("epsilon must be nonnegative");
  const unsigned two_d = R.degree();

  Form p = sum_of_squares(Qs) + R * epsilon;
  NotSosProof proof;
  proof.vanishes_order2 = check_double_vanishing(p, gamma);
  proof.in_symbolic = contains(symbolic_square_component(gamma, two_d), p.coeffs());
  proof.in_ordinary_square = contains(ordinary_square_component(gamma, two_d), p.coeffs());

  std::vector<bool> round;
  for (const auto& s : gamma.points()) round.push_back(proof.vanishes_order2 && roundness_at(p, s));

  auto minimum = numeric_min_on_sphere(p, numeric.samples, numeric.refine_steps, numeric.seed);
  return Certificate{std::move(p), gamma, epsilon, proof, std::move(round), std::move(minimum)};
}

Rational epsilon_search(const std::vector<Form>& Qs, const Form& R, const PointConfiguration& gamma,
                        std::uint64_t seed, std::size_t samples) {
  check_certificate_inputs(Qs, R, gamma);
  const Form base = sum_of_squares(Qs);
  for (const auto& s : gamma.points()) {
    if (!is_zero(gradient_eval(base, s)) || !roundness_at(base, s))
      throw Error("sum of squares of the Q_i is not round on the configuration");
  }
  for (int k = 5; k >= -20; --k) {
    Rational eps = 1;
    if (k >= 0) eps = Rational(mpz_class(1) << k);
    else eps = Rational(mpz_class(1), mpz_class(1) << -k);
    const Form p = base + R * eps;
    if (numeric_min_on_sphere(p, samples, 200, seed).value >= -kNonnegativityTolerance) return eps;
  }
  throw Error("no epsilon in the dyadic grid 2^-20 .. 2^5 passed the numeric check");
}

}  // namespace conefaces
