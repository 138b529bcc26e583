#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "conefaces/ideal.hpp"

namespace conefaces {

struct NumericOptions {
  std::size_t samples = 2000;
  std::size_t refine_steps = 200;
  std::uint64_t seed = 0;
};

struct NumericMinimum {
  double value = 0.0;
  std::vector<double> point;  // unit vector where value was attained

  bool operator==(const NumericMinimum&) const = default;
};

/// Exact evidence that p is not a sum of squares: p is singular on Gamma,
/// every SOS form vanishing on Gamma lies in (I^2)_{2d}, and p does not.
struct NotSosProof {
  bool vanishes_order2 = false;
  bool in_symbolic = false;
  bool in_ordinary_square = false;

  bool holds() const { return vanishes_order2 && !in_ordinary_square; }
  bool operator==(const NotSosProof&) const = default;
};

struct Certificate {
  Form p;
  PointConfiguration gamma;
  Rational epsilon;
  NotSosProof not_sos_proof;
  std::vector<bool> roundness;  // per point of gamma
  // Floating point evidence only; never a proof of nonnegativity.
  NumericMinimum numeric_min;

  bool not_sos() const { return not_sos_proof.holds(); }
  bool operator==(const Certificate&) const = default;
};

/// p = sum Q_i^2 + epsilon R with every exact verdict computed.
Certificate build_certificate(const std::vector<Form>& Qs, const Form& R, const Rational& epsilon,
                              const PointConfiguration& gamma, const NumericOptions& numeric = {});

/// Sylvester test of B^T H_p(s) B > 0 for an exact basis B of the complement s^perp.
/// Throws unless p is singular at s.
bool roundness_at(const Form& p, const ProjectivePoint& s);

bool check_double_vanishing(const Form& p, const PointConfiguration& g);

/// Seeded multistart projected gradient descent of p over the unit sphere.
/// Deterministic for a given (p, samples, refine_steps, seed), independent of
/// the worker count.
NumericMinimum numeric_min_on_sphere(const Form& p, std::size_t samples, std::size_t refine_steps,
                                     std::uint64_t seed);

/// Largest epsilon = 2^k, k in [-20, 5], whose certificate has numeric minimum
/// >= -1e-9. Throws if sum Q_i^2 is not round on gamma or no grid value passes.
Rational epsilon_search(const std::vector<Form>& Qs, const Form& R, const PointConfiguration& gamma,
                        std::uint64_t seed, std::size_t samples = 2000);

inline constexpr double kNonnegativityTolerance = 1e-9;

}  // namespace conefaces
