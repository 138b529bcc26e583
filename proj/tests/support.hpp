#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "conefaces/ideal.hpp"

namespace conefaces::testing {

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// num/den in lowest terms.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational random_rational(std::mt19937_64& rng, long bound = 9, long max_den = 5) {
  Rational q(uniform(rng, -bound, bound), uniform(rng, 1, max_den));
  q.canonicalize();
  return q;
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t n, long bound = 9, long max_den = 5) {
  Vector v(n);
  for (auto& x : v) x = random_rational(rng, bound, max_den);
  return v;
}

inline Vector random_nonzero_vector(std::mt19937_64& rng, std::size_t n, long bound = 9) {
  Vector v;
  do v = random_vector(rng, n, bound, 1);
  while (is_zero(v));
  return v;
}

/// rows x cols matrix of rank at most `rank_cap`, built as a product of two random factors.
inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t rank_cap) {
  Matrix a(rows, rank_cap), b(rank_cap, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < rank_cap; ++j) a(i, j) = random_rational(rng, 4, 3);
  for (std::size_t i = 0; i < rank_cap; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = random_rational(rng, 4, 3);
  return a * b;
}

inline Form random_form(std::mt19937_64& rng, std::size_t n, unsigned d, long bound = 6) {
  return Form(n, d, random_vector(rng, form_space_dim(n, d), bound, 3));
}

/// Small integer points, pairwise projectively distinct.
inline PointConfiguration random_points(std::mt19937_64& rng, std::size_t n, std::size_t size, long bound = 7) {
  std::vector<ProjectivePoint> pts;
  while (pts.size() < size) {
    ProjectivePoint p(random_nonzero_vector(rng, n, bound));
    bool fresh = true;
    for (const auto& q : pts) fresh = fresh && !q.projectively_equal(p);
    if (fresh) pts.push_back(std::move(p));
  }
  return PointConfiguration(n, std::move(pts));
}

}  // namespace conefaces::testing
