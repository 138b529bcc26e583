#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "conefaces/linalg.hpp"
#include "conefaces/polynomial.hpp"

namespace conefaces {

/// A finite set of pairwise projectively distinct points in P^{n-1}.
class PointConfiguration {
 public:
  PointConfiguration(std::size_t n, std::vector<ProjectivePoint> points);

  std::size_t n() const { return n_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<ProjectivePoint>& points() const { return points_; }
  const ProjectivePoint& operator[](std::size_t i) const { return points_[i]; }

  PointConfiguration without(std::size_t index) const;
  PointConfiguration with(const ProjectivePoint& extra) const;

  bool operator==(const PointConfiguration&) const = default;

 private:
  std::size_t n_;
  std::vector<ProjectivePoint> points_;
};

/// Evaluation matrix: one row per point, one column per monomial of degree d.
Matrix evaluation_matrix(const PointConfiguration& g, unsigned d);
/// n gradient rows per point, one column per monomial of degree e.
Matrix gradient_matrix(const PointConfiguration& g, unsigned e);

/// I_d(Gamma): forms of degree d vanishing on every point.
Subspace vanishing_component(const PointConfiguration& g, unsigned d);
/// I^(2)_e(Gamma): forms of degree e singular at every point.
Subspace symbolic_square_component(const PointConfiguration& g, unsigned e);
/// (I^2)_e(Gamma): span of products f*g with f in I_a, g in I_b, a + b = e.
Subspace ordinary_square_component(const PointConfiguration& g, unsigned e);
/// Span of all pairwise products of the given same-degree forms.
Subspace pairwise_product_span(const std::vector<Form>& forms);
/// Smallest d >= 1 with I_d(Gamma) != 0.
unsigned alpha(const PointConfiguration& g);

/// Basis of a subspace of H_{n,d} as forms, each scaled to a primitive integer vector.
std::vector<Form> forms_of(const Subspace& s, std::size_t n, unsigned d);
Form form_of(std::span<const Rational> coeffs, std::size_t n, unsigned d);

enum class Verdict { yes, no, indeterminate };
std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct FaceReport {
  std::size_t n = 0;
  unsigned d = 0;
  std::size_t gamma_size = 0;
  std::size_t dim_Id = 0;
  std::size_t dim_I2_2d = 0;
  std::size_t dim_Isym2_2d = 0;
  unsigned alpha = 0;
  Verdict d_independent = Verdict::indeterminate;
  std::size_t gap = 0;
  // Expected dim I^(2)_2d for generic points, max(0, dim H_{n,2d} - n|Gamma|).
  std::size_t naive_symbolic_count = 0;
  bool matches_naive_count = false;

  bool operator==(const FaceReport&) const = default;
};

FaceReport face_report(const PointConfiguration& g, unsigned d);

}  // namespace conefaces
