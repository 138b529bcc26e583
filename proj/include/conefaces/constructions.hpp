#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conefaces/ideal.hpp"

namespace conefaces {

/// All nonnegative integer vectors of length n summing to d, as points.
PointConfiguration sbar_points(std::size_t n, unsigned d);
/// sbar_points without the coordinate points d*e_i.
PointConfiguration snd_points(std::size_t n, unsigned d);
/// Q_i = prod_{k<d} (d x_i - k M), M = x_1 + ... + x_n, for i = 1..n.
std::vector<Form> snd_basis(std::size_t n, unsigned d);
/// Degree-d form nonzero at the partition point s and zero at every other
/// partition point of d.
Form interpolant_at(std::span<const unsigned> s, std::size_t n, unsigned d);

using Triple = std::array<std::size_t, 3>;  // 0-based point indices

/// Four triples covering six indices: pairwise intersections of size one and
/// every index in exactly two triples.
std::array<Triple, 4> default_triples();
bool is_valid_triple_covering(const std::array<Triple, 4>& triples);

struct SixPointScheme {
  PointConfiguration gamma;
  std::array<Triple, 4> triples;
  std::vector<Vector> u;  // u_i normal to the span of the points in triple i
  std::vector<Vector> v;  // v_i normal to the span of the complementary triple
  std::vector<Vector> u_dual;
  std::vector<Vector> v_dual;
  std::vector<Form> Q;  // Q_i = <x,u_i><x,v_i>
  Form R;               // prod <x,u_i>

  bool operator==(const SixPointScheme&) const = default;
};

/// Requires n = 4 and six points such that each triple and each complementary
/// triple spans a plane and the 32 inner products <u_i, v_j*>, <v_i, u_j*> are
/// nonzero. General linear position implies all of this. Every structural
/// invariant is checked; violations throw.
SixPointScheme six_point_scheme(const PointConfiguration& g,
                                std::optional<std::array<Triple, 4>> triples = std::nullopt);

struct SevenPointScheme {
  PointConfiguration gamma;
  std::vector<Vector> u;  // normals to lines (s1,s2), (s3,s4), (s5,s6)
  std::vector<Vector> u_dual;
  std::vector<Form> K_conics;  // K_i through the five points not on line i
  Form K;                      // cubic through s1..s6, singular at s7
  std::vector<Form> Q;         // cubic basis of I_3(Gamma)
  Form R;                      // K <x,u1><x,u2><x,u3>
  // Which linear factor multiplies K_3 in Q_3 (3 = <x,u_3>, 1 = fallback <x,u_1>).
  unsigned q3_linear_factor = 3;
  // Dual vectors u_j* at which K vanishes, e.g. "u1*". R is still verified to
  // lie outside (I^2)_6.
  std::vector<std::string> k_zeros;

  bool operator==(const SevenPointScheme&) const = default;
};

/// A genericity guard K_i(u_j*) != 0 (i != j) failed, or R fell into (I^2)_6.
class GenericityError : public Error {
 public:
  // (form name, dual vector name) pairs, e.g. ("K1", "u3*").
  GenericityError(std::string message, std::vector<std::pair<std::string, std::string>> failures)
      : Error(std::move(message)), failures_(std::move(failures)) {}
  const std::vector<std::pair<std::string, std::string>>& failures() const { return failures_; }

 private:
  std::vector<std::pair<std::string, std::string>> failures_;
};

/// Requires n = 3, seven 3-independent points.
SevenPointScheme seven_point_scheme(const PointConfiguration& g);

/// Quadric or cubic basis and R of a worked example with the exact scaling and
/// sign under which sum Q_i^2 + R is nonnegative.
struct ExampleForms {
  std::vector<Form> Q;
  Form R;
};
/// Q_i = x_i(x_i - sum_{j != i} x_j), R = x1 x2 x3 x4.
ExampleForms example_six_point_forms();
/// The three cubics and the sextic R for the perturbed seven points.
ExampleForms example_seven_point_forms();

/// The six points (0,0,1,1), ..., (1,1,0,0) in R^4.
PointConfiguration example_six_points();
/// The seven points of the ternary sextic example with s4 perturbed to (1,-2,2).
PointConfiguration example_seven_points_perturbed();
/// Same, with the original s4 = (1,1,0).
PointConfiguration example_seven_points_unperturbed();

}  // namespace conefaces
