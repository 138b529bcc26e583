#include <gtest/gtest.h>

#include <algorithm>

#include "conefaces/constructions.hpp"
#include "conefaces/ideal.hpp"
#include "conefaces/random_config.hpp"
#include "support.hpp"

namespace conefaces {
namespace {

PointConfiguration glp(std::size_t n, std::size_t size, std::uint64_t seed) {
  return random_configuration(n, size, seed, {.general_linear_position = true});
}

PointConfiguration scaled(const PointConfiguration& g, std::mt19937_64& rng) {
  std::vector<ProjectivePoint> pts;
  for (const auto& p : g.points()) {
    Rational c;
    do c = testing::random_rational(rng);
    while (c == 0);
    Vector v = p.coords();
    for (auto& x : v) x *= c;
    pts.emplace_back(std::move(v));
  }
  return PointConfiguration(g.n(), std::move(pts));
}

PointConfiguration shuffled(const PointConfiguration& g, std::mt19937_64& rng) {
  auto pts = g.points();
  std::shuffle(pts.begin(), pts.end(), rng);
  return PointConfiguration(g.n(), std::move(pts));
}

TEST(PointConfiguration, Validation) {
  EXPECT_THROW(PointConfiguration(3, {}), Error);
  EXPECT_THROW(PointConfiguration(3, {{1, 2, 3}, {2, 4, 6}}), Error);
  EXPECT_THROW(PointConfiguration(3, {{1, 2, 3}, {1, 2}}), DimensionMismatch);
  const PointConfiguration g(2, {{1, 0}, {0, 1}});
  EXPECT_EQ(g.with(ProjectivePoint{1, 1}).size(), 3u);
  EXPECT_THROW(g.with(ProjectivePoint{2, 0}), Error);
  EXPECT_EQ(g.without(0).points().front(), (ProjectivePoint{0, 1}));
}

TEST(VanishingComponent, Examples) {
  EXPECT_EQ(vanishing_component(sbar_points(3, 2), 2).dim(), 0u);
  EXPECT_EQ(vanishing_component(glp(4, 6, 3), 2).dim(), 4u);
  for (std::size_t n = 1; n <= 5; ++n) {
    Vector v(n, Rational(0));
    v[0] = 1;
    EXPECT_EQ(vanishing_component(PointConfiguration(n, {ProjectivePoint(v)}), 1).dim(), n - 1);
  }
  EXPECT_THROW(vanishing_component(glp(4, 6, 3), 0), Error);
}

TEST(SymbolicSquare, Examples) {
  EXPECT_EQ(symbolic_square_component(glp(4, 6, 4), 4).dim(), 11u);
  EXPECT_EQ(symbolic_square_component(example_seven_points_perturbed(), 6).dim(), 7u);
  for (std::size_t n = 2; n <= 5; ++n) {
    Vector v(n, Rational(0));
    v[0] = 1;
    const auto s = symbolic_square_component(PointConfiguration(n, {ProjectivePoint(v)}), 2);
    EXPECT_EQ(s.dim(), binomial(n + 1, 2) - n);
    // No basis form may involve x1.
    for (const auto& f : forms_of(s, n, 2)) EXPECT_TRUE(is_zero(partial(f, 0).coeffs()));
  }
  EXPECT_THROW(symbolic_square_component(glp(4, 6, 4), 1), Error);
}

TEST(OrdinarySquare, Examples) {
  EXPECT_EQ(ordinary_square_component(glp(4, 6, 5), 4).dim(), 10u);
  EXPECT_EQ(ordinary_square_component(glp(4, 5, 5), 4).dim(), 15u);
  EXPECT_EQ(ordinary_square_component(glp(4, 4, 5), 4).dim(), 19u);
  EXPECT_THROW(ordinary_square_component(glp(4, 4, 5), 1), Error);
}

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha(PointConfiguration(3, {{1, 2, 3}})), 1u);
  EXPECT_EQ(alpha(glp(4, 6, 6)), 2u);
  const auto seven = example_seven_points_perturbed();
  EXPECT_EQ(alpha(seven), 3u);
  // Oracle: seven points impose independent conditions on conics (rank 6 = full),
  // and the 7 x 10 cubic evaluation matrix leaves a kernel.
  EXPECT_EQ(rank(evaluation_matrix(seven, 2)), 6u);
  EXPECT_EQ(rank(evaluation_matrix(seven, 3)), 7u);
}

TEST(FaceReport, Examples) {
  const auto six = face_report(glp(4, 6, 7), 2);
  EXPECT_EQ(six.dim_I2_2d, 10u);
  EXPECT_EQ(six.dim_Isym2_2d, 11u);
  EXPECT_EQ(six.gap, 1u);
  EXPECT_EQ(six.d_independent, Verdict::yes);
  EXPECT_TRUE(six.matches_naive_count);

  const auto seven = face_report(example_seven_points_perturbed(), 3);
  EXPECT_EQ(seven.gap, 1u);
  EXPECT_EQ(seven.dim_Id, 3u);

  for (std::size_t size = 1; size <= 5; ++size) EXPECT_EQ(face_report(glp(4, size, 8 + size), 2).gap, 0u);
  EXPECT_THROW(face_report(glp(4, 3, 1), 0), Error);
}

TEST(Verdict, StringRoundTrip) {
  for (auto v : {Verdict::yes, Verdict::no, Verdict::indeterminate}) EXPECT_EQ(verdict_from_string(to_string(v)), v);
  EXPECT_THROW(verdict_from_string("maybe"), Error);
}

// Small random configurations shared by the property tests below.
struct Instance {
  PointConfiguration g;
  unsigned d;
};

Instance random_instance(std::mt19937_64& rng) {
  const std::size_t n = 2 + rng() % 3;
  const unsigned d = 1 + rng() % (n == 4 ? 2 : 3);
  const std::size_t size = 1 + rng() % (form_space_dim(n, d) + 1);
  return {testing::random_points(rng, n, size, 5), d};
}

TEST(IdealProperty, OrdinaryInsideSymbolic) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [g, d] = random_instance(rng);
    const auto ord = ordinary_square_component(g, 2 * d);
    const auto sym = symbolic_square_component(g, 2 * d);
    for (const auto& v : ord.basis_vectors()) EXPECT_TRUE(contains(sym, v));
    // Independent check of each basis form: double vanishing at every point.
    for (const auto& f : forms_of(ord, g.n(), 2 * d))
      for (const auto& p : g.points()) EXPECT_TRUE(is_zero(gradient_eval(f, p)));
  }
}

TEST(IdealProperty, NaiveLowerBound) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [g, d] = random_instance(rng);
    const long bound = static_cast<long>(form_space_dim(g.n(), 2 * d)) - static_cast<long>(g.n() * g.size());
    EXPECT_GE(static_cast<long>(symbolic_square_component(g, 2 * d).dim()), bound);
    EXPECT_GE(vanishing_component(g, d).dim() + g.size(), form_space_dim(g.n(), d));
  }
}

TEST(IdealProperty, AddingAPointNeverIncreasesDimensions) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [g, d] = random_instance(rng);
    std::optional<PointConfiguration> bigger;
    while (!bigger) {
      try {
        bigger = g.with(ProjectivePoint(testing::random_nonzero_vector(rng, g.n(), 5)));
      } catch (const Error&) {
      }
    }
    EXPECT_LE(vanishing_component(*bigger, d).dim(), vanishing_component(g, d).dim());
    EXPECT_LE(symbolic_square_component(*bigger, 2 * d).dim(), symbolic_square_component(g, 2 * d).dim());
    EXPECT_LE(ordinary_square_component(*bigger, 2 * d).dim(), ordinary_square_component(g, 2 * d).dim());
    EXPECT_TRUE(is_subspace_of(vanishing_component(*bigger, d), vanishing_component(g, d)));
  }
}

TEST(IdealProperty, SingleSplitMatchesPairwiseProducts) {
  std::mt19937_64 rng(34);
  int checked = 0;
  while (checked < 100) {
    const auto [g, d] = random_instance(rng);
    if (alpha(g) != d) continue;
    ++checked;
    const auto basis = forms_of(vanishing_component(g, d), g.n(), d);
    std::vector<Vector> products;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j) products.push_back(multiply(basis[i], basis[j]).coeffs());
    EXPECT_EQ(products.size(), binomial(basis.size() + 1, 2));
    EXPECT_EQ(ordinary_square_component(g, 2 * d), span(products, form_space_dim(g.n(), 2 * d)));
  }
}

TEST(IdealProperty, ScaleAndPermutationInvariance) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [g, d] = random_instance(rng);
    const auto h = shuffled(scaled(g, rng), rng);
    EXPECT_EQ(vanishing_component(g, d), vanishing_component(h, d));
    EXPECT_EQ(symbolic_square_component(g, 2 * d), symbolic_square_component(h, 2 * d));
    EXPECT_EQ(ordinary_square_component(g, 2 * d), ordinary_square_component(h, 2 * d));
    EXPECT_EQ(alpha(g), alpha(h));
  }
}

}  // namespace
}  // namespace conefaces
