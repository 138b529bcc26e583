#include "conefaces/random_config.hpp"

#include <random>

#include "conefaces/independence.hpp"

namespace conefaces {

namespace {

constexpr int kMaxRejections = 1000;

// Unbiased draw in [-bound, bound] from raw mt19937_64 output, so sequences
// do not depend on the standard library's distribution implementation.
long draw_coordinate(std::mt19937_64& rng, long bound) {
  const std::uint64_t range = static_cast<std::uint64_t>(2 * bound + 1);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<long>(x % range) - bound;
}

}  // namespace

PointConfiguration random_configuration(std::size_t n, std::size_t size, std::uint64_t seed,
                                        const Requirements& require, long bound) {
  if (n == 0 || size == 0) throw Error("random configuration needs n >= 1 and size >= 1");
  if (bound < 1) throw Error("coordinate bound must be positive");
  if (require.d_independent) {
    const unsigned d = *require.d_independent;
    if (d == 0) throw Error("d-independence needs d >= 1");
    const std::size_t dim = form_space_dim(n, d);
    const std::size_t largest = dim > n ? dim - n : 0;
    if (size > largest) {
      throw UnattainableRequirement("no " + std::to_string(d) + "-independent set of " + std::to_string(size) +
                                    " points exists in P^" + std::to_string(n - 1) + " (maximum " +
                                    std::to_string(largest) + ")");
    }
  }
  if (require.general_linear_position && size > n && n == 1) {
    throw UnattainableRequirement("general linear position impossible for more than one point in P^0");
  }

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    std::vector<ProjectivePoint> pts;
    pts.reserve(size);
    bool degenerate = false;
    for (std::size_t i = 0; i < size; ++i) {
      Vector coords(n);
      for (auto& c : coords) c = draw_coordinate(rng, bound);
      if (is_zero(coords)) {
        degenerate = true;
        break;
      }
      pts.emplace_back(std::move(coords));
    }
    if (degenerate) continue;
    std::optional<PointConfiguration> g;
    try {
      g.emplace(n, std::move(pts));
    } catch (const Error&) {
      continue;  // repeated projective point
    }
    if (require.general_linear_position && !is_general_linear_position(*g)) continue;
    if (require.d_independent && is_d_independent(*g, *require.d_independent).verdict != Verdict::yes) continue;
    return *g;
  }
  throw UnattainableRequirement("no configuration satisfied the requirements after " +
                                std::to_string(kMaxRejections) + " draws");
}

}  // namespace conefaces
