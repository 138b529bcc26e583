#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "conefaces/ideal.hpp"

namespace conefaces {

struct Requirements {
  bool general_linear_position = false;
  std::optional<unsigned> d_independent;  // degree d
};

class UnattainableRequirement : public Error {
 public:
  using Error::Error;
};

/// Integer points with coordinates uniform in [-bound, bound], resampled until
/// they are pairwise projectively distinct and satisfy `require`.
/// Deterministic in (n, size, seed, require, bound). Throws
/// UnattainableRequirement up front when the request is impossible, or after
/// 1000 rejected draws.
PointConfiguration random_configuration(std::size_t n, std::size_t size, std::uint64_t seed,
                                        const Requirements& require = {}, long bound = 50);

}  // namespace conefaces
