#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "conefaces/ideal.hpp"

namespace conefaces {

struct IndependenceReport {
  bool condition2 = false;
  // First point (0-based) at which the singular-at-one-point rank test failed.
  std::optional<std::size_t> condition2_failed_at;
  // (k, HF(k)) for every degree evaluated, ascending.
  std::vector<std::pair<unsigned, std::size_t>> hilbert_values;
  Verdict verdict = Verdict::indeterminate;
  unsigned stabilization_degree_used = 0;

  bool operator==(const IndependenceReport&) const = default;
};

/// For every s in Gamma: evaluation rows at Gamma \ {s} plus the n gradient rows
/// at s have rank |Gamma| + n - 1 in H_{n,d}. Throws if dim H_{n,d} is too
/// small for that rank to be reachable.
bool condition2_holds(const PointConfiguration& g, unsigned d);

/// Hilbert function at degree k of R/J, J generated by I_d(Gamma).
std::size_t hilbert_function(const PointConfiguration& g, unsigned d, unsigned k);

/// Tri-state d-independence decision: condition (2) by rank, condition (1)
/// replaced by the Hilbert function reaching |Gamma| at k* = (n-1)(d-1)+d and
/// k*+1, extended up to k*+n when those two values disagree.
IndependenceReport is_d_independent(const PointConfiguration& g, unsigned d);

bool is_general_linear_position(const PointConfiguration& g);

}  // namespace conefaces
