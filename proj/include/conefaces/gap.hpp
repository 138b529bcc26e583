#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conefaces {

// Naive dimension counts for the gap between dim I^(2)_{2d} and dim I^2_{2d}
// of a d-independent set of k points in P^{n-1}:
//
//   G_{n,2d}(k) = C(n+2d-1, 2d) - k n - C(C(n+d-1, d) - k + 1, 2)
//
// The first two terms bound dim I^(2)_{2d} from below, the last bounds the span
// of pairwise products of a basis of I_d from above.

/// C(n+d-1, d) - n: the largest size of a d-independent set.
std::int64_t max_independent_size(std::int64_t n, std::int64_t two_d);

std::int64_t naive_gap(std::int64_t n, std::int64_t two_d, std::int64_t k);

struct GapMaximum {
  std::int64_t k = 0;
  std::int64_t value = 0;
};
/// Maximum of G over 1 <= k <= max_independent_size, from the closed form
/// C(n+2d-1,2d) - n C(n+d-1,d) + C(n,2) at k = C(n+d-1,d) - n.
GapMaximum max_gap(std::int64_t n, std::int64_t two_d);

/// Smallest k in range with G(k) > 0, by scan. The result is cross-checked
/// against the smallest real root of G; a disagreement throws.
std::optional<std::int64_t> min_k_positive(std::int64_t n, std::int64_t two_d);
/// Smallest integer strictly above the smaller root of G, or nullopt if G has
/// no real root. Exact integer arithmetic.
std::optional<std::int64_t> min_k_positive_closed_form(std::int64_t n, std::int64_t two_d);

enum class TernaryRelation { equal, strict_gap, out_of_range };
std::string to_string(TernaryRelation r);

struct TernaryPrediction {
  TernaryRelation relation = TernaryRelation::equal;
  std::optional<std::int64_t> predicted_gap;
};
/// Ternary forms of degree 2d through k d-independent points: equality up to
/// C(d+1,2) points, then dim I^(2)_{2d} - dim I^2_{2d}
///   = (C(2d+2,2) - 3k) - C(C(d+2,2) - k + 1, 2).
TernaryPrediction ternary_prediction(std::int64_t d, std::int64_t k);

/// max(0, C(n+2d-1, 2d) - n k).
std::int64_t ah_count(std::int64_t n, std::int64_t two_d, std::int64_t k);

struct GapProfile {
  std::int64_t n = 0;
  std::int64_t two_d = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> values;  // (k, G(k))
  std::int64_t k_max = 0;
  std::int64_t max_gap = 0;
  std::optional<std::int64_t> k_min_positive;
  std::int64_t max_independent_hint = 0;

  bool operator==(const GapProfile&) const = default;
};

/// Profile over [k_first, k_last]; defaults to the full range 1..max_independent_size.
GapProfile gap_profile(std::int64_t n, std::int64_t two_d, std::optional<std::int64_t> k_first = std::nullopt,
                       std::optional<std::int64_t> k_last = std::nullopt);

}  // namespace conefaces
