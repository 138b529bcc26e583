#include "conefaces/gap.hpp"

#include <algorithm>
#include <stdexcept>

#include "conefaces/linalg.hpp"

namespace conefaces {

namespace {

std::int64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::int64_t half_degree(std::int64_t two_d) {
  if (two_d < 2 || two_d % 2 != 0) throw Error("degree 2d must be a positive even integer");
  return two_d / 2;
}

// G(k) without the range precondition.
std::int64_t gap_formula(std::int64_t n, std::int64_t two_d, std::int64_t k) {
  const std::int64_t d = two_d / 2;
  return choose(n + two_d - 1, two_d) - k * n - choose(choose(n + d - 1, d) - k + 1, 2);
}

std::int64_t isqrt(std::int64_t v) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::int64_t floor_div2(std::int64_t a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

}  // namespace

std::int64_t max_independent_size(std::int64_t n, std::int64_t two_d) {
  const std::int64_t d = half_degree(two_d);
  return choose(n + d - 1, d) - n;
}

std::int64_t naive_gap(std::int64_t n, std::int64_t two_d, std::int64_t k) {
  if (n < 1) throw Error("naive gap needs n >= 1");
  const std::int64_t top = max_independent_size(n, two_d);
  if (k < 1 || k > top) {
    throw Error("k = " + std::to_string(k) + " outside 1.." + std::to_string(top));
  }
  return gap_formula(n, two_d, k);
}

GapMaximum max_gap(std::int64_t n, std::int64_t two_d) {
  const std::int64_t d = half_degree(two_d);
  const std::int64_t k = choose(n + d - 1, d) - n;
  const std::int64_t closed = choose(n + two_d - 1, two_d) - n * choose(n + d - 1, d) + choose(n, 2);
  if (closed != gap_formula(n, two_d, k)) throw Error("internal: closed-form maximum disagrees with G(k_max)");
  return {k, closed};
}

std::optional<std::int64_t> min_k_positive_closed_form(std::int64_t n, std::int64_t two_d) {
  const std::int64_t d = half_degree(two_d);
  const std::int64_t c = choose(n + d - 1, d);
  const std::int64_t h = choose(n + two_d - 1, two_d);
  // Smaller root (A - sqrt(D))/2 with A = 2c - 2n + 1, D = (2n-1)^2 + 8h - 8nc.
  const std::int64_t disc = (2 * n - 1) * (2 * n - 1) + 8 * h - 8 * n * c;
  if (disc < 0) return std::nullopt;
  const std::int64_t a = 2 * c - 2 * n + 1;
  const std::int64_t s = isqrt(disc);
  const std::int64_t root_floor = s * s == disc ? floor_div2(a - s) : floor_div2(a - s - 1);
  return root_floor + 1;
}

std::optional<std::int64_t> min_k_positive(std::int64_t n, std::int64_t two_d) {
  const std::int64_t top = max_independent_size(n, two_d);
  std::optional<std::int64_t> scanned;
  for (std::int64_t k = 1; k <= top; ++k)
    if (gap_formula(n, two_d, k) > 0) {
      scanned = k;
      break;
    }
  std::optional<std::int64_t> expected;
  if (auto closed = min_k_positive_closed_form(n, two_d)) {
    const std::int64_t k = std::max<std::int64_t>(1, *closed);
    if (k <= top && gap_formula(n, two_d, k) > 0) expected = k;
  }
  if (scanned != expected) throw Error("internal: scanned and closed-form minimal gap sizes disagree");
  return scanned;
}

std::string to_string(TernaryRelation r) {
  switch (r) {
    case TernaryRelation::equal:
      return "equal";
    case TernaryRelation::strict_gap:
      return "strict_gap";
    case TernaryRelation::out_of_range:
      return "out_of_range";
  }
  return "out_of_range";
}

TernaryPrediction ternary_prediction(std::int64_t d, std::int64_t k) {
  if (d < 3) throw Error("ternary prediction needs d >= 3");
  if (k < 1) throw Error("ternary prediction needs k >= 1");
  const std::int64_t equal_limit = choose(d + 1, 2);
  const std::int64_t largest = choose(d + 2, 2) - 3;
  if (k > largest) return {TernaryRelation::out_of_range, std::nullopt};
  if (k <= equal_limit) return {TernaryRelation::equal, 0};
  const std::int64_t gap = (choose(2 * d + 2, 2) - 3 * k) - choose(choose(d + 2, 2) - k + 1, 2);
  return {TernaryRelation::strict_gap, gap};
}

std::int64_t ah_count(std::int64_t n, std::int64_t two_d, std::int64_t k) {
  half_degree(two_d);
  return std::max<std::int64_t>(0, choose(n + two_d - 1, two_d) - n * k);
}

GapProfile gap_profile(std::int64_t n, std::int64_t two_d, std::optional<std::int64_t> k_first,
                       std::optional<std::int64_t> k_last) {
  GapProfile profile;
  profile.n = n;
  profile.two_d = two_d;
  profile.max_independent_hint = max_independent_size(n, two_d);
  const std::int64_t first = k_first.value_or(1);
  const std::int64_t last = k_last.value_or(profile.max_independent_hint);
  if (first < 1 || last > profile.max_independent_hint || first > last) {
    throw Error("k range " + std::to_string(first) + ".." + std::to_string(last) + " outside 1.." +
                std::to_string(profile.max_independent_hint));
  }
  for (std::int64_t k = first; k <= last; ++k) profile.values.emplace_back(k, naive_gap(n, two_d, k));
  const auto maximum = max_gap(n, two_d);
  profile.k_max = maximum.k;
  profile.max_gap = maximum.value;
  profile.k_min_positive = min_k_positive(n, two_d);
  return profile;
}

}  // namespace conefaces
