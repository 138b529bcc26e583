#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace conefaces {

enum class Command { dims, independence, construct, certify, gapscan, random };

struct RunConfig {
  Command command = Command::dims;
  std::optional<std::string> input_path;   // point configuration JSON
  std::optional<std::string> output_path;  // JSON goes to stdout when unset
  std::optional<std::size_t> n;
  std::optional<unsigned> d;
  std::optional<unsigned> two_d;
  std::uint64_t seed = 0;
  std::size_t samples = 2000;
  std::string epsilon = "1";

  std::string construct_kind;  // snd | six4 | seven3
  std::string certify_case;    // 44 | 36
  std::optional<std::pair<std::int64_t, std::int64_t>> k_range;
  std::optional<std::string> csv_path;
  std::optional<std::size_t> size;
  bool require_glp = false;
  std::optional<unsigned> require_d_independent;
  long bound = 50;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int negative = 1;
inline constexpr int indeterminate = 2;
inline constexpr int usage = 10;
inline constexpr int io = 11;
inline constexpr int invalid_input = 12;
inline constexpr int unattainable = 13;
}  // namespace exit_code

/// Parses "a..b" into an inclusive range.
std::pair<std::int64_t, std::int64_t> parse_k_range(const std::string& text);

/// Executes one command. The JSON report goes to cfg.output_path if set and to
/// `out` otherwise; diagnostics go to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace conefaces
