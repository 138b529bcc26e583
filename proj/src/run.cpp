#include "conefaces/run.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "conefaces/json_io.hpp"
#include "conefaces/random_config.hpp"

namespace conefaces {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

template <class T>
T require(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option ") + flag);
  return *v;
}

PointConfiguration load_configuration(const RunConfig& cfg) {
  const auto path = require(cfg.input_path, "--config");
  auto g = io::configuration_from_json(io::load_file(path));
  if (cfg.n && *cfg.n != g.n()) {
    throw DimensionMismatch("--n " + std::to_string(*cfg.n) + " but the configuration has n = " +
                            std::to_string(g.n()));
  }
  return g;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return exit_code::ok;
    case Verdict::no:
      return exit_code::negative;
    case Verdict::indeterminate:
      return exit_code::indeterminate;
  }
  return exit_code::indeterminate;
}

struct Outcome {
  io::Json report;
  int code = exit_code::ok;
};

Outcome run_dims(const RunConfig& cfg) {
  const auto g = load_configuration(cfg);
  return {io::to_json(face_report(g, require(cfg.d, "--d")))};
}

Outcome run_independence(const RunConfig& cfg) {
  const auto g = load_configuration(cfg);
  const auto report = is_d_independent(g, require(cfg.d, "--d"));
  return {io::to_json(report), verdict_exit(report.verdict)};
}

Outcome run_construct(const RunConfig& cfg) {
  if (cfg.construct_kind == "snd") {
    const auto n = require(cfg.n, "--n");
    const auto d = require(cfg.d, "--d");
    const auto points = snd_points(n, d);
    return {{{"construction", "snd"},
             {"n", n},
             {"d", d},
             {"points", io::to_json(points)},
             {"basis", io::to_json(snd_basis(n, d))}}};
  }
  if (cfg.construct_kind == "six4") {
    const auto g = cfg.input_path ? load_configuration(cfg) : example_six_points();
    return {{{"construction", "six4"}, {"scheme", io::to_json(six_point_scheme(g))}}};
  }
  if (cfg.construct_kind == "seven3") {
    const auto g = cfg.input_path ? load_configuration(cfg) : example_seven_points_perturbed();
    return {{{"construction", "seven3"}, {"scheme", io::to_json(seven_point_scheme(g))}}};
  }
  throw UsageError("construct expects one of snd, six4, seven3");
}

// The worked-example forms must agree with the computed scheme up to scale.
void check_matches_scheme(const ExampleForms& printed, const std::vector<Form>& Q, const Form& R) {
  for (const auto& q : printed.Q) {
    if (std::none_of(Q.begin(), Q.end(), [&](const Form& f) { return proportional(f, q); }))
      throw Error("internal: worked-example form not produced by the scheme");
  }
  if (!proportional(printed.R, R)) throw Error("internal: worked-example R not produced by the scheme");
}

Outcome run_certify(const RunConfig& cfg) {
  const Rational eps = parse_rational(cfg.epsilon);
  const NumericOptions numeric{cfg.samples, NumericOptions{}.refine_steps, cfg.seed};
  Certificate cert = [&] {
    if (cfg.certify_case == "44") {
      const auto s = six_point_scheme(example_six_points());
      const auto printed = example_six_point_forms();
      check_matches_scheme(printed, s.Q, s.R);
      return build_certificate(printed.Q, printed.R, eps, s.gamma, numeric);
    }
    if (cfg.certify_case == "36") {
      const auto s = seven_point_scheme(example_seven_points_perturbed());
      const auto printed = example_seven_point_forms();
      check_matches_scheme(printed, s.Q, s.R);
      return build_certificate(printed.Q, printed.R, eps, s.gamma, numeric);
    }
    throw UsageError("certify expects --case 44 or --case 36");
  }();
  return {io::to_json(cert), cert.not_sos() ? exit_code::ok : exit_code::negative};
}

Outcome run_gapscan(const RunConfig& cfg) {
  const auto n = static_cast<std::int64_t>(require(cfg.n, "--n"));
  const auto two_d = static_cast<std::int64_t>(require(cfg.two_d, "--two-d"));
  std::optional<std::int64_t> first, last;
  if (cfg.k_range) std::tie(first, last) = *cfg.k_range;
  const auto profile = gap_profile(n, two_d, first, last);
  if (cfg.csv_path) {
    std::ofstream csv(*cfg.csv_path);
    if (!csv || !(csv << io::gap_csv(profile))) throw std::ios_base::failure("cannot write " + *cfg.csv_path);
  }
  return {io::to_json(profile)};
}

Outcome run_random(const RunConfig& cfg) {
  Requirements req;
  req.general_linear_position = cfg.require_glp;
  req.d_independent = cfg.require_d_independent;
  const auto g = random_configuration(require(cfg.n, "--n"), require(cfg.size, "--size"), cfg.seed, req, cfg.bound);
  return {io::to_json(g)};
}

Outcome dispatch(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::dims:
      return run_dims(cfg);
    case Command::independence:
      return run_independence(cfg);
    case Command::construct:
      return run_construct(cfg);
    case Command::certify:
      return run_certify(cfg);
    case Command::gapscan:
      return run_gapscan(cfg);
    case Command::random:
      return run_random(cfg);
  }
  throw UsageError("unknown command");
}

}  // namespace

std::pair<std::int64_t, std::int64_t> parse_k_range(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) throw UsageError("k range must look like a..b");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, sep), b = text.substr(sep + 2);
    const auto lo = std::stoll(a, &used_a);
    const auto hi = std::stoll(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw UsageError("k range must look like a..b");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("k range must look like a..b");
  }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Outcome outcome = dispatch(cfg);
    const std::string text = io::dump(outcome.report);
    if (cfg.output_path) {
      std::ofstream file(*cfg.output_path);
      if (!file || !(file << text)) throw std::ios_base::failure("cannot write " + *cfg.output_path);
    } else {
      out << text;
    }
    return outcome.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::ios_base::failure& e) {
    err << "i/o error: " << e.what() << '\n';
    return exit_code::io;
  } catch (const GenericityError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::unattainable;
  } catch (const UnattainableRequirement& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::unattainable;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::invalid_input;
  }
}

}  // namespace conefaces
