#include "conefaces/json_io.hpp"

#include <fstream>
#include <sstream>

namespace conefaces::io {

namespace {

template <class F>
auto guarded(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw JsonError(std::string("malformed ") + what + ": " + e.what());
  } catch (const JsonError&) {
    throw;
  } catch (const Error& e) {
    throw JsonError(std::string("invalid ") + what + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw JsonError("expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw JsonError(std::string("missing field '") + key + "'");
  return *it;
}

template <class T>
T get(const Json& j, const char* key) {
  return field(j, key).get<T>();
}

Json vectors_to_json(const std::vector<Vector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

std::vector<Vector> vectors_from_json(const Json& j) {
  if (!j.is_array()) throw JsonError("expected an array of vectors");
  std::vector<Vector> out;
  for (const auto& v : j) out.push_back(vector_from_json(v));
  return out;
}

Json optional_int(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw JsonError("rational values must be strings such as \"-3/2\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw JsonError(e.what());
  }
}

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw JsonError("expected an array of rationals");
  Vector v;
  v.reserve(j.size());
  for (const auto& q : j) v.push_back(rational_from_json(q));
  return v;
}

Json to_json(const Form& f) {
  Json terms = Json::array();
  const auto basis = monomial_basis(f.n(), f.degree());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (f.coeffs()[i] == 0) continue;
    terms.push_back({{"exp", basis[i].exponents}, {"coef", to_json(f.coeffs()[i])}});
  }
  return {{"n", f.n()}, {"degree", f.degree()}, {"terms", terms}};
}

Form form_from_json(const Json& j) {
  return guarded("form", [&] {
    const auto n = get<std::size_t>(j, "n");
    const auto degree = get<unsigned>(j, "degree");
    if (n == 0) throw JsonError("form needs n >= 1");
    Form f(n, degree);
    std::vector<bool> seen(f.coeffs().size(), false);
    for (const auto& term : field(j, "terms")) {
      const auto exps = get<std::vector<unsigned>>(term, "exp");
      if (exps.size() != n) throw JsonError("exponent vector length differs from n");
      unsigned total = 0;
      for (unsigned e : exps) total += e;
      if (total != degree) throw JsonError("term degree differs from form degree");
      const std::size_t idx = monomial_index(exps);
      if (seen[idx]) throw JsonError("repeated monomial in form");
      seen[idx] = true;
      f.coeff(exps) = rational_from_json(field(term, "coef"));
    }
    return f;
  });
}

Json to_json(const std::vector<Form>& forms) {
  Json a = Json::array();
  for (const auto& f : forms) a.push_back(to_json(f));
  return a;
}

std::vector<Form> forms_from_json(const Json& j) {
  if (!j.is_array()) throw JsonError("expected an array of forms");
  std::vector<Form> out;
  for (const auto& f : j) out.push_back(form_from_json(f));
  return out;
}

Json to_json(const PointConfiguration& g) {
  Json pts = Json::array();
  for (const auto& p : g.points()) pts.push_back(to_json(p.coords()));
  return {{"n", g.n()}, {"points", pts}};
}

PointConfiguration configuration_from_json(const Json& j) {
  return guarded("point configuration", [&] {
    const auto n = get<std::size_t>(j, "n");
    std::vector<ProjectivePoint> pts;
    for (const auto& p : field(j, "points")) {
      Vector coords = vector_from_json(p);
      if (coords.size() != n) {
        throw DimensionMismatch("point has " + std::to_string(coords.size()) + " coordinates, expected " +
                                std::to_string(n));
      }
      pts.emplace_back(std::move(coords));
    }
    return PointConfiguration(n, std::move(pts));
  });
}

Json to_json(const FaceReport& r) {
  return {{"n", r.n},
          {"d", r.d},
          {"gamma_size", r.gamma_size},
          {"dim_Id", r.dim_Id},
          {"dim_I2_2d", r.dim_I2_2d},
          {"dim_Isym2_2d", r.dim_Isym2_2d},
          {"alpha", r.alpha},
          {"d_independent", to_string(r.d_independent)},
          {"gap", r.gap},
          {"naive_symbolic_count", r.naive_symbolic_count},
          {"matches_naive_count", r.matches_naive_count}};
}

FaceReport face_report_from_json(const Json& j) {
  return guarded("face report", [&] {
    FaceReport r;
    r.n = get<std::size_t>(j, "n");
    r.d = get<unsigned>(j, "d");
    r.gamma_size = get<std::size_t>(j, "gamma_size");
    r.dim_Id = get<std::size_t>(j, "dim_Id");
    r.dim_I2_2d = get<std::size_t>(j, "dim_I2_2d");
    r.dim_Isym2_2d = get<std::size_t>(j, "dim_Isym2_2d");
    r.alpha = get<unsigned>(j, "alpha");
    r.d_independent = verdict_from_string(get<std::string>(j, "d_independent"));
    r.gap = get<std::size_t>(j, "gap");
    r.naive_symbolic_count = get<std::size_t>(j, "naive_symbolic_count");
    r.matches_naive_count = get<bool>(j, "matches_naive_count");
    return r;
  });
}

Json to_json(const IndependenceReport& r) {
  Json hv = Json::array();
  for (const auto& [k, v] : r.hilbert_values) hv.push_back({{"k", k}, {"value", v}});
  return {{"condition2", r.condition2},
          {"condition2_failed_at", r.condition2_failed_at ? Json(*r.condition2_failed_at) : Json(nullptr)},
          {"hilbert_values", hv},
          {"verdict", to_string(r.verdict)},
          {"stabilization_degree_used", r.stabilization_degree_used}};
}

IndependenceReport independence_report_from_json(const Json& j) {
  return guarded("independence report", [&] {
    IndependenceReport r;
    r.condition2 = get<bool>(j, "condition2");
    if (const auto& f = field(j, "condition2_failed_at"); !f.is_null()) r.condition2_failed_at = f.get<std::size_t>();
    for (const auto& e : field(j, "hilbert_values"))
      r.hilbert_values.emplace_back(get<unsigned>(e, "k"), get<std::size_t>(e, "value"));
    r.verdict = verdict_from_string(get<std::string>(j, "verdict"));
    r.stabilization_degree_used = get<unsigned>(j, "stabilization_degree_used");
    return r;
  });
}

Json to_json(const SixPointScheme& s) {
  Json triples = Json::array();
  for (const auto& t : s.triples) triples.push_back(t);
  return {{"gamma", to_json(s.gamma)}, {"triples", triples},         {"u", vectors_to_json(s.u)},
          {"v", vectors_to_json(s.v)}, {"u_dual", vectors_to_json(s.u_dual)}, {"v_dual", vectors_to_json(s.v_dual)},
          {"Q", to_json(s.Q)},         {"R", to_json(s.R)}};
}

SixPointScheme six_point_scheme_from_json(const Json& j) {
  return guarded("six point scheme", [&] {
    std::array<Triple, 4> triples{};
    const auto& jt = field(j, "triples");
    if (!jt.is_array() || jt.size() != 4) throw JsonError("expected four triples");
    for (std::size_t i = 0; i < 4; ++i) triples[i] = jt[i].get<Triple>();
    return SixPointScheme{configuration_from_json(field(j, "gamma")),
                          triples,
                          vectors_from_json(field(j, "u")),
                          vectors_from_json(field(j, "v")),
                          vectors_from_json(field(j, "u_dual")),
                          vectors_from_json(field(j, "v_dual")),
                          forms_from_json(field(j, "Q")),
                          form_from_json(field(j, "R"))};
  });
}

Json to_json(const SevenPointScheme& s) {
  return {{"gamma", to_json(s.gamma)},
          {"u", vectors_to_json(s.u)},
          {"u_dual", vectors_to_json(s.u_dual)},
          {"K_conics", to_json(s.K_conics)},
          {"K", to_json(s.K)},
          {"Q", to_json(s.Q)},
          {"R", to_json(s.R)},
          {"q3_linear_factor", s.q3_linear_factor},
          {"k_zeros", s.k_zeros}};
}

SevenPointScheme seven_point_scheme_from_json(const Json& j) {
  return guarded("seven point scheme", [&] {
    return SevenPointScheme{configuration_from_json(field(j, "gamma")),
                            vectors_from_json(field(j, "u")),
                            vectors_from_json(field(j, "u_dual")),
                            forms_from_json(field(j, "K_conics")),
                            form_from_json(field(j, "K")),
                            forms_from_json(field(j, "Q")),
                            form_from_json(field(j, "R")),
                            get<unsigned>(j, "q3_linear_factor"),
                            get<std::vector<std::string>>(j, "k_zeros")};
  });
}

Json to_json(const Certificate& c) {
  return {{"p", to_json(c.p)},
          {"gamma", to_json(c.gamma)},
          {"epsilon", to_json(c.epsilon)},
          {"not_sos_proof",
           {{"vanishes_order2", c.not_sos_proof.vanishes_order2},
            {"in_symbolic", c.not_sos_proof.in_symbolic},
            {"in_ordinary_square", c.not_sos_proof.in_ordinary_square}}},
          {"not_sos", c.not_sos()},
          {"roundness", c.roundness},
          {"numeric_min",
           {{"kind", "float"},
            {"claim", "numerical evidence of nonnegativity, not a proof"},
            {"value", c.numeric_min.value},
            {"point", c.numeric_min.point}}}};
}

Certificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&] {
    const auto& proof = field(j, "not_sos_proof");
    NotSosProof nsp{get<bool>(proof, "vanishes_order2"), get<bool>(proof, "in_symbolic"),
                    get<bool>(proof, "in_ordinary_square")};
    if (auto it = j.find("not_sos"); it != j.end() && it->get<bool>() != nsp.holds())
      throw JsonError("not_sos flag inconsistent with its proof fields");
    const auto& nm = field(j, "numeric_min");
    if (get<std::string>(nm, "kind") != "float") throw JsonError("numeric_min must be tagged float");
    NumericMinimum minimum{get<double>(nm, "value"), get<std::vector<double>>(nm, "point")};
    return Certificate{form_from_json(field(j, "p")),
                       configuration_from_json(field(j, "gamma")),
                       rational_from_json(field(j, "epsilon")),
                       nsp,
                       get<std::vector<bool>>(j, "roundness"),
                       std::move(minimum)};
  });
}

Json to_json(const GapProfile& p) {
  Json values = Json::array();
  for (const auto& [k, g] : p.values) values.push_back({{"k", k}, {"G", g}});
  return {{"n", p.n},
          {"two_d", p.two_d},
          {"values", values},
          {"k_max", p.k_max},
          {"max_gap", p.max_gap},
          {"k_min_positive", optional_int(p.k_min_positive)},
          {"max_independent_hint", p.max_independent_hint}};
}

GapProfile gap_profile_from_json(const Json& j) {
  return guarded("gap profile", [&] {
    GapProfile p;
    p.n = get<std::int64_t>(j, "n");
    p.two_d = get<std::int64_t>(j, "two_d");
    for (const auto& e : field(j, "values")) p.values.emplace_back(get<std::int64_t>(e, "k"), get<std::int64_t>(e, "G"));
    p.k_max = get<std::int64_t>(j, "k_max");
    p.max_gap = get<std::int64_t>(j, "max_gap");
    if (const auto& f = field(j, "k_min_positive"); !f.is_null()) p.k_min_positive = f.get<std::int64_t>();
    p.max_independent_hint = get<std::int64_t>(j, "max_independent_hint");
    return p;
  });
}

std::string gap_csv(const GapProfile& p) {
  std::ostringstream out;
  out << "k,G\n";
  for (const auto& [k, g] : p.values) out << k << ',' << g << '\n';
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw JsonError(std::string("malformed JSON: ") + e.what());
  }
}

Json load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace conefaces::io
