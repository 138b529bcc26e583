#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "conefaces/certificates.hpp"
#include "conefaces/constructions.hpp"
#include "conefaces/gap.hpp"
#include "conefaces/independence.hpp"

namespace conefaces::io {

// Exact values serialize as strings ("3", "-1/2"). Floating point data only
// appears under objects tagged {"kind": "float"}.

using Json = nlohmann::json;

class JsonError : public Error {
 public:
  using Error::Error;
};

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j);

/// {"n": 3, "degree": 2, "terms": [{"exp": [2,0,0], "coef": "1"}, ...]}
Json to_json(const Form& f);
Form form_from_json(const Json& j);

Json to_json(const std::vector<Form>& forms);
std::vector<Form> forms_from_json(const Json& j);

/// {"n": 4, "points": [["0","0","1","1"], ...]}
Json to_json(const PointConfiguration& g);
PointConfiguration configuration_from_json(const Json& j);

Json to_json(const FaceReport& r);
FaceReport face_report_from_json(const Json& j);

Json to_json(const IndependenceReport& r);
IndependenceReport independence_report_from_json(const Json& j);

Json to_json(const SixPointScheme& s);
SixPointScheme six_point_scheme_from_json(const Json& j);

Json to_json(const SevenPointScheme& s);
SevenPointScheme seven_point_scheme_from_json(const Json& j);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const GapProfile& p);
GapProfile gap_profile_from_json(const Json& j);

/// "k,G\n" header followed by one line per value.
std::string gap_csv(const GapProfile& p);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);
Json parse(const std::string& text);
Json load_file(const std::filesystem::path& path);

}  // namespace conefaces::io
