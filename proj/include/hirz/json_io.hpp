#pragma once

#include "hirz/bound.hpp"
#include "hirz/verifier.hpp"

#include <json.hpp>

#include <string>

namespace hirz {

using Json = nlohmann::json;

// Integers that fit in 64 bits stay numbers; everything else is a "p/q" string.
Json rational_json(const Rational& q);
Json integer_json(const Integer& z);
// Accepts a JSON integer or a rational string.
Rational rational_from_json(const Json& j);

Json class_json(const DivisorClass& d);
Json form_json(const CoxForm& f);
Json point_json(const CoxPoint& p);

CoxForm form_from_json(const SurfaceModel& s, const Json& j);
ExplicitConfig config_from_json(const Json& j);
ExplicitConfig load_fixture(const std::string& path);
Json read_json_file(const std::string& path);

Json report_json(const BoundReport& r);
Json record_json(const VerifyRecord& r);

}  // namespace hirz
