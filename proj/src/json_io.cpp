#include "hirz/json_io.hpp"

#include "hirz/errors.hpp"

#include <fstream>
#include <limits>

namespace hirz {

Json rational_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return to_string(q);
}

Json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return to_string(z);
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ValidationError("expected an integer or a rational string, got " + j.dump());
}

Json class_json(const DivisorClass& d) { return Json::array({d.u, d.v}); }

Json form_json(const CoxForm& f) {
    Json terms = Json::array();
    for (const auto& [k, c] : f.terms()) {
        auto ex = f.exponents(k);
        terms.push_back(Json::array({Json::array({ex[0], ex[1], ex[2], ex[3]}), to_string(c)}));
    }
    return {{"class", class_json(f.cls())}, {"terms", terms}};
}

Json point_json(const CoxPoint& p) {
    return Json::array({to_string(p.t0), to_string(p.t1), to_string(p.s0), to_string(p.s1)});
}

CoxForm form_from_json(const SurfaceModel& s, const Json& j) {
    const auto& cls = j.at("class");
    if (!cls.is_array() || cls.size() != 2) throw ValidationError("class must be [u, v]");
    DivisorClass d(s, cls[0].get<std::int64_t>(), cls[1].get<std::int64_t>());
    std::vector<std::pair<std::array<int, 4>, Rational>> terms;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != 4)
            throw ValidationError("term must be [[a0, a1, i, j], c]");
        std::array<int, 4> ex{};
        for (std::size_t k = 0; k < 4; ++k) ex[k] = t[0][k].get<int>();
        terms.emplace_back(ex, rational_from_json(t[1]));
    }
    return CoxForm::from_exponents(d, terms);
}

ExplicitConfig config_from_json(const Json& j) {
    try {
        const SurfaceModel s(j.at("e").get<int>());
        const auto& cs = j.at("components");
        if (!cs.is_array() || cs.size() != 3) throw ValidationError("a fixture needs exactly three components");
        return ExplicitConfig(s, {ExplicitCurve(form_from_json(s, cs[0])), ExplicitCurve(form_from_json(s, cs[1])),
                                  ExplicitCurve(form_from_json(s, cs[2]))});
    } catch (const Json::exception& e) {
        throw ValidationError(std::string("malformed fixture: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
}

ExplicitConfig load_fixture(const std::string& path) { return config_from_json(read_json_file(path)); }

Json report_json(const BoundReport& r) {
    Json systems = Json::array();
    for (const auto& s : r.per_system) {
        Json e = {{"system", s.system}, {"kind", kind_name(s.kind)}};
        if (s.kind == BoundKind::Numeric) e["value"] = integer_json(s.value);
        if (!s.expression.empty()) e["expression"] = s.expression;
        systems.push_back(e);
    }
    Json j = {{"case", case_name(r.case_label)},
              {"n_count", r.n_count},
              {"per_system", systems},
              {"total", {{"kind", kind_name(r.total_kind)}, {"numeric_part", integer_json(r.numeric_part)}}},
              {"notes", r.notes}};
    if (!r.total_expression.empty()) j["total"]["expression"] = r.total_expression;
    if (r.i_set_bound) j["i_set_bound"] = integer_json(*r.i_set_bound);
    if (!r.i_set_expression.empty()) j["i_set_expression"] = r.i_set_expression;
    return j;
}

Json record_json(const VerifyRecord& r) {
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts) {
        Json e = {{"system", v.candidate.system}, {"origin", v.candidate.origin}, {"curve", form_json(v.candidate.curve)}};
        if (v.skipped) {
            e["skipped"] = "component of B";
        } else {
            Json w = Json::array();
            for (const auto& p : v.verdict.witnesses) w.push_back(point_json(p));
            e["points"] = v.verdict.count;
            e["hyper_bitangent"] = v.verdict.hyper_bitangent;
            e["witnesses"] = w;
        }
        verdicts.push_back(e);
    }
    Json found = Json::array();
    for (const auto& c : r.found) found.push_back({{"system", c.system}, {"curve", form_json(c.curve)}});
    return {{"n_points", r.n_points},
            {"candidates", r.verdicts.size()},
            {"verdicts", verdicts},
            {"found", found},
            {"found_count", r.found.size()},
            {"covered_bound", integer_json(r.covered_bound)},
            {"bound", report_json(r.report)},
            {"within_bound", r.within_bound}};
}

}  // namespace hirz
