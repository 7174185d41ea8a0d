#include "hirz/cli.hpp"

#include "hirz/errors.hpp"
#include "hirz/germ.hpp"
#include "hirz/parse.hpp"
#include "hirz/picard.hpp"

#include <sstream>

namespace hirz::cli {

namespace {

DivisorClass class_from(const SurfaceModel& s, const Json& j, const char* name) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ValidationError(std::string("field '") + name + "' must be [u, v]");
    return DivisorClass(s, j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

Json class_report(const DivisorClass& d) {
    Json j = {{"class", class_json(d)},
              {"self_intersection", intersect(d, d)},
              {"canonical_degree", intersect(d, canonical_class(d.surface))},
              {"h0", integer_json(h0(d))},
              {"volume", rational_json(volume(d))},
              {"effective", is_effective(d)},
              {"ample", is_ample(d)},
              {"big", is_big(d)},
              {"integral_member", has_integral_member(d)}};
    j["arithmetic_genus"] = has_integral_member(d) ? Json(arithmetic_genus(d)) : Json(nullptr);
    return j;
}

PlaneCurveGerm germ_from(const Json& in, const char* key) {
    if (!in.at(key).is_string()) throw ValidationError(std::string("field '") + key + "' must be a string");
    Rational bx = 0, by = 0;
    if (in.contains("point")) {
        const auto& p = in.at("point");
        if (!p.is_array() || p.size() != 2) throw ValidationError("field 'point' must be [x, y]");
        bx = rational_from_json(p[0]);
        by = rational_from_json(p[1]);
    }
    return PlaneCurveGerm(parse_bpoly(in.at(key).get<std::string>()), bx, by);
}

Json sequence_json(const MultiplicitySequence& s) { return Json(s.entries); }

void render(std::ostringstream& os, const Json& j, const std::string& indent) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json& v = it.value();
        const std::string key = j.is_object() ? it.key() : "-";
        if (v.is_object() || (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array()) &&
                              !(v.size() == 2 && v[0].is_array() && v[1].is_string()))) {
            os << indent << key << ":\n";
            render(os, v, indent + "  ");
        } else {
            os << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

}  // namespace

Json cmd_lattice(const Json& in) {
    const SurfaceModel s(in.at("e").get<int>());
    const DivisorClass a = class_from(s, in.at("a"), "a");
    Json out = {{"e", s.e}, {"a", class_report(a)}, {"canonical", class_json(canonical_class(s))}};
    if (in.contains("b")) {
        const DivisorClass b = class_from(s, in.at("b"), "b");
        out["b"] = class_report(b);
        out["intersect"] = intersect(a, b);
    }
    return out;
}

Json cmd_germ(const Json& in) {
    const PlaneCurveGerm f = germ_from(in, "f");
    const MultiplicitySequence seq = multiplicity_sequence(f);
    const long delta = delta_invariant(seq);
    const auto fz = seq.m() >= 2 ? fz_admissible_set(seq) : std::set<long>{};
    Json out = {{"multiplicity", seq.m()},
                {"sequence", sequence_json(seq)},
                {"delta", delta},
                {"l_index", l_index(seq)}};
    // The admissible set is only defined at singular points.
    out["fz_set"] = seq.m() >= 2 ? Json(std::vector<long>(fz.begin(), fz.end())) : Json(nullptr);
    if (in.contains("g")) {
        const PlaneCurveGerm g = germ_from(in, "g");
        const auto t = local_intersection(f, g);
        if (!t) throw ComputationError("the germs share a component");
        out["intersection"] = *t;
        if (seq.m() >= 2) out["in_fz_set"] = fz.count(*t) > 0;
        if (mult_at(g) == 1) {
            const long bound = delta_lower_bound(seq.m(), *t);
            out["delta_bound"] = {{"value", bound}, {"holds", delta >= bound}, {"equality", delta == bound}};
        }
    }
    return out;
}

Json cmd_bound(const Json& in, std::optional<Integer> gamma) {
    const SurfaceModel s(in.at("e").get<int>());
    const auto& cs = in.at("components");
    if (!cs.is_array() || cs.size() != 3) throw ValidationError("field 'components' must list three classes");
    const ThreeComponentConfig cfg(
        s, {class_from(s, cs[0], "components"), class_from(s, cs[1], "components"), class_from(s, cs[2], "components")});
    if (!gamma && in.contains("gamma")) {
        const Rational g = rational_from_json(in.at("gamma"));
        if (g.get_den() != 1) throw ValidationError("gamma must be a positive integer");
        gamma = g.get_num();
    }
    if (gamma && *gamma <= 0) throw ValidationError("gamma must be a positive integer");
    Json out = report_json(exceptional_set_bound(cfg, gamma));
    out["components"] = Json::array({class_json(cfg[0]), class_json(cfg[1]), class_json(cfg[2])});
    out["e"] = s.e;
    return out;
}

Json cmd_verify(const Json& in) { return record_json(verify_bound(config_from_json(in))); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render_text(const Json& j) {
    std::ostringstream os;
    render(os, j, "");
    return os.str();
}

RunResult run(const std::string& command, const Json& in, const std::string& format, std::optional<Integer> gamma) {
    RunResult r;
    try {
        if (format != "text" && format != "json") throw ValidationError("unknown format '" + format + "'");
        Json out;
        if (command == "lattice") {
            out = cmd_lattice(in);
        } else if (command == "germ") {
            out = cmd_germ(in);
        } else if (command == "bound") {
            out = cmd_bound(in, gamma);
        } else if (command == "verify") {
            out = cmd_verify(in);
            if (!out.at("within_bound").get<bool>()) r.exit_code = BoundViolation;
        } else {
            throw ValidationError("unknown command '" + command + "'");
        }
        r.out = format == "json" ? dump(out) : render_text(out);
    } catch (const ValidationError& e) {
        r.exit_code = Validation;
        r.err = std::string("error: ") + e.what() + "\n";
    } catch (const Json::exception& e) {
        r.exit_code = Validation;
        r.err = std::string("error: malformed input: ") + e.what() + "\n";
    } catch (const ComputationError& e) {
        r.exit_code = Computation;
        r.err = std::string("error: ") + e.what() + "\n";
    }
    return r;
}

RunResult run(const RunConfig& cfg) {
    Json in;
    try {
        in = read_json_file(cfg.input_path);
    } catch (const ValidationError& e) {
        return {Validation, "", std::string("error: ") + e.what() + "\n"};
    }
    return run(cfg.command, in, cfg.format, cfg.gamma);
}

}  // namespace hirz::cli
