#include "hirz/bound.hpp"

#include "hirz/errors.hpp"

#include <algorithm>
#include <tuple>

namespace hirz {

ThreeComponentConfig::ThreeComponentConfig(SurfaceModel s, std::array<DivisorClass, 3> components)
    : surface_(s), comps_(std::move(components)) {
    for (const auto& c : comps_) {
        if (!(c.surface == s)) throw SurfaceMismatch("component " + c.str() + " lives on another surface");
        if (!has_integral_member(c))
            throw NoIntegralMember("component " + c.str() + " has no integral member on F_" + std::to_string(s.e));
        if (c.is_fiber()) throw ValidationError("component " + c.str() + " is a fiber class");
        if (s.e > 0 && c.is_c0()) throw ValidationError("component " + c.str() + " is the class of C0");
        if (s.e == 0 && (c.u < 1 || c.v < 1))
            throw ValidationError("component " + c.str() + " on F_0 must satisfy alpha >= 1 and beta >= 1");
    }
    std::sort(comps_.begin(), comps_.end(), [](const DivisorClass& a, const DivisorClass& b) {
        return std::make_tuple(a.u + a.v, a.u, a.v) < std::make_tuple(b.u + b.v, b.u, b.v);
    });
    if (!log_canonical_is_big(s, total()))
        throw ValidationError("K + B is not big for B = " + total().str() + " on F_" + std::to_string(s.e));
}

DivisorClass ThreeComponentConfig::total() const { return comps_[0] + comps_[1] + comps_[2]; }

ThreeComponentConfig make_config(int e, const std::array<std::array<std::int64_t, 2>, 3>& classes) {
    SurfaceModel s(e);
    return ThreeComponentConfig(s, {DivisorClass(s, classes[0][0], classes[0][1]),
                                    DivisorClass(s, classes[1][0], classes[1][1]),
                                    DivisorClass(s, classes[2][0], classes[2][1])});
}

std::string case_name(CaseLabel c) {
    switch (c) {
        case CaseLabel::F0_NoDiagonal: return "F0:no-(1,1)-component";
        case CaseLabel::F0_OneDiagonal: return "F0:B1-in-(1,1)";
        case CaseLabel::F0_TwoDiagonal: return "F0:B1,B2-in-(1,1)";
        case CaseLabel::F0_ThreeDiagonal: return "F0:all-in-(1,1)";
        case CaseLabel::Fe_Large: return "Fe:e>=3";
        case CaseLabel::F2_NoC1: return "F2:no-C1-component";
        case CaseLabel::F2_OneC1: return "F2:B1-in-C1";
        case CaseLabel::F2_TwoC1: return "F2:B1,B2-in-C1";
        case CaseLabel::F2_ThreeC1: return "F2:all-in-C1";
        case CaseLabel::F1_Effective: return "F1:effective";
        case CaseLabel::F1_Gamma: return "F1:B1,B2-in-C1:gamma";
    }
    return "?";
}

std::string kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::Numeric: return "numeric";
        case BoundKind::Symbolic: return "symbolic";
        case BoundKind::Referral: return "referral";
    }
    return "?";
}

bool BoundReport::operator==(const BoundReport& o) const {
    if (per_system.size() != o.per_system.size()) return false;
    for (std::size_t i = 0; i < per_system.size(); ++i) {
        const auto &a = per_system[i], &b = o.per_system[i];
        if (a.system != b.system || a.kind != b.kind || a.value != b.value || a.expression != b.expression)
            return false;
    }
    return case_label == o.case_label && n_count == o.n_count && total_kind == o.total_kind &&
           numeric_part == o.numeric_part && total_expression == o.total_expression &&
           i_set_bound == o.i_set_bound && i_set_expression == o.i_set_expression && notes == o.notes;
}

std::int64_t n_count(const ThreeComponentConfig& cfg) {
    return intersect(cfg[0], cfg[1]) + intersect(cfg[0], cfg[2]) + intersect(cfg[1], cfg[2]);
}

std::int64_t floor_log(const Integer& b, const Integer& n) {
    if (b < 2 || n < 1) throw ValidationError("floor_log needs base >= 2 and argument >= 1");
    std::int64_t k = 0;
    Integer p = b;
    while (p <= n) {
        ++k;
        p *= b;
    }
    return k;
}

namespace {

bool is_class(const DivisorClass& d, std::int64_t u, std::int64_t v) { return d.u == u && d.v == v; }

int count_class(const ThreeComponentConfig& cfg, std::int64_t u, std::int64_t v) {
    int k = 0;
    for (const auto& c : cfg.components()) k += is_class(c, u, v) ? 1 : 0;
    return k;
}

void require_f1_hypotheses(const ThreeComponentConfig& cfg) {
    bool all_zero = true;
    for (const auto& c : cfg.components()) all_zero = all_zero && c.v == 0;
    if (all_zero)
        throw HypothesisNotMet("hypothesis-not-met: all beta_i = 0 on F_1; the configuration reduces to the plane case");
    if (cfg[2].v == 0) throw HypothesisNotMet("hypothesis-not-met: beta_3 = 0 on F_1 with some beta_i > 0");
}

std::int64_t ab(const DivisorClass& d) { return d.u + d.v; }

SystemBound numeric(std::string system, const Integer& v) {
    return {std::move(system), BoundKind::Numeric, v, v.get_str()};
}

}  // namespace

std::vector<HypSystem> classify_hyp_systems(const ThreeComponentConfig& cfg) {
    std::vector<HypSystem> r;
    const int e = cfg.e();
    if (e == 0) {
        r.push_back({"(1,0)", "always"});
        r.push_back({"(0,1)", "always"});
        if (count_class(cfg, 1, 1) > 0) r.push_back({"(1,1)", "B1 in |(1,1)|"});
        return r;
    }
    if (e == 1) require_f1_hypotheses(cfg);
    r.push_back({"C0", "always"});
    r.push_back({"f", "always"});
    if (e >= 3) return r;
    if (e == 2) {
        if (count_class(cfg, 1, 0) > 0) r.push_back({"C1", "B1 in |C1|"});
        return r;
    }
    r.push_back({"C1", "always"});
    if (is_class(cfg[0], 1, 0)) {
        if (is_class(cfg[1], 1, 0)) {
            r.push_back({"d1*C1 (d1>=2)", "B1,B2 in |C1|; d1>=3 reduces to the plane case"});
            r.push_back({"d1*C1+f (d1>=1)", "B1,B2 in |C1|"});
        } else {
            r.push_back({"2*C1", "B1 in |C1|"});
            r.push_back({"C1+f", "B1 in |C1|; d1>=2 would need B2 in |C1|"});
        }
    }
    return r;
}

BoundReport exceptional_set_bound(const ThreeComponentConfig& cfg, std::optional<Integer> gamma) {
    if (gamma && *gamma < 1) throw ValidationError("gamma must be a positive integer");
    BoundReport rep;
    const std::int64_t N = n_count(cfg);
    rep.n_count = N;
    const int e = cfg.e();
    const Integer n(N);
    auto& ps = rep.per_system;
    rep.total_kind = BoundKind::Numeric;

    if (e == 0) {
        const int k = count_class(cfg, 1, 1);
        ps.push_back(numeric("(1,0)", n));
        ps.push_back(numeric("(0,1)", n));
        switch (k) {
            case 0: rep.case_label = CaseLabel::F0_NoDiagonal; break;
            case 1:
                rep.case_label = CaseLabel::F0_OneDiagonal;
                ps.push_back(numeric("(1,1)", Integer(ab(cfg[1])) * ab(cfg[2])));
                break;
            case 2:
                rep.case_label = CaseLabel::F0_TwoDiagonal;
                ps.push_back(numeric("(1,1)", Integer(4) * ab(cfg[2])));
                break;
            default:
                rep.case_label = CaseLabel::F0_ThreeDiagonal;
                // all three in |(1,1)| forces |N| = 6; the total is 24
                ps.push_back(numeric("(1,1)", Integer(24) - 2 * n));
                break;
        }
    } else if (e >= 2) {
        ps.push_back(numeric("C0", 1));
        ps.push_back(numeric("f", n));
        if (e >= 3) {
            rep.case_label = CaseLabel::Fe_Large;
        } else {
            const int k = count_class(cfg, 1, 0);
            auto w = [](const DivisorClass& d) { return Integer(2 * d.u + d.v); };
            switch (k) {
                case 0: rep.case_label = CaseLabel::F2_NoC1; break;
                case 1:
                    rep.case_label = CaseLabel::F2_OneC1;
                    ps.push_back(numeric("C1", w(cfg[1]) * w(cfg[2])));
                    break;
                case 2:
                    rep.case_label = CaseLabel::F2_TwoC1;
                    ps.push_back(numeric("C1", 4 * w(cfg[2])));
                    break;
                default:
                    rep.case_label = CaseLabel::F2_ThreeC1;
                    ps.push_back(numeric("C1", Integer(19) - 1 - n));
                    break;
            }
        }
    } else {
        require_f1_hypotheses(cfg);
        ps.push_back(numeric("C0", 1));
        ps.push_back(numeric("f", n));
        ps.push_back(numeric("C1", n * (n - 1) / 2));
        const bool b1 = is_class(cfg[0], 1, 0), b2 = is_class(cfg[1], 1, 0);
        rep.notes.push_back("derived-aggregation: the F1 total is the sum of the per-system upper bounds");
        if (!(b1 && b2)) {
            rep.case_label = CaseLabel::F1_Effective;
            if (b1) {
                const Integer p = Integer(ab(cfg[1])) * ab(cfg[2]);
                ps.push_back(numeric("2*C1", p));
                ps.push_back(numeric("C1+f", p));
            }
        } else {
            rep.case_label = CaseLabel::F1_Gamma;
            const std::int64_t b = ab(cfg[2]);
            ps.push_back(numeric("2*C1", Integer(2 * b)));
            rep.i_set_expression = "1 + floor(log_" + std::to_string(b) + "(gamma - 1))";
            const std::string fam = "d1*C1+f (d1>=1)";
            if (gamma) {
                // gamma = 1 leaves no room for a curve of degree d1 + 1 >= 2.
                Integer ib = *gamma == 1 ? Integer(0) : Integer(1 + floor_log(b, *gamma - 1));
                rep.i_set_bound = ib;
                SystemBound sb = numeric(fam, Integer(2 * b) * ib);
                ps.push_back(sb);
            } else {
                ps.push_back({fam, BoundKind::Symbolic, 0,
                              std::to_string(2 * b) + "*(" + rep.i_set_expression + ")"});
            }
            ps.push_back({"d1*C1 (d1>=3)", BoundKind::Referral, 0, "reduces-to-plane-case"});
        }
    }

    rep.numeric_part = 0;
    bool symbolic = false, referral = false;
    std::string tail;
    for (const auto& s : ps) {
        if (s.kind == BoundKind::Numeric) {
            rep.numeric_part += s.value;
        } else {
            tail += " + " + s.expression;
            symbolic = symbolic || s.kind == BoundKind::Symbolic;
            referral = referral || s.kind == BoundKind::Referral;
        }
    }
    rep.total_kind = referral ? BoundKind::Referral : symbolic ? BoundKind::Symbolic : BoundKind::Numeric;
    rep.total_expression = rep.numeric_part.get_str() + tail;
    return rep;
}

Integer hyp_c1_f1_bound(const ThreeComponentConfig& cfg) {
    if (cfg.e() != 1) throw ValidationError("Hyp_C1 bound is stated on F_1 only; got F_" + std::to_string(cfg.e()));
    require_f1_hypotheses(cfg);
    const Integer n(n_count(cfg));
    return n * (n - 1) / 2;
}

Emptiness emptiness_criterion(const ThreeComponentConfig& cfg) {
    bool all_alpha = true, all_beta = true, some_beta = false;
    for (const auto& c : cfg.components()) {
        all_alpha = all_alpha && c.u >= 3;
        all_beta = all_beta && c.v >= 3;
        some_beta = some_beta || c.v >= 3;
    }
    const bool ok = cfg.e() == 0 ? (all_alpha && all_beta) : (all_alpha && some_beta);
    return ok ? Emptiness::Applies : Emptiness::NotApplicable;
}

PlaneReferral f1_beta_zero_referral(const ThreeComponentConfig& cfg) {
    if (cfg.e() != 1) throw ValidationError("plane reduction applies on F_1 only");
    for (const auto& c : cfg.components())
        if (c.v != 0) throw ValidationError("plane reduction needs every beta_i = 0; got " + c.str());
    PlaneReferral r;
    r.total_degree = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        r.degrees[i] = cfg[i].u;
        r.total_degree += cfg[i].u;
    }
    // descending, so the plane model lists the largest degree first
    std::sort(r.degrees.begin(), r.degrees.end(), std::greater<>());
    r.marker = "reduces-to-plane-case";
    return r;
}

}  // namespace hirz
