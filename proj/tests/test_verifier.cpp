#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hirz/errors.hpp"
#include "hirz/json_io.hpp"
#include "hirz/parse.hpp"
#include "hirz/verifier.hpp"

#include <set>

using namespace hirz;

namespace {

std::string data(const std::string& name) { return std::string(HIRZ_DATA_DIR) + "/" + name; }

// A form from its chart t0 = s1 = 1 polynomial (x = t1, y = s0).
CoxForm chart_form(int e, std::int64_t u, std::int64_t v, const std::string& poly) {
    const DivisorClass cls(SurfaceModel(e), u, v);
    std::map<CoxForm::Key, Rational> m;
    const BPoly f = parse_bpoly(poly);
    for (const auto& [exp, c] : f.terms()) m[{exp.second, exp.first}] = c;
    return CoxForm(cls, m);
}

ExplicitConfig f0_config(const std::string& a, const std::string& b, const std::string& c) {
    return ExplicitConfig(SurfaceModel(0), {ExplicitCurve(chart_form(0, 1, 1, a)), ExplicitCurve(chart_form(0, 1, 1, b)),
                                            ExplicitCurve(chart_form(0, 1, 1, c))});
}

// Independent count of D cap B when every point is rational and transverse:
// locate the points of D cap B_j by the bivariate path and take the union.
std::optional<std::size_t> located_count(const CoxForm& d, const ExplicitConfig& cfg) {
    std::set<CoxPoint> pts;
    try {
        for (const auto& c : cfg.components())
            for (const auto& p : intersection_points(d, c.form)) pts.insert(p);
    } catch (const ComputationError&) {
        return std::nullopt;
    }
    return pts.size();
}

}  // namespace

TEST_CASE("point normalization") {
    const auto p = CoxPoint::make(2, 2, 4, 3, 6);
    CHECK(p == CoxPoint::make(2, 1, 2, 2, 1));  // s0 scales by t0^e, then by 1/s1
    CHECK(CoxPoint::make(1, 0, 3, 5, 0) == CoxPoint::make(1, 0, 1, 1, 0));
    CHECK(CoxPoint::make(0, 3, 6, 1, 2) == CoxPoint::make(0, 1, 2, Rational(1, 2), 1));
    CHECK_THROWS_AS(CoxPoint::make(0, 0, 0, 1, 1), ValidationError);
    CHECK_THROWS_AS(CoxPoint::make(0, 1, 1, 0, 0), ValidationError);
}

TEST_CASE("forms, charts and restrictions") {
    const SurfaceModel s(2);
    CHECK_THROWS_AS(CoxForm::from_exponents(DivisorClass(s, 1, 0), {{{1, 0, 1, 0}, 1}}), ValidationError);
    const CoxForm f = CoxForm::from_exponents(DivisorClass(s, 1, 0), {{{2, 0, 1, 0}, 1}, {{0, 0, 0, 1}, -3}});
    CHECK(f.chart(0, 1) == parse_bpoly("y - 3"));
    CHECK(f.chart(1, 1) == parse_bpoly("x^2y - 3"));
    CHECK(f.chart(0, 0) == parse_bpoly("1 - 3y"));
    CHECK(f.eval(CoxPoint::make(2, 1, 5, 3, 1)) == 0);
    CHECK(cox_basis(DivisorClass(s, 1, 0)).size() == 4);
    CHECK(cox_basis(DivisorClass(SurfaceModel(0), 3, 3)).size() == 16);

    // Fiber t1 = 5 t0: restriction is s0 - 3 s1 in (s1 : s0).
    const BinaryForm r = f.restrict_fiber(1, 5);
    CHECK(r.degree == 1);
    CHECK(r.p == UPoly(std::vector<Rational>{-3, 1}));

    // C0 is disjoint from a (1,0) curve on F2 when the s1 coefficient is a constant.
    const CoxForm c0(c0_class(s), {{{1, 0}, 1}});
    CHECK(restrict_to(f, c0).degree == 0);
    CHECK(restrict_to(f, c0).distinct_root_count() == 0);
    CHECK_THROWS_AS(restrict_to(f, chart_form(0, 1, 2, "y - x^2")), SurfaceMismatch);
}

TEST_CASE("local equations") {
    const CoxForm f = chart_form(0, 1, 1, "x*y - 2");
    const auto p = CoxPoint::make(0, 1, 1, 2, 1);
    CHECK(f.eval(p) == 0);
    CHECK(local_equation(f, p)(0, 0) == 0);
    CHECK(local_equation(f, p).order() == 1);
}

TEST_CASE("explicit curve validation") {
    CHECK_THROWS_AS(ExplicitCurve(CoxForm(DivisorClass(SurfaceModel(0), 1, 1), {})), ValidationError);
    CHECK_THROWS_AS(ExplicitCurve(chart_form(0, 2, 2, "y^2 - 2xy + x^2")), ValidationError);
    // t0^2 is invisible in the chart t0 = 1.
    CHECK_THROWS_AS(ExplicitCurve(CoxForm::from_exponents(DivisorClass(SurfaceModel(0), 0, 2), {{{2, 0, 0, 0}, 1}})),
                    ValidationError);
    CHECK_NOTHROW(ExplicitCurve(chart_form(0, 1, 1, "x*y - 2")));
}

TEST_CASE("compute_N on three (1,1) curves") {
    // x0y0 - x1y1 is 1 - xy in the chart, then the diagonal and a second hyperbola.
    const auto cfg = f0_config("1 - x*y", "y - x", "x*y - 4");
    const auto n = compute_N(cfg);
    // 1 - xy and xy - 4 meet only at the two boundary points (0,inf) and (inf,0).
    CHECK(n.size() == 6);
    CHECK(static_cast<std::int64_t>(n.size()) == n_count(cfg.numeric()));
    std::set<CoxPoint> pts;
    for (const auto& lp : n) {
        CHECK(cfg.components()[static_cast<std::size_t>(lp.i)].form.eval(lp.point) == 0);
        CHECK(cfg.components()[static_cast<std::size_t>(lp.j)].form.eval(lp.point) == 0);
        pts.insert(lp.point);
    }
    CHECK(pts.size() == 6);
}

TEST_CASE("compute_N errors") {
    CHECK_THROWS_AS(f0_config("y - x", "y - x", "y + x - 7"), SharedComponent);
    CHECK_THROWS_AS(f0_config("y - x", "y + x*y - x", "y + x - 5"), TangentialContact);
    CHECK_THROWS_AS(f0_config("y - x", "x*y - 2", "y + x - 7"), IrrationalIntersectionPoint);
    // three lines through the origin
    CHECK_THROWS_AS(f0_config("y - x", "y - 2x", "y + x + x*y"), TriplePoint);
    CHECK_THROWS_AS(load_fixture(data("f0_tangential.json")), TangentialContact);
    CHECK_THROWS_AS(load_fixture(data("f0_irrational.json")), IrrationalIntersectionPoint);
    CHECK_THROWS_AS(load_fixture(data("f0_shared.json")), SharedComponent);
}

TEST_CASE("hyper-bitangency") {
    const auto cfg = f0_config("1 - x*y", "y - x", "x*y - 4");
    // A component is rejected.
    CHECK_THROWS_AS(is_hyper_bitangent(cfg.components()[1].form, cfg), SharedComponent);
    // The ruling y = 1 meets 1 - xy at x = 1, y - x at x = 1 and xy - 4 at x = 4: two points.
    const auto v = is_hyper_bitangent(chart_form(0, 1, 0, "y - 1"), cfg);
    CHECK(v.count == 2);
    CHECK(v.hyper_bitangent);
    CHECK(v.witnesses.size() == 2);
    // The ruling y = 3: three distinct points.
    CHECK_FALSE(is_hyper_bitangent(chart_form(0, 1, 0, "y - 3"), cfg).hyper_bitangent);
    // y = x + 1 meets 1 - xy and xy - 4 in conjugate pairs and touches y = x at
    // (inf, inf): five points, one of them rational.
    const auto w = is_hyper_bitangent(chart_form(0, 1, 1, "y - x - 1"), cfg);
    CHECK(w.count == 5);
    CHECK(w.witnesses.size() == 1);
    // Singular or unsupported candidate classes.
    CHECK_THROWS_AS(is_hyper_bitangent(chart_form(0, 2, 1, "y^2 - x"), cfg), ValidationError);
    CHECK_THROWS_AS(is_hyper_bitangent(chart_form(0, 1, 1, "x*y"), cfg), ValidationError);
}

TEST_CASE("(3,3)^3 fixture on F0") {
    const auto cfg = load_fixture(data("f0_33_cubed.json"));
    CHECK(cfg.N().size() == 54);
    CHECK(n_count(cfg.numeric()) == 54);
    const auto cands = enumerate_candidates(cfg);
    CHECK(cands.size() == 108);
    const auto d = cands.front().curve;
    const auto v = is_hyper_bitangent(d, cfg);
    CHECK(v.count >= 3);
    const auto rec = verify_bound(cfg);
    CHECK(rec.found.empty());
    CHECK(rec.covered_bound == 108);
    CHECK(rec.within_bound);
}

TEST_CASE("three (1,1) on F0") {
    const auto cfg = load_fixture(data("f0_11_cubed.json"));
    CHECK(cfg.N().size() == 6);
    const auto rec = verify_bound(cfg);
    CHECK(rec.report.numeric_part == 24);
    CHECK(rec.found.size() <= 24);
    std::size_t rulings = 0;
    for (const auto& v : rec.verdicts) rulings += (v.candidate.system == "(1,0)" || v.candidate.system == "(0,1)");
    CHECK(rulings == 2 * cfg.N().size());
}

TEST_CASE("F2 fixtures") {
    const auto three = load_fixture(data("f2_10_cubed.json"));
    auto rec = verify_bound(three);
    CHECK(rec.report.numeric_part == 19);
    CHECK(rec.found.size() <= 19);

    const auto mixed = load_fixture(data("f2_10_10_13.json"));
    CHECK(mixed.N().size() == 12);
    const CoxForm c0(c0_class(SurfaceModel(2)), {{{1, 0}, 1}});
    const auto v = is_hyper_bitangent(c0, mixed);
    CHECK(v.count == 3);
    CHECK_FALSE(v.hyper_bitangent);
    rec = verify_bound(mixed);
    for (const auto& f : rec.found) CHECK(f.system != "C0");
    CHECK(rec.within_bound);
}

TEST_CASE("F1 fixture") {
    const auto cfg = load_fixture(data("f1_11_cubed.json"));
    CHECK(cfg.N().size() == 9);
    const auto rec = verify_bound(cfg);
    CHECK(rec.covered_bound == 46);
    CHECK(rec.within_bound);
    std::size_t lines = 0;
    for (const auto& v : rec.verdicts) lines += v.candidate.system == "C1";
    CHECK(lines == 36);  // one line through each pair of the nine points
}

TEST_CASE("verifier invariants over all fixtures") {
    int compared = 0;
    for (const char* name : {"f0_33_cubed.json", "f0_11_cubed.json", "f2_10_cubed.json", "f2_10_10_13.json",
                             "f1_11_cubed.json"}) {
        INFO(std::string(name));
        const auto cfg = load_fixture(data(name));
        CHECK(static_cast<std::int64_t>(cfg.N().size()) == n_count(cfg.numeric()));
        const auto rec = verify_bound(cfg);
        CHECK(rec.within_bound);
        CHECK(Integer(static_cast<long>(rec.found.size())) <= rec.covered_bound);
        for (const auto& f : rec.found) CHECK(is_hyper_bitangent(f.curve, cfg).hyper_bitangent);
        if (cfg.e() == 0) {
            std::size_t rulings = 0;
            for (const auto& v : rec.verdicts) rulings += (v.candidate.system == "(1,0)" || v.candidate.system == "(0,1)");
            CHECK(rulings == 2 * cfg.N().size());
        }
        // Squarefree counting against located points, where all points are rational and transverse.
        for (const auto& v : rec.verdicts) {
            if (v.skipped) continue;
            if (v.verdict.witnesses.size() != static_cast<std::size_t>(v.verdict.count)) continue;
            const auto located = located_count(v.candidate.curve, cfg);
            if (!located) continue;
            ++compared;
            CHECK(*located == static_cast<std::size_t>(v.verdict.count));
        }
    }
    CHECK(compared > 0);
}

TEST_CASE("fixture JSON round trip") {
    const auto j = read_json_file(data("f2_10_10_13.json"));
    const auto cfg = config_from_json(j);
    Json again = {{"e", cfg.e()}, {"components", Json::array()}};
    for (const auto& c : cfg.components()) again["components"].push_back(form_json(c.form));
    const auto cfg2 = config_from_json(again);
    for (std::size_t i = 0; i < 3; ++i) CHECK(cfg2.components()[i].form == cfg.components()[i].form);
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"e":0})")), ValidationError);
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"e":0,"components":[1,2,3]})")), ValidationError);
}
