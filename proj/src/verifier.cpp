#include "hirz/verifier.hpp"

#include "hirz/errors.hpp"
#include "hirz/germ.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hirz {

namespace {

Rational rpow(const Rational& b, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= b;
    return r;
}

std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> m, std::size_t cols) {
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        const Rational inv = Rational(1) / m[row][c];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            const Rational f = m[r][c];
            for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++row;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[static_cast<std::size_t>(pivot_col[r])] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

struct SectionData {
    BinaryForm P, Q;
};

// P, Q with form = P*s1 + Q*s0, for a class (1,k).
SectionData section_data(const CoxForm& d) {
    const int k = static_cast<int>(d.cls().v), e = d.e();
    std::vector<Rational> p(static_cast<std::size_t>(std::max(k, 0)) + 1), q(static_cast<std::size_t>(k + e) + 1);
    for (const auto& [key, c] : d.terms()) (key.first == 0 ? p : q)[static_cast<std::size_t>(key.second)] = c;
    return {{std::max(k, 0), UPoly(std::move(p))}, {k + e, UPoly(std::move(q))}};
}

bool is_fiber_form(const CoxForm& d) { return d.cls().u == 0 && d.cls().v == 1; }
bool is_section_form(const CoxForm& d) { return d.cls().u == 1 && d.cls().c1_degree() >= 0; }

void require_smooth_candidate(const CoxForm& d) {
    if (d.is_zero()) throw ValidationError("candidate form is zero");
    if (is_fiber_form(d)) return;
    if (!is_section_form(d))
        throw ValidationError("candidate class " + d.cls().str() + " is outside the smooth rational classes handled");
    auto [P, Q] = section_data(d);
    if (P.is_zero()) {
        if (Q.degree != 0) throw ValidationError("candidate " + d.str() + " is reducible");
        return;
    }
    if (Q.is_zero()) {
        if (P.degree != 0) throw ValidationError("candidate " + d.str() + " is reducible");
        return;
    }
    if (gcd(P, Q).degree > 0) throw ValidationError("candidate " + d.str() + " is reducible");
}

bool is_irreducible_section(const CoxForm& d) {
    try {
        require_smooth_candidate(d);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

void add_roots(const BinaryForm& f, const std::function<CoxPoint(const Rational&)>& finite, const CoxPoint& at_inf,
               std::set<CoxPoint>& out) {
    if (f.p.degree() >= 1)
        for (const auto& r : rational_roots(f.p)) out.insert(finite(r));
    if (f.infinity_multiplicity() > 0) out.insert(at_inf);
}

}  // namespace

CoxPoint CoxPoint::make(int e, Rational t0, Rational t1, Rational s0, Rational s1) {
    if ((t0 == 0 && t1 == 0) || (s0 == 0 && s1 == 0)) throw ValidationError("degenerate coordinates for a point");
    const Rational ta = t0 != 0 ? t0 : t1;
    t0 /= ta;
    t1 /= ta;
    s0 *= rpow(ta, e);
    if (s1 != 0) {
        s0 /= s1;
        s1 = 1;
    } else {
        s0 = 1;
    }
    CoxPoint p;
    p.t0 = t0;
    p.t1 = t1;
    p.s0 = s0;
    p.s1 = s1;
    return p;
}

bool CoxPoint::operator<(const CoxPoint& o) const {
    if (t0 != o.t0) return t0 < o.t0;
    if (t1 != o.t1) return t1 < o.t1;
    if (s0 != o.s0) return s0 < o.s0;
    return s1 < o.s1;
}

std::string CoxPoint::str() const {
    return "(" + to_string(t0) + ":" + to_string(t1) + " ; " + to_string(s0) + ":" + to_string(s1) + ")";
}

CoxForm::CoxForm(DivisorClass cls, std::map<Key, Rational> terms) : cls_(cls) {
    if (cls.u < 0) throw ValidationError("class " + cls.str() + " has no forms");
    for (auto& [k, c] : terms) {
        if (c == 0) continue;
        if (k.first < 0 || k.first > cls.u || k.second < 0 || a0(k) < 0)
            throw ValidationError("monomial does not belong to class " + cls.str());
        terms_[k] = c;
    }
}

CoxForm CoxForm::from_exponents(DivisorClass cls,
                                const std::vector<std::pair<std::array<int, 4>, Rational>>& terms) {
    std::map<Key, Rational> m;
    const int e = cls.e();
    for (const auto& [ex, c] : terms) {
        const auto [a0, a1, i, j] = ex;
        if (a0 < 0 || a1 < 0 || i < 0 || j < 0 || i + j != cls.u || a0 + a1 != cls.v + i * e)
            throw ValidationError("exponents [" + std::to_string(a0) + "," + std::to_string(a1) + "," +
                                  std::to_string(i) + "," + std::to_string(j) + "] do not have class " + cls.str() +
                                  " on F_" + std::to_string(e));
        m[{i, a1}] += c;
    }
    return CoxForm(cls, std::move(m));
}

std::array<int, 4> CoxForm::exponents(const Key& k) const {
    return {a0(k), k.second, k.first, static_cast<int>(cls_.u) - k.first};
}

Rational CoxForm::eval(const CoxPoint& p) const {
    Rational acc = 0;
    for (const auto& [k, c] : terms_) {
        auto [a0_, a1, i, j] = exponents(k);
        acc += c * rpow(p.t0, a0_) * rpow(p.t1, a1) * rpow(p.s0, i) * rpow(p.s1, j);
    }
    return acc;
}

BPoly CoxForm::chart(int a, int b) const {
    BPoly::Terms t;
    for (const auto& [k, c] : terms_) {
        auto [a0_, a1, i, j] = exponents(k);
        t[{a == 0 ? a1 : a0_, b == 1 ? i : j}] += c;
    }
    return BPoly(std::move(t));
}

BinaryForm CoxForm::restrict_fiber(const Rational& t0, const Rational& t1) const {
    std::vector<Rational> v(static_cast<std::size_t>(cls_.u) + 1);
    for (const auto& [k, c] : terms_) {
        auto [a0_, a1, i, j] = exponents(k);
        v[static_cast<std::size_t>(i)] += c * rpow(t0, a0_) * rpow(t1, a1);
    }
    return {static_cast<int>(cls_.u), UPoly(std::move(v))};
}

BinaryForm CoxForm::restrict_section(const BinaryForm& P, const BinaryForm& Q) const {
    UPoly acc;
    const UPoly negQ = -Q.p;
    for (const auto& [k, c] : terms_) {
        auto [a0_, a1, i, j] = exponents(k);
        acc += UPoly::monomial(c, a1) * P.p.pow(i) * negQ.pow(j);
    }
    return {static_cast<int>(cls_.v) + static_cast<int>(cls_.u) * Q.degree, acc};
}

CoxForm CoxForm::normalized() const {
    if (terms_.empty()) return *this;
    const Rational inv = Rational(1) / terms_.begin()->second;
    std::map<Key, Rational> m;
    for (const auto& [k, c] : terms_) m[k] = c * inv;
    return CoxForm(cls_, std::move(m));
}

std::string CoxForm::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    const char* names[4] = {"t0", "t1", "s0", "s1"};
    for (const auto& [k, c] : terms_) {
        s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        std::string mon;
        const auto ex = exponents(k);
        for (int v = 0; v < 4; ++v) {
            if (ex[static_cast<std::size_t>(v)] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += names[v];
            if (ex[static_cast<std::size_t>(v)] > 1) mon += "^" + std::to_string(ex[static_cast<std::size_t>(v)]);
        }
        if (mon.empty()) {
            s += to_string(abs(c));
        } else {
            if (abs(c) != 1) s += to_string(abs(c)) + "*";
            s += mon;
        }
    }
    return s;
}

std::vector<CoxForm::Key> cox_basis(const DivisorClass& cls) {
    std::vector<CoxForm::Key> r;
    for (int i = 0; i <= cls.u; ++i) {
        const std::int64_t top = cls.v + static_cast<std::int64_t>(i) * cls.e();
        for (std::int64_t a1 = 0; a1 <= top; ++a1) r.emplace_back(i, static_cast<int>(a1));
    }
    return r;
}

BPoly local_equation(const CoxForm& f, const CoxPoint& p) {
    const int a = p.t0 != 0 ? 0 : 1;
    const int b = p.s1 != 0 ? 1 : 0;
    // Normalized points already have t_a = 1 and s_b = 1.
    const Rational x = a == 0 ? p.t1 : p.t0;
    const Rational y = b == 1 ? p.s0 : p.s1;
    return f.chart(a, b).translate(x, y);
}

ExplicitCurve::ExplicitCurve(CoxForm f) : form(std::move(f)) {
    if (form.is_zero()) throw ValidationError("curve equation is zero");
    int min_t0 = 1 << 30, min_s1 = 1 << 30;
    for (const auto& [k, c] : form.terms()) {
        auto ex = form.exponents(k);
        min_t0 = std::min(min_t0, ex[0]);
        min_s1 = std::min(min_s1, ex[3]);
    }
    if (min_t0 >= 2 || min_s1 >= 2 || !is_squarefree(form.chart(0, 1)))
        throw ValidationError("curve equation " + form.str() + " has a repeated factor");
}

std::vector<CoxPoint> intersection_points(const CoxForm& F, const CoxForm& G) {
    if (!(F.cls().surface == G.cls().surface)) throw SurfaceMismatch("curves live on different surfaces");
    const int e = F.e();
    std::set<CoxPoint> pts;

    const BPoly f = F.chart(0, 1), g = G.chart(0, 1);
    if (gcd(f, g).total_degree() > 0) throw SharedComponent("curves share a component: " + gcd(f, g).str());
    const UPoly R = resultant_y(f, g);
    if (R.is_zero()) throw SharedComponent("curves share a component");
    if (R.degree() >= 1) {
        for (const auto& x0 : rational_roots(R)) {
            const UPoly hf = f.at_x(x0), hg = g.at_x(x0);
            if (hf.is_zero() && hg.is_zero()) throw SharedComponent("curves share the fiber t1 = " + to_string(x0));
            const UPoly h = hf.is_zero() ? hg : hg.is_zero() ? hf : gcd(hf, hg);
            if (h.degree() < 1) continue;
            for (const auto& y0 : rational_roots(h)) pts.insert(CoxPoint::make(e, 1, x0, y0, 1));
        }
    }

    // Fiber t0 = 0, coordinate (s1 : s0).
    {
        const BinaryForm a = F.restrict_fiber(0, 1), b = G.restrict_fiber(0, 1);
        if (a.is_zero() && b.is_zero()) throw SharedComponent("curves share the fiber t0 = 0");
        add_roots(gcd(a, b), [&](const Rational& z) { return CoxPoint::make(e, 0, 1, z, 1); },
                  CoxPoint::make(e, 0, 1, 1, 0), pts);
    }
    // Section s1 = 0, coordinate (t0 : t1).
    {
        const BinaryForm one{0, UPoly(1)}, zero{e, UPoly()};
        const BinaryForm a = F.restrict_section(one, zero), b = G.restrict_section(one, zero);
        if (a.is_zero() && b.is_zero()) throw SharedComponent("curves share the section s1 = 0");
        add_roots(gcd(a, b), [&](const Rational& z) { return CoxPoint::make(e, 1, z, 1, 0); },
                  CoxPoint::make(e, 0, 1, 1, 0), pts);
    }

    for (const auto& p : pts) {
        auto m = intersection_at_origin(local_equation(F, p), local_equation(G, p));
        if (!m) throw SharedComponent("curves share a component through " + p.str());
        if (*m > 1)
            throw TangentialContact("non-transverse contact of order " + std::to_string(*m) + " at " + p.str());
    }
    const std::int64_t expected = intersect(F.cls(), G.cls());
    if (static_cast<std::int64_t>(pts.size()) < expected)
        throw IrrationalIntersectionPoint("only " + std::to_string(pts.size()) + " of " + std::to_string(expected) +
                                          " intersection points are rational");
    if (static_cast<std::int64_t>(pts.size()) > expected)
        throw std::logic_error("more transverse intersection points than the intersection number");
    return {pts.begin(), pts.end()};
}

ExplicitConfig::ExplicitConfig(SurfaceModel s, std::array<ExplicitCurve, 3> components)
    : surface_(s), comps_(std::move(components)) {
    for (const auto& c : comps_)
        if (!(c.cls().surface == s)) throw SurfaceMismatch("component lives on another surface");
    std::map<CoxPoint, int> seen;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (const auto& p : intersection_points(comps_[static_cast<std::size_t>(i)].form,
                                                     comps_[static_cast<std::size_t>(j)].form)) {
                if (seen[p]++ > 0) throw TriplePoint("three components pass through " + p.str());
                n_.push_back({p, i, j});
            }
}

ThreeComponentConfig ExplicitConfig::numeric() const {
    return ThreeComponentConfig(surface_, {comps_[0].cls(), comps_[1].cls(), comps_[2].cls()});
}

std::vector<LabeledPoint> compute_N(const ExplicitConfig& cfg) { return cfg.N(); }

BinaryForm restrict_to(const CoxForm& b, const CoxForm& d) {
    if (!(b.cls().surface == d.cls().surface)) throw SurfaceMismatch("curves live on different surfaces");
    require_smooth_candidate(d);
    if (is_fiber_form(d)) {
        const Rational c0 = d.terms().count({0, 0}) ? d.terms().at({0, 0}) : Rational(0);
        const Rational c1 = d.terms().count({0, 1}) ? d.terms().at({0, 1}) : Rational(0);
        return b.restrict_fiber(c1, -c0);
    }
    auto [P, Q] = section_data(d);
    return b.restrict_section(P, Q);
}

HypVerdict is_hyper_bitangent(const CoxForm& d, const ExplicitConfig& cfg) {
    require_smooth_candidate(d);
    const int e = cfg.e();
    BinaryForm prod{0, UPoly(1)};
    for (const auto& c : cfg.components()) {
        BinaryForm r = restrict_to(c.form, d);
        if (r.is_zero()) throw SharedComponent("candidate " + d.str() + " is a component of B");
        prod = prod * r;
    }
    HypVerdict v;
    v.count = prod.distinct_root_count();
    v.hyper_bitangent = v.count <= 2;
    std::set<CoxPoint> w;
    if (is_fiber_form(d)) {
        const Rational c0 = d.terms().count({0, 0}) ? d.terms().at({0, 0}) : Rational(0);
        const Rational c1 = d.terms().count({0, 1}) ? d.terms().at({0, 1}) : Rational(0);
        add_roots(prod, [&](const Rational& z) { return CoxPoint::make(e, c1, -c0, z, 1); },
                  CoxPoint::make(e, c1, -c0, 1, 0), w);
    } else {
        auto [P, Q] = section_data(d);
        auto at = [&](const Rational& z) { return CoxPoint::make(e, 1, z, P.p(z), -Q.p(z)); };
        add_roots(prod, at, CoxPoint::make(e, 0, 1, P.p.coeff(P.degree), -Q.p.coeff(Q.degree)), w);
    }
    v.witnesses.assign(w.begin(), w.end());
    return v;
}

namespace {

CoxForm fiber_through(const SurfaceModel& s, const CoxPoint& p) {
    return CoxForm(fiber_class(s), {{{0, 0}, p.t1}, {{0, 1}, -p.t0}});
}

CoxForm horizontal_ruling_through(const SurfaceModel& s, const CoxPoint& p) {
    return CoxForm(DivisorClass(s, 1, 0), {{{1, 0}, p.s1}, {{0, 0}, -p.s0}});
}

CoxForm c0_form(const SurfaceModel& s) { return CoxForm(c0_class(s), {{{1, 0}, 1}}); }

CoxForm form_from_vector(const DivisorClass& cls, const std::vector<CoxForm::Key>& basis,
                         const std::vector<Rational>& v) {
    std::map<CoxForm::Key, Rational> m;
    for (std::size_t i = 0; i < basis.size(); ++i) m[basis[i]] = v[i];
    return CoxForm(cls, std::move(m));
}

std::vector<Rational> value_row(const DivisorClass& cls, const std::vector<CoxForm::Key>& basis, const CoxPoint& p) {
    std::vector<Rational> row;
    for (const auto& k : basis) row.push_back(CoxForm(cls, {{k, 1}}).eval(p));
    return row;
}

// Coefficients of the condition "tangent to g at p" on forms of the class.
std::vector<Rational> tangency_row(const DivisorClass& cls, const std::vector<CoxForm::Key>& basis,
                                   const CoxForm& g, const CoxPoint& p) {
    const BPoly lg = local_equation(g, p);
    const Rational gx = lg.coeff(1, 0), gy = lg.coeff(0, 1);
    std::vector<Rational> row;
    for (const auto& k : basis) {
        const BPoly lm = local_equation(CoxForm(cls, {{k, 1}}), p);
        row.push_back(lm.coeff(1, 0) * gy - lm.coeff(0, 1) * gx);
    }
    return row;
}

void tangency_candidates(const ExplicitConfig& cfg, const DivisorClass& cls, const std::string& system,
                         std::vector<Candidate>& out) {
    const auto basis = cox_basis(cls);
    const auto& comps = cfg.components();
    for (int i = 0; i < 3; ++i) {
        if (!(comps[static_cast<std::size_t>(i)].cls() == cls)) continue;
        for (int j = 0; j < 3; ++j) {
            if (j == i) continue;
            const int k = 3 - i - j;
            auto on = [&](const LabeledPoint& lp, int a, int b) {
                return (lp.i == std::min(a, b) && lp.j == std::max(a, b));
            };
            for (const auto& p : cfg.N()) {
                if (!on(p, i, j)) continue;
                for (const auto& q : cfg.N()) {
                    if (!on(q, i, k)) continue;
                    // Ordered pairs would double count; fix j < k.
                    if (j > k) continue;
                    std::vector<std::vector<Rational>> rows{
                        value_row(cls, basis, p.point), value_row(cls, basis, q.point),
                        tangency_row(cls, basis, comps[static_cast<std::size_t>(j)].form, p.point),
                        tangency_row(cls, basis, comps[static_cast<std::size_t>(k)].form, q.point)};
                    for (const auto& v : nullspace(rows, basis.size())) {
                        CoxForm f = form_from_vector(cls, basis, v);
                        if (!is_irreducible_section(f)) continue;
                        out.push_back({f, system,
                                       "tangent to B" + std::to_string(j + 1) + " at " + p.point.str() +
                                           " and to B" + std::to_string(k + 1) + " at " + q.point.str()});
                    }
                }
            }
        }
    }
}

}  // namespace

std::vector<Candidate> enumerate_candidates(const ExplicitConfig& cfg) {
    const SurfaceModel s = cfg.surface();
    std::vector<Candidate> out;
    if (cfg.e() == 0) {
        for (const auto& p : cfg.N()) {
            out.push_back({horizontal_ruling_through(s, p.point), "(1,0)", "ruling through " + p.point.str()});
            out.push_back({fiber_through(s, p.point), "(0,1)", "ruling through " + p.point.str()});
        }
        tangency_candidates(cfg, DivisorClass(s, 1, 1), "(1,1)", out);
        return out;
    }
    if (cfg.e() > 2) throw ValidationError("explicit enumeration supports e in {0,1,2}");
    out.push_back({c0_form(s), "C0", "the negative section"});
    for (const auto& p : cfg.N()) out.push_back({fiber_through(s, p.point), "f", "fiber through " + p.point.str()});
    const DivisorClass c1 = c1_class(s);
    if (cfg.e() == 1) {
        const auto basis = cox_basis(c1);
        const auto& n = cfg.N();
        for (std::size_t a = 0; a < n.size(); ++a)
            for (std::size_t b = a + 1; b < n.size(); ++b) {
                auto ker = nullspace({value_row(c1, basis, n[a].point), value_row(c1, basis, n[b].point)}, basis.size());
                for (const auto& v : ker) {
                    CoxForm f = form_from_vector(c1, basis, v);
                    if (!is_irreducible_section(f)) continue;
                    out.push_back({f, "C1", "line through " + n[a].point.str() + " and " + n[b].point.str()});
                }
            }
        return out;
    }
    tangency_candidates(cfg, c1, "C1", out);
    return out;
}

VerifyRecord verify_bound(const ExplicitConfig& cfg) {
    VerifyRecord rec;
    rec.n_points = cfg.N().size();
    rec.report = exceptional_set_bound(cfg.numeric());
    std::vector<CoxForm> comps;
    for (const auto& c : cfg.components()) comps.push_back(c.form.normalized());
    std::vector<CoxForm> seen;
    for (auto& cand : enumerate_candidates(cfg)) {
        CandidateVerdict cv{cand, {}, false};
        const CoxForm nf = cand.curve.normalized();
        if (std::find(comps.begin(), comps.end(), nf) != comps.end()) {
            cv.skipped = true;
        } else {
            cv.verdict = is_hyper_bitangent(cand.curve, cfg);
            if (cv.verdict.hyper_bitangent && std::find(seen.begin(), seen.end(), nf) == seen.end()) {
                seen.push_back(nf);
                rec.found.push_back(cand);
            }
        }
        rec.verdicts.push_back(std::move(cv));
    }
    static const std::set<std::string> covered{"(1,0)", "(0,1)", "(1,1)", "C0", "f", "C1"};
    rec.covered_bound = 0;
    for (const auto& s : rec.report.per_system)
        if (s.kind == BoundKind::Numeric && covered.count(s.system)) rec.covered_bound += s.value;
    rec.within_bound = Integer(static_cast<long>(rec.found.size())) <= rec.covered_bound;
    return rec;
}

}  // namespace hirz
