#include "hirz/germ.hpp"

#include "hirz/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hirz {

PlaneCurveGerm::PlaneCurveGerm(const BPoly& poly, Rational bx, Rational by)
    : local_(poly.translate(bx, by)), bx_(std::move(bx)), by_(std::move(by)) {
    if (poly.is_zero()) throw ValidationError("germ polynomial is zero");
    if (local_.coeff(0, 0) != 0)
        throw ValidationError("polynomial does not vanish at the base point (" + to_string(bx_) + ", " +
                              to_string(by_) + ")");
    if (!is_squarefree(poly)) throw ValidationError("germ polynomial has a repeated factor: " + poly.str());
}

MultiplicitySequence::MultiplicitySequence(std::vector<int> e) : entries(std::move(e)) {
    if (entries.empty()) throw ValidationError("multiplicity sequence is empty");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 1) throw ValidationError("multiplicity sequence entries must be positive");
        if (i > 0 && entries[i] > entries[i - 1])
            throw ValidationError("multiplicity sequence must be non-increasing");
    }
    if (entries.back() != 1) throw ValidationError("multiplicity sequence must end with 1");
}

int mult_at(const PlaneCurveGerm& g) { return g.local().order(); }

IntersectionNumber intersection_at_origin(BPoly f, BPoly g) {
    long acc = 0;
    while (true) {
        if (!f.is_zero() && f.coeff(0, 0) != 0) return acc;
        if (!g.is_zero() && g.coeff(0, 0) != 0) return acc;
        if (f.is_zero() || g.is_zero()) return std::nullopt;
        UPoly fx = f.at_y(0), gx = g.at_y(0);
        if (fx.is_zero() && gx.is_zero()) return std::nullopt;  // y divides both
        if (gx.is_zero() || (!fx.is_zero() && fx.degree() > gx.degree())) {
            std::swap(f, g);
            std::swap(fx, gx);
        }
        if (fx.is_zero()) {
            // f = y*h: I(y, g) + I(h, g), and I(y, g) = ord_x g(x, 0).
            acc += gx.valuation();
            f = f.div_monomial(0, 1);
            continue;
        }
        const int r = fx.degree(), s = gx.degree();
        f = f * (Rational(1) / fx.lead());
        g = g * (Rational(1) / gx.lead()) - f.mul_monomial(s - r, 0);
    }
}

IntersectionNumber local_intersection(const PlaneCurveGerm& a, const PlaneCurveGerm& b) {
    if (a.base_x() != b.base_x() || a.base_y() != b.base_y())
        throw ValidationError("germs are based at different points");
    return intersection_at_origin(a.local(), b.local());
}

std::vector<ResolutionNode> resolution_chain(const PlaneCurveGerm& g) {
    std::vector<ResolutionNode> chain;
    BPoly f = g.local();
    Rational px = 0, py = 0;
    bool via_x = false;
    for (int step = 0;; ++step) {
        if (step > 100000) throw std::logic_error("resolution chain did not terminate");
        const int m = f.order();
        chain.push_back({f, px, py, m, via_x});
        if (m == 1) break;
        const BPoly cone = f.homogeneous_part(m);
        const Rational am = cone.coeff(0, m);
        if (am != 0) {
            // Single direction y = t*x is forced by the y^{m-1} x coefficient.
            const Rational t = -cone.coeff(1, m - 1) / (am * m);
            const BPoly expect = (BPoly::y() - BPoly::x() * t).pow(m) * am;
            if (!(expect == cone)) throw NotUnibranch("tangent cone " + cone.str() + " has several directions");
            f = f.blowup_x_chart().div_monomial(m, 0).translate(0, t);
            px = 0;
            py = t;
            via_x = true;
        } else {
            if (cone.terms().size() != 1 || cone.coeff(m, 0) == 0)
                throw NotUnibranch("tangent cone " + cone.str() + " has several directions");
            f = f.blowup_y_chart().div_monomial(0, m);
            px = 0;
            py = 0;
            via_x = false;
        }
    }
    return chain;
}

bool is_unibranch(const PlaneCurveGerm& g) {
    try {
        resolution_chain(g);
        return true;
    } catch (const NotUnibranch&) {
        return false;
    }
}

MultiplicitySequence multiplicity_sequence(const PlaneCurveGerm& g) {
    std::vector<int> e;
    for (const auto& n : resolution_chain(g)) e.push_back(n.multiplicity);
    return MultiplicitySequence(std::move(e));
}

long delta_invariant(const MultiplicitySequence& s) {
    long d = 0;
    for (int m : s.entries) d += static_cast<long>(m) * (m - 1) / 2;
    return d;
}

long delta_invariant(const PlaneCurveGerm& g) { return delta_invariant(multiplicity_sequence(g)); }

int l_index(const MultiplicitySequence& s) {
    for (std::size_t i = 1; i < s.entries.size(); ++i)
        if (s.entries[i] < s.entries[0]) return static_cast<int>(i);
    return 0;
}

std::set<long> fz_admissible_set(const MultiplicitySequence& s) {
    const long m = s.m();
    if (m < 2) throw ValidationError("admissible set needs a singular point (m >= 2)");
    const int l = l_index(s);
    std::set<long> r;
    for (long k = 1; k <= l; ++k) r.insert(k * m);
    r.insert(l * m + s.entries[static_cast<std::size_t>(l)]);
    return r;
}

long delta_lower_bound(long m, long bc) {
    if (m < 1) throw ValidationError("multiplicity must be positive");
    if (bc < m)
        throw ValidationError("intersection " + std::to_string(bc) + " is below the multiplicity " +
                              std::to_string(m));
    const long num = (m - 1) * (bc - 1) + std::gcd(bc, m) - 1;
    // num is even for every parity pattern of (m, bc).
    return num / 2;
}

TriangleReport strong_triangle(const PlaneCurveGerm& a, const PlaneCurveGerm& b, const PlaneCurveGerm& c) {
    const PlaneCurveGerm* g[3] = {&a, &b, &c};
    for (const auto* x : g)
        if (!is_unibranch(*x)) throw NotUnibranch("strong triangle check needs unibranch germs");
    std::vector<Rational> ratios;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            auto in = local_intersection(*g[i], *g[j]);
            if (!in) throw SharedComponent("germs share a component through the point");
            Rational r(*in, static_cast<long>(mult_at(*g[i])) * mult_at(*g[j]));
            r.canonicalize();
            ratios.push_back(r);
        }
    std::sort(ratios.begin(), ratios.end());
    return {ratios, ratios[0] == ratios[1]};
}

bool strong_triangle_check(const PlaneCurveGerm& a, const PlaneCurveGerm& b, const PlaneCurveGerm& c) {
    return strong_triangle(a, b, c).holds;
}

bool mn_point_invariance_check(int m, int n, const PlaneCurveGerm& b) {
    if (!(2 <= m && m < n && n < 2 * m)) throw ValidationError("need 2 <= m < n < 2m");
    if (b.base_x() != 0 || b.base_y() != 0) throw ValidationError("curve must be based at the origin");
    if (mult_at(b) != 1) throw ValidationError("curve is not smooth at the origin");
    if (b.local().coeff(1, 0) != 0 || b.local().coeff(0, 1) == 0)
        throw ValidationError("curve is not tangent to y = 0");
    const BPoly cusp = BPoly::monomial(1, 0, m) - BPoly::monomial(1, n, 0);
    auto in = intersection_at_origin(b.local(), cusp);
    return in && *in == n;
}

}  // namespace hirz
