#include "hirz/picard.hpp"

#include "hirz/errors.hpp"

#include <algorithm>

namespace hirz {

SurfaceModel::SurfaceModel(int e_) : e(e_) {
    if (e_ < 0) throw ValidationError("Hirzebruch index e must be non-negative, got " + std::to_string(e_));
}

static void require_same(const DivisorClass& a, const DivisorClass& b) {
    if (!(a.surface == b.surface))
        throw SurfaceMismatch("classes live on F_" + std::to_string(a.e()) + " and F_" + std::to_string(b.e()));
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    require_same(*this, o);
    return {surface, u + o.u, v + o.v};
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    require_same(*this, o);
    return {surface, u - o.u, v - o.v};
}

DivisorClass DivisorClass::operator*(std::int64_t k) const { return {surface, u * k, v * k}; }

std::string DivisorClass::str() const { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

DivisorClass fiber_class(SurfaceModel s) { return {s, 0, 1}; }
DivisorClass c0_class(SurfaceModel s) { return {s, 1, -s.e}; }
DivisorClass c1_class(SurfaceModel s) { return {s, 1, 0}; }

std::int64_t intersect(const DivisorClass& a, const DivisorClass& b) {
    require_same(a, b);
    return a.u * b.u * a.e() + a.u * b.v + a.v * b.u;
}

DivisorClass canonical_class(SurfaceModel s) { return {s, -2, s.e - 2}; }

bool is_effective(const DivisorClass& d) { return d.u >= 0 && d.c1_degree() >= 0; }

bool is_ample(const DivisorClass& d) { return d.u > 0 && d.v > 0; }

bool has_integral_member(const DivisorClass& d) {
    if (d.u == 0 && d.v == 1) return true;
    if (d.u == 1 && d.v == -d.e()) return true;
    return d.u > 0 && d.v >= 0;
}

bool is_big(const DivisorClass& d) { return d.u > 0 && d.c1_degree() > 0; }

bool log_canonical_is_big(SurfaceModel s, const DivisorClass& b) {
    return is_big(canonical_class(s) + b);
}

Integer h0(const DivisorClass& d) {
    if (!is_effective(d)) return 0;
    const std::int64_t e = d.e();
    if (e == 0) return Integer(d.u + 1) * Integer(d.v + 1);
    const std::int64_t top = d.c1_degree();
    const std::int64_t imax = std::min<std::int64_t>(d.u, top / e);
    // sum_{i=0}^{imax} (top - i*e + 1), closed form of an arithmetic series
    Integer n = imax + 1;
    return n * Integer(top + 1) - Integer(e) * Integer(imax) * n / 2;
}

std::int64_t arithmetic_genus(const DivisorClass& d) {
    if (!has_integral_member(d))
        throw NoIntegralMember("class " + d.str() + " on F_" + std::to_string(d.e()) + " has no integral member");
    // (u-1)(eu+2v-2) is always even: if u is even then eu+2v-2 is even.
    return (d.u - 1) * (d.e() * d.u + 2 * d.v - 2) / 2;
}

Rational volume(const DivisorClass& d) {
    const std::int64_t e = d.e();
    if (e == 0) {
        if (d.u > 0 && d.v > 0) return Rational(2 * d.u * d.v);
        return 0;
    }
    if (d.u <= 0) return 0;
    if (d.v >= 0) return Rational(Integer(2 * d.u) * d.v + Integer(e) * d.u * d.u);
    const std::int64_t top = d.c1_degree();
    if (top < 0) return 0;
    Rational r(Integer(top) * top, Integer(e));
    r.canonicalize();
    return r;
}

std::int64_t unibranch_mult_upper_bound(const DivisorClass& d, bool on_c0) {
    if (!has_integral_member(d))
        throw NoIntegralMember("class " + d.str() + " has no integral member");
    if (d.is_fiber()) throw ValidationError("fiber class has only smooth members; no bound to report");
    if (d.e() > 0 && d.is_c0()) throw ValidationError("C0 is a single smooth curve; no bound to report");
    if (d.e() == 0) return std::min(d.u, d.v);
    if (d.e() == 1 && d.v == 0 && d.u >= 2) return d.u - 1;
    return on_c0 ? std::min(d.u, d.v) : d.u;
}

}  // namespace hirz
