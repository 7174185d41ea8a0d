#pragma once

#include "hirz/rational.hpp"

#include <cstdint>
#include <string>

namespace hirz {

struct SurfaceModel {
    int e = 0;

    explicit SurfaceModel(int e_ = 0);
    bool operator==(const SurfaceModel&) const = default;
};

// u*C1 + v*f on F_e.
struct DivisorClass {
    SurfaceModel surface;
    std::int64_t u = 0;
    std::int64_t v = 0;

    DivisorClass(SurfaceModel s, std::int64_t u_, std::int64_t v_) : surface(s), u(u_), v(v_) {}

    int e() const { return surface.e; }
    // u*e + v, the degree of the class on C1 (and on a general section).
    std::int64_t c1_degree() const { return u * surface.e + v; }

    bool is_fiber() const { return u == 0 && v == 1; }
    bool is_c0() const { return u == 1 && v == -surface.e; }

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator*(std::int64_t k) const;
    bool operator==(const DivisorClass&) const = default;

    std::string str() const;
};

DivisorClass fiber_class(SurfaceModel s);
DivisorClass c0_class(SurfaceModel s);
DivisorClass c1_class(SurfaceModel s);

std::int64_t intersect(const DivisorClass& a, const DivisorClass& b);
DivisorClass canonical_class(SurfaceModel s);

bool is_effective(const DivisorClass& d);
bool is_ample(const DivisorClass& d);
bool has_integral_member(const DivisorClass& d);
bool is_big(const DivisorClass& d);
bool log_canonical_is_big(SurfaceModel s, const DivisorClass& b);

Integer h0(const DivisorClass& d);
std::int64_t arithmetic_genus(const DivisorClass& d);
Rational volume(const DivisorClass& d);

std::int64_t unibranch_mult_upper_bound(const DivisorClass& d, bool on_c0);

}  // namespace hirz
