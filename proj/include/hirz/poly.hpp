#pragma once

#include "hirz/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hirz {

// Dense univariate polynomial over Q, coefficients from degree 0 upward.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    UPoly(const Rational& c);  // NOLINT: constant polynomial
    static UPoly monomial(const Rational& c, int deg);
    static UPoly x() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& lead() const { return c_.back(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    // Lowest exponent with a nonzero coefficient; -1 for zero.
    int valuation() const;

    Rational operator()(const Rational& t) const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator-() const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Rational& k) const;
    UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
    UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    UPoly pow(int k) const;
    UPoly derivative() const;
    UPoly monic() const;
    // p(t + a)
    UPoly shift(const Rational& a) const;
    // p(q(t))
    UPoly compose(const UPoly& q) const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Throws std::logic_error when b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0,0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);
// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const UPoly& p);
// Number of distinct roots over the algebraic closure.
int distinct_root_count(const UPoly& p);
// Newton interpolation through (xs[i], ys[i]); xs distinct.
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);
Rational resultant(const UPoly& a, const UPoly& b);

// Binary form of a given degree, stored as its dehomogenization p(z) = F(1, z).
// Missing degree is a root at the point z = infinity, i.e. (0:1).
struct BinaryForm {
    int degree = 0;
    UPoly p;

    bool is_zero() const { return p.is_zero(); }
    int infinity_multiplicity() const { return is_zero() ? 0 : degree - p.degree(); }
    int distinct_root_count() const;
    BinaryForm operator*(const BinaryForm& o) const { return {degree + o.degree, p * o.p}; }
};

// Common roots of two binary forms as a binary form (gcd), up to a constant.
BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);

// Sparse bivariate polynomial over Q; keys are (deg_x, deg_y).
class BPoly {
public:
    using Exp = std::pair<int, int>;
    using Terms = std::map<Exp, Rational>;

    BPoly() = default;
    explicit BPoly(Terms t);
    BPoly(const Rational& c);  // NOLINT
    static BPoly x();
    static BPoly y();
    static BPoly monomial(const Rational& c, int a, int b);

    bool is_zero() const { return t_.empty(); }
    const Terms& terms() const { return t_; }
    Rational coeff(int a, int b) const;
    int total_degree() const;
    // Lowest total degree; -1 for zero.
    int order() const;
    int degree_x() const;
    int degree_y() const;
    BPoly homogeneous_part(int d) const;

    Rational operator()(const Rational& x, const Rational& y) const;

    BPoly operator+(const BPoly& o) const;
    BPoly operator-(const BPoly& o) const;
    BPoly operator-() const;
    BPoly operator*(const BPoly& o) const;
    BPoly operator*(const Rational& k) const;
    bool operator==(const BPoly& o) const { return t_ == o.t_; }
    BPoly& operator+=(const BPoly& o) { return *this = *this + o; }
    BPoly& operator-=(const BPoly& o) { return *this = *this - o; }

    BPoly pow(int k) const;
    BPoly dx() const;
    BPoly dy() const;
    BPoly translate(const Rational& a, const Rational& b) const;  // f(x + a, y + b)
    BPoly mul_monomial(int a, int b) const;
    // Divide by x^a y^b; throws std::logic_error if a term is not divisible.
    BPoly div_monomial(int a, int b) const;
    // f(x, x*y) and f(x*y, y).
    BPoly blowup_x_chart() const;
    BPoly blowup_y_chart() const;

    UPoly at_y(const Rational& y0) const;  // f(x, y0) in x
    UPoly at_x(const Rational& x0) const;  // f(x0, y) in y
    // Coefficients of powers of y, each a polynomial in x.
    std::vector<UPoly> as_poly_in_y() const;
    static BPoly from_poly_in_y(const std::vector<UPoly>& cs);

    std::string str() const;

private:
    Terms t_;
};

// Gcd over Q[x,y], normalized so that the leading term (max y-degree, then max
// x-degree) has coefficient 1.
BPoly gcd(const BPoly& a, const BPoly& b);
BPoly exact_div(const BPoly& a, const BPoly& b);
bool is_squarefree(const BPoly& f);
// res_y(f, g) as a polynomial in x, by evaluation and interpolation.
UPoly resultant_y(const BPoly& f, const BPoly& g);

}  // namespace hirz
