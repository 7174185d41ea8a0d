#pragma once

#include "hirz/bound.hpp"
#include "hirz/picard.hpp"
#include "hirz/poly.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hirz {

// A point of F_e in coordinates (t0:t1 ; s0:s1), where (t, s0, s1) and
// (l*t, l^-e * m * s0, m * s1) are identified. Stored normalized.
struct CoxPoint {
    Rational t0, t1, s0, s1;

    static CoxPoint make(int e, Rational t0, Rational t1, Rational s0, Rational s1);
    bool operator==(const CoxPoint&) const = default;
    bool operator<(const CoxPoint& o) const;
    std::string str() const;
};

// A form of class (u,v): sum of c * t0^a0 t1^a1 s0^i s1^(u-i) with a0 + a1 = v + i*e.
// Keys are (i, a1); a0 is implied.
class CoxForm {
public:
    using Key = std::pair<int, int>;

    CoxForm(DivisorClass cls, std::map<Key, Rational> terms);
    // From exponent tuples (a0, a1, i, j); validates them against the class.
    static CoxForm from_exponents(DivisorClass cls, const std::vector<std::pair<std::array<int, 4>, Rational>>& terms);

    const DivisorClass& cls() const { return cls_; }
    int e() const { return cls_.e(); }
    const std::map<Key, Rational>& terms() const { return terms_; }
    int a0(const Key& k) const { return static_cast<int>(cls_.v) + k.first * e() - k.second; }
    std::array<int, 4> exponents(const Key& k) const;
    bool is_zero() const { return terms_.empty(); }

    Rational eval(const CoxPoint& p) const;
    // Affine chart t_a = 1, s_b = 1 with x = t_{1-a}, y = s_{1-b}.
    BPoly chart(int a, int b) const;
    // Restriction to the fiber through (t0, t1), as a binary form in (s1, s0).
    BinaryForm restrict_fiber(const Rational& t0, const Rational& t1) const;
    // Restriction along t -> (t, P(t), -Q(t)), where P, Q are binary forms of
    // degrees k and k+e, as a binary form in (t0, t1).
    BinaryForm restrict_section(const BinaryForm& P, const BinaryForm& Q) const;

    // Scaled so the first coefficient is 1.
    CoxForm normalized() const;
    bool operator==(const CoxForm& o) const { return cls_ == o.cls_ && terms_ == o.terms_; }
    std::string str() const;

private:
    DivisorClass cls_;
    std::map<Key, Rational> terms_;
};

// Basis monomials of a class (one per key).
std::vector<CoxForm::Key> cox_basis(const DivisorClass& cls);

// Local equation of a form at a point, recentred to the origin of the chart
// that contains it.
BPoly local_equation(const CoxForm& f, const CoxPoint& p);

struct ExplicitCurve {
    CoxForm form;
    explicit ExplicitCurve(CoxForm f);
    const DivisorClass& cls() const { return form.cls(); }
};

struct LabeledPoint {
    CoxPoint point;
    int i, j;  // component indices, i < j
};

class ExplicitConfig {
public:
    ExplicitConfig(SurfaceModel s, std::array<ExplicitCurve, 3> components);

    const SurfaceModel& surface() const { return surface_; }
    int e() const { return surface_.e; }
    const std::array<ExplicitCurve, 3>& components() const { return comps_; }
    const std::vector<LabeledPoint>& N() const { return n_; }
    ThreeComponentConfig numeric() const;

private:
    SurfaceModel surface_;
    std::array<ExplicitCurve, 3> comps_;
    std::vector<LabeledPoint> n_;
};

// Located points of a cap b with transversality checked at each; throws
// SharedComponent, TangentialContact or IrrationalIntersectionPoint.
std::vector<CoxPoint> intersection_points(const CoxForm& a, const CoxForm& b);
std::vector<LabeledPoint> compute_N(const ExplicitConfig& cfg);

struct HypVerdict {
    int count = 0;                 // #(D cap B) over the algebraic closure
    bool hyper_bitangent = false;  // count <= 2
    std::vector<CoxPoint> witnesses;  // the rational points of D cap B
};

// Restriction of `b` to the smooth rational curve `d` (a fiber or a section).
BinaryForm restrict_to(const CoxForm& b, const CoxForm& d);
HypVerdict is_hyper_bitangent(const CoxForm& d, const ExplicitConfig& cfg);

struct Candidate {
    CoxForm curve;
    std::string system;  // "C0", "f", "C1", "(1,0)", "(0,1)", "(1,1)"
    std::string origin;  // how it was produced
};

std::vector<Candidate> enumerate_candidates(const ExplicitConfig& cfg);

struct CandidateVerdict {
    Candidate candidate;
    HypVerdict verdict;
    bool skipped = false;  // coincides with a component of B
};

struct VerifyRecord {
    std::vector<CandidateVerdict> verdicts;
    std::vector<Candidate> found;  // distinct hyper-bitangent curves
    BoundReport report;
    Integer covered_bound;         // numeric bound over the enumerated systems
    std::size_t n_points = 0;
    bool within_bound = true;
};

VerifyRecord verify_bound(const ExplicitConfig& cfg);

}  // namespace hirz
