#pragma once

#include "hirz/poly.hpp"
#include "hirz/rational.hpp"

#include <optional>
#include <set>
#include <vector>

namespace hirz {

// A reduced plane curve germ, stored translated so the base point is the origin.
class PlaneCurveGerm {
public:
    PlaneCurveGerm(const BPoly& poly, Rational bx = 0, Rational by = 0);

    // Equation after translating the base point to the origin.
    const BPoly& local() const { return local_; }
    const Rational& base_x() const { return bx_; }
    const Rational& base_y() const { return by_; }

private:
    BPoly local_;
    Rational bx_, by_;
};

struct MultiplicitySequence {
    std::vector<int> entries;

    explicit MultiplicitySequence(std::vector<int> e);
    int m() const { return entries.front(); }
    bool operator==(const MultiplicitySequence&) const = default;
};

struct ResolutionNode {
    BPoly strict_transform;  // local equation at the tracked point, origin-centred
    Rational px, py;         // tracked point in the chart before recentring
    int multiplicity;
    bool x_chart;            // chart used to reach this node (false for the root)
};

// Finite intersection number, or nullopt for a shared component.
using IntersectionNumber = std::optional<long>;

int mult_at(const PlaneCurveGerm& g);
IntersectionNumber local_intersection(const PlaneCurveGerm& a, const PlaneCurveGerm& b);
// Fulton's algorithm on two polynomials at the origin.
IntersectionNumber intersection_at_origin(BPoly f, BPoly g);

std::vector<ResolutionNode> resolution_chain(const PlaneCurveGerm& g);
bool is_unibranch(const PlaneCurveGerm& g);
MultiplicitySequence multiplicity_sequence(const PlaneCurveGerm& g);
long delta_invariant(const PlaneCurveGerm& g);
long delta_invariant(const MultiplicitySequence& s);

int l_index(const MultiplicitySequence& s);
std::set<long> fz_admissible_set(const MultiplicitySequence& s);
long delta_lower_bound(long m, long bc);

struct TriangleReport {
    std::vector<Rational> ratios;  // sorted ascending
    bool holds;
};
TriangleReport strong_triangle(const PlaneCurveGerm& a, const PlaneCurveGerm& b, const PlaneCurveGerm& c);
bool strong_triangle_check(const PlaneCurveGerm& a, const PlaneCurveGerm& b, const PlaneCurveGerm& c);
bool mn_point_invariance_check(int m, int n, const PlaneCurveGerm& b);

}  // namespace hirz
