#pragma once

#include "hirz/picard.hpp"
#include "hirz/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hirz {

// Three component classes on F_e, sorted by alpha+beta then lexicographically.
class ThreeComponentConfig {
public:
    ThreeComponentConfig(SurfaceModel s, std::array<DivisorClass, 3> components);

    const SurfaceModel& surface() const { return surface_; }
    int e() const { return surface_.e; }
    const std::array<DivisorClass, 3>& components() const { return comps_; }
    const DivisorClass& operator[](std::size_t i) const { return comps_[i]; }
    DivisorClass total() const;

private:
    SurfaceModel surface_;
    std::array<DivisorClass, 3> comps_;
};

ThreeComponentConfig make_config(int e, const std::array<std::array<std::int64_t, 2>, 3>& classes);

enum class CaseLabel {
    F0_NoDiagonal,        // no component in |(1,1)|
    F0_OneDiagonal,
    F0_TwoDiagonal,
    F0_ThreeDiagonal,
    Fe_Large,             // e >= 3
    F2_NoC1,
    F2_OneC1,
    F2_TwoC1,
    F2_ThreeC1,
    F1_Effective,         // {B1,B2} not inside |C1|
    F1_Gamma,             // {B1,B2} inside |C1|
};

std::string case_name(CaseLabel c);

enum class BoundKind { Numeric, Symbolic, Referral };
std::string kind_name(BoundKind k);

struct SystemBound {
    std::string system;
    BoundKind kind;
    Integer value;            // meaningful for Numeric
    std::string expression;   // rendering for Symbolic / Referral
};

struct BoundReport {
    CaseLabel case_label;
    std::int64_t n_count;
    std::vector<SystemBound> per_system;
    BoundKind total_kind;
    Integer numeric_part;     // sum of the numeric entries
    std::string total_expression;
    // Bound on each |I_j| when the gamma-dependent branch fires.
    std::optional<Integer> i_set_bound;
    std::string i_set_expression;
    std::vector<std::string> notes;

    bool operator==(const BoundReport& o) const;
};

struct HypSystem {
    std::string system;
    std::string condition;
};

std::int64_t n_count(const ThreeComponentConfig& cfg);
std::vector<HypSystem> classify_hyp_systems(const ThreeComponentConfig& cfg);
BoundReport exceptional_set_bound(const ThreeComponentConfig& cfg, std::optional<Integer> gamma = std::nullopt);
Integer hyp_c1_f1_bound(const ThreeComponentConfig& cfg);

enum class Emptiness { Applies, NotApplicable };
Emptiness emptiness_criterion(const ThreeComponentConfig& cfg);

struct PlaneReferral {
    std::array<std::int64_t, 3> degrees;
    std::int64_t total_degree;
    std::string marker;
};
PlaneReferral f1_beta_zero_referral(const ThreeComponentConfig& cfg);

// floor(log_b(n)) for b >= 2, n >= 1, by repeated multiplication.
std::int64_t floor_log(const Integer& b, const Integer& n);

}  // namespace hirz
