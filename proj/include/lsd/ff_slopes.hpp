#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lsd/intlin.hpp"

namespace lsd {

// Isomorphism type of a bundle on the curve: a direct sum of O(slope)^mult.
// Summands are merged and kept in strictly decreasing slope order. The empty type is the zero bundle.
class BundleType {
public:
    BundleType() = default;
    explicit BundleType(std::vector<std::pair<Q, long long>> parts);

    static BundleType stable(Q slope, long long mult = 1) { return BundleType({{slope, mult}}); }
    static BundleType trivial(long long rank) { return BundleType({{Q(0), rank}}); }
    // O(1/r) + O^{n-2r} + O(-1/r)
    static BundleType appendix_type(int n, int r);

    const std::vector<std::pair<Q, long long>>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    bool operator==(const BundleType& o) const { return parts_ == o.parts_; }

    BundleType operator+(const BundleType& o) const;
    std::string str() const;

private:
    std::vector<std::pair<Q, long long>> parts_;
};

std::pair<long long, long long> rank_degree(const BundleType& bt);
BundleType dual(const BundleType& bt);
bool is_self_dual(const BundleType& bt);
// Harder-Narasimhan steps E^{>= slope} (strict = false) and E^{> slope} (strict = true).
BundleType hn_step(const BundleType& bt, Q slope, bool strict);
// Orthogonal of an HN step of a self-dual bundle: (E^{>= s})^perp = E^{> -s} and vice versa.
BundleType perp_of_step(const BundleType& bt, Q slope, bool strict);
// Vertices of the HN polygon, starting at (0, 0).
std::vector<std::pair<long long, Q>> hn_polygon(const BundleType& bt);
bool polygon_is_concave(const std::vector<std::pair<long long, Q>>& poly);

// Relative position of a sub-modification; stored sorted decreasing.
struct ModificationType {
    IVec shape;
    explicit ModificationType(IVec v);
    long long degree_shift() const;
    std::string str() const;
};

struct ModificationCheck {
    ModificationType type;
    long long sub_degree = 0;  // degree of the matching sub of the trivial bundle
    bool allowed = false;      // a sub of a slope-0 semistable bundle has degree <= 0
};

struct EliminatedCase {
    int r = 0;
    BundleType type;
    bool stable_part_isotropic = false;
    std::vector<ModificationCheck> checks;
    BundleType forced_sub;  // rank r, degree 0, hence W (x) O for a rational isotropic W
    std::string verdict;
};

struct CaseScanReport {
    int n = 0;
    std::vector<EliminatedCase> eliminated;
    std::vector<BundleType> survivors;
};

// Runs the case scan over the candidate types for the basic orthogonal datum; n >= 3.
CaseScanReport appendix_case_scan(int n);

}  // namespace lsd
