#include "lsd/ff_slopes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lsd {

BundleType::BundleType(std::vector<std::pair<Q, long long>> parts) {
    std::map<Q, long long> merged;
    for (const auto& [slope, mult] : parts) {
        if (mult <= 0) throw std::invalid_argument("multiplicities must be positive");
        merged[slope] += mult;
    }
    for (auto it = merged.rbegin(); it != merged.rend(); ++it) parts_.emplace_back(it->first, it->second);
}

BundleType BundleType::appendix_type(int n, int r) {
    if (r < 1 || 2 * r > n) throw std::invalid_argument("need 1 <= r <= n/2");
    std::vector<std::pair<Q, long long>> parts{{Q(1, r), 1}, {Q(-1, r), 1}};
    if (n > 2 * r) parts.emplace_back(Q(0), n - 2 * r);
    return BundleType(parts);
}

BundleType BundleType::operator+(const BundleType& o) const {
    std::vector<std::pair<Q, long long>> all = parts_;
    all.insert(all.end(), o.parts_.begin(), o.parts_.end());
    return BundleType(all);
}

std::string BundleType::str() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (const auto& [slope, mult] : parts_) {
        if (!out.empty()) out += " + ";
        if (slope == 0) out += "O";
        else if (slope.denominator() == 1) out += "O(" + std::to_string(slope.numerator()) + ")";
        else out += "O(" + q_str(slope) + ")";
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out;
}

std::pair<long long, long long> rank_degree(const BundleType& bt) {
    long long rank = 0, deg = 0;
    for (const auto& [slope, mult] : bt.parts()) {
        rank += slope.denominator() * mult;
        deg += slope.numerator() * mult;
    }
    return {rank, deg};
}

BundleType dual(const BundleType& bt) {
    std::vector<std::pair<Q, long long>> parts;
    for (const auto& [slope, mult] : bt.parts()) parts.emplace_back(-slope, mult);
    return BundleType(parts);
}

bool is_self_dual(const BundleType& bt) { return dual(bt) == bt; }

BundleType hn_step(const BundleType& bt, Q slope, bool strict) {
    std::vector<std::pair<Q, long long>> parts;
    for (const auto& part : bt.parts())
        if (strict ? part.first > slope : part.first >= slope) parts.push_back(part);
    return BundleType(parts);
}

BundleType perp_of_step(const BundleType& bt, Q slope, bool strict) {
    if (!is_self_dual(bt)) throw std::invalid_argument("perp needs a self-dual bundle type");
    return hn_step(bt, -slope, !strict);
}

std::vector<std::pair<long long, Q>> hn_polygon(const BundleType& bt) {
    std::vector<std::pair<long long, Q>> poly{{0, Q(0)}};
    for (const auto& [slope, mult] : bt.parts()) {
        const long long h = slope.denominator() * mult;
        poly.emplace_back(poly.back().first + h, poly.back().second + slope * Q(h));
    }
    return poly;
}

bool polygon_is_concave(const std::vector<std::pair<long long, Q>>& poly) {
    for (size_t i = 2; i < poly.size(); ++i) {
        const Q s1 = (poly[i - 1].second - poly[i - 2].second) / Q(poly[i - 1].first - poly[i - 2].first);
        const Q s2 = (poly[i].second - poly[i - 1].second) / Q(poly[i].first - poly[i - 1].first);
        if (!(s2 < s1)) return false;
    }
    return true;
}

ModificationType::ModificationType(IVec v) : shape(std::move(v)) {
    std::sort(shape.begin(), shape.end(), std::greater<>());
}

long long ModificationType::degree_shift() const {
    long long s = 0;
    for (long long x : shape) s += x;
    return s;
}

std::string ModificationType::str() const {
    std::string out = "(";
    for (size_t i = 0; i < shape.size(); ++i) out += (i ? "," : "") + std::to_string(shape[i]);
    return out + ")";
}

CaseScanReport appendix_case_scan(int n) {
    if (n < 3) throw std::invalid_argument("case scan needs n >= 3");
    CaseScanReport rep;
    rep.n = n;
    for (int r = 1; 2 * r <= n; ++r) {
        EliminatedCase c;
        c.r = r;
        c.type = BundleType::appendix_type(n, r);
        const Q top(1, r);
        const BundleType stable_part = hn_step(c.type, top, false);
        const BundleType its_perp = perp_of_step(c.type, top, false);
        c.stable_part_isotropic = hn_step(its_perp, top, false) == stable_part;
        const long long sub_deg = rank_degree(stable_part).second;
        IVec lower(r, 0), upper(r, 0), zero(r, 0);
        lower[0] = -1;
        upper[r - 1] = 1;
        int allowed = 0;
        long long forced_shift = 0;
        for (const IVec& shape : {lower, upper, zero}) {
            ModificationCheck chk{ModificationType(shape)};
            chk.sub_degree = sub_deg + chk.type.degree_shift();
            chk.allowed = chk.sub_degree <= 0;
            if (chk.allowed) {
                ++allowed;
                forced_shift = chk.type.degree_shift();
            }
            c.checks.push_back(chk);
        }
        if (allowed != 1 || forced_shift != -1 || !c.stable_part_isotropic)
            throw std::logic_error("case r=" + std::to_string(r) + " does not reduce to a rational isotropic sub");
        c.forced_sub = BundleType::trivial(r);
        c.verdict = "contradicts weak admissibility";
        rep.eliminated.push_back(c);
    }
    rep.survivors.push_back(BundleType::trivial(n));
    return rep;
}

}  // namespace lsd
