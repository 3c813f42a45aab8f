#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsd/root_datum.hpp"

namespace lsd {

// A class [b] in B(G), recorded by Newton point and Kottwitz point.
struct SigmaConjClass {
    QVec nu;             // dominant, Frobenius-invariant
    IVec kappa;          // coordinates in pi_1(G)_Gamma
    bool basic = false;
    unsigned levi = 0;   // simple roots of the centralizer Levi M_nu
    IVec rep;            // x in X_* whose class in pi_1(M_nu)_Gamma is kappa_M(b)
};

struct BGMu {
    IVec mu;
    QVec mu_bar;
    AbGroup coinv;                       // pi_1(G)_Gamma
    IVec mu_sharp;                       // coordinates of mu in coinv
    std::vector<SigmaConjClass> classes; // most ordinary first, basic last
    int basic_index() const;
};

// Candidate box is split over Levi subsets; the serial version is the reference.
BGMu enumerate_bgmu(const RootDatum& rd, const IVec& mu);
BGMu enumerate_bgmu_serial(const RootDatum& rd, const IVec& mu);

// Closure order on B(G, mu): dominance of Newton points at equal kappa.
bool class_leq(const RootDatum& rd, const SigmaConjClass& a, const SigmaConjClass& b);

struct DatumFlags {
    bool minuscule = false;
    bool hodge_type = false;
    bool abelian_type = false;
    std::string reason;
};
struct LocalDatum {
    const RootDatum* rd = nullptr;
    IVec mu;
    SigmaConjClass b;
    DatumFlags flags;
};
// Throws std::invalid_argument when b is not in B(G, mu).
LocalDatum validate_datum(const RootDatum& rd, const IVec& mu, const SigmaConjClass& b);
bool is_minuscule(const RootDatum& rd, const IVec& mu);

struct DefectTableIncomplete : std::runtime_error {
    using std::runtime_error::runtime_error;
};
int qp_rank(const RootDatum& rd);
int jb_rank(const RootDatum& rd, const SigmaConjClass& b);
int defect(const RootDatum& rd, const SigmaConjClass& b);

// <rho, mu - nu> - defect/2; throws std::logic_error unless it is a non-negative integer.
long long rz_dimension(const RootDatum& rd, const IVec& mu, const SigmaConjClass& b);

struct HNResult {
    bool decomposable = true;
    // witness Levi (bitmask of simple roots) per class; nullopt for basic or failing classes
    std::vector<std::optional<unsigned>> witness;
    std::vector<int> failing;  // indices of non-basic classes without a witness
};
HNResult fully_hn_decomposable(const RootDatum& rd, const IVec& mu, const BGMu& table);
HNResult fully_hn_decomposable(const RootDatum& rd, const IVec& mu);
// kappa_M(b) == mu^sharp in pi_1(M)_Gamma, recomputed from the Levi's own pi_1.
bool hn_condition_holds(const RootDatum& rd, const IVec& mu, const SigmaConjClass& b, unsigned M);

// Solve (1 - phi) c = target in the group (ambient representatives); canonical
// representative modulo pi_1^Gamma, searched in a small box.
std::optional<IVec> solve_coboundary(const FinAbGroupWithAction& g, const IVec& target, int box = 3);
// c_{b,mu} with omega(b) taken to be the class of the stored representative.
std::optional<IVec> cbmu(const RootDatum& rd, const IVec& mu, const SigmaConjClass& b);

}  // namespace lsd
