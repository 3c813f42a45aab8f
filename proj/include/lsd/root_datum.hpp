#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsd/intlin.hpp"

namespace lsd {

enum class Family { GL, SL, PGL, Sp, GSp, SOOdd, SOEvenSplit, SOEvenNonsplit, GSpin };

// Orthogonal flavour for GSpin: odd dimension, or even with split/non-split quasi-split form.
enum class OrthKind { Odd, EvenSplit, EvenNonsplit };

struct FormFlags {
    OrthKind orth = OrthKind::Odd;  // only read for GSpin
};

std::string family_name(Family f);

// Pinned based root datum on X_* = Z^N. Roots and coroots are rows.
struct RootDatum {
    Family family = Family::GL;
    int size = 0;  // n for GL/SL/PGL, m otherwise
    FormFlags flags;
    int N = 0;                      // rank of X_*
    std::vector<IVec> roots;        // simple roots, covectors
    std::vector<IVec> coroots;      // simple coroots, vectors
    IMat phi;                       // Frobenius on X_*
    std::vector<int> phi_perm;      // induced permutation of simple indices
    QVec rho;                       // half-sum of positive roots (covector)
    std::vector<IVec> pos_roots;    // filled by build_root_datum
    std::vector<IVec> pos_coroots;
    IVec two_rho;

    int ns() const { return static_cast<int>(coroots.size()); }
    std::string label() const;
    IMat cartan() const;  // A(i, j) = <alpha_i, alpha_j^vee>
    bool phi_trivial() const;
};

RootDatum build_root_datum(Family f, int size, FormFlags flags = {});

// The orthogonal pair attached to a quadratic space of dimension n + 2.
// det_plus selects det V = (-1)^{n/2} for even n (ignored for odd n).
RootDatum orthogonal_datum(int n, bool det_plus);
RootDatum gspin_datum(int n, bool det_plus);
IVec orthogonal_mu(const RootDatum& rd);  // (1,0,...,0) resp. its spin lift

// Rational coweight with a recorded dominance flag.
struct Coweight {
    QVec v;
    bool dominant = false;
};
Coweight make_coweight(const RootDatum& rd, const QVec& v);
bool is_dominant(const RootDatum& rd, const QVec& v);

// Coefficients of v in the simple coroot basis (nullopt if v is outside their span).
std::optional<QVec> coroot_coefficients(const RootDatum& rd, const QVec& v);
bool dominance_leq(const RootDatum& rd, const QVec& lower, const QVec& upper);
// Rational cone only (Newton points).
bool dominance_leq_q(const RootDatum& rd, const QVec& lower, const QVec& upper);

// Galois average of a coweight.
QVec galois_average(const RootDatum& rd, const QVec& v);

struct WeylElement {
    std::vector<int> word;  // w = s_{word[0]} s_{word[1]} ...
    IMat matrix;            // action on X_*
};

IMat reflection_matrix(const RootDatum& rd, int i);
WeylElement weyl_from_word(const RootDatum& rd, const std::vector<int>& word);
QVec apply(const IMat& w, const QVec& v);
IVec apply(const IMat& w, const IVec& v);

// Positive roots / coroots obtained as Weyl orbits of the simple ones.
std::vector<IVec> positive_roots(const RootDatum& rd);
std::vector<IVec> positive_coroots(const RootDatum& rd);

// Number of positive coroots sent negative.
int inversion_count(const RootDatum& rd, const IMat& w);

struct DominantRep {
    Coweight dom;
    WeylElement w;  // w * nu = dom
};
DominantRep dominant_representative(const RootDatum& rd, const QVec& nu);

// Whole Weyl group as the orbit of a regular integral coweight.
std::vector<IVec> weyl_orbit_regular_serial(const RootDatum& rd);
std::vector<IVec> weyl_orbit_regular(const RootDatum& rd);  // frontier-parallel
long long weyl_order_formula(const RootDatum& rd);

// pi_1 and friends. The group is Z^N modulo the relation columns.
struct AbGroup {
    std::vector<long long> orders;  // 0 means Z
    IMat proj;                      // k x N, ambient -> coordinates
    IMat lift;                      // N x k, coordinates -> ambient
    IVec coords(const IVec& ambient) const;
    IVec reduce(IVec c) const;
    bool is_zero(const IVec& ambient) const;
    std::string describe() const;  // e.g. "Z", "Z/2", "Z x Z/2", "0"
    int free_rank() const;
    long long torsion_size() const;
};
AbGroup quotient_group(int N, const std::vector<IVec>& relations);

struct FinAbGroupWithAction {
    int N = 0;
    std::vector<IVec> relations;  // presentation
    IMat action;                  // ambient automorphism preserving the relation lattice

    AbGroup group() const;
    AbGroup coinvariants() const;
    // Generators (ambient) of the fixed subgroup together with its structure.
    struct Fixed {
        AbGroup structure;
        std::vector<IVec> generators;
    };
    Fixed invariants() const;
    bool action_well_defined() const;
    int action_order() const;
};

FinAbGroupWithAction pi1(const RootDatum& rd);
// pi_1 of the standard Levi with simple roots J (bitmask).
FinAbGroupWithAction pi1_levi(const RootDatum& rd, unsigned J);

// Is the map f : X_*(src) -> X_*(dst) surjective on Gamma-invariants of pi_1?
bool surjective_on_invariants(const FinAbGroupWithAction& src, const FinAbGroupWithAction& dst, const IMat& f);

struct SerreType {
    std::vector<std::string> components;  // e.g. {"A4"}, {"A1","A1"}
    bool abelian_eligible = false;
};
SerreType classify_serre_type(const RootDatum& rd);

}  // namespace lsd
