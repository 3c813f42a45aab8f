#pragma once

#include <cstdint>
#include <vector>

#include "lsd/field_linalg.hpp"
#include "lsd/intlin.hpp"

namespace lsd {

// Residue-level model: a quadratic space Omega_0 over F_p with Gram matrix `gram`
// (entries mod p), Omega = Omega_0 (x) F_{p^k}, and Phi = id (x) sigma acting
// coordinate-wise in the rational basis. The lattice is recorded by its image U in Omega.
struct SpecialLattice {
    long long p = 3;
    int k = 2;
    IMat gram;
    GRMat basis;  // rows spanning U
};

struct ChainResult {
    int d = 0;                      // stabilization index
    int type = 0;                   // t = 2d
    std::vector<int> dims;          // dim U^(0), ..., dim U^(d)
    int fixed_dim = 0;              // F_p-dimension of the Phi-fixed part of U^(d)
    bool self_orthogonal_hull = false;  // (U^(d))^perp inside U^(d)
};

// Checks the special-lattice conditions, then walks U^(r) = U + Phi U + ... + Phi^r U.
// Throws std::invalid_argument on invalid input and std::runtime_error if the chain
// has not stabilized within `max_d` steps (0 means dim Omega / 2).
ChainResult special_lattice_chain(const SpecialLattice& L, int max_d = 0);

// Nonsplit block of dimension 2*half (F_{p^{2 half}} with form Tr(x sigma^half(y)))
// plus `hyperbolic` hyperbolic planes; U is a Lagrangian whose chain stabilizes at d = half.
SpecialLattice standard_special_lattice(long long p, int half, int hyperbolic);

// Same space in a new rational basis: coordinates x = P x'.
SpecialLattice change_basis(const SpecialLattice& L, const IMat& P);

// Random invertible matrix over F_p (entries in [0, p)).
IMat random_invertible_mod_p(long long p, int n, std::uint64_t seed);

}  // namespace lsd
