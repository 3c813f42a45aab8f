#pragma once

#include "lsd/galois_ring.hpp"

// Linear algebra over a Galois ring of precision 1, i.e. the finite field F_{p^k}.
namespace lsd {

using GRVec = std::vector<GRElem>;

// Reduced row echelon form of the given rows; zero rows dropped.
GRMat field_rref(const GaloisRing& F, GRMat rows);
int field_rank(const GaloisRing& F, const GRMat& rows);
// Basis of {x : M x = 0}; M has `cols` columns (needed when M has no rows).
GRMat field_kernel(const GaloisRing& F, const GRMat& M, int cols);
// Basis of the intersection and the sum of two row spaces.
GRMat field_sum(const GaloisRing& F, const GRMat& a, const GRMat& b);
int field_intersection_dim(const GaloisRing& F, const GRMat& a, const GRMat& b);
GRElem field_dot(const GaloisRing& F, const GRVec& x, const GRVec& y);
GRVec field_frob(const GaloisRing& F, const GRVec& v);

}  // namespace lsd
