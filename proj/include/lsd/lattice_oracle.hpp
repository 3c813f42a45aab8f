#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsd/galois_ring.hpp"
#include "lsd/intlin.hpp"

namespace lsd {

// b = p^{-shift} * B with B an integral matrix.
struct BRep {
    IMat B;
    int shift = 0;
    std::string name;
};

// One isoclinic block: slope degree/height in lowest terms, repeated `copies` times.
struct SlopeBlock {
    int height = 1;
    int degree = 0;
    int copies = 1;
};
// Block-diagonal companion representative: b e_i = p^{eps_i} e_{i+1} inside each block,
// with eps_i = floor((i+1)d/h) - floor(i d/h).
BRep christoffel_rep(long long p, const std::vector<SlopeBlock>& blocks);
// Newton point of the representative above (decreasing).
QVec newton_of_blocks(const std::vector<SlopeBlock>& blocks);

enum class AdlvVariant { Exact, Closure };

struct AdlvParams {
    long long p = 3;
    int k = 1;       // residue degree of the unramified extension
    int n = 2;
    int window = 1;  // lattices between p^a L0 and p^{-a} L0
    IVec mu;         // decreasing
    BRep b;
    AdlvVariant variant = AdlvVariant::Exact;
};

struct AdlvPoint {
    std::vector<int> diag;      // exponents f_j of the p^a-scaled Hermite form
    std::vector<GRElem> upper;  // entries above the diagonal, row-major
    std::vector<int> inv;       // relative position of (M, b sigma(M))
    long long omega = 0;        // valuation of det, i.e. the Kottwitz map to Z
};

struct AdlvResult {
    int precision = 0;
    long long candidates = 0;
    std::vector<AdlvPoint> points;  // canonical order
    std::map<long long, long long> omega_histogram;
    bool touches_window = false;  // some point has an extreme diagonal exponent
};

// Working precision for the parameters; throws ResourceError beyond 2^62.
int adlv_precision(const AdlvParams& prm);
AdlvResult enumerate_adlv_serial(const AdlvParams& prm);
AdlvResult enumerate_adlv(const AdlvParams& prm);  // OpenMP over a flattened candidate index

// Scaled Hermite form of a point as a matrix over the ring.
GRMat point_matrix(const GaloisRing& R, int n, const AdlvPoint& pt);
// Relative position of two lattices given by their scaled Hermite forms.
std::vector<int> relative_position(const GaloisRing& R, const GRMat& A, const GRMat& B);

// Homothety-class report for the GL -> PGL square.
struct CartesianReport {
    bool torsor_fibers = true;
    bool omega_equivariant = true;
    bool commutes_mod_n = true;
    bool unique_lifts = true;
    bool surjective = true;  // every independently computed PGL point has a preimage
    long long gl_points = 0, pgl_points = 0;
    std::vector<std::string> problems;
    bool ok() const { return torsor_fibers && omega_equivariant && commutes_mod_n && unique_lifts && surjective; }
};
// omega_sign = -1 runs the negated-omega control.
CartesianReport check_cartesian_gl_pgl(const AdlvParams& prm, int omega_sign = 1);

// Connected clusters under adjacency Inv(M, M') = (1, 0, ..., 0, -1).
std::vector<std::vector<int>> adjacency_clusters(const AdlvParams& prm, const AdlvResult& res);

// Apply an element g of J_b (integral, given over Z) to every point; returns pairs
// (index, index of g M) for points whose image stays in the window.
std::vector<std::pair<int, int>> act_on_points(const AdlvParams& prm, const AdlvResult& res, const IMat& g);

}  // namespace lsd
