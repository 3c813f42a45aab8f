#pragma once

#include <array>
#include <stdexcept>
#include <vector>

namespace lsd {

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polynomials over F_p, low degree first.
using FpPoly = std::vector<long long>;
bool is_irreducible_mod_p(const FpPoly& f, long long p);
// Lexicographically first monic irreducible polynomial of degree k.
FpPoly first_irreducible(long long p, int k);

// W_m(F_{p^k}) = (Z/p^m)[x]/(f) with f monic and irreducible mod p.
class GaloisRing {
public:
    static constexpr int kMaxDeg = 24;
    using Elem = std::array<long long, kMaxDeg>;

    GaloisRing(long long p, int k, int m);

    long long p() const { return p_; }
    int k() const { return k_; }
    int m() const { return m_; }
    long long modulus() const { return q_; }
    const FpPoly& defining_poly() const { return f_; }

    Elem zero() const { return Elem{}; }
    Elem one() const { return from_int(1); }
    Elem from_int(long long v) const;
    Elem gen() const;  // the class of x
    Elem from_coeffs(const std::vector<long long>& c) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(const Elem& a, long long s) const;
    Elem pow(Elem a, unsigned long long e) const;
    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    // p-adic valuation; m for zero.
    int valuation(const Elem& a) const;
    bool is_unit(const Elem& a) const { return valuation(a) == 0; }
    Elem inverse(const Elem& a) const;  // throws std::domain_error on non-units
    Elem div_p_pow(const Elem& a, int v) const;  // exact division by p^v
    Elem p_pow(int v) const;
    // Coefficients reduced mod p^e.
    Elem truncate(const Elem& a, int e) const;

    Elem frob(const Elem& a) const;
    Elem frob_pow(Elem a, int r) const;

    // All elements of the ring mod p^e (p^{e k} of them); intended for small rings.
    std::vector<Elem> residues(int e) const;

private:
    long long p_;
    int k_, m_;
    long long q_;
    FpPoly f_;
    std::vector<Elem> frob_powers_;  // sigma(x)^i, i < k

    long long mulmod(long long a, long long b) const;
    long long norm(long long a) const {
        a %= q_;
        return a < 0 ? a + q_ : a;
    }
};

using GRElem = GaloisRing::Elem;
using GRMat = std::vector<std::vector<GRElem>>;

GRMat gr_identity(const GaloisRing& R, int n);
GRMat gr_mul(const GaloisRing& R, const GRMat& A, const GRMat& B);
GRMat gr_frob(const GaloisRing& R, const GRMat& A);

// U * M * V = diag(p^{e_1}, ..., p^{e_n}) with e weakly decreasing.
struct GRSmith {
    std::vector<int> exps;
    GRMat U, V;
};
// Throws PrecisionError when a pivot has valuation >= m - guard.
GRSmith gr_smith(const GaloisRing& R, GRMat M, int guard = 0, bool track = true);

}  // namespace lsd
