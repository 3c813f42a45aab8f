#include "lsd/special_lattice.hpp"

#include <random>
#include <stdexcept>

namespace lsd {

namespace {

long long mod(long long a, long long p) { return ((a % p) + p) % p; }

GRMat to_field(const GaloisRing& F, const IMat& A) {
    GRMat M(A.r, GRVec(A.c, F.zero()));
    for (int i = 0; i < A.r; ++i)
        for (int j = 0; j < A.c; ++j) M[i][j] = F.from_int(A(i, j));
    return M;
}

GRVec times_gram(const GaloisRing& F, const GRMat& G, const GRVec& v) {
    GRVec out(G.size(), F.zero());
    for (size_t i = 0; i < G.size(); ++i) out[i] = field_dot(F, G[i], v);
    return out;
}

GRMat frob_rows(const GaloisRing& F, const GRMat& rows) {
    GRMat out;
    for (const GRVec& r : rows) out.push_back(field_frob(F, r));
    return out;
}

GRMat invert(const GaloisRing& F, const GRMat& A) {
    const int n = static_cast<int>(A.size());
    GRMat aug(n, GRVec(2 * n, F.zero()));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = A[i][j];
        aug[i][n + i] = F.one();
    }
    GRMat E = field_rref(F, aug);
    if (static_cast<int>(E.size()) < n || F.is_zero(E[n - 1][n - 1])) throw std::invalid_argument("matrix is singular mod p");
    GRMat inv(n, GRVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = E[i][n + j];
    return inv;
}

// F_p-dimension of W intersected with the rational points F_p^n.
int rational_dim(const GaloisRing& F, const GRMat& W, int n) {
    const GRMat ann = field_kernel(F, W, n);
    const GaloisRing Fp(F.p(), 1, 1);
    GRMat eqs;
    for (const GRVec& a : ann)
        for (int t = 0; t < F.k(); ++t) {
            GRVec row(n, Fp.zero());
            for (int j = 0; j < n; ++j) row[j] = Fp.from_int(a[j][t]);
            eqs.push_back(row);
        }
    return n - field_rank(Fp, eqs);
}

}  // namespace

ChainResult special_lattice_chain(const SpecialLattice& L, int max_d) {
    if (L.p % 2 == 0) throw std::invalid_argument("special lattices are modelled for odd p");
    const int n = L.gram.r;
    if (n == 0 || L.gram.c != n || n % 2 != 0) throw std::invalid_argument("need an even-dimensional quadratic space");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (mod(L.gram(i, j) - L.gram(j, i), L.p) != 0) throw std::invalid_argument("Gram matrix is not symmetric");
    const GaloisRing F(L.p, L.k, 1);
    const GRMat G = to_field(F, L.gram);
    if (field_rank(F, G) != n) throw std::invalid_argument("quadratic form is degenerate mod p");
    for (const GRVec& row : L.basis)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("basis vector has wrong length");

    GRMat U = field_rref(F, L.basis);
    if (static_cast<int>(U.size()) != n / 2) throw std::invalid_argument("U is not of half dimension");
    for (const GRVec& u : U)
        for (const GRVec& v : U)
            if (!F.is_zero(field_dot(F, u, times_gram(F, G, v)))) throw std::invalid_argument("U is not isotropic");
    if (field_sum(F, U, frob_rows(F, U)).size() != U.size() + 1)
        throw std::invalid_argument("(U + Phi U)/U is not one-dimensional");

    if (max_d <= 0) max_d = n / 2;
    ChainResult res;
    res.dims.push_back(static_cast<int>(U.size()));
    GRMat cur = U;
    for (;;) {
        GRMat next = field_sum(F, cur, frob_rows(F, cur));
        if (next.size() == cur.size()) break;
        if (next.size() != cur.size() + 1) throw std::logic_error("chain step grew by more than one");
        cur = std::move(next);
        res.dims.push_back(static_cast<int>(cur.size()));
        ++res.d;
        if (res.d > max_d) throw std::runtime_error("chain did not stabilize within the allowed number of steps");
    }
    res.type = 2 * res.d;
    if (2 * static_cast<int>(cur.size()) - n != res.type) throw std::logic_error("hull dimension disagrees with the type");
    res.fixed_dim = rational_dim(F, cur, n);
    GRMat perp_eqs;
    for (const GRVec& w : cur) perp_eqs.push_back(times_gram(F, G, w));
    const GRMat perp = field_kernel(F, perp_eqs, n);
    res.self_orthogonal_hull = field_sum(F, cur, perp).size() == cur.size();
    return res;
}

SpecialLattice standard_special_lattice(long long p, int half, int hyperbolic) {
    if (half < 1 || hyperbolic < 0) throw std::invalid_argument("need half >= 1 and hyperbolic >= 0");
    if (2 * half > GaloisRing::kMaxDeg) throw ResourceError("residue degree too large");
    SpecialLattice L;
    L.p = p;
    L.k = 2 * half;
    const GaloisRing F(p, L.k, 1);
    const int nn = 2 * half;
    const int n = nn + 2 * hyperbolic;
    std::vector<GRElem> e;
    for (int j = 0; j < nn; ++j) e.push_back(F.pow(F.gen(), j));
    auto trace = [&](const GRElem& y) {
        GRElem acc = F.zero();
        for (int i = 0; i < L.k; ++i) acc = F.add(acc, F.frob_pow(y, i));
        return acc;
    };
    L.gram = IMat(n, n);
    for (int j = 0; j < nn; ++j)
        for (int l = 0; l < nn; ++l) L.gram(j, l) = trace(F.mul(e[j], F.frob_pow(e[l], half)))[0];
    for (int i = 0; i < hyperbolic; ++i) {
        L.gram(nn + i, nn + hyperbolic + i) = 1;
        L.gram(nn + hyperbolic + i, nn + i) = 1;
    }
    // U on the nonsplit block: common kernel of v -> sum_j sigma^i(e_j) v_j, i in [half, 2 half)
    GRMat funcs;
    for (int i = half; i < nn; ++i) {
        GRVec row;
        for (int j = 0; j < nn; ++j) row.push_back(F.frob_pow(e[j], i));
        funcs.push_back(row);
    }
    for (const GRVec& v : field_kernel(F, funcs, nn)) {
        GRVec full(n, F.zero());
        std::copy(v.begin(), v.end(), full.begin());
        L.basis.push_back(full);
    }
    for (int i = 0; i < hyperbolic; ++i) {
        GRVec full(n, F.zero());
        full[nn + i] = F.one();
        L.basis.push_back(full);
    }
    return L;
}

SpecialLattice change_basis(const SpecialLattice& L, const IMat& P) {
    const int n = L.gram.r;
    if (P.r != n || P.c != n) throw std::invalid_argument("basis change has wrong shape");
    SpecialLattice out = L;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long acc = 0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) acc = mod(acc + mod(P(a, i) * L.gram(a, b), L.p) * P(b, j), L.p);
            out.gram(i, j) = acc;
        }
    const GaloisRing F(L.p, L.k, 1);
    const GRMat Pinv = invert(F, to_field(F, P));
    out.basis.clear();
    for (const GRVec& v : L.basis) out.basis.push_back(times_gram(F, Pinv, v));
    return out;
}

IMat random_invertible_mod_p(long long p, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> dist(0, p - 1);
    const GaloisRing Fp(p, 1, 1);
    for (;;) {
        IMat P(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) P(i, j) = dist(rng);
        if (field_rank(Fp, to_field(Fp, P)) == n) return P;
    }
}

}  // namespace lsd
