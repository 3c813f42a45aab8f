#include "lsd/galois_ring.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace lsd {

namespace {

long long md(long long a, long long p) {
    a %= p;
    return a < 0 ? a + p : a;
}

void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long long inv_mod_p(long long a, long long p) {
    long long r = 1, e = p - 2;
    a = md(a, p);
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

FpPoly poly_mod(FpPoly a, const FpPoly& f, long long p) {
    trim(a);
    const int df = static_cast<int>(f.size()) - 1;
    const long long lead_inv = inv_mod_p(f.back(), p);
    while (static_cast<int>(a.size()) - 1 >= df && !a.empty()) {
        const int da = static_cast<int>(a.size()) - 1;
        long long c = a.back() * lead_inv % p;
        for (int i = 0; i <= df; ++i) a[da - df + i] = md(a[da - df + i] - c * f[i], p);
        trim(a);
    }
    return a;
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, long long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return poly_mod(c, f, p);
}

FpPoly poly_gcd(FpPoly a, FpPoly b, long long p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

int vp(long long c, long long p, int cap) {
    if (c == 0) return cap;
    int v = 0;
    while (c % p == 0) {
        c /= p;
        ++v;
    }
    return std::min(v, cap);
}

}  // namespace

bool is_irreducible_mod_p(const FpPoly& f0, long long p) {
    FpPoly f = f0;
    for (auto& c : f) c = md(c, p);
    trim(f);
    const int k = static_cast<int>(f.size()) - 1;
    if (k <= 0) return false;
    if (k == 1) return true;
    // Ben-Or: gcd(f, x^{p^i} - x) = 1 for i <= k/2
    FpPoly h = poly_mod({0, 1}, f, p);
    for (int i = 1; i <= k / 2; ++i) {
        FpPoly acc{1};
        FpPoly base = h;
        long long e = p;
        while (e) {
            if (e & 1) acc = poly_mulmod(acc, base, f, p);
            base = poly_mulmod(base, base, f, p);
            e >>= 1;
        }
        h = acc;
        FpPoly g = h;
        if (g.size() < 2) g.resize(2, 0);
        g[1] = md(g[1] - 1, p);
        g = poly_gcd(f, g, p);
        if (g.size() > 1) return false;
    }
    return true;
}

FpPoly first_irreducible(long long p, int k) {
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= p;
    for (long long idx = 0; idx < total; ++idx) {
        FpPoly f(k + 1, 0);
        long long r = idx;
        for (int i = 0; i < k; ++i) {
            f[i] = r % p;
            r /= p;
        }
        f[k] = 1;
        if (is_irreducible_mod_p(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

GaloisRing::GaloisRing(long long p, int k, int m) : p_(p), k_(k), m_(m) {
    if (p < 2) throw std::invalid_argument("p must be a prime >= 2");
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("p must be prime");
    if (k < 1 || k > kMaxDeg) throw std::invalid_argument("residue degree out of range");
    if (m < 1) throw std::invalid_argument("precision must be >= 1");
    const long long limit = 1LL << 62;
    q_ = 1;
    for (int i = 0; i < m; ++i) {
        if (q_ > limit / p) throw ResourceError("p^m exceeds 2^62 (p=" + std::to_string(p) + ", m=" + std::to_string(m) + ")");
        q_ *= p;
    }
    f_ = first_irreducible(p, k);
    // sigma(x): the root of f congruent to x^p, by Newton iteration
    frob_powers_.assign(k_, zero());
    Elem theta = pow(gen(), static_cast<unsigned long long>(p));
    Elem fprime_coeffs{};
    for (int i = 1; i <= k_; ++i) fprime_coeffs[i - 1] = norm(f_[i] * i);
    auto eval = [&](const std::vector<long long>& coeffs, const Elem& t) {
        Elem acc = zero();
        for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) acc = add(mul(acc, t), from_int(coeffs[i]));
        return acc;
    };
    std::vector<long long> fc(f_.begin(), f_.end());
    std::vector<long long> fpc(fprime_coeffs.begin(), fprime_coeffs.begin() + k_);
    for (int it = 0; it < m_ + 2; ++it) {
        Elem fv = eval(fc, theta);
        if (is_zero(fv)) break;
        theta = sub(theta, mul(fv, inverse(eval(fpc, theta))));
    }
    if (!is_zero(eval(fc, theta))) throw std::logic_error("Frobenius lift did not converge");
    Elem acc = one();
    for (int i = 0; i < k_; ++i) {
        frob_powers_[i] = acc;
        acc = mul(acc, theta);
    }
}

long long GaloisRing::mulmod(long long a, long long b) const {
    return static_cast<long long>(static_cast<__int128>(a) * b % q_);
}

GaloisRing::Elem GaloisRing::from_int(long long v) const {
    Elem e{};
    e[0] = norm(v);
    return e;
}

GaloisRing::Elem GaloisRing::gen() const {
    if (k_ == 1) return from_int(norm(-f_[0]));
    Elem e{};
    e[1] = 1;
    return e;
}

GaloisRing::Elem GaloisRing::from_coeffs(const std::vector<long long>& c) const {
    if (static_cast<int>(c.size()) > k_) throw std::invalid_argument("too many coefficients");
    Elem e{};
    for (size_t i = 0; i < c.size(); ++i) e[i] = norm(c[i]);
    return e;
}

GaloisRing::Elem GaloisRing::add(const Elem& a, const Elem& b) const {
    Elem c{};
    for (int i = 0; i < k_; ++i) {
        long long s = a[i] + b[i];
        c[i] = s >= q_ ? s - q_ : s;
    }
    return c;
}

GaloisRing::Elem GaloisRing::sub(const Elem& a, const Elem& b) const {
    Elem c{};
    for (int i = 0; i < k_; ++i) {
        long long s = a[i] - b[i];
        c[i] = s < 0 ? s + q_ : s;
    }
    return c;
}

GaloisRing::Elem GaloisRing::neg(const Elem& a) const { return sub(zero(), a); }

GaloisRing::Elem GaloisRing::mul(const Elem& a, const Elem& b) const {
    if (k_ == 1) {
        Elem c{};
        c[0] = mulmod(a[0], b[0]);
        return c;
    }
    std::array<__int128, 2 * kMaxDeg> r{};
    for (int i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < k_; ++j) r[i + j] = (r[i + j] + static_cast<__int128>(a[i]) * b[j]) % q_;
    }
    for (int d = 2 * k_ - 2; d >= k_; --d) {
        long long c = static_cast<long long>(r[d]);
        if (c == 0) continue;
        for (int i = 0; i < k_; ++i) r[d - k_ + i] = (r[d - k_ + i] - static_cast<__int128>(c) * f_[i]) % q_;
        r[d] = 0;
    }
    Elem out{};
    for (int i = 0; i < k_; ++i) {
        long long v = static_cast<long long>(r[i] % q_);
        out[i] = v < 0 ? v + q_ : v;
    }
    return out;
}

GaloisRing::Elem GaloisRing::scale(const Elem& a, long long s) const {
    Elem c{};
    s = norm(s);
    for (int i = 0; i < k_; ++i) c[i] = mulmod(a[i], s);
    return c;
}

GaloisRing::Elem GaloisRing::pow(Elem a, unsigned long long e) const {
    Elem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

bool GaloisRing::is_zero(const Elem& a) const {
    for (int i = 0; i < k_; ++i)
        if (a[i] != 0) return false;
    return true;
}

int GaloisRing::valuation(const Elem& a) const {
    int v = m_;
    for (int i = 0; i < k_; ++i) v = std::min(v, vp(a[i], p_, m_));
    return v;
}

GaloisRing::Elem GaloisRing::inverse(const Elem& a) const {
    if (!is_unit(a)) throw std::domain_error("inverse of a non-unit");
    unsigned long long order = 1;
    for (int i = 0; i < k_; ++i) order *= static_cast<unsigned long long>(p_);
    Elem y = pow(a, order - 2);  // inverse mod p
    const Elem two = from_int(2);
    for (int it = 0; it < 64; ++it) {
        Elem ay = mul(a, y);
        if (ay == one()) return y;
        y = mul(y, sub(two, ay));
    }
    throw std::logic_error("unit inverse did not converge");
}

GaloisRing::Elem GaloisRing::div_p_pow(const Elem& a, int v) const {
    long long d = 1;
    for (int i = 0; i < v; ++i) d *= p_;
    Elem c{};
    for (int i = 0; i < k_; ++i) {
        if (a[i] % d != 0) throw std::domain_error("inexact division by p^v");
        c[i] = a[i] / d;
    }
    return c;
}

GaloisRing::Elem GaloisRing::p_pow(int v) const {
    long long d = 1;
    for (int i = 0; i < v && i < m_; ++i) d *= p_;
    return v >= m_ ? zero() : from_int(d);
}

GaloisRing::Elem GaloisRing::truncate(const Elem& a, int e) const {
    long long d = 1;
    for (int i = 0; i < e && i < m_; ++i) d *= p_;
    Elem c{};
    for (int i = 0; i < k_; ++i) c[i] = a[i] % d;
    return c;
}

GaloisRing::Elem GaloisRing::frob(const Elem& a) const {
    if (k_ == 1) return a;
    Elem acc = zero();
    for (int i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        acc = add(acc, scale(frob_powers_[i], a[i]));
    }
    return acc;
}

GaloisRing::Elem GaloisRing::frob_pow(Elem a, int r) const {
    r %= k_;
    if (r < 0) r += k_;
    for (int i = 0; i < r; ++i) a = frob(a);
    return a;
}

std::vector<GaloisRing::Elem> GaloisRing::residues(int e) const {
    long long base = 1;
    for (int i = 0; i < e; ++i) base *= p_;
    long long total = 1;
    for (int i = 0; i < k_; ++i) {
        if (total > 10'000'000 / base) throw ResourceError("too many residues to enumerate");
        total *= base;
    }
    std::vector<Elem> out;
    out.reserve(total);
    for (long long idx = 0; idx < total; ++idx) {
        Elem c{};
        long long r = idx;
        for (int i = 0; i < k_; ++i) {
            c[i] = r % base;
            r /= base;
        }
        out.push_back(c);
    }
    return out;
}

GRMat gr_identity(const GaloisRing& R, int n) {
    GRMat I(n, std::vector<GRElem>(n, R.zero()));
    for (int i = 0; i < n; ++i) I[i][i] = R.one();
    return I;
}

GRMat gr_mul(const GaloisRing& R, const GRMat& A, const GRMat& B) {
    const size_t n = A.size(), k = B.size(), c = B.empty() ? 0 : B[0].size();
    GRMat C(n, std::vector<GRElem>(c, R.zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (R.is_zero(A[i][t])) continue;
            for (size_t j = 0; j < c; ++j) C[i][j] = R.add(C[i][j], R.mul(A[i][t], B[t][j]));
        }
    return C;
}

GRMat gr_frob(const GaloisRing& R, const GRMat& A) {
    GRMat B = A;
    for (auto& row : B)
        for (auto& x : row) x = R.frob(x);
    return B;
}

GRSmith gr_smith(const GaloisRing& R, GRMat D, int guard, bool track) {
    const int n = static_cast<int>(D.size());
    for (const auto& row : D)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("gr_smith expects a square matrix");
    GRSmith res;
    if (track) {
        res.U = gr_identity(R, n);
        res.V = gr_identity(R, n);
    }
    for (int t = 0; t < n; ++t) {
        int pi = -1, pj = -1, best = R.m() + 1;
        for (int i = t; i < n; ++i)
            for (int j = t; j < n; ++j) {
                int v = R.valuation(D[i][j]);
                if (v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best >= R.m() - guard)
            throw PrecisionError("pivot valuation " + std::to_string(best) + " reaches the precision limit " +
                                 std::to_string(R.m() - guard));
        std::swap(D[t], D[pi]);
        for (auto& row : D) std::swap(row[t], row[pj]);
        if (track) {
            std::swap(res.U[t], res.U[pi]);
            for (auto& row : res.V) std::swap(row[t], row[pj]);
        }
        const GRElem uinv = R.inverse(R.div_p_pow(D[t][t], best));
        for (int j = 0; j < n; ++j) D[t][j] = R.mul(D[t][j], uinv);
        if (track)
            for (int j = 0; j < n; ++j) res.U[t][j] = R.mul(res.U[t][j], uinv);
        for (int i = t + 1; i < n; ++i) {
            if (R.is_zero(D[i][t])) continue;
            GRElem f = R.div_p_pow(D[i][t], best);
            for (int j = t; j < n; ++j) D[i][j] = R.sub(D[i][j], R.mul(f, D[t][j]));
            if (track)
                for (int j = 0; j < n; ++j) res.U[i][j] = R.sub(res.U[i][j], R.mul(f, res.U[t][j]));
        }
        for (int j = t + 1; j < n; ++j) {
            if (R.is_zero(D[t][j])) continue;
            GRElem f = R.div_p_pow(D[t][j], best);
            D[t][j] = R.zero();
            if (track)
                for (int i = 0; i < n; ++i) res.V[i][j] = R.sub(res.V[i][j], R.mul(f, res.V[i][t]));
        }
        res.exps.push_back(best);
    }
    std::reverse(res.exps.begin(), res.exps.end());
    if (track) {
        std::reverse(res.U.begin(), res.U.end());
        for (auto& row : res.V) std::reverse(row.begin(), row.end());
    }
    return res;
}

}  // namespace lsd
