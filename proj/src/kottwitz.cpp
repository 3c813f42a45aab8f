#include "lsd/kottwitz.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace lsd {

namespace {

IMat phi_power_sum(const RootDatum& rd, int& order) {
    IMat S = IMat::identity(rd.N);
    IMat p = rd.phi;
    order = 1;
    while (!(p == IMat::identity(rd.N))) {
        for (size_t t = 0; t < S.a.size(); ++t) S.a[t] += p.a[t];
        p = p * rd.phi;
        if (++order > 12) throw std::logic_error("Frobenius of unexpected order");
    }
    return S;
}

bool gamma_stable(const RootDatum& rd, unsigned J) {
    for (int i = 0; i < rd.ns(); ++i)
        if ((J >> i & 1u) && !(J >> rd.phi_perm[i] & 1u)) return false;
    return true;
}

std::vector<unsigned> stable_subsets(const RootDatum& rd) {
    std::vector<unsigned> out;
    for (unsigned J = 0; J < (1u << rd.ns()); ++J)
        if (gamma_stable(rd, J)) out.push_back(J);
    return out;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

// Integer matrix P and scale L with L * pr_J(v) = P v; pr_J kills the J-coroot part.
struct ScaledProjector {
    IMat P;
    long long L = 1;
};

ScaledProjector projector(const RootDatum& rd, unsigned J) {
    std::vector<int> idx;
    for (int i = 0; i < rd.ns(); ++i)
        if (J >> i & 1u) idx.push_back(i);
    const int k = static_cast<int>(idx.size());
    const int N = rd.N;
    std::vector<QVec> P(N, QVec(N, Q(0)));
    for (int t = 0; t < N; ++t) P[t][t] = 1;
    if (k > 0) {
        std::vector<QVec> A(k, QVec(k));
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) A[a][b] = Q(dot(rd.roots[idx[a]], rd.coroots[idx[b]]));
        // column u of P: e_u - sum_b coroot_b * (A^{-1} R e_u)_b
        for (int u = 0; u < N; ++u) {
            QVec rhs(k);
            for (int a = 0; a < k; ++a) rhs[a] = Q(rd.roots[idx[a]][u]);
            QVec coef = solve_square(A, rhs);
            for (int b = 0; b < k; ++b)
                for (int t = 0; t < N; ++t) P[t][u] -= coef[b] * Q(rd.coroots[idx[b]][t]);
        }
    }
    ScaledProjector sp;
    for (const QVec& row : P)
        for (const Q& q : row) sp.L = lcm_ll(sp.L, q.denominator());
    sp.P = IMat(N, N);
    for (int t = 0; t < N; ++t)
        for (int u = 0; u < N; ++u) sp.P(t, u) = (P[t][u] * Q(sp.L)).numerator();
    return sp;
}

// Rows c_i with (L * coefficient of alpha_i^vee in v) = c_i . (R v) for v in the coroot span.
struct ScaledInverse {
    IMat M;
    long long L = 1;
};

ScaledInverse cartan_inverse(const RootDatum& rd) {
    const int r = rd.ns();
    IMat A = rd.cartan();
    std::vector<QVec> Aq(r, QVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) Aq[i][j] = Q(A(i, j));
    std::vector<QVec> cols;
    for (int j = 0; j < r; ++j) {
        QVec e(r, Q(0));
        e[j] = 1;
        cols.push_back(solve_square(Aq, e));
    }
    ScaledInverse si;
    for (const QVec& c : cols)
        for (const Q& q : c) si.L = lcm_ll(si.L, q.denominator());
    si.M = IMat(r, r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) si.M(i, j) = (cols[j][i] * Q(si.L)).numerator();
    return si;
}

struct Candidate {
    QVec nu;
    unsigned levi;
    IVec rep;
};

struct Context {
    const RootDatum* rd;
    IVec mu;
    IMat S;  // sum of Frobenius powers
    int order = 1;
    IVec S_mu;
    QVec coef;  // coefficients of mu_bar - nu_basic
    IMat R;     // simple roots as rows
    ScaledInverse Ainv;
};

Context make_context(const RootDatum& rd, const IVec& mu) {
    if (static_cast<int>(mu.size()) != rd.N) throw std::invalid_argument("mu has wrong length");
    if (!is_dominant(rd, to_q(mu))) throw std::invalid_argument("mu is not dominant");
    Context cx;
    cx.rd = &rd;
    cx.mu = mu;
    cx.S = phi_power_sum(rd, cx.order);
    cx.S_mu = cx.S * mu;
    const unsigned all = (1u << rd.ns()) - 1;
    ScaledProjector pb = projector(rd, all);
    IVec yb = pb.P * cx.S_mu;
    QVec diff(rd.N);
    for (int t = 0; t < rd.N; ++t) diff[t] = Q(cx.S_mu[t], cx.order) - Q(yb[t], pb.L * cx.order);
    auto c = coroot_coefficients(rd, diff);
    if (!c) throw std::logic_error("basic Newton point outside the coroot translate");
    cx.coef = *c;
    cx.R = IMat::from_rows(rd.roots, rd.N);
    cx.Ainv = cartan_inverse(rd);
    return cx;
}

std::vector<Candidate> scan_levi(const Context& cx, unsigned J) {
    const RootDatum& rd = *cx.rd;
    const int r = rd.ns();
    std::vector<Candidate> out;
    std::vector<int> reps, sizes;
    std::vector<bool> seen(r, false);
    for (int i = 0; i < r; ++i) {
        if ((J >> i & 1u) || seen[i]) continue;
        int sz = 0;
        for (int j = i; !seen[j]; j = rd.phi_perm[j]) {
            seen[j] = true;
            ++sz;
        }
        reps.push_back(i);
        sizes.push_back(sz);
    }
    const int k = static_cast<int>(reps.size());
    std::vector<long long> bound(k);
    for (int o = 0; o < k; ++o) {
        Q b = cx.coef[reps[o]] * Q(sizes[o]);
        bound[o] = b.numerator() / b.denominator();
        if (bound[o] < 0) return out;
    }
    ScaledProjector pj = projector(rd, J);
    const long long D = pj.L * cx.order;
    std::vector<long long> c(k, 0);
    for (;;) {
        IVec x = cx.mu;
        for (int o = 0; o < k; ++o)
            for (int t = 0; t < rd.N; ++t) x[t] -= c[o] * rd.coroots[reps[o]][t];
        IVec y = pj.P * (cx.S * x);
        bool ok = true;
        for (int o = 0; o < r && ok; ++o)
            if (!(J >> o & 1u) && dot(rd.roots[o], y) <= 0) ok = false;
        if (ok) {
            IVec d(rd.N);
            for (int t = 0; t < rd.N; ++t) d[t] = pj.L * cx.S_mu[t] - y[t];
            IVec coeff = cx.Ainv.M * (cx.R * d);
            for (long long v : coeff)
                if (v < 0) ok = false;
        }
        if (ok) {
            Candidate cd;
            cd.nu.resize(rd.N);
            for (int t = 0; t < rd.N; ++t) cd.nu[t] = Q(y[t], D);
            cd.levi = J;
            cd.rep = x;
            out.push_back(std::move(cd));
        }
        int o = 0;
        while (o < k && c[o] == bound[o]) c[o++] = 0;
        if (o == k) break;
        ++c[o];
    }
    return out;
}

BGMu assemble(const RootDatum& rd, const IVec& mu, std::vector<std::vector<Candidate>>&& parts) {
    BGMu res;
    res.mu = mu;
    res.mu_bar = galois_average(rd, to_q(mu));
    res.coinv = pi1(rd).coinvariants();
    res.mu_sharp = res.coinv.coords(mu);
    std::map<QVec, Candidate> uniq;
    for (auto& part : parts)
        for (Candidate& c : part) uniq.emplace(c.nu, std::move(c));
    const unsigned all = (1u << rd.ns()) - 1;
    for (auto& [nu, c] : uniq) {
        SigmaConjClass s;
        s.nu = nu;
        s.kappa = res.mu_sharp;
        s.levi = c.levi;
        s.basic = c.levi == all;
        s.rep = c.rep;
        res.classes.push_back(std::move(s));
    }
    std::sort(res.classes.begin(), res.classes.end(), [&](const SigmaConjClass& a, const SigmaConjClass& b) {
        Q ha = dot(rd.two_rho, a.nu), hb = dot(rd.two_rho, b.nu);
        if (ha != hb) return ha > hb;
        return b.nu < a.nu;
    });
    return res;
}

}  // namespace

int BGMu::basic_index() const {
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].basic) return static_cast<int>(i);
    return -1;
}

BGMu enumerate_bgmu_serial(const RootDatum& rd, const IVec& mu) {
    Context cx = make_context(rd, mu);
    std::vector<unsigned> Js = stable_subsets(rd);
    std::vector<std::vector<Candidate>> parts;
    for (unsigned J : Js) parts.push_back(scan_levi(cx, J));
    return assemble(rd, mu, std::move(parts));
}

BGMu enumerate_bgmu(const RootDatum& rd, const IVec& mu) {
    Context cx = make_context(rd, mu);
    std::vector<unsigned> Js = stable_subsets(rd);
    std::vector<std::vector<Candidate>> parts(Js.size());
    const long long n = static_cast<long long>(Js.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) parts[i] = scan_levi(cx, Js[i]);
    return assemble(rd, mu, std::move(parts));
}

bool class_leq(const RootDatum& rd, const SigmaConjClass& a, const SigmaConjClass& b) {
    return a.kappa == b.kappa && dominance_leq_q(rd, a.nu, b.nu);
}

// ---------------------------------------------------------------- flags

bool is_minuscule(const RootDatum& rd, const IVec& mu) {
    for (const IVec& a : rd.pos_roots) {
        long long v = dot(a, mu);
        if (v < -1 || v > 1) return false;
    }
    return true;
}

namespace {

DatumFlags datum_flags(const RootDatum& rd, const IVec& mu) {
    DatumFlags f;
    f.minuscule = is_minuscule(rd, mu);
    const int N = rd.N;
    auto is_zero_one_prefix = [](const IVec& v) {
        bool seen_zero = false;
        for (long long x : v) {
            if (x != 0 && x != 1) return false;
            if (x == 0) seen_zero = true;
            if (x == 1 && seen_zero) return false;
        }
        return true;
    };
    switch (rd.family) {
        case Family::GL:
            f.hodge_type = is_zero_one_prefix(mu);
            f.reason = f.hodge_type ? "standard representation has weights 0 and 1" : "weights outside {0,1}";
            break;
        case Family::GSp: {
            IVec want(N, 1);
            f.hodge_type = mu == want;
            f.reason = f.hodge_type ? "Siegel cocharacter" : "not the Siegel cocharacter";
            break;
        }
        case Family::GSpin: {
            IVec want(N, 0);
            want[1] = 1;
            f.hodge_type = mu == want;
            f.reason = f.hodge_type ? "spin representation has weights 0 and 1" : "not the spin-lifted orthogonal cocharacter";
            break;
        }
        case Family::PGL: {
            int ones = 0, others = 0;
            for (long long x : mu) {
                if (x == 1)
                    ++ones;
                else if (x != 0)
                    ++others;
            }
            f.abelian_type = ones <= 1 && others == 0;
            f.reason = f.abelian_type ? "adjoint image of a GL Hodge-type datum" : "not a fundamental coweight";
            break;
        }
        case Family::SOOdd:
        case Family::SOEvenSplit:
        case Family::SOEvenNonsplit: {
            IVec want(N, 0);
            want[0] = 1;
            f.abelian_type = mu == want;
            f.reason = f.abelian_type ? "image of the GSpin Hodge-type datum" : "not the standard orthogonal cocharacter";
            break;
        }
        default:
            f.reason = "no Hodge-type cover in the catalogue";
    }
    if (f.hodge_type) f.abelian_type = true;
    return f;
}

}  // namespace

LocalDatum validate_datum(const RootDatum& rd, const IVec& mu, const SigmaConjClass& b) {
    BGMu t = enumerate_bgmu(rd, mu);
    auto it = std::find_if(t.classes.begin(), t.classes.end(),
                           [&](const SigmaConjClass& c) { return c.nu == b.nu && c.kappa == b.kappa; });
    if (it == t.classes.end()) throw std::invalid_argument("b is not in B(G, mu)");
    LocalDatum d;
    d.rd = &rd;
    d.mu = mu;
    d.b = *it;
    d.flags = datum_flags(rd, mu);
    return d;
}

// ---------------------------------------------------------------- defect

namespace {

struct Block {
    Q slope;
    int mult;
};

// Group equal entries of a sorted list.
std::vector<Block> blocks_of(const QVec& v) {
    std::vector<Block> out;
    for (const Q& x : v) {
        if (!out.empty() && out.back().slope == x)
            ++out.back().mult;
        else
            out.push_back({x, 1});
    }
    return out;
}

int gl_rank(const std::vector<Block>& bs) {
    int r = 0;
    for (const Block& b : bs) {
        if (b.mult % b.slope.denominator() != 0) throw std::logic_error("Newton block of non-integral degree");
        r += b.mult / static_cast<int>(b.slope.denominator());
    }
    return r;
}

long long mod2(long long x) { return ((x % 2) + 2) % 2; }

// Orthogonal part: x are the SO coordinates of nu, parity is kappa in Z/2.
int orth_jb_rank(OrthKind kind, const QVec& x, long long parity) {
    std::vector<Q> nz;
    int z = 0;
    for (const Q& v : x) {
        if (v == 0)
            ++z;
        else
            nz.push_back(v < 0 ? -v : v);
    }
    std::sort(nz.begin(), nz.end());
    std::vector<Block> bs = blocks_of(nz);
    int r = gl_rank(bs);
    long long kh = parity;
    for (const Block& b : bs) {
        Q deg = b.slope * Q(b.mult);
        kh -= deg.numerator();
    }
    kh = mod2(kh);
    switch (kind) {
        case OrthKind::Odd:
            if (z == 0) {
                if (kh != 0) throw DefectTableIncomplete("odd orthogonal class with no anisotropic part and odd kappa");
                return r;
            }
            return r + (kh == 0 ? z : z - 1);
        case OrthKind::EvenSplit:
            if (z == 0) {
                if (kh != 0) throw DefectTableIncomplete("split even orthogonal class with no anisotropic part and odd kappa");
                return r;
            }
            if (z == 1) return r + 1;
            return r + (kh == 0 ? z : z - 2);
        case OrthKind::EvenNonsplit:
            if (z == 0) throw DefectTableIncomplete("non-split form with no remaining quadratic space");
            return r + (z == 1 ? 0 : z - 1);
    }
    return r;
}

QVec sorted_desc(QVec v) {
    std::sort(v.begin(), v.end(), [](const Q& a, const Q& b) { return b < a; });
    return v;
}

}  // namespace

int qp_rank(const RootDatum& rd) {
    const int n = rd.size, m = rd.size;
    switch (rd.family) {
        case Family::GL: return n;
        case Family::SL:
        case Family::PGL: return n - 1;
        case Family::Sp: return m;
        case Family::GSp: return m + 1;
        case Family::SOOdd:
        case Family::SOEvenSplit: return m;
        case Family::SOEvenNonsplit: return m - 1;
        case Family::GSpin: return 1 + (rd.flags.orth == OrthKind::EvenNonsplit ? m - 1 : m);
    }
    return 0;
}

int jb_rank(const RootDatum& rd, const SigmaConjClass& b) {
    const int N = rd.N;
    const QVec& nu = b.nu;
    switch (rd.family) {
        case Family::GL:
            return gl_rank(blocks_of(nu));
        case Family::SL: {
            const int n = rd.size;
            QVec e(n, Q(0));
            for (int k = 0; k < n; ++k) {
                Q cur = k < N ? nu[k] : Q(0);
                Q prev = k > 0 ? nu[k - 1] : Q(0);
                e[k] = cur - prev;
            }
            return gl_rank(blocks_of(e)) - 1;
        }
        case Family::PGL: {
            const int n = rd.size;
            // degree of the lift from the representative: omega_i^vee maps to i+1 in Z/n
            long long d = 0;
            for (int i = 0; i < N; ++i) d += (i + 1) * b.rep[i];
            d = ((d % n) + n) % n;
            QVec e(n, Q(d, n));
            for (int i = 0; i < N; ++i)
                for (int k = 0; k < n; ++k) e[k] += nu[i] * (Q(k <= i ? 1 : 0) - Q(i + 1, n));
            return gl_rank(blocks_of(e)) - 1;
        }
        case Family::Sp: {
            QVec pos;
            int z = 0;
            for (const Q& x : nu) {
                if (x == 0)
                    ++z;
                else
                    pos.push_back(x);
            }
            return gl_rank(blocks_of(pos)) + z;
        }
        case Family::GSp: {
            const int m = rd.size;
            const Q c = nu[m];
            if (c.denominator() != 1) throw std::logic_error("similitude part of a Newton point must be integral");
            QVec pos;
            int z = 0;
            for (int i = 0; i < m; ++i) {
                if (nu[i] - c / Q(2) == 0)
                    ++z;
                else
                    pos.push_back(nu[i]);
            }
            int r = gl_rank(blocks_of(pos));
            if (z == 0) return r + 1;
            return r + (mod2(c.numerator()) == 0 ? z + 1 : z / 2 + 1);
        }
        case Family::SOOdd:
        case Family::SOEvenSplit:
        case Family::SOEvenNonsplit: {
            OrthKind kind = rd.family == Family::SOOdd ? OrthKind::Odd
                            : rd.family == Family::SOEvenSplit ? OrthKind::EvenSplit
                                                               : OrthKind::EvenNonsplit;
            long long par = 0;
            for (long long x : b.rep) par += x;
            return orth_jb_rank(kind, sorted_desc(nu), mod2(par));
        }
        case Family::GSpin: {
            QVec x(nu.begin() + 1, nu.end());
            long long par = 0;
            for (int i = 1; i < N; ++i) par += b.rep[i];
            return 1 + orth_jb_rank(rd.flags.orth, sorted_desc(x), mod2(par));
        }
    }
    throw DefectTableIncomplete("family without a defect rule");
}

int defect(const RootDatum& rd, const SigmaConjClass& b) { return qp_rank(rd) - jb_rank(rd, b); }

long long rz_dimension(const RootDatum& rd, const IVec& mu, const SigmaConjClass& b) {
    QVec diff = to_q(mu);
    for (int t = 0; t < rd.N; ++t) diff[t] -= b.nu[t];
    Q v = dot(rd.rho, diff) - Q(defect(rd, b), 2);
    if (v.denominator() != 1 || v < 0) throw std::logic_error("dimension formula gave " + q_str(v));
    return v.numerator();
}

// ---------------------------------------------------------------- HN

namespace {

bool hn_lattice_test(const RootDatum& rd, const IVec& mu, const IVec& rep, unsigned M) {
    std::vector<IVec> cols;
    for (int j = 0; j < rd.ns(); ++j)
        if (M >> j & 1u) cols.push_back(rd.coroots[j]);
    for (int j = 0; j < rd.N; ++j) {
        IVec col(rd.N, 0);
        col[j] = 1;
        for (int t = 0; t < rd.N; ++t) col[t] -= rd.phi(t, j);
        cols.push_back(col);
    }
    IVec target(rd.N);
    for (int t = 0; t < rd.N; ++t) target[t] = rep[t] - mu[t];
    return solve_integer(IMat::from_columns(rd.N, cols), target).has_value();
}

}  // namespace

bool hn_condition_holds(const RootDatum& rd, const IVec& mu, const SigmaConjClass& b, unsigned M) {
    AbGroup g = pi1_levi(rd, M).coinvariants();
    return g.coords(b.rep) == g.coords(mu);
}

HNResult fully_hn_decomposable(const RootDatum& rd, const IVec& mu, const BGMu& table) {
    HNResult res;
    const unsigned all = (1u << rd.ns()) - 1;
    std::vector<unsigned> Js = stable_subsets(rd);
    std::stable_sort(Js.begin(), Js.end(), [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
    res.witness.assign(table.classes.size(), std::nullopt);
    for (size_t i = 0; i < table.classes.size(); ++i) {
        const SigmaConjClass& c = table.classes[i];
        if (c.basic) continue;
        for (unsigned M : Js) {
            if (M == all || (M & c.levi) != c.levi) continue;
            if (hn_lattice_test(rd, mu, c.rep, M)) {
                res.witness[i] = M;
                break;
            }
        }
        if (!res.witness[i]) {
            res.decomposable = false;
            res.failing.push_back(static_cast<int>(i));
        }
    }
    return res;
}

HNResult fully_hn_decomposable(const RootDatum& rd, const IVec& mu) {
    return fully_hn_decomposable(rd, mu, enumerate_bgmu(rd, mu));
}

// ---------------------------------------------------------------- c_{b,mu}

std::optional<IVec> solve_coboundary(const FinAbGroupWithAction& g, const IVec& target, int box) {
    AbGroup G = g.group();
    const int k = static_cast<int>(G.orders.size());
    std::vector<long long> lo(k), hi(k);
    for (int i = 0; i < k; ++i) {
        lo[i] = G.orders[i] == 0 ? -box : 0;
        hi[i] = G.orders[i] == 0 ? box : G.orders[i] - 1;
    }
    std::optional<IVec> best;
    auto weight = [](const IVec& c) {
        long long s = 0;
        for (long long x : c) s += std::llabs(x);
        return s;
    };
    IVec c = lo;
    for (;;) {
        IVec amb = G.lift * c;
        IVec img = g.action * amb;
        IVec d(g.N);
        for (int t = 0; t < g.N; ++t) d[t] = amb[t] - img[t] - target[t];
        if (G.is_zero(d)) {
            if (!best || weight(c) < weight(*best) || (weight(c) == weight(*best) && c < *best)) best = c;
        }
        int i = 0;
        while (i < k && c[i] == hi[i]) {
            c[i] = lo[i];
            ++i;
        }
        if (i == k) break;
        ++c[i];
    }
    return best;
}

std::optional<IVec> cbmu(const RootDatum& rd, const IVec& mu, const SigmaConjClass& b) {
    IVec target(rd.N);
    for (int t = 0; t < rd.N; ++t) target[t] = b.rep[t] - mu[t];
    return solve_coboundary(pi1(rd), target);
}

}  // namespace lsd
