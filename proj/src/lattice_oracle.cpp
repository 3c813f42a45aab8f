#include "lsd/lattice_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lsd {

namespace {

long long floordiv(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long ipow(long long p, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

int vp_int(long long x, long long p) {
    if (x == 0) throw std::invalid_argument("valuation of zero");
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

GRMat to_ring(const GaloisRing& R, const IMat& B) {
    GRMat M(B.r, std::vector<GRElem>(B.c, R.zero()));
    for (int i = 0; i < B.r; ++i)
        for (int j = 0; j < B.c; ++j) M[i][j] = R.from_int(B(i, j));
    return M;
}

GRElem det(const GaloisRing& R, const GRMat& A) {
    const int n = static_cast<int>(A.size());
    if (n == 0) return R.one();
    if (n == 1) return A[0][0];
    GRElem acc = R.zero();
    for (int j = 0; j < n; ++j) {
        GRMat minor;
        for (int i = 1; i < n; ++i) {
            std::vector<GRElem> row;
            for (int c = 0; c < n; ++c)
                if (c != j) row.push_back(A[i][c]);
            minor.push_back(std::move(row));
        }
        GRElem term = R.mul(A[0][j], det(R, minor));
        acc = (j % 2 == 0) ? R.add(acc, term) : R.sub(acc, term);
    }
    return acc;
}

GRMat adjugate(const GaloisRing& R, const GRMat& A) {
    const int n = static_cast<int>(A.size());
    GRMat adj(n, std::vector<GRElem>(n, R.zero()));
    if (n == 1) {
        adj[0][0] = R.one();
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            GRMat minor;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<GRElem> row;
                for (int c = 0; c < n; ++c)
                    if (c != j) row.push_back(A[r][c]);
                minor.push_back(std::move(row));
            }
            GRElem d = det(R, minor);
            adj[j][i] = ((i + j) % 2 == 0) ? d : R.neg(d);
        }
    return adj;
}

// Upper-triangular column Hermite form with diagonal p^{f_i}; nullopt if singular at precision.
std::optional<AdlvPoint> hermite(const GaloisRing& R, GRMat A) {
    const int n = static_cast<int>(A.size());
    AdlvPoint pt;
    pt.diag.assign(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        int best = R.m(), bc = -1;
        for (int c = 0; c <= i; ++c) {
            int v = R.valuation(A[i][c]);
            if (v < best) {
                best = v;
                bc = c;
            }
        }
        if (bc < 0) return std::nullopt;
        for (int r = 0; r < n; ++r) std::swap(A[r][i], A[r][bc]);
        GRElem uinv = R.inverse(R.div_p_pow(A[i][i], best));
        for (int r = 0; r < n; ++r) A[r][i] = R.mul(A[r][i], uinv);
        for (int c = 0; c < i; ++c) {
            if (R.is_zero(A[i][c])) continue;
            GRElem f = R.div_p_pow(A[i][c], best);
            for (int r = 0; r < n; ++r) A[r][c] = R.sub(A[r][c], R.mul(f, A[r][i]));
        }
        pt.diag[i] = best;
    }
    // reduce above the diagonal, bottom-up within each column
    for (int j = 0; j < n; ++j)
        for (int i = j - 1; i >= 0; --i) {
            const long long d = ipow(R.p(), pt.diag[i]);
            GRElem q = R.zero();
            for (int t = 0; t < R.k(); ++t) q[t] = A[i][j][t] / d;
            if (R.is_zero(q)) continue;
            for (int r = 0; r <= i; ++r) A[r][j] = R.sub(A[r][j], R.mul(q, A[r][i]));
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pt.upper.push_back(A[i][j]);
    return pt;
}

std::vector<long long> key_of(const GaloisRing& R, const AdlvPoint& pt) {
    std::vector<long long> key(pt.diag.begin(), pt.diag.end());
    for (const GRElem& e : pt.upper)
        for (int t = 0; t < R.k(); ++t) key.push_back(e[t]);
    return key;
}

bool dominated(const std::vector<int>& inv, const IVec& mu) {
    long long a = 0, b = 0;
    for (size_t i = 0; i < inv.size(); ++i) {
        a += inv[i];
        b += mu[i];
        if (a > b) return false;
    }
    return a == b;
}

bool relation_holds(const std::vector<int>& inv, const IVec& mu, AdlvVariant v) {
    if (v == AdlvVariant::Exact) {
        for (size_t i = 0; i < inv.size(); ++i)
            if (inv[i] != mu[i]) return false;
        return true;
    }
    return dominated(inv, mu);
}

// Flattened candidate space: Hermite forms with diagonal exponents in [0, 2a].
struct CandidateSpace {
    int n = 0, a = 0, k = 1;
    long long p = 2;
    std::vector<std::vector<int>> diags;
    std::vector<long long> offsets;  // size diags+1
    long long total() const { return offsets.back(); }
};

CandidateSpace make_space(long long p, int k, int n, int a) {
    CandidateSpace s;
    s.n = n;
    s.a = a;
    s.k = k;
    s.p = p;
    const int span = 2 * a + 1;
    long long count = 1;
    for (int i = 0; i < n; ++i) count *= span;
    s.offsets.push_back(0);
    for (long long idx = 0; idx < count; ++idx) {
        std::vector<int> f(n);
        long long r = idx;
        for (int i = 0; i < n; ++i) {
            f[i] = static_cast<int>(r % span);
            r /= span;
        }
        long long c = 1;
        for (int i = 0; i < n; ++i)
            for (int e = 0; e < k * f[i] * (n - 1 - i); ++e) {
                c *= p;
                if (c > 50'000'000) throw ResourceError("lattice window too large to enumerate");
            }
        s.diags.push_back(f);
        s.offsets.push_back(s.offsets.back() + c);
        if (s.offsets.back() > 50'000'000) throw ResourceError("lattice window too large to enumerate");
    }
    return s;
}

AdlvPoint decode(const GaloisRing& R, const CandidateSpace& s, long long flat) {
    const size_t di = std::upper_bound(s.offsets.begin(), s.offsets.end(), flat) - s.offsets.begin() - 1;
    long long local = flat - s.offsets[di];
    AdlvPoint pt;
    pt.diag = s.diags[di];
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j) {
            const long long base = ipow(s.p, pt.diag[i]);
            GRElem e = R.zero();
            for (int t = 0; t < s.k; ++t) {
                e[t] = local % base;
                local /= base;
            }
            pt.upper.push_back(e);
        }
    return pt;
}

struct Evaluator {
    const AdlvParams& prm;
    const GaloisRing& R;
    GRMat B;

    bool in_window(const GRMat& M) const {
        GRSmith s = gr_smith(R, M, 0, false);
        return s.exps.front() <= 2 * prm.window;
    }

    std::vector<int> inv(const GRMat& M, int sum_diag) const {
        GRMat X = gr_mul(R, gr_mul(R, adjugate(R, M), B), gr_frob(R, M));
        GRSmith s = gr_smith(R, X, 0, false);
        std::vector<int> out;
        for (int e : s.exps) out.push_back(e - sum_diag - prm.b.shift);
        return out;
    }
};

void validate(const AdlvParams& prm) {
    if (prm.n < 1 || prm.n > 3) throw std::invalid_argument("lattice oracle supports n <= 3");
    if (prm.p != 2 && prm.p != 3 && prm.p != 5) throw std::invalid_argument("lattice oracle supports p in {2,3,5}");
    if (prm.k < 1 || prm.k > 3) throw std::invalid_argument("lattice oracle supports k <= 3");
    if (prm.window < 0 || prm.window > 2) throw std::invalid_argument("lattice oracle supports window a <= 2");
    if (static_cast<int>(prm.mu.size()) != prm.n) throw std::invalid_argument("mu has wrong length");
    if (!std::is_sorted(prm.mu.rbegin(), prm.mu.rend())) throw std::invalid_argument("mu must be decreasing");
    if (prm.b.B.r != prm.n || prm.b.B.c != prm.n) throw std::invalid_argument("b has wrong shape");
}

template <class Pred>
AdlvResult scan(const AdlvParams& prm, bool parallel, Pred keep) {
    validate(prm);
    AdlvResult res;
    res.precision = adlv_precision(prm);
    const GaloisRing R(prm.p, prm.k, res.precision);
    const CandidateSpace space = make_space(prm.p, prm.k, prm.n, prm.window);
    Evaluator ev{prm, R, to_ring(R, prm.b.B)};
    res.candidates = space.total();
    const long long total = space.total();
    std::vector<std::pair<long long, AdlvPoint>> found;
    if (parallel) {
#pragma omp parallel
        {
            std::vector<std::pair<long long, AdlvPoint>> local;
#pragma omp for schedule(dynamic, 256)
            for (long long idx = 0; idx < total; ++idx) {
                AdlvPoint pt = decode(R, space, idx);
                if (keep(R, ev, pt)) local.emplace_back(idx, std::move(pt));
            }
#pragma omp critical
            found.insert(found.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
        }
        std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    } else {
        for (long long idx = 0; idx < total; ++idx) {
            AdlvPoint pt = decode(R, space, idx);
            if (keep(R, ev, pt)) found.emplace_back(idx, std::move(pt));
        }
    }
    for (auto& [idx, pt] : found) {
        ++res.omega_histogram[pt.omega];
        for (int f : pt.diag)
            if (f == 0 || f == 2 * prm.window) res.touches_window = true;
        res.points.push_back(std::move(pt));
    }
    return res;
}

bool adlv_keep(const AdlvParams& prm, const GaloisRing& R, const Evaluator& ev, AdlvPoint& pt) {
    GRMat M = point_matrix(R, prm.n, pt);
    if (!ev.in_window(M)) return false;
    int sum = std::accumulate(pt.diag.begin(), pt.diag.end(), 0);
    pt.inv = ev.inv(M, sum);
    pt.omega = sum - static_cast<long long>(prm.n) * prm.window;
    return relation_holds(pt.inv, prm.mu, prm.variant);
}

}  // namespace

BRep christoffel_rep(long long p, const std::vector<SlopeBlock>& blocks) {
    int n = 0;
    for (const SlopeBlock& b : blocks) {
        if (b.height < 1 || b.copies < 1 || std::gcd(std::abs(b.degree), b.height) != 1)
            throw std::invalid_argument("slope blocks need coprime degree/height and positive copies");
        n += b.height * b.copies;
    }
    std::vector<std::vector<long long>> eps;
    long long lo = 0;
    for (const SlopeBlock& b : blocks)
        for (int c = 0; c < b.copies; ++c) {
            std::vector<long long> e(b.height);
            for (int i = 0; i < b.height; ++i) {
                e[i] = floordiv(static_cast<long long>(i + 1) * b.degree, b.height) -
                       floordiv(static_cast<long long>(i) * b.degree, b.height);
                lo = std::min(lo, e[i]);
            }
            eps.push_back(e);
        }
    BRep rep;
    rep.shift = static_cast<int>(-lo);
    rep.B = IMat(n, n);
    int base = 0;
    for (const auto& e : eps) {
        const int h = static_cast<int>(e.size());
        for (int i = 0; i < h; ++i) rep.B(base + (i + 1) % h, base + i) = ipow(p, static_cast<int>(e[i] + rep.shift));
        base += h;
    }
    for (const SlopeBlock& b : blocks) {
        if (!rep.name.empty()) rep.name += "+";
        rep.name += std::to_string(b.degree) + "/" + std::to_string(b.height);
        if (b.copies > 1) rep.name += "x" + std::to_string(b.copies);
    }
    return rep;
}

QVec newton_of_blocks(const std::vector<SlopeBlock>& blocks) {
    QVec nu;
    for (const SlopeBlock& b : blocks)
        for (int i = 0; i < b.height * b.copies; ++i) nu.push_back(Q(b.degree, b.height));
    std::sort(nu.begin(), nu.end(), [](const Q& x, const Q& y) { return y < x; });
    return nu;
}

int adlv_precision(const AdlvParams& prm) {
    validate(prm);
    SmithResult sb = smith(prm.b.B);
    if (sb.rank < prm.n) throw std::invalid_argument("b must be invertible");
    int vdet = 0;
    for (long long d : sb.diag) vdet += vp_int(d, prm.p);
    // every elementary divisor of adj(M) B sigma(M) is bounded by its determinant valuation
    const int eff = 2 * prm.window * prm.n * prm.n + vdet;
    const int m = std::max(2 * prm.window + 2, eff + 2);
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        if (q > (1LL << 62) / prm.p) throw ResourceError("working precision p^" + std::to_string(m) + " exceeds 2^62");
        q *= prm.p;
    }
    return m;
}

GRMat point_matrix(const GaloisRing& R, int n, const AdlvPoint& pt) {
    GRMat M(n, std::vector<GRElem>(n, R.zero()));
    size_t u = 0;
    for (int i = 0; i < n; ++i) {
        M[i][i] = R.p_pow(pt.diag[i]);
        for (int j = i + 1; j < n; ++j) M[i][j] = pt.upper[u++];
    }
    return M;
}

std::vector<int> relative_position(const GaloisRing& R, const GRMat& A, const GRMat& B) {
    GRSmith sa = gr_smith(R, A, 0, false);
    const int va = std::accumulate(sa.exps.begin(), sa.exps.end(), 0);
    GRSmith s = gr_smith(R, gr_mul(R, adjugate(R, A), B), 0, false);
    std::vector<int> out;
    for (int e : s.exps) out.push_back(e - va);
    return out;
}

AdlvResult enumerate_adlv_serial(const AdlvParams& prm) {
    return scan(prm, false, [&](const GaloisRing& R, const Evaluator& ev, AdlvPoint& pt) { return adlv_keep(prm, R, ev, pt); });
}

AdlvResult enumerate_adlv(const AdlvParams& prm) {
    return scan(prm, true, [&](const GaloisRing& R, const Evaluator& ev, AdlvPoint& pt) { return adlv_keep(prm, R, ev, pt); });
}

namespace {

int min_entry_valuation(const GaloisRing& R, const AdlvPoint& pt) {
    int v = R.m();
    for (int f : pt.diag) v = std::min(v, f);
    for (const GRElem& e : pt.upper) v = std::min(v, R.valuation(e));
    return v;
}

AdlvPoint divide_point(const GaloisRing& R, const AdlvPoint& pt, int j) {
    AdlvPoint q = pt;
    for (int& f : q.diag) f -= j;
    for (GRElem& e : q.upper) e = R.div_p_pow(e, j);
    return q;
}

}  // namespace

CartesianReport check_cartesian_gl_pgl(const AdlvParams& prm, int omega_sign) {
    CartesianReport rep;
    AdlvResult gl = enumerate_adlv(prm);
    const GaloisRing R(prm.p, prm.k, gl.precision);
    const long long n = prm.n;
    rep.gl_points = static_cast<long long>(gl.points.size());
    auto omega = [&](const AdlvPoint& pt) { return omega_sign * pt.omega; };

    // class key -> (scale j, point index)
    std::map<std::vector<long long>, std::vector<std::pair<int, int>>> fibers;
    std::map<std::vector<long long>, AdlvPoint> reps;
    for (int i = 0; i < static_cast<int>(gl.points.size()); ++i) {
        const AdlvPoint& pt = gl.points[i];
        const int j = min_entry_valuation(R, pt);
        AdlvPoint base = divide_point(R, pt, j);
        auto key = key_of(R, base);
        fibers[key].emplace_back(j, i);
        reps.emplace(key, base);
    }
    for (auto& [key, members] : fibers) {
        std::sort(members.begin(), members.end());
        const AdlvPoint& base = reps.at(key);
        GRSmith sb = gr_smith(R, point_matrix(R, prm.n, base), 0, false);
        const int jmax = 2 * prm.window - sb.exps.front();
        const long long base_omega = std::accumulate(base.diag.begin(), base.diag.end(), 0LL) - n * prm.window;
        // torsor under the truncated p^Z: scales 0..jmax all present, nothing else
        bool full = static_cast<int>(members.size()) == jmax + 1;
        for (int t = 0; full && t < static_cast<int>(members.size()); ++t)
            if (members[t].first != t) full = false;
        if (!full) {
            rep.torsor_fibers = false;
            rep.problems.push_back("fiber over class with omega " + std::to_string(base_omega) + " is not a full p-orbit");
        }
        std::set<long long> seen;
        for (size_t t = 0; t < members.size(); ++t) {
            const long long w = omega(gl.points[members[t].second]);
            if (t > 0) {
                const long long prev = omega(gl.points[members[t - 1].second]);
                if (members[t].first == members[t - 1].first + 1 && w != prev + n) {
                    rep.omega_equivariant = false;
                    rep.problems.push_back("omega(pM) != omega(M) + n at omega " + std::to_string(prev));
                }
            }
            if ((((w - base_omega) % n) + n) % n != 0) rep.commutes_mod_n = false;
            if (!seen.insert(w).second) rep.unique_lifts = false;
        }
    }
    // independent PGL computation: normalized window lattices with Inv - j(1,...,1) <= mu
    AdlvResult pgl = scan(prm, true, [&](const GaloisRing& RR, const Evaluator& ev, AdlvPoint& pt) {
        if (min_entry_valuation(RR, pt) != 0) return false;
        GRMat M = point_matrix(RR, prm.n, pt);
        if (!ev.in_window(M)) return false;
        pt.inv = ev.inv(M, std::accumulate(pt.diag.begin(), pt.diag.end(), 0));
        long long s_inv = std::accumulate(pt.inv.begin(), pt.inv.end(), 0LL);
        long long s_mu = std::accumulate(prm.mu.begin(), prm.mu.end(), 0LL);
        if ((s_inv - s_mu) % n != 0) return false;
        const int j = static_cast<int>((s_inv - s_mu) / n);
        std::vector<int> shifted = pt.inv;
        for (int& x : shifted) x -= j;
        return relation_holds(shifted, prm.mu, prm.variant);
    });
    rep.pgl_points = static_cast<long long>(pgl.points.size());
    for (const AdlvPoint& pt : pgl.points)
        if (!fibers.count(key_of(R, pt))) {
            rep.surjective = false;
            rep.problems.push_back("PGL point without a GL preimage in the window");
        }
    if (static_cast<long long>(fibers.size()) != rep.pgl_points) {
        rep.surjective = false;
        rep.problems.push_back("class count differs from the PGL enumeration");
    }
    return rep;
}

std::vector<std::vector<int>> adjacency_clusters(const AdlvParams& prm, const AdlvResult& res) {
    const GaloisRing R(prm.p, prm.k, res.precision);
    const int N = static_cast<int>(res.points.size());
    if (N > 4000) throw ResourceError("too many points for the adjacency scan");
    std::vector<int> parent(N);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<GRMat> mats;
    for (const AdlvPoint& pt : res.points) mats.push_back(point_matrix(R, prm.n, pt));
    std::vector<int> step(prm.n, 0);
    step.front() = 1;
    step.back() = -1;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            if (relative_position(R, mats[i], mats[j]) == step) parent[find(i)] = find(j);
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < N; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [r, g] : groups) out.push_back(g);
    return out;
}

std::vector<std::pair<int, int>> act_on_points(const AdlvParams& prm, const AdlvResult& res, const IMat& g) {
    const GaloisRing R(prm.p, prm.k, res.precision);
    std::map<std::vector<long long>, int> index;
    for (int i = 0; i < static_cast<int>(res.points.size()); ++i) index[key_of(R, res.points[i])] = i;
    const GRMat G = to_ring(R, g);
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(res.points.size()); ++i) {
        auto h = hermite(R, gr_mul(R, G, point_matrix(R, prm.n, res.points[i])));
        if (!h) continue;
        auto it = index.find(key_of(R, *h));
        if (it != index.end()) out.emplace_back(i, it->second);
    }
    return out;
}

}  // namespace lsd
