#include "lsd/root_datum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lsd {

std::string family_name(Family f) {
    switch (f) {
        case Family::GL: return "GL";
        case Family::SL: return "SL";
        case Family::PGL: return "PGL";
        case Family::Sp: return "Sp";
        case Family::GSp: return "GSp";
        case Family::SOOdd: return "SO_odd";
        case Family::SOEvenSplit: return "SO_even_split";
        case Family::SOEvenNonsplit: return "SO_even_nonsplit";
        case Family::GSpin: return "GSpin";
    }
    return "?";
}

std::string RootDatum::label() const {
    switch (family) {
        case Family::GL: return "GL_" + std::to_string(size);
        case Family::SL: return "SL_" + std::to_string(size);
        case Family::PGL: return "PGL_" + std::to_string(size);
        case Family::Sp: return "Sp_" + std::to_string(2 * size);
        case Family::GSp: return "GSp_" + std::to_string(2 * size);
        case Family::SOOdd: return "SO_" + std::to_string(2 * size + 1);
        case Family::SOEvenSplit: return "SO_" + std::to_string(2 * size) + "(split)";
        case Family::SOEvenNonsplit: return "SO_" + std::to_string(2 * size) + "(nonsplit)";
        case Family::GSpin:
            switch (flags.orth) {
                case OrthKind::Odd: return "GSpin_" + std::to_string(2 * size + 1);
                case OrthKind::EvenSplit: return "GSpin_" + std::to_string(2 * size) + "(split)";
                case OrthKind::EvenNonsplit: return "GSpin_" + std::to_string(2 * size) + "(nonsplit)";
            }
    }
    return "?";
}

IMat RootDatum::cartan() const {
    IMat A(ns(), ns());
    for (int i = 0; i < ns(); ++i)
        for (int j = 0; j < ns(); ++j) A(i, j) = dot(roots[i], coroots[j]);
    return A;
}

bool RootDatum::phi_trivial() const { return phi == IMat::identity(N); }

namespace {

IVec unit(int N, int i, long long s = 1) {
    IVec v(N, 0);
    v[i] = s;
    return v;
}

IVec diff(int N, int i, int j) {
    IVec v(N, 0);
    v[i] += 1;
    v[j] -= 1;
    return v;
}

// Orbit of the simple (co)roots in simple-coefficient space; keeps the positive half.
std::vector<IVec> positive_coefficient_vectors(const IMat& A, bool dual) {
    const int r = A.r;
    // pairing of the element with coefficients c against the i-th simple (co)root
    auto pair = [&](const IVec& c, int i) {
        long long s = 0;
        for (int j = 0; j < r; ++j) s += c[j] * (dual ? A(i, j) : A(j, i));
        return s;
    };
    std::set<IVec> seen;
    std::vector<IVec> stack;
    for (int i = 0; i < r; ++i) {
        IVec e(r, 0);
        e[i] = 1;
        seen.insert(e);
        stack.push_back(e);
    }
    while (!stack.empty()) {
        IVec c = stack.back();
        stack.pop_back();
        for (int i = 0; i < r; ++i) {
            long long k = pair(c, i);
            if (k == 0) continue;
            IVec d = c;
            d[i] -= k;
            if (seen.insert(d).second) stack.push_back(d);
        }
    }
    std::vector<IVec> pos;
    for (const IVec& c : seen)
        if (std::all_of(c.begin(), c.end(), [](long long x) { return x >= 0; })) pos.push_back(c);
    return pos;
}

void finish(RootDatum& rd) {
    const int r = rd.ns();
    IMat A = rd.cartan();
    rd.pos_roots.clear();
    rd.pos_coroots.clear();
    for (const IVec& c : positive_coefficient_vectors(A, false)) {
        IVec v(rd.N, 0);
        for (int j = 0; j < r; ++j)
            for (int t = 0; t < rd.N; ++t) v[t] += c[j] * rd.roots[j][t];
        rd.pos_roots.push_back(v);
    }
    for (const IVec& c : positive_coefficient_vectors(A, true)) {
        IVec v(rd.N, 0);
        for (int j = 0; j < r; ++j)
            for (int t = 0; t < rd.N; ++t) v[t] += c[j] * rd.coroots[j][t];
        rd.pos_coroots.push_back(v);
    }
    rd.two_rho.assign(rd.N, 0);
    for (const IVec& a : rd.pos_roots)
        for (int t = 0; t < rd.N; ++t) rd.two_rho[t] += a[t];
    rd.rho.resize(rd.N);
    for (int t = 0; t < rd.N; ++t) rd.rho[t] = Q(rd.two_rho[t], 2);

    // induced permutation of simple coroots
    rd.phi_perm.assign(r, -1);
    for (int i = 0; i < r; ++i) {
        IVec img = rd.phi * rd.coroots[i];
        for (int j = 0; j < r; ++j)
            if (img == rd.coroots[j]) rd.phi_perm[i] = j;
        if (rd.phi_perm[i] < 0) throw std::logic_error("Frobenius does not permute simple coroots");
    }
}

}  // namespace

RootDatum build_root_datum(Family f, int size, FormFlags flags) {
    if (size < 1) throw std::invalid_argument("size parameter must be >= 1");
    RootDatum rd;
    rd.family = f;
    rd.size = size;
    rd.flags = flags;
    const int n = size, m = size;
    switch (f) {
        case Family::GL:
            rd.N = n;
            for (int i = 0; i + 1 < n; ++i) {
                rd.roots.push_back(diff(n, i, i + 1));
                rd.coroots.push_back(diff(n, i, i + 1));
            }
            break;
        case Family::SL:
        case Family::PGL: {
            if (n < 2) throw std::invalid_argument("SL/PGL need n >= 2");
            rd.N = n - 1;
            const int r = n - 1;
            for (int i = 0; i < r; ++i) {
                IVec cartan_row(r, 0);
                cartan_row[i] = 2;
                if (i > 0) cartan_row[i - 1] = -1;
                if (i + 1 < r) cartan_row[i + 1] = -1;
                if (f == Family::SL) {
                    // coroot basis
                    rd.coroots.push_back(unit(r, i));
                    rd.roots.push_back(cartan_row);
                } else {
                    // fundamental coweight basis; type A Cartan is symmetric
                    rd.roots.push_back(unit(r, i));
                    rd.coroots.push_back(cartan_row);
                }
            }
            break;
        }
        case Family::Sp:
            rd.N = m;
            for (int i = 0; i + 1 < m; ++i) {
                rd.roots.push_back(diff(m, i, i + 1));
                rd.coroots.push_back(diff(m, i, i + 1));
            }
            rd.roots.push_back(unit(m, m - 1, 2));
            rd.coroots.push_back(unit(m, m - 1));
            break;
        case Family::GSp: {
            rd.N = m + 1;  // (x_1..x_m, c)
            for (int i = 0; i + 1 < m; ++i) {
                rd.roots.push_back(diff(m + 1, i, i + 1));
                rd.coroots.push_back(diff(m + 1, i, i + 1));
            }
            IVec lr(m + 1, 0);
            lr[m - 1] = 2;
            lr[m] = -1;
            rd.roots.push_back(lr);
            rd.coroots.push_back(unit(m + 1, m - 1));
            break;
        }
        case Family::SOOdd:
            rd.N = m;
            for (int i = 0; i + 1 < m; ++i) {
                rd.roots.push_back(diff(m, i, i + 1));
                rd.coroots.push_back(diff(m, i, i + 1));
            }
            rd.roots.push_back(unit(m, m - 1));
            rd.coroots.push_back(unit(m, m - 1, 2));
            break;
        case Family::SOEvenSplit:
        case Family::SOEvenNonsplit: {
            if (m < 2) throw std::invalid_argument("even orthogonal groups need m >= 2");
            rd.N = m;
            for (int i = 0; i + 1 < m; ++i) {
                rd.roots.push_back(diff(m, i, i + 1));
                rd.coroots.push_back(diff(m, i, i + 1));
            }
            IVec s(m, 0);
            s[m - 2] = 1;
            s[m - 1] = 1;
            rd.roots.push_back(s);
            rd.coroots.push_back(s);
            break;
        }
        case Family::GSpin: {
            // coordinates (x_0; x_1..x_m); x_0 is the central direction
            rd.N = m + 1;
            const bool odd = flags.orth == OrthKind::Odd;
            if (!odd && m < 2) throw std::invalid_argument("even GSpin needs m >= 2");
            for (int i = 1; i < m; ++i) {
                rd.roots.push_back(diff(m + 1, i, i + 1));
                rd.coroots.push_back(diff(m + 1, i, i + 1));
            }
            if (odd) {
                rd.roots.push_back(unit(m + 1, m));
                IVec c(m + 1, 0);
                c[m] = 2;
                c[0] = -1;
                rd.coroots.push_back(c);
            } else {
                IVec a(m + 1, 0);
                a[m - 1] = 1;
                a[m] = 1;
                rd.roots.push_back(a);
                IVec c = a;
                c[0] = -1;
                rd.coroots.push_back(c);
            }
            break;
        }
    }
    rd.phi = IMat::identity(rd.N);
    if (f == Family::SOEvenNonsplit) {
        rd.phi(m - 1, m - 1) = -1;
    } else if (f == Family::GSpin && flags.orth == OrthKind::EvenNonsplit) {
        // f_m -> f_0 - f_m
        rd.phi(m, m) = -1;
        rd.phi(0, m) = 1;
    }
    finish(rd);
    return rd;
}

RootDatum orthogonal_datum(int n, bool det_plus) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n % 2 == 1) return build_root_datum(Family::SOOdd, (n + 1) / 2);
    return build_root_datum(det_plus ? Family::SOEvenSplit : Family::SOEvenNonsplit, (n + 2) / 2);
}

RootDatum gspin_datum(int n, bool det_plus) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    FormFlags fl;
    if (n % 2 == 1) {
        fl.orth = OrthKind::Odd;
        return build_root_datum(Family::GSpin, (n + 1) / 2, fl);
    }
    fl.orth = det_plus ? OrthKind::EvenSplit : OrthKind::EvenNonsplit;
    return build_root_datum(Family::GSpin, (n + 2) / 2, fl);
}

IVec orthogonal_mu(const RootDatum& rd) {
    IVec mu(rd.N, 0);
    if (rd.family == Family::GSpin)
        mu[1] = 1;
    else if (rd.family == Family::SOOdd || rd.family == Family::SOEvenSplit || rd.family == Family::SOEvenNonsplit)
        mu[0] = 1;
    else
        throw std::invalid_argument("not an orthogonal datum");
    return mu;
}

bool is_dominant(const RootDatum& rd, const QVec& v) {
    for (const IVec& a : rd.roots)
        if (dot(a, v) < 0) return false;
    return true;
}

Coweight make_coweight(const RootDatum& rd, const QVec& v) {
    if (static_cast<int>(v.size()) != rd.N) throw std::invalid_argument("coweight has wrong length");
    return Coweight{v, is_dominant(rd, v)};
}

std::optional<QVec> coroot_coefficients(const RootDatum& rd, const QVec& v) {
    std::vector<QVec> cols;
    for (const IVec& c : rd.coroots) cols.push_back(to_q(c));
    if (cols.empty()) {
        for (const Q& x : v)
            if (x != 0) return std::nullopt;
        return QVec{};
    }
    return solve_in_span(cols, v);
}

namespace {

bool leq_impl(const RootDatum& rd, const QVec& lower, const QVec& upper, bool allow_integral_rule) {
    if (static_cast<int>(lower.size()) != rd.N || static_cast<int>(upper.size()) != rd.N)
        throw std::invalid_argument("mismatched lattice dimension");
    QVec d(rd.N);
    for (int i = 0; i < rd.N; ++i) d[i] = upper[i] - lower[i];
    auto c = coroot_coefficients(rd, d);
    if (!c) return false;
    const bool integral = allow_integral_rule && is_integral(lower) && is_integral(upper);
    for (const Q& x : *c) {
        if (x < 0) return false;
        if (integral && x.denominator() != 1) return false;
    }
    return true;
}

}  // namespace

bool dominance_leq(const RootDatum& rd, const QVec& lower, const QVec& upper) {
    return leq_impl(rd, lower, upper, true);
}

bool dominance_leq_q(const RootDatum& rd, const QVec& lower, const QVec& upper) {
    return leq_impl(rd, lower, upper, false);
}

QVec galois_average(const RootDatum& rd, const QVec& v) {
    QVec acc = v, cur = v;
    int k = 1;
    for (;;) {
        cur = lsd::apply(rd.phi, cur);
        if (cur == v) break;
        for (int i = 0; i < rd.N; ++i) acc[i] += cur[i];
        ++k;
        if (k > 12) throw std::logic_error("Frobenius of large order");
    }
    for (Q& x : acc) x /= k;
    return acc;
}

IMat reflection_matrix(const RootDatum& rd, int i) {
    IMat s = IMat::identity(rd.N);
    for (int a = 0; a < rd.N; ++a)
        for (int b = 0; b < rd.N; ++b) s(a, b) -= rd.coroots[i][a] * rd.roots[i][b];
    return s;
}

WeylElement weyl_from_word(const RootDatum& rd, const std::vector<int>& word) {
    WeylElement w;
    w.word = word;
    w.matrix = IMat::identity(rd.N);
    for (int i : word) w.matrix = w.matrix * reflection_matrix(rd, i);
    return w;
}

QVec apply(const IMat& w, const QVec& v) {
    QVec out(w.r, Q(0));
    for (int i = 0; i < w.r; ++i)
        for (int j = 0; j < w.c; ++j)
            if (w(i, j) != 0) out[i] += Q(w(i, j)) * v[j];
    return out;
}

IVec apply(const IMat& w, const IVec& v) { return w * v; }

std::vector<IVec> positive_roots(const RootDatum& rd) { return rd.pos_roots; }
std::vector<IVec> positive_coroots(const RootDatum& rd) { return rd.pos_coroots; }

int inversion_count(const RootDatum& rd, const IMat& w) {
    int k = 0;
    for (const IVec& b : rd.pos_coroots)
        if (dot(rd.two_rho, w * b) < 0) ++k;
    return k;
}

DominantRep dominant_representative(const RootDatum& rd, const QVec& nu) {
    QVec v = nu;
    std::vector<int> applied;
    for (;;) {
        int bad = -1;
        for (int i = 0; i < rd.ns(); ++i)
            if (dot(rd.roots[i], v) < 0) {
                bad = i;
                break;
            }
        if (bad < 0) break;
        Q k = dot(rd.roots[bad], v);
        for (int t = 0; t < rd.N; ++t) v[t] -= k * Q(rd.coroots[bad][t]);
        applied.push_back(bad);
    }
    std::vector<int> word(applied.rbegin(), applied.rend());
    return DominantRep{Coweight{v, true}, weyl_from_word(rd, word)};
}

namespace {

IVec regular_point(const RootDatum& rd) {
    IVec x(rd.N, 0);
    for (const IVec& b : rd.pos_coroots)
        for (int t = 0; t < rd.N; ++t) x[t] += b[t];
    return x;
}

IVec reflect(const RootDatum& rd, int i, const IVec& x) {
    IVec y = x;
    long long k = dot(rd.roots[i], x);
    for (int t = 0; t < rd.N; ++t) y[t] -= k * rd.coroots[i][t];
    return y;
}

}  // namespace

std::vector<IVec> weyl_orbit_regular_serial(const RootDatum& rd) {
    std::set<IVec> seen{regular_point(rd)};
    std::vector<IVec> frontier{regular_point(rd)};
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (const IVec& x : frontier)
            for (int i = 0; i < rd.ns(); ++i) {
                IVec y = reflect(rd, i, x);
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        frontier.swap(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<IVec> weyl_orbit_regular(const RootDatum& rd) {
    std::set<IVec> seen{regular_point(rd)};
    std::vector<IVec> frontier{regular_point(rd)};
    while (!frontier.empty()) {
        const long long F = static_cast<long long>(frontier.size());
        std::vector<IVec> cand(static_cast<size_t>(F) * rd.ns());
#pragma omp parallel for schedule(static)
        for (long long f = 0; f < F; ++f)
            for (int i = 0; i < rd.ns(); ++i) cand[static_cast<size_t>(f) * rd.ns() + i] = reflect(rd, i, frontier[f]);
        std::vector<IVec> next;
        for (IVec& y : cand)
            if (seen.insert(y).second) next.push_back(std::move(y));
        frontier.swap(next);
    }
    return {seen.begin(), seen.end()};
}

long long weyl_order_formula(const RootDatum& rd) {
    auto fact = [](long long k) {
        long long r = 1;
        for (long long i = 2; i <= k; ++i) r *= i;
        return r;
    };
    long long total = 1;
    for (const std::string& c : classify_serre_type(rd).components) {
        long long k = std::stoll(c.substr(1));
        switch (c[0]) {
            case 'A': total *= fact(k + 1); break;
            case 'B':
            case 'C': total *= (1LL << k) * fact(k); break;
            case 'D': total *= (1LL << (k - 1)) * fact(k); break;
            default: throw std::logic_error("unexpected Dynkin type");
        }
    }
    return total;
}

// ---------------------------------------------------------------- pi_1

IVec AbGroup::reduce(IVec c) const {
    for (size_t i = 0; i < c.size(); ++i)
        if (orders[i] > 0) {
            c[i] %= orders[i];
            if (c[i] < 0) c[i] += orders[i];
        }
    return c;
}

IVec AbGroup::coords(const IVec& ambient) const { return reduce(proj * ambient); }

bool AbGroup::is_zero(const IVec& ambient) const {
    IVec c = coords(ambient);
    return std::all_of(c.begin(), c.end(), [](long long x) { return x == 0; });
}

std::string AbGroup::describe() const {
    if (orders.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < orders.size(); ++i) {
        if (i) s += " x ";
        s += orders[i] == 0 ? "Z" : "Z/" + std::to_string(orders[i]);
    }
    return s;
}

int AbGroup::free_rank() const {
    return static_cast<int>(std::count(orders.begin(), orders.end(), 0LL));
}

long long AbGroup::torsion_size() const {
    long long t = 1;
    for (long long o : orders)
        if (o > 0) t *= o;
    return t;
}

AbGroup quotient_group(int N, const std::vector<IVec>& relations) {
    IMat R = IMat::from_columns(N, relations);
    SmithResult s = smith(R);
    IMat Uinv = inverse_unimodular(s.U);
    AbGroup g;
    std::vector<int> keep;
    for (int i = 0; i < N; ++i) {
        long long d = i < static_cast<int>(s.diag.size()) ? s.diag[i] : 0;
        if (d == 1) continue;
        keep.push_back(i);
        g.orders.push_back(d);
    }
    g.proj = IMat(static_cast<int>(keep.size()), N);
    g.lift = IMat(N, static_cast<int>(keep.size()));
    for (size_t k = 0; k < keep.size(); ++k)
        for (int t = 0; t < N; ++t) {
            g.proj(static_cast<int>(k), t) = s.U(keep[k], t);
            g.lift(t, static_cast<int>(k)) = Uinv(t, keep[k]);
        }
    return g;
}

AbGroup FinAbGroupWithAction::group() const { return quotient_group(N, relations); }

AbGroup FinAbGroupWithAction::coinvariants() const {
    std::vector<IVec> rel = relations;
    for (int j = 0; j < N; ++j) {
        IVec col = action.column(j);
        col[j] -= 1;
        rel.push_back(col);
    }
    return quotient_group(N, rel);
}

FinAbGroupWithAction::Fixed FinAbGroupWithAction::invariants() const {
    IMat AmI = action;
    for (int i = 0; i < N; ++i) AmI(i, i) -= 1;
    IMat R = IMat::from_columns(N, relations);
    IMat negR = R;
    for (long long& x : negR.a) x = -x;
    IMat K = integer_kernel(hconcat(AmI, negR));
    std::vector<IVec> gens;
    for (int j = 0; j < K.c; ++j) {
        IVec x(N);
        for (int t = 0; t < N; ++t) x[t] = K(t, j);
        if (std::any_of(x.begin(), x.end(), [](long long v) { return v != 0; })) gens.push_back(x);
    }
    Fixed out;
    out.generators = gens;
    const int s = static_cast<int>(gens.size());
    if (s == 0) {
        out.structure = quotient_group(0, {});
        return out;
    }
    // structure of span(gens) / (span(gens) cap span(R))
    IMat B = IMat::from_columns(N, gens);
    IMat L = integer_kernel(hconcat(B, negR));
    std::vector<IVec> rel;
    for (int j = 0; j < L.c; ++j) {
        IVec y(s);
        for (int t = 0; t < s; ++t) y[t] = L(t, j);
        rel.push_back(y);
    }
    out.structure = quotient_group(s, rel);
    return out;
}

bool FinAbGroupWithAction::action_well_defined() const {
    IMat R = IMat::from_columns(N, relations);
    for (const IVec& r : relations)
        if (!solve_integer(R, action * r)) return false;
    return action_order() > 0;
}

int FinAbGroupWithAction::action_order() const {
    IMat p = action;
    for (int k = 1; k <= 12; ++k) {
        if (p == IMat::identity(N)) return k;
        p = p * action;
    }
    return 0;
}

FinAbGroupWithAction pi1(const RootDatum& rd) { return pi1_levi(rd, (1u << rd.ns()) - 1); }

FinAbGroupWithAction pi1_levi(const RootDatum& rd, unsigned J) {
    FinAbGroupWithAction g;
    g.N = rd.N;
    for (int i = 0; i < rd.ns(); ++i)
        if (J >> i & 1u) g.relations.push_back(rd.coroots[i]);
    g.action = rd.phi;
    return g;
}

bool surjective_on_invariants(const FinAbGroupWithAction& src, const FinAbGroupWithAction& dst, const IMat& f) {
    std::vector<IVec> cols;
    for (const IVec& g : src.invariants().generators) cols.push_back(f * g);
    for (const IVec& r : dst.relations) cols.push_back(r);
    IMat M = IMat::from_columns(dst.N, cols);
    for (const IVec& h : dst.invariants().generators)
        if (!solve_integer(M, h)) return false;
    return true;
}

SerreType classify_serre_type(const RootDatum& rd) {
    const int r = rd.ns();
    IMat A = rd.cartan();
    std::vector<int> comp(r, -1);
    int nc = 0;
    for (int s = 0; s < r; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> st{s};
        comp[s] = nc;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int u = 0; u < r; ++u)
                if (u != v && A(v, u) != 0 && comp[u] < 0) {
                    comp[u] = nc;
                    st.push_back(u);
                }
        }
        ++nc;
    }
    SerreType out;
    out.abelian_eligible = true;
    for (int c = 0; c < nc; ++c) {
        std::vector<int> nodes;
        for (int i = 0; i < r; ++i)
            if (comp[i] == c) nodes.push_back(i);
        const int k = static_cast<int>(nodes.size());
        int longi = -1, shorti = -1;
        int maxdeg = 0;
        std::map<int, int> deg;
        for (int i : nodes)
            for (int j : nodes) {
                if (i == j || A(i, j) == 0) continue;
                ++deg[i];
                if (A(i, j) == -2) {
                    longi = i;
                    shorti = j;
                }
                if (A(i, j) <= -3) {
                    out.abelian_eligible = false;
                    out.components.push_back("G2");
                    goto next;
                }
            }
        for (auto& [i, d] : deg) maxdeg = std::max(maxdeg, d);
        if (longi < 0) {
            out.components.push_back((maxdeg >= 3 ? "D" : "A") + std::to_string(k));
        } else if (k == 2) {
            out.components.push_back((shorti > longi ? "B" : "C") + std::to_string(k));
        } else {
            out.components.push_back((deg[shorti] == 1 ? "B" : "C") + std::to_string(k));
        }
    next:;
    }
    std::sort(out.components.begin(), out.components.end());
    return out;
}

}  // namespace lsd
