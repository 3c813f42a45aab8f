#include "lsd/dl_count.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <stdexcept>

#include "lsd/field_linalg.hpp"

namespace lsd {

namespace {

using Perm = std::vector<int>;

struct WeylTable {
    std::vector<Perm> perms;
    std::vector<std::string> words;
};

// BFS over right multiplication by the simple reflections; first shortest word wins.
WeylTable weyl_table(DlGroup g) {
    std::vector<Perm> gens;
    int n = 0;
    if (g == DlGroup::PGL2) {
        n = 2;
        gens = {{1, 0}};
    } else {
        n = 5;
        gens = {{1, 0, 2, 4, 3}, {0, 3, 2, 1, 4}};
    }
    Perm id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    WeylTable t;
    std::map<Perm, std::string> seen{{id, ""}};
    std::deque<Perm> queue{id};
    t.perms.push_back(id);
    t.words.push_back("");
    while (!queue.empty()) {
        Perm w = queue.front();
        queue.pop_front();
        for (size_t s = 0; s < gens.size(); ++s) {
            Perm ws(n);
            for (int i = 0; i < n; ++i) ws[i] = w[gens[s][i]];
            if (seen.count(ws)) continue;
            seen[ws] = seen[w] + std::to_string(s + 1);
            t.perms.push_back(ws);
            t.words.push_back(seen[ws]);
            queue.push_back(ws);
        }
    }
    return t;
}

// A full flag as a chain of subspaces V_1 < ... < V_{n-1}, each in reduced echelon form.
using Flag = std::vector<GRMat>;

long long expected_flags(DlGroup g, long long Q) {
    if (g == DlGroup::PGL2) return Q + 1;
    return (Q + 1) * (Q + 1) * (Q * Q + 1);
}

GRMat form_matrix(const GaloisRing& F) {
    GRMat G(5, GRVec(5, F.zero()));
    G[0][4] = G[4][0] = F.one();
    G[1][3] = G[3][1] = F.one();
    G[2][2] = F.from_int(2);
    return G;
}

GRElem quad(const GaloisRing& F, const GRVec& x) {
    return F.add(F.add(F.mul(x[0], x[4]), F.mul(x[1], x[3])), F.mul(x[2], x[2]));
}

GRMat perp(const GaloisRing& F, const GRMat& G, const GRMat& S) {
    GRMat eqs;
    for (const GRVec& s : S) {
        GRVec row(5, F.zero());
        for (int j = 0; j < 5; ++j)
            for (int i = 0; i < 5; ++i) row[j] = F.add(row[j], F.mul(s[i], G[i][j]));
        eqs.push_back(row);
    }
    return field_rref(F, field_kernel(F, eqs, 5));
}

Flag complete_so5(const GaloisRing& F, const GRMat& G, const GRVec& v, const GRVec& w) {
    GRMat line = field_rref(F, {v});
    GRMat plane = field_rref(F, {v, w});
    return {line, plane, perp(F, G, plane), perp(F, G, line)};
}

// Vectors with first nonzero coordinate 1, one per line in F^dim.
std::vector<GRVec> projective_points(const GaloisRing& F, int dim) {
    const std::vector<GRElem> elems = F.residues(1);
    std::vector<GRVec> out;
    for (int lead = 0; lead < dim; ++lead) {
        const int free = dim - lead - 1;
        long long total = 1;
        for (int i = 0; i < free; ++i) total *= static_cast<long long>(elems.size());
        for (long long idx = 0; idx < total; ++idx) {
            GRVec v(dim, F.zero());
            v[lead] = F.one();
            long long r = idx;
            for (int i = lead + 1; i < dim; ++i) {
                v[i] = elems[r % elems.size()];
                r /= static_cast<long long>(elems.size());
            }
            out.push_back(v);
        }
    }
    return out;
}

std::vector<Flag> enumerate_flags(DlGroup g, const GaloisRing& F) {
    std::vector<Flag> flags;
    if (g == DlGroup::PGL2) {
        for (const GRVec& v : projective_points(F, 2)) flags.push_back({GRMat{v}});
        return flags;
    }
    const GRMat G = form_matrix(F);
    for (const GRVec& v : projective_points(F, 5)) {
        if (!F.is_zero(quad(F, v))) continue;
        const GRMat lperp = perp(F, G, {v});
        // complement of the line inside its perp
        GRMat comp, span{v};
        for (const GRVec& c : lperp) {
            GRMat trial = span;
            trial.push_back(c);
            if (field_rank(F, trial) > static_cast<int>(span.size())) {
                span = trial;
                comp.push_back(c);
            }
        }
        for (const GRVec& coeffs : projective_points(F, static_cast<int>(comp.size()))) {
            GRVec w(5, F.zero());
            for (size_t i = 0; i < comp.size(); ++i)
                for (int j = 0; j < 5; ++j) w[j] = F.add(w[j], F.mul(coeffs[i], comp[i][j]));
            if (F.is_zero(quad(F, w))) flags.push_back(complete_so5(F, G, v, w));
        }
    }
    return flags;
}

Flag frobenius(DlGroup g, const GaloisRing& F, const Flag& fl) {
    if (g == DlGroup::PGL2) return {GRMat{field_frob(F, fl[0][0])}};
    const GRMat G = form_matrix(F);
    const GRVec v = field_frob(F, fl[0][0]);
    // second basis vector of the plane not on the line
    GRVec w;
    for (const GRVec& c : fl[1])
        if (field_rank(F, {v, field_frob(F, c)}) == 2) {
            w = field_frob(F, c);
            break;
        }
    return complete_so5(F, G, v, w);
}

Perm relative_position(const GaloisRing& F, const Flag& a, const Flag& b, int n) {
    // dims[i][j] = dim(V_i cap V'_j), with V_0 = 0 and V_n the whole space
    std::vector<std::vector<int>> dims(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == n) dims[i][j] = j;
            else if (j == n) dims[i][j] = i;
            else dims[i][j] = field_intersection_dim(F, a[i - 1], b[j - 1]);
        }
    Perm pi(n);
    for (int i = 1; i <= n; ++i) {
        int j = 1;
        while (dims[i][j] == dims[i - 1][j]) ++j;
        pi[i - 1] = j - 1;
    }
    return pi;
}

void check_size(DlGroup g, long long q, int d) {
    if (q != 2 && q != 3 && q != 5) throw std::invalid_argument("q must be a prime <= 5");
    if (d < 1) throw std::invalid_argument("d must be positive");
    long long Q = 1;
    for (int i = 0; i < d; ++i) {
        Q *= q;
        if (Q > 81) throw ResourceError("field size q^d exceeds 81");
    }
    if (expected_flags(g, Q) > 1'000'000) throw ResourceError("flag variety exceeds 10^6 points");
}

DlTable run(DlGroup g, long long q, int d, bool parallel) {
    check_size(g, q, d);
    const WeylTable wt = weyl_table(g);
    const int n = static_cast<int>(wt.perms.front().size());
    const GaloisRing F(q, d, 1);
    const std::vector<Flag> flags = enumerate_flags(g, F);
    std::map<Perm, int> index;
    for (size_t i = 0; i < wt.perms.size(); ++i) index[wt.perms[i]] = static_cast<int>(i);

    std::vector<long long> counts(wt.perms.size(), 0);
    bool outside = false;
    const long long N = static_cast<long long>(flags.size());
    auto classify = [&](long long i, std::vector<long long>& acc, bool& bad) {
        const Perm pi = relative_position(F, flags[i], frobenius(g, F, flags[i]), n);
        auto it = index.find(pi);
        if (it == index.end()) bad = true;
        else ++acc[it->second];
    };
    if (parallel) {
#pragma omp parallel
        {
            std::vector<long long> local(counts.size(), 0);
            bool bad = false;
#pragma omp for schedule(dynamic, 16)
            for (long long i = 0; i < N; ++i) classify(i, local, bad);
#pragma omp critical
            {
                for (size_t w = 0; w < counts.size(); ++w) counts[w] += local[w];
                outside = outside || bad;
            }
        }
    } else {
        for (long long i = 0; i < N; ++i) classify(i, counts, outside);
    }
    if (outside) throw std::logic_error("relative position outside the Weyl group");

    DlTable t;
    t.q = q;
    t.d = d;
    t.total_flags = N;
    t.rational_flags = static_cast<long long>(enumerate_flags(g, GaloisRing(q, 1, 1)).size());
    for (size_t w = 0; w < wt.perms.size(); ++w) t.entries.push_back({wt.words[w], counts[w]});
    std::stable_sort(t.entries.begin(), t.entries.end(), [](const DlEntry& x, const DlEntry& y) {
        return x.word.size() != y.word.size() ? x.word.size() < y.word.size() : x.word < y.word;
    });
    return t;
}

}  // namespace

DlTable dl_table(DlGroup g, long long q, int d) { return run(g, q, d, true); }
DlTable dl_table_serial(DlGroup g, long long q, int d) { return run(g, q, d, false); }

std::vector<std::string> dl_weyl_words(DlGroup g) { return weyl_table(g).words; }

long long count_dl_variety(DlGroup g, const std::vector<int>& word, long long q, int d) {
    const WeylTable wt = weyl_table(g);
    const int rank = g == DlGroup::PGL2 ? 1 : 2;
    Perm w = wt.perms.front();
    for (int s : word) {
        if (s < 1 || s > rank) throw std::invalid_argument("simple reflection index out of range");
        Perm gen = wt.perms[s];  // BFS lists the simple reflections right after the identity
        Perm ws(w.size());
        for (size_t i = 0; i < w.size(); ++i) ws[i] = w[gen[i]];
        w = ws;
    }
    const auto it = std::find(wt.perms.begin(), wt.perms.end(), w);
    const std::string target = wt.words[it - wt.perms.begin()];
    for (const DlEntry& e : dl_table(g, q, d).entries)
        if (e.word == target) return e.count;
    throw std::logic_error("Weyl element missing from the table");
}

}  // namespace lsd
