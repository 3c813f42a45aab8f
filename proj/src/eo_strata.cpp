#include "lsd/eo_strata.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace lsd {

namespace {

bool is_orth_family(const RootDatum& rd) {
    return rd.family == Family::SOOdd || rd.family == Family::SOEvenSplit || rd.family == Family::SOEvenNonsplit ||
           rd.family == Family::GSpin;
}

bool is_odd_orth(const RootDatum& rd) {
    return rd.family == Family::SOOdd || (rd.family == Family::GSpin && rd.flags.orth == OrthKind::Odd);
}

bool is_split_even(const RootDatum& rd) {
    return rd.family == Family::SOEvenSplit || (rd.family == Family::GSpin && rd.flags.orth == OrthKind::EvenSplit);
}

IVec reflect_vec(const RootDatum& rd, int i, const IVec& x) {
    IVec y = x;
    long long c = dot(rd.roots[i], x);
    for (int t = 0; t < rd.N; ++t) y[t] -= c * rd.coroots[i][t];
    return y;
}

IMat element(const RootDatum& rd, const std::vector<int>& word) { return weyl_from_word(rd, word).matrix; }

// Orthogonal coordinates of a coweight (drops the central direction for GSpin).
QVec orth_part(const RootDatum& rd, const QVec& v) {
    if (rd.family == Family::GSpin) return QVec(v.begin() + 1, v.end());
    return v;
}

std::string prime(int k) { return std::to_string(k) + "'"; }

void check_quad(const EOContext& ctx, const QuadSpaceData& q) {
    if (!ctx.orthogonal) throw std::invalid_argument("context is not orthogonal");
    const RootDatum& rd = *ctx.rd;
    if (q.n % 2 == 1) {
        if (!ctx.odd || q.n != 2 * ctx.m - 1) throw std::invalid_argument("quadratic space does not match the group");
    } else {
        if (ctx.odd || q.n != 2 * ctx.m - 2 || q.det_plus != is_split_even(rd))
            throw std::invalid_argument("quadratic space does not match the group");
    }
}

}  // namespace

EOContext make_eo_context(const RootDatum& rd, const IVec& mu) {
    if (static_cast<int>(mu.size()) != rd.N || !is_dominant(rd, to_q(mu)))
        throw std::invalid_argument("mu must be a dominant coweight");
    EOContext ctx;
    ctx.rd = &rd;
    ctx.mu = mu;
    for (int i = 0; i < rd.ns(); ++i)
        if (dot(rd.roots[i], mu) == 0) ctx.J |= 1u << i;
    ctx.orthogonal = is_orth_family(rd) && mu == orthogonal_mu(rd);
    ctx.m = rd.size;
    ctx.odd = is_odd_orth(rd);
    return ctx;
}

std::vector<CosetRep> enumerate_jw(const EOContext& ctx) {
    const RootDatum& rd = *ctx.rd;
    std::vector<CosetRep> out;
    std::set<IVec> seen{ctx.mu};
    std::deque<CosetRep> queue;
    queue.push_back({{}, 0, "", ctx.mu});
    while (!queue.empty()) {
        CosetRep cur = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < rd.ns(); ++i) {
            if (dot(rd.roots[i], cur.lambda) <= 0) continue;
            IVec nl = reflect_vec(rd, i, cur.lambda);
            if (!seen.insert(nl).second) continue;
            CosetRep nxt{cur.word, cur.length + 1, "", nl};
            nxt.word.push_back(i);
            queue.push_back(std::move(nxt));
        }
        out.push_back(std::move(cur));
    }
    // labels by length
    std::map<int, std::vector<int>> by_len;
    for (int k = 0; k < static_cast<int>(out.size()); ++k) by_len[out[k].length].push_back(k);
    for (auto& [len, ks] : by_len) {
        if (ks.size() == 1) {
            out[ks[0]].label = std::to_string(len);
        } else if (ctx.orthogonal && !ctx.odd && ks.size() == 2 && len == ctx.m - 1) {
            for (int k : ks) out[k].label = out[k].lambda.back() > 0 ? std::to_string(len) : prime(len);
        } else {
            for (size_t t = 0; t < ks.size(); ++t) out[ks[t]].label = std::to_string(len) + "." + std::to_string(t);
        }
    }
    std::sort(out.begin(), out.end(), [](const CosetRep& a, const CosetRep& b) {
        return a.length != b.length ? a.length < b.length : a.label < b.label;
    });
    return out;
}

bool bruhat_leq(const RootDatum& rd, const std::vector<int>& u, const std::vector<int>& w) {
    IMat U = element(rd, u);
    std::set<IVec> pos(rd.pos_coroots.begin(), rd.pos_coroots.end());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        // us < u iff u sends alpha_s^vee negative
        IVec img = U * rd.coroots[*it];
        if (!pos.count(img)) U = U * reflection_matrix(rd, *it);
    }
    return U == IMat::identity(rd.N);
}

std::vector<std::pair<int, int>> bruhat_covers(const RootDatum& rd, const std::vector<CosetRep>& reps) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(reps.size()); ++i)
        for (int j = 0; j < static_cast<int>(reps.size()); ++j)
            if (reps[j].length == reps[i].length + 1 && bruhat_leq(rd, reps[i].word, reps[j].word))
                out.emplace_back(i, j);
    return out;
}

bool is_reduced(const RootDatum& rd, const std::vector<int>& word) {
    return inversion_count(rd, element(rd, word)) == static_cast<int>(word.size());
}

bool same_element(const RootDatum& rd, const std::vector<int>& a, const std::vector<int>& b) {
    return element(rd, a) == element(rd, b);
}

bool is_min_coset_rep(const RootDatum& rd, unsigned J, const std::vector<int>& word) {
    const IMat w = element(rd, word);
    const int len = inversion_count(rd, w);
    const IMat id = IMat::identity(rd.N);
    std::set<IMat> group{id};
    std::vector<IMat> frontier{id};
    while (!frontier.empty()) {
        std::vector<IMat> next;
        for (const IMat& x : frontier)
            for (int i = 0; i < rd.ns(); ++i) {
                if (!(J >> i & 1u)) continue;
                IMat y = reflection_matrix(rd, i) * x;
                if (group.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    for (const IMat& x : group) {
        if (x == id) continue;
        if (inversion_count(rd, x * w) <= len) return false;
    }
    return true;
}

int tmax(const QuadSpaceData& q) {
    if (q.n < 1) throw std::invalid_argument("n must be >= 1");
    if (q.n % 2 == 1) return q.n + 1;
    return q.det_plus ? q.n : q.n + 2;
}

std::vector<int> vertex_types(const QuadSpaceData& q) {
    std::vector<int> out;
    for (int t = 2; t <= tmax(q); t += 2) out.push_back(t);
    return out;
}

std::map<std::string, std::vector<int>> orthogonal_words(const EOContext& ctx) {
    if (!ctx.orthogonal) throw std::invalid_argument("context is not orthogonal");
    const int m = ctx.m;
    std::map<std::string, std::vector<int>> out;
    auto prefix = [](int len) {
        std::vector<int> w;
        for (int k = 0; k < len; ++k) w.push_back(k);
        return w;
    };
    for (int i = 0; i <= m; ++i) out[std::to_string(i)] = prefix(i);
    if (ctx.odd) {
        for (int i = m + 1; i <= 2 * m - 1; ++i) {
            std::vector<int> w = prefix(m);
            for (int k = m - 2; k >= 2 * m - i - 1; --k) w.push_back(k);
            out[std::to_string(i)] = w;
        }
    } else {
        for (int i = m + 1; i <= 2 * m - 2; ++i) {
            std::vector<int> w = prefix(m);
            for (int k = m - 3; k >= 2 * m - 2 - i; --k) w.push_back(k);
            out[std::to_string(i)] = w;
        }
        std::vector<int> w = prefix(m - 2);
        w.push_back(m - 1);
        out[prime(m - 1)] = w;
    }
    return out;
}

std::vector<std::string> jw_b_subset(const EOContext& ctx, const QuadSpaceData& q, const BGMu& table, int cls) {
    check_quad(ctx, q);
    const RootDatum& rd = *ctx.rd;
    if (cls < 0 || cls >= static_cast<int>(table.classes.size())) throw std::out_of_range("class index");
    if (!fully_hn_decomposable(rd, ctx.mu, table).decomposable)
        throw std::invalid_argument("datum is not fully Hodge-Newton decomposable");
    const int m = ctx.m;
    const SigmaConjClass& b = table.classes[cls];
    std::vector<std::string> out;
    if (b.basic) {
        if (!ctx.odd && !q.det_plus) {
            out.push_back(std::to_string(m - 1));
            out.push_back(prime(m - 1));
        }
        const int top = ctx.odd ? 2 * m - 1 : 2 * m - 2;
        for (int i = m; i <= top; ++i) out.push_back(std::to_string(i));
        return out;
    }
    QVec x = orth_part(rd, b.nu);
    int h = 0;
    for (const Q& v : x)
        if (v != 0) ++h;
    for (const Q& v : x)
        if (v != 0 && v != Q(1, h) && v != Q(-1, h)) throw std::logic_error("unexpected Newton point for the orthogonal datum");
    if (!ctx.odd && h == m && x.back() < 0)
        out.push_back(prime(h - 1));
    else
        out.push_back(std::to_string(h - 1));
    return out;
}

std::vector<HPEntry> eo_hp_correspondence(const EOContext& ctx, const QuadSpaceData& q) {
    check_quad(ctx, q);
    const int m = ctx.m, n = q.n;
    std::vector<HPEntry> out;
    if (!ctx.odd && !q.det_plus) out.push_back({{std::to_string(m - 1), prime(m - 1)}, 2 * m});
    const int top = ctx.odd ? 2 * m - 1 : 2 * m - 2;
    for (int i = m; i <= top; ++i) out.push_back({{std::to_string(i)}, 2 * (n - i + 1)});
    std::vector<int> img;
    for (const HPEntry& e : out) img.push_back(e.type);
    std::sort(img.begin(), img.end());
    if (img != vertex_types(q)) throw std::logic_error("EO-HP image differs from the vertex-lattice types");
    return out;
}

int hp_type(const EOContext& ctx, const QuadSpaceData& q, const std::string& label) {
    for (const HPEntry& e : eo_hp_correspondence(ctx, q))
        for (const std::string& l : e.labels)
            if (l == label) return e.type;
    throw std::out_of_range("label " + label + " is not in the basic EO set");
}

K3Dictionary k3_dictionary() {
    const int n = 19;
    static const RootDatum rd = orthogonal_datum(n, true);
    const IVec mu = orthogonal_mu(rd);
    const BGMu table = enumerate_bgmu(rd, mu);
    const EOContext ctx = make_eo_context(rd, mu);
    const QuadSpaceData q{n, true, -1};
    const std::vector<CosetRep> reps = enumerate_jw(ctx);
    auto fail = [](const std::string& msg) { throw std::logic_error("K3 dictionary: " + msg); };
    if (table.classes.size() != 11) fail("expected 11 Newton classes");
    if (reps.size() != 20) fail("expected 20 EO labels");

    K3Dictionary d;
    std::map<std::string, int> height_of_label;
    for (int j = 0; j < static_cast<int>(table.classes.size()); ++j) {
        const SigmaConjClass& b = table.classes[j];
        K3NewtonRow row;
        row.class_index = j;
        row.dim = rz_dimension(rd, mu, b);
        // weights of the 21-dimensional representation, shifted by 1
        std::map<Q, int> mult;
        for (const Q& v : b.nu) {
            ++mult[Q(1) + v];
            ++mult[Q(1) - v];
        }
        ++mult[Q(1)];
        for (auto& [s, k] : mult) row.slopes.emplace_back(s, k);
        if (!b.basic) {
            int h = 0;
            for (const Q& v : b.nu)
                if (v != 0) ++h;
            row.height = h;
            std::vector<std::pair<Q, int>> want{{Q(1) - Q(1, h), h}, {Q(1), 21 - 2 * h}, {Q(1) + Q(1, h), h}};
            if (row.slopes != want) fail("slope triple mismatch at height " + std::to_string(h));
            std::vector<std::string> s = jw_b_subset(ctx, q, table, j);
            if (s.size() != 1) fail("non-basic EO set is not a singleton");
            height_of_label[s[0]] = h;
        } else {
            if (row.slopes != std::vector<std::pair<Q, int>>{{Q(1), 21}}) fail("supersingular slopes");
            if (jw_b_subset(ctx, q, table, j).size() != 10) fail("expected 10 basic EO labels");
        }
        d.newton.push_back(std::move(row));
    }
    for (int i = 1; i <= 20; ++i) {
        K3EORow row;
        row.index = i;
        row.label = std::to_string(i - 1);
        auto it = std::find_if(reps.begin(), reps.end(), [&](const CosetRep& r) { return r.label == row.label; });
        if (it == reps.end()) fail("missing EO label " + row.label);
        row.length = it->length;
        if (i <= 10) {
            auto h = height_of_label.find(row.label);
            if (h == height_of_label.end() || h->second != i) fail("EO label " + row.label + " not paired with height " + std::to_string(i));
            row.height = h->second;
        } else {
            row.artin = 21 - i;
            row.vertex_type = hp_type(ctx, q, row.label);
            if (*row.vertex_type / 2 != *row.artin) fail("Artin invariant differs from half the vertex type");
        }
        d.eo.push_back(std::move(row));
    }
    return d;
}

}  // namespace lsd
