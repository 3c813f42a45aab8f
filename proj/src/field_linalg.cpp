#include "lsd/field_linalg.hpp"

namespace lsd {

namespace {

void require_field(const GaloisRing& F) {
    if (F.m() != 1) throw std::invalid_argument("field linear algebra needs precision 1");
}

}  // namespace

GRMat field_rref(const GaloisRing& F, GRMat rows) {
    require_field(F);
    if (rows.empty()) return rows;
    const int cols = static_cast<int>(rows.front().size());
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (!F.is_zero(rows[i][c])) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        const GRElem inv = F.inverse(rows[r][c]);
        for (GRElem& e : rows[r]) e = F.mul(e, inv);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || F.is_zero(rows[i][c])) continue;
            const GRElem f = rows[i][c];
            for (int j = 0; j < cols; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

int field_rank(const GaloisRing& F, const GRMat& rows) { return static_cast<int>(field_rref(F, rows).size()); }

GRMat field_kernel(const GaloisRing& F, const GRMat& M, int cols) {
    GRMat E = field_rref(F, M);
    std::vector<int> pivot_col;
    for (const GRVec& row : E) {
        int c = 0;
        while (F.is_zero(row[c])) ++c;
        pivot_col.push_back(c);
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    GRMat basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        GRVec v(cols, F.zero());
        v[free] = F.one();
        for (size_t i = 0; i < E.size(); ++i) v[pivot_col[i]] = F.neg(E[i][free]);
        basis.push_back(v);
    }
    return basis;
}

GRMat field_sum(const GaloisRing& F, const GRMat& a, const GRMat& b) {
    GRMat all = a;
    all.insert(all.end(), b.begin(), b.end());
    return field_rref(F, all);
}

int field_intersection_dim(const GaloisRing& F, const GRMat& a, const GRMat& b) {
    return field_rank(F, a) + field_rank(F, b) - static_cast<int>(field_sum(F, a, b).size());
}

GRElem field_dot(const GaloisRing& F, const GRVec& x, const GRVec& y) {
    GRElem acc = F.zero();
    for (size_t i = 0; i < x.size(); ++i) acc = F.add(acc, F.mul(x[i], y[i]));
    return acc;
}

GRVec field_frob(const GaloisRing& F, const GRVec& v) {
    GRVec out;
    out.reserve(v.size());
    for (const GRElem& e : v) out.push_back(F.frob(e));
    return out;
}

}  // namespace lsd
