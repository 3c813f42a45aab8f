#include "lsd/intlin.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace lsd {

IMat IMat::identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IMat IMat::from_columns(int rows, const std::vector<IVec>& cols) {
    IMat m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.c; ++j) {
        if (static_cast<int>(cols[j].size()) != rows) throw std::invalid_argument("column length mismatch");
        for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

IMat IMat::from_rows(const std::vector<IVec>& rws, int cols) {
    IMat m(static_cast<int>(rws.size()), cols);
    for (int i = 0; i < m.r; ++i) {
        if (static_cast<int>(rws[i].size()) != cols) throw std::invalid_argument("row length mismatch");
        for (int j = 0; j < cols; ++j) m(i, j) = rws[i][j];
    }
    return m;
}

IVec IMat::column(int j) const {
    IVec v(r);
    for (int i = 0; i < r; ++i) v[i] = (*this)(i, j);
    return v;
}

IVec IMat::row(int i) const {
    IVec v(c);
    for (int j = 0; j < c; ++j) v[j] = (*this)(i, j);
    return v;
}

IMat operator*(const IMat& x, const IMat& y) {
    if (x.c != y.r) throw std::invalid_argument("matrix shape mismatch");
    IMat z(x.r, y.c);
    for (int i = 0; i < x.r; ++i)
        for (int k = 0; k < x.c; ++k) {
            long long s = x(i, k);
            if (s == 0) continue;
            for (int j = 0; j < y.c; ++j) z(i, j) += s * y(k, j);
        }
    return z;
}

IVec operator*(const IMat& x, const IVec& v) {
    if (x.c != static_cast<int>(v.size())) throw std::invalid_argument("matrix/vector shape mismatch");
    IVec out(x.r, 0);
    for (int i = 0; i < x.r; ++i)
        for (int j = 0; j < x.c; ++j) out[i] += x(i, j) * v[j];
    return out;
}

IMat transpose(const IMat& x) {
    IMat t(x.c, x.r);
    for (int i = 0; i < x.r; ++i)
        for (int j = 0; j < x.c; ++j) t(j, i) = x(i, j);
    return t;
}

IMat hconcat(const IMat& x, const IMat& y) {
    if (x.r != y.r) throw std::invalid_argument("hconcat row mismatch");
    IMat z(x.r, x.c + y.c);
    for (int i = 0; i < x.r; ++i) {
        for (int j = 0; j < x.c; ++j) z(i, j) = x(i, j);
        for (int j = 0; j < y.c; ++j) z(i, x.c + j) = y(i, j);
    }
    return z;
}

namespace {

void swap_rows(IMat& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.c; ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IMat& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.r; ++i) std::swap(m(i, a), m(i, b));
}
// row a += f * row b
void add_row(IMat& m, int a, int b, long long f) {
    for (int j = 0; j < m.c; ++j) m(a, j) += f * m(b, j);
}
void add_col(IMat& m, int a, int b, long long f) {
    for (int i = 0; i < m.r; ++i) m(i, a) += f * m(i, b);
}
void neg_row(IMat& m, int a) {
    for (int j = 0; j < m.c; ++j) m(a, j) = -m(a, j);
}

long long floordiv(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

SmithResult smith(const IMat& A) {
    SmithResult res;
    IMat D = A;
    IMat U = IMat::identity(A.r);
    IMat V = IMat::identity(A.c);
    const int n = std::min(A.r, A.c);
    for (int t = 0; t < n; ++t) {
        for (;;) {
            // smallest nonzero pivot in the trailing block
            int pi = -1, pj = -1;
            long long best = 0;
            for (int i = t; i < D.r; ++i)
                for (int j = t; j < D.c; ++j)
                    if (D(i, j) != 0 && (pi < 0 || std::llabs(D(i, j)) < best)) {
                        best = std::llabs(D(i, j));
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) goto done;
            swap_rows(D, t, pi);
            swap_rows(U, t, pi);
            swap_cols(D, t, pj);
            swap_cols(V, t, pj);
            bool clean = true;
            for (int i = t + 1; i < D.r; ++i) {
                if (D(i, t) == 0) continue;
                long long f = floordiv(D(i, t), D(t, t));
                add_row(D, i, t, -f);
                add_row(U, i, t, -f);
                if (D(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < D.c; ++j) {
                if (D(t, j) == 0) continue;
                long long f = floordiv(D(t, j), D(t, t));
                add_col(D, j, t, -f);
                add_col(V, j, t, -f);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility of the trailing block by the pivot
            int bad = -1;
            for (int i = t + 1; i < D.r && bad < 0; ++i)
                for (int j = t + 1; j < D.c; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            add_row(D, t, bad, 1);
            add_row(U, t, bad, 1);
        }
        if (D(t, t) < 0) {
            neg_row(D, t);
            neg_row(U, t);
        }
        res.rank = t + 1;
    }
done:
    res.diag.resize(n);
    for (int i = 0; i < n; ++i) res.diag[i] = D(i, i);
    res.U = std::move(U);
    res.D = std::move(D);
    res.V = std::move(V);
    return res;
}

IMat integer_kernel(const IMat& A) {
    SmithResult s = smith(A);
    std::vector<IVec> cols;
    for (int j = s.rank; j < A.c; ++j) cols.push_back(s.V.column(j));
    return IMat::from_columns(A.c, cols);
}

std::optional<IVec> solve_integer(const IMat& A, const IVec& b) {
    SmithResult s = smith(A);
    IVec ub = s.U * b;
    IVec y(A.c, 0);
    for (int i = 0; i < A.r; ++i) {
        if (i < s.rank) {
            if (ub[i] % s.diag[i] != 0) return std::nullopt;
            y[i] = ub[i] / s.diag[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.V * y;
}

IMat inverse_unimodular(const IMat& U) {
    if (U.r != U.c) throw std::invalid_argument("inverse of non-square matrix");
    std::vector<IVec> cols;
    for (int j = 0; j < U.c; ++j) {
        IVec e(U.r, 0);
        e[j] = 1;
        auto x = solve_integer(U, e);
        if (!x) throw std::invalid_argument("matrix is not unimodular");
        cols.push_back(*x);
    }
    return IMat::from_columns(U.r, cols);
}

long long dot(const IVec& x, const IVec& y) {
    long long s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

Q dot(const QVec& x, const QVec& y) {
    Q s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

Q dot(const IVec& x, const QVec& y) {
    Q s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += Q(x[i]) * y[i];
    return s;
}

QVec to_q(const IVec& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Q(v[i]);
    return out;
}

bool is_integral(const QVec& v) {
    for (const Q& q : v)
        if (q.denominator() != 1) return false;
    return true;
}

IVec to_int(const QVec& v) {
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].denominator() != 1) throw std::invalid_argument("non-integral entry");
        out[i] = v[i].numerator();
    }
    return out;
}

std::string q_str(const Q& q) {
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::optional<QVec> solve_in_span(const std::vector<QVec>& cols, const QVec& b) {
    const int n = static_cast<int>(b.size());
    const int k = static_cast<int>(cols.size());
    // augmented n x (k+1)
    std::vector<QVec> m(n, QVec(k + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) m[i][j] = cols[j][i];
        m[i][k] = b[i];
    }
    int row = 0;
    std::vector<int> pivcol;
    for (int j = 0; j < k && row < n; ++j) {
        int p = -1;
        for (int i = row; i < n; ++i)
            if (m[i][j] != 0) {
                p = i;
                break;
            }
        if (p < 0) throw std::invalid_argument("columns are linearly dependent");
        std::swap(m[row], m[p]);
        Q inv = Q(1) / m[row][j];
        for (int jj = j; jj <= k; ++jj) m[row][jj] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == row || m[i][j] == 0) continue;
            Q f = m[i][j];
            for (int jj = j; jj <= k; ++jj) m[i][jj] -= f * m[row][jj];
        }
        pivcol.push_back(j);
        ++row;
    }
    if (static_cast<int>(pivcol.size()) < k) throw std::invalid_argument("columns are linearly dependent");
    for (int i = row; i < n; ++i)
        if (m[i][k] != 0) return std::nullopt;
    QVec x(k);
    for (int i = 0; i < k; ++i) x[i] = m[i][k];
    return x;
}

QVec solve_square(std::vector<QVec> M, QVec b) {
    const int n = static_cast<int>(b.size());
    for (int j = 0; j < n; ++j) {
        int p = -1;
        for (int i = j; i < n; ++i)
            if (M[i][j] != 0) {
                p = i;
                break;
            }
        if (p < 0) throw std::invalid_argument("singular system");
        std::swap(M[j], M[p]);
        std::swap(b[j], b[p]);
        Q inv = Q(1) / M[j][j];
        for (int jj = j; jj < n; ++jj) M[j][jj] *= inv;
        b[j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == j || M[i][j] == 0) continue;
            Q f = M[i][j];
            for (int jj = j; jj < n; ++jj) M[i][jj] -= f * M[j][jj];
            b[i] -= f * b[j];
        }
    }
    return b;
}

}  // namespace lsd
