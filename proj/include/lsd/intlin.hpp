#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

// boost's mixed rational/integer operator== recurses forever under C++20
// rewritten comparisons; exact-match overloads take precedence.
namespace boost {
inline bool operator==(const rational<long long>& a, long long b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(const rational<long long>& a, int b) { return a == static_cast<long long>(b); }
inline bool operator==(long long b, const rational<long long>& a) { return a == b; }
inline bool operator==(int b, const rational<long long>& a) { return a == static_cast<long long>(b); }
inline bool operator!=(const rational<long long>& a, long long b) { return !(a == b); }
inline bool operator!=(const rational<long long>& a, int b) { return !(a == b); }
}  // namespace boost

namespace lsd {

using Q = boost::rational<long long>;
using IVec = std::vector<long long>;
using QVec = std::vector<Q>;

// Dense row-major integer matrix with explicit shape (zero rows or columns allowed).
struct IMat {
    int r = 0, c = 0;
    std::vector<long long> a;

    IMat() = default;
    IMat(int rows, int cols) : r(rows), c(cols), a(static_cast<size_t>(rows) * cols, 0) {}

    long long& operator()(int i, int j) { return a[static_cast<size_t>(i) * c + j]; }
    long long operator()(int i, int j) const { return a[static_cast<size_t>(i) * c + j]; }

    static IMat identity(int n);
    static IMat from_columns(int rows, const std::vector<IVec>& cols);
    static IMat from_rows(const std::vector<IVec>& rows, int cols);

    IVec column(int j) const;
    IVec row(int i) const;
    bool operator==(const IMat& o) const { return r == o.r && c == o.c && a == o.a; }
    bool operator<(const IMat& o) const { return a < o.a; }
};

IMat operator*(const IMat& x, const IMat& y);
IVec operator*(const IMat& x, const IVec& v);
IMat transpose(const IMat& x);
IMat hconcat(const IMat& x, const IMat& y);

// U * A * V = D with U, V unimodular, D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithResult {
    IMat U, D, V;
    std::vector<long long> diag;  // min(r, c) entries
    int rank = 0;
};
SmithResult smith(const IMat& A);

// Columns span {x in Z^c : A x = 0}.
IMat integer_kernel(const IMat& A);
std::optional<IVec> solve_integer(const IMat& A, const IVec& b);
IMat inverse_unimodular(const IMat& U);

// Exact rational helpers.
long long dot(const IVec& x, const IVec& y);
Q dot(const QVec& x, const QVec& y);
Q dot(const IVec& x, const QVec& y);
QVec to_q(const IVec& v);
bool is_integral(const QVec& v);
IVec to_int(const QVec& v);
std::string q_str(const Q& q);  // always "num/den"

// Solve sum_j x_j cols[j] = b over Q. Columns must be linearly independent.
// Returns nullopt if b is outside their span.
std::optional<QVec> solve_in_span(const std::vector<QVec>& cols, const QVec& b);
// Square nonsingular system M x = b over Q.
QVec solve_square(std::vector<QVec> M, QVec b);

}  // namespace lsd
