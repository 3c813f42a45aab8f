#include <doctest.h>

#include <random>

#include "lsd/galois_ring.hpp"

using namespace lsd;

namespace {

GRElem random_elem(const GaloisRing& R, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> d(0, R.modulus() - 1);
    GRElem e = R.zero();
    for (int i = 0; i < R.k(); ++i) e[i] = d(rng);
    return e;
}

// Unit upper-triangular times unit lower-triangular, with unit diagonal entries.
GRMat random_unit_matrix(const GaloisRing& R, int n, std::mt19937_64& rng) {
    GRMat Up(n, std::vector<GRElem>(n, R.zero())), Lo = Up;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j > i) Up[i][j] = random_elem(R, rng);
            if (j < i) Lo[i][j] = random_elem(R, rng);
        }
    for (int i = 0; i < n; ++i) {
        GRElem u;
        do u = random_elem(R, rng);
        while (!R.is_unit(u));
        Up[i][i] = u;
        Lo[i][i] = R.one();
    }
    return gr_mul(R, Up, Lo);
}

}  // namespace

TEST_CASE("irreducible polynomials") {
    CHECK(is_irreducible_mod_p({1, 0, 1}, 3));   // x^2 + 1
    CHECK_FALSE(is_irreducible_mod_p({1, 0, 1}, 2));
    CHECK(first_irreducible(2, 3).size() == 4);
}

TEST_CASE("Frobenius has order k and fixes exactly Z/p^m") {
    struct Shape {
        long long p;
        int k, m;
    };
    for (auto [p, k, m] : std::vector<Shape>{{2, 3, 2}, {3, 2, 3}, {5, 2, 2}, {2, 4, 2}, {3, 4, 2}}) {
        const GaloisRing R(p, k, m);
        CAPTURE(p);
        CAPTURE(k);
        long long fixed = 0, total = 0;
        for (const GRElem& a : R.residues(m)) {
            ++total;
            CHECK(R.frob_pow(a, k) == a);
            if (R.frob(a) == a) {
                ++fixed;
                for (int i = 1; i < k; ++i) CHECK(a[i] == 0);
            }
        }
        long long pm = 1;
        for (int i = 0; i < m; ++i) pm *= p;
        CHECK(fixed == pm);
        CHECK(total > fixed);
    }
}

TEST_CASE("Frobenius lifts x -> x^p and is a ring map") {
    const GaloisRing R(3, 3, 4);
    std::mt19937_64 rng(0x5eed);
    for (int t = 0; t < 200; ++t) {
        const GRElem a = random_elem(R, rng), b = random_elem(R, rng);
        CHECK(R.frob(R.mul(a, b)) == R.mul(R.frob(a), R.frob(b)));
        CHECK(R.frob(R.add(a, b)) == R.add(R.frob(a), R.frob(b)));
        const GRElem d = R.sub(R.frob(a), R.pow(a, 3));
        CHECK(R.valuation(d) >= 1);
    }
}

TEST_CASE("inverses and valuations") {
    const GaloisRing R(2, 3, 5);
    std::mt19937_64 rng(0x5eed);
    for (int t = 0; t < 200; ++t) {
        const GRElem a = random_elem(R, rng);
        if (R.is_unit(a)) CHECK(R.mul(a, R.inverse(a)) == R.one());
        else CHECK_THROWS_AS(R.inverse(a), std::domain_error);
    }
    CHECK(R.valuation(R.p_pow(3)) == 3);
    CHECK(R.valuation(R.zero()) == 5);
}

TEST_CASE("Smith form basics") {
    const GaloisRing R(3, 1, 6);
    CHECK(gr_smith(R, gr_identity(R, 3)).exps == std::vector<int>{0, 0, 0});
    GRMat D = gr_identity(R, 2);
    D[0][0] = R.p_pow(1);
    CHECK(gr_smith(R, D).exps == std::vector<int>{1, 0});
    GRMat Z(2, std::vector<GRElem>(2, R.zero()));
    CHECK_THROWS_AS(gr_smith(R, Z), PrecisionError);
}

TEST_CASE("Smith exponents are invariant under unit multiplication") {
    std::mt19937_64 rng(0x5eed);
    int trials = 0;
    for (auto [p, k] : std::vector<std::pair<long long, int>>{{2, 1}, {3, 2}, {5, 1}}) {
        const GaloisRing R(p, k, 6);
        for (int t = 0; t < 334; ++t, ++trials) {
            const int n = 3;
            std::vector<int> want{2, 1, 0};
            std::uniform_int_distribution<int> e(0, 3);
            for (int& x : want) x = e(rng);
            std::sort(want.rbegin(), want.rend());
            GRMat D = gr_identity(R, n);
            for (int i = 0; i < n; ++i) D[i][i] = R.p_pow(want[i]);
            const GRMat U = random_unit_matrix(R, n, rng), V = random_unit_matrix(R, n, rng);
            const GRMat M = gr_mul(R, gr_mul(R, U, D), V);
            const GRSmith s = gr_smith(R, M);
            CHECK(s.exps == want);
            GRMat check = gr_mul(R, gr_mul(R, s.U, M), s.V);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) CHECK(check[i][j] == (i == j ? R.p_pow(s.exps[i]) : R.zero()));
        }
    }
    CHECK(trials >= 1000);
}
