#include <doctest.h>

#include "lsd/special_lattice.hpp"

using namespace lsd;

TEST_CASE("four-dimensional space: d = 1, t = 2") {
    const ChainResult r = special_lattice_chain(standard_special_lattice(3, 1, 1));
    CHECK(r.d == 1);
    CHECK(r.type == 2);
    CHECK(r.dims == std::vector<int>{2, 3});
    CHECK(r.fixed_dim == 3);
    CHECK(r.self_orthogonal_hull);
}

TEST_CASE("chain grows by one per step under random rational basis changes") {
    std::uint64_t seed = 0x5eed;
    for (int half = 1; half <= 5; ++half)
        for (int hyp = 0; hyp <= 2; ++hyp) {
            const SpecialLattice base = standard_special_lattice(3, half, hyp);
            for (int t = 0; t < 3; ++t) {
                const SpecialLattice L = change_basis(base, random_invertible_mod_p(3, base.gram.r, seed++));
                const ChainResult r = special_lattice_chain(L);
                CAPTURE(half);
                CAPTURE(hyp);
                CHECK(r.d == half);
                CHECK(r.type == 2 * half);
                CHECK(r.type % 2 == 0);
                CHECK(r.type >= 2);
                CHECK(r.type <= L.gram.r);
                for (size_t i = 1; i < r.dims.size(); ++i) CHECK(r.dims[i] == r.dims[i - 1] + 1);
                CHECK(r.fixed_dim == r.dims.back());
                CHECK(r.self_orthogonal_hull);
            }
        }
}

TEST_CASE("K3-sized chain stabilizes at d = 10") {
    CHECK(special_lattice_chain(standard_special_lattice(3, 10, 0), 10).d == 10);
}

TEST_CASE("invalid inputs are rejected") {
    SpecialLattice L = standard_special_lattice(3, 2, 1);
    CHECK_THROWS_AS(special_lattice_chain(L, 1), std::runtime_error);
    SpecialLattice half_missing = L;
    half_missing.basis.pop_back();
    CHECK_THROWS_AS(special_lattice_chain(half_missing), std::invalid_argument);
    SpecialLattice rational = L;
    const GaloisRing F(3, L.k, 1);
    for (auto& row : rational.basis) row.assign(row.size(), F.zero());
    for (size_t i = 0; i < rational.basis.size(); ++i) rational.basis[i][L.gram.r - 1 - static_cast<int>(i)] = F.one();
    CHECK_THROWS_AS(special_lattice_chain(rational), std::invalid_argument);
    SpecialLattice even_p = L;
    even_p.p = 2;
    CHECK_THROWS_AS(special_lattice_chain(even_p), std::invalid_argument);
}
