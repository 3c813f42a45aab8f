#include <doctest.h>

#include <random>

#include "lsd/root_datum.hpp"

using namespace lsd;

namespace {

std::vector<RootDatum> sample_data() {
    return {build_root_datum(Family::GL, 3),    build_root_datum(Family::GL, 4),   build_root_datum(Family::SL, 3),
            build_root_datum(Family::PGL, 3),   build_root_datum(Family::Sp, 2),   build_root_datum(Family::GSp, 3),
            orthogonal_datum(5, true),          orthogonal_datum(6, true),         orthogonal_datum(6, false),
            orthogonal_datum(7, true),          gspin_datum(7, true),              gspin_datum(8, false)};
}

}  // namespace

TEST_CASE("Weyl group orders match the closed formula") {
    for (const RootDatum& rd : sample_data()) {
        CAPTURE(rd.label());
        const auto orbit = weyl_orbit_regular_serial(rd);
        CHECK(static_cast<long long>(orbit.size()) == weyl_order_formula(rd));
    }
    CHECK(weyl_order_formula(build_root_datum(Family::GL, 4)) == 24);
    CHECK(weyl_order_formula(orthogonal_datum(3, true)) == 8);     // B_2
    CHECK(weyl_order_formula(orthogonal_datum(6, true)) == 192);    // D_4
}

TEST_CASE("parallel Weyl orbit agrees with the serial one") {
    for (const RootDatum& rd : sample_data()) {
        auto a = weyl_orbit_regular_serial(rd);
        auto b = weyl_orbit_regular(rd);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("simple reflections are involutions and phi permutes simple coroots") {
    for (const RootDatum& rd : sample_data()) {
        for (int i = 0; i < rd.ns(); ++i) {
            const IMat s = reflection_matrix(rd, i);
            const IMat s2 = s * s;
            for (int r = 0; r < rd.N; ++r)
                for (int c = 0; c < rd.N; ++c) CHECK(s2(r, c) == (r == c ? 1 : 0));
            CHECK(rd.phi * rd.coroots[i] == rd.coroots[rd.phi_perm[i]]);
        }
    }
}

TEST_CASE("dominance order axioms on a coweight box") {
    std::mt19937_64 rng(0x5eed);
    const RootDatum rd = build_root_datum(Family::GL, 3);
    std::uniform_int_distribution<int> coord(-2, 2);
    std::vector<QVec> box;
    for (int t = 0; t < 60; ++t) {
        IVec v{coord(rng), coord(rng), coord(rng)};
        std::sort(v.rbegin(), v.rend());
        box.push_back(to_q(v));
    }
    for (const QVec& a : box) {
        CHECK(dominance_leq(rd, a, a));
        for (const QVec& b : box) {
            if (dominance_leq(rd, a, b) && dominance_leq(rd, b, a)) CHECK(a == b);
            for (const QVec& c : box)
                if (dominance_leq(rd, a, b) && dominance_leq(rd, b, c)) CHECK(dominance_leq(rd, a, c));
        }
    }
}

TEST_CASE("pi_1 invariants and coinvariants") {
    CHECK(pi1(build_root_datum(Family::GL, 4)).invariants().structure.describe() == "Z");
    CHECK(pi1(build_root_datum(Family::SL, 3)).group().describe() == "0");
    CHECK(pi1(build_root_datum(Family::PGL, 4)).group().describe() == "Z/4");
    CHECK(pi1(orthogonal_datum(7, true)).invariants().structure.describe() == "Z/2");
    CHECK(pi1(gspin_datum(7, true)).invariants().structure.describe() == "Z");
    CHECK(pi1(orthogonal_datum(6, false)).coinvariants().describe() == "Z/2");
}

TEST_CASE("Galois average is phi-invariant") {
    const RootDatum rd = orthogonal_datum(6, false);
    const QVec v = to_q(IVec{1, 0, 0, 1});
    const QVec avg = galois_average(rd, v);
    CHECK(apply(rd.phi, avg) == avg);
    CHECK(avg.back() == Q(0));
}

TEST_CASE("Serre types") {
    CHECK(classify_serre_type(orthogonal_datum(19, true)).components == std::vector<std::string>{"B10"});
    CHECK(classify_serre_type(build_root_datum(Family::GSp, 2)).components == std::vector<std::string>{"C2"});
    CHECK(classify_serre_type(orthogonal_datum(8, true)).abelian_eligible);
}
