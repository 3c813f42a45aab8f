#include <doctest.h>

#include "lsd/eo_strata.hpp"

using namespace lsd;

namespace {

std::vector<std::string> labels_from(int lo, int hi) {
    std::vector<std::string> v;
    for (int i = lo; i <= hi; ++i) v.push_back(std::to_string(i));
    return v;
}

}  // namespace

TEST_CASE("^JW has 2m elements, one per length, and every rep is minimal") {
    for (int n = 3; n <= 12; ++n)
        for (bool plus : {true, false}) {
            if (n % 2 == 1 && !plus) continue;
            const RootDatum rd = orthogonal_datum(n, plus);
            const EOContext ctx = make_eo_context(rd, orthogonal_mu(rd));
            const auto reps = enumerate_jw(ctx);
            CAPTURE(n);
            CHECK(static_cast<int>(reps.size()) == 2 * ctx.m);
            for (const CosetRep& r : reps) {
                CHECK(is_reduced(rd, r.word));
                CHECK(is_min_coset_rep(rd, ctx.J, r.word));
            }
        }
}

TEST_CASE("explicit words match the enumeration") {
    const RootDatum rd = orthogonal_datum(9, true);
    const EOContext ctx = make_eo_context(rd, orthogonal_mu(rd));
    const auto words = orthogonal_words(ctx);
    for (const CosetRep& r : enumerate_jw(ctx)) CHECK(same_element(rd, words.at(r.label), r.word));
}

TEST_CASE("Bruhat closure: chain for odd n, diamond at m-1 for even n") {
    const RootDatum odd = orthogonal_datum(7, true);
    const auto ro = enumerate_jw(make_eo_context(odd, orthogonal_mu(odd)));
    CHECK(bruhat_covers(odd, ro).size() == ro.size() - 1);
    const RootDatum even = orthogonal_datum(8, true);
    const auto re = enumerate_jw(make_eo_context(even, orthogonal_mu(even)));
    CHECK(bruhat_covers(even, re).size() == re.size());
    CHECK(bruhat_leq(even, {}, re.back().word));
}

TEST_CASE("basic EO subsets") {
    for (int n = 3; n <= 12; ++n)
        for (bool plus : {true, false}) {
            if (n % 2 == 1 && !plus) continue;
            const RootDatum rd = orthogonal_datum(n, plus);
            const IVec mu = orthogonal_mu(rd);
            const EOContext ctx = make_eo_context(rd, mu);
            const BGMu t = enumerate_bgmu(rd, mu);
            const int m = ctx.m;
            std::vector<std::string> want;
            if (n % 2 == 1) {
                want = labels_from(m, 2 * m - 1);
            } else if (plus) {
                want = labels_from(m, 2 * m - 2);
            } else {
                want = {std::to_string(m - 1), std::to_string(m - 1) + "'"};
                for (const auto& l : labels_from(m, 2 * m - 2)) want.push_back(l);
            }
            auto got = jw_b_subset(ctx, QuadSpaceData{n, plus}, t, t.basic_index());
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            CAPTURE(n);
            CAPTURE(plus);
            CHECK(got == want);
        }
}

TEST_CASE("t_max and vertex types") {
    CHECK(tmax({7, true}) == 8);
    CHECK(tmax({8, true}) == 8);
    CHECK(tmax({8, false}) == 10);
    CHECK(vertex_types({6, false}) == std::vector<int>{2, 4, 6, 8});
}

TEST_CASE("EO labels against vertex-lattice types") {
    const RootDatum rd = orthogonal_datum(8, false);
    const EOContext ctx = make_eo_context(rd, orthogonal_mu(rd));
    const QuadSpaceData q{8, false};
    CHECK(hp_type(ctx, q, "4") == 10);
    CHECK(hp_type(ctx, q, "4'") == 10);
    CHECK(hp_type(ctx, q, "5") == 8);
    CHECK(hp_type(ctx, q, "8") == 2);
    CHECK_THROWS_AS(hp_type(ctx, q, "2"), std::out_of_range);
}

TEST_CASE("K3 dictionary") {
    const K3Dictionary d = k3_dictionary();
    REQUIRE(d.newton.size() == 11);
    REQUIRE(d.eo.size() == 20);
    for (int h = 1; h <= 10; ++h) {
        const K3NewtonRow& row = d.newton[h - 1];
        CHECK(row.height == h);
        CHECK(row.slopes.front().first == Q(h - 1, h));
        CHECK(row.slopes.back().first == Q(h + 1, h));
        CHECK(row.dim == 0);
    }
    CHECK_FALSE(d.newton.back().height.has_value());
    for (const K3EORow& r : d.eo) {
        if (r.index <= 10) {
            CHECK(r.height == r.index);
        } else {
            CHECK(r.artin == 21 - r.index);
            CHECK(r.vertex_type == 2 * (21 - r.index));
        }
    }
}
