#include <doctest.h>

#include "lsd/kottwitz.hpp"

using namespace lsd;

namespace {

QVec qv(std::initializer_list<Q> xs) { return QVec(xs); }

}  // namespace

TEST_CASE("B(G, mu) for GL_4 and (1,1,0,0)") {
    const RootDatum rd = build_root_datum(Family::GL, 4);
    const BGMu t = enumerate_bgmu(rd, {1, 1, 0, 0});
    REQUIRE(t.classes.size() == 5);
    CHECK(t.classes.front().nu == to_q(IVec{1, 1, 0, 0}));
    CHECK(t.classes.back().basic);
    CHECK(t.classes.back().nu == qv({Q(1, 2), Q(1, 2), Q(1, 2), Q(1, 2)}));
    std::vector<int> defects;
    for (const auto& c : t.classes) defects.push_back(defect(rd, c));
    CHECK(defects == std::vector<int>{0, 1, 2, 2, 2});
    CHECK(rz_dimension(rd, {1, 1, 0, 0}, t.classes.back()) == 1);
}

TEST_CASE("serial and parallel enumeration agree") {
    for (const auto& [rd, mu] : std::vector<std::pair<RootDatum, IVec>>{
             {build_root_datum(Family::GL, 5), {1, 1, 0, 0, 0}},
             {build_root_datum(Family::GSp, 3), {1, 1, 1, 1}},
             {orthogonal_datum(8, false), orthogonal_mu(orthogonal_datum(8, false))},
             {gspin_datum(9, true), orthogonal_mu(gspin_datum(9, true))}}) {
        const BGMu a = enumerate_bgmu(rd, mu), b = enumerate_bgmu_serial(rd, mu);
        REQUIRE(a.classes.size() == b.classes.size());
        for (size_t i = 0; i < a.classes.size(); ++i) {
            CHECK(a.classes[i].nu == b.classes[i].nu);
            CHECK(a.classes[i].kappa == b.classes[i].kappa);
        }
    }
}

TEST_CASE("class counts and basic dimensions") {
    struct Row {
        RootDatum rd;
        IVec mu;
        size_t classes;
        long long basic_dim;
    };
    const std::vector<Row> rows{
        {build_root_datum(Family::GSp, 2), {1, 1, 1}, 3, 1},
        {build_root_datum(Family::GSp, 3), {1, 1, 1, 1}, 5, 2},
        {build_root_datum(Family::GL, 3), {1, 0, 0}, 3, 0},
        {build_root_datum(Family::GL, 5), {1, 0, 0, 0, 0}, 5, 0},
        {orthogonal_datum(3, true), orthogonal_mu(orthogonal_datum(3, true)), 3, 1},
        {orthogonal_datum(4, false), orthogonal_mu(orthogonal_datum(4, false)), 3, 2},
        {orthogonal_datum(5, true), orthogonal_mu(orthogonal_datum(5, true)), 4, 2},
        {orthogonal_datum(6, true), orthogonal_mu(orthogonal_datum(6, true)), 6, 2},
        {orthogonal_datum(6, false), orthogonal_mu(orthogonal_datum(6, false)), 4, 3},
        {gspin_datum(5, true), orthogonal_mu(gspin_datum(5, true)), 4, 2},
    };
    for (const Row& r : rows) {
        CAPTURE(r.rd.label());
        const BGMu t = enumerate_bgmu(r.rd, r.mu);
        CHECK(t.classes.size() == r.classes);
        CHECK(rz_dimension(r.rd, r.mu, t.classes[t.basic_index()]) == r.basic_dim);
    }
}

TEST_CASE("class order is a partial order compatible with the listing") {
    const RootDatum rd = build_root_datum(Family::GL, 5);
    const BGMu t = enumerate_bgmu(rd, {1, 1, 0, 0, 0});
    const auto& cs = t.classes;
    for (size_t i = 0; i < cs.size(); ++i) {
        CHECK(class_leq(rd, cs[i], cs[i]));
        CHECK(class_leq(rd, cs.back(), cs[i]));
        CHECK(class_leq(rd, cs[i], cs.front()));
    }
}

TEST_CASE("datum validation flags") {
    const RootDatum gl = build_root_datum(Family::GL, 3);
    const BGMu t = enumerate_bgmu(gl, {1, 0, 0});
    const LocalDatum d = validate_datum(gl, {1, 0, 0}, t.classes.back());
    CHECK(d.flags.minuscule);
    CHECK(d.flags.hodge_type);
    CHECK(d.flags.abelian_type);
    CHECK_FALSE(validate_datum(gl, {2, 0, 0}, enumerate_bgmu(gl, {2, 0, 0}).classes.back()).flags.minuscule);
    CHECK_THROWS_AS(validate_datum(gl, {1, 0, 0}, enumerate_bgmu(gl, {2, 0, 0}).classes.front()), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_bgmu(gl, {0, 1, 0}), std::invalid_argument);

    const RootDatum so = orthogonal_datum(7, true);
    const BGMu ts = enumerate_bgmu(so, orthogonal_mu(so));
    const LocalDatum ds = validate_datum(so, orthogonal_mu(so), ts.classes.back());
    CHECK_FALSE(ds.flags.hodge_type);
    CHECK(ds.flags.abelian_type);
    const RootDatum gs = gspin_datum(7, true);
    CHECK(validate_datum(gs, orthogonal_mu(gs), enumerate_bgmu(gs, orthogonal_mu(gs)).classes.back()).flags.hodge_type);
}

TEST_CASE("Hodge-Newton decomposability") {
    CHECK(fully_hn_decomposable(build_root_datum(Family::GL, 4), {1, 0, 0, 0}).decomposable);
    const HNResult g5 = fully_hn_decomposable(build_root_datum(Family::GL, 5), {1, 1, 0, 0, 0});
    CHECK_FALSE(g5.decomposable);
    CHECK(g5.failing.size() == 1);
    for (int n = 3; n <= 10; ++n)
        for (bool plus : {true, false}) {
            if (n % 2 == 1 && !plus) continue;
            const RootDatum rd = orthogonal_datum(n, plus);
            const IVec mu = orthogonal_mu(rd);
            const BGMu t = enumerate_bgmu(rd, mu);
            const HNResult r = fully_hn_decomposable(rd, mu, t);
            CAPTURE(n);
            CHECK(r.decomposable);
            for (size_t i = 0; i < r.witness.size(); ++i)
                if (r.witness[i]) CHECK(hn_condition_holds(rd, mu, t.classes[i], *r.witness[i]));
        }
}

TEST_CASE("non-basic orthogonal classes have dimension zero") {
    for (int n = 3; n <= 12; ++n) {
        const RootDatum rd = orthogonal_datum(n, n % 2 == 1 || n % 4 == 0);
        const IVec mu = orthogonal_mu(rd);
        const BGMu t = enumerate_bgmu(rd, mu);
        for (const auto& c : t.classes)
            if (!c.basic) CHECK(rz_dimension(rd, mu, c) == 0);
    }
}

TEST_CASE("c_{b,mu} exists for every class") {
    const RootDatum rd = build_root_datum(Family::PGL, 3);
    const IVec mu{1, 0};
    for (const auto& c : enumerate_bgmu(rd, mu).classes) CHECK(cbmu(rd, mu, c).has_value());
}
