#include <doctest.h>

#include <map>

#include "lsd/dl_count.hpp"

using namespace lsd;

TEST_CASE("PGL_2: Coxeter element over F_9") {
    CHECK(count_dl_variety(DlGroup::PGL2, {1}, 3, 2) == 6);
    CHECK(count_dl_variety(DlGroup::PGL2, {}, 3, 2) == 4);
}

// Frozen from a separate enumeration of isotropic flags over F_4.
TEST_CASE("SO_5 over F_4 with the F_2 Frobenius") {
    const DlTable t = dl_table(DlGroup::SO5, 2, 2);
    std::map<std::string, long long> got;
    for (const DlEntry& e : t.entries) got[e.word] = e.count;
    const std::map<std::string, long long> want{{"", 45},    {"1", 30},    {"2", 30},    {"12", 0},
                                                {"21", 0},   {"121", 120}, {"212", 120}, {"1212", 80}};
    CHECK(got == want);
}

TEST_CASE("Bruhat partition and fixed flags") {
    for (DlGroup g : {DlGroup::PGL2, DlGroup::SO5})
        for (long long q : {2, 3})
            for (int d : {1, 2}) {
                const DlTable t = dl_table(g, q, d);
                long long sum = 0;
                for (const DlEntry& e : t.entries) sum += e.count;
                CHECK(sum == t.total_flags);
                CHECK(t.entries.front().word.empty());
                CHECK(t.entries.front().count == t.rational_flags);
                const long long Q = d == 1 ? q : q * q;
                CHECK(t.total_flags == (g == DlGroup::PGL2 ? Q + 1 : (Q + 1) * (Q + 1) * (Q * Q + 1)));
            }
}

TEST_CASE("serial and parallel tables agree") {
    const DlTable a = dl_table(DlGroup::SO5, 2, 2), b = dl_table_serial(DlGroup::SO5, 2, 2);
    REQUIRE(a.entries.size() == b.entries.size());
    for (size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].count == b.entries[i].count);
}

TEST_CASE("words for the same element give the same count") {
    CHECK(count_dl_variety(DlGroup::SO5, {1, 2, 1, 2}, 2, 2) == count_dl_variety(DlGroup::SO5, {2, 1, 2, 1}, 2, 2));
    CHECK(count_dl_variety(DlGroup::SO5, {1, 1}, 2, 2) == 45);
}

TEST_CASE("resource bounds") {
    CHECK_THROWS_AS(dl_table(DlGroup::SO5, 3, 4), ResourceError);
    CHECK_THROWS_AS(dl_table(DlGroup::PGL2, 2, 7), ResourceError);
    CHECK_THROWS_AS(dl_table(DlGroup::PGL2, 4, 1), std::invalid_argument);
}
