#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <asmkit/enumerate.hpp>

#include <map>

using namespace asmkit;

TEST_CASE("total counts match the product-formula sequence") {
    const long expect[] = {1, 2, 7, 42, 429, 7436};
    for (int n = 1; n <= 6; ++n) {
        Int c = 0;
        enumerate_asms(n, [&](const Asm&) { c += 1; });
        CHECK(c == expect[n - 1]);
    }
    Int one = 0;
    enumerate_asms(1, [&](const Asm& a) {
        CHECK(a.at(0, 0) == 1);
        one += 1;
    });
    CHECK(one == 1);
}

TEST_CASE("refined tables from the examples") {
    auto t = refined_table(SymmetryClass::Plain, 3, BoundaryStat::FirstRowOne);
    CHECK(t.at(1) == 2);
    CHECK(t.at(2) == 3);
    CHECK(t.at(3) == 2);
    CHECK(t.total() == 7);

    auto vs5 = refined_table(SymmetryClass::VS, 5, BoundaryStat::SecondRowFirstOne);
    CHECK(vs5.at(1) == 1);
    CHECK(vs5.at(2) == 2);
    CHECK(vs5.counts.size() == 2);  // support {1..n}

    auto os4 = refined_table(SymmetryClass::OS, 4, BoundaryStat::FirstRowOne);
    CHECK(os4.at(1) == 0);  // in-domain zero is recorded
    CHECK(os4.at(2) == 1);
    CHECK(os4.at(3) == 1);
    CHECK(os4.at(4) == 1);
}

TEST_CASE("class totals") {
    CHECK(count_total(SymmetryClass::VS, 5) == 3);
    CHECK(count_total(SymmetryClass::HTS, 3) == 3);
    CHECK(count_total(SymmetryClass::QTS, 4) == 2);
    CHECK(count_total(SymmetryClass::QQTS, 6) == 6);
    CHECK(count_total(SymmetryClass::OOS, 3) == 1);
    CHECK(count_total(SymmetryClass::VOS, 3) == 1);
    CHECK(count_total(SymmetryClass::VOS, 9) == 1);
    CHECK_THROWS(refined_table(SymmetryClass::VS, 4, BoundaryStat::SecondRowFirstOne));
    CHECK_THROWS(refined_table(SymmetryClass::QTS, 6, BoundaryStat::FirstRowOne));
}

TEST_CASE("constrained search equals filtering the full set") {
    const SymmetryClass classes[] = {SymmetryClass::VS,  SymmetryClass::VHS, SymmetryClass::HTS,
                                     SymmetryClass::QTS, SymmetryClass::QQTS, SymmetryClass::OS,
                                     SymmetryClass::OOS, SymmetryClass::VOS};
    for (int order = 1; order <= 7; ++order) {
        std::map<SymmetryClass, Int> filtered;
        enumerate_asms(order, [&](const Asm& a) {
            for (SymmetryClass cls : classes)
                if (class_order_compatible(cls, order) && has_symmetry(a, cls))
                    filtered[cls] += 1;
        });
        for (SymmetryClass cls : classes) {
            if (!class_order_compatible(cls, order)) continue;
            Int constrained = 0;
            enumerate_class(cls, order, [&](const Asm& a) {
                CHECK(has_symmetry(a, cls));
                constrained += 1;
            });
            CHECK(filtered[cls] == constrained);
        }
    }
}

TEST_CASE("vos membership implies the larger symmetry classes") {
    enumerate_class(SymmetryClass::VOS, 11, [&](const Asm& a) {
        CHECK(has_symmetry(a, SymmetryClass::VS));
        CHECK(has_symmetry(a, SymmetryClass::VHS));
        CHECK(has_symmetry(a, SymmetryClass::OOS));
        CHECK(has_symmetry(a, SymmetryClass::QTS));
    });
}

TEST_CASE("parallel merge equals the single worker table") {
    struct Case { SymmetryClass cls; int order; BoundaryStat stat; };
    const Case cases[] = {
        {SymmetryClass::Plain, 5, BoundaryStat::FirstRowOne},
        {SymmetryClass::Plain, 6, BoundaryStat::FirstRowOne},
        {SymmetryClass::VS, 9, BoundaryStat::SecondRowFirstOne},
        {SymmetryClass::VS, 11, BoundaryStat::SecondRowFirstOne},
        {SymmetryClass::HTS, 6, BoundaryStat::FirstRowOne},
        {SymmetryClass::HTS, 8, BoundaryStat::FirstRowOne},
    };
    for (const auto& c : cases) {
        auto serial = refined_table(c.cls, c.order, c.stat, 1);
        auto merged = refined_table(c.cls, c.order, c.stat, 3);
        CHECK(serial.counts == merged.counts);
    }
}

TEST_CASE("vs second-row support is exactly 1..n") {
    for (int n = 1; n <= 4; ++n) {
        auto t = refined_table(SymmetryClass::VS, 2 * n + 1, BoundaryStat::SecondRowFirstOne);
        for (int i = 1; i <= n; ++i) CHECK(t.at(i) > 0);
        CHECK(static_cast<int>(t.counts.size()) == n);
    }
}

TEST_CASE("partial sums stay in 0..1 on every enumerated matrix") {
    enumerate_asms(4, [&](const Asm& a) {
        for (int i = 0; i < 4; ++i) {
            int r = 0;
            for (int j = 0; j < 4; ++j) {
                r += a.at(i, j);
                CHECK(r >= 0);
                CHECK(r <= 1);
            }
        }
    });
}

TEST_CASE("perverse enumeration") {
    // n = 0: the star cell admits no matrix at all
    int visits = 0;
    enumerate_perverse(0, [&](const PerverseAsm&) { ++visits; });
    CHECK(visits == 0);

    Int c6 = count_total(SymmetryClass::VHP, 6);
    CHECK(c6 == 1);
    auto r10 = refined_table(SymmetryClass::VHP, 10, BoundaryStat::SecondRowFirstOne);
    CHECK(r10.at(2) == 1);
    CHECK(r10.at(3) == 2);
    CHECK(r10.at(4) == 3);
    CHECK(r10.at(5) == 3);
    auto c10 = refined_table(SymmetryClass::VHP, 10, BoundaryStat::SecondColFirstOne);
    CHECK(c10.at(2) == 1);
    CHECK(c10.at(3) == 3);
    CHECK(c10.at(4) == 5);
    CHECK(r10.total() == 9);

    // the order-10 example matrix should be visited
    bool found = false;
    enumerate_perverse(2, [&](const PerverseAsm& p) {
        if (statistic_row(p) == 3 && statistic_col(p) == 4 && p.at(0, 5) == 1) found = true;
    });
    CHECK(found);
}

TEST_CASE("vhs second row never starts in column 1") {
    for (int order : {5, 7, 9}) {
        auto t = refined_table(SymmetryClass::VHS, order, BoundaryStat::SecondRowFirstOne);
        CHECK(t.at(1) == 0);
    }
}
