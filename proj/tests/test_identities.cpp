#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <asmkit/identities.hpp>
#include <asmkit/json_io.hpp>

using namespace asmkit;

namespace {

bool all_pass(const std::vector<IdentityCheck>& v) {
    for (const auto& c : v)
        if (c.status != IdentityCheck::Status::Pass) return false;
    return !v.empty();
}

}  // namespace

TEST_CASE("vertical symmetry checks at small orders") {
    TableCache tc;
    CHECK(all_pass(check_vsasm(1, tc)));
    CHECK(all_pass(check_vsasm(2, tc)));
    CHECK(all_pass(check_vsasm(3, tc)));
}

TEST_CASE("a corrupted table fails with a witness") {
    TableCache tc;
    RefinedTable bad = refined_table(SymmetryClass::VS, 5, BoundaryStat::SecondRowFirstOne);
    bad.counts[2] += 1;  // corrupt one entry
    tc.prime(std::move(bad));
    auto checks = check_vsasm(2, tc);
    bool failed = false;
    for (const auto& c : checks)
        if (c.status == IdentityCheck::Status::Fail) {
            failed = true;
            CHECK_FALSE(c.witness.empty());
        }
    CHECK(failed);
}

TEST_CASE("vhs generating identities") {
    TableCache tc;
    CHECK(all_pass(check_vh_4n3(1, tc)));  // order 7
    CHECK(all_pass(check_vh_4n1(1, tc)));  // order-5 base table
    CHECK(all_pass(check_vh_4n1(2, tc)));  // order 9
}

TEST_CASE("perverse identities at order 6") {
    TableCache tc;
    CHECK(all_pass(check_vhp(1, tc)));
}

TEST_CASE("off-diagonal families at the first orders") {
    TableCache tc;
    CHECK(all_pass(check_oo(1, tc)));
    CHECK(all_pass(check_vos(1, tc)));
}

TEST_CASE("quarter-turn convolutions") {
    TableCache tc;
    CHECK(all_pass(check_qt(4, tc)));
    CHECK(all_pass(check_qt(5, tc)));
    CHECK(all_pass(check_qt(7, tc)));
    CHECK(all_pass(check_qt(8, tc)));
    CHECK(all_pass(check_qqt(6, tc)));
    auto qqt = check_qqt(6, tc);
    // the stated order-6 table is (1,2,2,1)
    const auto& t = tc.get(SymmetryClass::QQTS, 6, BoundaryStat::LastRowOne);
    CHECK(t.at(2) == 1);
    CHECK(t.at(3) == 2);
    CHECK(t.at(4) == 2);
    CHECK(t.at(5) == 1);
}

TEST_CASE("problem 2 of the concluding remarks") {
    TableCache tc;
    CHECK(all_pass(check_vs_first_col(1, tc)));
    CHECK(all_pass(check_vs_first_col(2, tc)));
}

TEST_CASE("half-turn reconciliation is decisive") {
    TableCache tc;
    auto checks = check_ht_reconciliation(tc, 6);
    CHECK(all_pass(checks));
    for (const auto& c : checks) CHECK_FALSE(c.provenance.empty());
}

TEST_CASE("schur remark displays at n = 1") {
    TableCache tc;
    auto checks = check_schur(1, tc, 20190620);
    CHECK(all_pass(checks));
}

TEST_CASE("json schemas round-trip") {
    Cyc v(Rat(-7, 3), Rat(5, 9));
    CHECK(cyc_from_json(to_json(v)) == v);
    auto j = to_json(v);
    CHECK(j.at("a").get<std::string>() == "-7/3");
    CHECK(j.at("b").get<std::string>() == "5/9");

    CycPoly p = CycPoly::monomial(-3, v, 'z') + CycPoly(Cyc(2));
    auto pj = to_json(p);
    CHECK(pj.at("var").get<std::string>() == "z");
    CHECK(pj.at("coeffs").contains("-3"));
    CHECK(cyc_from_json(pj.at("coeffs").at("-3")) == v);

    auto table = refined_table(SymmetryClass::OS, 4, BoundaryStat::FirstRowOne);
    auto tj = to_json(table);
    CHECK(tj.at("counts").at("1").get<std::string>() == "0");
    CHECK(tj.at("counts").at("2").get<std::string>() == "1");
    CHECK(tj.at("total").get<std::string>() == "3");
    CHECK(table_csv(table).find("os,4,first-row,1,0") != std::string::npos);
}

TEST_CASE("report serialization carries stable fields") {
    TableCache tc;
    auto checks = check_qqt(6, tc);
    auto j = report_json(checks);
    REQUIRE(j.is_array());
    REQUIRE(!j.empty());
    for (const auto& rec : j) {
        CHECK(rec.contains("identity"));
        CHECK(rec.contains("n"));
        CHECK(rec.contains("status"));
        CHECK(rec.contains("witness"));
        CHECK(rec.contains("provenance"));
        CHECK(rec.contains("seed"));
    }
}

TEST_CASE("runner filters by family and order") {
    auto checks = run_identities("qqt", 6, 42, 1);
    CHECK(checks.size() == 1);
    CHECK(checks[0].name == "qqt-convolution");
    CHECK(checks[0].seed == 42);
    auto none = run_identities("qqt", 5, 42, 1);
    CHECK(none.empty());
}
