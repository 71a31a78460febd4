// Acceptance suite: one pass/fail line per criterion, exact comparisons
// throughout. Returns nonzero if any gating criterion fails.
#include <asmkit/identities.hpp>
#include <asmkit/tilings.hpp>

#include <chrono>
#include <iostream>
#include <random>

using namespace asmkit;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& note = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << what;
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool all_pass(const std::vector<IdentityCheck>& v, std::string* note) {
    bool ok = !v.empty();
    for (const auto& c : v) {
        if (c.status == IdentityCheck::Status::Fail) {
            ok = false;
            *note += c.name + "(n=" + std::to_string(c.n) + ") failed: " + c.witness + "; ";
        }
    }
    return ok;
}

}  // namespace

int main() {
    const int jobs = 4;
    TableCache tc(jobs);
    auto t_start = std::chrono::steady_clock::now();

    {  // 1. totals vs the product formula, n = 1..7, under 60 s
        auto t0 = std::chrono::steady_clock::now();
        const long expect[] = {1, 2, 7, 42, 429, 7436, 218348};
        bool ok = true;
        for (int n = 1; n <= 7; ++n) {
            Int c = count_total(SymmetryClass::Plain, n, jobs);
            if (c != expect[n - 1] || c != asm_total(n)) ok = false;
        }
        double el = seconds_since(t0);
        report(1, "enumerated totals equal the product formula for n=1..7", ok && el < 60.0,
               "elapsed " + std::to_string(el) + "s");
    }

    {  // 2. refined plain counts vs Zeilberger, n = 1..7
        bool ok = true;
        for (int n = 1; n <= 7 && ok; ++n) {
            const auto& t = tc.get(SymmetryClass::Plain, n, BoundaryStat::FirstRowOne);
            for (int i = 1; i <= n; ++i)
                if (t.at(i) != a_plain(n, i)) ok = false;
        }
        report(2, "brute-force A(n,i) equals Zeilberger's formula for n=1..7", ok);
    }

    {  // 3. Thm 3.2 for orders 3..13 plus (3.10)/(3.11)
        bool ok = true;
        std::string note;
        for (int n = 1; n <= 6; ++n) ok &= all_pass(check_vsasm(n, tc), &note);
        report(3, "A_V product formula and the OS shift/generating links for orders 3..13", ok, note);
    }

    {  // 4. A_O closed form vs enumeration, orders 2..10
        bool ok = true;
        for (int twoN = 2; twoN <= 10 && ok; twoN += 2) {
            const auto& t = tc.get(SymmetryClass::OS, twoN, BoundaryStat::FirstRowOne);
            for (int i = 1; i <= twoN; ++i)
                if (t.at(i) != a_o(twoN, i)) ok = false;
        }
        report(4, "brute-force A_O equals the closed form for orders 2..10", ok);
    }

    {  // 5. quartered-hexagon block
        bool ok = true;
        std::string note;
        for (int n = 1; n <= 3 && ok; ++n)
            for (int i = 1; i <= n + 1; ++i) {
                Int d = q_ni_det(n, i);
                if (d != q_ni(n, i) || d != q_ni_expand(n, i) || d != brute_paths(n, i)) {
                    ok = false;
                    note = "four-way disagreement at n=" + std::to_string(n);
                }
            }
        RatPoly g1 = genfun_qh(1);
        RatPoly want = RatPoly::monomial(2, Rat(1), 'x') + RatPoly::monomial(-2, Rat(1), 'x') +
                       RatPoly(Rat(4));
        if (g1 != want) { ok = false; note += " genfun(1) wrong;"; }
        for (int n = 1; n <= 3; ++n)
            if (genfun_qh(n) != genfun_qh_determinant(n)) {
                ok = false;
                note += " determinant route differs at n=" + std::to_string(n) + ";";
            }
        std::mt19937_64 rng(20190620);
        for (int t = 0; t < 20; ++t) {
            int r = 2 + (t % 3);
            if (!check_lemma_a2(r, rng)) { ok = false; note += " lemma instantiation failed;"; }
        }
        report(5, "Q four-way agreement (n<=3), generating function routes, 20 lemma draws", ok,
               note);
    }

    {  // 6. VHS generating identities: orders 7, 11 and 9, plus the order-5 base
        bool ok = true;
        std::string note;
        ok &= all_pass(check_vh_4n3(1, tc), &note);
        ok &= all_pass(check_vh_4n3(2, tc), &note);
        ok &= all_pass(check_vh_4n1(1, tc), &note);
        ok &= all_pass(check_vh_4n1(2, tc), &note);
        report(6, "VHS generating identities at orders 7, 11 and 9; order-5 base table", ok, note);
    }

    {  // 7. perverse identities at orders 6 and 10
        bool ok = true;
        std::string note;
        ok &= all_pass(check_vhp(1, tc), &note);
        ok &= all_pass(check_vhp(2, tc), &note);
        report(7, "perverse convolutions and generating identities at orders 6 and 10", ok, note);
    }

    {  // 8. off-diagonal/off-antidiagonal identities
        bool ok = true;
        std::string note;
        for (int n = 1; n <= 3; ++n) ok &= all_pass(check_oo(n, tc), &note);
        report(8, "OOS generating identities (orders 5,7,9,11,13) and the VHS shift links", ok, note);
    }

    {  // 9. vertically and off-diagonally symmetric identities
        bool ok = true;
        std::string note;
        ok &= all_pass(check_vos(1, tc), &note);       // Thm 7.3 order 11, (7.10)/(7.11)
        auto stretch = check_vos(2, tc, 17);  // the order-17 identity runs as a full pass
        bool has72 = false;
        for (const auto& c : stretch)
            if (c.name == "vos-8n1-generating") {
                has72 = true;
                if (c.status == IdentityCheck::Status::Fail) {
                    ok = false;
                    note += "order-17 generating identity failed; ";
                }
            }
        if (!has72) note += "order-17 identity skipped (ceiling); ";
        report(9, "VOS generating identity at order 11, product links, order-17 stretch", ok, note);
    }

    {  // 10. quarter-turn and quasi-quarter-turn convolutions
        bool ok = true;
        std::string note;
        for (int order : {4, 8, 12, 5, 9, 7, 11}) ok &= all_pass(check_qt(order, tc), &note);
        for (int order : {6, 10}) ok &= all_pass(check_qqt(order, tc), &note);
        const auto& qt4 = tc.get(SymmetryClass::QTS, 4, BoundaryStat::LastRowOne);
        if (!(qt4.at(2) == 1 && qt4.at(3) == 1)) { ok = false; note += "A_QT(4,.) wrong; "; }
        const auto& qqt6 = tc.get(SymmetryClass::QQTS, 6, BoundaryStat::LastRowOne);
        if (!(qqt6.at(2) == 1 && qqt6.at(3) == 2 && qqt6.at(4) == 2 && qqt6.at(5) == 1)) {
            ok = false;
            note += "A_qQT(6,.) wrong; ";
        }
        report(10, "quarter-turn convolutions (4,8,12 / 5,9 / 7,11) and qQT (6,10)", ok, note);
    }

    {  // 11. partition-function formulas and refined links
        bool ok = true;
        std::string note;
        for (int n = 1; n <= 3; ++n)
            if (!formula_vs_state(GridKind::Dwbc, n, 500 + n, 5).pass) {
                ok = false;
                note += "dwbc n=" + std::to_string(n) + "; ";
            }
        for (int n = 1; n <= 2; ++n)
            if (!formula_vs_state(GridKind::UTurn, n, 600 + n, 5).pass) {
                ok = false;
                note += "uturn n=" + std::to_string(n) + "; ";
            }
        bool uu = formula_vs_state(GridKind::UUTurn, 1, 700, 5).pass;  // stretch, non-gating
        note += uu ? "uuturn n=1 stretch passed; " : "uuturn n=1 stretch FAILED (non-gating); ";
        for (int n = 1; n <= 4; ++n)
            if (!refined_link_dwbc(n).pass) {
                ok = false;
                note += "dwbc link n=" + std::to_string(n) + "; ";
            }
        for (int n = 1; n <= 3; ++n)
            if (!refined_link_uturn(n).pass) {
                ok = false;
                note += "uturn link n=" + std::to_string(n) + "; ";
            }
        report(11, "formulas equal state sums at 5 seeded rational sets; refined links", ok, note);
    }

    {  // 12. property suites
        bool ok = true;
        std::string note;
        std::mt19937_64 rng(12);
        auto rnd = [&rng]() {
            std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
            return make_rat(num(rng), den(rng));
        };
        int done = 0;
        for (int order = 2; order <= 8 && ok; order += 2) {
            for (int t = 0; t < 25; ++t, ++done) {
                SkewMatrix<Rat> sk(order);
                for (int i = 0; i < order; ++i)
                    for (int j = i + 1; j < order; ++j) sk.at(i, j) = rnd();
                Rat pf = pfaffian(sk);
                if (pf * pf != det_field(sk.to_matrix())) {
                    ok = false;
                    note += "pfaffian order " + std::to_string(order) + "; ";
                }
            }
        }
        if (done != 100) { ok = false; note += "pf trials short; "; }
        for (int t = 0; t < 1000 && ok; ++t) {
            Cyc a(rnd(), rnd()), b(rnd(), rnd()), c(rnd(), rnd());
            if ((a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c) ok = false;
            if (!a.is_zero() && a * a.inv() != Cyc(1)) ok = false;
        }
        struct Case { SymmetryClass cls; int order; BoundaryStat stat; };
        const Case cases[] = {{SymmetryClass::Plain, 6, BoundaryStat::FirstRowOne},
                              {SymmetryClass::Plain, 5, BoundaryStat::FirstRowOne},
                              {SymmetryClass::VS, 9, BoundaryStat::SecondRowFirstOne},
                              {SymmetryClass::VS, 11, BoundaryStat::SecondRowFirstOne},
                              {SymmetryClass::HTS, 6, BoundaryStat::FirstRowOne},
                              {SymmetryClass::HTS, 8, BoundaryStat::FirstRowOne}};
        for (const auto& c : cases) {
            auto serial = refined_table(c.cls, c.order, c.stat, 1);
            auto merged = refined_table(c.cls, c.order, c.stat, 3);
            if (serial.counts != merged.counts) {
                ok = false;
                note += "merge mismatch " + class_name(c.cls) + std::to_string(c.order) + "; ";
            }
        }
        report(12, "Pf^2=det (100 draws, orders 2-8); field axioms (1000 triples); merge=serial",
               ok, note);
    }

    {  // 13. Stroganov reconciliation
        bool ok = true;
        std::string note;
        auto checks = check_ht_reconciliation(tc, 8);
        ok = all_pass(checks, &note);
        for (const auto& c : checks)
            if (c.n == 6 && c.provenance.find("deviates") == std::string::npos &&
                c.provenance.find("matches brute force") == std::string::npos)
                ok = false;
        // downstream consumers use brute-force tables; re-assert the gated ones
        std::string n2;
        ok &= all_pass(check_qt(8, tc), &n2);
        ok &= all_pass(check_qqt(10, tc), &n2);
        note += n2;
        report(13, "A_HT reconciliation report decisive; QT/qQT consumers unaffected", ok, note);
    }

    double total = seconds_since(t_start);
    std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed"
                                  : "ACCEPTANCE: FAILURES PRESENT")
              << " (" << total << "s total)" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
