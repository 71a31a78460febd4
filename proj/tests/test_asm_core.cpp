#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <asmkit/asm_matrix.hpp>

using namespace asmkit;

namespace {

// the order-7 vertically symmetric example from the introduction
const std::vector<std::vector<int>> kIntro7 = {
    {0, 0, 0, 1, 0, 0, 0},  {0, 1, 0, -1, 0, 1, 0}, {1, -1, 0, 1, 0, -1, 1},
    {0, 0, 1, -1, 1, 0, 0}, {0, 1, -1, 1, -1, 1, 0}, {0, 0, 1, -1, 1, 0, 0},
    {0, 0, 0, 1, 0, 0, 0}};

// order-9 matrix that is vertically and off-diagonally symmetric
const std::vector<std::vector<int>> kVos9 = {
    {0, 0, 0, 0, 1, 0, 0, 0, 0},   {0, 0, 0, 1, -1, 1, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0},   {0, 1, 0, 0, -1, 0, 0, 1, 0},
    {1, -1, 1, -1, 1, -1, 1, -1, 1}, {0, 1, 0, 0, -1, 0, 0, 1, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0},   {0, 0, 0, 1, -1, 1, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0}};

// the 4x4 matrix of the six-vertex introduction
const std::vector<std::vector<int>> kSix4 = {
    {0, 1, 0, 0}, {1, -1, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};

std::vector<std::vector<int>> identity_grid(int n) {
    std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) g[i][i] = 1;
    return g;
}

// order-10 perverse example (9 x 11 grid, 2 = the star cell)
const std::vector<std::vector<int>> kPerverse10 = {
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},    {0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},    {0, 1, -1, 1, 0, -1, 0, 1, -1, 1, 0},
    {1, -1, 1, -1, 1, 2, 1, -1, 1, -1, 1}, {0, 1, -1, 1, 0, -1, 0, 1, -1, 1, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},    {0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}};

}  // namespace

TEST_CASE("validation accepts the textbook examples") {
    CHECK_NOTHROW(Asm::validate(kIntro7));
    CHECK_NOTHROW(Asm::validate(identity_grid(4)));
    CHECK_NOTHROW(Asm::validate(kSix4));
    CHECK_THROWS(Asm::validate({{1, 1}, {0, -1}}));  // row sum 2
    CHECK_THROWS(Asm::validate({{0, 1}, {1, -1}}));  // second row sums to 0
    // column prefix dips below 0: alternation violated
    CHECK_THROWS(Asm::validate({{1, -1, 1}, {0, 1, 0}, {0, 1, 0}}));
}

TEST_CASE("symmetry predicates") {
    Asm intro = Asm::validate(kIntro7);
    CHECK(has_symmetry(intro, SymmetryClass::VS));
    CHECK_FALSE(has_symmetry(intro, SymmetryClass::VHS));
    Asm vos9 = Asm::validate(kVos9);
    CHECK(has_symmetry(vos9, SymmetryClass::VOS));
    CHECK(has_symmetry(vos9, SymmetryClass::VS));
    CHECK(has_symmetry(vos9, SymmetryClass::VHS));
    CHECK(has_symmetry(vos9, SymmetryClass::OOS));
    Asm one = Asm::validate({{1}});
    CHECK(has_symmetry(one, SymmetryClass::VHS));
    CHECK(has_symmetry(one, SymmetryClass::VS));
    // vertical symmetry is impossible at even order
    Asm id2 = Asm::validate(identity_grid(2));
    CHECK_FALSE(has_symmetry(id2, SymmetryClass::VS));
    // the central column of a VSASM alternates starting from 1
    const int n = intro.order();
    for (int i = 0; i < n; ++i) CHECK(intro.at(i, n / 2) == (i % 2 == 0 ? 1 : -1));
}

TEST_CASE("quarter turn examples") {
    Asm qt4 = Asm::validate({{0, 1, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}});
    CHECK(has_symmetry(qt4, SymmetryClass::QTS));
    CHECK(statistic(qt4, BoundaryStat::FirstRowOne) == 2);
    CHECK(statistic(qt4, BoundaryStat::LastRowOne) == 3);
}

TEST_CASE("statistics") {
    Asm intro = Asm::validate(kIntro7);
    CHECK(statistic(intro, BoundaryStat::SecondRowFirstOne) == 2);
    CHECK(statistic(intro, BoundaryStat::FirstRowOne) == 4);
    CHECK(statistic(intro, BoundaryStat::FirstColOne) == 3);
    Asm one = Asm::validate({{1}});
    CHECK(statistic(one, BoundaryStat::FirstRowOne) == 1);
    CHECK_THROWS(statistic(one, BoundaryStat::SecondRowFirstOne));
}

TEST_CASE("vertex types partition the matrix") {
    Asm a = Asm::validate(kSix4);
    CHECK(vertex_type(a, 0, 0) == VertexType::BRight);  // left of the first-row 1
    CHECK(vertex_type(a, 0, 1) == VertexType::A1);
    CHECK(vertex_type(a, 1, 1) == VertexType::A2);
    CHECK_THROWS(vertex_type(a, 4, 0));
    // per row: count(A1) - count(A2) = 1
    for (int i = 0; i < a.order(); ++i) {
        int ones = 0, negs = 0;
        for (int j = 0; j < a.order(); ++j) {
            VertexType t = vertex_type(a, i, j);
            if (t == VertexType::A1) ++ones;
            if (t == VertexType::A2) ++negs;
        }
        CHECK(ones - negs == 1);
    }
}

TEST_CASE("text round trip") {
    Asm intro = Asm::validate(kIntro7);
    CHECK(asm_from_text(to_text(intro)) == intro);
    PerverseAsm p = PerverseAsm::validate(kPerverse10);
    CHECK(perverse_from_text(to_text(p)) == p);
    CHECK(to_text(p).find('*') != std::string::npos);
}

TEST_CASE("perverse validation") {
    PerverseAsm p = PerverseAsm::validate(kPerverse10);
    CHECK(p.n_param() == 2);
    CHECK(p.order() == 10);
    CHECK(p.row_view(4, 5) == -1);
    CHECK(p.col_view(4, 5) == 1);
    CHECK(statistic_row(p) == 3);
    CHECK(statistic_col(p) == 4);
    // replacing the star by 0 breaks the column sum
    auto broken = kPerverse10;
    broken[4][5] = 0;
    CHECK_THROWS(PerverseAsm::validate(broken));
    // no 2x... (4n+1=1) grid: rejected by shape
    CHECK_THROWS(PerverseAsm::validate({{1}}));
}
