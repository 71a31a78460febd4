#ifndef ASMKIT_ASM_MATRIX_HPP
#define ASMKIT_ASM_MATRIX_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace asmkit {

enum class SymmetryClass { Plain, VS, VHS, HTS, QTS, QQTS, OS, OOS, VOS, VHP };
enum class BoundaryStat { FirstRowOne, LastRowOne, FirstColOne, SecondRowFirstOne, SecondColFirstOne };

// Six vertex types under the ASM correspondence. The four zero classes are
// named by their through-flow: B carries the horizontal current (right/left
// of any 1 seen so far in both row and column), C the vertical one.
enum class VertexType { A1, A2, BRight, BLeft, CDown, CUp };

std::string class_name(SymmetryClass c);
SymmetryClass class_from_name(const std::string& s);
std::string stat_name(BoundaryStat s);
BoundaryStat stat_from_name(const std::string& s);

/// Validated alternating sign matrix: rows and columns sum to 1, nonzero
/// entries alternate (equivalently all partial sums lie in {0,1}).
class Asm {
public:
    static Asm validate(const std::vector<std::vector<int>>& grid);

    int order() const { return n_; }
    int at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<int8_t>& raw() const { return a_; }

    bool operator==(const Asm& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    friend class AsmBuilder;
    Asm(int n, std::vector<int8_t> a) : n_(n), a_(std::move(a)) {}
    int n_ = 0;
    std::vector<int8_t> a_;
};

// Enumeration-internal constructor for grids that are valid by construction.
class AsmBuilder {
public:
    static Asm adopt(int n, std::vector<int8_t> a) { return Asm(n, std::move(a)); }
};

bool has_symmetry(const Asm& a, SymmetryClass c);
int statistic(const Asm& a, BoundaryStat s);  // 1-based position
VertexType vertex_type(const Asm& a, int i, int j);  // 0-based cell

std::string to_text(const Asm& a);
Asm asm_from_text(const std::string& text);

/// Vertically and horizontally perverse ASM of order 4n+2: a (4n+1) x (4n+3)
/// grid whose central cell (the star) reads -1 along its row and +1 along its
/// column; mirror-symmetric in both axes everywhere else. The sign
/// orientation is fixed project-wide; the mirrored convention would be
/// equally consistent.
class PerverseAsm {
public:
    static constexpr int8_t kStar = 2;

    static PerverseAsm validate(const std::vector<std::vector<int>>& grid);

    int n_param() const { return n_; }
    int order() const { return 4 * n_ + 2; }
    int rows() const { return 4 * n_ + 1; }
    int cols() const { return 4 * n_ + 3; }

    // raw entry; kStar at the central cell
    int at(int i, int j) const { return a_[static_cast<size_t>(i) * cols() + j]; }
    int row_view(int i, int j) const {
        int v = at(i, j);
        return v == kStar ? -1 : v;
    }
    int col_view(int i, int j) const {
        int v = at(i, j);
        return v == kStar ? 1 : v;
    }

    bool operator==(const PerverseAsm& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    friend class PerverseBuilder;
    PerverseAsm(int n, std::vector<int8_t> a) : n_(n), a_(std::move(a)) {}
    int n_ = 0;
    std::vector<int8_t> a_;
};

class PerverseBuilder {
public:
    static PerverseAsm adopt(int n, std::vector<int8_t> a) { return PerverseAsm(n, std::move(a)); }
};

int statistic_row(const PerverseAsm& p);  // column of leftmost 1 in second row
int statistic_col(const PerverseAsm& p);  // row of topmost 1 in second column

std::string to_text(const PerverseAsm& p);
PerverseAsm perverse_from_text(const std::string& text);

}  // namespace asmkit

#endif
