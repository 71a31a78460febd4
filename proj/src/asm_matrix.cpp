#include <asmkit/asm_matrix.hpp>

#include <map>
#include <sstream>

namespace asmkit {

std::string class_name(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::Plain: return "plain";
        case SymmetryClass::VS: return "vs";
        case SymmetryClass::VHS: return "vhs";
        case SymmetryClass::HTS: return "hts";
        case SymmetryClass::QTS: return "qts";
        case SymmetryClass::QQTS: return "qqts";
        case SymmetryClass::OS: return "os";
        case SymmetryClass::OOS: return "oos";
        case SymmetryClass::VOS: return "vos";
        case SymmetryClass::VHP: return "vhp";
    }
    return "?";
}

SymmetryClass class_from_name(const std::string& s) {
    static const std::map<std::string, SymmetryClass> m = {
        {"plain", SymmetryClass::Plain}, {"vs", SymmetryClass::VS},
        {"vhs", SymmetryClass::VHS},     {"hts", SymmetryClass::HTS},
        {"ht", SymmetryClass::HTS},      {"qts", SymmetryClass::QTS},
        {"qt", SymmetryClass::QTS},      {"qqts", SymmetryClass::QQTS},
        {"qqt", SymmetryClass::QQTS},    {"os", SymmetryClass::OS},
        {"oos", SymmetryClass::OOS},     {"vos", SymmetryClass::VOS},
        {"vhp", SymmetryClass::VHP}};
    auto it = m.find(s);
    if (it == m.end()) throw std::invalid_argument("unknown symmetry class: " + s);
    return it->second;
}

std::string stat_name(BoundaryStat s) {
    switch (s) {
        case BoundaryStat::FirstRowOne: return "first-row";
        case BoundaryStat::LastRowOne: return "last-row";
        case BoundaryStat::FirstColOne: return "first-col";
        case BoundaryStat::SecondRowFirstOne: return "second-row";
        case BoundaryStat::SecondColFirstOne: return "second-col";
    }
    return "?";
}

BoundaryStat stat_from_name(const std::string& s) {
    static const std::map<std::string, BoundaryStat> m = {
        {"first-row", BoundaryStat::FirstRowOne},
        {"last-row", BoundaryStat::LastRowOne},
        {"first-col", BoundaryStat::FirstColOne},
        {"second-row", BoundaryStat::SecondRowFirstOne},
        {"second-col", BoundaryStat::SecondColFirstOne}};
    auto it = m.find(s);
    if (it == m.end()) throw std::invalid_argument("unknown statistic: " + s);
    return it->second;
}

Asm Asm::validate(const std::vector<std::vector<int>>& grid) {
    const int n = static_cast<int>(grid.size());
    if (n == 0) throw std::invalid_argument("empty grid");
    std::vector<int8_t> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(grid[i].size()) != n)
            throw std::invalid_argument("grid is not square");
        for (int j = 0; j < n; ++j) {
            int v = grid[i][j];
            if (v < -1 || v > 1) throw std::invalid_argument("entry outside {-1,0,1}");
            a[static_cast<size_t>(i) * n + j] = static_cast<int8_t>(v);
        }
    }
    // partial sums in {0,1}, totals 1 — the alternation characterization
    for (int i = 0; i < n; ++i) {
        int s = 0;
        for (int j = 0; j < n; ++j) {
            s += a[static_cast<size_t>(i) * n + j];
            if (s < 0 || s > 1) throw std::invalid_argument("row alternation violated");
        }
        if (s != 1) throw std::invalid_argument("row sum is not 1");
    }
    for (int j = 0; j < n; ++j) {
        int s = 0;
        for (int i = 0; i < n; ++i) {
            s += a[static_cast<size_t>(i) * n + j];
            if (s < 0 || s > 1) throw std::invalid_argument("column alternation violated");
        }
        if (s != 1) throw std::invalid_argument("column sum is not 1");
    }
    return Asm(n, std::move(a));
}

namespace {

bool cellwise(const Asm& a, const std::function<std::pair<int, int>(int, int)>& img) {
    const int n = a.order();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto [i2, j2] = img(i, j);
            if (a.at(i, j) != a.at(i2, j2)) return false;
        }
    return true;
}

}  // namespace

bool has_symmetry(const Asm& a, SymmetryClass c) {
    const int n = a.order();
    auto vert = [n](int i, int j) { return std::make_pair(i, n - 1 - j); };
    auto horiz = [n](int i, int j) { return std::make_pair(n - 1 - i, j); };
    auto halfturn = [n](int i, int j) { return std::make_pair(n - 1 - i, n - 1 - j); };
    auto quarter = [n](int i, int j) { return std::make_pair(j, n - 1 - i); };
    auto diag = [](int i, int j) { return std::make_pair(j, i); };
    auto anti = [n](int i, int j) { return std::make_pair(n - 1 - j, n - 1 - i); };

    switch (c) {
        case SymmetryClass::Plain:
            return true;
        case SymmetryClass::VS:
            return cellwise(a, vert);
        case SymmetryClass::VHS:
            return cellwise(a, vert) && cellwise(a, horiz);
        case SymmetryClass::HTS:
            return cellwise(a, halfturn);
        case SymmetryClass::QTS: {
            if (n % 4 == 2) return false;
            if (!cellwise(a, quarter)) return false;
            if (n % 2 == 1) {
                int m = (n - 1) / 2;
                if (a.at(m, m) != ((m % 2 == 0) ? 1 : -1)) return false;
            }
            return true;
        }
        case SymmetryClass::QQTS: {
            if (n % 4 != 2) return false;
            const int h = n / 2;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if ((i == h - 1 || i == h) && (j == h - 1 || j == h)) continue;
                    if (a.at(i, j) != a.at(j, n - 1 - i)) return false;
                }
            // central vortex with nonzero entries on the block diagonal
            int p = a.at(h - 1, h - 1), q = a.at(h - 1, h), r = a.at(h, h - 1), s = a.at(h, h);
            return (p == 1 && s == 1 && q == 0 && r == 0) ||
                   (p == -1 && s == -1 && q == 0 && r == 0);
        }
        case SymmetryClass::OS: {
            if (n % 2 != 0 || !cellwise(a, diag)) return false;
            for (int i = 0; i < n; ++i)
                if (a.at(i, i) != 0) return false;
            return true;
        }
        case SymmetryClass::OOS: {
            if (n % 2 == 0) return false;
            if (!cellwise(a, diag) || !cellwise(a, anti)) return false;
            const int m = (n - 1) / 2;
            for (int i = 0; i < n; ++i) {
                if (i != m && a.at(i, i) != 0) return false;
                if (i != m && a.at(i, n - 1 - i) != 0) return false;
            }
            return a.at(m, m) == ((m % 2 == 0) ? 1 : -1);
        }
        case SymmetryClass::VOS: {
            if (n % 2 == 0) return false;
            if (!cellwise(a, vert) || !cellwise(a, diag)) return false;
            const int m = (n - 1) / 2;
            for (int i = 0; i < n; ++i)
                if (i != m && a.at(i, i) != 0) return false;
            return true;
        }
        case SymmetryClass::VHP:
            return false;  // perverse matrices are a separate type
    }
    return false;
}

int statistic(const Asm& a, BoundaryStat s) {
    const int n = a.order();
    switch (s) {
        case BoundaryStat::FirstRowOne:
            for (int j = 0; j < n; ++j)
                if (a.at(0, j) == 1) return j + 1;
            break;
        case BoundaryStat::LastRowOne:
            for (int j = 0; j < n; ++j)
                if (a.at(n - 1, j) == 1) return j + 1;
            break;
        case BoundaryStat::FirstColOne:
            for (int i = 0; i < n; ++i)
                if (a.at(i, 0) == 1) return i + 1;
            break;
        case BoundaryStat::SecondRowFirstOne:
            if (n < 2) throw std::invalid_argument("second-row statistic needs order >= 2");
            for (int j = 0; j < n; ++j)
                if (a.at(1, j) == 1) return j + 1;
            break;
        case BoundaryStat::SecondColFirstOne:
            if (n < 2) throw std::invalid_argument("second-col statistic needs order >= 2");
            for (int i = 0; i < n; ++i)
                if (a.at(i, 1) == 1) return i + 1;
            break;
    }
    throw std::logic_error("statistic undefined for this matrix");
}

VertexType vertex_type(const Asm& a, int i, int j) {
    const int n = a.order();
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("vertex_type cell");
    const int e = a.at(i, j);
    if (e == 1) return VertexType::A1;
    if (e == -1) return VertexType::A2;
    int r = 0, c = 0;
    for (int jj = 0; jj < j; ++jj) r += a.at(i, jj);
    for (int ii = 0; ii < i; ++ii) c += a.at(ii, j);
    if (r == 0 && c == 0) return VertexType::BRight;
    if (r == 1 && c == 1) return VertexType::BLeft;
    if (r == 0 && c == 1) return VertexType::CDown;
    return VertexType::CUp;  // (1,0)
}

std::string to_text(const Asm& a) {
    std::ostringstream os;
    const int n = a.order();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) os << ' ';
            os << a.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

namespace {

std::vector<std::vector<std::string>> tokenize_grid(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> row;
        std::string tok;
        while (ls >> tok) row.push_back(tok);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Asm asm_from_text(const std::string& text) {
    auto rows = tokenize_grid(text);
    std::vector<std::vector<int>> grid;
    for (auto& r : rows) {
        std::vector<int> row;
        for (auto& t : r) row.push_back(std::stoi(t));
        grid.push_back(std::move(row));
    }
    return Asm::validate(grid);
}

PerverseAsm PerverseAsm::validate(const std::vector<std::vector<int>>& grid) {
    const int rows = static_cast<int>(grid.size());
    if (rows < 5 || rows % 4 != 1)
        throw std::invalid_argument("perverse grid must have 4n+1 rows, n >= 1");
    const int n = (rows - 1) / 4;
    const int cols = 4 * n + 3;
    std::vector<int8_t> a(static_cast<size_t>(rows) * cols);
    int stars = 0;
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(grid[i].size()) != cols)
            throw std::invalid_argument("perverse grid must have 4n+3 columns");
        for (int j = 0; j < cols; ++j) {
            int v = grid[i][j];
            if (v == kStar) ++stars;
            else if (v < -1 || v > 1) throw std::invalid_argument("entry outside {-1,0,1,*}");
            a[static_cast<size_t>(i) * cols + j] = static_cast<int8_t>(v);
        }
    }
    const int ci = 2 * n, cj = 2 * n + 1;
    if (stars != 1 || a[static_cast<size_t>(ci) * cols + cj] != kStar)
        throw std::invalid_argument("exactly one star required, at the center");
    PerverseAsm p(n, std::move(a));
    for (int i = 0; i < rows; ++i) {
        int s = 0;
        for (int j = 0; j < cols; ++j) {
            s += p.row_view(i, j);
            if (s < 0 || s > 1) throw std::invalid_argument("row alternation violated");
        }
        if (s != 1) throw std::invalid_argument("row sum is not 1");
    }
    for (int j = 0; j < cols; ++j) {
        int s = 0;
        for (int i = 0; i < rows; ++i) {
            s += p.col_view(i, j);
            if (s < 0 || s > 1) throw std::invalid_argument("column alternation violated");
        }
        if (s != 1) throw std::invalid_argument("column sum is not 1");
    }
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (i == ci && j == cj) continue;
            if (p.at(i, j) != p.at(i, cols - 1 - j))
                throw std::invalid_argument("vertical mirror symmetry violated");
            if (p.at(i, j) != p.at(rows - 1 - i, j))
                throw std::invalid_argument("horizontal mirror symmetry violated");
        }
    return p;
}

int statistic_row(const PerverseAsm& p) {
    for (int j = 0; j < p.cols(); ++j)
        if (p.row_view(1, j) == 1) return j + 1;
    throw std::logic_error("no 1 in second row");
}

int statistic_col(const PerverseAsm& p) {
    for (int i = 0; i < p.rows(); ++i)
        if (p.col_view(i, 1) == 1) return i + 1;
    throw std::logic_error("no 1 in second column");
}

std::string to_text(const PerverseAsm& p) {
    std::ostringstream os;
    for (int i = 0; i < p.rows(); ++i) {
        for (int j = 0; j < p.cols(); ++j) {
            if (j) os << ' ';
            int v = p.at(i, j);
            if (v == PerverseAsm::kStar) os << '*';
            else os << v;
        }
        os << '\n';
    }
    return os.str();
}

PerverseAsm perverse_from_text(const std::string& text) {
    auto rows = tokenize_grid(text);
    std::vector<std::vector<int>> grid;
    for (auto& r : rows) {
        std::vector<int> row;
        for (auto& t : r) row.push_back(t == "*" ? PerverseAsm::kStar : std::stoi(t));
        grid.push_back(std::move(row));
    }
    return PerverseAsm::validate(grid);
}

}  // namespace asmkit
