#include <asmkit/tilings.hpp>

#include <set>

namespace asmkit {

Matrix<Int> lgv_matrix(int n, int i) {
    if (n < 1 || i < 1 || i > n + 1) throw std::invalid_argument("lgv_matrix index out of range");
    const int N = 2 * n + 1;
    Matrix<Int> m(N, N);
    for (int u = 1; u <= N; ++u) {
        const int au = endpoint_offset(u);
        for (int v = 1; v <= 2 * n; ++v) m.at(u - 1, v - 1) = binom_safe(au + v - 1, 2 * v - 1);
        m.at(u - 1, N - 1) = binom_safe(au + 2 * n - 1 - i, 4 * n - 1);
    }
    return m;
}

Int q_ni_det(int n, int i) { return det_bareiss(lgv_matrix(n, i)); }

Rat d_nj(int n, int j) {
    const int N = 2 * n + 1;
    if (j < 1 || j > N) throw std::invalid_argument("d_nj index out of range");
    std::vector<long> a(N + 1);
    for (int t = 1; t <= N; ++t) a[t] = endpoint_offset(t);
    Rat num(2);
    for (int t = 1; t <= N; ++t) num *= a[t];
    for (int p = 1; p <= N; ++p)
        for (int q = p + 1; q <= N; ++q) num *= Rat(Int(a[q] - a[p]) * Int(a[p] + a[q]));
    Rat den(1);
    for (int t = 1; t <= 2 * n; ++t) den *= Rat(factorial(2 * t - 1));
    for (int q = 1; q <= N; ++q) den *= Rat(a[j] + a[q]);
    for (int q = j + 1; q <= N; ++q) den *= Rat(a[q] - a[j]);
    for (int q = 1; q <= j - 1; ++q) den *= Rat(a[j] - a[q]);
    return num / den;
}

Int q_ni_expand(int n, int i) {
    if (n < 1 || i < 1 || i > n + 1) throw std::invalid_argument("q_ni_expand index out of range");
    Rat s(0);
    for (int j = 1; j <= 2 * n + 1; ++j) {
        Rat term = d_nj(n, j) * Rat(binom_safe(endpoint_offset(j) + 2 * n - 1 - i, 4 * n - 1));
        if (j % 2 == 1) s += term;
        else s -= term;
    }
    Int v = to_int_exact(s);
    if (v < 0) throw std::runtime_error("q_ni_expand produced a negative count");
    return v;
}

namespace {

struct PathGrid {
    int n = 0, i = 0;
    // starts/ends as (x, y); paths walk east (+x) and down (-y)
    std::vector<std::pair<int, int>> starts, ends;
};

PathGrid make_grid(int n, int i) {
    PathGrid g;
    g.n = n;
    g.i = i;
    for (int j = 1; j <= 2 * n; ++j) g.starts.push_back({j - 1, 2 * j - 1});
    g.starts.push_back({2 * n - 1 + i, 4 * n - 1});
    for (int j = 1; j <= 2 * n + 1; ++j) g.ends.push_back({endpoint_offset(j) - 1, 0});
    return g;
}

// DFS over families of vertex-disjoint monotone paths, one path at a time.
struct PathSearch {
    const PathGrid& g;
    std::set<std::pair<int, int>> used;
    Int count = 0;

    explicit PathSearch(const PathGrid& gr) : g(gr) {}

    void walk(size_t which, int x, int y) {
        auto [ex, ey] = g.ends[which];
        if (x > ex || y < ey) return;
        if (x == ex && y == ey) {
            family(which + 1);
            return;
        }
        if (x < ex && !used.count({x + 1, y})) {
            used.insert({x + 1, y});
            walk(which, x + 1, y);
            used.erase({x + 1, y});
        }
        if (y > ey && !used.count({x, y - 1})) {
            used.insert({x, y - 1});
            walk(which, x, y - 1);
            used.erase({x, y - 1});
        }
    }

    void family(size_t which) {
        if (which == g.starts.size()) {
            count += 1;
            return;
        }
        auto [sx, sy] = g.starts[which];
        if (used.count({sx, sy})) return;
        used.insert({sx, sy});
        walk(which, sx, sy);
        used.erase({sx, sy});
    }
};

}  // namespace

Int brute_paths(int n, int i) {
    if (n < 1 || n > 3) throw std::invalid_argument("brute_paths is an oracle for n <= 3");
    if (i < 1 || i > n + 1) throw std::invalid_argument("brute_paths index out of range");
    PathGrid g = make_grid(n, i);
    PathSearch s(g);
    s.family(0);
    return s.count;
}

RatPoly genfun_qh(int n) {
    RatPoly out;
    for (int i = 1; i <= n + 1; ++i) {
        Rat qi(q_ni_det(n, i));
        for (int j = 1; j <= i; ++j) out += RatPoly::monomial(2 * i - 4 * j + 2, qi, 'x');
    }
    return out;
}

RatPoly genfun_qh_expansion(int n) {
    // (x^{4i}-1)/(x^{2i-2}(x^4-1)) = sum_{j=1}^{i} x^{2i-4j+2}, evaluated as
    // the geometric sum so everything stays polynomial
    RatPoly out;
    for (int i = 1; i <= n + 1; ++i) {
        Rat qi(q_ni_expand(n, i));
        for (int j = 1; j <= i; ++j) out += RatPoly::monomial(2 * i - 4 * j + 2, qi, 'x');
    }
    return out;
}

RatPoly genfun_qh_determinant(int n) {
    Matrix<RatPoly> m(n, n);
    RatPoly x2 = RatPoly::monomial(2, Rat(1), 'x') + RatPoly::monomial(-2, Rat(1), 'x');
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Int c1 = binom_safe(4 * n, 2 * n - 3 * j + i) - binom_safe(4 * n, 2 * n - 3 * j - i);
            Int c2 = binom_safe(4 * n, 2 * n - 3 * j + i + 1) - binom_safe(4 * n, 2 * n - 3 * j - i - 1);
            Int c3 = binom_safe(4 * n, 2 * n - 3 * j + i - 1) - binom_safe(4 * n, 2 * n - 3 * j - i + 1);
            m.at(i - 1, j - 1) = x2 * Rat(c1) + RatPoly(Rat(c2 + c3));
        }
    return det_bareiss(m);
}

bool check_lemma_a2(int r, std::mt19937_64& rng) {
    auto rnd = [&rng]() {
        std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
        return make_rat(num(rng), den(rng));
    };
    // distinct x_i so the right-hand side product is informative
    std::vector<Rat> x(r + 1), y(r + 1);
    std::set<std::string> seen;
    for (int i = 1; i <= r; ++i) {
        do {
            x[i] = rnd();
            x[i].canonicalize();
        } while (!seen.insert(x[i].get_str()).second);
    }
    for (int k = 2; k <= r; ++k) y[k] = rnd();
    Rat c = rnd();

    Matrix<Rat> m(r, r);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            Rat prod(1);
            for (int k = j + 1; k <= r; ++k) prod *= (x[i] - y[k] - c) * (x[i] + y[k]);
            m.at(i - 1, j - 1) = prod;
        }
    Rat lhs = det_field(m);
    Rat rhs(1);
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) rhs *= (x[j] - x[i]) * (c - x[i] - x[j]);
    return lhs == rhs;
}

}  // namespace asmkit
