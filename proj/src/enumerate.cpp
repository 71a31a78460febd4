#include <asmkit/enumerate.hpp>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace asmkit {

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::BruteForce: return "brute-force";
        case Provenance::ClosedForm: return "closed-form";
        case Provenance::Convolution: return "convolution";
    }
    return "?";
}

bool class_order_compatible(SymmetryClass cls, int order) {
    if (order < 1) return false;
    switch (cls) {
        case SymmetryClass::Plain: return true;
        case SymmetryClass::VS:
        case SymmetryClass::VHS: return order % 2 == 1;
        case SymmetryClass::HTS: return true;
        case SymmetryClass::QTS: return order % 4 != 2;
        case SymmetryClass::QQTS: return order % 4 == 2;
        case SymmetryClass::OS: return order % 2 == 0;
        case SymmetryClass::OOS: return order % 2 == 1;
        case SymmetryClass::VOS: return order % 8 == 1 || order % 8 == 3;
        case SymmetryClass::VHP: return order % 4 == 2;  // order 2 has an empty class
    }
    return false;
}

std::vector<int> stat_domain(SymmetryClass cls, int order, BoundaryStat stat) {
    auto range = [](int lo, int hi) {
        std::vector<int> r;
        for (int i = lo; i <= hi; ++i) r.push_back(i);
        return r;
    };
    if (cls == SymmetryClass::VHP) {
        // rows 4n+1, cols 4n+3; the second row / second column carry a
        // mirrored pair of 1s, so only the first half can occur
        int n = (order - 2) / 4;
        if (stat == BoundaryStat::SecondRowFirstOne) return range(1, 2 * n + 1);
        if (stat == BoundaryStat::SecondColFirstOne) return range(1, 2 * n + 1);
        throw std::invalid_argument("statistic not defined for VHP");
    }
    switch (stat) {
        case BoundaryStat::FirstRowOne:
        case BoundaryStat::LastRowOne:
        case BoundaryStat::FirstColOne:
            return range(1, order);
        case BoundaryStat::SecondRowFirstOne:
            if (cls == SymmetryClass::VS || cls == SymmetryClass::VHS || cls == SymmetryClass::VOS)
                return range(1, order / 2);  // the two 1s straddle the center
            return range(1, order);
        case BoundaryStat::SecondColFirstOne:
            return range(1, order);
    }
    return range(1, order);
}

namespace {

struct OrbitSpec {
    int N = 0;
    std::vector<int> rep;       // row-major cell -> orbit representative
    std::vector<int8_t> forced; // -2 if free, else the forced value
};

constexpr int8_t kFree = -2;

OrbitSpec build_spec(SymmetryClass cls, int N) {
    OrbitSpec s;
    s.N = N;
    s.rep.resize(static_cast<size_t>(N) * N);
    std::iota(s.rep.begin(), s.rep.end(), 0);
    s.forced.assign(static_cast<size_t>(N) * N, kFree);

    auto idx = [N](int i, int j) { return i * N + j; };
    std::vector<int> parent(s.rep);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    auto unite = [&](int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    };

    using CellMap = std::function<std::pair<int, int>(int, int)>;
    std::vector<CellMap> gens;
    CellMap vert = [N](int i, int j) { return std::make_pair(i, N - 1 - j); };
    CellMap horiz = [N](int i, int j) { return std::make_pair(N - 1 - i, j); };
    CellMap halfturn = [N](int i, int j) { return std::make_pair(N - 1 - i, N - 1 - j); };
    CellMap quarter = [N](int i, int j) { return std::make_pair(j, N - 1 - i); };
    CellMap diag = [](int i, int j) { return std::make_pair(j, i); };
    CellMap anti = [N](int i, int j) { return std::make_pair(N - 1 - j, N - 1 - i); };

    std::vector<int> exempt;  // cells left untied (quasi quarter turn center)

    switch (cls) {
        case SymmetryClass::Plain: break;
        case SymmetryClass::VS: gens = {vert}; break;
        case SymmetryClass::VHS: gens = {vert, horiz}; break;
        case SymmetryClass::HTS: gens = {halfturn}; break;
        case SymmetryClass::QTS: {
            gens = {quarter};
            if (N % 2 == 1) {
                int m = (N - 1) / 2;
                s.forced[idx(m, m)] = (m % 2 == 0) ? 1 : -1;
            }
            break;
        }
        case SymmetryClass::QQTS: {
            gens = {quarter};
            int h = N / 2;
            exempt = {idx(h - 1, h - 1), idx(h - 1, h), idx(h, h - 1), idx(h, h)};
            break;
        }
        case SymmetryClass::OS: {
            gens = {diag};
            for (int i = 0; i < N; ++i) s.forced[idx(i, i)] = 0;
            break;
        }
        case SymmetryClass::OOS: {
            gens = {diag, anti};
            int m = (N - 1) / 2;
            for (int i = 0; i < N; ++i) {
                if (i != m) {
                    s.forced[idx(i, i)] = 0;
                    s.forced[idx(i, N - 1 - i)] = 0;
                }
            }
            s.forced[idx(m, m)] = (m % 2 == 0) ? 1 : -1;
            break;
        }
        case SymmetryClass::VOS: {
            gens = {vert, diag};
            int m = (N - 1) / 2;
            for (int i = 0; i < N; ++i)
                if (i != m) s.forced[idx(i, i)] = 0;
            break;
        }
        case SymmetryClass::VHP:
            throw std::invalid_argument("VHP uses enumerate_perverse");
    }

    auto is_exempt = [&](int c) {
        return std::find(exempt.begin(), exempt.end(), c) != exempt.end();
    };
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            int c = idx(i, j);
            if (is_exempt(c)) continue;
            for (const auto& g : gens) {
                auto [i2, j2] = g(i, j);
                int c2 = idx(i2, j2);
                if (!is_exempt(c2)) unite(c, c2);
            }
        }
    // iterate unions to closure (generators compose)
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                int c = idx(i, j);
                if (is_exempt(c)) continue;
                for (const auto& g : gens) {
                    auto [i2, j2] = g(i, j);
                    int c2 = idx(i2, j2);
                    if (!is_exempt(c2) && find(c) != find(c2)) {
                        unite(c, c2);
                        changed = true;
                    }
                }
            }
    }
    for (size_t c = 0; c < s.rep.size(); ++c) s.rep[c] = find(static_cast<int>(c));
    // propagate forced values across orbits
    for (size_t c = 0; c < s.rep.size(); ++c) {
        if (s.forced[c] != kFree && s.forced[s.rep[c]] == kFree)
            s.forced[s.rep[c]] = s.forced[c];
    }
    for (size_t c = 0; c < s.rep.size(); ++c)
        if (s.forced[s.rep[c]] != kFree) s.forced[c] = s.forced[s.rep[c]];
    return s;
}

bool qqt_center_ok(const std::vector<int8_t>& val, int N) {
    int h = N / 2;
    auto v = [&](int i, int j) { return val[static_cast<size_t>(i) * N + j]; };
    int p = v(h - 1, h - 1), q = v(h - 1, h), r = v(h, h - 1), t = v(h, h);
    return (q == 0 && r == 0) && ((p == 1 && t == 1) || (p == -1 && t == -1));
}

struct Searcher {
    const OrbitSpec& spec;
    const std::function<void(const std::vector<int8_t>&)>& emit;
    SymmetryClass cls;
    std::vector<int8_t> val;
    std::vector<int8_t> rowsum, colsum;

    Searcher(const OrbitSpec& s, SymmetryClass c,
             const std::function<void(const std::vector<int8_t>&)>& e)
        : spec(s), emit(e), cls(c) {
        val.assign(static_cast<size_t>(s.N) * s.N, 0);
        rowsum.assign(s.N, 0);
        colsum.assign(s.N, 0);
    }

    void run(int from, int to) {
        if (from == to) {
            finish();
            return;
        }
        const int N = spec.N;
        const int i = from / N, j = from % N;
        int8_t lo, hi;
        if (spec.forced[from] != kFree) {
            lo = hi = spec.forced[from];
        } else if (spec.rep[from] != from) {
            lo = hi = val[spec.rep[from]];
        } else {
            lo = -1;
            hi = 1;
        }
        for (int8_t v = lo; v <= hi; ++v) {
            int r = rowsum[i] + v;
            if (r < 0 || r > 1) continue;
            int c = colsum[j] + v;
            if (c < 0 || c > 1) continue;
            if (j == N - 1 && r != 1) continue;
            if (i == N - 1 && c != 1) continue;
            val[from] = v;
            rowsum[i] = static_cast<int8_t>(r);
            colsum[j] = static_cast<int8_t>(c);
            run(from + 1, to);
            rowsum[i] = static_cast<int8_t>(r - v);
            colsum[j] = static_cast<int8_t>(c - v);
        }
        val[from] = 0;
    }

    void finish() {
        if (cls == SymmetryClass::QQTS && !qqt_center_ok(val, spec.N)) return;
        emit(val);
    }

    // replay a fixed prefix, returns false if it no longer satisfies checks
    bool replay(const std::vector<int8_t>& prefix) {
        const int N = spec.N;
        for (size_t c = 0; c < prefix.size(); ++c) {
            const int i = static_cast<int>(c) / N, j = static_cast<int>(c) % N;
            int8_t v = prefix[c];
            int r = rowsum[i] + v, cc = colsum[j] + v;
            if (r < 0 || r > 1 || cc < 0 || cc > 1) return false;
            if (j == N - 1 && r != 1) return false;
            if (i == N - 1 && cc != 1) return false;
            val[c] = v;
            rowsum[i] = static_cast<int8_t>(r);
            colsum[j] = static_cast<int8_t>(cc);
        }
        return true;
    }
};

// collect DFS frames at a prefix depth with at least `want` frames (or give up
// at the full depth)
int collect_frames(const OrbitSpec& spec, SymmetryClass cls, size_t want, int max_depth,
                   std::vector<std::vector<int8_t>>& frames) {
    int depth = spec.N;  // start at one row
    while (true) {
        frames.clear();
        std::function<void(const std::vector<int8_t>&)> nop = [](const std::vector<int8_t>&) {};
        Searcher s(spec, cls, nop);
        std::function<void(int)> rec = [&](int from) {
            if (from == depth) {
                frames.emplace_back(s.val.begin(), s.val.begin() + depth);
                return;
            }
            const int N = spec.N;
            const int i = from / N, j = from % N;
            int8_t lo, hi;
            if (spec.forced[from] != kFree) lo = hi = spec.forced[from];
            else if (spec.rep[from] != from) lo = hi = s.val[spec.rep[from]];
            else { lo = -1; hi = 1; }
            for (int8_t v = lo; v <= hi; ++v) {
                int r = s.rowsum[i] + v;
                if (r < 0 || r > 1) continue;
                int c = s.colsum[j] + v;
                if (c < 0 || c > 1) continue;
                if (j == N - 1 && r != 1) continue;
                if (i == N - 1 && c != 1) continue;
                s.val[from] = v;
                s.rowsum[i] = static_cast<int8_t>(r);
                s.colsum[j] = static_cast<int8_t>(c);
                rec(from + 1);
                s.rowsum[i] = static_cast<int8_t>(r - v);
                s.colsum[j] = static_cast<int8_t>(c - v);
            }
            s.val[from] = 0;
        };
        rec(0);
        if (frames.size() >= want || depth >= max_depth) return depth;
        depth += spec.N;
        if (depth > max_depth) depth = max_depth;
    }
}

void search_class(SymmetryClass cls, int order, int jobs,
                  const std::function<void(const std::vector<int8_t>&)>& emit_serial,
                  const std::function<std::function<void(const std::vector<int8_t>&)>(int)>&
                      make_worker_emit) {
    OrbitSpec spec = build_spec(cls, order);
    const int total_cells = order * order;
    if (jobs <= 1 || !make_worker_emit) {
        Searcher s(spec, cls, emit_serial);
        s.run(0, total_cells);
        return;
    }
    std::vector<std::vector<int8_t>> frames;
    int depth = collect_frames(spec, cls, static_cast<size_t>(jobs) * 16, total_cells, frames);
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) {
        pool.emplace_back([&, w]() {
            auto emit = make_worker_emit(w);
            for (size_t f = w; f < frames.size(); f += jobs) {
                Searcher s(spec, cls, emit);
                if (!s.replay(frames[f])) continue;
                s.run(depth, total_cells);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

void enumerate_class(SymmetryClass cls, int order,
                     const std::function<void(const Asm&)>& visit) {
    if (!class_order_compatible(cls, order))
        throw std::invalid_argument("class/order mismatch: " + class_name(cls) + " order " +
                                    std::to_string(order));
    if (cls == SymmetryClass::VHP) throw std::invalid_argument("VHP uses enumerate_perverse");
    auto emit = [&](const std::vector<int8_t>& val) {
        visit(AsmBuilder::adopt(order, val));
    };
    search_class(cls, order, 1, emit, nullptr);
}

void enumerate_asms(int n, const std::function<void(const Asm&)>& visit) {
    enumerate_class(SymmetryClass::Plain, n, visit);
}

namespace {

// Reduced matrix for order-(4n+2) VHPASMs: (2n+1) x (2n+1) over {-1,0,1,*},
// fixed last column (1,-1,...,-1,*)^T and last row (-1,1,...,1,*); inner
// cells searched with prefix-sum pruning, then the full perverse matrix is
// rebuilt and validated.
void enumerate_perverse_impl(int n, const std::function<void(const PerverseAsm&)>& visit) {
    if (n <= 0) return;  // no VHPASM exists at n = 0
    const int m = 2 * n;  // free inner block is m x m
    std::vector<int8_t> lastcol(m), lastrow(m);
    for (int i = 0; i < m; ++i) lastcol[i] = (i % 2 == 0) ? 1 : -1;
    for (int j = 0; j < m; ++j) lastrow[j] = (j % 2 == 0) ? -1 : 1;

    std::vector<int8_t> cell(static_cast<size_t>(m) * m, 0);
    std::vector<int8_t> colsum(m, 0);

    const int rows = 4 * n + 1, cols = 4 * n + 3;
    std::vector<int8_t> full(static_cast<size_t>(rows) * cols, 0);

    std::function<void(int, int, int)> rec = [&](int i, int j, int rsum) {
        if (i == m) {
            for (int jj = 0; jj < m; ++jj) {
                int c = colsum[jj] + lastrow[jj];
                if (c < 0 || c > 1) return;
            }
            // assemble the full matrix: reduced content occupies rows 0..2n,
            // columns 1..2n+1 of the full grid
            std::fill(full.begin(), full.end(), 0);
            auto F = [&](int r, int c) -> int8_t& {
                return full[static_cast<size_t>(r) * cols + c];
            };
            F(2 * n, 0) = 1;
            F(2 * n, cols - 1) = 1;
            for (int r = 0; r <= 2 * n; ++r)
                for (int c = 0; c <= 2 * n; ++c) {
                    int8_t v;
                    if (r < m && c < m) v = cell[static_cast<size_t>(r) * m + c];
                    else if (r < m) v = lastcol[r];
                    else if (c < m) v = lastrow[c];
                    else v = PerverseAsm::kStar;
                    F(r, c + 1) = v;
                }
            for (int r = 0; r <= 2 * n; ++r)
                for (int c = 2 * n + 2; c < cols - 1; ++c) F(r, c) = F(r, cols - 1 - c);
            for (int r = 2 * n + 1; r < rows; ++r)
                for (int c = 0; c < cols; ++c) F(r, c) = F(rows - 1 - r, c);
            // belt and braces: revalidate through the public checker
            std::vector<std::vector<int>> grid(rows, std::vector<int>(cols));
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c) grid[r][c] = F(r, c);
            try {
                visit(PerverseAsm::validate(grid));
            } catch (const std::invalid_argument&) {
                // candidate fails the full perverse conditions; skip
            }
            return;
        }
        if (j == m) {
            int fin = rsum + lastcol[i];
            if (fin < 0 || fin > 1) return;
            rec(i + 1, 0, 0);
            return;
        }
        for (int8_t v = -1; v <= 1; ++v) {
            int r = rsum + v;
            if (r < 0 || r > 1) continue;
            int c = colsum[j] + v;
            if (c < 0 || c > 1) continue;
            cell[static_cast<size_t>(i) * m + j] = v;
            colsum[j] = static_cast<int8_t>(c);
            rec(i, j + 1, r);
            colsum[j] = static_cast<int8_t>(c - v);
        }
        cell[static_cast<size_t>(i) * m + j] = 0;
    };
    rec(0, 0, 0);
}

}  // namespace

void enumerate_perverse(int n, const std::function<void(const PerverseAsm&)>& visit) {
    enumerate_perverse_impl(n, visit);
}

RefinedTable refined_table(SymmetryClass cls, int order, BoundaryStat stat, int jobs) {
    if (!class_order_compatible(cls, order))
        throw std::invalid_argument("class/order mismatch: " + class_name(cls) + " order " +
                                    std::to_string(order));
    RefinedTable t;
    t.cls = cls;
    t.order = order;
    t.stat = stat;
    t.provenance = Provenance::BruteForce;
    for (int p : stat_domain(cls, order, stat)) t.counts[p] = 0;

    if (cls == SymmetryClass::VHP) {
        int n = (order - 2) / 4;
        enumerate_perverse(n, [&](const PerverseAsm& p) {
            int pos = (stat == BoundaryStat::SecondRowFirstOne) ? statistic_row(p)
                                                               : statistic_col(p);
            t.counts[pos] += 1;
        });
        return t;
    }

    if (jobs <= 1) {
        enumerate_class(cls, order, [&](const Asm& a) { t.counts[statistic(a, stat)] += 1; });
        return t;
    }

    // one plain counter vector per worker; merged afterwards (associative and
    // commutative, so the partition does not affect the result)
    std::vector<std::vector<uint64_t>> buckets(jobs, std::vector<uint64_t>(order + 2, 0));
    auto make_emit = [&](int w) -> std::function<void(const std::vector<int8_t>&)> {
        return [&, w](const std::vector<int8_t>& val) {
            Asm a = AsmBuilder::adopt(order, val);
            buckets[w][statistic(a, stat)] += 1;
        };
    };
    search_class(cls, order, jobs, nullptr, make_emit);
    for (const auto& b : buckets)
        for (int p = 0; p <= order + 1; ++p)
            if (b[p]) t.counts[p] += Int(static_cast<unsigned long>(b[p]));
    return t;
}

Int count_total(SymmetryClass cls, int order, int jobs) {
    if (cls == SymmetryClass::VHP) {
        Int c = 0;
        enumerate_perverse((order - 2) / 4, [&](const PerverseAsm&) { c += 1; });
        return c;
    }
    BoundaryStat s = BoundaryStat::FirstRowOne;
    return refined_table(cls, order, s, jobs).total();
}

}  // namespace asmkit
