#ifndef ASMKIT_SIXVERTEX_HPP
#define ASMKIT_SIXVERTEX_HPP

#include <asmkit/asm_matrix.hpp>
#include <asmkit/enumerate.hpp>
#include <asmkit/linalg.hpp>

#include <random>

namespace asmkit {

enum class GridKind { Dwbc, UTurn, UUTurn };

/// Grid geometries:
///   Dwbc(n)   — n x n, domain wall boundary.
///   UTurn(n)  — 2n x n, right boundary closed by n U-turns joining row
///               pairs (2k-1, 2k); row pair k carries (1/x_k, x_k).
///   UUTurn(n) — 2n x 2n, right U-turns as above plus n bottom U-turns
///               joining column pairs; column pair k carries (y_k, 1/y_k).
struct GridModel {
    GridKind kind = GridKind::Dwbc;
    int n = 0;

    int rows() const { return kind == GridKind::Dwbc ? n : 2 * n; }
    int cols() const { return kind == GridKind::UTurn ? n : (kind == GridKind::Dwbc ? n : 2 * n); }
    int right_turns() const { return kind == GridKind::Dwbc ? 0 : n; }
    int bottom_turns() const { return kind == GridKind::UUTurn ? n : 0; }
};

/// One ice-rule orientation of a grid model. Cells hold the ASM-style entry
/// of each degree-4 vertex; turn flags hold the free boundary bits.
struct SixVertexConfig {
    GridModel model;
    std::vector<int8_t> cells;
    std::vector<uint8_t> right_turn_down;    // pair k: 1 if the turn points down
    std::vector<uint8_t> bottom_turn_right;  // pair k: 1 if the turn points right

    int cell(int i, int j) const { return cells[static_cast<size_t>(i) * model.cols() + j]; }
};

void enumerate_configs(const GridModel& model,
                       const std::function<void(const SixVertexConfig&)>& visit);

/// Spectral data. Exactly zero or one slot may be symbolic, which is why the
/// whole module is generic over the scalar ring.
template <class T>
struct ParamSet {
    std::vector<T> x, y;
    T q{};
    T b{};
    T c{};
};

template <class T>
T config_weight(const SixVertexConfig& cfg, const ParamSet<T>& p);

template <class T>
T z_state_sum(const GridModel& model, const ParamSet<T>& p) {
    T total(0);
    enumerate_configs(model, [&](const SixVertexConfig& cfg) { total = total + config_weight(cfg, p); });
    return total;
}

// Printed determinant/Pfaffian partition functions, evaluated exactly at
// generic (non-repeating) parameter points over a field.
template <class T> T z_dwbc_formula(const ParamSet<T>& p);    // x,y size n
template <class T> T z_u_formula(const ParamSet<T>& p);       // x,y size n
template <class T> T z_uu_formula(const ParamSet<T>& p);      // x,y size n
template <class T> T z_o_formula(const ParamSet<T>& p);       // x size 2n
template <class T> T z_h_even_formula(const ParamSet<T>& p);  // x,y size n

struct LinkReport {
    bool pass = false;
    std::string detail;
};

/// Exact Laurent identity in symbolic x over Q(q): the DWBC state sum equals
/// sum_i A(n,i) s(q/x)^{i-1} s(qx)^{n-i} s(q^2)^{1-n} with brute-force A.
LinkReport refined_link_dwbc(int n);

/// The three-sum case decomposition of the U-turn state sum at b = q and its
/// condensed z-form, both as exact Laurent identities in x.
LinkReport refined_link_uturn(int n);

/// Formula evaluators against state sums at seeded random rational parameter
/// sets (exact equality, generic q).
LinkReport formula_vs_state(GridKind kind, int n, uint64_t seed, int trials);

Asm config_to_asm(const SixVertexConfig& cfg);     // Dwbc only
SixVertexConfig asm_to_config(const Asm& a);

// Implementation ---------------------------------------------------------

template <class T>
T config_weight(const SixVertexConfig& cfg, const ParamSet<T>& p) {
    const GridModel& m = cfg.model;
    const int rows = m.rows(), cols = m.cols();
    const T s2 = sigma(T(p.q * p.q));
    const T s2inv = inv(s2);
    T w(1);

    auto row_param = [&](int i) -> T {
        if (m.kind == GridKind::Dwbc) return p.x[i];
        // row pairs carry (1/x_k, x_k)
        return (i % 2 == 0) ? inv(p.x[i / 2]) : p.x[i / 2];
    };
    auto col_param_inv = [&](int j) -> T {
        // returns the factor multiplying the row parameter in the label
        if (m.kind == GridKind::Dwbc) return inv(p.y[j]);
        if (m.kind == GridKind::UTurn) return p.y[j];
        // UUTurn column pairs carry (y_k, 1/y_k)
        return (j % 2 == 0) ? p.y[j / 2] : inv(p.y[j / 2]);
    };

    for (int k = 0; k < m.right_turns(); ++k) {
        const T& t = p.x[k];
        w = w * (cfg.right_turn_down[k] ? sigma(T(p.b * p.q * t)) : sigma(T(p.b * inv(p.q) * inv(t))));
    }
    for (int k = 0; k < m.bottom_turns(); ++k) {
        const T& s = p.y[k];
        w = w * (cfg.bottom_turn_right[k] ? sigma(T(p.c * inv(p.q) * s)) : sigma(T(p.c * p.q * inv(s))));
    }

    std::vector<int8_t> colsum(cols, 0);
    for (int i = 0; i < rows; ++i) {
        int rsum = 0;
        for (int j = 0; j < cols; ++j) {
            const int e = cfg.cell(i, j);
            if (e == 0) {
                T u(row_param(i) * col_param_inv(j));
                const bool same = (rsum == colsum[j]);
                // (0,0),(1,1) -> sigma(q/u); (0,1),(1,0) -> sigma(q u)
                w = w * (same ? sigma(T(p.q * inv(u))) : sigma(T(p.q * u))) * s2inv;
            }
            rsum += e;
            colsum[j] = static_cast<int8_t>(colsum[j] + e);
        }
    }
    return w;
}

template <class T>
T z_dwbc_formula(const ParamSet<T>& p) {
    const int n = static_cast<int>(p.x.size());
    const T s2 = sigma(T(p.q * p.q));
    T pre = ring_pow(s2, n - n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pre = pre * alpha(T(p.x[i] * inv(p.y[j])), p.q);
    T den(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            den = den * sigma(T(inv(p.x[i]) * p.x[j])) * sigma(T(p.y[i] * inv(p.y[j])));
    Matrix<T> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = inv(alpha(T(p.x[i] * inv(p.y[j])), p.q));
    return pre * inv(den) * det_field(m);
}

template <class T>
T z_u_formula(const ParamSet<T>& p) {
    const int n = static_cast<int>(p.x.size());
    const T s2 = sigma(T(p.q * p.q));
    T pre = ring_pow(s2, n - 2 * n * n);
    for (int i = 0; i < n; ++i)
        pre = pre * sigma(T(p.b * inv(p.y[i]))) * sigma(T(p.q * p.q * p.x[i] * p.x[i]));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            pre = pre * alpha(T(p.x[i] * inv(p.y[j])), p.q) * alpha(T(p.x[i] * p.y[j]), p.q);
    T den(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            den = den * sigma(T(inv(p.x[i]) * p.x[j])) * sigma(T(p.y[i] * inv(p.y[j])));
    // the second product runs over i <= j, matching the UU-turn analog
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            den = den * sigma(T(inv(p.x[i]) * inv(p.x[j]))) * sigma(T(p.y[i] * p.y[j]));
    Matrix<T> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = inv(alpha(T(p.x[i] * inv(p.y[j])), p.q)) - inv(alpha(T(p.x[i] * p.y[j]), p.q));
    return pre * inv(den) * det_field(m);
}

template <class T>
T z_uu_formula(const ParamSet<T>& p) {
    const int n = static_cast<int>(p.x.size());
    const T s2 = sigma(T(p.q * p.q));
    T pre = ring_pow(s2, n - 4 * n * n);
    for (int i = 0; i < n; ++i)
        pre = pre * sigma(T(p.q * p.q * inv(p.y[i]) * inv(p.y[i]))) *
              sigma(T(p.q * p.q * p.x[i] * p.x[i]));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            T a1 = alpha(T(p.x[i] * p.y[j]), p.q), a2 = alpha(T(p.x[i] * inv(p.y[j])), p.q);
            pre = pre * a1 * a1 * a2 * a2;
        }
    T den(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            T d1 = sigma(T(inv(p.x[i]) * p.x[j])), d2 = sigma(T(p.y[i] * inv(p.y[j])));
            den = den * d1 * d1 * d2 * d2;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            T d1 = sigma(T(inv(p.x[i]) * inv(p.x[j]))), d2 = sigma(T(p.y[i] * p.y[j]));
            den = den * d1 * d1 * d2 * d2;
        }
    Matrix<T> mu(n, n), muu(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mu.at(i, j) = inv(alpha(T(p.x[i] * inv(p.y[j])), p.q)) - inv(alpha(T(p.x[i] * p.y[j]), p.q));
            T byb = sigma(T(p.b * inv(p.y[j]))), by = sigma(T(p.b * p.y[j]));
            T cx = sigma(T(p.c * p.x[i])), cxb = sigma(T(p.c * inv(p.x[i])));
            muu.at(i, j) = byb * cx * inv(sigma(T(p.q * p.x[i] * inv(p.y[j])))) -
                           byb * cxb * inv(sigma(T(p.q * inv(p.x[i]) * inv(p.y[j])))) -
                           by * cx * inv(sigma(T(p.q * p.x[i] * p.y[j]))) +
                           by * cxb * inv(sigma(T(p.q * inv(p.x[i]) * p.y[j])));
        }
    return pre * inv(den) * det_field(mu) * det_field(muu);
}

template <class T>
T z_o_formula(const ParamSet<T>& p) {
    const int twoN = static_cast<int>(p.x.size());
    if (twoN % 2 != 0) throw std::invalid_argument("z_o_formula needs 2n parameters");
    const int n = twoN / 2;
    const T s2 = sigma(T(p.q * p.q));
    T pre = ring_pow(s2, 2 * n - 2 * n * n);
    T den(1);
    for (int i = 0; i < twoN; ++i)
        for (int j = i + 1; j < twoN; ++j) {
            pre = pre * alpha(T(p.x[i] * p.x[j]), p.q);
            den = den * sigma(T(inv(p.x[i]) * p.x[j]));
        }
    SkewMatrix<T> sk(twoN);
    for (int i = 0; i < twoN; ++i)
        for (int j = i + 1; j < twoN; ++j)
            sk.at(i, j) = sigma(T(inv(p.x[i]) * p.x[j])) * inv(alpha(T(p.x[i] * p.x[j]), p.q));
    return pre * inv(den) * pfaffian(sk);
}

template <class T>
T z_h_even_formula(const ParamSet<T>& p) {
    const int n = static_cast<int>(p.x.size());
    const T s2 = sigma(T(p.q * p.q));
    T pre = ring_pow(s2, n - 2 * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            T a = alpha(T(p.x[i] * inv(p.y[j])), p.q);
            pre = pre * a * a;
        }
    T den(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            T d1 = sigma(T(inv(p.x[i]) * p.x[j])), d2 = sigma(T(p.y[i] * inv(p.y[j])));
            den = den * d1 * d1 * d2 * d2;
        }
    Matrix<T> m1(n, n), m2(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m1.at(i, j) = inv(alpha(T(p.x[i] * inv(p.y[j])), p.q));
            m2.at(i, j) = inv(sigma(T(p.q * inv(p.x[i]) * p.y[j]))) + inv(sigma(T(p.q * p.x[i] * inv(p.y[j]))));
        }
    return pre * inv(den) * det_field(m1) * det_field(m2);
}

}  // namespace asmkit

#endif
