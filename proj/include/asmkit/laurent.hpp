#ifndef ASMKIT_LAURENT_HPP
#define ASMKIT_LAURENT_HPP

#include <asmkit/cyclotomic.hpp>

#include <map>
#include <ostream>
#include <sstream>

namespace asmkit {

/// Single-variable Laurent polynomial with exponent -> coefficient map in
/// canonical form (no zero coefficients stored). The variable tag ('z', 'x')
/// is carried along; constants are tag-free and combine with anything.
template <class R>
class Laurent {
public:
    using coeff_type = R;

    Laurent() : var_(0) {}
    Laurent(const R& c) : var_(0) {
        if (!asmkit::is_zero(c)) c_[0] = c;
    }
    Laurent(long c) : Laurent(R(c)) {}

    static Laurent monomial(int e, R c = R(1), char var = 'z') {
        Laurent p;
        p.var_ = (e == 0) ? 0 : var;
        if (!asmkit::is_zero(c)) p.c_[e] = std::move(c);
        return p;
    }
    static Laurent variable(char var = 'z') { return monomial(1, R(1), var); }

    char var() const { return var_; }
    const std::map<int, R>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }

    R coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? R(0) : it->second;
    }
    int min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    // z -> 1/z
    Laurent bar() const {
        Laurent r;
        r.var_ = var_;
        for (const auto& [e, v] : c_) r.c_[-e] = v;
        return r;
    }

    Laurent pow(long k) const {
        if (k < 0) return unit_inv().pow(-k);
        Laurent r = Laurent(R(1)), x = *this;
        while (k) {
            if (k & 1) r = r * x;
            x = x * x;
            k >>= 1;
        }
        return r;
    }

    // Inverse of a unit (single monomial with invertible coefficient).
    Laurent unit_inv() const {
        if (c_.size() != 1)
            throw std::domain_error("Laurent inverse requires a unit monomial");
        const auto& [e, v] = *c_.begin();
        return monomial(-e, asmkit::inv(v), var_);
    }

    template <class C>
    C eval(const C& point) const {
        C r(0);
        for (const auto& [e, v] : c_) {
            if (e >= 0) {
                C p(1);
                for (int k = 0; k < e; ++k) p = p * point;
                r = r + C(v) * p;
            } else {
                if (asmkit::is_zero(point))
                    throw std::domain_error("evaluating negative exponent at zero");
                C ip = asmkit::inv(point);
                C p(1);
                for (int k = 0; k < -e; ++k) p = p * ip;
                r = r + C(v) * p;
            }
        }
        return r;
    }

    friend Laurent operator+(const Laurent& p, const Laurent& r) {
        Laurent out = p;
        out.var_ = merge_var(p, r);
        for (const auto& [e, v] : r.c_) out.add_term(e, v);
        return out;
    }
    friend Laurent operator-(const Laurent& p) {
        Laurent out;
        out.var_ = p.var_;
        for (const auto& [e, v] : p.c_) out.c_[e] = -v;
        return out;
    }
    friend Laurent operator-(const Laurent& p, const Laurent& r) { return p + (-r); }
    friend Laurent operator*(const Laurent& p, const Laurent& r) {
        Laurent out;
        out.var_ = merge_var(p, r);
        for (const auto& [e1, v1] : p.c_)
            for (const auto& [e2, v2] : r.c_) out.add_term(e1 + e2, v1 * v2);
        return out;
    }
    friend Laurent operator*(const Laurent& p, const R& c) { return p * Laurent(c); }
    friend Laurent operator*(const R& c, const Laurent& p) { return Laurent(c) * p; }
    friend Laurent operator/(const Laurent& p, const Laurent& r) { return p * r.unit_inv(); }
    Laurent& operator+=(const Laurent& r) { *this = *this + r; return *this; }
    Laurent& operator-=(const Laurent& r) { *this = *this - r; return *this; }
    Laurent& operator*=(const Laurent& r) { *this = *this * r; return *this; }

    friend bool operator==(const Laurent& p, const Laurent& r) { return p.c_ == r.c_; }
    friend bool operator!=(const Laurent& p, const Laurent& r) { return !(p == r); }

    friend std::ostream& operator<<(std::ostream& os, const Laurent& p) {
        if (p.c_.empty()) return os << "0";
        char v = p.var_ ? p.var_ : 'z';
        bool first = true;
        for (const auto& [e, c] : p.c_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            if (e != 0) os << v << "^" << e;
        }
        return os;
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

private:
    static char merge_var(const Laurent& p, const Laurent& r) {
        if (p.var_ == 0) return r.var_;
        if (r.var_ == 0 || r.var_ == p.var_) return p.var_;
        throw std::invalid_argument("mixing Laurent variables");
    }
    void add_term(int e, const R& v) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            if (!asmkit::is_zero(v)) c_[e] = v;
        } else {
            it->second = it->second + v;
            if (asmkit::is_zero(it->second)) c_.erase(it);
        }
    }

    char var_;
    std::map<int, R> c_;
};

using RatPoly = Laurent<Rat>;
using CycPoly = Laurent<Cyc>;

template <class R>
bool is_zero(const Laurent<R>& p) {
    return p.is_zero();
}

template <class R>
Laurent<R> inv(const Laurent<R>& p) {
    return p.unit_inv();
}

// Rational coefficients embed into Q(q) on demand so identity checks can mix
// integer tables with q-expressions.
inline CycPoly promote(const RatPoly& p) {
    CycPoly out;
    for (const auto& [e, v] : p.coeffs()) out += CycPoly::monomial(e, Cyc(v), p.var() ? p.var() : 'z');
    return out;
}

// Exact quotient of Laurent polynomials over a coefficient field; the
// remainder must vanish (Bareiss pivoting relies on this).
template <class R>
Laurent<R> exact_div(const Laurent<R>& a, const Laurent<R>& b) {
    if (b.is_zero()) throw std::domain_error("Laurent division by zero");
    if (a.is_zero()) return a;
    Laurent<R> rem = a;
    Laurent<R> quot;
    char var = b.var() ? b.var() : a.var();
    const int db = b.max_exp();
    const int quot_min = a.min_exp() - b.min_exp();
    R lead_inv = asmkit::inv(b.coeff(db));
    while (!rem.is_zero() && rem.max_exp() - db >= quot_min) {
        int e = rem.max_exp() - db;
        auto t = Laurent<R>::monomial(e, rem.coeff(rem.max_exp()) * lead_inv, var);
        quot += t;
        rem -= t * b;  // strictly lowers rem.max_exp()
    }
    if (!rem.is_zero()) throw std::runtime_error("inexact Laurent division");
    return quot;
}

inline Int exact_div(const Int& a, const Int& b) {
    if (sgn(b) == 0) throw std::domain_error("integer division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(r) != 0) throw std::runtime_error("inexact integer division");
    return q;
}

inline Rat exact_div(const Rat& a, const Rat& b) { return a / b; }
inline Cyc exact_div(const Cyc& a, const Cyc& b) { return a / b; }

}  // namespace asmkit

#endif
