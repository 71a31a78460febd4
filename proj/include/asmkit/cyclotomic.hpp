#ifndef ASMKIT_CYCLOTOMIC_HPP
#define ASMKIT_CYCLOTOMIC_HPP

#include <asmkit/numbers.hpp>

#include <ostream>

namespace asmkit {

/// Element a + b*q of Q(q) with q^2 = q - 1 (so q is a primitive sixth
/// root of unity and q + 1/q = 1). This is the only extension field the
/// partition-function specializations ever need.
class Cyc {
public:
    Cyc() : a_(0), b_(0) {}
    Cyc(long v) : a_(v), b_(0) {}
    Cyc(const Int& v) : a_(v), b_(0) {}
    Cyc(const Rat& v) : a_(v), b_(0) {}
    Cyc(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

    static Cyc q() { return Cyc(Rat(0), Rat(1)); }

    const Rat& rat_part() const { return a_; }
    const Rat& q_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    // Norm to Q; positive definite, so zero only at zero.
    Rat norm() const { return a_ * a_ + a_ * b_ + b_ * b_; }

    // Algebraic conjugate: the other root of t^2 - t + 1 is 1 - q = 1/q.
    Cyc conj() const { return Cyc(a_ + b_, -b_); }

    Cyc inv() const {
        Rat n = norm();
        if (sgn(n) == 0) throw std::domain_error("inverse of zero in Q(q)");
        return Cyc((a_ + b_) / n, -b_ / n);
    }

    Cyc pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Cyc r(1), x = *this;
        while (e) {
            if (e & 1) r = r * x;
            x = x * x;
            e >>= 1;
        }
        return r;
    }

    friend Cyc operator+(const Cyc& u, const Cyc& v) { return Cyc(u.a_ + v.a_, u.b_ + v.b_); }
    friend Cyc operator-(const Cyc& u, const Cyc& v) { return Cyc(u.a_ - v.a_, u.b_ - v.b_); }
    friend Cyc operator-(const Cyc& u) { return Cyc(-u.a_, -u.b_); }
    friend Cyc operator*(const Cyc& u, const Cyc& v) {
        // (a+bq)(c+dq) with q^2 = q-1
        return Cyc(u.a_ * v.a_ - u.b_ * v.b_, u.a_ * v.b_ + u.b_ * v.a_ + u.b_ * v.b_);
    }
    friend Cyc operator/(const Cyc& u, const Cyc& v) { return u * v.inv(); }
    Cyc& operator+=(const Cyc& v) { *this = *this + v; return *this; }
    Cyc& operator-=(const Cyc& v) { *this = *this - v; return *this; }
    Cyc& operator*=(const Cyc& v) { *this = *this * v; return *this; }
    Cyc& operator/=(const Cyc& v) { *this = *this / v; return *this; }
    friend bool operator==(const Cyc& u, const Cyc& v) { return u.a_ == v.a_ && u.b_ == v.b_; }
    friend bool operator!=(const Cyc& u, const Cyc& v) { return !(u == v); }

    friend std::ostream& operator<<(std::ostream& os, const Cyc& v) {
        return os << v.a_.get_str() << (sgn(v.b_) < 0 ? "" : "+") << v.b_.get_str() << "q";
    }

private:
    Rat a_, b_;
};

inline bool is_zero(const Cyc& v) { return v.is_zero(); }
inline Cyc inv(const Cyc& u) { return u.inv(); }

// sigma(u) = u - 1/u; alpha(u) = sigma(qu) sigma(q/u). Generic over every
// ring in the artifact that supports inv().
template <class T>
T sigma(const T& u) {
    return u - inv(u);
}

template <class T>
T ring_pow(const T& base, long e) {
    if (e < 0) return ring_pow(inv(base), -e);
    T r(1), x = base;
    while (e) {
        if (e & 1) r = r * x;
        x = x * x;
        e >>= 1;
    }
    return r;
}

template <class T, class Q>
T alpha(const T& u, const Q& q) {
    T qu(T(q) * u);
    T qub(T(q) * inv(u));
    return sigma(qu) * sigma(qub);
}

inline Rat to_rat_exact(const Cyc& v) {
    if (!v.is_rational()) throw std::runtime_error("expected rational value in Q(q)");
    return v.rat_part();
}

}  // namespace asmkit

#endif
