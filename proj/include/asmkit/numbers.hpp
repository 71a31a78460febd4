#ifndef ASMKIT_NUMBERS_HPP
#define ASMKIT_NUMBERS_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace asmkit {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(num, den) keeps the raw pair; equality needs canonical form
inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Lattice-path semantics: 0 whenever no path exists (k < 0, m < 0 or m < k).
inline Int binom_safe(const Int& m, const Int& k) {
    if (k < 0 || m < 0 || m < k) return Int(0);
    Int r;
    mpz_bin_ui(r.get_mpz_t(), m.get_mpz_t(), k.get_ui());
    return r;
}

inline Int binom_safe(long m, long k) { return binom_safe(Int(m), Int(k)); }

// (a)_n = a(a+1)...(a+n-1), (a)_0 = 1.
inline Rat pochhammer(const Rat& a, long n) {
    if (n < 0) throw std::invalid_argument("pochhammer length must be >= 0");
    Rat r(1);
    Rat t = a;
    for (long k = 0; k < n; ++k) {
        r *= t;
        t += 1;
    }
    return r;
}

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline bool is_zero(const Int& v) { return sgn(v) == 0; }
inline bool is_zero(const Rat& v) { return sgn(v) == 0; }

inline Rat inv(const Rat& u) {
    if (is_zero(u)) throw std::domain_error("division by zero rational");
    return Rat(1) / u;
}

// Counts flow through Rat in several evaluators; a surviving denominator is a bug.
inline Int to_int_exact(const Rat& r) {
    if (r.get_den() != 1)
        throw std::runtime_error("expected integer, got " + r.get_str());
    return r.get_num();
}

inline std::string to_decimal(const Int& v) { return v.get_str(); }
inline std::string to_decimal(const Rat& v) { return v.get_str(); }

inline Int parse_int(const std::string& s) {
    Int v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad integer literal: " + s);
    return v;
}

inline Rat parse_rat(const std::string& s) {
    Rat v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    v.canonicalize();
    if (v.get_den() < 0) {
        v.get_num() = -v.get_num();
        v.get_den() = -v.get_den();
    }
    return v;
}

}  // namespace asmkit

#endif
