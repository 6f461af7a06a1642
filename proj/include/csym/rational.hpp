#ifndef CSYM_RATIONAL_HPP
#define CSYM_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace csym {

// Exact arithmetic backbone: GMP integers and canonicalized rationals.
// mpq_class keeps den > 0 and gcd(|num|, den) = 1 after canonicalize().
using Int = mpz_class;
using Rat = mpq_class;

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a mathematical precondition fails (e.g. the type equalities
// required before an HLE system may be assembled). The message names the
// violated condition.
struct precondition_error : error {
    explicit precondition_error(const std::string& what) : error(what) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "123", "-4/5"; also a plain decimal numerator with optional "/den".
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return make_rat(Int(s), 1);
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw error("cannot parse rational: '" + s + "'");
    }
}

inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Int& z) { return z.get_str(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Exact m-th root of an integer, if one exists.
inline bool int_root(const Int& a, unsigned long m, Int& out) {
    if (m == 0) throw error("0-th root");
    if (a < 0 && m % 2 == 0) return false;
    Int abs_a = abs(a);
    Int r;
    int exact = mpz_root(r.get_mpz_t(), abs_a.get_mpz_t(), m);
    if (!exact) return false;
    out = (a < 0) ? Int(-r) : r;
    return true;
}

// Exact m-th root of a rational, if one exists (num and den separately).
inline bool rat_root(const Rat& q, unsigned long m, Rat& out) {
    Int rn, rd;
    if (!int_root(q.get_num(), m, rn)) return false;
    if (!int_root(q.get_den(), m, rd)) return false;
    out = make_rat(rn, rd);
    return true;
}

inline Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    if (q == 0 && e < 0) throw error("zero raised to negative power");
    Rat base = e < 0 ? Rat(1 / q) : q;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat num, den;
    mpz_pow_ui(num.get_num().get_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_pow_ui(num.get_den().get_mpz_t(), base.get_den().get_mpz_t(), k);
    num.canonicalize();
    return num;
}

} // namespace csym

#endif
