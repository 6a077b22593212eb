#ifndef FGW_NUMERIC_HPP
#define FGW_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fgw {

// Exact arithmetic types. All invariants that must hold bit-exactly
// (word counts, zeta identities, Burnside divisibility) go through these.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt big_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Quotient that must be exact; throws if there is a remainder.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::invalid_argument("exact_div: zero divisor");
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::runtime_error("exact_div: division not exact");
    return q;
}

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const BigRat& q) { return q.get_d(); }
inline double to_double(const BigInt& z) { return z.get_d(); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline std::string to_string(const BigRat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline BigInt parse_int10(const std::string& s) {
    BigInt z;
    if (s.empty() || mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_int10: bad integer '" + s + "'");
    return z;
}

// Parses "p/q", plain integers, and decimal literals ("0.25" -> 1/4),
// always into an exact rational.
inline BigRat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos)
        return make_rat(parse_int10(s.substr(0, slash)), parse_int10(s.substr(slash + 1)));
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("parse_rat: malformed decimal '" + s + "'");
        return make_rat(parse_int10(digits), big_pow(BigInt(10), frac_len));
    }
    return BigRat(parse_int10(s));
}

// Value in Q[sqrt(q)], q a positive non-square integer: a + b*sqrt(q).
// Used where an identity over Z[sqrt(2r-1)] has to be verified exactly;
// the sqrt component must cancel at the end.
struct QuadRat {
    long q = 0;  // 0 marks "no radical attached yet"
    BigRat a, b;

    QuadRat() = default;
    QuadRat(long q_, BigRat a_, BigRat b_) : q(q_), a(std::move(a_)), b(std::move(b_)) {}
    static QuadRat integer(const BigRat& v) { return QuadRat(0, v, BigRat(0)); }

    bool is_zero() const { return a == 0 && b == 0; }
};

inline long quad_base(const QuadRat& x, const QuadRat& y) {
    if (x.q != 0 && y.q != 0 && x.q != y.q)
        throw std::invalid_argument("QuadRat: mismatched radicals");
    return x.q != 0 ? x.q : y.q;
}

inline QuadRat operator+(const QuadRat& x, const QuadRat& y) {
    return QuadRat(quad_base(x, y), x.a + y.a, x.b + y.b);
}
inline QuadRat operator-(const QuadRat& x, const QuadRat& y) {
    return QuadRat(quad_base(x, y), x.a - y.a, x.b - y.b);
}
inline QuadRat operator*(const QuadRat& x, const QuadRat& y) {
    long q = quad_base(x, y);
    return QuadRat(q, x.a * y.a + BigRat(q) * x.b * y.b, x.a * y.b + x.b * y.a);
}
inline QuadRat& operator+=(QuadRat& x, const QuadRat& y) { return x = x + y; }
inline bool operator==(const QuadRat& x, const QuadRat& y) {
    return x.a == y.a && x.b == y.b;
}

}  // namespace fgw

#endif
