#ifndef FGW_POLY_HPP
#define FGW_POLY_HPP

#include <string>
#include <vector>

#include "fgw/matrix.hpp"
#include "fgw/numeric.hpp"

namespace fgw {

// Univariate polynomial, canonical form (no trailing zeros).
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(size_t deg, T coeff = T(1)) {
        std::vector<T> c(deg + 1, T());
        c[deg] = std::move(coeff);
        return Poly(std::move(c));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for 0
    bool is_zero() const { return c_.empty(); }

    T coeff(size_t i) const { return i < c_.size() ? c_[i] : T(); }
    const std::vector<T>& coeffs() const { return c_; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly operator+(const Poly& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T());
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T());
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<T> r(c_.size() + o.c_.size() - 1, T());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == T()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        }
        return Poly(std::move(r));
    }

    Poly pow(unsigned long e) const {
        Poly result({T(1)});
        Poly base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

    template <class V>
    V eval(const V& x) const {
        V acc = V(0);
        for (size_t i = c_.size(); i-- > 0;) {
            acc = acc * x;
            acc += V(c_[i]);
        }
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T()) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPoly = Poly<BigInt>;
using RationalPoly = Poly<BigRat>;

// det(uI - A), exact, division-free up to the exact integer divisions of
// the Faddeev-LeVerrier recurrence.
inline IntPoly char_poly(const Mat<BigInt>& a) {
    size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("char_poly: not square");
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    Mat<BigInt> m(n, n);
    for (size_t k = 1; k <= n; ++k) {
        // M_k = A*M_{k-1} + c_{n-k+1} I
        m = a * m;
        for (size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        BigInt t = (a * m).trace();
        c[n - k] = exact_div(-t, BigInt(static_cast<long>(k)));
    }
    return IntPoly(std::move(c));
}

// det(I - uA) = u^n det((1/u)I - A), the reversed characteristic polynomial.
inline IntPoly det_i_minus_ua(const Mat<BigInt>& a) {
    IntPoly p = char_poly(a);
    size_t n = a.rows();
    std::vector<BigInt> rev(n + 1);
    for (size_t i = 0; i <= n; ++i) rev[n - i] = p.coeff(i);
    return IntPoly(std::move(rev));
}

// Power sums p_m = tr(A^m) recovered from det(uI - A) by Newton's identities.
inline std::vector<BigInt> newton_power_sums(const IntPoly& charpoly, size_t m_max) {
    long n = charpoly.degree();
    if (n < 0 || charpoly.coeff(n) != 1)
        throw std::invalid_argument("newton_power_sums: expects a monic char poly");
    // e_i = (-1)^i * coeff(n-i)
    std::vector<BigInt> e(n + 1);
    for (long i = 0; i <= n; ++i)
        e[i] = (i % 2 == 0) ? charpoly.coeff(n - i) : -charpoly.coeff(n - i);
    std::vector<BigInt> p(m_max + 1);
    p[0] = n;
    for (size_t k = 1; k <= m_max; ++k) {
        BigInt s = 0;
        for (long i = 1; i <= n && static_cast<size_t>(i) <= k; ++i) {
            BigInt term = e[i] * (static_cast<size_t>(i) == k ? BigInt(static_cast<long>(k))
                                                              : p[k - i]);
            s += (i % 2 == 1) ? term : -term;
        }
        p[k] = s;
    }
    return p;
}

// Renders e.g. "1 - 3u^2 - 2u^3" (ascending powers, unit coefficients
// suppressed on the variable terms).
inline std::string poly_to_string(const IntPoly& p, const std::string& var = "u") {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (long i = 0; i <= p.degree(); ++i) {
        BigInt c = p.coeff(i);
        if (c == 0) continue;
        bool neg = c < 0;
        BigInt mag = abs(c);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (i == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str();
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace fgw

#endif
