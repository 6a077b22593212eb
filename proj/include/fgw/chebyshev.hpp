#ifndef FGW_CHEBYSHEV_HPP
#define FGW_CHEBYSHEV_HPP

#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgw/laurent.hpp"
#include "fgw/numeric.hpp"
#include "fgw/poly.hpp"

namespace fgw {

enum class ChebKind { T, U };
enum class SymKind { R, S };  // R = symmetrized T, S = symmetrized U

// T_n / U_n with exact integer coefficients via the shared three-term
// recurrence p_{n+1} = 2x p_n - p_{n-1}.
struct ChebPoly {
    ChebKind kind;
    int n;
    std::vector<BigInt> coeffs;  // coeff of x^j at index j

    BigInt coeff(int j) const {
        return (j >= 0 && j < static_cast<int>(coeffs.size())) ? coeffs[j] : BigInt(0);
    }
};

inline ChebPoly cheb(ChebKind kind, int n) {
    if (n < 0) throw std::invalid_argument("cheb: negative degree");
    std::vector<BigInt> prev{1};                                   // T_0 = U_0 = 1
    std::vector<BigInt> cur = (kind == ChebKind::T)
                                  ? std::vector<BigInt>{0, 1}      // T_1 = x
                                  : std::vector<BigInt>{0, 2};     // U_1 = 2x
    if (n == 0) return {kind, 0, prev};
    for (int m = 1; m < n; ++m) {
        std::vector<BigInt> next(m + 2);
        for (size_t j = 0; j < cur.size(); ++j) next[j + 1] = 2 * cur[j];
        for (size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {kind, n, cur};
}

// Coefficient of x^{n-2m} in T_n: (-1)^m n/(n-m) C(n-m,m) 2^{n-2m-1}.
inline BigInt cheb_coeff_closed_form(int n, int m) {
    if (n < 1 || m < 0 || 2 * m > n)
        throw std::invalid_argument("cheb_coeff_closed_form: need n >= 1, 0 <= m <= n/2");
    // Assemble as n * C(n-m, m) * 2^{n-2m} / (2(n-m)); the division is exact.
    BigInt num = BigInt(n) * binomial(n - m, m) * big_pow(BigInt(2), n - 2 * m);
    BigInt val = exact_div(num, BigInt(2) * BigInt(n - m));
    return (m % 2 == 0) ? val : -val;
}

inline double cheb_eval(ChebKind kind, int n, double x) {
    double prev = 1.0, cur = (kind == ChebKind::T) ? x : 2 * x;
    if (n == 0) return prev;
    for (int m = 1; m < n; ++m) {
        double next = 2 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// T_n((c/2k) sum_i (x_i + 1/x_i)) resp. U_n(...), exact Laurent expansion
// over k variables with rational c. Computed by running the three-term
// recurrence on Laurent values; each multiplication by the argument is a
// 2k-term shift-add.
struct SymmetrizedCheb {
    SymKind kind;
    int n;
    BigRat c;
    int k;
    LaurentQN coeffs;
};

namespace detail {
// p * (c/2k) * sum_i (x_i + 1/x_i)
inline LaurentQN mul_by_base(const LaurentQN& p, const BigRat& scale, int k) {
    LaurentQN r(k);
    LaurentQN::Exp e2;
    for (auto& [e, coef] : p.terms()) {
        BigRat sc = coef * scale;
        for (int i = 0; i < k; ++i)
            for (int d : {+1, -1}) {
                e2 = e;
                e2[i] += d;
                r.add(e2, sc);
            }
    }
    return r;
}
}  // namespace detail

inline SymmetrizedCheb symmetrized(SymKind kind, int n, const BigRat& c, int k) {
    if (k < 1) throw std::invalid_argument("symmetrized: need k >= 1");
    if (n < 0) throw std::invalid_argument("symmetrized: negative degree");
    if (c <= 0)
        throw std::invalid_argument(
            "symmetrized: parameter c must be a positive rational (negative and "
            "complex c are out of scope)");
    BigRat scale = c / (BigRat(2) * BigRat(k));
    LaurentQN prev = LaurentQN::constant(k, BigRat(1));  // degree 0
    if (n == 0) return {kind, 0, c, k, prev};
    LaurentQN cur = detail::mul_by_base(prev, scale, k);                 // T_1 = B
    if (kind == SymKind::S) cur = cur + detail::mul_by_base(prev, scale, k);  // U_1 = 2B
    for (int m = 1; m < n; ++m) {
        LaurentQN next = detail::mul_by_base(cur, scale, k);
        next = next + detail::mul_by_base(cur, scale, k);  // 2B * cur
        next = next - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {kind, n, c, k, cur};
}

// Coefficient of x^j in T_n((c/2)(x + 1/x)) by the explicit binomial
// expansion: (1/2) sum_m (-1)^m n/(n-m) C(n-m,m) c^{n-2m} C(n-2m, (n-2m-j)/2).
// Independent algebraic route against the recurrence path.
inline BigRat symmetrized_coeff_closed_form(int n, long j, const BigRat& c) {
    if (n < 1) throw std::invalid_argument("symmetrized_coeff_closed_form: need n >= 1");
    if (std::labs(j) > n || ((n - j) % 2 != 0)) return BigRat(0);
    BigRat total(0);
    for (int m = 0; 2 * m <= n; ++m) {
        int d = n - 2 * m;  // power of (x + 1/x)
        if (std::labs(j) > d || ((d - j) % 2 != 0)) continue;
        BigRat term = make_rat(BigInt(n) * binomial(n - m, m), BigInt(2) * BigInt(n - m));
        BigRat cpow = make_rat(big_pow(c.get_num(), d), big_pow(c.get_den(), d));
        term *= cpow;
        term *= BigRat(binomial(d, (d - j) / 2));
        total += (m % 2 == 0) ? term : -term;
    }
    return total;
}

struct PositivityReport {
    bool ok;
    std::optional<std::vector<int>> witness;  // first violating exponent vector
    std::string reason;
};

// Checks that every stored coefficient is >= 0 and that every exponent
// vector e with sum|e_i| <= n and sum e_i == n (mod 2) carries a strictly
// positive coefficient. Requires c > 1 exactly.
inline PositivityReport verify_positivity(SymKind kind, int n, const BigRat& c, int k) {
    if (!(c > 1)) throw std::invalid_argument("verify_positivity: requires c > 1");
    SymmetrizedCheb s = symmetrized(kind, n, c, k);
    for (auto& [e, coef] : s.coeffs.terms()) {
        if (coef < 0) return {false, e, "negative coefficient"};
        long abs_sum = 0, sum = 0;
        for (int v : e) {
            abs_sum += std::abs(v);
            sum += v;
        }
        if (abs_sum > n || ((sum - n) % 2 != 0))
            return {false, e, "coefficient outside the parity support"};
    }
    // Strict positivity over the full parity support.
    std::vector<int> e(k, 0);
    std::function<PositivityReport(int, int)> walk = [&](int pos, int budget) -> PositivityReport {
        if (pos == k) {
            long sum = 0;
            for (int v : e) sum += v;
            if (((sum - n) % 2) == 0 && !(s.coeffs.coeff(e) > 0))
                return {false, e, "support coefficient not strictly positive"};
            return {true, std::nullopt, ""};
        }
        for (int v = -budget; v <= budget; ++v) {
            e[pos] = v;
            auto r = walk(pos + 1, budget - std::abs(v));
            if (!r.ok) return r;
        }
        e[pos] = 0;
        return {true, std::nullopt, ""};
    };
    return walk(0, n);
}

}  // namespace fgw

#endif
