#ifndef FGW_ENUMERATION_HPP
#define FGW_ENUMERATION_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgw/freegroup.hpp"
#include "fgw/graph.hpp"
#include "fgw/linegraph.hpp"
#include "fgw/numtheory.hpp"
#include "fgw/poly.hpp"

namespace fgw {

// N(r) = #elements of reduced length r, C(r) = #elements whose conjugacy
// length equals their length (= cyclically reduced words), CC(r) =
// #conjugacy classes of length r. 1-indexed by length.
struct CountTriple {
    std::vector<BigInt> n_count;
    std::vector<BigInt> c_count;
    std::vector<BigInt> cc_count;
};

inline CountTriple free_group_counts(int k, int r_max) {
    if (k < 1) throw std::invalid_argument("free_group_counts: rank must be >= 1");
    if (r_max < 1) throw std::invalid_argument("free_group_counts: r_max must be >= 1");
    CountTriple t;
    t.n_count.resize(r_max + 1);
    t.c_count.resize(r_max + 1);
    t.cc_count.resize(r_max + 1);
    for (int r = 1; r <= r_max; ++r) {
        t.n_count[r] = BigInt(2 * k) * big_pow(BigInt(2 * k - 1), r - 1);
        t.c_count[r] = count_cyclically_reduced(k, r);
    }
    for (int r = 1; r <= r_max; ++r) {
        BigInt sum = 0;
        for (long d : divisors(r)) sum += euler_phi(d) * t.c_count[r / d];
        // Burnside: r * CC(r) = sum phi(d) C(r/d); divisibility is structural,
        // a failure here is a formula bug.
        t.cc_count[r] = exact_div(sum, BigInt(r));
    }
    return t;
}

// Direct orbit count of the rotation action on cyclically reduced words,
// by enumerating the lexicographically-minimal representative of every
// orbit (one leaf per orbit). The generation tree only ever extends runs
// with a[t] >= a[t-p] (p the current period) and a string is kept when its
// length is a multiple of the final period -- the classic minimal-rotation
// characterization -- filtered by the reduced/cyclic adjacency constraints.
// No totient formula anywhere on this path.
inline BigInt burnside_oracle(int k, int r) {
    if (k < 1 || r < 1) throw std::invalid_argument("burnside_oracle: need k,r >= 1");
    // leaf count is about (2k-1)^r / r
    if (std::pow(2.0 * k - 1.0, r) / r > 3e9)
        throw std::invalid_argument("burnside_oracle: orbit count exceeds the guard");
    const int alphabet = 2 * k;
    auto inverse_code = [](int code) { return code ^ 1; };  // a<->A pairs adjacent
    std::vector<int> a(r + 1);
    long orbits = 0;
    std::function<void(int, int)> gen = [&](int t, int p) {
        if (t > r) {
            if (r % p != 0) return;
            if (r > 1 && a[r] == inverse_code(a[1])) return;  // cyclic reduction
            ++orbits;
            return;
        }
        for (int c = a[t - p]; c < alphabet; ++c) {
            if (t > 1 && c == inverse_code(a[t - 1])) continue;
            a[t] = c;
            gen(t + 1, c == a[t - p] ? p : t);
        }
    };
    for (int first = 0; first < alphabet; ++first) {
        a[0] = first;  // a[t-p] base for t = 1
        a[1] = first;
        gen(2, 1);
    }
    return BigInt(orbits);
}

// Coefficients 0..n_max of F[C_{F_k}](z) = sum_{r>=1} C(r) z^r.
inline std::vector<BigInt> c_series(int k, int n_max) {
    std::vector<BigInt> s(n_max + 1);
    for (int r = 1; r <= n_max; ++r) s[r] = count_cyclically_reduced(k, r);
    return s;
}

// Coefficients of the Lambert-type series H(z) = 1 + sum_d phi(d) F[C](z^d),
// truncated at z^{n_max}; only d <= n_max contribute. The coefficient of z^r
// equals r * CC(r).
inline std::vector<BigInt> cc_gf_coeffs(int k, int n_max) {
    std::vector<BigInt> h(n_max + 1);
    h[0] = 1;
    for (int d = 1; d <= n_max; ++d) {
        long phi = euler_phi(d);
        for (int r = 1; d * r <= n_max; ++r)
            h[d * r] += BigInt(phi) * count_cyclically_reduced(k, r);
    }
    return h;
}

// Independent assembly of the same coefficients by direct divisor
// convolution (the truncation-correctness cross-check).
inline std::vector<BigInt> cc_gf_coeffs_convolution(int k, int n_max) {
    std::vector<BigInt> h(n_max + 1);
    h[0] = 1;
    for (int n = 1; n <= n_max; ++n)
        for (long d : divisors(n))
            h[n] += BigInt(euler_phi(d)) * count_cyclically_reduced(k, n / d);
    return h;
}

// Series coefficients of 1/(1-(2k-1)z) + 1/(1-z) + 2(k-1)/(1-z^2) - 2k.
inline BigInt c_series_rational_form(int k, int r) {
    if (r == 0) return BigInt(2 - 2 * k + 2 * (k - 1));  // = 0 for every k
    BigInt v = big_pow(BigInt(2 * k - 1), r) + 1;
    if (r % 2 == 0) v += 2 * (k - 1);
    return v;
}

// Cauchy product of two conjugacy-class generating sequences (index 0 must
// hold the identity class, value 1).
inline std::vector<BigInt> product_cc_gf(const std::vector<BigInt>& a,
                                         const std::vector<BigInt>& b) {
    if (a.empty() || b.empty() || a[0] != 1 || b[0] != 1)
        throw std::invalid_argument("product_cc_gf: sequences must start with a 1");
    size_t n = std::min(a.size(), b.size());
    std::vector<BigInt> out(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
    return out;
}

// zeta_G(u) = det(I - u A(G)); degree <= n, zeta(0) = 1.
inline IntPoly zeta(const Graph& g) { return det_i_minus_ua(g.adjacency_big()); }

// N_i = tr(A^i) recovered from the zeta polynomial by Newton's identities
// on the reversed characteristic polynomial.
inline std::vector<BigInt> cycle_counts_from_zeta(const IntPoly& z, int n_max) {
    // reverse back to det(uI - A); the zeta polynomial may have dropped
    // leading zero coefficients, so rebuild with the nominal degree n.
    // z = det(I-uA) has constant term 1.
    if (z.coeff(0) != 1)
        throw std::invalid_argument("cycle_counts_from_zeta: zeta(0) must be 1");
    long n = z.degree();
    std::vector<BigInt> rev(n + 1);
    for (long i = 0; i <= n; ++i) rev[n - i] = z.coeff(i);
    IntPoly charpoly(std::move(rev));
    auto p = newton_power_sums(charpoly, n_max);
    return std::vector<BigInt>(p.begin() + 1, p.end());  // N_1..N_max
}

// P_n = (1/n) sum_{d|n} mu(d) N_{n/d}; exactness of the division is part of
// the contract.
inline std::vector<BigInt> primitive_cycle_counts(const Graph& g, int n_max) {
    std::vector<BigInt> nn = cycle_counts_from_zeta(zeta(g), n_max);
    std::vector<BigInt> p(n_max + 1);
    for (int n = 1; n <= n_max; ++n) {
        BigInt sum = 0;
        for (long d : divisors(n)) sum += BigInt(moebius(d)) * nn[n / d - 1];
        p[n] = exact_div(sum, BigInt(n));
    }
    return std::vector<BigInt>(p.begin() + 1, p.end());  // P_1..P_max
}

// Ihara / Bass determinant identity for a connected r-regular simple-loop-free
// undirected graph:
//   Z^{-1}(u) = (1-u^2)^{E-V} det((1+(r-1)u^2) I - u A)   [rank = E-V+1]
//             = det(I - u M),  M the directed line graph adjacency.
struct IharaReport {
    bool equal;
    IntPoly via_ihara;
    IntPoly via_bass;
};

inline IharaReport ihara_identity_check(const Graph& g) {
    if (g.directed) {
        // Directed variant: det(I - u A(G)) and det(I - u A(L(G))) coincide,
        // so the nonzero spectra agree.
        LineDigraph ld = line_digraph(g);
        IntPoly lhs = det_i_minus_ua(g.adjacency_big());
        IntPoly rhs = det_i_minus_ua(ld.line.adjacency_big());
        return {lhs == rhs, lhs, rhs};
    }
    auto reg = g.regularity();
    if (!reg) throw std::invalid_argument("ihara_identity_check: graph must be regular");
    long r = *reg;
    for (int i = 0; i < g.n; ++i)
        if (g.adj[i][i] > 0)
            throw std::invalid_argument("ihara_identity_check: no self-loops allowed");
    if (!connectivity_and_bipartite(g).connected)
        throw std::invalid_argument("ihara_identity_check: graph must be connected");
    long e_count = g.edge_count();
    long rank_minus_1 = e_count - g.n;  // R - 1 with R = E - V + 1

    // (1 - u^2)^{E-V} * det((1 + (r-1) u^2) I - u A)
    int n = g.n;
    // Build det((1+(r-1)u^2) I - u A) exactly as a polynomial in u via a
    // polynomial-valued characteristic computation: substitute into
    // det(xI - A) with x = (1 + (r-1)u^2)/u scaled by u^n:
    //   u^n * p((1+(r-1)u^2)/u) where p = char_poly(A).
    IntPoly p = char_poly(g.adjacency_big());
    IntPoly quad(std::vector<BigInt>{1, 0, BigInt(r - 1)});  // 1 + (r-1)u^2
    IntPoly acc;                                             // sum p_i quad^i u^{n-i}
    for (long i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i) == 0) continue;
        IntPoly term = quad.pow(i) * IntPoly::monomial(n - i, p.coeff(i));
        acc = acc + term;
    }
    IntPoly one_minus_u2(std::vector<BigInt>{1, 0, -1});
    IntPoly via_ihara = one_minus_u2.pow(rank_minus_1) * acc;

    LineDigraph ld = line_digraph(g);
    IntPoly via_bass = det_i_minus_ua(ld.line.adjacency_big());
    return {via_ihara == via_bass, via_ihara, via_bass};
}

}  // namespace fgw

#endif
