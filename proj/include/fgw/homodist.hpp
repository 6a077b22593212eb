#ifndef FGW_HOMODIST_HPP
#define FGW_HOMODIST_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgw/freegroup.hpp"
#include "fgw/numtheory.hpp"
#include "fgw/walkdp.hpp"

namespace fgw {

// Limiting variance of the normalized coefficient distribution of
// R_n(c; x_1..x_k): sigma^2 = c / (k sqrt(c^2 - 1)).
//
// Note: this is what the characteristic-function expansion actually yields
// and what the exact finite-n variances converge to; see the variance tests
// against the transfer-matrix oracle.
inline double clt_sigma2(double c, int k) {
    if (!(c > 1.0)) throw std::invalid_argument("clt_sigma2: requires c > 1");
    if (k < 1) throw std::invalid_argument("clt_sigma2: requires k >= 1");
    return c / (k * std::sqrt(c * c - 1.0));
}

namespace detail {
// log T_n(y) for y >= 1, stable for large n.
inline double log_cheb_t(int n, double y) {
    if (y < 1.0) throw std::invalid_argument("log_cheb_t: y must be >= 1");
    double t = std::acosh(y);  // T_n(y) = cosh(n t)
    double nt = n * t;
    // log cosh(nt) = nt - log 2 + log1p(exp(-2nt))
    return nt - std::log(2.0) + std::log1p(std::exp(-2.0 * nt));
}
}  // namespace detail

// Characteristic function T_n((c/k) sum cos theta_j) / T_n(c), evaluated in
// log space through the dominant branch so that n up to 10^4 cannot
// overflow.
inline std::complex<double> char_fn(int n, double c, const std::vector<double>& theta) {
    if (!(c > 1.0)) throw std::invalid_argument("char_fn: requires c > 1");
    if (theta.empty()) throw std::invalid_argument("char_fn: empty theta");
    int k = static_cast<int>(theta.size());
    double u = 0;
    for (double t : theta) u += std::cos(t);
    double y = (c / k) * u;
    double log_tn_c = detail::log_cheb_t(n, c);
    double val;
    if (y >= 1.0) {
        val = std::exp(detail::log_cheb_t(n, y) - log_tn_c);
    } else if (y <= -1.0) {
        double sign = (n % 2 == 0) ? 1.0 : -1.0;
        val = sign * std::exp(detail::log_cheb_t(n, -y) - log_tn_c);
    } else {
        double tn_y = std::cos(n * std::acos(y));  // |.| <= 1
        val = tn_y * std::exp(-log_tn_c);
    }
    return {val, 0.0};
}

// Exact counts of cyclically reduced words of length n in F_r by total
// exponent mod p.
struct ModPDistribution {
    long p;
    int r;
    int n;
    std::vector<BigInt> counts;  // counts[q] = N_{n,q}

    BigInt total() const {
        BigInt s = 0;
        for (auto& c : counts) s += c;
        return s;
    }
};

namespace detail {
inline std::vector<long> total_exponent_labels(int r) {
    std::vector<long> f(2 * r);
    for (int v = 0; v < 2 * r; ++v) f[v] = gr_vertex_generator(v, r) > 0 ? 1 : -1;
    return f;
}
}  // namespace detail

// Transfer-matrix path (size 2r*p), exact for any n.
inline ModPDistribution modp_counts(int r, int n, long p) {
    if (!is_prime(p)) throw std::invalid_argument("modp_counts: p must be prime");
    if (r < 1 || n < 1) throw std::invalid_argument("modp_counts: need r >= 1, n >= 1");
    Graph g = build_gr(r);
    auto counts =
        modp_closed_walk_counts(g.adjacency_big(), detail::total_exponent_labels(r), p, n);
    return {p, r, n, std::move(counts)};
}

// Independent route: fold the exact total-exponent generating function mod p.
inline ModPDistribution modp_counts_from_gf(int r, int n, long p) {
    if (!is_prime(p)) throw std::invalid_argument("modp_counts_from_gf: p must be prime");
    LaurentZ1 gf = total_exponent_gf(r, n);
    std::vector<BigInt> counts(p, BigInt(0));
    for (auto& [e, c] : gf.terms()) counts[((e % p) + p) % p] += c;
    return {p, r, n, std::move(counts)};
}

// max_q | p N_{n,q} / W - 1 |. The convergence rate behind it is the ratio
// of the twisted to the untwisted spectral radius (strictly < 1 for odd p).
inline double equidistribution_gap(int r, int n, long p) {
    if (p == 2)
        throw std::invalid_argument(
            "equidistribution_gap: p = 2 is degenerate (total exponent parity is "
            "forced to n mod 2), use an odd prime");
    if (!is_prime(p)) throw std::invalid_argument("equidistribution_gap: p must be prime");
    ModPDistribution d = modp_counts(r, n, p);
    BigRat w(d.total());
    double gap = 0;
    for (long q = 0; q < p; ++q) {
        double dev = std::abs(to_double(BigRat(p) * BigRat(d.counts[q]) / w - BigRat(1)));
        gap = std::max(gap, dev);
    }
    return gap;
}

// Residue ranking by exact counts. Exact ties are surfaced, never broken
// silently: within a tied group residues are listed in descending order and
// the group is reported in `ties`.
struct BiasRanking {
    std::vector<long> order;              // residues, most frequent first
    std::vector<std::vector<long>> ties;  // exact-tie groups of size > 1
    bool zero_first;
    bool zero_last;
    // Even-n pattern of the deviation ordering: order[1] == p-2 when strict.
    bool second_is_p_minus_2;
};

inline BiasRanking bias_ranking(int r, int n, long p) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("bias_ranking: p must be an odd prime");
    ModPDistribution d = modp_counts(r, n, p);
    std::vector<long> order(p);
    for (long q = 0; q < p; ++q) order[q] = q;
    std::sort(order.begin(), order.end(), [&](long x, long y) {
        if (d.counts[x] != d.counts[y]) return d.counts[x] > d.counts[y];
        return x > y;
    });
    BiasRanking out;
    out.order = order;
    for (size_t i = 0; i < order.size();) {
        size_t j = i;
        while (j + 1 < order.size() && d.counts[order[j + 1]] == d.counts[order[i]]) ++j;
        if (j > i)
            out.ties.emplace_back(order.begin() + i, order.begin() + j + 1);
        i = j + 1;
    }
    out.zero_first = (order.front() == 0);
    out.zero_last = (order.back() == 0);
    out.second_is_p_minus_2 = (order.size() > 1 && order[1] == p - 2);
    return out;
}

// Exact variance of the total-exponent distribution at length n (an exact
// rational divided out only at the end).
inline double total_exponent_variance(int r, int n) {
    Graph g = build_gr(r);
    auto f = detail::total_exponent_labels(r);
    std::vector<BigInt> fb(f.begin(), f.end());
    auto m = closed_walk_moments(g.adjacency_big(), fb, n);
    return m.variance();
}

inline BigInt total_exponent_mean_numerator(int r, int n) {
    Graph g = build_gr(r);
    auto f = detail::total_exponent_labels(r);
    std::vector<BigInt> fb(f.begin(), f.end());
    return closed_walk_moments(g.adjacency_big(), fb, n).s1;
}

}  // namespace fgw

#endif
