#ifndef FGW_WALKDP_HPP
#define FGW_WALKDP_HPP

#include <stdexcept>
#include <vector>

#include "fgw/matrix.hpp"
#include "fgw/numeric.hpp"

namespace fgw {

// Exact transfer-matrix statistics of X = sum of f over the vertices of a
// walk. These are the oracles every "empirical" check routes through; no
// Monte-Carlo noise anywhere.
//
// Convention: a closed walk of length N visits v_1, ..., v_N (with the step
// v_N -> v_1 closing it) and X = f(v_1) + ... + f(v_N). For (i,j)-paths
// v_0 = i, ..., v_N = j the sum runs over the N arrival vertices v_1..v_N.

template <class T>
struct WalkMoments {
    T count;  // |W_N|
    T s1;     // sum over walks of X
    T s2;     // sum over walks of X^2

    double mean() const { return to_double(BigRat(s1) / BigRat(count)); }
    double variance() const {
        BigRat c(count);
        BigRat m = BigRat(s1) / c;
        return to_double(BigRat(s2) / c - m * m);
    }
};

template <>
struct WalkMoments<BigRat> {
    BigRat count, s1, s2;
    double mean() const { return to_double(s1 / count); }
    double variance() const {
        BigRat m = s1 / count;
        return to_double(s2 / count - m * m);
    }
};

namespace detail {
// Accumulates (P, B, C2) = coefficients of eps^0, eps^1 and 2*eps^2 in
// (A D(e^{eps f}))^N, where the diagonal acts on the arrival vertex.
template <class T>
struct MomentState {
    Mat<T> p, b, c2;
};

template <class T>
MomentState<T> walk_moment_matrices(const Mat<T>& a, const std::vector<T>& f, int n_len) {
    size_t n = a.rows();
    if (a.cols() != n || f.size() != n)
        throw std::invalid_argument("walk_moment_matrices: size mismatch");
    // One step: (AD)_{uv} = a_{uv} x^{f_v}. First-order term F1 = A D(f),
    // second order F2' = A D(f^2) (twice the Taylor coefficient).
    Mat<T> f1(n, n), f2(n, n);
    for (size_t u = 0; u < n; ++u)
        for (size_t v = 0; v < n; ++v) {
            f1(u, v) = a(u, v) * f[v];
            f2(u, v) = a(u, v) * f[v] * f[v];
        }
    MomentState<T> s{Mat<T>::identity(n), Mat<T>(n, n), Mat<T>(n, n)};
    for (int step = 0; step < n_len; ++step) {
        Mat<T> p_next = s.p * a;
        Mat<T> b_next = s.b * a + s.p * f1;
        Mat<T> c2_next = s.c2 * a + s.b * f1 + s.b * f1 + s.p * f2;
        s.p = std::move(p_next);
        s.b = std::move(b_next);
        s.c2 = std::move(c2_next);
    }
    return s;
}
}  // namespace detail

// Exact first two moments of X over closed walks of length N.
template <class T>
WalkMoments<T> closed_walk_moments(const Mat<T>& a, const std::vector<T>& f, int n_len) {
    auto s = detail::walk_moment_matrices(a, f, n_len);
    return {s.p.trace(), s.b.trace(), s.c2.trace()};
}

// Exact first two moments of X over (i,j)-paths of length N.
template <class T>
WalkMoments<T> path_walk_moments(const Mat<T>& a, const std::vector<T>& f, int n_len,
                                 size_t i, size_t j) {
    auto s = detail::walk_moment_matrices(a, f, n_len);
    return {s.p(i, j), s.b(i, j), s.c2(i, j)};
}

// Exact counts of closed N-walks classified by (sum of integer f) mod p,
// via the transfer matrix on the (vertex, residue) state space.
inline std::vector<BigInt> modp_closed_walk_counts(const Mat<BigInt>& a,
                                                   const std::vector<long>& f, long p,
                                                   int n_len) {
    size_t n = a.rows();
    if (a.cols() != n || f.size() != n)
        throw std::invalid_argument("modp_closed_walk_counts: size mismatch");
    if (p < 2) throw std::invalid_argument("modp_closed_walk_counts: need p >= 2");
    auto idx = [&](size_t v, long s) { return v * p + static_cast<size_t>(s); };
    size_t m = n * p;
    Mat<BigInt> t(m, m);
    for (size_t u = 0; u < n; ++u)
        for (size_t v = 0; v < n; ++v) {
            if (a(u, v) == 0) continue;
            long fv = ((f[v] % p) + p) % p;
            for (long s = 0; s < p; ++s) t(idx(u, s), idx(v, (s + fv) % p)) = a(u, v);
        }
    Mat<BigInt> tn = mat_pow(t, n_len);
    std::vector<BigInt> counts(p, BigInt(0));
    for (long q = 0; q < p; ++q)
        for (size_t v = 0; v < n; ++v) counts[q] += tn(idx(v, 0), idx(v, q));
    return counts;
}

// Exact counts of closed N-walks classified by the product of group labels
// t_{v_N} ... t_{v_1}, via the transfer matrix on (vertex, group element).
inline std::vector<BigInt> group_closed_walk_counts(
    const Mat<BigInt>& a, const std::vector<std::vector<int>>& mul, int identity,
    const std::vector<int>& labels, int n_len) {
    size_t n = a.rows();
    size_t order = mul.size();
    if (labels.size() != n)
        throw std::invalid_argument("group_closed_walk_counts: label size mismatch");
    auto idx = [&](size_t v, int g) { return v * order + static_cast<size_t>(g); };
    size_t m = n * order;
    Mat<BigInt> t(m, m);
    for (size_t u = 0; u < n; ++u)
        for (size_t v = 0; v < n; ++v) {
            if (a(u, v) == 0) continue;
            // arriving at v left-multiplies the accumulated product by t_v
            for (size_t g = 0; g < order; ++g)
                t(idx(u, static_cast<int>(g)), idx(v, mul[labels[v]][g])) = a(u, v);
        }
    Mat<BigInt> tn = mat_pow(t, n_len);
    std::vector<BigInt> counts(order, BigInt(0));
    for (size_t g = 0; g < order; ++g)
        for (size_t v = 0; v < n; ++v) counts[g] += tn(idx(v, identity), idx(v, static_cast<int>(g)));
    return counts;
}

// Number of closed walks (any length >= 1) whose accumulated weight is <= L,
// for strictly positive integer weights.
inline BigInt weighted_cycle_count_leq(const Mat<BigInt>& a, const std::vector<long>& f,
                                       long weight_cap) {
    size_t n = a.rows();
    if (a.cols() != n || f.size() != n)
        throw std::invalid_argument("weighted_cycle_count_leq: size mismatch");
    for (long x : f)
        if (x < 1) throw std::invalid_argument("weighted_cycle_count_leq: weights must be >= 1");
    // g[w](u,v) = #walks u -> v of any length >= 1 with arrival weight sum w
    std::vector<Mat<BigInt>> g(weight_cap + 1, Mat<BigInt>(n, n));
    BigInt total = 0;
    for (long w = 1; w <= weight_cap; ++w) {
        for (size_t v = 0; v < n; ++v) {
            if (f[v] > w) continue;
            long w0 = w - f[v];
            for (size_t u = 0; u < n; ++u) {
                BigInt acc = (w0 == 0) ? BigInt(a(u, v)) : BigInt(0);
                if (w0 >= 1)
                    for (size_t x = 0; x < n; ++x)
                        if (a(x, v) != 0) acc += g[w0](u, x) * a(x, v);
                g[w](u, v) = std::move(acc);
            }
        }
        for (size_t v = 0; v < n; ++v) total += g[w](v, v);
    }
    return total;
}

}  // namespace fgw

#endif
