#ifndef FGW_WALKSTATS_HPP
#define FGW_WALKSTATS_HPP

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgw/graph.hpp"
#include "fgw/grouptable.hpp"
#include "fgw/numtheory.hpp"
#include "fgw/spectra.hpp"
#include "fgw/walkdp.hpp"

namespace fgw {

struct WalkVariance {
    double sigma2;
    double mu;  // per-step mean drift
};

namespace detail {
inline void require_walk_preconditions(const Graph& g, long& r) {
    auto reg = g.regularity();
    if (!reg) throw std::invalid_argument("walk_variance: graph must be regular");
    r = *reg;
    auto conn = connectivity_and_bipartite(g);
    if (!g.directed) {
        if (!conn.connected || conn.bipartite)
            throw std::invalid_argument(
                "walk_variance: undirected graph must be connected and non-bipartite");
    } else {
        if (!is_primitive(g))
            throw std::invalid_argument("walk_variance: directed graph must be primitive");
    }
}
}  // namespace detail

// Asymptotic (mean, variance)/N of X = sum of f over the vertices of a long
// closed walk on a connected regular non-bipartite graph:
//   sigma^2(f) = (1/k) [ -||f0||^2 + 2 r f0^t Delta0^{-1} f0 ].
inline WalkVariance walk_variance(const Graph& g, const VectorXd& f) {
    if (f.size() != g.n) throw std::invalid_argument("walk_variance: size mismatch");
    long r = 0;
    detail::require_walk_preconditions(g, r);
    long k = g.n;
    VectorXd f0 = f - VectorXd::Constant(k, f.mean());
    MatrixXd delta = static_cast<double>(r) * MatrixXd::Identity(k, k) - g.adjacency();
    MatrixXd aug = delta + MatrixXd::Constant(k, k, 1.0 / k);
    VectorXd y = solve_dense(aug, f0);
    double sigma2 = (-f0.squaredNorm() + 2.0 * r * f0.dot(y)) / k;
    return {sigma2, f.mean()};
}

// Markov-chain variant for a doubly stochastic, irreducible, primitive
// transition matrix: sigma^2(f) = (1/k)[-||f0||^2 + 2 f0^t (I0 - P0)^{-1} f0].
inline WalkVariance markov_variance(const MatrixXd& p, const VectorXd& f,
                                    double tol = 1e-10) {
    long k = p.rows();
    if (p.cols() != k || f.size() != k)
        throw std::invalid_argument("markov_variance: size mismatch");
    for (long i = 0; i < k; ++i) {
        if (std::abs(p.row(i).sum() - 1.0) > tol)
            throw std::invalid_argument("markov_variance: rows must sum to 1");
        if (std::abs(p.col(i).sum() - 1.0) > tol)
            throw std::invalid_argument("markov_variance: must be doubly stochastic");
    }
    if (p.minCoeff() < -tol)
        throw std::invalid_argument("markov_variance: negative transition probability");
    // irreducible + primitive on the support pattern
    Graph support(static_cast<int>(k), true);
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j)
            if (p(i, j) > tol) support.adj[i][j] = 1;
    if (!is_primitive(support))
        throw std::invalid_argument("markov_variance: chain must be irreducible and primitive");
    VectorXd f0 = f - VectorXd::Constant(k, f.mean());
    MatrixXd aug = MatrixXd::Identity(k, k) - p + MatrixXd::Constant(k, k, 1.0 / k);
    VectorXd y = solve_dense(aug, f0);
    double sigma2 = (-f0.squaredNorm() + 2.0 * f0.dot(y)) / k;
    return {sigma2, f.mean()};
}

// Variance of the same statistic over (i,j)-paths. The path ensemble has the
// same N->infinity variance rate as the cycle ensemble: the endpoint factors
// perturb the characteristic function only at O(1), which washes out of
// variance/N. Checked against the exact path DP.
inline WalkVariance path_variance(const Graph& g, const VectorXd& f, int i, int j) {
    g.check_vertex(i);
    g.check_vertex(j);
    return walk_variance(g, f);
}

// Exact mod-p distribution of closed N-walks by integer vertex weights, with
// the spectral convergence rate max over nontrivial characters of
// rho(U(chi) A) / rho(A).
struct ModPWalkDistribution {
    std::vector<BigInt> counts;
    double gap;
};

inline ModPWalkDistribution modp_walk_distribution(const Graph& g,
                                                   const std::vector<long>& f, long p,
                                                   int n_len) {
    if (!is_prime(p)) throw std::invalid_argument("modp_walk_distribution: p must be prime");
    if (static_cast<int>(f.size()) != g.n)
        throw std::invalid_argument("modp_walk_distribution: size mismatch");
    if (!is_primitive(g))
        throw std::invalid_argument(
            "modp_walk_distribution: graph must be irreducible and primitive");
    ModPWalkDistribution out;
    out.counts = modp_closed_walk_counts(g.adjacency_big(), f, p, n_len);
    MatrixXcd a = g.adjacency().cast<dcomplex>();
    double rho_a = spectral_radius(g.adjacency());
    out.gap = 0;
    for (long chi = 1; chi < p; ++chi) {
        MatrixXcd u = MatrixXcd::Zero(g.n, g.n);
        for (int v = 0; v < g.n; ++v)
            u(v, v) = std::polar(1.0, 2.0 * M_PI * chi * f[v] / p);
        out.gap = std::max(out.gap, spectral_radius(MatrixXcd(u * a)) / rho_a);
    }
    return out;
}

// Finite-group equidistribution data for closed walks with vertex labels in
// a finite group.
struct GroupWalkDistribution {
    std::vector<BigInt> counts;     // by group element
    double tv_distance;             // to uniform
    double rate;                    // abelian: max over nontrivial characters of
                                    // rho(U(chi) A)/rho(A); else 0 (measured only)
    bool rate_is_spectral;
    std::vector<std::string> warnings;
};

inline GroupWalkDistribution group_walk_distribution(const Graph& g, const GroupTable& t,
                                                     const std::vector<int>& labels,
                                                     int n_len) {
    if (static_cast<int>(labels.size()) != g.n)
        throw std::invalid_argument("group_walk_distribution: label size mismatch");
    for (int x : labels)
        if (x < 0 || x >= t.order)
            throw std::invalid_argument("group_walk_distribution: label out of range");
    auto conn = connectivity_and_bipartite(g);
    GroupWalkDistribution out;
    if (!conn.connected || (!g.directed && conn.bipartite))
        out.warnings.push_back("graph is not connected+non-bipartite; no convergence claim");
    // Hypothesis: labels generate the group.
    if (static_cast<int>(t.subgroup_closure(labels).size()) != t.order)
        out.warnings.push_back("labels do not generate the group; distribution stays on a coset structure");
    // Hypothesis: labels not all in one coset of the kernel of a nontrivial
    // 1-dim representation <=> pairwise quotients + commutators generate G.
    {
        std::vector<int> gens = t.commutator_subgroup();
        for (size_t i = 1; i < labels.size(); ++i)
            gens.push_back(t.mul[labels[i]][t.inverse[labels[0]]]);
        if (static_cast<int>(t.subgroup_closure(gens).size()) != t.order)
            out.warnings.push_back(
                "labels lie in a single coset of a 1-dimensional representation kernel; "
                "uniform equidistribution fails");
    }
    out.counts = group_closed_walk_counts(g.adjacency_big(), t.mul, t.identity, labels, n_len);
    BigInt total = 0;
    for (auto& c : out.counts) total += c;
    BigRat tv(0);
    BigRat uniform = make_rat(BigInt(1), BigInt(t.order));
    for (auto& c : out.counts) {
        BigRat dev = BigRat(c) / BigRat(total) - uniform;
        if (dev < 0) dev = -dev;
        tv += dev;
    }
    tv /= 2;
    out.tv_distance = to_double(tv);
    out.rate_is_spectral = t.is_abelian();
    out.rate = 0;
    if (out.rate_is_spectral) {
        auto chars = abelian_characters(t);
        MatrixXcd a = g.adjacency().cast<dcomplex>();
        double rho_a = spectral_radius(g.adjacency());
        for (auto& chi : chars) {
            bool trivial = true;
            for (auto& z : chi) trivial &= std::abs(z - dcomplex(1, 0)) < 1e-12;
            if (trivial) continue;
            MatrixXcd u = MatrixXcd::Zero(g.n, g.n);
            for (int v = 0; v < g.n; ++v) u(v, v) = chi[labels[v]];
            out.rate = std::max(out.rate, spectral_radius(MatrixXcd(u * a)) / rho_a);
        }
    }
    return out;
}

// Optional Monte-Carlo demo: samples closed N-walks uniformly (backward DP
// counts + forward sampling) and reports the empirical mean/variance of X.
struct McWalkSummary {
    double mean;
    double variance;
    long samples;
};

inline McWalkSummary mc_closed_walk_summary(const Graph& g, const VectorXd& f, int n_len,
                                            long samples, unsigned seed) {
    int n = g.n;
    Mat<BigInt> a = g.adjacency_big();
    // powers[m] = A^m for m = 0..N
    std::vector<Mat<BigInt>> pw;
    pw.reserve(n_len + 1);
    pw.push_back(Mat<BigInt>::identity(n));
    for (int m = 1; m <= n_len; ++m) pw.push_back(pw.back() * a);
    BigInt total = pw[n_len].trace();
    if (total == 0) throw std::invalid_argument("mc_closed_walk_summary: no closed walks");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double s1 = 0, s2 = 0;
    for (long s = 0; s < samples; ++s) {
        // choose start weighted by (A^N)_{vv}
        double rtot = u01(rng) * to_double(total);
        int v0 = 0;
        {
            double acc = 0;
            for (int v = 0; v < n; ++v) {
                acc += to_double(pw[n_len](v, v));
                if (rtot <= acc || v == n - 1) {
                    v0 = v;
                    break;
                }
            }
        }
        double x = 0;
        int cur = v0;
        for (int step = 0; step < n_len; ++step) {
            int remaining = n_len - step - 1;
            double tot = to_double(pw[remaining + 1](cur, v0));
            double rr = u01(rng) * tot, acc = 0;
            int nxt = -1;
            for (int w = 0; w < n; ++w) {
                if (g.adj[cur][w] == 0) continue;
                acc += g.adj[cur][w] * to_double(pw[remaining](w, v0));
                if (rr <= acc) {
                    nxt = w;
                    break;
                }
            }
            if (nxt < 0) {
                for (int w = n - 1; w >= 0; --w)
                    if (g.adj[cur][w] > 0 && to_double(pw[remaining](w, v0)) > 0) {
                        nxt = w;
                        break;
                    }
            }
            cur = nxt;
            x += f(cur);
        }
        s1 += x;
        s2 += x * x;
    }
    double mean = s1 / samples;
    return {mean, s2 / samples - mean * mean, samples};
}

}  // namespace fgw

#endif
