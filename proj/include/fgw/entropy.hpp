#ifndef FGW_ENTROPY_HPP
#define FGW_ENTROPY_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgw/graph.hpp"
#include "fgw/perturbation.hpp"
#include "fgw/spectra.hpp"
#include "fgw/walkdp.hpp"

namespace fgw {

// rho(s, f): Perron data of M(s, f) = diag(e^{-s f_i}) A for a nonnegative
// primitive irreducible A and positive weights f.
struct RhoResult {
    double value;
    VectorXd right;
    VectorXd left;
};

namespace detail {
inline void check_entropy_problem(const MatrixXd& a, const VectorXd& f) {
    long n = a.rows();
    if (a.cols() != n || f.size() != n)
        throw std::invalid_argument("entropy: size mismatch");
    if (a.minCoeff() < 0) throw std::invalid_argument("entropy: A must be nonnegative");
    for (long i = 0; i < n; ++i)
        if (!(f(i) > 0)) throw std::invalid_argument("entropy: weights must be positive");
    Graph support(static_cast<int>(n), true);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (a(i, j) > 0) support.adj[i][j] = 1;
    if (!is_primitive(support))
        throw std::invalid_argument("entropy: A must be irreducible and primitive");
}

inline MatrixXd weighted_matrix(const MatrixXd& a, const VectorXd& f, double s) {
    MatrixXd m = a;
    for (long i = 0; i < a.rows(); ++i) m.row(i) *= std::exp(-s * f(i));
    return m;
}
}  // namespace detail

inline RhoResult rho(const MatrixXd& a, const VectorXd& f, double s) {
    detail::check_entropy_problem(a, f);
    PerronPair p = perron_pair(detail::weighted_matrix(a, f, s));
    return {p.value, p.right, p.left};
}

// d rho / d s = -rho * (w^t D(f) v) / (w^t v); reduces to the printed
// -rho v^t D(f) v when the matrix is normal (w = v). Strictly negative for
// positive f.
inline double rho_ds(const MatrixXd& a, const VectorXd& f, double s) {
    RhoResult r = rho(a, f, s);
    double wv = r.left.dot(r.right);
    return -r.value * r.left.dot(f.asDiagonal() * r.right) / wv;
}

// Topological entropy: the unique s0 > 0 with rho(s0, f) = 1, located by a
// doubling bracket plus bisection-safeguarded Newton using the exact
// derivative from the Perron pair.
inline double entropy(const MatrixXd& a, const VectorXd& f, double tol = 1e-12) {
    detail::check_entropy_problem(a, f);
    double rho0 = perron_pair(a).value;
    if (!(rho0 > 1.0))
        throw std::invalid_argument(
            "entropy: spectral radius of A must exceed 1 (no positive root otherwise)");
    double lo = 0.0, hi = 1.0;
    auto rho_at = [&](double s) { return perron_pair(detail::weighted_matrix(a, f, s)).value; };
    while (rho_at(hi) > 1.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e6) throw std::runtime_error("entropy: bracketing failed");
    }
    double s = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        PerronPair p = perron_pair(detail::weighted_matrix(a, f, s));
        double val = p.value - 1.0;
        if (std::abs(val) <= tol) return s;
        if (val > 0)
            lo = s;
        else
            hi = s;
        double wv = p.left.dot(p.right);
        double deriv = -p.value * p.left.dot(f.asDiagonal() * p.right) / wv;
        double next = s - val / deriv;
        s = (next > lo && next < hi) ? next : 0.5 * (lo + hi);
    }
    double final_rho = rho_at(s);
    if (std::abs(final_rho - 1.0) > 1e-10)
        throw std::runtime_error("entropy: root finding did not converge");
    return s;
}

// Gradient of rho with respect to the weights:
//   d rho / d f_i = -s rho w_i v_i / (w^t v)
// (the printed -s rho v_i^2 is its normal-matrix specialization).
inline VectorXd rho_gradient(const MatrixXd& a, const VectorXd& f, double s) {
    RhoResult r = rho(a, f, s);
    double wv = r.left.dot(r.right);
    VectorXd g(f.size());
    for (long i = 0; i < f.size(); ++i)
        g(i) = -s * r.value * r.left(i) * r.right(i) / wv;
    return g;
}

// Second directional derivative of rho(s, f + t g) at t = 0, assembled from
// the second-order eigenvalue coefficient: rho'' = 2 lambda^(2) with
// M^(1) = -s D(g) M and M^(2) = (s^2/2) D(g^2) M. Nonnegative (rho is
// log-convex in the weights).
inline double rho_second_directional(const MatrixXd& a, const VectorXd& f, double s,
                                     const VectorXd& g) {
    detail::check_entropy_problem(a, f);
    if (g.size() != f.size()) throw std::invalid_argument("rho_second_directional: size");
    MatrixXd m = detail::weighted_matrix(a, f, s);
    PerronPair p = perron_pair(m);
    MatrixXcd mc = m.cast<dcomplex>();
    VectorXcd v = p.right.cast<dcomplex>();
    VectorXcd w = p.left.cast<dcomplex>();
    MatrixXcd m1 = dcomplex(-s, 0) * (g.asDiagonal().toDenseMatrix().cast<dcomplex>() * mc);
    MatrixXcd m2 = dcomplex(0.5 * s * s, 0) *
                   (g.cwiseProduct(g).asDiagonal().toDenseMatrix().cast<dcomplex>() * mc);
    MatrixXcd smat = reduced_resolvent(mc, dcomplex(p.value), v, w);
    dcomplex wv = w.transpose() * v;
    dcomplex t1 = w.transpose() * (m2 * v);
    dcomplex t2 = w.transpose() * (m1 * (smat * (m1 * v)));
    return 2.0 * ((t1 - t2) / wv).real();
}

// Closed-form minimizer of s0 over the simplex sum f_i = 1:
//   f*_i = log (A 1)_i / sum log (A 1)_j,   s* = sum log (A 1)_j.
struct EntropyMinimum {
    VectorXd weights;
    double s0;
};

inline EntropyMinimum min_entropy_weights(const MatrixXd& a) {
    long n = a.rows();
    VectorXd row_sums = a * VectorXd::Ones(n);
    for (long i = 0; i < n; ++i)
        if (!(row_sums(i) > 1.0))
            throw std::invalid_argument("min_entropy_weights: every row sum must exceed 1");
    VectorXd logs = row_sums.array().log();
    double total = logs.sum();
    return {logs / total, total};
}

// Independent numerical minimizer: projected gradient descent on the simplex
// with backtracking line search; the referee for the closed form.
inline EntropyMinimum numeric_min_entropy(const MatrixXd& a, double grad_tol = 1e-10,
                                          int max_iter = 5000) {
    long n = a.rows();
    VectorXd f = VectorXd::Constant(n, 1.0 / n);
    detail::check_entropy_problem(a, f);
    double s = entropy(a, f);
    for (int it = 0; it < max_iter; ++it) {
        // gradient of s0(f) on the simplex: by implicit differentiation
        // ds0/df = -(d rho/d f) / (d rho/d s) at s = s0(f).
        PerronPair p = perron_pair(detail::weighted_matrix(a, f, s));
        double wv = p.left.dot(p.right);
        VectorXd drho_df(n);
        for (long i = 0; i < n; ++i)
            drho_df(i) = -s * p.value * p.left(i) * p.right(i) / wv;
        double drho_ds = -p.value * p.left.dot(f.asDiagonal() * p.right) / wv;
        VectorXd grad = -drho_df / drho_ds;
        VectorXd proj = grad - VectorXd::Constant(n, grad.mean());
        if (proj.norm() <= grad_tol * std::max(1.0, std::abs(s))) break;
        double step = 0.5;
        bool moved = false;
        for (int bt = 0; bt < 60; ++bt, step *= 0.5) {
            VectorXd cand = f - step * proj;
            if (cand.minCoeff() <= 1e-12) continue;
            double s_cand = entropy(a, cand);
            if (s_cand < s - 1e-15) {
                f = cand;
                s = s_cand;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    return {f, s};
}

// Smallest positive u with spectral radius of D(u^{f}) A equal to 1; equals
// e^{-s0} under the substitution u = e^{-s}.
inline double radius_of_convergence(const MatrixXd& a, const VectorXd& f,
                                    double tol = 1e-12) {
    detail::check_entropy_problem(a, f);
    auto rho_u = [&](double u) {
        MatrixXd m = a;
        for (long i = 0; i < a.rows(); ++i) m.row(i) *= std::pow(u, f(i));
        return perron_pair(m).value;
    };
    double lo = 0.0, hi = 1.0;
    if (rho_u(1.0) <= 1.0) throw std::invalid_argument("radius_of_convergence: rho(A) <= 1");
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (rho_u(mid) < 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace fgw

#endif
