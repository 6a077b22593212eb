#ifndef FGW_PERTURBATION_HPP
#define FGW_PERTURBATION_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgw/spectra.hpp"

namespace fgw {

// Rank-one projector v v^t onto the span of a unit vector.
inline MatrixXd projector(const VectorXd& v, double tol = 1e-10) {
    if (std::abs(v.norm() - 1.0) > tol)
        throw std::invalid_argument("projector: vector is not unit length");
    return v * v.transpose();
}

// First/second-order data of an analytic family M(x) = M + M1 x + M2 x^2 + ...
// at a simple eigenvalue lambda of M. For nonsymmetric M the left eigenvector
// w (with w^t M = lambda w^t) must be supplied; for symmetric problems w = v.
struct PerturbationProblem {
    MatrixXcd m, m1, m2;
    dcomplex lambda;
    VectorXcd v;  // right eigenvector
    VectorXcd w;  // left eigenvector (w == v for symmetric m)
    double tol = 1e-9;

    void check() const {
        long n = m.rows();
        if (m.cols() != n || m1.rows() != n || m2.rows() != n || v.size() != n ||
            w.size() != n)
            throw std::invalid_argument("PerturbationProblem: size mismatch");
        double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
        if ((m * v - lambda * v).norm() > 1e3 * tol * scale)
            throw std::invalid_argument("PerturbationProblem: (lambda, v) is not an eigenpair");
        if ((m.transpose() * w - lambda * w).norm() > 1e3 * tol * scale)
            throw std::invalid_argument("PerturbationProblem: (lambda, w) is not a left eigenpair");
    }
};

inline PerturbationProblem make_symmetric_problem(const MatrixXd& m, double lambda,
                                                  const VectorXd& v, const MatrixXcd& m1,
                                                  const MatrixXcd& m2) {
    PerturbationProblem p;
    p.m = m.cast<dcomplex>();
    p.m1 = m1;
    p.m2 = m2;
    p.lambda = lambda;
    p.v = v.cast<dcomplex>();
    p.w = v.cast<dcomplex>();
    p.check();
    return p;
}

// Reduced resolvent: the inverse of (M - lambda I) on the complement of the
// eigenspace, as characterized by S P = P S = 0, (M - lambda) S = I - P.
// Construction: S = B^{-1} (I - P) with B = M - lambda I + v w^t / (w^t v).
inline MatrixXcd reduced_resolvent(const MatrixXcd& m, dcomplex lambda,
                                   const VectorXcd& v, const VectorXcd& w,
                                   double gap_tol = 1e-8) {
    long n = m.rows();
    // lambda must be simple: check the distance to the rest of the spectrum.
    auto evs = all_eigenvalues(m);
    int close = 0;
    double next_gap = std::numeric_limits<double>::infinity();
    for (auto& ev : evs) {
        double d = std::abs(ev - lambda);
        if (d < gap_tol * std::max(1.0, std::abs(lambda)))
            ++close;
        else
            next_gap = std::min(next_gap, d);
    }
    if (close != 1)
        throw std::invalid_argument(
            "reduced_resolvent: eigenvalue is not simple at the working tolerance");
    dcomplex wv = w.transpose() * v;
    if (std::abs(wv) < 1e-12)
        throw std::invalid_argument("reduced_resolvent: left/right eigenvectors degenerate");
    MatrixXcd p = (v * w.transpose()) / wv;
    MatrixXcd b = m - lambda * MatrixXcd::Identity(n, n) + (v * w.transpose()) / wv;
    MatrixXcd s = b.partialPivLu().solve(MatrixXcd::Identity(n, n) - p);
    return s;
}

// Real symmetric convenience overload via the orthogonal eigendecomposition.
inline MatrixXd reduced_resolvent(const MatrixXd& m, double lambda, const VectorXd& v,
                                  double gap_tol = 1e-8) {
    MatrixXcd s = reduced_resolvent(m.cast<dcomplex>(), dcomplex(lambda),
                                    v.cast<dcomplex>(), v.cast<dcomplex>(), gap_tol);
    return s.real();
}

// lambda^(1) = tr(M1 P) = w^t M1 v / (w^t v).
inline dcomplex first_order(const PerturbationProblem& p) {
    dcomplex wv = p.w.transpose() * p.v;
    dcomplex num = p.w.transpose() * (p.m1 * p.v);
    return num / wv;
}

// lambda^(2) = tr[M2 P - M1 S M1 P].
inline dcomplex second_order(const PerturbationProblem& p) {
    dcomplex wv = p.w.transpose() * p.v;
    MatrixXcd s = reduced_resolvent(p.m, p.lambda, p.v, p.w);
    dcomplex t1 = p.w.transpose() * (p.m2 * p.v);
    dcomplex t2 = p.w.transpose() * (p.m1 * (s * (p.m1 * p.v)));
    return (t1 - t2) / wv;
}

// Specialized second-order coefficient for the harmonic family
// M(x) = diag(e^{i f_j x}) M with M = lambda * (doubly stochastic),
// eigenvector 1/sqrt(k), mean-zero f:
//   lambda^(2) = -(lambda/2k) [ -||f||^2 - 2 lambda f^t S f ].
inline double harmonic_second_variation(const MatrixXd& m, const VectorXd& f,
                                        double tol = 1e-9) {
    long k = m.rows();
    if (f.size() != k) throw std::invalid_argument("harmonic_second_variation: size");
    // Assumption checks: rows and columns sum to the same lambda > 0.
    double lambda = m.row(0).sum();
    for (long i = 0; i < k; ++i) {
        if (std::abs(m.row(i).sum() - lambda) > tol * std::max(1.0, std::abs(lambda)))
            throw std::invalid_argument("harmonic_second_variation: rows do not sum to lambda");
        if (std::abs(m.col(i).sum() - lambda) > tol * std::max(1.0, std::abs(lambda)))
            throw std::invalid_argument("harmonic_second_variation: columns do not sum to lambda");
    }
    if (m.minCoeff() < -tol)
        throw std::invalid_argument("harmonic_second_variation: matrix must be nonnegative");
    if (lambda <= 0) throw std::invalid_argument("harmonic_second_variation: lambda <= 0");
    if (std::abs(f.sum()) > tol * std::max(1.0, f.cwiseAbs().maxCoeff()) * k)
        throw std::invalid_argument("harmonic_second_variation: f must be mean-zero");
    // S f for the Perron eigenvalue via the J-augmented solve: S = inverse of
    // (M - lambda I) on 1-perp.
    MatrixXd aug = m - lambda * MatrixXd::Identity(k, k) +
                   (lambda / k) * MatrixXd::Constant(k, k, 1.0);
    VectorXd sf = solve_dense(aug, f);
    double val = -(lambda / (2.0 * k)) * (-f.squaredNorm() - 2.0 * lambda * f.dot(sf));
    return val;
}

struct PosthmReport {
    bool assumptions_ok = false;
    std::string failed_assumption;
    double lambda2 = 0;
    bool nonpositive = false;
    bool strict = false;       // applies when the matrix is normal + primitive
    bool normal = false;
    bool primitive = false;
};

// Checks lambda^(2) <= 0 for the harmonic family (and < 0 in the
// normal + irreducible + primitive case with f != 0).
inline PosthmReport verify_posthm(const MatrixXd& m, const VectorXd& f, double tol = 1e-9) {
    PosthmReport rep;
    long k = m.rows();
    VectorXd f0 = f - VectorXd::Constant(k, f.mean());
    try {
        rep.lambda2 = harmonic_second_variation(m, f0, tol);
        rep.assumptions_ok = true;
    } catch (const std::invalid_argument& e) {
        rep.failed_assumption = e.what();
        return rep;
    }
    double scale = std::max(1.0, f0.squaredNorm());
    rep.nonpositive = rep.lambda2 <= tol * scale;
    rep.normal = ((m * m.transpose() - m.transpose() * m).cwiseAbs().maxCoeff() <=
                  tol * std::max(1.0, m.cwiseAbs().maxCoeff()));
    // primitivity of the support pattern
    {
        Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> b(k, k), cur(k, k);
        for (long i = 0; i < k; ++i)
            for (long j = 0; j < k; ++j) b(i, j) = m(i, j) > tol;
        cur = b;
        long bound = (k - 1) * (k - 1) + 1;
        rep.primitive = false;
        for (long step = 1; step <= bound && !rep.primitive; ++step) {
            if (cur.all()) rep.primitive = true;
            Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> nxt(k, k);
            nxt.setConstant(false);
            for (long i = 0; i < k; ++i)
                for (long l = 0; l < k; ++l)
                    if (cur(i, l))
                        for (long j = 0; j < k; ++j)
                            if (b(l, j)) nxt(i, j) = true;
            cur = nxt;
        }
    }
    if (rep.normal && rep.primitive && f0.norm() > tol) rep.strict = rep.lambda2 < 0.0;
    return rep;
}

}  // namespace fgw

#endif
