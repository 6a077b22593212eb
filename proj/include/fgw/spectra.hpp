#ifndef FGW_SPECTRA_HPP
#define FGW_SPECTRA_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace fgw {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using dcomplex = std::complex<double>;

inline double default_spectrum_tol(const MatrixXd& a) {
    double norm_inf = a.cwiseAbs().rowwise().sum().maxCoeff();
    return 1e-10 * std::max(norm_inf, 1.0) * static_cast<double>(a.rows());
}

// Eigenvalues sorted descending, orthonormal eigenvectors as columns,
// multiplicities clustered at the recorded tolerance.
struct Spectrum {
    VectorXd values;
    MatrixXd vectors;
    std::vector<int> multiplicities;
    double tol = 0;

    int distinct() const { return static_cast<int>(multiplicities.size()); }
};

inline Spectrum symmetric_eigen(const MatrixXd& a, double tol = -1) {
    if (a.rows() != a.cols()) throw std::invalid_argument("symmetric_eigen: not square");
    if (tol < 0) tol = default_spectrum_tol(a);
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > tol)
        throw std::invalid_argument("symmetric_eigen: matrix is not symmetric");
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(a);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("symmetric_eigen: eigensolver failed");
    const long n = a.rows();
    Spectrum s;
    s.values = VectorXd(n);
    s.vectors = MatrixXd(n, n);
    // Eigen returns ascending order; flip to descending.
    for (long i = 0; i < n; ++i) {
        s.values(i) = es.eigenvalues()(n - 1 - i);
        s.vectors.col(i) = es.eigenvectors().col(n - 1 - i);
    }
    s.tol = tol;
    for (long i = 0; i < n;) {
        long j = i;
        while (j + 1 < n && std::abs(s.values(j + 1) - s.values(i)) <= tol) ++j;
        s.multiplicities.push_back(static_cast<int>(j - i + 1));
        i = j + 1;
    }
    // Residual check ||Av - lambda v|| <= tol * ||A||.
    double anorm = a.cwiseAbs().maxCoeff();
    for (long i = 0; i < n; ++i) {
        double resid = (a * s.vectors.col(i) - s.values(i) * s.vectors.col(i)).norm();
        if (resid > 1e3 * tol * std::max(anorm, 1.0))
            throw std::runtime_error("symmetric_eigen: residual check failed");
    }
    return s;
}

inline std::vector<dcomplex> all_eigenvalues(const MatrixXcd& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("all_eigenvalues: not square");
    Eigen::ComplexEigenSolver<MatrixXcd> es(a, false);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("all_eigenvalues: eigensolver did not converge");
    std::vector<dcomplex> v(es.eigenvalues().data(),
                            es.eigenvalues().data() + es.eigenvalues().size());
    return v;
}

inline double spectral_radius(const MatrixXcd& a) {
    double r = 0;
    for (auto& l : all_eigenvalues(a)) r = std::max(r, std::abs(l));
    return r;
}

inline double spectral_radius(const MatrixXd& a) {
    return spectral_radius(MatrixXcd(a.cast<dcomplex>()));
}

// The eigenvalue of `a` nearest to `ref`, for tracking a simple eigenvalue
// branch across a perturbation. Also reports the gap to the next nearest.
struct TrackedEigen {
    dcomplex value;
    double gap;
};

inline TrackedEigen nearest_eigenvalue(const MatrixXcd& a, dcomplex ref) {
    auto vals = all_eigenvalues(a);
    std::sort(vals.begin(), vals.end(), [&](dcomplex x, dcomplex y) {
        return std::abs(x - ref) < std::abs(y - ref);
    });
    TrackedEigen t;
    t.value = vals[0];
    t.gap = vals.size() > 1 ? std::abs(vals[1] - vals[0])
                            : std::numeric_limits<double>::infinity();
    return t;
}

// Perron pair of a nonnegative primitive matrix by power iteration with
// Rayleigh-quotient estimates; deterministic start 1/sqrt(n). Returns the
// eigenvalue together with the right and left eigenvectors (both positive,
// unit norm).
struct PerronPair {
    double value;
    VectorXd right;
    VectorXd left;
    int iterations;
};

inline PerronPair perron_pair(const MatrixXd& m, double rel_tol = 1e-14,
                              int max_iter = 1000000) {
    const long n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("perron_pair: not square");
    if (m.minCoeff() < 0) throw std::invalid_argument("perron_pair: negative entries");
    VectorXd v = VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
    VectorXd w = v;
    double lambda = 0;
    int it = 0;
    for (; it < max_iter; ++it) {
        VectorXd mv = m * v;
        VectorXd mtw = m.transpose() * w;
        double nv = mv.norm(), nw = mtw.norm();
        if (nv == 0 || nw == 0)
            throw std::runtime_error("perron_pair: matrix is not primitive (zero iterate)");
        v = mv / nv;
        w = mtw / nw;
        double denom = w.dot(v);
        if (std::abs(denom) < 1e-300)
            throw std::runtime_error("perron_pair: left/right vectors degenerate");
        double next = w.dot(m * v) / denom;
        if (it > 2 && std::abs(next - lambda) <= rel_tol * std::abs(next)) {
            lambda = next;
            double resid = (m * v - lambda * v).norm();
            if (resid <= 1e-10 * std::max(1.0, lambda) * n) break;
        }
        lambda = next;
    }
    if (it == max_iter)
        throw std::runtime_error("perron_pair: power iteration did not converge");
    if (v.sum() < 0) v = -v;
    if (w.sum() < 0) w = -w;
    if (v.minCoeff() <= 0 || w.minCoeff() <= 0)
        throw std::runtime_error("perron_pair: Perron vector not positive (matrix primitive?)");
    return {lambda, v, w, it};
}

// Solve a (possibly nonsymmetric) system with partial pivoting.
inline VectorXd solve_dense(const MatrixXd& a, const VectorXd& b) {
    return a.partialPivLu().solve(b);
}
inline VectorXcd solve_dense(const MatrixXcd& a, const VectorXcd& b) {
    return a.partialPivLu().solve(b);
}

}  // namespace fgw

#endif
