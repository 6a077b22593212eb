#ifndef FGW_MATRIX_HPP
#define FGW_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fgw/numeric.hpp"

namespace fgw {

// Dense matrix over an exact coefficient ring (BigInt, BigRat, QuadRat,
// Laurent polynomials, ...). Float linear algebra lives in spectra.hpp
// on top of Eigen; this type is for arithmetic that must not round.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols, T init = T())
        : r_(rows), c_(cols), d_(rows * cols, init) {}

    static Mat identity(size_t n, T one = T(1)) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }

    T& operator()(size_t i, size_t j) { return d_[i * c_ + j]; }
    const T& operator()(size_t i, size_t j) const { return d_[i * c_ + j]; }

    bool operator==(const Mat& o) const {
        return r_ == o.r_ && c_ == o.c_ && d_ == o.d_;
    }

    Mat transpose() const {
        Mat t(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    T trace() const {
        T s = T();
        for (size_t i = 0; i < r_ && i < c_; ++i) s += (*this)(i, i);
        return s;
    }

private:
    size_t r_ = 0, c_ = 0;
    std::vector<T> d_;
};

template <class T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Mat: size mismatch in *");
    Mat<T> c(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == T()) continue;
            for (size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j) == T()) continue;
                c(i, j) += aik * b(k, j);
            }
        }
    return c;
}

template <class T>
Mat<T> operator+(const Mat<T>& a, const Mat<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("Mat: size mismatch in +");
    Mat<T> c = a;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

template <class T>
Mat<T> operator-(const Mat<T>& a, const Mat<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("Mat: size mismatch in -");
    Mat<T> c = a;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            T t = c(i, j);
            t -= b(i, j);
            c(i, j) = t;
        }
    return c;
}

template <class T>
Mat<T> mat_pow(const Mat<T>& a, unsigned long e) {
    if (a.rows() != a.cols()) throw std::invalid_argument("mat_pow: not square");
    Mat<T> result = Mat<T>::identity(a.rows());
    Mat<T> base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = (e >>= 1) ? base * base : base;
    }
    return result;
}

// tr(A^m), exact.
inline BigInt trace_power(const Mat<BigInt>& a, unsigned long m) {
    if (a.rows() != a.cols()) throw std::invalid_argument("trace_power: not square");
    return mat_pow(a, m).trace();
}

template <class T>
std::vector<T> mat_vec(const Mat<T>& a, const std::vector<T>& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("mat_vec: size mismatch");
    std::vector<T> y(a.rows(), T());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

// Gaussian elimination over the rationals; throws on a singular system.
inline std::vector<BigRat> solve_rational(Mat<BigRat> a, std::vector<BigRat> b) {
    size_t n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw std::invalid_argument("solve_rational: size mismatch");
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) throw std::runtime_error("solve_rational: singular matrix");
        if (piv != col) {
            for (size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            std::swap(b[piv], b[col]);
        }
        BigRat inv = 1 / a(col, col);
        for (size_t j = col; j < n; ++j) a(col, j) *= inv;
        b[col] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            BigRat f = a(i, col);
            for (size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
            b[i] -= f * b[col];
        }
    }
    return b;
}

inline size_t rank_rational(Mat<BigRat> a) {
    size_t n = a.rows(), m = a.cols(), rank = 0;
    for (size_t col = 0; col < m && rank < n; ++col) {
        size_t piv = rank;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) continue;
        if (piv != rank)
            for (size_t j = 0; j < m; ++j) std::swap(a(piv, j), a(rank, j));
        BigRat inv = 1 / a(rank, col);
        for (size_t j = col; j < m; ++j) a(rank, j) *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == rank || a(i, col) == 0) continue;
            BigRat f = a(i, col);
            for (size_t j = col; j < m; ++j) a(i, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace fgw

#endif
