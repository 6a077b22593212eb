#ifndef FGW_LAURENT_HPP
#define FGW_LAURENT_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "fgw/numeric.hpp"

namespace fgw {

// Univariate Laurent polynomial, exponent -> coefficient. Zero
// coefficients are never stored.
template <class T>
class Laurent1 {
public:
    using Map = std::map<long, T>;

    Laurent1() = default;
    static Laurent1 monomial(long e, T c = T(1)) {
        Laurent1 p;
        p.add(e, std::move(c));
        return p;
    }

    void add(long e, const T& c) {
        if (c == T()) return;
        auto it = m_.find(e);
        if (it == m_.end()) {
            m_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == T()) m_.erase(it);
        }
    }

    T coeff(long e) const {
        auto it = m_.find(e);
        return it == m_.end() ? T() : it->second;
    }

    const Map& terms() const { return m_; }
    bool is_zero() const { return m_.empty(); }
    size_t size() const { return m_.size(); }

    bool operator==(const Laurent1& o) const { return m_ == o.m_; }

    Laurent1 operator+(const Laurent1& o) const {
        Laurent1 r = *this;
        for (auto& [e, c] : o.m_) r.add(e, c);
        return r;
    }
    Laurent1 operator-(const Laurent1& o) const {
        Laurent1 r = *this;
        for (auto& [e, c] : o.m_) r.add(e, T() - c);
        return r;
    }
    Laurent1 operator*(const Laurent1& o) const {
        Laurent1 r;
        for (auto& [e1, c1] : m_)
            for (auto& [e2, c2] : o.m_) r.add(e1 + e2, c1 * c2);
        return r;
    }
    Laurent1& operator+=(const Laurent1& o) {
        for (auto& [e, c] : o.m_) add(e, c);
        return *this;
    }

    Laurent1 shifted(long d) const {
        Laurent1 r;
        for (auto& [e, c] : m_) r.m_.emplace(e + d, c);
        return r;
    }

    T sum_coeffs() const {
        T s = T();
        for (auto& [e, c] : m_) s += c;
        return s;
    }

    // Is c(-e) == c(e) for all e?
    bool symmetric() const {
        for (auto& [e, c] : m_)
            if (!(coeff(-e) == c)) return false;
        return true;
    }

    long min_exp() const { return m_.empty() ? 0 : m_.begin()->first; }
    long max_exp() const { return m_.empty() ? 0 : m_.rbegin()->first; }

private:
    Map m_;
};

// Multivariate Laurent polynomial over k variables, sparse map from
// exponent vectors to coefficients.
template <class T>
class LaurentN {
public:
    using Exp = std::vector<int>;
    using Map = std::map<Exp, T>;

    LaurentN() = default;
    explicit LaurentN(int nvars) : k_(nvars) {}

    static LaurentN constant(int nvars, T c) {
        LaurentN p(nvars);
        p.add(Exp(nvars, 0), std::move(c));
        return p;
    }
    static LaurentN monomial(int nvars, const Exp& e, T c = T(1)) {
        LaurentN p(nvars);
        p.add(e, std::move(c));
        return p;
    }

    int nvars() const { return k_; }

    void add(const Exp& e, const T& c) {
        if (c == T()) return;
        auto it = m_.find(e);
        if (it == m_.end()) {
            m_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == T()) m_.erase(it);
        }
    }

    T coeff(const Exp& e) const {
        auto it = m_.find(e);
        return it == m_.end() ? T() : it->second;
    }

    const Map& terms() const { return m_; }
    bool is_zero() const { return m_.empty(); }
    size_t size() const { return m_.size(); }

    bool operator==(const LaurentN& o) const { return m_ == o.m_; }

    LaurentN operator+(const LaurentN& o) const {
        LaurentN r = *this;
        for (auto& [e, c] : o.m_) r.add(e, c);
        return r;
    }
    LaurentN operator-(const LaurentN& o) const {
        LaurentN r = *this;
        for (auto& [e, c] : o.m_) r.add(e, T() - c);
        return r;
    }
    LaurentN operator*(const LaurentN& o) const {
        LaurentN r(k_);
        Exp e(k_);
        for (auto& [e1, c1] : m_)
            for (auto& [e2, c2] : o.m_) {
                for (int i = 0; i < k_; ++i) e[i] = e1[i] + e2[i];
                r.add(e, c1 * c2);
            }
        return r;
    }
    LaurentN& operator+=(const LaurentN& o) {
        for (auto& [e, c] : o.m_) add(e, c);
        return *this;
    }

    // Multiply by coef * x_i^d in place-ish (returns new).
    LaurentN shifted(int var, int d) const {
        LaurentN r(k_);
        for (auto& [e, c] : m_) {
            Exp e2 = e;
            e2[var] += d;
            r.m_.emplace(std::move(e2), c);
        }
        return r;
    }

    T sum_coeffs() const {
        T s = T();
        for (auto& [e, c] : m_) s += c;
        return s;
    }

    // x_i -> x for all i (total-degree projection to one variable).
    Laurent1<T> project_total() const {
        Laurent1<T> r;
        for (auto& [e, c] : m_) {
            long s = 0;
            for (int v : e) s += v;
            r.add(s, c);
        }
        return r;
    }

    bool symmetric_under_negation() const {
        Exp neg(k_);
        for (auto& [e, c] : m_) {
            for (int i = 0; i < k_; ++i) neg[i] = -e[i];
            if (!(coeff(neg) == c)) return false;
        }
        return true;
    }

    bool symmetric_under_coordinate_swap(int i, int j) const {
        Exp sw(k_);
        for (auto& [e, c] : m_) {
            sw = e;
            std::swap(sw[i], sw[j]);
            if (!(coeff(sw) == c)) return false;
        }
        return true;
    }

private:
    int k_ = 0;
    Map m_;
};

using LaurentZ1 = Laurent1<BigInt>;
using LaurentQ1 = Laurent1<BigRat>;
using LaurentZN = LaurentN<BigInt>;
using LaurentQN = LaurentN<BigRat>;

}  // namespace fgw

#endif
