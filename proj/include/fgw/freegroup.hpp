#ifndef FGW_FREEGROUP_HPP
#define FGW_FREEGROUP_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "fgw/chebyshev.hpp"
#include "fgw/graph.hpp"
#include "fgw/laurent.hpp"
#include "fgw/numeric.hpp"

namespace fgw {

// Words over {a_1..a_r, A_1..A_r} as signed generator indices:
// generator i  ->  +i,  its inverse  ->  -i   (i = 1..r).
using Word = std::vector<int>;

inline bool is_reduced(const Word& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == -w[i + 1]) return false;
    return true;
}

inline bool is_cyclically_reduced(const Word& w) {
    if (w.empty()) return false;
    if (!is_reduced(w)) return false;
    return w.back() != -w.front();
}

inline std::vector<long> abelianization(const Word& w, int r) {
    std::vector<long> e(r, 0);
    for (int g : w) e[std::abs(g) - 1] += (g > 0) ? 1 : -1;
    return e;
}

struct FreeRank {
    int r;
    double c() const { return r / std::sqrt(2.0 * r - 1.0); }
    long q() const { return 2L * r - 1; }
};

// The 2r-vertex model graph: vertices ordered a_1..a_r, A_r..A_1; every
// vertex is adjacent to all others except its inverse partner, and carries
// a self-loop. (2r-1)-regular.
inline Graph build_gr(int r) {
    if (r < 1) throw std::invalid_argument("build_gr: rank must be >= 1");
    int n = 2 * r;
    Graph g(n, false);
    for (int i = 0; i < n; ++i) {
        int partner = n - 1 - i;
        g.adj[i][i] = 1;  // self-loop, counts once in the degree
        for (int j = i + 1; j < n; ++j) {
            if (j == partner) continue;
            g.add_edge(i, j);
        }
    }
    return g;
}

// Signed generator letter of vertex v in build_gr's ordering.
inline int gr_vertex_generator(int v, int r) {
    return (v < r) ? v + 1 : -(2 * r - v);
}

inline BigInt count_cyclically_reduced(int r, int m) {
    if (r < 1) throw std::invalid_argument("count_cyclically_reduced: rank must be >= 1");
    if (m < 1)
        throw std::invalid_argument(
            "count_cyclically_reduced: length must be >= 1 (the empty word is not counted)");
    BigInt v = big_pow(BigInt(2 * r - 1), m) + 1;
    if (m % 2 == 0) v += 2 * (r - 1);
    return v;
}

namespace detail {
inline void check_enumeration_guard(int r, int m, double limit = 1e7) {
    if (m < 1) throw std::invalid_argument("word enumeration: length must be >= 1");
    if (std::pow(2.0 * r, m) > limit)
        throw std::invalid_argument("word enumeration: (2r)^m exceeds the guard");
}

// Enumerates cyclically reduced words of length m in lexicographic order
// (letters ordered a_1 < A_1 < a_2 < A_2 < ...).
template <class Fn>
void for_each_cyclically_reduced(int r, int m, Fn&& fn) {
    Word w;
    w.reserve(m);
    auto letter = [](int idx) { return (idx % 2 == 0) ? idx / 2 + 1 : -(idx / 2 + 1); };
    std::function<void()> rec = [&]() {
        if (static_cast<int>(w.size()) == m) {
            if (w.back() != -w.front()) fn(w);
            return;
        }
        for (int idx = 0; idx < 2 * r; ++idx) {
            int g = letter(idx);
            if (!w.empty() && w.back() == -g) continue;
            w.push_back(g);
            rec();
            w.pop_back();
        }
    };
    rec();
}
}  // namespace detail

// Oracle: all cyclically reduced words of length m, lexicographic order.
inline std::vector<Word> brute_force_cyclic_words(int r, int m) {
    if (r < 1) throw std::invalid_argument("brute_force_cyclic_words: rank must be >= 1");
    detail::check_enumeration_guard(r, m);
    std::vector<Word> out;
    detail::for_each_cyclically_reduced(r, m, [&](const Word& w) { out.push_back(w); });
    return out;
}

// Oracle: number of reduced (not necessarily cyclically reduced) words.
inline BigInt brute_force_reduced_count(int r, int m) {
    detail::check_enumeration_guard(r, m);
    BigInt count = 0;
    std::function<void(int, int)> rec = [&](int depth, int last) {
        if (depth == m) {
            ++count;
            return;
        }
        for (int g = -r; g <= r; ++g) {
            if (g == 0 || g == -last) continue;
            rec(depth + 1, g);
        }
    };
    rec(0, 0);
    return count;
}

namespace detail {
inline void check_homology_guard(int r, int k) {
    if (r < 1 || k < 1) throw std::invalid_argument("homology_gf: need r >= 1, k >= 1");
    if (r * std::log(2.0 * k + 1.0) > std::log(5e6))
        throw std::invalid_argument("homology_gf: k*r guard exceeded");
}
}  // namespace detail

// tr((D_r A_r)^k): exact multivariate Laurent polynomial whose coefficient
// at x^e counts cyclically reduced words of length k with abelianization e.
inline LaurentZN homology_gf(int r, int k) {
    detail::check_homology_guard(r, k);
    Graph g = build_gr(r);
    int n = 2 * r;
    auto mono = [&](int v) {
        int gen = gr_vertex_generator(v, r);
        LaurentZN::Exp e(r, 0);
        e[std::abs(gen) - 1] = (gen > 0) ? 1 : -1;
        return e;
    };
    // P = (D A)^k by repeated right-multiplication with the monomial matrix
    // (D A)_{lj} = x^{gen(l)} A_{lj}; each step is a shift-add per A entry.
    std::vector<std::vector<LaurentZN>> p(n, std::vector<LaurentZN>(n, LaurentZN(r)));
    for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j)
            if (g.adj[l][j]) p[l][j] = LaurentZN::monomial(r, mono(l), BigInt(g.adj[l][j]));
    for (int step = 1; step < k; ++step) {
        std::vector<std::vector<LaurentZN>> q(n, std::vector<LaurentZN>(n, LaurentZN(r)));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (p[i][l].is_zero()) continue;
                auto e_l = mono(l);
                for (int j = 0; j < n; ++j) {
                    if (!g.adj[l][j]) continue;
                    for (auto& [e, c] : p[i][l].terms()) {
                        LaurentZN::Exp e2 = e;
                        for (int t = 0; t < r; ++t) e2[t] += e_l[t];
                        q[i][j].add(e2, c * g.adj[l][j]);
                    }
                }
            }
        p = std::move(q);
    }
    LaurentZN tr(r);
    for (int i = 0; i < n; ++i) tr += p[i][i];
    return tr;
}

// Image of homology_gf under x_i -> x for all i, computed directly with the
// 1-variable transfer matrix so that large n stays cheap.
inline LaurentZ1 total_exponent_gf(int r, int n_len) {
    if (r < 1 || n_len < 1)
        throw std::invalid_argument("total_exponent_gf: need r >= 1, n >= 1");
    Graph g = build_gr(r);
    int n = 2 * r;
    auto sgn = [&](int v) { return gr_vertex_generator(v, r) > 0 ? 1 : -1; };
    std::vector<std::vector<LaurentZ1>> p(n, std::vector<LaurentZ1>(n));
    for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j)
            if (g.adj[l][j]) p[l][j] = LaurentZ1::monomial(sgn(l), BigInt(g.adj[l][j]));
    for (int step = 1; step < n_len; ++step) {
        std::vector<std::vector<LaurentZ1>> q(n, std::vector<LaurentZ1>(n));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (p[i][l].is_zero()) continue;
                int d = sgn(l);
                for (int j = 0; j < n; ++j) {
                    if (!g.adj[l][j]) continue;
                    for (auto& [e, c] : p[i][l].terms()) q[i][j].add(e + d, c * g.adj[l][j]);
                }
            }
        p = std::move(q);
    }
    LaurentZ1 tr;
    for (int i = 0; i < n; ++i) tr += p[i][i];
    return tr;
}

struct HomoenumReport {
    bool ok;
    std::vector<int> first_mismatch;  // empty when ok
    std::string detail;
};

// Verifies homology_gf(r,k) == 2 (sqrt(2r-1))^k R_k(r/sqrt(2r-1); x_1..x_r)
//                                + (r-1)[1+(-1)^k]
// exactly, carrying sqrt(2r-1) as a formal radical in Q[sqrt(q)] and
// asserting that the radical component cancels coefficientwise.
inline HomoenumReport homoenum_closed_form_check(int r, int k) {
    detail::check_homology_guard(r, k);
    const long q = 2L * r - 1;
    using LQuad = LaurentN<QuadRat>;
    // base B = (c/2r) sum (x_i + 1/x_i) with c = r/sqrt(q): scalar 1/(2 sqrt(q))
    //        = (0 + (1/(2q)) sqrt(q)).
    QuadRat scale(q, BigRat(0), make_rat(BigInt(1), BigInt(2 * q)));
    auto mul_base = [&](const LQuad& p) {
        LQuad out(r);
        for (int i = 0; i < r; ++i)
            for (int d : {+1, -1})
                for (auto& [e, c] : p.terms()) {
                    LQuad::Exp e2 = e;
                    e2[i] += d;
                    out.add(e2, c * scale);
                }
        return out;
    };
    LQuad prev = LQuad::constant(r, QuadRat(q, BigRat(1), BigRat(0)));
    LQuad cur = mul_base(prev);  // T_1(B)
    for (int m = 1; m < k; ++m) {
        LQuad next = mul_base(cur);
        next = next + mul_base(cur);
        next = next - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    // multiply by 2 q^{k/2}  (q^{k/2} = q^{floor(k/2)} * sqrt(q) if k odd)
    QuadRat factor = (k % 2 == 0) ? QuadRat(q, BigRat(2) * BigRat(big_pow(BigInt(q), k / 2)), BigRat(0))
                                  : QuadRat(q, BigRat(0), BigRat(2) * BigRat(big_pow(BigInt(q), k / 2)));
    LQuad closed(r);
    for (auto& [e, c] : cur.terms()) closed.add(e, c * factor);
    if (k % 2 == 0)
        closed.add(LQuad::Exp(r, 0), QuadRat(q, BigRat(2 * (r - 1)), BigRat(0)));

    LaurentZN direct = homology_gf(r, k);

    // Every closed-form coefficient must have zero radical part and match.
    for (auto& [e, c] : closed.terms()) {
        if (!(c.b == 0))
            return {false, e, "radical component did not cancel"};
        if (c.a.get_den() != 1)
            return {false, e, "closed-form coefficient not an integer"};
        if (c.a.get_num() != direct.coeff(e))
            return {false, e, "coefficient mismatch"};
    }
    for (auto& [e, c] : direct.terms()) {
        QuadRat cc = closed.coeff(e);
        if (!(cc.a == BigRat(c)) || !(cc.b == 0)) return {false, e, "coefficient mismatch"};
    }
    return {true, {}, ""};
}

}  // namespace fgw

#endif
