// Acceptance suite: one pass/fail line per criterion, every tolerance pinned
// in code. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fgw/chebyshev.hpp"
#include "fgw/entropy.hpp"
#include "fgw/enumeration.hpp"
#include "fgw/freegroup.hpp"
#include "fgw/graph.hpp"
#include "fgw/grouptable.hpp"
#include "fgw/homodist.hpp"
#include "fgw/linegraph.hpp"
#include "fgw/perturbation.hpp"
#include "fgw/walkstats.hpp"

using namespace fgw;

namespace {

struct Check {
    bool pass = true;
    std::ostringstream note;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (note.tellp() > 0) note << "; ";
            note << what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------- criterion 1
Check word_count_exactness() {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    for (int r = 1; r <= 3; ++r) {
        Mat<BigInt> a = build_gr(r).adjacency_big();
        for (int m = 1; m <= 8; ++m) {
            BigInt closed = count_cyclically_reduced(r, m);
            BigInt tr = trace_power(a, m);
            BigInt brute(static_cast<long>(brute_force_cyclic_words(r, m).size()));
            c.require(closed == tr, "closed form != trace at r=" + std::to_string(r) +
                                        ", m=" + std::to_string(m));
            c.require(closed == brute, "closed form != brute force at r=" +
                                           std::to_string(r) + ", m=" + std::to_string(m));
        }
    }
    double dt = seconds_since(t0);
    c.require(dt < 10.0, "took " + std::to_string(dt) + " s (budget 10 s)");
    return c;
}

// ---------------------------------------------------------------- criterion 2
Check homology_generating_function() {
    Check c;
    for (auto [r, kmax] : std::vector<std::pair<int, int>>{{2, 6}, {3, 4}}) {
        for (int k = 1; k <= kmax; ++k) {
            LaurentZN h = homology_gf(r, k);
            std::map<std::vector<int>, long> brute;
            for (auto& w : brute_force_cyclic_words(r, k)) {
                auto e = abelianization(w, r);
                brute[std::vector<int>(e.begin(), e.end())]++;
            }
            bool same = h.size() == brute.size();
            for (auto& [e, cnt] : brute) same = same && (h.coeff(e) == cnt);
            c.require(same, "gf != brute force at r=" + std::to_string(r) +
                                ", k=" + std::to_string(k));
            auto rep = homoenum_closed_form_check(r, k);
            c.require(rep.ok, "closed-form radical check failed at r=" + std::to_string(r) +
                                  ", k=" + std::to_string(k) + " (" + rep.detail + ")");
        }
    }
    return c;
}

// ---------------------------------------------------------------- criterion 3
//
// The positivity clause is evaluated with an integer-scaled dense recurrence:
// P_n = (2 k q)^n * T_n((c/2k) sum (x_i + 1/x_i)) has integer coefficients
// for c = p/q, via P_{n+1} = 2 p S P_n - (2kq)^2 P_{n-1} (S = the shift sum),
// so positivity of P_n's coefficients is exact integer arithmetic.
struct DensePoly {
    int k, n_cap;
    std::vector<BigInt> a;  // cube of side 2*n_cap+1

    DensePoly(int k_, int cap) : k(k_), n_cap(cap) {
        size_t side = 2 * n_cap + 1;
        size_t total = 1;
        for (int i = 0; i < k; ++i) total *= side;
        a.assign(total, BigInt(0));
    }
    size_t idx(const std::vector<int>& e) const {
        size_t side = 2 * n_cap + 1, t = 0;
        for (int i = 0; i < k; ++i) t = t * side + (e[i] + n_cap);
        return t;
    }
};

Check chebyshev_suite() {
    Check c;
    // (a) recurrence vs closed form, n <= 60, exact
    for (int n = 1; n <= 60; ++n) {
        ChebPoly t = cheb(ChebKind::T, n);
        for (int m = 0; 2 * m <= n; ++m)
            c.require(cheb_coeff_closed_form(n, m) == t.coeff(n - 2 * m),
                      "closed form coeff mismatch at n=" + std::to_string(n));
    }
    // (b) coefficient positivity for c in {3/2, 2, 10}, n <= 40, k in {1,2,3}
    const int n_max = 40;
    std::vector<std::pair<long, long>> cs{{3, 2}, {2, 1}, {10, 1}};
    for (auto [p, q] : cs) {
        for (int k = 1; k <= 3; ++k) {
            for (int kind = 0; kind < 2; ++kind) {  // 0 = R (T-type), 1 = S (U-type)
                // integer-scaled recurrence, dense storage
                DensePoly prev(k, n_max), cur(k, n_max);
                std::vector<int> zero(k, 0);
                prev.a[prev.idx(zero)] = 1;  // degree 0
                // degree 1: R: p * S / ... scaled T_1 = p*S; S: 2 p S
                BigInt step_scale_sq = BigInt(2 * k * q) * BigInt(2 * k * q);
                auto mul_s = [&](const DensePoly& x, DensePoly& out) {
                    // out += S * x (sum of shifts by +-1 in each coordinate)
                    std::vector<int> e(k, 0);
                    size_t side = 2 * n_max + 1;
                    size_t total = x.a.size();
                    for (size_t t = 0; t < total; ++t) {
                        if (x.a[t] == 0) continue;
                        size_t rem = t;
                        for (int i = k - 1; i >= 0; --i) {
                            e[i] = static_cast<int>(rem % side) - n_max;
                            rem /= side;
                        }
                        for (int i = 0; i < k; ++i)
                            for (int d : {1, -1}) {
                                e[i] += d;
                                if (std::abs(e[i]) <= n_max) out.a[out.idx(e)] += x.a[t];
                                e[i] -= d;
                            }
                    }
                };
                DensePoly deg1(k, n_max);
                mul_s(prev, deg1);
                for (auto& v : deg1.a) v *= BigInt(p) * BigInt(kind == 0 ? 1 : 2);
                cur = deg1;
                int first_bad_n = -1;
                std::vector<int> witness;
                auto scan = [&](const DensePoly& x, int n) {
                    if (first_bad_n >= 0) return;
                    size_t side = 2 * n_max + 1;
                    std::vector<int> e(k, 0);
                    for (size_t t = 0; t < x.a.size(); ++t) {
                        if (!(x.a[t] < 0)) continue;
                        size_t rem = t;
                        for (int i = k - 1; i >= 0; --i) {
                            e[i] = static_cast<int>(rem % side) - n_max;
                            rem /= side;
                        }
                        first_bad_n = n;
                        witness = e;
                        return;
                    }
                };
                scan(prev, 0);
                scan(cur, 1);
                for (int n = 1; n < n_max && first_bad_n < 0; ++n) {
                    DensePoly next(k, n_max);
                    mul_s(cur, next);
                    for (size_t t = 0; t < next.a.size(); ++t) {
                        if (next.a[t] != 0) next.a[t] *= 2 * p;
                        if (prev.a[t] != 0) next.a[t] -= step_scale_sq * prev.a[t];
                    }
                    prev = std::move(cur);
                    cur = std::move(next);
                    scan(cur, n + 1);
                }
                if (first_bad_n >= 0) {
                    std::string w = "(";
                    for (size_t i = 0; i < witness.size(); ++i)
                        w += (i ? "," : "") + std::to_string(witness[i]);
                    w += ")";
                    c.require(false, std::string(kind == 0 ? "R" : "S") + "_n(" +
                                         std::to_string(p) + "/" + std::to_string(q) +
                                         "; k=" + std::to_string(k) +
                                         ") has a negative coefficient at n=" +
                                         std::to_string(first_bad_n) + ", exponent " + w);
                }
            }
        }
    }
    // (c) R_n(1; x) = (x^n + x^-n)/2 exactly
    for (int n = 1; n <= 40; ++n) {
        auto s = symmetrized(SymKind::R, n, BigRat(1), 1);
        bool ok = s.coeffs.size() == 2 && s.coeffs.coeff({n}) == BigRat(1, 2) &&
                  s.coeffs.coeff({-n}) == BigRat(1, 2);
        c.require(ok, "R_n(1;x) != (x^n + x^-n)/2 at n=" + std::to_string(n));
    }
    return c;
}

// ---------------------------------------------------------------- criterion 4
Check clt_at_desk_scale() {
    Check c;
    double sigma2 = clt_sigma2(2.0 / std::sqrt(3.0), 1);
    double v400 = total_exponent_variance(2, 400) / 400.0;
    c.require(std::abs(v400 / sigma2 - 1.0) < 0.02,
              "Var_400/400 = " + std::to_string(v400) + " vs sigma2 = " +
                  std::to_string(sigma2));
    c.require(total_exponent_mean_numerator(2, 400) == 0, "mean not exactly 0");
    // Asymptotic count trend: words homologous to 0 in Z^2, via the exact
    // integer expansion count_0(n) = sum_m (-1)^m 3^m n/(n-m) C(n-m,m) W2(n-2m)
    // + 2 [n even]; ratio against c_2 3^n / n with c_2 = 1/pi.
    auto central2 = [&](int j) {  // [x^0 y^0] (x+1/x+y+1/y)^j
        BigInt s = 0;
        for (int i = 0; i <= j; i += 2) {
            if ((j - i) % 2) continue;
            s += binomial(j, i) * binomial(i, i / 2) * binomial(j - i, (j - i) / 2);
        }
        return s;
    };
    auto count0 = [&](int n) {
        BigInt s = 0;
        for (int m = 0; 2 * m <= n; ++m) {
            BigInt term = exact_div(BigInt(n) * binomial(n - m, m), BigInt(n - m)) *
                          big_pow(BigInt(3), m) * central2(n - 2 * m);
            s += (m % 2 == 0) ? term : -term;
        }
        if (n % 2 == 0) s += 2;
        return s;
    };
    double prev_drift = 1e18;
    bool monotone = true;
    double last_ratio = 0;
    for (int n : {100, 200, 400}) {
        BigRat ratio = BigRat(count0(n)) * BigRat(n) / BigRat(big_pow(BigInt(3), n));
        double rd = to_double(ratio) * M_PI;
        double drift = std::abs(rd - 1.0);
        monotone = monotone && (drift < prev_drift);
        prev_drift = drift;
        last_ratio = rd;
    }
    c.require(monotone, "count ratio drift not monotone toward 1");
    c.require(std::abs(last_ratio - 1.0) < 0.05,
              "count ratio at n=400 is " + std::to_string(last_ratio));
    return c;
}

// ---------------------------------------------------------------- criterion 5
Check modp_equidistribution_and_bias() {
    Check c;
    for (int n : {4, 9, 14, 20})
        for (long p : {3L, 5L})
            c.require(modp_counts(2, n, p).total() == count_cyclically_reduced(2, n),
                      "count total mismatch");
    for (int n = 6; n < 16; ++n) {
        double g1 = equidistribution_gap(2, n, 3), g2 = equidistribution_gap(2, n + 1, 3);
        c.require(g2 < g1, "gap(2," + std::to_string(n + 1) + ",3) = " + std::to_string(g2) +
                               " >= gap(2," + std::to_string(n) + ",3) = " +
                               std::to_string(g1) + " (decay is an envelope only)");
    }
    c.require(equidistribution_gap(2, 20, 3) < 0.05, "gap at n=20 not < 0.05");
    auto b = bias_ranking(2, 12, 5);
    c.require(b.zero_first,
              "residue 0 is not first at (r=2,n=12,p=5); exact counts rank it last");
    c.require(b.order.size() > 1 && b.order[1] == 3,
              "residue p-2 = 3 is not second at (r=2,n=12,p=5); residues 1..4 tie exactly");
    return c;
}

// ---------------------------------------------------------------- criterion 6
Check perturbation_fd() {
    Check c;
    std::mt19937 rng(2026);
    std::uniform_real_distribution<double> u(-1, 1);
    int done = 0;
    while (done < 50) {
        int n = 3 + static_cast<int>(rng() % 6);  // n <= 8
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        MatrixXd pm = MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i) pm(i, perm[i]) = 1.0;
        double alpha = 0.25 + 0.5 * (u(rng) + 1) / 2;
        MatrixXd m = alpha * MatrixXd::Constant(n, n, 1.0 / n) +
                     (1 - alpha) * 0.5 * (pm + pm.transpose());
        VectorXd f(n);
        for (int i = 0; i < n; ++i) f(i) = u(rng);
        f -= VectorXd::Constant(n, f.mean());
        if (f.norm() < 0.3) continue;
        VectorXd v = VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
        MatrixXcd m1 = MatrixXcd::Zero(n, n), m2 = MatrixXcd::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            m1.row(i) = dcomplex(0, f(i)) * m.row(i).cast<dcomplex>();
            m2.row(i) = dcomplex(-0.5 * f(i) * f(i), 0) * m.row(i).cast<dcomplex>();
        }
        auto prob = make_symmetric_problem(m, 1.0, v, m1, m2);
        dcomplex l1 = first_order(prob);
        dcomplex l2 = second_order(prob);
        auto eig_at = [&](double h) {
            MatrixXcd d = MatrixXcd::Zero(n, n);
            for (int i = 0; i < n; ++i) d(i, i) = std::polar(1.0, f(i) * h);
            return nearest_eigenvalue(MatrixXcd(d * m.cast<dcomplex>()), dcomplex(1, 0)).value;
        };
        double h1 = 1e-4;
        dcomplex fd1 = (eig_at(h1) - eig_at(-h1)) / (2.0 * h1);
        c.require(std::abs(l1 - fd1) <= 1e-6 * std::max(1.0, std::abs(l1)),
                  "first-order FD mismatch");
        double h2 = 1e-3;
        dcomplex fd2 = (eig_at(h2) - 2.0 * dcomplex(1, 0) + eig_at(-h2)) / (h2 * h2);
        c.require(std::abs(2.0 * l2 - fd2) <= 1e-5 * std::max(1.0, std::abs(2.0 * l2)),
                  "second-order FD mismatch");
        c.require(l2.real() <= 1e-12, "lambda2 > 0");
        // these mixes are symmetric (normal) and strictly positive (primitive)
        c.require(l2.real() < 0, "lambda2 not strictly negative for a normal primitive case");
        ++done;
    }
    return c;
}

// ---------------------------------------------------------------- criterion 7
Check walk_variance_criterion() {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(2027);
    for (const Graph& g : {build_gr(2), complete_graph(4), petersen_graph()}) {
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<long> f(g.n);
            for (auto& x : f) x = static_cast<long>(rng() % 7) - 3;
            VectorXd fd(g.n);
            for (int i = 0; i < g.n; ++i) fd(i) = static_cast<double>(f[i]);
            double s2 = walk_variance(g, fd).sigma2;
            std::vector<BigInt> fb(f.begin(), f.end());
            double dp = closed_walk_moments(g.adjacency_big(), fb, 300).variance() / 300.0;
            if (s2 < 1e-12) {
                c.require(dp < 1e-2, "zero-variance case has nonzero DP rate");
            } else {
                c.require(std::abs(dp / s2 - 1.0) < 0.02,
                          "DP/formula = " + std::to_string(dp / s2) + " at n=" +
                              std::to_string(g.n));
            }
        }
    }
    // gradients on line digraphs have vanishing variance
    {
        Graph k4 = complete_graph(4);
        LineDigraph ld = line_digraph(k4);
        std::vector<BigRat> f{BigRat(2), BigRat(-3), BigRat(1), BigRat(5)};
        auto gf = grad(ld, f);
        std::vector<double> fe(gf.size());
        for (size_t i = 0; i < gf.size(); ++i) fe[i] = to_double(gf[i]);
        c.require(std::abs(backtrackless_variance(k4, fe)) <= 1e-10,
                  "gradient variance not <= 1e-10 (undirected)");
        Graph d = random_regular_digraph(4, 2, 99);
        LineDigraph ldd = line_digraph(d);
        std::vector<BigRat> fd2{BigRat(1), BigRat(4), BigRat(-2), BigRat(0)};
        auto gfd = grad(ldd, fd2);
        std::vector<double> fed(gfd.size());
        for (size_t i = 0; i < gfd.size(); ++i) fed[i] = to_double(gfd[i]);
        c.require(std::abs(directed_variance(d, fed)) <= 1e-10,
                  "gradient variance not <= 1e-10 (directed)");
    }
    double dt = seconds_since(t0);
    c.require(dt < 60.0, "took " + std::to_string(dt) + " s (budget 60 s)");
    return c;
}

// ---------------------------------------------------------------- criterion 8
Check line_digraph_structure() {
    Check c;
    auto imdel_parts = [&](const Graph& g) -> std::string {
        LineDigraph ld = line_digraph(g);
        auto rep = ata_structure(ld);
        if (!rep.block_structure_ok) return "block structure";
        if (!rep.char_poly_ok) return "eigenvalue multiplicities";
        if (!rep.lift_eigenspace_ok) return "lift eigenspace";
        // (b): Delta_L restricted to lifts equals (r-1) grad pointwise
        long r = *g.regularity();
        int m = ld.edges();
        Mat<BigInt> al = ld.line.adjacency_big();
        for (int w = 0; w < g.n; ++w) {
            std::vector<BigRat> delta(g.n, BigRat(0));
            delta[w] = 1;
            auto lf = lift(ld, delta);
            auto gf = grad(ld, delta);
            for (int e = 0; e < m; ++e) {
                BigRat lap = BigRat(r - 1) * lf[e];
                for (int y = 0; y < m; ++y)
                    if (al(e, y) != 0) lap -= BigRat(al(e, y)) * lf[y];
                if (!(lap == BigRat(r - 1) * gf[e])) return "Delta L != (r-1) grad";
            }
        }
        // (c): gradients meet lifts trivially for a non-bipartite base
        bool bip = connectivity_and_bipartite(g).bipartite;
        int n = g.n;
        Mat<BigRat> grads(m, n), lifts(m, n), both(m, 2 * n);
        for (int v = 0; v < n; ++v) {
            std::vector<BigRat> delta(n, BigRat(0));
            delta[v] = 1;
            auto gf = grad(ld, delta);
            auto lf = lift(ld, delta);
            for (int e = 0; e < m; ++e) {
                grads(e, v) = gf[e];
                lifts(e, v) = lf[e];
                both(e, v) = gf[e];
                both(e, n + v) = lf[e];
            }
        }
        size_t inter = rank_rational(grads) + rank_rational(lifts) - rank_rational(both);
        if (!bip && inter != 0) return "gradient/lift intersection not trivial";
        return "";
    };
    for (const Graph& g : {cycle_graph(5), complete_graph(4), petersen_graph()}) {
        std::string bad = imdel_parts(g);
        c.require(bad.empty(), "undirected case failed: " + bad);
    }
    for (unsigned seed : {2028u, 2029u}) {
        Graph d = random_regular_digraph(5, 3, seed);
        auto rep = ata_structure(line_digraph(d));
        c.require(rep.ok(), "directed A^t A structure failed at seed " + std::to_string(seed));
        c.require(std::abs(rep.a0_norm - 3.0) < 1e-8, "directed ||A_0|| != r");
    }
    return c;
}

// ---------------------------------------------------------------- criterion 9
Check zeta_identities() {
    Check c;
    for (int r = 1; r <= 4; ++r) {
        IntPoly expect = IntPoly(std::vector<BigInt>{1, -(2 * r - 1)}) *
                         IntPoly(std::vector<BigInt>{1, -1}) *
                         IntPoly(std::vector<BigInt>{1, 0, -1}).pow(r - 1);
        c.require(zeta(build_gr(r)) == expect, "zeta(G_r) mismatch at r=" + std::to_string(r));
    }
    for (const Graph& g : {complete_graph(4), petersen_graph(), cycle_graph(5)})
        c.require(ihara_identity_check(g).equal, "determinant forms differ");
    std::mt19937 rng(2030);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        bool directed = rng() % 2;
        Graph g(n, directed);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!directed && j < i) continue;
                if (rng() % 3 == 0) g.add_edge(i, j, 1 + static_cast<int>(rng() % 2));
            }
        auto nn = cycle_counts_from_zeta(zeta(g), 12);
        Mat<BigInt> a = g.adjacency_big();
        for (int i = 1; i <= 12; ++i)
            c.require(nn[i - 1] == trace_power(a, i), "power sums != traces");
    }
    return c;
}

// --------------------------------------------------------------- criterion 10
Check conjugacy_counting() {
    Check c;
    for (int k = 1; k <= 3; ++k) {
        auto t = free_group_counts(k, 12);
        for (int r = 1; r <= 12; ++r)
            c.require(burnside_oracle(k, r) == t.cc_count[r],
                      "CC mismatch at k=" + std::to_string(k) + ", r=" + std::to_string(r));
    }
    // product rule vs the lattice oracle for Z x Z
    std::vector<BigInt> z(13, BigInt(2));
    z[0] = 1;
    auto zz = product_cc_gf(z, z);
    for (int r = 1; r <= 12; ++r) {
        long lattice = 0;
        for (int x = -r; x <= r; ++x)
            for (int y = -r; y <= r; ++y)
                if (std::abs(x) + std::abs(y) == r) ++lattice;
        c.require(zz[r] == lattice, "product rule mismatch at r=" + std::to_string(r));
    }
    return c;
}

// --------------------------------------------------------------- criterion 11
Check entropy_criterion() {
    Check c;
    // closed form vs numerical minimizer: K_4 and two random primitive
    // regular digraphs (the closed form requires the balanced Perron case;
    // for unbalanced digraphs the numerical minimum is strictly lower --
    // reported by the unit suite and the decisions record).
    std::vector<MatrixXd> mats{complete_graph(4).adjacency(),
                               random_regular_digraph(4, 3, 3001).adjacency(),
                               random_regular_digraph(5, 2, 3002).adjacency()};
    for (size_t i = 0; i < mats.size(); ++i) {
        auto closed = min_entropy_weights(mats[i]);
        auto num = numeric_min_entropy(mats[i]);
        c.require((num.weights - closed.weights).cwiseAbs().maxCoeff() < 1e-6,
                  "minimizer weights differ at case " + std::to_string(i));
        c.require(std::abs(num.s0 - closed.s0) < 1e-8,
                  "minimizer value differs at case " + std::to_string(i));
    }
    // convexity on 50 random positive pairs
    std::mt19937 rng(2031);
    std::uniform_real_distribution<double> u(0.2, 2.0);
    MatrixXd k4 = complete_graph(4).adjacency();
    MatrixXd rd = random_regular_digraph(4, 2, 3003).adjacency();
    for (int t = 0; t < 50; ++t) {
        const MatrixXd& a = (t % 2 == 0) ? k4 : rd;
        long n = a.rows();
        VectorXd f(n), g(n);
        for (long i = 0; i < n; ++i) {
            f(i) = u(rng);
            g(i) = u(rng);
        }
        double mid = entropy(a, ((f + g) / 2.0).eval());
        double avg = 0.5 * (entropy(a, f) + entropy(a, g));
        c.require(mid <= avg + 1e-10, "convexity violated");
    }
    // growth-rate oracle at L = 60 within 5%
    {
        Graph k4g = complete_graph(4);
        std::vector<long> f{1, 2, 1, 3};
        VectorXd fd(4);
        for (int i = 0; i < 4; ++i) fd(i) = static_cast<double>(f[i]);
        double s0 = entropy(k4g.adjacency(), fd);
        BigInt n60 = weighted_cycle_count_leq(k4g.adjacency_big(), f, 60);
        double rate = std::log(to_double(n60)) / 60.0;
        c.require(std::abs(rate / s0 - 1.0) < 0.05,
                  "growth oracle ratio " + std::to_string(rate / s0));
    }
    return c;
}

// --------------------------------------------------------------- criterion 12
Check finite_group_equidistribution() {
    Check c;
    Graph k4 = complete_graph(4);
    {
        GroupTable z3 = cyclic_group(3);
        std::vector<int> labels{0, 1, 2, 0};
        double prev = 1e18;
        for (int n = 10; n <= 30; ++n) {
            auto d = group_walk_distribution(k4, z3, labels, n);
            c.require(d.warnings.empty(), "Z/3 hypothesis warnings");
            c.require(d.tv_distance < prev, "Z/3 tv not decreasing at N=" + std::to_string(n));
            prev = d.tv_distance;
        }
        c.require(prev < 0.05, "Z/3 tv at N=30 is " + std::to_string(prev));
    }
    {
        GroupTable s3 = symmetric3();
        std::vector<int> labels{1, 4, 0, 0};
        double prev = 1e18;
        for (int n = 10; n <= 30; ++n) {
            auto d = group_walk_distribution(k4, s3, labels, n);
            c.require(d.warnings.empty(), "S_3 hypothesis warnings");
            c.require(d.tv_distance < prev, "S_3 tv not decreasing at N=" + std::to_string(n));
            prev = d.tv_distance;
        }
        c.require(prev < 0.05, "S_3 tv at N=30 is " + std::to_string(prev));
    }
    return c;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        std::function<Check()> run;
    };
    std::vector<Entry> entries{
        {"word-count exactness (r<=3, m<=8, exact, <10s)", word_count_exactness},
        {"homology generating function (brute force + radical identity)",
         homology_generating_function},
        {"chebyshev suite (closed form, positivity, c=1 collapse)", chebyshev_suite},
        {"CLT at desk scale (2% at n=400, exact mean, count trend)", clt_at_desk_scale},
        {"mod-p equidistribution and bias", modp_equidistribution_and_bias},
        {"perturbation finite-difference agreement (50 matrices)", perturbation_fd},
        {"walk variance vs exact transfer matrix (<60s)", walk_variance_criterion},
        {"line digraph structure (A^tA, multiplicities, eigenspaces)",
         line_digraph_structure},
        {"zeta identities (closed form, two determinants, power sums)", zeta_identities},
        {"conjugacy counting (totient vs orbit enumeration, product rule)",
         conjugacy_counting},
        {"entropy (closed-form minimizer, convexity, growth oracle)", entropy_criterion},
        {"finite-group equidistribution (Z/3 and S_3 on K_4)",
         finite_group_equidistribution},
    };
    int failures = 0;
    for (size_t i = 0; i < entries.size(); ++i) {
        Check c;
        try {
            c = entries[i].run();
        } catch (const std::exception& e) {
            c.pass = false;
            c.note << "exception: " << e.what();
        }
        if (!c.pass) ++failures;
        std::printf("[%2zu/12] %s  %s%s%s\n", i + 1, c.pass ? "PASS" : "FAIL",
                    entries[i].name, c.note.tellp() > 0 ? " -- " : "",
                    c.note.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of 12 criteria passed\n", 12 - failures);
    return failures;
}
