#ifndef FGW_LINEGRAPH_HPP
#define FGW_LINEGRAPH_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgw/graph.hpp"
#include "fgw/matrix.hpp"
#include "fgw/poly.hpp"
#include "fgw/spectra.hpp"

namespace fgw {

// Directed line graph: one vertex per directed edge of the base (for an
// undirected base every edge contributes both orientations), with an arc
// x -> y whenever head(x) = tail(y), excluding the immediate reversal
// x -> rev(x) for undirected bases.
struct LineDigraph {
    Graph base;
    Graph line;               // directed
    std::vector<int> tail;    // line vertex -> base vertex
    std::vector<int> head;
    std::vector<int> reversal;  // undirected base: index of the opposite
                                // orientation; -1 for directed bases

    int edges() const { return static_cast<int>(tail.size()); }
};

inline LineDigraph line_digraph(const Graph& g) {
    if (!connectivity_and_bipartite(g).connected)
        throw std::invalid_argument("line_digraph: base graph must be connected");
    LineDigraph ld;
    ld.base = g;
    if (!g.directed) {
        for (int i = 0; i < g.n; ++i)
            if (g.adj[i][i] > 0)
                throw std::invalid_argument(
                    "line_digraph: self-loops in an undirected base are not supported "
                    "(the construction does not define their orientations)");
        // Vertex order: base edges sorted by (u, v, copy), minus orientation
        // (u -> v with u < v) immediately followed by plus (v -> u).
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v)
                for (long copy = 0; copy < g.adj[u][v]; ++copy) {
                    ld.tail.push_back(u);
                    ld.head.push_back(v);
                    ld.tail.push_back(v);
                    ld.head.push_back(u);
                    int k = static_cast<int>(ld.tail.size());
                    ld.reversal.push_back(k - 1);
                    ld.reversal.push_back(k - 2);
                }
    } else {
        for (int u = 0; u < g.n; ++u)
            for (int v = 0; v < g.n; ++v)
                for (long copy = 0; copy < g.adj[u][v]; ++copy) {
                    ld.tail.push_back(u);
                    ld.head.push_back(v);
                    ld.reversal.push_back(-1);
                }
    }
    int m = ld.edges();
    ld.line = Graph(m, true);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            if (ld.head[x] != ld.tail[y]) continue;
            if (!g.directed && ld.reversal[x] == y) continue;
            ld.line.adj[x][y] = 1;
        }
    return ld;
}

// g(e) = f(tail(e)) - f(head(e)); with this orientation grad(delta_v) is
// +1 on out-edges and -1 on in-edges, and Delta L = (r-1) grad.
template <class T>
std::vector<T> grad(const LineDigraph& ld, const std::vector<T>& f) {
    if (static_cast<int>(f.size()) != ld.base.n)
        throw std::invalid_argument("grad: size mismatch");
    std::vector<T> g(ld.edges());
    for (int e = 0; e < ld.edges(); ++e) g[e] = f[ld.tail[e]] - f[ld.head[e]];
    return g;
}

// (Lf)(e) = f(tail(e))
template <class T>
std::vector<T> lift(const LineDigraph& ld, const std::vector<T>& f) {
    if (static_cast<int>(f.size()) != ld.base.n)
        throw std::invalid_argument("lift: size mismatch");
    std::vector<T> g(ld.edges());
    for (int e = 0; e < ld.edges(); ++e) g[e] = f[ld.tail[e]];
    return g;
}

// Structure report for A^t A on the line digraph of an r-regular base:
//   undirected: A^t A = I + (r-2) * (blocks of ones by common tail),
//               spectrum {(r-1)^2 with multiplicity V, 1 with 2E-V}
//   directed:   A^t A = r * (blocks by common tail),
//               spectrum {r^2 with multiplicity V, 0 with E-V}
// Eigenvalue multiplicities are certified by an exact factorization of the
// characteristic polynomial; the (r-1)^2 (resp. r^2) eigenspace is checked
// to be exactly the lift image.
struct AtaReport {
    bool block_structure_ok = false;
    bool char_poly_ok = false;
    bool lift_eigenspace_ok = false;
    long r = 0;
    long big_eigenvalue = 0;   // (r-1)^2 or r^2
    long small_eigenvalue = 0; // 1 or 0
    int mult_big = 0;          // V
    int mult_small = 0;        // 2E-V or E-V
    double a0_norm = 0;        // operator norm of A restricted to 1-perp

    bool ok() const { return block_structure_ok && char_poly_ok && lift_eigenspace_ok; }
};

inline AtaReport ata_structure(const LineDigraph& ld) {
    auto reg = ld.base.regularity();
    if (!reg) throw std::invalid_argument("ata_structure: base graph must be regular");
    long r = *reg;
    int m = ld.edges();
    int v_count = ld.base.n;
    Mat<BigInt> a = ld.line.adjacency_big();
    Mat<BigInt> ata = a.transpose() * a;

    AtaReport rep;
    rep.r = r;
    bool undirected = !ld.base.directed;
    rep.big_eigenvalue = undirected ? (r - 1) * (r - 1) : r * r;
    rep.small_eigenvalue = undirected ? 1 : 0;
    rep.mult_big = v_count;
    rep.mult_small = m - v_count;

    // Entrywise block form.
    rep.block_structure_ok = true;
    for (int x = 0; x < m && rep.block_structure_ok; ++x)
        for (int y = 0; y < m; ++y) {
            long expect;
            if (undirected)
                expect = (x == y ? r - 1 : (ld.tail[x] == ld.tail[y] ? r - 2 : 0));
            else
                expect = (ld.tail[x] == ld.tail[y]) ? r : 0;
            if (ata(x, y) != expect) {
                rep.block_structure_ok = false;
                break;
            }
        }

    // Exact characteristic polynomial factorization.
    IntPoly big_factor(std::vector<BigInt>{-rep.big_eigenvalue, 1});
    IntPoly small_factor(std::vector<BigInt>{-rep.small_eigenvalue, 1});
    IntPoly expect_cp = big_factor.pow(rep.mult_big) * small_factor.pow(rep.mult_small);
    rep.char_poly_ok = (char_poly(ata) == expect_cp);

    // Lift image is eigen at the big eigenvalue: A^t A (L delta_w) = big * L delta_w.
    rep.lift_eigenspace_ok = true;
    for (int w = 0; w < v_count && rep.lift_eigenspace_ok; ++w) {
        std::vector<BigInt> lf(m);
        for (int e = 0; e < m; ++e) lf[e] = (ld.tail[e] == w) ? 1 : 0;
        auto img = mat_vec(ata, lf);
        for (int e = 0; e < m; ++e)
            if (img[e] != BigInt(rep.big_eigenvalue) * lf[e]) {
                rep.lift_eigenspace_ok = false;
                break;
            }
    }

    // ||A_0||: largest singular value of the projection of A to 1-perp.
    MatrixXd ad = ld.line.adjacency();
    MatrixXd p = MatrixXd::Identity(m, m) - MatrixXd::Constant(m, m, 1.0 / m);
    MatrixXd a0 = p * ad * p;
    Spectrum s = symmetric_eigen(MatrixXd(a0.transpose() * a0));
    rep.a0_norm = std::sqrt(std::max(0.0, s.values(0)));
    return rep;
}

namespace detail {
// Solve Delta0^{-1} x for a matrix with row and column sums all equal to
// lambda (so the all-ones vector spans both kernels): (Delta + J/n) y = x
// has the unique mean-zero solution y = Delta0^{-1} x when x is mean-zero.
inline VectorXd laplacian0_solve(const MatrixXd& delta, const VectorXd& x) {
    const long n = delta.rows();
    MatrixXd aug = delta + MatrixXd::Constant(n, n, 1.0 / n);
    return solve_dense(aug, x);
}

inline std::vector<BigRat> laplacian0_solve_exact(const Mat<BigRat>& delta,
                                                  std::vector<BigRat> x) {
    size_t n = delta.rows();
    Mat<BigRat> aug = delta;
    BigRat inv_n = make_rat(BigInt(1), BigInt(static_cast<long>(n)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) aug(i, j) += inv_n;
    return solve_rational(aug, std::move(x));
}
}  // namespace detail

// Asymptotic variance of (1/sqrt N) sum of f over closed non-backtracking
// walks of length N on an undirected r-regular non-bipartite base, i.e. the
// regular-graph walk CLT applied to the line digraph (which is (r-1)-regular
// with rk vertices).
inline double backtrackless_variance(const Graph& g, const std::vector<double>& f_edge) {
    if (g.directed)
        throw std::invalid_argument("backtrackless_variance: base must be undirected");
    auto reg = g.regularity();
    if (!reg) throw std::invalid_argument("backtrackless_variance: base must be regular");
    long r = *reg;
    auto conn = connectivity_and_bipartite(g);
    if (!conn.connected || conn.bipartite)
        throw std::invalid_argument(
            "backtrackless_variance: base must be connected and non-bipartite");
    if (r < 3)
        throw std::invalid_argument(
            "backtrackless_variance: needs r >= 3 (for r = 2 the line digraph is a "
            "disjoint pair of directed cycles and is not primitive)");
    LineDigraph ld = line_digraph(g);
    int m = ld.edges();
    if (static_cast<int>(f_edge.size()) != m)
        throw std::invalid_argument("backtrackless_variance: edge function size mismatch");
    VectorXd f(m);
    for (int i = 0; i < m; ++i) f(i) = f_edge[i];
    VectorXd f0 = f - VectorXd::Constant(m, f.mean());
    MatrixXd al = ld.line.adjacency();
    MatrixXd delta = static_cast<double>(r - 1) * MatrixXd::Identity(m, m) - al;
    VectorXd y = detail::laplacian0_solve(delta, f0);
    return (-f0.squaredNorm() + 2.0 * (r - 1) * f0.dot(y)) / m;
}

// Same CLT on the line digraph of an r-in/out-regular primitive directed
// base (the line digraph is r-regular with E vertices).
inline double directed_variance(const Graph& g, const std::vector<double>& f_edge) {
    if (!g.directed)
        throw std::invalid_argument("directed_variance: base must be directed");
    auto reg = g.regularity();
    if (!reg) throw std::invalid_argument("directed_variance: base must be regular");
    long r = *reg;
    if (!is_primitive(g))
        throw std::invalid_argument("directed_variance: base must be primitive");
    LineDigraph ld = line_digraph(g);
    int m = ld.edges();
    if (static_cast<int>(f_edge.size()) != m)
        throw std::invalid_argument("directed_variance: edge function size mismatch");
    VectorXd f(m);
    for (int i = 0; i < m; ++i) f(i) = f_edge[i];
    VectorXd f0 = f - VectorXd::Constant(m, f.mean());
    MatrixXd al = ld.line.adjacency();
    MatrixXd delta = static_cast<double>(r) * MatrixXd::Identity(m, m) - al;
    VectorXd y = detail::laplacian0_solve(delta, f0);
    return (-f0.squaredNorm() + 2.0 * r * f0.dot(y)) / m;
}

// Orthogonal decomposition of an edge function into gradient part and
// circulation part (in-sum equals out-sum at every vertex), exact over the
// rationals. Also reports the potential c with gradient part = grad(c).
struct EdgeDecomposition {
    std::vector<BigRat> gradient_part;
    std::vector<BigRat> circulation_part;
    std::vector<BigRat> potential;  // mean-zero
};

inline EdgeDecomposition decompose_edgefn(const LineDigraph& ld,
                                          const std::vector<BigRat>& g) {
    int m = ld.edges();
    int n = ld.base.n;
    if (static_cast<int>(g.size()) != m)
        throw std::invalid_argument("decompose_edgefn: size mismatch");
    // Normal equations: (grad^t grad) c = grad^t g; grad^t grad = D_out +
    // D_in - (A + A^t) on the base, with kernel = constants (connected base),
    // and the right-hand side always sums to zero. Augment with J to pin the
    // mean-zero representative.
    Mat<BigRat> gram(n, n);
    std::vector<BigRat> rhs(n, BigRat(0));
    for (int e = 0; e < m; ++e) {
        int t = ld.tail[e], h = ld.head[e];
        gram(t, t) += 1;
        gram(h, h) += 1;
        gram(t, h) -= 1;
        gram(h, t) -= 1;
        rhs[t] += g[e];
        rhs[h] -= g[e];
    }
    BigRat one_over_n = make_rat(BigInt(1), BigInt(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram(i, j) += one_over_n;
    auto c = solve_rational(gram, rhs);
    EdgeDecomposition out;
    out.potential = c;
    out.gradient_part.resize(m);
    out.circulation_part.resize(m);
    for (int e = 0; e < m; ++e) {
        out.gradient_part[e] = c[ld.tail[e]] - c[ld.head[e]];
        out.circulation_part[e] = g[e] - out.gradient_part[e];
    }
    return out;
}

// Is the circulation condition satisfied: for every base vertex, the sum of
// g over incoming line-vertices equals the sum over outgoing ones?
inline bool is_circulation(const LineDigraph& ld, const std::vector<BigRat>& g) {
    int n = ld.base.n;
    std::vector<BigRat> net(n, BigRat(0));
    for (int e = 0; e < ld.edges(); ++e) {
        net[ld.head[e]] += g[e];
        net[ld.tail[e]] -= g[e];
    }
    for (auto& x : net)
        if (!(x == 0)) return false;
    return true;
}

// Brute-force count of closed tailless non-backtracking walks of length N
// on the base graph (edge sequences with cyclic non-reversal), the oracle
// for tr(A(L)^N).
inline BigInt brute_force_backtrackless_closed(const Graph& g, int n_len) {
    LineDigraph ld = line_digraph(g);
    int m = ld.edges();
    BigInt count = 0;
    std::vector<int> seq(n_len);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n_len) {
            // close the walk: head of last = tail of first, no reversal
            int last = seq[n_len - 1], first = seq[0];
            if (ld.head[last] != ld.tail[first]) return;
            if (!g.directed && ld.reversal[last] == first) return;
            ++count;
            return;
        }
        for (int e = 0; e < m; ++e) {
            if (pos > 0) {
                int prev = seq[pos - 1];
                if (ld.head[prev] != ld.tail[e]) continue;
                if (!g.directed && ld.reversal[prev] == e) continue;
            }
            seq[pos] = e;
            rec(pos + 1);
        }
    };
    if (n_len >= 1) rec(0);
    return count;
}

}  // namespace fgw

#endif
