#ifndef FGW_GRAPH_HPP
#define FGW_GRAPH_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fgw/matrix.hpp"
#include "fgw/numeric.hpp"
#include "fgw/spectra.hpp"

namespace fgw {

// Finite (multi)graph with nonnegative edge multiplicities. A self-loop
// counts once in adj[i][i] and contributes 1 to the degree.
struct Graph {
    int n = 0;
    bool directed = false;
    std::vector<std::vector<long>> adj;           // adj[i][j] = #edges i->j
    std::vector<std::optional<BigRat>> labels;    // optional per-vertex values

    Graph() = default;
    Graph(int n_, bool directed_)
        : n(n_), directed(directed_), adj(n_, std::vector<long>(n_, 0)), labels(n_) {}

    void add_edge(int u, int v, long mult = 1) {
        check_vertex(u);
        check_vertex(v);
        if (mult < 0) throw std::invalid_argument("add_edge: negative multiplicity");
        adj[u][v] += mult;
        if (!directed && u != v) adj[v][u] += mult;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex index out of range");
    }

    long out_degree(int i) const {
        long s = 0;
        for (long x : adj[i]) s += x;
        return s;
    }
    long in_degree(int j) const {
        long s = 0;
        for (int i = 0; i < n; ++i) s += adj[i][j];
        return s;
    }

    // Number of edges (undirected edges counted once, loops once).
    long edge_count() const {
        long s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!directed && j < i) continue;
                s += adj[i][j];
            }
        return s;
    }

    // Returns r if r-regular (row sums all equal r; for directed graphs the
    // column sums must equal r too), otherwise nullopt.
    std::optional<long> regularity() const {
        if (n == 0) return std::nullopt;
        long r = out_degree(0);
        for (int i = 0; i < n; ++i)
            if (out_degree(i) != r) return std::nullopt;
        if (directed)
            for (int j = 0; j < n; ++j)
                if (in_degree(j) != r) return std::nullopt;
        return r;
    }

    void validate() const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (adj[i][j] < 0) throw std::invalid_argument("negative multiplicity");
                if (!directed && adj[i][j] != adj[j][i])
                    throw std::invalid_argument("undirected adjacency not symmetric");
            }
    }

    Mat<BigInt> adjacency_big() const {
        Mat<BigInt> a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = adj[i][j];
        return a;
    }

    MatrixXd adjacency() const {
        MatrixXd a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = static_cast<double>(adj[i][j]);
        return a;
    }

    VectorXd label_vector() const {
        VectorXd f(n);
        for (int i = 0; i < n; ++i) f(i) = labels[i] ? to_double(*labels[i]) : 0.0;
        return f;
    }
};

struct ConnectivityReport {
    bool connected;
    bool bipartite;          // defined for undirected graphs; false for directed
    bool strongly_connected;
};

inline ConnectivityReport connectivity_and_bipartite(const Graph& g) {
    ConnectivityReport rep{false, false, false};
    if (g.n == 0) return rep;

    // 2-coloring BFS over every component; connectivity from vertex 0's
    // component size.
    std::vector<int> color(g.n, -1);
    bool two_colorable = true;
    int component0_size = 0;
    for (int start = 0; start < g.n; ++start) {
        if (color[start] != -1) continue;
        std::queue<int> q;
        q.push(start);
        color[start] = 0;
        int size = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (g.adj[u][u] > 0) two_colorable = false;  // loop = odd closed walk
            for (int v = 0; v < g.n; ++v) {
                if (v == u || (g.adj[u][v] == 0 && g.adj[v][u] == 0)) continue;
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    ++size;
                    q.push(v);
                } else if (color[v] == color[u]) {
                    two_colorable = false;
                }
            }
        }
        if (start == 0) component0_size = size;
    }
    rep.connected = (component0_size == g.n);
    rep.bipartite = !g.directed && two_colorable;

    // Strong connectivity: reachability closure in both directions from 0.
    auto reach = [&](bool forward) {
        std::vector<char> vis(g.n, 0);
        std::queue<int> qq;
        qq.push(0);
        vis[0] = 1;
        while (!qq.empty()) {
            int u = qq.front();
            qq.pop();
            for (int v = 0; v < g.n; ++v) {
                long m = forward ? g.adj[u][v] : g.adj[v][u];
                if (m > 0 && !vis[v]) {
                    vis[v] = 1;
                    qq.push(v);
                }
            }
        }
        return std::count(vis.begin(), vis.end(), 1) == g.n;
    };
    rep.strongly_connected = g.directed ? (reach(true) && reach(false)) : rep.connected;
    return rep;
}

inline bool is_irreducible(const Graph& g) {
    return connectivity_and_bipartite(g).strongly_connected;
}

// Primitivity test by boolean matrix powers up to the Wielandt bound.
inline bool is_primitive(const Graph& g) {
    if (g.n == 0) return false;
    if (!is_irreducible(g)) return false;
    int n = g.n;
    std::vector<std::vector<char>> b(n, std::vector<char>(n, 0)), cur;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = g.adj[i][j] > 0;
    cur = b;
    long bound = static_cast<long>(n - 1) * (n - 1) + 1;
    for (long step = 1; step <= bound; ++step) {
        bool all = true;
        for (int i = 0; i < n && all; ++i)
            for (int j = 0; j < n && all; ++j) all = cur[i][j];
        if (all) return true;
        std::vector<std::vector<char>> nxt(n, std::vector<char>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (cur[i][k])
                    for (int j = 0; j < n; ++j)
                        if (b[k][j]) nxt[i][j] = 1;
        cur = std::move(nxt);
    }
    return false;
}

// ---- Graph file format ----------------------------------------------------
//
//   graph directed|undirected
//   vertices <n>
//   edge <u> <v> [mult]
//   label <v> <value>        (value: rational p/q or decimal)
//   # comment

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Graph g;
    bool have_header = false, have_vertices = false;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("graph parse error, line " + std::to_string(lineno) +
                                    ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "graph") {
            std::string kind;
            if (!(ls >> kind) || (kind != "directed" && kind != "undirected"))
                fail("expected 'graph directed' or 'graph undirected'");
            g.directed = (kind == "directed");
            have_header = true;
        } else if (tok == "vertices") {
            if (!have_header) fail("'vertices' before 'graph' header");
            int n;
            if (!(ls >> n) || n < 0) fail("bad vertex count");
            g = Graph(n, g.directed);
            have_vertices = true;
        } else if (tok == "edge") {
            if (!have_vertices) fail("'edge' before 'vertices'");
            long u, v, mult = 1;
            if (!(ls >> u >> v)) fail("bad edge line");
            ls >> mult;
            if (u < 0 || u >= g.n || v < 0 || v >= g.n) fail("vertex index out of range");
            if (mult < 0) fail("negative multiplicity");
            g.add_edge(static_cast<int>(u), static_cast<int>(v), mult);
        } else if (tok == "label") {
            if (!have_vertices) fail("'label' before 'vertices'");
            long v;
            std::string val;
            if (!(ls >> v >> val)) fail("bad label line");
            if (v < 0 || v >= g.n) fail("vertex index out of range");
            try {
                g.labels[v] = parse_rat(val);
            } catch (const std::exception&) {
                fail("bad label value '" + val + "'");
            }
        } else {
            fail("unknown directive '" + tok + "'");
        }
    }
    if (!have_header) throw std::invalid_argument("graph parse error: missing header");
    if (!have_vertices) throw std::invalid_argument("graph parse error: missing vertices");
    g.validate();
    return g;
}

inline std::string emit_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph " << (g.directed ? "directed" : "undirected") << "\n";
    out << "vertices " << g.n << "\n";
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            if (!g.directed && j < i) continue;
            if (g.adj[i][j] > 0) {
                out << "edge " << i << " " << j;
                if (g.adj[i][j] != 1) out << " " << g.adj[i][j];
                out << "\n";
            }
        }
    for (int i = 0; i < g.n; ++i)
        if (g.labels[i]) out << "label " << i << " " << to_string(*g.labels[i]) << "\n";
    return out.str();
}

// ---- Builders ---------------------------------------------------------------

inline Graph cycle_graph(int n) {
    Graph g(n, false);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n, false);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph petersen_graph() {
    Graph g(10, false);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

// r-regular undirected multigraph as a union of r random perfect matchings.
inline Graph random_regular_graph(int n, int r, unsigned seed,
                                  bool require_connected_nonbipartite = true) {
    if (n % 2 != 0) throw std::invalid_argument("random_regular_graph: n must be even");
    std::mt19937 rng(seed);
    for (int attempt = 0; attempt < 2000; ++attempt) {
        Graph g(n, false);
        std::vector<int> perm(n);
        for (int m = 0; m < r; ++m) {
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            for (int i = 0; i < n; i += 2) g.add_edge(perm[i], perm[i + 1]);
        }
        auto rep = connectivity_and_bipartite(g);
        if (!require_connected_nonbipartite || (rep.connected && !rep.bipartite))
            return g;
    }
    throw std::runtime_error("random_regular_graph: could not build a usable graph");
}

// r-in/out-regular digraph as a sum of r random permutation matrices.
inline Graph random_regular_digraph(int n, int r, unsigned seed,
                                    bool require_primitive = true) {
    std::mt19937 rng(seed);
    for (int attempt = 0; attempt < 2000; ++attempt) {
        Graph g(n, true);
        std::vector<int> perm(n);
        for (int m = 0; m < r; ++m) {
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            for (int i = 0; i < n; ++i) g.add_edge(i, perm[i]);
        }
        if (!require_primitive || is_primitive(g)) return g;
    }
    throw std::runtime_error("random_regular_digraph: could not build a usable graph");
}

}  // namespace fgw

#endif
