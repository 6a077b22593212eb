// Command-line front end. One binary serves three entry points, dispatched
// on the program name (fgw, graph, cheb are symlinks of each other):
//   fgw   {count, homology, modp, clt, conj, graph}
//   graph {zeta, ihara, linegraph, walk-variance, modp, group-dist, entropy}
//   cheb  {coeffs, symmetrized, verify-positivity}
// Output is a schema-versioned JSON envelope (or a CSV projection for
// tabular results); big integers are serialized as decimal strings.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fgw/chebyshev.hpp"
#include "fgw/entropy.hpp"
#include "fgw/enumeration.hpp"
#include "fgw/freegroup.hpp"
#include "fgw/graph.hpp"
#include "fgw/grouptable.hpp"
#include "fgw/homodist.hpp"
#include "fgw/linegraph.hpp"
#include "fgw/walkstats.hpp"

using json = nlohmann::json;
using namespace fgw;

namespace {

constexpr int kSchemaVersion = 1;

struct Output {
    std::string command;
    json params = json::object();
    json result;
    json diagnostics = json::array();
    std::string format = "json";
    // CSV projection: header + rows, set only for tabular results.
    std::string csv_header;
    std::vector<std::string> csv_rows;

    void print() const {
        if (format == "csv" && !csv_header.empty()) {
            std::cout << csv_header << "\n";
            for (auto& r : csv_rows) std::cout << r << "\n";
            return;
        }
        json envelope;
        envelope["schema_version"] = kSchemaVersion;
        envelope["command"] = command;
        envelope["params"] = params;
        envelope["result"] = result;
        envelope["diagnostics"] = diagnostics;
        std::cout << envelope.dump() << "\n";
    }
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<BigRat> read_weights(const std::string& path, int expect) {
    std::istringstream in(read_file(path));
    std::vector<BigRat> w;
    std::string tok;
    while (in >> tok) w.push_back(parse_rat(tok));
    if (static_cast<int>(w.size()) != expect)
        throw std::invalid_argument("weights file: expected " + std::to_string(expect) +
                                    " values, found " + std::to_string(w.size()));
    return w;
}

VectorXd to_vec(const std::vector<BigRat>& w) {
    VectorXd v(w.size());
    for (size_t i = 0; i < w.size(); ++i) v(i) = to_double(w[i]);
    return v;
}

std::vector<BigRat> graph_weights(const Graph& g, const std::string& weights_path) {
    if (!weights_path.empty()) return read_weights(weights_path, g.n);
    std::vector<BigRat> w(g.n, BigRat(0));
    bool any = false;
    for (int i = 0; i < g.n; ++i)
        if (g.labels[i]) {
            w[i] = *g.labels[i];
            any = true;
        }
    if (!any)
        throw std::invalid_argument(
            "no weights: pass --weights or add 'label' lines to the graph file");
    return w;
}

std::vector<long> integral_weights(const std::vector<BigRat>& w) {
    std::vector<long> f(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i].get_den() != 1)
            throw std::invalid_argument("this command needs integer weights");
        f[i] = w[i].get_num().get_si();
    }
    return f;
}

json counts_json(const std::vector<BigInt>& counts) {
    json a = json::array();
    for (auto& c : counts) a.push_back(to_string(c));
    return a;
}

// ---- fgw --------------------------------------------------------------------

int run_fgw(CLI::App& app, int argc, char** argv, Output& out) {
    app.description("exact word counts and homology statistics of free groups");
    std::string format = "json";
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.fallthrough();

    auto* count = app.add_subcommand("count", "count cyclically reduced words of a length");
    int rank = 0, length = 0;
    count->add_option("--rank", rank, "free group rank r >= 1")->required();
    count->add_option("--length", length, "word length m >= 1")->required();

    auto* homology = app.add_subcommand("homology", "word counts by homology class");
    int h_rank = 0, h_length = 0;
    homology->add_option("--rank", h_rank)->required();
    homology->add_option("--length", h_length)->required();

    auto* modp = app.add_subcommand("modp", "total-exponent distribution mod a prime");
    int m_rank = 0, m_length = 0;
    long m_prime = 0;
    modp->add_option("--rank", m_rank)->required();
    modp->add_option("--length", m_length)->required();
    modp->add_option("--prime", m_prime)->required();

    auto* clt = app.add_subcommand("clt", "limiting variance of the coefficient law");
    int c_rank = 0, c_vars = 1;
    double c_param = 0;
    clt->add_option("--rank", c_rank, "use c = r/sqrt(2r-1)");
    clt->add_option("--c", c_param, "parameter c > 1");
    clt->add_option("--k", c_vars, "number of variables");

    auto* conj = app.add_subcommand("conj", "word / conjugacy class counts");
    int j_rank = 0, j_max = 0;
    conj->add_option("--rank", j_rank)->required();
    conj->add_option("--max-length", j_max)->required();

    auto* graph_cmd = app.add_subcommand("graph", "emit the model graph of F_r");
    int g_rank = 0;
    graph_cmd->add_option("--rank", g_rank)->required();

    app.require_subcommand(1);
    app.parse(argc, argv);
    out.format = format;

    if (*count) {
        out.command = "fgw count";
        out.params = {{"rank", rank}, {"length", length}};
        out.result = to_string(count_cyclically_reduced(rank, length));
        out.csv_header = "count";
        out.csv_rows = {out.result.get<std::string>()};
    } else if (*homology) {
        out.command = "fgw homology";
        out.params = {{"rank", h_rank}, {"length", h_length}};
        LaurentZN h = homology_gf(h_rank, h_length);
        json rows = json::array();
        out.csv_header = "exponents,count";
        for (auto& [e, c] : h.terms()) {
            json row;
            row["e"] = e;
            row["count"] = to_string(c);
            rows.push_back(row);
            std::string ecsv;
            for (size_t i = 0; i < e.size(); ++i)
                ecsv += (i ? " " : "") + std::to_string(e[i]);
            out.csv_rows.push_back("\"" + ecsv + "\"," + to_string(c));
        }
        out.result = rows;
    } else if (*modp) {
        out.command = "fgw modp";
        out.params = {{"rank", m_rank}, {"length", m_length}, {"prime", m_prime}};
        auto d = modp_counts(m_rank, m_length, m_prime);
        out.result["counts"] = counts_json(d.counts);
        out.result["total"] = to_string(d.total());
        if (m_prime > 2) {
            out.result["gap"] = equidistribution_gap(m_rank, m_length, m_prime);
        } else {
            out.diagnostics.push_back(
                "p = 2 is parity-degenerate; no equidistribution gap reported");
        }
        out.csv_header = "residue,count";
        for (long q = 0; q < m_prime; ++q)
            out.csv_rows.push_back(std::to_string(q) + "," + to_string(d.counts[q]));
    } else if (*clt) {
        out.command = "fgw clt";
        double c = c_param;
        if (c_rank > 0) {
            c = c_rank / std::sqrt(2.0 * c_rank - 1.0);
            out.params["rank"] = c_rank;
        }
        out.params["c"] = c;
        out.params["k"] = c_vars;
        double s2 = clt_sigma2(c, c_vars);
        out.result["sigma2"] = s2;
        out.csv_header = "sigma2";
        out.csv_rows = {std::to_string(s2)};
    } else if (*conj) {
        out.command = "fgw conj";
        out.params = {{"rank", j_rank}, {"max_length", j_max}};
        auto t = free_group_counts(j_rank, j_max);
        json njson = json::array(), cjson = json::array(), ccjson = json::array();
        out.csv_header = "length,N,C,CC";
        for (int r = 1; r <= j_max; ++r) {
            njson.push_back(to_string(t.n_count[r]));
            cjson.push_back(to_string(t.c_count[r]));
            ccjson.push_back(to_string(t.cc_count[r]));
            out.csv_rows.push_back(std::to_string(r) + "," + to_string(t.n_count[r]) + "," +
                                   to_string(t.c_count[r]) + "," + to_string(t.cc_count[r]));
        }
        out.result["N"] = njson;
        out.result["C"] = cjson;
        out.result["CC"] = ccjson;
    } else if (*graph_cmd) {
        // raw graph file on stdout so it can pipe into the graph tool
        std::cout << emit_graph(build_gr(g_rank));
        return 0;
    }
    out.print();
    return 0;
}

// ---- graph ------------------------------------------------------------------

int run_graph(CLI::App& app, int argc, char** argv, Output& out) {
    app.description("spectral and zeta statistics of a graph file");
    std::string format = "json";
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    double tol = 1e-12;
    app.add_option("--tol", tol, "root-finding tolerance for entropy");
    app.fallthrough();

    std::string file, weights_path, group_path;
    auto* zeta_cmd = app.add_subcommand("zeta", "det(I - uA) as a polynomial");
    zeta_cmd->add_option("file", file)->required();

    auto* ihara = app.add_subcommand("ihara", "compare the two determinant forms");
    ihara->add_option("file", file)->required();

    auto* lg = app.add_subcommand("linegraph", "emit the directed line graph");
    lg->add_option("file", file)->required();

    auto* wv =
        app.add_subcommand("walk-variance", "CLT variance of vertex sums over closed walks");
    wv->add_option("file", file)->required();
    wv->add_option("--weights", weights_path, "weights file (default: graph labels)");
    bool backtrackless = false;
    wv->add_flag("--backtrackless", backtrackless,
                 "weights live on directed edges; use non-backtracking walks");
    std::vector<int> path_ends;
    wv->add_option("--path", path_ends, "path ensemble endpoints i j")->expected(2);
    long simulate = 0, samples = 10000;
    unsigned seed = 1;
    wv->add_option("--simulate", simulate, "Monte-Carlo demo: walk length N");
    wv->add_option("--samples", samples, "Monte-Carlo demo: sample count");
    wv->add_option("--seed", seed, "Monte-Carlo demo: RNG seed");

    auto* modp = app.add_subcommand("modp", "closed-walk weight sums mod a prime");
    modp->add_option("file", file)->required();
    long prime = 0;
    int length = 0;
    modp->add_option("--prime", prime)->required();
    modp->add_option("--length", length)->required();
    modp->add_option("--weights", weights_path);

    auto* gd = app.add_subcommand("group-dist", "closed-walk label products in a finite group");
    gd->add_option("file", file)->required();
    gd->add_option("--group", group_path, "group table file")->required();
    gd->add_option("--length", length)->required();

    auto* ent = app.add_subcommand("entropy", "weighted cycle growth rate");
    ent->add_option("file", file)->required();
    ent->add_option("--weights", weights_path);
    bool minimize = false;
    ent->add_flag("--minimize", minimize, "minimize entropy over the weight simplex");

    app.require_subcommand(1);
    app.parse(argc, argv);
    out.format = format;

    if (*zeta_cmd) {
        out.command = "graph zeta";
        out.params = {{"file", file}};
        Graph g = parse_graph(read_file(file));
        out.result = poly_to_string(zeta(g));
        out.csv_header = "zeta";
        out.csv_rows = {"\"" + out.result.get<std::string>() + "\""};
    } else if (*ihara) {
        out.command = "graph ihara";
        out.params = {{"file", file}};
        Graph g = parse_graph(read_file(file));
        auto rep = ihara_identity_check(g);
        out.result["equal"] = rep.equal;
        out.result["via_ihara"] = poly_to_string(rep.via_ihara);
        out.result["via_bass"] = poly_to_string(rep.via_bass);
    } else if (*lg) {
        Graph g = parse_graph(read_file(file));
        std::cout << emit_graph(line_digraph(g).line);
        return 0;
    } else if (*wv) {
        Graph g = parse_graph(read_file(file));
        out.params = {{"file", file}};
        if (backtrackless) {
            out.command = "graph walk-variance --backtrackless";
            if (weights_path.empty())
                throw std::invalid_argument(
                    "--backtrackless needs --weights with one value per directed edge");
            LineDigraph ld = line_digraph(g);
            auto w = read_weights(weights_path, ld.edges());
            std::vector<double> fe(w.size());
            for (size_t i = 0; i < w.size(); ++i) fe[i] = to_double(w[i]);
            double s2 = g.directed ? directed_variance(g, fe) : backtrackless_variance(g, fe);
            out.result["sigma2"] = s2;
        } else {
            out.command = "graph walk-variance";
            auto w = graph_weights(g, weights_path);
            VectorXd f = to_vec(w);
            WalkVariance v = path_ends.empty()
                                 ? walk_variance(g, f)
                                 : path_variance(g, f, path_ends[0], path_ends[1]);
            out.result["sigma2"] = v.sigma2;
            out.result["mu"] = v.mu;
            // operator norm of the adjacency restricted to mean-zero vectors
            {
                MatrixXd a = g.adjacency();
                MatrixXd proj =
                    MatrixXd::Identity(g.n, g.n) - MatrixXd::Constant(g.n, g.n, 1.0 / g.n);
                MatrixXd a0 = proj * a * proj;
                Spectrum s = symmetric_eigen(MatrixXd(a0.transpose() * a0));
                out.result["a0_norm"] = std::sqrt(std::max(0.0, s.values(0)));
            }
            if (simulate > 0) {
                auto mc =
                    mc_closed_walk_summary(g, f, static_cast<int>(simulate), samples, seed);
                out.result["mc"] = {{"length", simulate},
                                    {"samples", mc.samples},
                                    {"mean_per_step", mc.mean / simulate},
                                    {"variance_per_step", mc.variance / simulate}};
            }
        }
    } else if (*modp) {
        out.command = "graph modp";
        Graph g = parse_graph(read_file(file));
        out.params = {{"file", file}, {"prime", prime}, {"length", length}};
        auto f = integral_weights(graph_weights(g, weights_path));
        auto d = modp_walk_distribution(g, f, prime, length);
        out.result["counts"] = counts_json(d.counts);
        out.result["gap"] = d.gap;
        out.csv_header = "residue,count";
        for (long q = 0; q < prime; ++q)
            out.csv_rows.push_back(std::to_string(q) + "," + to_string(d.counts[q]));
    } else if (*gd) {
        out.command = "graph group-dist";
        Graph g = parse_graph(read_file(file));
        out.params = {{"file", file}, {"group", group_path}, {"length", length}};
        GroupFile gf = parse_group_file(read_file(group_path));
        std::vector<int> labels(g.n, gf.group.identity);
        for (auto& [v, elem] : gf.vlabels) {
            if (v < 0 || v >= g.n) throw std::invalid_argument("vlabel vertex out of range");
            labels[v] = elem;
        }
        auto d = group_walk_distribution(g, gf.group, labels, length);
        out.result["counts"] = counts_json(d.counts);
        out.result["tv_distance"] = d.tv_distance;
        if (d.rate_is_spectral) out.result["rate"] = d.rate;
        for (auto& w : d.warnings) out.diagnostics.push_back(w);
        out.csv_header = "element,count";
        for (int e = 0; e < gf.group.order; ++e)
            out.csv_rows.push_back(std::to_string(e) + "," + to_string(d.counts[e]));
    } else if (*ent) {
        out.command = "graph entropy";
        Graph g = parse_graph(read_file(file));
        out.params = {{"file", file}};
        MatrixXd a = g.adjacency();
        VectorXd f;
        double s0;
        if (minimize) {
            auto m = numeric_min_entropy(a);
            f = m.weights;
            s0 = m.s0;
            auto closed = min_entropy_weights(a);
            out.result["closed_form_s0"] = closed.s0;
        } else {
            f = to_vec(graph_weights(g, weights_path));
            s0 = entropy(a, f, tol);
        }
        out.result["s0"] = s0;
        json fj = json::array();
        for (long i = 0; i < f.size(); ++i) fj.push_back(f(i));
        out.result["f"] = fj;
        VectorXd grad_s = rho_gradient(a, f, s0);
        VectorXd proj = grad_s - VectorXd::Constant(f.size(), grad_s.mean());
        out.result["gradient_norm"] = proj.norm();
    }
    out.print();
    return 0;
}

// ---- cheb -------------------------------------------------------------------

int run_cheb(CLI::App& app, int argc, char** argv, Output& out) {
    app.description("exact Chebyshev polynomials and their symmetrized forms");
    std::string format = "json";
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.fallthrough();

    std::string kind = "T";
    int n = 0, k = 1;
    std::string c_str;

    auto* coeffs = app.add_subcommand("coeffs", "integer coefficients of T_n or U_n");
    coeffs->add_option("--kind", kind)->check(CLI::IsMember({"T", "U"}));
    coeffs->add_option("--n", n)->required();

    auto* symm = app.add_subcommand("symmetrized", "Laurent coefficients of R_n or S_n");
    symm->add_option("--kind", kind)->check(CLI::IsMember({"R", "S", "T", "U"}));
    symm->add_option("--n", n)->required();
    symm->add_option("--c", c_str, "rational parameter, e.g. 3/2")->required();
    symm->add_option("--k", k, "number of variables");

    auto* vp = app.add_subcommand("verify-positivity", "check coefficient positivity");
    vp->add_option("--kind", kind)->check(CLI::IsMember({"R", "S"}));
    vp->add_option("--n", n)->required();
    vp->add_option("--c", c_str)->required();
    vp->add_option("--k", k);

    app.require_subcommand(1);
    app.parse(argc, argv);
    out.format = format;

    if (*coeffs) {
        out.command = "cheb coeffs";
        out.params = {{"kind", kind}, {"n", n}};
        ChebPoly p = cheb(kind == "T" ? ChebKind::T : ChebKind::U, n);
        json arr = json::array();
        out.csv_header = "degree,coefficient";
        for (size_t j = 0; j < p.coeffs.size(); ++j) {
            arr.push_back(to_string(p.coeffs[j]));
            out.csv_rows.push_back(std::to_string(j) + "," + to_string(p.coeffs[j]));
        }
        out.result = arr;
    } else if (*symm) {
        out.command = "cheb symmetrized";
        out.params = {{"kind", kind}, {"n", n}, {"c", c_str}, {"k", k}};
        SymKind sk = (kind == "R" || kind == "T") ? SymKind::R : SymKind::S;
        auto s = symmetrized(sk, n, parse_rat(c_str), k);
        json rows = json::array();
        out.csv_header = "exponents,coefficient";
        for (auto& [e, c] : s.coeffs.terms()) {
            json row;
            row["e"] = e;
            row["coeff"] = to_string(c);
            rows.push_back(row);
            std::string ecsv;
            for (size_t i = 0; i < e.size(); ++i)
                ecsv += (i ? " " : "") + std::to_string(e[i]);
            out.csv_rows.push_back("\"" + ecsv + "\"," + to_string(c));
        }
        out.result = rows;
    } else if (*vp) {
        out.command = "cheb verify-positivity";
        out.params = {{"kind", kind}, {"n", n}, {"c", c_str}, {"k", k}};
        auto rep =
            verify_positivity(kind == "R" ? SymKind::R : SymKind::S, n, parse_rat(c_str), k);
        out.result["ok"] = rep.ok;
        if (!rep.ok) {
            out.result["witness"] = *rep.witness;
            out.result["reason"] = rep.reason;
        }
    }
    out.print();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::string prog = std::filesystem::path(argv[0]).filename().string();
    std::string group;
    if (prog == "fgw" || prog == "graph" || prog == "cheb") {
        group = prog;
    } else if (argc > 1) {
        group = argv[1];
        --argc;
        ++argv;
    }
    CLI::App app{group};
    try {
        Output out;
        if (group == "fgw") return run_fgw(app, argc, argv, out);
        if (group == "graph") return run_graph(app, argc, argv, out);
        if (group == "cheb") return run_cheb(app, argc, argv, out);
        std::cerr << "usage: {fgw|graph|cheb} <subcommand> ...\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
