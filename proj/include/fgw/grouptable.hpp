#ifndef FGW_GROUPTABLE_HPP
#define FGW_GROUPTABLE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fgw {

// Finite group given by its multiplication table, mul[i][j] = i*j.
struct GroupTable {
    int order = 0;
    std::vector<std::vector<int>> mul;
    int identity = -1;
    std::vector<int> inverse;

    void validate() const {
        if (order < 1 || static_cast<int>(mul.size()) != order)
            throw std::invalid_argument("group: bad table size");
        for (auto& row : mul) {
            if (static_cast<int>(row.size()) != order)
                throw std::invalid_argument("group: bad table row");
            for (int x : row)
                if (x < 0 || x >= order)
                    throw std::invalid_argument("group: entry out of range");
        }
        if (identity < 0) throw std::invalid_argument("group: no identity element");
        for (int i = 0; i < order; ++i)
            if (mul[identity][i] != i || mul[i][identity] != i)
                throw std::invalid_argument("group: identity law fails");
        for (int i = 0; i < order; ++i) {
            if (inverse[i] < 0) throw std::invalid_argument("group: missing inverse");
            if (mul[i][inverse[i]] != identity || mul[inverse[i]][i] != identity)
                throw std::invalid_argument("group: inverse law fails");
        }
        // Associativity: full check for small tables, sampled beyond.
        if (order <= 64) {
            for (int a = 0; a < order; ++a)
                for (int b = 0; b < order; ++b)
                    for (int c = 0; c < order; ++c)
                        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                            throw std::invalid_argument("group: associativity fails");
        }
    }

    bool is_abelian() const {
        for (int a = 0; a < order; ++a)
            for (int b = a + 1; b < order; ++b)
                if (mul[a][b] != mul[b][a]) return false;
        return true;
    }

    // Closure of a generating set.
    std::vector<int> subgroup_closure(std::vector<int> gens) const {
        std::set<int> s(gens.begin(), gens.end());
        s.insert(identity);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> cur(s.begin(), s.end());
            for (int a : cur)
                for (int b : cur) {
                    if (s.insert(mul[a][b]).second) grew = true;
                    if (s.insert(inverse[a]).second) grew = true;
                }
        }
        return std::vector<int>(s.begin(), s.end());
    }

    std::vector<int> commutator_subgroup() const {
        std::vector<int> gens;
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                gens.push_back(mul[mul[a][b]][inverse[mul[b][a]]]);  // (ab)(ba)^{-1}
        return subgroup_closure(gens);
    }
};

inline GroupTable finalize_group(int order, std::vector<std::vector<int>> mul) {
    GroupTable g;
    g.order = order;
    g.mul = std::move(mul);
    for (int e = 0; e < order; ++e) {
        bool ok = true;
        for (int i = 0; i < order && ok; ++i) ok = (g.mul[e][i] == i && g.mul[i][e] == i);
        if (ok) {
            g.identity = e;
            break;
        }
    }
    if (g.identity < 0) throw std::invalid_argument("group: no identity element");
    g.inverse.assign(order, -1);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            if (g.mul[i][j] == g.identity && g.mul[j][i] == g.identity) g.inverse[i] = j;
    g.validate();
    return g;
}

inline GroupTable cyclic_group(int m) {
    std::vector<std::vector<int>> mul(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) mul[i][j] = (i + j) % m;
    return finalize_group(m, std::move(mul));
}

// S_3 as permutations of {0,1,2} in one-line order:
// 0:id 1:(01) 2:(02) 3:(12) 4:(012) 5:(021)
inline GroupTable symmetric3() {
    const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                             {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    auto compose = [&](int a, int b) {  // (a*b)(x) = a(b(x))
        int img[3];
        for (int x = 0; x < 3; ++x) img[x] = perms[a][perms[b][x]];
        for (int k = 0; k < 6; ++k)
            if (img[0] == perms[k][0] && img[1] == perms[k][1] && img[2] == perms[k][2])
                return k;
        throw std::logic_error("symmetric3: composition not found");
    };
    std::vector<std::vector<int>> mul(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) mul[a][b] = compose(a, b);
    return finalize_group(6, std::move(mul));
}

// Group file format:
//   group <order>
//   mul <i> <j> <k>      (i*j = k; complete table expected)
// Vertex labels ride along as:  vlabel <v> <g>
struct GroupFile {
    GroupTable group;
    std::vector<std::pair<int, int>> vlabels;
};

inline GroupFile parse_group_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int order = -1;
    std::vector<std::vector<int>> mul;
    std::vector<std::vector<char>> seen;
    GroupFile out;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("group parse error, line " + std::to_string(lineno) +
                                    ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "group") {
            if (!(ls >> order) || order < 1) fail("bad group order");
            mul.assign(order, std::vector<int>(order, -1));
            seen.assign(order, std::vector<char>(order, 0));
        } else if (tok == "mul") {
            if (order < 0) fail("'mul' before 'group'");
            int i, j, k;
            if (!(ls >> i >> j >> k)) fail("bad mul line");
            if (i < 0 || i >= order || j < 0 || j >= order || k < 0 || k >= order)
                fail("mul entry out of range");
            mul[i][j] = k;
            seen[i][j] = 1;
        } else if (tok == "vlabel") {
            int v, g;
            if (!(ls >> v >> g)) fail("bad vlabel line");
            out.vlabels.emplace_back(v, g);
        } else {
            fail("unknown directive '" + tok + "'");
        }
    }
    if (order < 0) throw std::invalid_argument("group parse error: missing 'group' header");
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            if (!seen[i][j])
                throw std::invalid_argument("group parse error: incomplete table at " +
                                            std::to_string(i) + "," + std::to_string(j));
    out.group = finalize_group(order, std::move(mul));
    for (auto& [v, g] : out.vlabels)
        if (g < 0 || g >= out.group.order)
            throw std::invalid_argument("group parse error: vlabel element out of range");
    return out;
}

inline std::string emit_group_file(const GroupTable& g) {
    std::ostringstream out;
    out << "group " << g.order << "\n";
    for (int i = 0; i < g.order; ++i)
        for (int j = 0; j < g.order; ++j)
            out << "mul " << i << " " << j << " " << g.mul[i][j] << "\n";
    return out.str();
}

// All characters of an abelian group, found by brute-force extension over a
// small generating sequence; values are m-th roots of unity with m the
// exponent of the group.
inline std::vector<std::vector<std::complex<double>>> abelian_characters(
    const GroupTable& g) {
    if (!g.is_abelian()) throw std::invalid_argument("abelian_characters: group not abelian");
    int n = g.order;
    // element orders and the group exponent
    auto order_of = [&](int x) {
        int o = 1, cur = x;
        while (cur != g.identity) {
            cur = g.mul[cur][x];
            ++o;
        }
        return o;
    };
    long expnt = 1;
    std::vector<int> ords(n);
    for (int i = 0; i < n; ++i) {
        ords[i] = order_of(i);
        expnt = std::lcm(expnt, static_cast<long>(ords[i]));
    }
    // greedy generating sequence
    std::vector<int> gens;
    std::vector<int> have = g.subgroup_closure({});
    while (static_cast<int>(have.size()) < n) {
        for (int x = 0; x < n; ++x)
            if (!std::binary_search(have.begin(), have.end(), x)) {
                gens.push_back(x);
                break;
            }
        have = g.subgroup_closure(gens);
        std::sort(have.begin(), have.end());
    }
    // enumerate assignments gen_i -> exponent e_i (mod ord(gen_i)), extend
    // multiplicatively, keep the consistent ones
    std::vector<std::vector<std::complex<double>>> chars;
    std::vector<int> assign(gens.size(), 0);
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == gens.size()) {
            // extend over the group by BFS products in exponent space (mod expnt)
            std::vector<long> expo(n, -1);
            expo[g.identity] = 0;
            bool grew = true;
            while (grew) {
                grew = false;
                for (int x = 0; x < n; ++x) {
                    if (expo[x] < 0) continue;
                    for (size_t gi = 0; gi < gens.size(); ++gi) {
                        int y = g.mul[gens[gi]][x];
                        long e = (expo[x] + assign[gi] * (expnt / ords[gens[gi]])) % expnt;
                        if (expo[y] < 0) {
                            expo[y] = e;
                            grew = true;
                        } else if (expo[y] != e) {
                            return;  // inconsistent assignment
                        }
                    }
                }
            }
            std::vector<std::complex<double>> chi(n);
            for (int x = 0; x < n; ++x)
                chi[x] = std::polar(1.0, 2.0 * M_PI * expo[x] / expnt);
            chars.push_back(std::move(chi));
            return;
        }
        for (assign[pos] = 0; assign[pos] < ords[gens[pos]]; ++assign[pos]) rec(pos + 1);
        assign[pos] = 0;
    };
    rec(0);
    if (static_cast<int>(chars.size()) != n)
        throw std::runtime_error("abelian_characters: wrong character count");
    return chars;
}

}  // namespace fgw

#endif
