#pragma once

// Level-(2+1) chain complexes over F2 and the code families built on them:
// toric, classical Ising / plaquette Ising, hypergraph products (ALP),
// bivariate bicycle codes, graph cluster complexes, and the one-vertex torus.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2.hpp"

namespace gf {

enum class Family { custom, toric, alp, bb, graph, minimal_torus };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::toric: return "toric";
        case Family::alp: return "alp";
        case Family::bb: return "bb";
        case Family::graph: return "graph";
        case Family::minimal_torus: return "minimal_torus";
        default: return "custom";
    }
}
inline Family family_from_name(const std::string& s) {
    if (s == "toric") return Family::toric;
    if (s == "alp") return Family::alp;
    if (s == "bb") return Family::bb;
    if (s == "graph") return Family::graph;
    if (s == "minimal_torus") return Family::minimal_torus;
    return Family::custom;
}

// d2: |D1| x |D2| (boundary of Z-checks), d1: |D0| x |D1| (boundary of qubits).
struct ChainComplex {
    F2Matrix d2;
    F2Matrix d1;
    Family family = Family::custom;
    std::vector<long> params;  // family parameters, e.g. {L} or {Lx,Ly,Lz}
    std::vector<std::string> labels0, labels1, labels2;

    std::size_t n0() const { return d1.rows(); }
    std::size_t n1() const { return d1.cols(); }
    std::size_t n2() const { return d2.cols(); }
};

struct ValidationReport {
    bool chain_condition = false;
    bool dims_consistent = false;
    std::size_t d2_max_col_weight = 0;  // Z-check weight
    std::size_t d2_max_row_weight = 0;  // qubit degree in Z-checks
    std::size_t d1_max_col_weight = 0;  // qubit degree in X-checks
    std::size_t d1_max_row_weight = 0;  // X-check weight
    bool pass() const { return chain_condition && dims_consistent; }
};

inline ValidationReport validate(const ChainComplex& c) {
    ValidationReport r;
    r.dims_consistent = (c.d2.rows() == c.d1.cols());
    if (r.dims_consistent) r.chain_condition = c.d1.mul(c.d2).is_zero();
    r.d2_max_col_weight = c.d2.max_col_weight();
    r.d2_max_row_weight = c.d2.max_row_weight();
    r.d1_max_col_weight = c.d1.max_col_weight();
    r.d1_max_row_weight = c.d1.max_row_weight();
    return r;
}

struct HomologySummary {
    std::size_t h0 = 0, h1 = 0, h2 = 0;
    std::size_t hc0 = 0, hc1 = 0, hc2 = 0;  // cohomology dims
    std::vector<F2Vector> h1_reps;   // cycles in D1, independent modulo Im d2
    std::vector<F2Vector> hc1_reps;  // cocycles in D^1, independent modulo Im d0
    std::vector<F2Vector> h2_reps;   // ker d2 basis
    std::vector<F2Vector> hc0_reps;  // ker d0 basis (the mu's)
};

inline HomologySummary homology(const ChainComplex& c) {
    if (!validate(c).pass()) throw std::invalid_argument("homology: complex fails validation");
    HomologySummary h;
    const std::size_t r1 = rank(c.d1), r2 = rank(c.d2);
    h.h0 = c.n0() - r1;
    h.h1 = (c.n1() - r1) - r2;
    h.h2 = c.n2() - r2;
    h.hc0 = h.h0;
    h.hc1 = h.h1;
    h.hc2 = h.h2;

    // H1 reps: extend Im(d2) to a basis of ker(d1)
    std::vector<F2Vector> im2;
    for (std::size_t p = 0; p < c.n2(); ++p) im2.push_back(c.d2.col(p));
    h.h1_reps = quotient_basis(span_basis(im2), kernel_basis(c.d1));

    // H^1 reps: extend Im(d0) = rows of d1 to a basis of ker(d1cob) = ker(d2^T)
    std::vector<F2Vector> im_d0;
    for (std::size_t v = 0; v < c.n0(); ++v) im_d0.push_back(c.d1.row(v));
    h.hc1_reps = quotient_basis(span_basis(im_d0), kernel_basis(c.d2.transpose()));

    h.h2_reps = kernel_basis(c.d2);
    h.hc0_reps = kernel_basis(c.d1.transpose());
    return h;
}

// ---------------------------------------------------------------------------
// Toric code on an L x L torus.
// Vertices v(x,y) = x*L+y; h-edge(x,y) joins v(x,y)-v(x+1,y); v-edge(x,y)
// joins v(x,y)-v(x,y+1), indexed L^2 + x*L+y. Plaquette p(x,y) has lower-left
// corner v(x,y).
struct ToricIndex {
    long L;
    explicit ToricIndex(long L) : L(L) {}
    long wrap(long a) const { return ((a % L) + L) % L; }
    std::size_t v(long x, long y) const { return std::size_t(wrap(x) * L + wrap(y)); }
    std::size_t h(long x, long y) const { return std::size_t(wrap(x) * L + wrap(y)); }
    std::size_t ve(long x, long y) const { return std::size_t(L * L + wrap(x) * L + wrap(y)); }
    std::size_t p(long x, long y) const { return std::size_t(wrap(x) * L + wrap(y)); }
};

inline ChainComplex build_toric(long L) {
    if (L < 2) throw std::invalid_argument("build_toric: L must be >= 2");
    ToricIndex ix(L);
    ChainComplex c;
    c.family = Family::toric;
    c.params = {L};
    c.d1 = F2Matrix(std::size_t(L * L), std::size_t(2 * L * L));
    c.d2 = F2Matrix(std::size_t(2 * L * L), std::size_t(L * L));
    for (long x = 0; x < L; ++x) {
        for (long y = 0; y < L; ++y) {
            c.d1.flip(ix.v(x, y), ix.h(x, y));
            c.d1.flip(ix.v(x + 1, y), ix.h(x, y));
            c.d1.flip(ix.v(x, y), ix.ve(x, y));
            c.d1.flip(ix.v(x, y + 1), ix.ve(x, y));
            c.d2.flip(ix.h(x, y), ix.p(x, y));
            c.d2.flip(ix.h(x, y + 1), ix.p(x, y));
            c.d2.flip(ix.ve(x, y), ix.p(x, y));
            c.d2.flip(ix.ve(x + 1, y), ix.p(x, y));
            c.labels0.push_back("v(" + std::to_string(x) + "," + std::to_string(y) + ")");
            c.labels2.push_back("p(" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
    }
    for (long x = 0; x < L; ++x)
        for (long y = 0; y < L; ++y)
            c.labels1.push_back("e(" + std::to_string(x) + "," + std::to_string(y) + ",h)");
    for (long x = 0; x < L; ++x)
        for (long y = 0; y < L; ++y)
            c.labels1.push_back("e(" + std::to_string(x) + "," + std::to_string(y) + ",v)");
    return c;
}

inline ChainComplex build_minimal_torus() {
    ChainComplex c;
    c.family = Family::minimal_torus;
    c.d1 = F2Matrix(1, 2);
    c.d2 = F2Matrix(2, 1);
    c.labels0 = {"v"};
    c.labels1 = {"e1", "e2"};
    c.labels2 = {"f"};
    return c;
}

// ---------------------------------------------------------------------------
// One-level classical complexes C1 -> C0 (checks -> bits).
struct OneLevelComplex {
    F2Matrix d;  // |C0| x |C1|
    std::vector<std::string> labels0, labels1;
    std::size_t n0() const { return d.rows(); }
    std::size_t n1() const { return d.cols(); }
};

inline OneLevelComplex build_classical_ising(long N) {
    if (N < 2) throw std::invalid_argument("build_classical_ising: N must be >= 2");
    OneLevelComplex c;
    c.d = F2Matrix(std::size_t(N), std::size_t(N));
    for (long x = 0; x < N; ++x) {
        c.d.flip(std::size_t(x), std::size_t(x));
        c.d.flip(std::size_t((x + 1) % N), std::size_t(x));
        c.labels0.push_back("s" + std::to_string(x));
        c.labels1.push_back("zz(" + std::to_string(x) + ")");
    }
    return c;
}

struct PlaquetteIndex {
    long Lx, Ly;
    PlaquetteIndex(long Lx, long Ly) : Lx(Lx), Ly(Ly) {}
    long wx(long a) const { return ((a % Lx) + Lx) % Lx; }
    long wy(long a) const { return ((a % Ly) + Ly) % Ly; }
    std::size_t v(long x, long y) const { return std::size_t(wx(x) * Ly + wy(y)); }
    std::size_t p(long x, long y) const { return std::size_t(wx(x) * Ly + wy(y)); }
};

inline OneLevelComplex build_plaquette_ising(long Lx, long Ly) {
    if (Lx < 2 || Ly < 2) throw std::invalid_argument("build_plaquette_ising: sizes must be >= 2");
    PlaquetteIndex ix(Lx, Ly);
    OneLevelComplex c;
    c.d = F2Matrix(std::size_t(Lx * Ly), std::size_t(Lx * Ly));
    for (long x = 0; x < Lx; ++x) {
        for (long y = 0; y < Ly; ++y) {
            for (long dx = 0; dx <= 1; ++dx)
                for (long dy = 0; dy <= 1; ++dy)
                    c.d.flip(ix.v(x + dx, y + dy), ix.p(x, y));
            c.labels0.push_back("s(" + std::to_string(x) + "," + std::to_string(y) + ")");
            c.labels1.push_back("pl(" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Hypergraph product of two one-level complexes.
// D2 = A1 (x) B1 ; D1 = (A0 (x) B1) + (A1 (x) B0) ; D0 = A0 (x) B0.
// Cell indexing is row-major in the factor pair, block1 before block2.
struct HgpIndex {
    std::size_t a0, a1, b0, b1;
    HgpIndex(const OneLevelComplex& A, const OneLevelComplex& B)
        : a0(A.n0()), a1(A.n1()), b0(B.n0()), b1(B.n1()) {}
    std::size_t d0(std::size_t ia, std::size_t ib) const { return ia * b0 + ib; }
    std::size_t d1_block1(std::size_t ia, std::size_t ib) const { return ia * b1 + ib; }       // A0 x B1
    std::size_t d1_block2(std::size_t ia, std::size_t ib) const { return a0 * b1 + ia * b0 + ib; }  // A1 x B0
    std::size_t d2(std::size_t ia, std::size_t ib) const { return ia * b1 + ib; }
    bool in_block1(std::size_t q) const { return q < a0 * b1; }
    std::pair<std::size_t, std::size_t> split1(std::size_t q) const {
        if (in_block1(q)) return {q / b1, q % b1};
        q -= a0 * b1;
        return {q / b0, q % b0};
    }
};

inline ChainComplex hypergraph_product(const OneLevelComplex& A, const OneLevelComplex& B) {
    HgpIndex ix(A, B);
    ChainComplex c;
    c.d1 = F2Matrix(ix.a0 * ix.b0, ix.a0 * ix.b1 + ix.a1 * ix.b0);
    c.d2 = F2Matrix(ix.a0 * ix.b1 + ix.a1 * ix.b0, ix.a1 * ix.b1);
    // d2 (e_a (x) e_b) = (d e_a)(x) e_b  +  e_a (x) (d e_b)
    for (std::size_t ea = 0; ea < ix.a1; ++ea) {
        for (std::size_t eb = 0; eb < ix.b1; ++eb) {
            std::size_t p = ix.d2(ea, eb);
            for (auto va : A.d.col(ea).support()) c.d2.flip(ix.d1_block1(va, eb), p);
            for (auto vb : B.d.col(eb).support()) c.d2.flip(ix.d1_block2(ea, vb), p);
        }
    }
    // d1 block1 (v_a (x) e_b) = v_a (x) d e_b ; block2 (e_a (x) v_b) = d e_a (x) v_b
    for (std::size_t va = 0; va < ix.a0; ++va)
        for (std::size_t eb = 0; eb < ix.b1; ++eb)
            for (auto vb : B.d.col(eb).support())
                c.d1.flip(ix.d0(va, vb), ix.d1_block1(va, eb));
    for (std::size_t ea = 0; ea < ix.a1; ++ea)
        for (std::size_t vb = 0; vb < ix.b0; ++vb)
            for (auto va : A.d.col(ea).support())
                c.d1.flip(ix.d0(va, vb), ix.d1_block2(ea, vb));
    for (std::size_t va = 0; va < ix.a0; ++va)
        for (std::size_t vb = 0; vb < ix.b0; ++vb)
            c.labels0.push_back("(" + A.labels0[va] + "," + B.labels0[vb] + ")");
    for (std::size_t va = 0; va < ix.a0; ++va)
        for (std::size_t eb = 0; eb < ix.b1; ++eb)
            c.labels1.push_back("(" + A.labels0[va] + "," + B.labels1[eb] + ")");
    for (std::size_t ea = 0; ea < ix.a1; ++ea)
        for (std::size_t vb = 0; vb < ix.b0; ++vb)
            c.labels1.push_back("(" + A.labels1[ea] + "," + B.labels0[vb] + ")");
    for (std::size_t ea = 0; ea < ix.a1; ++ea)
        for (std::size_t eb = 0; eb < ix.b1; ++eb)
            c.labels2.push_back("(" + A.labels1[ea] + "," + B.labels1[eb] + ")");
    return c;
}

// ALP model: hypergraph product of the 1D Ising chain (z direction) with the
// 2D plaquette Ising model (xy planes). Qubits are xy-plaquettes (block1) and
// z-edges (block2); Z-checks are cubes.
inline ChainComplex build_alp(long Lx, long Ly, long Lz) {
    auto I = build_classical_ising(Lz);
    auto P = build_plaquette_ising(Lx, Ly);
    ChainComplex c = hypergraph_product(I, P);
    c.family = Family::alp;
    c.params = {Lx, Ly, Lz};
    return c;
}

// ---------------------------------------------------------------------------
// Bivariate bicycle codes. H_X = (f(x,y) | g(x,y)), H_Z = (g(xbar,ybar) | f(xbar,ybar)).
// Qubit order: all H qubits row-major (i,j), then all V qubits.
struct BBIndex {
    long Lx, Ly;
    BBIndex(long Lx, long Ly) : Lx(Lx), Ly(Ly) {}
    std::size_t cell(long i, long j) const {
        return std::size_t((((i % Lx) + Lx) % Lx) * Ly + (((j % Ly) + Ly) % Ly));
    }
    std::size_t H(long i, long j) const { return cell(i, j); }
    std::size_t V(long i, long j) const { return std::size_t(Lx * Ly) + cell(i, j); }
};

using Monomials = std::vector<std::pair<long, long>>;  // exponent pairs (a,b) for x^a y^b

inline ChainComplex build_bb_code(const Monomials& f, const Monomials& g, long Lx, long Ly) {
    if (f.empty() || g.empty()) throw std::invalid_argument("build_bb_code: empty polynomial");
    BBIndex ix(Lx, Ly);
    const std::size_t n = std::size_t(Lx * Ly);
    ChainComplex c;
    c.family = Family::bb;
    c.params = {Lx, Ly};
    c.d1 = F2Matrix(n, 2 * n);
    c.d2 = F2Matrix(2 * n, n);
    for (long i = 0; i < Lx; ++i) {
        for (long j = 0; j < Ly; ++j) {
            std::size_t r = ix.cell(i, j);
            for (auto [a, b] : f) c.d1.flip(r, ix.H(i + a, j + b));
            for (auto [a, b] : g) c.d1.flip(r, ix.V(i + a, j + b));
            for (auto [a, b] : g) c.d2.flip(ix.H(i - a, j - b), r);
            for (auto [a, b] : f) c.d2.flip(ix.V(i - a, j - b), r);
            c.labels0.push_back("x(" + std::to_string(i) + "," + std::to_string(j) + ")");
            c.labels2.push_back("z(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    for (long i = 0; i < Lx; ++i)
        for (long j = 0; j < Ly; ++j)
            c.labels1.push_back("H(" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (long i = 0; i < Lx; ++i)
        for (long j = 0; j < Ly; ++j)
            c.labels1.push_back("V(" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (!c.d1.mul(c.d2).is_zero())
        throw std::logic_error("build_bb_code: chain condition violated (cannot happen for commuting shifts)");
    return c;
}

// Parse "1,x,x^-1*y" style monomial lists.
inline Monomials parse_bb_poly(const std::string& s) {
    Monomials out;
    std::size_t pos = 0;
    auto next_token = [&]() -> std::optional<std::string> {
        if (pos >= s.size()) return std::nullopt;
        std::size_t e = s.find(',', pos);
        if (e == std::string::npos) e = s.size();
        std::string t = s.substr(pos, e - pos);
        pos = e + 1;
        return t;
    };
    while (auto tok = next_token()) {
        long a = 0, b = 0;
        std::size_t i = 0;
        const std::string& t = *tok;
        auto skip_ws = [&]() { while (i < t.size() && (t[i] == ' ' || t[i] == '*')) ++i; };
        skip_ws();
        if (i < t.size() && t[i] == '1') { ++i; }
        while (true) {
            skip_ws();
            if (i >= t.size()) break;
            char var = t[i];
            if (var != 'x' && var != 'y')
                throw std::invalid_argument("parse_bb_poly: bad token '" + t + "'");
            ++i;
            long e = 1;
            if (i < t.size() && t[i] == '^') {
                ++i;
                bool neg = false;
                if (i < t.size() && t[i] == '-') { neg = true; ++i; }
                long val = 0;
                while (i < t.size() && isdigit(static_cast<unsigned char>(t[i]))) {
                    val = val * 10 + (t[i] - '0');
                    ++i;
                }
                e = neg ? -val : val;
            }
            if (var == 'x') a += e; else b += e;
        }
        out.emplace_back(a, b);
    }
    if (out.empty()) throw std::invalid_argument("parse_bb_poly: empty polynomial");
    return out;
}

// ---------------------------------------------------------------------------
// Graph cluster complexes: D0 = vertices, D1 = edges, D2 = a fundamental-cycle
// basis from a BFS spanning forest, installed as 2-cells.
struct Graph {
    std::size_t n_vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v, sorted, unique

    static Graph from_edges(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> es) {
        Graph g;
        g.n_vertices = n;
        for (auto& [u, v] : es) {
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            if (u >= n || v >= n) throw std::out_of_range("Graph: edge endpoint out of range");
        }
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        std::erase_if(es, [](auto& e) { return e.first == e.second; });
        g.edges = std::move(es);
        return g;
    }
    std::size_t edge_index(std::size_t u, std::size_t v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
        if (it == edges.end() || *it != std::make_pair(u, v))
            throw std::invalid_argument("Graph: no such edge");
        return std::size_t(it - edges.begin());
    }
    bool has_edge(std::size_t u, std::size_t v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
        return it != edges.end() && *it == std::make_pair(u, v);
    }
    std::vector<std::vector<std::size_t>> adjacency() const {
        std::vector<std::vector<std::size_t>> adj(n_vertices);
        for (auto& [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        return adj;
    }
    std::size_t components() const {
        auto adj = adjacency();
        std::vector<char> seen(n_vertices, 0);
        std::size_t comps = 0;
        for (std::size_t s = 0; s < n_vertices; ++s) {
            if (seen[s]) continue;
            ++comps;
            std::vector<std::size_t> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                auto u = stack.back();
                stack.pop_back();
                for (auto v : adj[u])
                    if (!seen[v]) { seen[v] = 1; stack.push_back(v); }
            }
        }
        return comps;
    }
};

inline ChainComplex build_graph_cluster_complex(const Graph& g) {
    ChainComplex c;
    c.family = Family::graph;
    c.d1 = F2Matrix(g.n_vertices, g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        c.d1.flip(g.edges[e].first, e);
        c.d1.flip(g.edges[e].second, e);
    }
    // fundamental cycles from a BFS spanning forest, lexicographic root/neighbor order
    auto adj = g.adjacency();
    std::vector<std::size_t> parent_edge(g.n_vertices, SIZE_MAX);
    std::vector<std::size_t> parent(g.n_vertices, SIZE_MAX);
    std::vector<char> seen(g.n_vertices, 0);
    std::vector<char> tree_edge(g.edges.size(), 0);
    for (std::size_t root = 0; root < g.n_vertices; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::vector<std::size_t> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            auto u = queue[qi];
            for (auto v : adj[u]) {
                if (seen[v]) continue;
                seen[v] = 1;
                parent[v] = u;
                parent_edge[v] = g.edge_index(u, v);
                tree_edge[parent_edge[v]] = 1;
                queue.push_back(v);
            }
        }
    }
    std::vector<F2Vector> cycles;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (tree_edge[e]) continue;
        F2Vector cyc(g.edges.size());
        cyc.flip(e);
        auto [u, v] = g.edges[e];
        // xor the two root paths
        auto walk = [&](std::size_t w) {
            while (parent[w] != SIZE_MAX) {
                cyc.flip(parent_edge[w]);
                w = parent[w];
            }
        };
        walk(u);
        walk(v);
        cycles.push_back(cyc);
    }
    c.d2 = F2Matrix(g.edges.size(), cycles.size());
    for (std::size_t k = 0; k < cycles.size(); ++k)
        for (auto e : cycles[k].support()) c.d2.flip(e, k);
    for (std::size_t v = 0; v < g.n_vertices; ++v) c.labels0.push_back("v" + std::to_string(v));
    for (auto& [u, v] : g.edges)
        c.labels1.push_back("<" + std::to_string(u) + "," + std::to_string(v) + ">");
    for (std::size_t k = 0; k < cycles.size(); ++k) c.labels2.push_back("cyc" + std::to_string(k));
    return c;
}

// Graph cluster complex where the 2-cells are an explicitly supplied cycle set
// (e.g. the plaquettes of a lattice graph) instead of fundamental cycles.
inline ChainComplex build_graph_cluster_complex_with_cells(const Graph& g,
                                                           const std::vector<std::vector<std::size_t>>& cell_edges) {
    ChainComplex c;
    c.family = Family::graph;
    c.d1 = F2Matrix(g.n_vertices, g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        c.d1.flip(g.edges[e].first, e);
        c.d1.flip(g.edges[e].second, e);
    }
    c.d2 = F2Matrix(g.edges.size(), cell_edges.size());
    for (std::size_t k = 0; k < cell_edges.size(); ++k)
        for (auto e : cell_edges[k]) c.d2.flip(e, k);
    if (!c.d1.mul(c.d2).is_zero())
        throw std::invalid_argument("graph cluster complex: supplied 2-cells are not cycles");
    for (std::size_t v = 0; v < g.n_vertices; ++v) c.labels0.push_back("v" + std::to_string(v));
    for (auto& [u, v] : g.edges)
        c.labels1.push_back("<" + std::to_string(u) + "," + std::to_string(v) + ">");
    for (std::size_t k = 0; k < cell_edges.size(); ++k) c.labels2.push_back("cell" + std::to_string(k));
    return c;
}

}  // namespace gf
