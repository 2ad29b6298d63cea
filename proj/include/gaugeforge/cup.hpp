#pragma once

// Cup and cap products on level-(2+1) complexes, fundamental classes, and
// Leibniz certification. Tables act on basis cells and extend bilinearly.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "complexes.hpp"
#include "rng.hpp"

namespace gf {

struct Cochain {
    int degree = 0;
    F2Vector bits;
};

enum class CupCertification { uncertified, leibniz_exact, integrated_leibniz };

inline std::string certification_name(CupCertification c) {
    switch (c) {
        case CupCertification::leibniz_exact: return "leibniz_exact";
        case CupCertification::integrated_leibniz: return "integrated_leibniz";
        default: return "uncertified";
    }
}

// Sparse basis-pair tables keyed by (cell, cell) -> list of result cells.
using CupTable = std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>;

struct CupProduct {
    const ChainComplex* complex = nullptr;
    CupTable t00;  // (v,w)   -> 0-cochain
    CupTable t01;  // (v,e)   -> 1-cochain
    CupTable t10;  // (e,v)   -> 1-cochain
    CupTable t11;  // (e,e')  -> 2-cochain
    CupTable t02;  // (v,p)   -> 2-cochain
    CupTable t20;  // (p,v)   -> 2-cochain
    CupCertification certification = CupCertification::uncertified;

    const CupTable* table(int p, int q) const {
        if (p == 0 && q == 0) return &t00;
        if (p == 0 && q == 1) return &t01;
        if (p == 1 && q == 0) return &t10;
        if (p == 1 && q == 1) return &t11;
        if (p == 0 && q == 2) return &t02;
        if (p == 2 && q == 0) return &t20;
        return nullptr;
    }
    std::size_t dim(int degree) const {
        switch (degree) {
            case 0: return complex->n0();
            case 1: return complex->n1();
            case 2: return complex->n2();
            default: return 0;
        }
    }
};

inline Cochain cup(const CupProduct& cp, const Cochain& a, const Cochain& b) {
    int deg = a.degree + b.degree;
    if (deg > 2) throw std::invalid_argument("cup: degree overflow");
    Cochain out{deg, F2Vector(cp.dim(deg))};
    const CupTable* t = cp.table(a.degree, b.degree);
    if (!t) return out;  // (2,2) etc: zero by convention
    if (a.bits.size() != cp.dim(a.degree) || b.bits.size() != cp.dim(b.degree))
        throw std::invalid_argument("cup: cochain sized to the wrong complex");
    for (auto& [key, results] : *t) {
        if (a.bits.get(key.first) && b.bits.get(key.second))
            for (auto r : results) out.bits.flip(r);
    }
    return out;
}

// cup of two basis cells
inline std::vector<std::size_t> cup_basis(const CupProduct& cp, int p, std::size_t a, int q, std::size_t b) {
    const CupTable* t = cp.table(p, q);
    if (!t) return {};
    auto it = t->find({a, b});
    return it == t->end() ? std::vector<std::size_t>{} : it->second;
}

// coboundary of a cochain: d0 = d1^T on vertices, d1cob = d2^T on edges, 0 on faces
inline Cochain coboundary(const ChainComplex& c, const Cochain& a) {
    if (a.degree == 0) {
        Cochain out{1, F2Vector(c.n1())};
        for (auto v : a.bits.support()) out.bits ^= c.d1.row(v);
        return out;
    }
    if (a.degree == 1) {
        Cochain out{2, F2Vector(c.n2())};
        for (auto e : a.bits.support()) out.bits ^= c.d2.row(e);
        return out;
    }
    return Cochain{3, F2Vector(0)};
}

struct FundamentalClass {
    F2Vector chain;  // in D2
    std::string tag;
};

inline bool integral(const F2Vector& M, const Cochain& a) {
    if (a.degree != 2) throw std::invalid_argument("integral: integrand must be a 2-cochain");
    return M.dot(a.bits);
}

// a cap M = sum_x ( int_M x cup a ) x  over basis x of D_{2-p};
// M cap a uses integrand a cup x instead.
inline F2Vector cap(const CupProduct& cp, const Cochain& a, const F2Vector& M, bool m_on_left = false) {
    const ChainComplex& c = *cp.complex;
    if (M.size() != c.n2()) throw std::invalid_argument("cap: class not sized to D2");
    int xdeg = 2 - a.degree;
    F2Vector out(cp.dim(xdeg));
    const CupTable* t = m_on_left ? cp.table(a.degree, xdeg) : cp.table(xdeg, a.degree);
    if (!t) return out;
    for (auto& [key, results] : *t) {
        std::size_t xcell = m_on_left ? key.second : key.first;
        std::size_t acell = m_on_left ? key.first : key.second;
        if (!a.bits.get(acell)) continue;
        bool s = false;
        for (auto r : results) s ^= M.get(r);
        if (s) out.flip(xcell);
    }
    return out;
}

// ker(d2) basis with geometric tags where the family permits.
inline std::vector<FundamentalClass> fundamental_classes(const ChainComplex& c) {
    std::vector<FundamentalClass> out;
    if (c.family == Family::toric || c.family == Family::minimal_torus) {
        F2Vector all(c.n2());
        for (std::size_t p = 0; p < c.n2(); ++p) all.flip(p);
        if (!c.d2.mul(all).any()) {
            out.push_back({all, c.family == Family::toric ? "all-plaquettes" : "the-face"});
            return out;
        }
    }
    if (c.family == Family::alp) {
        long Lx = c.params[0], Ly = c.params[1], Lz = c.params[2];
        PlaquetteIndex pi(Lx, Ly);
        // cube (z-edge i, xy-plaquette p(x,y)) has D2 index i * (Lx*Ly) + pidx
        auto cube = [&](long i, long x, long y) {
            return std::size_t(i) * std::size_t(Lx * Ly) + pi.p(x, y);
        };
        for (long y = 0; y < Ly; ++y) {
            F2Vector rowv(c.n2());
            for (long i = 0; i < Lz; ++i)
                for (long x = 0; x < Lx; ++x) rowv.flip(cube(i, x, y));
            out.push_back({rowv, "row y=" + std::to_string(y)});
        }
        for (long x = 0; x + 1 < Lx; ++x) {  // one column dropped: rows already contain the sum
            F2Vector colv(c.n2());
            for (long i = 0; i < Lz; ++i)
                for (long y = 0; y < Ly; ++y) colv.flip(cube(i, x, y));
            out.push_back({colv, "col x=" + std::to_string(x)});
        }
        for (auto& f : out)
            if (c.d2.mul(f.chain).any())
                throw std::logic_error("fundamental_classes: ALP strip not a cycle");
        return out;
    }
    auto ker = kernel_basis(c.d2);
    for (std::size_t k = 0; k < ker.size(); ++k)
        out.push_back({ker[k], "ker" + std::to_string(k)});
    return out;
}

// The single-plane ALP class: all cubes with y coordinate y'.
inline FundamentalClass alp_strip_class(const ChainComplex& c, long yprime) {
    if (c.family != Family::alp) throw std::invalid_argument("alp_strip_class: not an ALP complex");
    long Lx = c.params[0], Ly = c.params[1], Lz = c.params[2];
    PlaquetteIndex pi(Lx, Ly);
    F2Vector v(c.n2());
    for (long i = 0; i < Lz; ++i)
        for (long x = 0; x < Lx; ++x)
            v.flip(std::size_t(i) * std::size_t(Lx * Ly) + pi.p(x, yprime));
    return {v, "row y=" + std::to_string(((yprime % Ly) + Ly) % Ly)};
}

// ---------------------------------------------------------------------------
// Leibniz checks

struct LeibnizReport {
    std::size_t checked = 0;
    std::size_t failures = 0;
    bool exhaustive = false;
    std::vector<std::string> failure_notes;
    bool pass() const { return failures == 0 && checked > 0; }
};

namespace detail {

inline bool leibniz_holds(const CupProduct& cp, const Cochain& a, const Cochain& b) {
    const ChainComplex& c = *cp.complex;
    Cochain ab = cup(cp, a, b);
    Cochain lhs = coboundary(c, ab);
    Cochain rhs1 = cup(cp, coboundary(c, a), b);
    Cochain rhs2 = cup(cp, a, coboundary(c, b));
    if (lhs.degree == 3) return true;  // d into degree 3 vanishes identically
    F2Vector r = rhs1.bits;
    r ^= rhs2.bits;
    return lhs.bits == r;
}

inline Cochain basis_cochain(const CupProduct& cp, int deg, std::size_t i) {
    Cochain a{deg, F2Vector(cp.dim(deg))};
    a.bits.flip(i);
    return a;
}

}  // namespace detail

// Exhaustive over basis pairs when the pair count is small (bilinearity makes
// basis coverage complete coverage); otherwise seeded random trials.
inline LeibnizReport check_leibniz(const CupProduct& cp, std::size_t trials = 1000, uint64_t seed = 0,
                                   std::size_t exhaustive_limit = 10000) {
    LeibnizReport rep;
    const std::vector<std::pair<int, int>> degree_pairs = {{0, 0}, {0, 1}, {1, 0}};
    std::size_t basis_pairs = 0;
    for (auto [p, q] : degree_pairs) basis_pairs += cp.dim(p) * cp.dim(q);
    if (basis_pairs <= exhaustive_limit) {
        rep.exhaustive = true;
        for (auto [p, q] : degree_pairs) {
            for (std::size_t i = 0; i < cp.dim(p); ++i) {
                for (std::size_t j = 0; j < cp.dim(q); ++j) {
                    ++rep.checked;
                    if (!detail::leibniz_holds(cp, detail::basis_cochain(cp, p, i),
                                               detail::basis_cochain(cp, q, j))) {
                        ++rep.failures;

                        if (rep.failure_notes.size() < 16)
                            rep.failure_notes.push_back("basis pair deg(" + std::to_string(p) + "," +
                                                        std::to_string(q) + ") cells (" + std::to_string(i) +
                                                        "," + std::to_string(j) + ")");
                    }
                }
            }
        }
        return rep;
    }
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        auto [p, q] = degree_pairs[rng.below(degree_pairs.size())];
        Cochain a{p, F2Vector(cp.dim(p))}, b{q, F2Vector(cp.dim(q))};
        for (std::size_t i = 0; i < a.bits.size(); ++i) if (rng.bit()) a.bits.flip(i);
        for (std::size_t i = 0; i < b.bits.size(); ++i) if (rng.bit()) b.bits.flip(i);
        ++rep.checked;
        if (!detail::leibniz_holds(cp, a, b)) {
            ++rep.failures;
            if (rep.failure_notes.size() < 16)
                rep.failure_notes.push_back("random trial " + std::to_string(t));
        }
    }
    return rep;
}

// Lambda-fold integrated Leibniz: for cochain tuples (a_1..a_Lambda) with
// total degree 1 (so that each term integrates a 2-cochain), verify
//   sum_k  int_M a_1 cup ( ... (d a_k cup ( ... a_Lambda)))  =  0.
inline LeibnizReport check_integrated_leibniz(const CupProduct& cp, const FundamentalClass& M,
                                              int lambda, std::size_t trials, uint64_t seed) {
    const ChainComplex& c = *cp.complex;
    if (c.d2.mul(M.chain).any())
        throw std::invalid_argument("check_integrated_leibniz: class has nonzero boundary");
    if (lambda < 2 || lambda > 3)
        throw std::invalid_argument("check_integrated_leibniz: lambda must be 2 or 3");
    LeibnizReport rep;
    Rng rng(seed);
    std::vector<std::vector<int>> degree_tuples;
    if (lambda == 2) degree_tuples = {{1, 0}, {0, 1}};
    else degree_tuples = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto nest = [&](const std::vector<Cochain>& as) {
        Cochain acc = as.back();
        for (std::size_t k = as.size() - 1; k-- > 0;) acc = cup(cp, as[k], acc);
        return acc;
    };
    for (std::size_t t = 0; t < trials; ++t) {
        auto& degs = degree_tuples[rng.below(degree_tuples.size())];
        std::vector<Cochain> as;
        for (int d : degs) {
            Cochain a{d, F2Vector(cp.dim(d))};
            for (std::size_t i = 0; i < a.bits.size(); ++i) if (rng.bit()) a.bits.flip(i);
            as.push_back(a);
        }
        bool total = false;
        for (int k = 0; k < lambda; ++k) {
            auto with_d = as;
            with_d[std::size_t(k)] = coboundary(c, as[std::size_t(k)]);
            if (with_d[std::size_t(k)].degree > 2) continue;
            Cochain term = nest(with_d);
            if (term.degree != 2) continue;
            total ^= integral(M.chain, term);
        }
        ++rep.checked;
        if (total) {
            ++rep.failures;
            if (rep.failure_notes.size() < 16)
                rep.failure_notes.push_back("trial " + std::to_string(t));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Installers

namespace detail {

inline void certify(CupProduct& cp) {
    auto rep = check_leibniz(cp, 2000, 12345);
    if (!rep.pass()) throw std::logic_error("cup installer: Leibniz check failed");
    cp.certification = rep.exhaustive ? CupCertification::leibniz_exact
                                      : CupCertification::integrated_leibniz;
}

inline void table_add(CupTable& t, std::size_t a, std::size_t b, std::vector<std::size_t> res) {
    t[{a, b}] = std::move(res);
}

}  // namespace detail

inline CupProduct install_toric_cup(const ChainComplex& c) {
    if (c.family != Family::toric) throw std::invalid_argument("install_toric_cup: family mismatch");
    long L = c.params[0];
    ToricIndex ix(L);
    CupProduct cp;
    cp.complex = &c;
    for (long x = 0; x < L; ++x) {
        for (long y = 0; y < L; ++y) {
            detail::table_add(cp.t11, ix.ve(x, y), ix.h(x, y + 1), {ix.p(x, y)});
            detail::table_add(cp.t11, ix.h(x, y), ix.ve(x + 1, y), {ix.p(x, y)});
            detail::table_add(cp.t02, ix.v(x, y), ix.p(x, y), {ix.p(x, y)});
            detail::table_add(cp.t20, ix.p(x, y), ix.v(x + 1, y + 1), {ix.p(x, y)});
            detail::table_add(cp.t00, ix.v(x, y), ix.v(x, y), {ix.v(x, y)});
            detail::table_add(cp.t01, ix.v(x, y), ix.h(x, y), {ix.h(x, y)});
            detail::table_add(cp.t01, ix.v(x, y), ix.ve(x, y), {ix.ve(x, y)});
            detail::table_add(cp.t10, ix.h(x, y), ix.v(x + 1, y), {ix.h(x, y)});
            detail::table_add(cp.t10, ix.ve(x, y), ix.v(x, y + 1), {ix.ve(x, y)});
        }
    }
    detail::certify(cp);
    return cp;
}

// Any bilinear table on the one-vertex torus is Leibniz-exact (d = 0); the
// installed table realizes the intersection pairing e1 cup e2 = f, e2 cup e1 = 0.
inline CupProduct install_minimal_torus_cup(const ChainComplex& c) {
    if (c.family != Family::minimal_torus)
        throw std::invalid_argument("install_minimal_torus_cup: family mismatch");
    CupProduct cp;
    cp.complex = &c;
    detail::table_add(cp.t00, 0, 0, {0});
    detail::table_add(cp.t01, 0, 0, {0});
    detail::table_add(cp.t01, 0, 1, {1});
    detail::table_add(cp.t10, 0, 0, {0});
    detail::table_add(cp.t10, 1, 0, {1});
    detail::table_add(cp.t11, 0, 1, {0});
    detail::table_add(cp.t02, 0, 0, {0});
    detail::table_add(cp.t20, 0, 0, {0});
    detail::certify(cp);
    return cp;
}

// Factor cup data for a one-level complex: t00/t01/t10 only.
struct FactorCup {
    CupTable t00, t01, t10;
};

inline FactorCup ising_cup(long N) {
    FactorCup f;
    auto w = [&](long a) { return std::size_t(((a % N) + N) % N); };
    for (long x = 0; x < N; ++x) {
        detail::table_add(f.t00, w(x), w(x), {w(x)});
        detail::table_add(f.t01, w(x), w(x), {w(x)});          // e_x is right of v_x
        detail::table_add(f.t10, w(x - 1), w(x), {w(x - 1)});  // e_{x-1} is left of v_x
    }
    return f;
}

inline FactorCup plaquette_ising_cup(long Lx, long Ly) {
    PlaquetteIndex ix(Lx, Ly);
    FactorCup f;
    for (long x = 0; x < Lx; ++x) {
        for (long y = 0; y < Ly; ++y) {
            std::size_t v = ix.v(x, y);
            detail::table_add(f.t00, v, ix.v(x, y + 1), {ix.v(x, y + 1)});
            detail::table_add(f.t00, v, v, {v, ix.v(x, y + 1)});
            detail::table_add(f.t00, v, ix.v(x, y - 1), {v});
            detail::table_add(f.t01, v, ix.p(x, y), {ix.p(x, y), ix.p(x, y + 1)});
            detail::table_add(f.t01, v, ix.p(x, y - 1), {ix.p(x, y - 1), ix.p(x, y)});
            detail::table_add(f.t10, ix.p(x - 1, y), v, {ix.p(x - 1, y), ix.p(x - 1, y + 1)});
            detail::table_add(f.t10, ix.p(x - 1, y - 1), v, {ix.p(x - 1, y - 1), ix.p(x - 1, y)});
        }
    }
    return f;
}

// Product cup on a hypergraph product: (aI, aP) cup (bI, bP) = (aI cup bI, aP cup bP),
// built componentwise from the two factor tables.
inline CupProduct hgp_product_cup(const ChainComplex& c, const OneLevelComplex& A, const FactorCup& fa,
                                  const OneLevelComplex& B, const FactorCup& fb) {
    HgpIndex ix(A, B);
    CupProduct cp;
    cp.complex = &c;
    auto cross = [](const CupTable& ta, const CupTable& tb,
                    auto key_a, auto key_b, auto emit) {
        for (auto& [ka, ra] : ta)
            for (auto& [kb, rb] : tb) {
                std::vector<std::pair<std::size_t, std::size_t>> results;
                for (auto xa : ra)
                    for (auto xb : rb) results.emplace_back(xa, xb);
                emit(ka, kb, results);
            }
    };
    // t00: (va,vb) cup (wa,wb)
    cross(fa.t00, fb.t00, 0, 0, [&](auto ka, auto kb, auto& res) {
        std::vector<std::size_t> out;
        for (auto [xa, xb] : res) out.push_back(ix.d0(xa, xb));
        cp.t00[{ix.d0(ka.first, kb.first), ix.d0(ka.second, kb.second)}] = out;
    });
    // t01 into block1: v cup (A0 x B1);  t01 into block2: v cup (A1 x B0)
    cross(fa.t00, fb.t01, 0, 0, [&](auto ka, auto kb, auto& res) {
        std::vector<std::size_t> out;
        for (auto [xa, xb] : res) out.push_back(ix.d1_block1(xa, xb));
        cp.t01[{ix.d0(ka.first, kb.first), ix.d1_block1(ka.second, kb.second)}] = out;
    });
    cross(fa.t01, fb.t00, 0, 0, [&](auto ka, auto kb, auto& res) {
        std::vector<std::size_t> out;
        for (auto [xa, xb] : res) out.push_back(ix.d1_block2(xa, xb));
        cp.t01[{ix.d0(ka.first, kb.first), ix.d1_block2(ka.second, kb.second)}] = out;
    });
    // t10
    cross(fa.t00, fb.t10, 0, 0, [&](auto ka, auto kb, auto& res) {
        std::vector<std::size_t> out;
        for (auto [xa, xb] : res) out.push_back(ix.d1_block1(xa, xb));
        cp.t10[{ix.d1_block1(ka.first, kb.first), ix.d0(ka.second, kb.second)}] = out;
    });
    cross(fa.t10, fb.t00, 0, 0, [&](auto ka, auto kb, auto& res) {
        std::vector<std::size_t> out;
        for (auto [xa, xb] : res) out.push_back(ix.d1_block2(xa, xb));
        cp.t10[{ix.d1_block2(ka.first, kb.first), ix.d0(ka.second, kb.second)}] = out;
    });
    // t11: block1 cup block2 and block2 cup block1 (same-block products vanish)
    cross(fa.t01, fb.t10, 0, 0, [&](auto ka, auto kb, auto& res) {
        std::vector<std::size_t> out;
        for (auto [xa, xb] : res) out.push_back(ix.d2(xa, xb));
        cp.t11[{ix.d1_block1(ka.first, kb.first), ix.d1_block2(ka.second, kb.second)}] = out;
    });
    cross(fa.t10, fb.t01, 0, 0, [&](auto ka, auto kb, auto& res) {
        std::vector<std::size_t> out;
        for (auto [xa, xb] : res) out.push_back(ix.d2(xa, xb));
        cp.t11[{ix.d1_block2(ka.first, kb.first), ix.d1_block1(ka.second, kb.second)}] = out;
    });
    // t02 / t20
    cross(fa.t01, fb.t01, 0, 0, [&](auto ka, auto kb, auto& res) {
        std::vector<std::size_t> out;
        for (auto [xa, xb] : res) out.push_back(ix.d2(xa, xb));
        cp.t02[{ix.d0(ka.first, kb.first), ix.d2(ka.second, kb.second)}] = out;
    });
    cross(fa.t10, fb.t10, 0, 0, [&](auto ka, auto kb, auto& res) {
        std::vector<std::size_t> out;
        for (auto [xa, xb] : res) out.push_back(ix.d2(xa, xb));
        cp.t20[{ix.d2(ka.first, kb.first), ix.d0(ka.second, kb.second)}] = out;
    });
    return cp;
}

inline CupProduct install_alp_cup(const ChainComplex& c, const OneLevelComplex& ising,
                                  const OneLevelComplex& plaq) {
    if (c.family != Family::alp) throw std::invalid_argument("install_alp_cup: family mismatch");
    long Lx = c.params[0], Ly = c.params[1], Lz = c.params[2];
    CupProduct cp = hgp_product_cup(c, ising, ising_cup(Lz), plaq, plaquette_ising_cup(Lx, Ly));
    detail::certify(cp);
    return cp;
}

}  // namespace gf
