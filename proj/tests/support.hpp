/*
   Copyright 2026 The GRIL Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Shared fixtures and independent reference computations for the tests.
// Nothing here calls the homology, zigzag or rank code under test; the
// oracles below work from explicit simplex sets with dense elimination.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "gril/complex.hpp"
#include "gril/rank.hpp"
#include "gril/worm.hpp"
#include "gril/zigzag.hpp"

namespace gril::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// --- dense GF(2) helpers -------------------------------------------------

using Bits = std::vector<std::uint8_t>;

// Row echelon rank of a list of row vectors of equal length.
inline std::size_t dense_rank(std::vector<Bits> rows) {
    std::size_t rank = 0;
    const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p][c]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r][c]) {
                for (std::size_t k = 0; k < ncols; ++k) rows[r][k] ^= rows[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

// Kernel basis of the map x -> A x, A given by rows of length n.
inline std::vector<Bits> dense_kernel(std::vector<Bits> rows, std::size_t n) {
    std::vector<std::size_t> pivcol;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p][c]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r][c]) {
                for (std::size_t k = 0; k < n; ++k) rows[r][k] ^= rows[rank][k];
            }
        }
        pivcol.push_back(c);
        ++rank;
    }
    std::vector<bool> is_piv(n, false);
    for (auto c : pivcol) is_piv[c] = true;
    std::vector<Bits> out;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_piv[free]) continue;
        Bits x(n, 0);
        x[free] = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            if (rows[r][free]) x[pivcol[r]] = 1;
        }
        out.push_back(std::move(x));
    }
    return out;
}

// Homology of an explicit complex, over a fixed global simplex numbering.
struct DenseHomology {
    std::vector<Bits> basis;       // cycles (over the global numbering)
    std::vector<Bits> boundaries;  // spanning set of boundaries
    std::size_t nglobal = 0;

    // Coordinates of a cycle in the basis (solves by elimination).
    [[nodiscard]] Bits coordinates(const Bits& z) const {
        // Unknowns: basis coefficients then boundary coefficients.
        const std::size_t nb = basis.size(), nd = boundaries.size();
        std::vector<Bits> rows(nglobal, Bits(nb + nd + 1, 0));
        for (std::size_t g = 0; g < nglobal; ++g) {
            for (std::size_t k = 0; k < nb; ++k) rows[g][k] = basis[k][g];
            for (std::size_t k = 0; k < nd; ++k) rows[g][nb + k] = boundaries[k][g];
            rows[g][nb + nd] = z[g];
        }
        // Gauss-Jordan, basis columns first so their values are determined.
        std::vector<std::size_t> pivcol;
        std::size_t rank = 0;
        const std::size_t n = nb + nd;
        for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
            std::size_t p = rank;
            while (p < rows.size() && !rows[p][c]) ++p;
            if (p == rows.size()) continue;
            std::swap(rows[p], rows[rank]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r != rank && rows[r][c]) {
                    for (std::size_t k = 0; k <= n; ++k) rows[r][k] ^= rows[rank][k];
                }
            }
            pivcol.push_back(c);
            ++rank;
        }
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (rows[r][n]) throw std::runtime_error("not a cycle of the target");
        }
        // Setting free variables to zero; basis coefficients are unique
        // because the basis is independent modulo boundaries.
        Bits x(nb, 0);
        for (std::size_t r = 0; r < rank; ++r) {
            if (pivcol[r] < nb) x[pivcol[r]] = rows[r][n];
        }
        return x;
    }
};

inline DenseHomology dense_homology(const std::vector<Simplex>& present, const std::vector<Simplex>& universe,
                                    int dim) {
    DenseHomology h;
    h.nglobal = universe.size();
    auto gid = [&](const Simplex& s) {
        return static_cast<std::size_t>(std::find(universe.begin(), universe.end(), s) - universe.begin());
    };
    std::vector<Simplex> chains, cochains;
    for (const auto& s : present) {
        if (s.dimension() == dim) chains.push_back(s);
        if (s.dimension() == dim + 1) cochains.push_back(s);
    }
    // Cycles: kernel of boundary on chains.
    std::vector<Bits> cycles;
    if (dim == 0) {
        for (const auto& c : chains) {
            Bits z(h.nglobal, 0);
            z[gid(c)] = 1;
            cycles.push_back(z);
        }
    } else {
        std::vector<Bits> rows(h.nglobal, Bits(chains.size(), 0));
        for (std::size_t k = 0; k < chains.size(); ++k) {
            for (const auto& f : chains[k].facets()) rows[gid(f)][k] = 1;
        }
        for (const auto& x : dense_kernel(rows, chains.size())) {
            Bits z(h.nglobal, 0);
            for (std::size_t k = 0; k < chains.size(); ++k) {
                if (x[k]) z[gid(chains[k])] = 1;
            }
            cycles.push_back(z);
        }
    }
    for (const auto& c : cochains) {
        Bits b(h.nglobal, 0);
        for (const auto& f : c.facets()) b[gid(f)] = 1;
        h.boundaries.push_back(b);
    }
    // Greedy extension of the boundary span by cycles.
    std::vector<Bits> span = h.boundaries;
    std::size_t r = dense_rank(span);
    for (const auto& z : cycles) {
        span.push_back(z);
        std::size_t r2 = dense_rank(span);
        if (r2 > r) {
            h.basis.push_back(z);
            r = r2;
        } else {
            span.pop_back();
        }
    }
    return h;
}

// Matrix (as a list of image coordinate vectors) of H(from) -> H(to) for an
// inclusion of complexes.
inline std::vector<Bits> dense_map(const DenseHomology& from, const DenseHomology& to) {
    std::vector<Bits> cols;
    for (const auto& z : from.basis) cols.push_back(to.coordinates(z));
    return cols;
}

// A finite diagram: spaces with dimensions and maps along arrows.
struct Arrow {
    std::size_t src;
    std::size_t dst;
    std::vector<Bits> cols;  // image of each source basis vector, length dim(dst)
};

// Rank of the canonical limit-to-colimit map of a connected diagram.
inline std::size_t diagram_rank(const std::vector<std::size_t>& dims, const std::vector<Arrow>& arrows) {
    std::vector<std::size_t> off(dims.size() + 1, 0);
    for (std::size_t k = 0; k < dims.size(); ++k) off[k + 1] = off[k] + dims[k];
    const std::size_t n = off.back();
    if (n == 0) return 0;
    std::vector<Bits> cons;
    for (const auto& a : arrows) {
        for (std::size_t r = 0; r < dims[a.dst]; ++r) {
            Bits row(n, 0);
            for (std::size_t c = 0; c < dims[a.src]; ++c) row[off[a.src] + c] = a.cols[c][r];
            row[off[a.dst] + r] ^= 1;
            cons.push_back(row);
        }
    }
    auto lim = dense_kernel(cons, n);
    std::vector<Bits> rel;
    for (const auto& a : arrows) {
        for (std::size_t c = 0; c < dims[a.src]; ++c) {
            Bits v(n, 0);
            for (std::size_t r = 0; r < dims[a.dst]; ++r) v[off[a.dst] + r] = a.cols[c][r];
            v[off[a.src] + c] ^= 1;
            rel.push_back(v);
        }
    }
    const std::size_t base = dense_rank(rel);
    for (const auto& x : lim) {
        Bits v(n, 0);
        for (std::size_t c = 0; c < dims[0]; ++c) v[off[0] + c] = x[off[0] + c];
        rel.push_back(v);
    }
    return dense_rank(rel) - base;
}

// --- zigzag reference ----------------------------------------------------

// Complexes after each step of a zigzag.
inline std::vector<std::vector<Simplex>> zigzag_complexes(const ZigzagFiltration& zf) {
    std::vector<std::vector<Simplex>> out;
    std::set<Simplex> cur;
    for (const auto& st : zf.steps) {
        for (const auto& s : st.simplices) {
            if (st.op == ZigzagOp::Insert) {
                cur.insert(s);
            } else {
                cur.erase(s);
            }
        }
        out.emplace_back(cur.begin(), cur.end());
    }
    return out;
}

inline std::vector<Simplex> zigzag_universe(const ZigzagFiltration& zf) {
    std::set<Simplex> all;
    for (const auto& st : zf.steps) all.insert(st.simplices.begin(), st.simplices.end());
    return {all.begin(), all.end()};
}

// Generalized rank of the zigzag module restricted to positions [i, j].
struct ZigzagOracle {
    std::vector<DenseHomology> h;
    std::vector<bool> forward;  // forward[s]: complex s is included in s+1

    ZigzagOracle(const ZigzagFiltration& zf, int dim) {
        auto cx = zigzag_complexes(zf);
        auto uni = zigzag_universe(zf);
        for (const auto& c : cx) h.push_back(dense_homology(c, uni, dim));
        for (std::size_t s = 0; s + 1 < zf.steps.size(); ++s) forward.push_back(zf.steps[s + 1].op == ZigzagOp::Insert);
    }

    [[nodiscard]] std::size_t segment_rank(std::size_t i, std::size_t j) const {
        std::vector<std::size_t> dims;
        std::vector<Arrow> arrows;
        for (std::size_t s = i; s <= j; ++s) dims.push_back(h[s].basis.size());
        for (std::size_t s = i; s < j; ++s) {
            if (forward[s]) {
                arrows.push_back({s - i, s + 1 - i, dense_map(h[s], h[s + 1])});
            } else {
                arrows.push_back({s + 1 - i, s - i, dense_map(h[s + 1], h[s])});
            }
        }
        return diagram_rank(dims, arrows);
    }

    // Bars via Moebius inversion of segment ranks: positions b..d-1.
    [[nodiscard]] std::vector<Bar> bars(int dim) const {
        const auto n = static_cast<long>(h.size());
        std::map<std::pair<long, long>, long> memo;
        auto R = [&](long i, long j) -> long {
            if (i < 0 || j >= n || i > j) return 0;
            auto key = std::make_pair(i, j);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
            long v = static_cast<long>(segment_rank(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
            memo[key] = v;
            return v;
        };
        std::vector<Bar> out;
        for (long b = 0; b < n; ++b) {
            for (long e = b; e < n; ++e) {
                long m = R(b, e) - R(b - 1, e) - R(b, e + 1) + R(b - 1, e + 1);
                for (long c = 0; c < m; ++c) out.push_back({dim, static_cast<std::size_t>(b), static_cast<std::size_t>(e + 1)});
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Random valid zigzag over simplices on nverts vertices; each step is one
// simplex unless batch is set, in which case consecutive same-direction ops
// are grouped at random.
inline ZigzagFiltration random_zigzag(Rng& rng, int nverts, int nsteps, bool batch) {
    std::vector<Simplex> pool;
    for (int a = 0; a < nverts; ++a) {
        pool.push_back(Simplex{static_cast<VertexId>(a)});
        for (int b = a + 1; b < nverts; ++b) {
            pool.push_back(Simplex{static_cast<VertexId>(a), static_cast<VertexId>(b)});
            for (int c = b + 1; c < nverts; ++c) {
                pool.push_back(Simplex{static_cast<VertexId>(a), static_cast<VertexId>(b), static_cast<VertexId>(c)});
            }
        }
    }
    std::set<Simplex> cur;
    std::vector<std::pair<ZigzagOp, Simplex>> ops;
    while (static_cast<int>(ops.size()) < nsteps) {
        std::vector<Simplex> ins, del;
        for (const auto& s : pool) {
            if (cur.contains(s)) {
                bool free = std::none_of(cur.begin(), cur.end(), [&](const Simplex& t) { return s.is_face_of(t) && !(s == t); });
                if (free) del.push_back(s);
            } else {
                auto fs = s.facets();
                if (std::all_of(fs.begin(), fs.end(), [&](const Simplex& f) { return cur.contains(f); })) ins.push_back(s);
            }
        }
        bool do_ins = del.empty() || (!ins.empty() && uniform(rng, 0, 99) < 60);
        if (do_ins) {
            auto s = ins[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ins.size()) - 1))];
            cur.insert(s);
            ops.emplace_back(ZigzagOp::Insert, s);
        } else {
            auto s = del[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(del.size()) - 1))];
            cur.erase(s);
            ops.emplace_back(ZigzagOp::Delete, s);
        }
    }
    ZigzagFiltration zf;
    for (const auto& [op, s] : ops) {
        if (batch && !zf.steps.empty() && zf.steps.back().op == op && uniform(rng, 0, 1) == 1) {
            zf.steps.back().simplices.push_back(s);
        } else {
            zf.steps.push_back({op, {s}});
        }
    }
    return zf;
}

// Generalized rank over a grid region from explicit sublevel complexes,
// using every comparable unit step as an arrow.
inline std::size_t region_oracle(const BiFiltration& f, const Region& region, int dim) {
    std::vector<Simplex> uni(f.complex().simplices().begin(), f.complex().simplices().end());
    auto pts = region.points();
    std::vector<DenseHomology> hs;
    std::vector<std::size_t> dims;
    for (GridPoint u : pts) {
        std::vector<Simplex> present;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (leq(f.value(i), u)) present.push_back(uni[i]);
        }
        hs.push_back(dense_homology(present, uni, dim));
        dims.push_back(hs.back().basis.size());
    }
    std::vector<Arrow> arrows;
    for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = 0; b < pts.size(); ++b) {
            const int di = pts[b].i - pts[a].i, dj = pts[b].j - pts[a].j;
            if ((di == 1 && dj == 0) || (di == 0 && dj == 1)) arrows.push_back({a, b, dense_map(hs[a], hs[b])});
        }
    }
    return diagram_rank(dims, arrows);
}

// --- bifiltrations --------------------------------------------------------

// K2: a at (1,1), b at (3,3), ab at (6,6) on the 10-grid.
inline BiFiltration k2_example() {
    SimplicialComplex cx;
    cx.add(Simplex{0});
    cx.add(Simplex{1});
    cx.add(Simplex{0, 1});
    return BiFiltration(cx, GridSpec{10}, {{1, 1}, {3, 3}, {6, 6}});
}

// Random monotone bifiltration with at most max_simplices simplices.
inline BiFiltration random_bifiltration(Rng& rng, int max_simplices, int M) {
    const int nverts = uniform(rng, 1, 5);
    std::vector<Simplex> cand;
    for (int a = 0; a < nverts; ++a) {
        for (int b = a + 1; b < nverts; ++b) {
            cand.push_back(Simplex{static_cast<VertexId>(a), static_cast<VertexId>(b)});
            for (int c = b + 1; c < nverts; ++c) {
                cand.push_back(Simplex{static_cast<VertexId>(a), static_cast<VertexId>(b), static_cast<VertexId>(c)});
            }
        }
    }
    std::shuffle(cand.begin(), cand.end(), rng);
    std::stable_sort(cand.begin(), cand.end(), [](const Simplex& x, const Simplex& y) { return x.dimension() < y.dimension(); });
    SimplicialComplex cx;
    for (int a = 0; a < nverts; ++a) cx.add(Simplex{static_cast<VertexId>(a)});
    for (const auto& s : cand) {
        if (static_cast<int>(cx.size()) >= max_simplices) break;
        auto fs = s.facets();
        if (!std::all_of(fs.begin(), fs.end(), [&](const Simplex& f) { return cx.contains(f); })) continue;
        if (uniform(rng, 0, 99) < 70) cx.add(s);
    }
    std::vector<GridPoint> vals;
    for (std::size_t i = 0; i < cx.size(); ++i) {
        GridPoint lo{0, 0};
        for (auto f : cx.boundary(i)) lo = join(lo, vals[f]);
        vals.push_back({uniform(rng, lo.i, std::min(M, lo.i + M / 2 + 1)), uniform(rng, lo.j, std::min(M, lo.j + M / 2 + 1))});
    }
    return BiFiltration(cx, GridSpec{M}, vals);
}

// Union of the d-squares around the grid centres p + (a, -a), |a| <= (l-1)d,
// kept inside [lo, hi] in both coordinates. The default box reaches one step
// below the unit square, which is enough to see the zero module there.
inline Region square_union(const DiscreteWorm& w, int lo, int hi) {
    const int M = w.grid.M, d = w.width_steps, reach = (w.ell - 1) * d;
    std::vector<GridPoint> pts;
    for (int a = -reach; a <= reach; ++a) {
        const GridPoint q{w.center.i + a, w.center.j - a};
        if (q.i < 0 || q.i > M || q.j < 0 || q.j > M) continue;
        for (int x = std::max(lo, q.i - d); x <= std::min(hi, q.i + d); ++x) {
            for (int y = std::max(lo, q.j - d); y <= std::min(hi, q.j + d); ++y) pts.push_back({x, y});
        }
    }
    return Region(std::move(pts));
}
inline Region square_union(const DiscreteWorm& w) { return square_union(w, -1, w.grid.M); }

// Rank over the worm straight from the limit-to-colimit oracle.
inline std::size_t worm_oracle(const BiFiltration& f, const DiscreteWorm& w, int dim) {
    return rank_oracle(f, IntervalRegion(square_union(w)), dim);
}

inline DiscreteWorm random_worm(Rng& rng, int M, int max_ell) {
    return DiscreteWorm{{uniform(rng, 0, M), uniform(rng, 0, M)}, uniform(rng, 1, std::max(1, M / 2)),
                        uniform(rng, 1, max_ell), GridSpec{M}};
}

}  // namespace gril::testing
