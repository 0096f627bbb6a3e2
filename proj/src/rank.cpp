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

#include "gril/rank.hpp"

#include <algorithm>

#include "gril/error.hpp"

namespace gril {

using gf2::BitMatrix;
using gf2::Gf2Matrix;

IntervalRegion::IntervalRegion(Region region) : region_(std::move(region)) {
    if (!region_.is_interval()) throw InvalidArgument("point set is not an interval");
}

PosetDiagram::PosetDiagram(const BiFiltration& f, const IntervalRegion& interval, int dim) : interval_(interval) {
    auto pts = points();
    spaces_.reserve(pts.size());
    for (GridPoint u : pts) spaces_.emplace_back(f, u, dim);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        for (GridPoint v : {GridPoint{pts[k].i + 1, pts[k].j}, GridPoint{pts[k].i, pts[k].j + 1}}) {
            if (auto t = index_of(v)) edges_.push_back({k, *t, induced_map(spaces_[k], spaces_[*t])});
        }
    }
}

std::optional<std::size_t> PosetDiagram::index_of(GridPoint p) const {
    auto pts = points();
    auto it = std::lower_bound(pts.begin(), pts.end(), p);
    if (it == pts.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - pts.begin());
}

Gf2Matrix PosetDiagram::composite(GridPoint u, GridPoint v) const {
    if (!leq(u, v)) throw InvalidArgument("composite needs u <= v");
    auto cur = index_of(u);
    if (!cur) throw InvalidArgument("composite start outside the interval");
    Gf2Matrix acc = Gf2Matrix::identity(spaces_[*cur].dimension());
    GridPoint p = u;
    auto step = [&](GridPoint q) {
        auto nxt = index_of(q);
        if (!nxt) throw InvalidArgument("composite path leaves the interval");
        auto e = std::find_if(edges_.begin(), edges_.end(),
                              [&](const Edge& x) { return x.from == *cur && x.to == *nxt; });
        acc = e->map.multiply(acc);
        cur = nxt;
        p = q;
    };
    while (p.i < v.i) step({p.i + 1, p.j});
    while (p.j < v.j) step({p.i, p.j + 1});
    return acc;
}

ZigzagFiltration restrict_to_path(const BiFiltration& f, const BoundaryPath& path) {
    if (path.points.empty()) throw InvalidArgument("empty boundary path");
    if (path.directions.size() + 1 != path.points.size()) throw InvalidArgument("path directions do not match points");
    const auto& cx = f.complex();
    const auto vals = f.values();
    ZigzagFiltration zf;
    zf.steps.reserve(path.points.size());

    ZigzagStep first{ZigzagOp::Insert, {}};
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (leq(vals[i], path.points[0])) first.simplices.push_back(cx.simplex(i));
    }
    zf.steps.push_back(std::move(first));

    for (std::size_t s = 0; s + 1 < path.points.size(); ++s) {
        const GridPoint a = path.points[s], b = path.points[s + 1];
        ZigzagStep st;
        if (path.directions[s] == Direction::Up) {
            if (!leq(a, b)) throw InvalidArgument("path step marked Up is not increasing");
            st.op = ZigzagOp::Insert;
            for (std::size_t i = 0; i < vals.size(); ++i) {
                if (leq(vals[i], b) && !leq(vals[i], a)) st.simplices.push_back(cx.simplex(i));
            }
        } else {
            if (!leq(b, a)) throw InvalidArgument("path step marked Down is not decreasing");
            st.op = ZigzagOp::Delete;
            for (std::size_t i = vals.size(); i-- > 0;) {
                if (leq(vals[i], a) && !leq(vals[i], b)) st.simplices.push_back(cx.simplex(i));
            }
        }
        zf.steps.push_back(std::move(st));
    }
    return zf;
}

namespace {

std::vector<std::size_t> ranks_along(const BiFiltration& f, const BoundaryPath& path, int max_dim) {
    ZigzagFiltration zf = restrict_to_path(f, path);
    Barcode bc = zigzag_barcode(zf, max_dim);
    std::vector<std::size_t> out(static_cast<std::size_t>(max_dim + 1), 0);
    for (int d = 0; d <= max_dim; ++d) out[static_cast<std::size_t>(d)] = count_full_bars(bc, zf.length(), d);
    return out;
}

}  // namespace

std::vector<std::size_t> compute_ranks(const BiFiltration& f, const DiscreteWorm& w, int max_dim) {
    if (max_dim < 0) throw InvalidArgument("max_dim must be >= 0");
    if (w.grid != f.grid()) throw InvalidArgument("worm grid differs from the bifiltration grid");
    if (worm_leaves_below(w)) return std::vector<std::size_t>(static_cast<std::size_t>(max_dim + 1), 0);
    return ranks_along(f, boundary_path(w), max_dim);
}

std::size_t compute_rank(const BiFiltration& f, const DiscreteWorm& w, int dim) {
    if (dim < 0) throw InvalidArgument("dim must be >= 0");
    return compute_ranks(f, w, dim)[static_cast<std::size_t>(dim)];
}

std::size_t compute_rank(const BiFiltration& f, const Region& region, int dim) {
    if (dim < 0) throw InvalidArgument("dim must be >= 0");
    return ranks_along(f, boundary_path(region), dim)[static_cast<std::size_t>(dim)];
}

std::size_t rank_oracle(const PosetDiagram& dg) {
    const auto pts = dg.points();
    std::vector<std::size_t> offset(pts.size() + 1, 0);
    for (std::size_t k = 0; k < pts.size(); ++k) offset[k + 1] = offset[k] + dg.space(k).dimension();
    const std::size_t total = offset.back();
    if (total == 0) return 0;

    // Limit: kernel of (m_u) -> (phi(m_u) - m_v) over unit steps u -> v.
    std::size_t arows = 0;
    for (const auto& e : dg.edges()) arows += dg.space(e.to).dimension();
    BitMatrix a(arows, total);
    std::size_t r0 = 0;
    for (const auto& e : dg.edges()) {
        const std::size_t nv = dg.space(e.to).dimension();
        for (std::size_t c = 0; c < e.map.ncols(); ++c) {
            for (auto r : e.map.column(c).indices()) a.flip(r0 + r, offset[e.from] + c);
        }
        for (std::size_t r = 0; r < nv; ++r) a.flip(r0 + r, offset[e.to] + r);
        r0 += nv;
    }
    BitMatrix lim = a.nullspace();  // rows are limit vectors
    if (lim.rows() == 0) return 0;

    // Colimit: cokernel of m -> phi(m) - m from each edge source; images of
    // B's columns are stored as rows so row rank is the column rank.
    std::size_t bcols = 0;
    for (const auto& e : dg.edges()) bcols += dg.space(e.from).dimension();
    BitMatrix bx(bcols + lim.rows(), total);
    std::size_t row = 0;
    for (const auto& e : dg.edges()) {
        for (std::size_t c = 0; c < e.map.ncols(); ++c, ++row) {
            for (auto r : e.map.column(c).indices()) bx.flip(row, offset[e.to] + r);
            bx.flip(row, offset[e.from] + c);
        }
    }
    BitMatrix b_only(bcols, total);
    for (std::size_t r = 0; r < bcols; ++r) std::copy_n(bx.row(r), bx.words_per_row(), b_only.row(r));
    const std::size_t rank_b = b_only.rank();

    // Every limit vector maps to the class of any one of its components; use
    // the first point's block.
    const std::size_t n0 = dg.space(0).dimension();
    for (std::size_t k = 0; k < lim.rows(); ++k, ++row) {
        for (std::size_t c = 0; c < n0; ++c) {
            if (lim.get(k, offset[0] + c)) bx.set(row, offset[0] + c);
        }
    }
    return bx.rank() - rank_b;
}

std::size_t rank_oracle(const BiFiltration& f, const IntervalRegion& interval, int dim) {
    return rank_oracle(PosetDiagram(f, interval, dim));
}

}  // namespace gril
