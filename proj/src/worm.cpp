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

#include "gril/worm.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "gril/error.hpp"

namespace gril {

void DiscreteWorm::check() const {
    grid.check();
    if (width_steps < 1) throw InvalidArgument("worm width must be >= 1 grid step");
    if (ell < 1) throw InvalidArgument("worm ell must be >= 1");
    if (!on_grid(center, grid)) throw InvalidArgument("worm centre is off the grid");
}

Region::Region(std::vector<GridPoint> points) : pts_(std::move(points)) {
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

Region::Region(int x0, std::span<const std::pair<int, int>> ranges) {
    for (std::size_t k = 0; k < ranges.size(); ++k) {
        for (int y = ranges[k].first; y <= ranges[k].second; ++y) {
            pts_.push_back({x0 + static_cast<int>(k), y});
        }
    }
}

bool Region::contains(GridPoint p) const noexcept { return std::binary_search(pts_.begin(), pts_.end(), p); }

bool Region::subset_of(const Region& other) const noexcept {
    return std::includes(other.pts_.begin(), other.pts_.end(), pts_.begin(), pts_.end());
}

std::optional<std::vector<Region::Column>> Region::columns() const {
    std::vector<Column> out;
    for (std::size_t k = 0; k < pts_.size();) {
        std::size_t e = k;
        while (e + 1 < pts_.size() && pts_[e + 1].i == pts_[k].i) {
            if (pts_[e + 1].j != pts_[e].j + 1) return std::nullopt;
            ++e;
        }
        if (!out.empty() && out.back().x + 1 != pts_[k].i) return std::nullopt;
        out.push_back({pts_[k].i, pts_[k].j, pts_[e].j});
        k = e + 1;
    }
    return out;
}

bool Region::connected() const {
    if (pts_.empty()) return false;
    std::vector<bool> seen(pts_.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    auto index = [&](GridPoint p) -> std::optional<std::size_t> {
        auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
        if (it == pts_.end() || *it != p) return std::nullopt;
        return static_cast<std::size_t>(it - pts_.begin());
    };
    while (!stack.empty()) {
        GridPoint p = pts_[stack.back()];
        stack.pop_back();
        for (GridPoint q : {GridPoint{p.i + 1, p.j}, GridPoint{p.i - 1, p.j}, GridPoint{p.i, p.j + 1},
                            GridPoint{p.i, p.j - 1}}) {
            if (auto k = index(q); k && !seen[*k]) {
                seen[*k] = true;
                ++count;
                stack.push_back(*k);
            }
        }
    }
    return count == pts_.size();
}

bool Region::is_interval() const {
    if (!connected()) return false;
    // Order-convex iff every point between a minimal and a maximal point is
    // inside; checking unit neighbours of members suffices on the grid.
    for (GridPoint u : pts_) {
        for (GridPoint w : pts_) {
            if (!leq(u, w)) continue;
            for (int x = u.i; x <= w.i; ++x) {
                for (int y = u.j; y <= w.j; ++y) {
                    if (!contains({x, y})) return false;
                }
            }
        }
    }
    return true;
}

std::vector<GridPoint> Region::minimal_points() const {
    std::vector<GridPoint> out;
    for (GridPoint p : pts_) {
        if (!contains({p.i - 1, p.j}) && !contains({p.i, p.j - 1})) out.push_back(p);
    }
    return out;
}

std::vector<GridPoint> Region::maximal_points() const {
    std::vector<GridPoint> out;
    for (GridPoint p : pts_) {
        if (!contains({p.i + 1, p.j}) && !contains({p.i, p.j + 1})) out.push_back(p);
    }
    return out;
}

namespace {

struct WormBounds {
    int x_lo, x_hi;  // clipped
    int y_lo, y_hi;
    int s_lo, s_hi;  // x + y band
    bool below;      // unclipped squares reach x < 0 or y < 0
};

WormBounds bounds(const DiscreteWorm& w) {
    w.check();
    const int M = w.grid.M;
    const int px = w.center.i, py = w.center.j, d = w.width_steps;
    const int reach = (w.ell - 1) * d;
    // Offsets a with the centre p + (a, -a) on the grid.
    const int a_lo = std::max({-reach, -px, py - M});
    const int a_hi = std::min({reach, M - px, py});
    WormBounds b{};
    b.x_lo = std::max(0, px + a_lo - d);
    b.x_hi = std::min(M, px + a_hi + d);
    b.y_lo = std::max(0, py - a_hi - d);
    b.y_hi = std::min(M, py - a_lo + d);
    b.s_lo = px + py - 2 * d;
    b.s_hi = px + py + 2 * d;
    b.below = px + a_lo - d < 0 || py - a_hi - d < 0;
    return b;
}

}  // namespace

Region worm_region(const DiscreteWorm& w) {
    WormBounds b = bounds(w);
    std::vector<std::pair<int, int>> ranges;
    int x0 = b.x_lo;
    for (int x = b.x_lo; x <= b.x_hi; ++x) {
        int lo = std::max(b.y_lo, b.s_lo - x);
        int hi = std::min(b.y_hi, b.s_hi - x);
        if (lo > hi) {
            // Only possible at the ends of the x range; keep columns consecutive.
            if (ranges.empty()) x0 = x + 1;
            continue;
        }
        ranges.emplace_back(lo, hi);
    }
    return Region(x0, ranges);
}

bool worm_leaves_below(const DiscreteWorm& w) { return bounds(w).below; }

bool worm_nested(const DiscreteWorm& w1, const DiscreteWorm& w2) {
    w1.check();
    w2.check();
    if (w1.center != w2.center || w1.ell != w2.ell || w1.grid != w2.grid) {
        throw InvalidArgument("worm_nested needs worms with the same centre, ell and grid");
    }
    return w1.width_steps <= w2.width_steps;
}

BoundaryPath boundary_path(const Region& region) {
    if (region.empty()) throw InvalidArgument("boundary path of an empty region");
    auto cols_opt = region.columns();
    if (!cols_opt) throw InvalidArgument("region columns are not contiguous");
    const auto& cols = *cols_opt;
    for (std::size_t k = 0; k + 1 < cols.size(); ++k) {
        if (cols[k + 1].lo > cols[k].lo || cols[k + 1].hi > cols[k].hi) {
            throw InvalidArgument("region is not a descending staircase");
        }
        if (cols[k + 1].hi < cols[k].lo) throw InvalidArgument("region is not connected");
    }

    BoundaryPath path;
    auto push = [&](GridPoint p) {
        if (!path.points.empty()) {
            GridPoint q = path.points.back();
            path.directions.push_back(leq(q, p) ? Direction::Up : Direction::Down);
        }
        path.points.push_back(p);
    };

    // Lower staircase from its left end to the start of the bottom edge.
    const int y_bottom = cols.back().lo;
    std::size_t kb = 0;
    while (cols[kb].lo != y_bottom) ++kb;
    std::vector<GridPoint> lower{{cols[0].x, cols[0].lo}};
    for (std::size_t k = 0; k < kb; ++k) {
        lower.push_back({cols[k + 1].x, cols[k].lo});
        for (int y = cols[k].lo - 1; y >= cols[k + 1].lo; --y) lower.push_back({cols[k + 1].x, y});
    }
    for (auto it = lower.rbegin(); it != lower.rend(); ++it) push(*it);

    // Left edge upwards.
    for (int y = cols[0].lo + 1; y <= cols[0].hi; ++y) push({cols[0].x, y});

    // Top edge and upper staircase down to the top of the right edge.
    for (std::size_t k = 0; k + 1 < cols.size(); ++k) {
        for (int y = cols[k].hi - 1; y >= cols[k + 1].hi; --y) push({cols[k].x, y});
        push({cols[k + 1].x, cols[k + 1].hi});
    }
    return path;
}

BoundaryPath boundary_path(const DiscreteWorm& w) { return boundary_path(worm_region(w)); }

}  // namespace gril
