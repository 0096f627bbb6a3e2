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

#include "gril/derivative.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <unordered_map>

#include "gril/worm.hpp"

namespace gril {

int Assignment::norm() const noexcept {
    int n = 0;
    for (const auto& v : s) n = std::max({n, std::abs(v[0]), std::abs(v[1])});
    return n;
}

namespace {

void check_generic(const BiFiltration& f) {
    for (int c = 0; c < 2; ++c) {
        std::unordered_map<int, std::size_t> seen;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const int v = c == 0 ? f.value(i).i : f.value(i).j;
            auto [it, fresh] = seen.emplace(v, i);
            if (!fresh) throw NonGenericError(it->second, i, c);
        }
    }
}

// Extents of one worm's boundary walk.
struct Walk {
    std::vector<Region::Column> cols;
    int left = 0, top = 0, bottom = 0, right = 0;
    int start_x = 0;    // left end of the bottom row, where the walk begins
    int top_right = 0;  // right end of the top edge
    int end_y = 0;      // top of the last column, where the walk ends

    explicit Walk(const Region& r) : cols(*r.columns()) {
        left = cols.front().x;
        top = cols.front().hi;
        right = cols.back().x;
        bottom = cols.back().lo;
        end_y = cols.back().hi;
        start_x = right;
        for (auto it = cols.rbegin(); it != cols.rend() && it->lo == bottom; ++it) start_x = it->x;
        top_right = left;
        for (const auto& c : cols) {
            if (c.hi == top) top_right = c.x;
        }
    }
    [[nodiscard]] const Region::Column& col(int x) const { return cols[static_cast<std::size_t>(x - left)]; }

    // Some point of the lower staircase (start of the walk up to the bottom
    // of the left edge) lies above p.
    [[nodiscard]] bool reaches_lower(GridPoint p) const {
        const int x = std::max(p.i, left);
        if (x > start_x) return false;
        const int ymax = x == left ? col(left).lo : col(x - 1).lo;
        return p.j <= ymax;
    }
    // Same for the upper staircase, from the right end of the top edge to the
    // end of the walk.
    [[nodiscard]] bool reaches_upper(GridPoint p) const {
        const int x = std::max(p.i, top_right);
        if (x > right) return false;
        return p.j <= col(x).hi;
    }
};

}  // namespace

Assignment assignment(const BiFiltration& f, const GrilQuery& q) {
    q.check(f.grid());
    check_generic(f);
    Assignment a;
    a.s.assign(f.size(), {0, 0});
    a.width_steps = compute_gril_steps(f, q);
    if (a.width_steps == 0) throw InvalidArgument("GRIL value is 0 at the query; no assignment");
    if (a.width_steps >= f.grid().M) return a;  // capped, nothing constrains the width
    // Held by the lower edge of the square rather than by any simplex.
    if (worm_leaves_below(DiscreteWorm{q.center, a.width_steps + 1, q.ell, f.grid()})) return a;

    const Walk in(worm_region(DiscreteWorm{q.center, a.width_steps, q.ell, f.grid()}));
    const Walk out(worm_region(DiscreteWorm{q.center, a.width_steps + 1, q.ell, f.grid()}));
    const int l = q.ell;
    std::set<int> cases;
    std::vector<std::array<int, 2>> s(f.size(), {0, 0});
    std::vector<bool> conflict(f.size(), false);
    auto mark = [&](std::size_t i, std::array<int, 2> v, int c) {
        if (s[i] != std::array<int, 2>{0, 0} && s[i] != v) conflict[i] = true;
        s[i] = v;
        cases.insert(c);
    };

    // Edges that move by l per width step.
    std::vector<bool> axis(f.size(), false);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const GridPoint v = f.value(i);
        if (v.j > in.top && v.j <= out.top && v.i <= out.top_right) mark(i, {0, l}, 1);
        if (v.i <= in.left && v.i > out.left && v.j <= in.top) mark(i, {-l, 0}, 2);
        if (v.j <= in.bottom && v.j > out.bottom && v.i <= in.start_x) mark(i, {0, -l}, 5);
        if (v.i > in.right && v.i <= out.right && v.j <= out.end_y) mark(i, {l, 0}, 6);
        axis[i] = s[i] != std::array<int, 2>{0, 0};
    }
    // Staircases: a simplex, or the join of an incomparable pair, that meets
    // the lower staircase of the inner worm only, or the upper one of the
    // outer worm only.
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (axis[i]) continue;
        const GridPoint v = f.value(i);
        if (in.reaches_lower(v) && !out.reaches_lower(v)) mark(i, {-1, -1}, 3);
        if (out.reaches_upper(v) && !in.reaches_upper(v)) mark(i, {1, 1}, 4);
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t k = 0; k < f.size(); ++k) {
            const GridPoint u = f.value(i), w = f.value(k);
            if (!(u.i < w.i && u.j > w.j)) continue;  // u strictly upper-left of w
            const GridPoint jn = join(u, w);
            if (in.reaches_lower(jn) && !out.reaches_lower(jn) && out.reaches_lower(u) && out.reaches_lower(w)) {
                mark(i, {0, -1}, 3);
                mark(k, {-1, 0}, 3);
            }
            if (out.reaches_upper(jn) && !in.reaches_upper(jn) && in.reaches_upper(u) && in.reaches_upper(w)) {
                mark(i, {0, 1}, 4);
                mark(k, {1, 0}, 4);
            }
        }
    }

    a.cases.assign(cases.begin(), cases.end());
    const bool edge = cases.contains(1) || cases.contains(2) || cases.contains(5) || cases.contains(6);
    const bool stair = cases.contains(3) || cases.contains(4);
    if ((edge && stair) || std::find(conflict.begin(), conflict.end(), true) != conflict.end()) {
        a.mixed = true;
        return a;
    }
    a.s = std::move(s);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (a.s[i] != std::array<int, 2>{0, 0}) a.support.push_back(i);
    }
    return a;
}

BiFiltration perturb(const BiFiltration& f, const Assignment& a, double alpha) {
    if (a.s.size() != f.size()) throw InvalidArgument("assignment size differs from the complex");
    const int n = a.norm();
    if (n == 0) return f;
    const GridSpec& g = f.grid();
    std::vector<GridPoint> vals(f.values().begin(), f.values().end());
    const double steps_per_unit = alpha * g.M / n;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        for (int c = 0; c < 2; ++c) {
            const int sc = a.s[i][static_cast<std::size_t>(c)];
            if (sc == 0) continue;
            const double shift = steps_per_unit * sc;
            const double r = std::round(shift);
            if (std::abs(shift - r) > 1e-9) throw InvalidArgument("perturbation does not land on the grid");
            int& x = c == 0 ? vals[i].i : vals[i].j;
            x += static_cast<int>(r);
            if (x < 0 || x > g.M) throw InvalidArgument("perturbation leaves the unit square");
        }
    }
    return BiFiltration(f.complex(), g, std::move(vals));
}

ProbeResult directional_probe(const BiFiltration& f, const Assignment& a, double alpha, const GrilQuery& q) {
    ProbeResult r;
    if (!a.support.empty()) {
        const bool axis = std::any_of(a.cases.begin(), a.cases.end(), [](int c) { return c != 3 && c != 4; });
        r.predicted_slope = axis ? 1.0 / q.ell : 1.0;
    }
    const BiFiltration g = perturb(f, a, alpha);
    r.observed_delta = compute_gril(g, q) - compute_gril(f, q);
    return r;
}

}  // namespace gril
