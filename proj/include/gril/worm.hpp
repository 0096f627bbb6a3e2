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

// Worm geometry on the grid.
//
// An l-worm of width d (in grid steps) centred at p is the union of the
// d-squares centred at the grid points p + (a, -a), |a| <= (l - 1) d, clipped
// to [0, M]^2. In grid coordinates s = x - px, t = y - py this is
//
//     |s + t| <= 2d,   a_lo - d <= s <= a_hi + d,   -a_hi - d <= t <= d - a_lo
//
// where [a_lo, a_hi] is the range of offsets whose centre stays on the grid.
// Each column is a contiguous range and both column ends are non-increasing
// in x, which is what the boundary traversal relies on.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gril/complex.hpp"

namespace gril {

struct DiscreteWorm {
    GridPoint center;
    int width_steps = 1;  // d; width delta = d * rho
    int ell = 1;
    GridSpec grid;

    //! Throws InvalidArgument on d < 1, l < 1 or an off-grid centre.
    void check() const;
    [[nodiscard]] double width() const noexcept { return width_steps * grid.rho(); }
};

//! Finite set of grid points, kept sorted by (i, j).
class Region {
  public:
    struct Column {
        int x;
        int lo;
        int hi;
    };

    Region() = default;
    explicit Region(std::vector<GridPoint> points);
    //! Region from contiguous column ranges starting at x0.
    Region(int x0, std::span<const std::pair<int, int>> ranges);

    [[nodiscard]] std::span<const GridPoint> points() const noexcept { return pts_; }
    [[nodiscard]] std::size_t size() const noexcept { return pts_.size(); }
    [[nodiscard]] bool empty() const noexcept { return pts_.empty(); }
    [[nodiscard]] bool contains(GridPoint p) const noexcept;
    [[nodiscard]] bool subset_of(const Region& other) const noexcept;

    //! Column ranges when every occupied column is contiguous and the occupied
    //! columns are consecutive.
    [[nodiscard]] std::optional<std::vector<Column>> columns() const;

    //! 4-connected.
    [[nodiscard]] bool connected() const;
    //! Nonempty, connected and order-convex: u <= v <= w with u, w inside
    //! implies v inside.
    [[nodiscard]] bool is_interval() const;

    [[nodiscard]] std::vector<GridPoint> minimal_points() const;
    [[nodiscard]] std::vector<GridPoint> maximal_points() const;

    friend bool operator==(const Region&, const Region&) = default;

  private:
    std::vector<GridPoint> pts_;
};

[[nodiscard]] Region worm_region(const DiscreteWorm& w);

//! Whether the unclipped squares reach x < 0 or y < 0. Every simplex value is
//! >= 0, so the module vanishes there and the rank over such a worm is 0.
[[nodiscard]] bool worm_leaves_below(const DiscreteWorm& w);

//! Whether w1 has width no larger than w2. Requires equal centre, l and grid.
[[nodiscard]] bool worm_nested(const DiscreteWorm& w1, const DiscreteWorm& w2);

enum class Direction { Up, Down };

//! Walk along the boundary of a region. directions[i] says whether
//! points[i + 1] is above (Up) or below (Down) points[i] in the product order.
struct BoundaryPath {
    std::vector<GridPoint> points;
    std::vector<Direction> directions;
};

//! Boundary walk minus the rightmost vertical and the bottommost horizontal
//! edge: from the bottom-left end of the bottom edge, up the lower staircase,
//! up the left edge, along the top edge and down the upper staircase to the
//! top of the right edge. Unit steps only. Starts at a minimal and ends at a
//! maximal point of the region.
[[nodiscard]] BoundaryPath boundary_path(const DiscreteWorm& w);

//! Same walk for any region whose columns are contiguous with non-increasing
//! lower and upper ends (rectangles, worms). Throws InvalidArgument otherwise
//! or when the region is empty.
[[nodiscard]] BoundaryPath boundary_path(const Region& region);

}  // namespace gril
