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

#include <cstddef>
#include <vector>

#include "gril/complex.hpp"
#include "gril/gf2.hpp"
#include "gril/homology.hpp"
#include "gril/worm.hpp"
#include "gril/zigzag.hpp"

namespace gril {

//! Grid point set that is connected and order-convex.
class IntervalRegion {
  public:
    //! Throws InvalidArgument if the set is empty, disconnected or not convex.
    explicit IntervalRegion(Region region);
    [[nodiscard]] const Region& region() const noexcept { return region_; }

  private:
    Region region_;
};

//! Homology of a bifiltration restricted to the grid points of an interval,
//! with the maps along unit steps.
class PosetDiagram {
  public:
    struct Edge {
        std::size_t from;
        std::size_t to;
        gf2::Gf2Matrix map;
    };

    PosetDiagram(const BiFiltration& f, const IntervalRegion& interval, int dim);

    [[nodiscard]] std::span<const GridPoint> points() const noexcept { return interval_.region().points(); }
    [[nodiscard]] const HomologySpace& space(std::size_t k) const { return spaces_.at(k); }
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
    [[nodiscard]] std::optional<std::size_t> index_of(GridPoint p) const;

    //! Composite of unit-step maps along a monotone lattice path from u to v
    //! (first along x, then along y). Requires u <= v, both in the interval and
    //! the path inside it.
    [[nodiscard]] gf2::Gf2Matrix composite(GridPoint u, GridPoint v) const;

  private:
    IntervalRegion interval_;
    std::vector<HomologySpace> spaces_;
    std::vector<Edge> edges_;
};

//! Zigzag of sublevel complexes along the path: the first step inserts
//! X_{points[0]}, each later step inserts (Up) or deletes (Down) the difference.
[[nodiscard]] ZigzagFiltration restrict_to_path(const BiFiltration& f, const BoundaryPath& path);

//! Generalized rank over the worm in dimensions 0..max_dim from one zigzag
//! barcode on the clipped region. Above the unit square the module is
//! constant, so clipping there changes nothing; a worm that reaches below it
//! has rank 0.
[[nodiscard]] std::vector<std::size_t> compute_ranks(const BiFiltration& f, const DiscreteWorm& w, int max_dim);
[[nodiscard]] std::size_t compute_rank(const BiFiltration& f, const DiscreteWorm& w, int dim);

//! Same, over any staircase region accepted by boundary_path(Region).
[[nodiscard]] std::size_t compute_rank(const BiFiltration& f, const Region& region, int dim);

//! Rank of the limit-to-colimit map of the diagram over the interval.
[[nodiscard]] std::size_t rank_oracle(const BiFiltration& f, const IntervalRegion& interval, int dim);
[[nodiscard]] std::size_t rank_oracle(const PosetDiagram& diagram);

}  // namespace gril
