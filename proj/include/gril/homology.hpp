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
#include <unordered_map>
#include <vector>

#include "gril/complex.hpp"
#include "gril/gf2.hpp"

namespace gril {

//! H_dim of a sublevel complex over GF(2), with chains indexed by the global
//! simplex index of the bifiltration.
class HomologySpace {
  public:
    HomologySpace() = default;
    HomologySpace(const BiFiltration& f, GridPoint u, int dim);

    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] GridPoint point() const noexcept { return point_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return basis_.size(); }
    //! Cycle representatives of a basis of cycles modulo boundaries.
    [[nodiscard]] const std::vector<gf2::Gf2Vector>& basis() const noexcept { return basis_; }

    //! Coordinates of a cycle of this complex in the basis. Throws
    //! InvalidArgument if the chain is not a cycle here.
    [[nodiscard]] gf2::Gf2Vector coordinates(const gf2::Gf2Vector& cycle) const;

  private:
    struct Reducer {
        gf2::Gf2Vector vec;
        int basis_index;  // -1 for a boundary
    };

    int dim_ = 0;
    GridPoint point_{};
    std::vector<gf2::Gf2Vector> basis_;
    std::unordered_map<gf2::Index, Reducer> by_low_;
};

[[nodiscard]] HomologySpace homology_space(const BiFiltration& f, GridPoint u, int dim);

//! Matrix of H_dim(X_u) -> H_dim(X_v) in the two spaces' bases.
[[nodiscard]] gf2::Gf2Matrix induced_map(const HomologySpace& from, const HomologySpace& to);
//! Throws InvalidArgument unless u <= v.
[[nodiscard]] gf2::Gf2Matrix induced_map(const BiFiltration& f, GridPoint u, GridPoint v, int dim);

//! Rank of H_dim(X_u) -> H_dim(X_v); throws InvalidArgument unless u <= v.
[[nodiscard]] std::size_t rectangle_rank(const BiFiltration& f, GridPoint u, GridPoint v, int dim);

}  // namespace gril
