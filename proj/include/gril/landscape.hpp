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
#include <optional>
#include <vector>

#include "gril/complex.hpp"

namespace gril {

struct GrilQuery {
    GridPoint center;
    int k = 1;
    int ell = 1;
    int dim = 0;

    //! Throws InvalidArgument on k < 1, ell < 1, dim < 0 or an off-grid centre.
    void check(const GridSpec& grid) const;
};

//! Largest width d in {1..M} grid steps with rank >= k over the worm, 0 if
//! none; found by binary search.
[[nodiscard]] int compute_gril_steps(const BiFiltration& f, const GrilQuery& q);
//! Same in real units (d * rho).
[[nodiscard]] double compute_gril(const BiFiltration& f, const GrilQuery& q);

//! Centres {(s*a, s*b) : 0 <= s*a, s*b <= M}, row-major with the second
//! coordinate as the row.
struct CenterGrid {
    std::vector<GridPoint> points;
    int width = 0;   // number of distinct first coordinates
    int height = 0;  // number of distinct second coordinates
};
[[nodiscard]] CenterGrid center_subgrid(const GridSpec& grid, int step);

//! GRIL values for all centres, k = 1..kmax, the listed ell and homology
//! dimensions, stored as integer widths.
class GrilVector {
  public:
    GrilVector() = default;
    GrilVector(GridSpec grid, std::vector<GridPoint> centers, int kmax, std::vector<int> ells, std::vector<int> dims);

    [[nodiscard]] const GridSpec& grid() const noexcept { return grid_; }
    [[nodiscard]] const std::vector<GridPoint>& centers() const noexcept { return centers_; }
    [[nodiscard]] int kmax() const noexcept { return kmax_; }
    [[nodiscard]] const std::vector<int>& ells() const noexcept { return ells_; }
    [[nodiscard]] const std::vector<int>& dims() const noexcept { return dims_; }
    [[nodiscard]] std::size_t size() const noexcept { return steps_.size(); }

    //! Flat position: dim, then centre, then k, then ell.
    [[nodiscard]] std::size_t flat_index(std::size_t dim_idx, std::size_t center_idx, int k, std::size_t ell_idx) const;
    [[nodiscard]] int steps(std::size_t dim_idx, std::size_t center_idx, int k, std::size_t ell_idx) const {
        return steps_.at(flat_index(dim_idx, center_idx, k, ell_idx));
    }
    void set_steps(std::size_t dim_idx, std::size_t center_idx, int k, std::size_t ell_idx, int d) {
        steps_.at(flat_index(dim_idx, center_idx, k, ell_idx)) = d;
    }
    [[nodiscard]] double value(std::size_t dim_idx, std::size_t center_idx, int k, std::size_t ell_idx) const {
        return steps(dim_idx, center_idx, k, ell_idx) * grid_.rho();
    }
    [[nodiscard]] const std::vector<int>& flat_steps() const noexcept { return steps_; }

    [[nodiscard]] std::optional<std::size_t> center_index(GridPoint p) const;
    [[nodiscard]] std::optional<std::size_t> ell_index(int ell) const;
    [[nodiscard]] std::optional<std::size_t> dim_index(int dim) const;
    //! Same grid, centres, kmax, ells and dims.
    [[nodiscard]] bool same_index_set(const GrilVector& other) const;

    friend bool operator==(const GrilVector&, const GrilVector&) = default;

  private:
    GridSpec grid_;
    std::vector<GridPoint> centers_;
    int kmax_ = 0;
    std::vector<int> ells_;
    std::vector<int> dims_;
    std::vector<int> steps_;
};

struct GrilVectorOptions {
    int kmax = 5;
    std::vector<int> ells{2};
    std::vector<int> dims{0, 1};
    unsigned workers = 1;
};

//! All entries, with the k-descending search bound and per-width rank
//! memoization shared across k and dimensions. Results do not depend on the
//! worker count.
[[nodiscard]] GrilVector compute_gril_vector(const BiFiltration& f, std::vector<GridPoint> centers,
                                             const GrilVectorOptions& opts);

//! Largest k with value >= width; 0 if none.
[[nodiscard]] std::size_t reconstruct_rank(const GrilVector& v, GridPoint p, int width_steps, int ell, int dim);

//! Sup-norm distance; throws InvalidArgument if the index sets differ.
[[nodiscard]] double gril_distance(const GrilVector& a, const GrilVector& b);

//! Worker count from GRIL_WORKERS, else 1.
[[nodiscard]] unsigned default_workers();

}  // namespace gril
