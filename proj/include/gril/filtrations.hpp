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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gril/complex.hpp"

namespace gril {

//! Simple undirected graph on vertices 0..n-1.
struct AttributedGraph {
    std::size_t n = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;  // u < v, no repeats
    std::vector<double> attributes;                    // empty or size n
    std::optional<int> label;

    //! Normalizes edge orientation, drops duplicates; throws InvalidArgument
    //! on self loops or out-of-range endpoints.
    void canonicalize();
    [[nodiscard]] std::vector<std::size_t> degrees() const;
};

//! Vertices in id order, then the edges in list order.
[[nodiscard]] SimplicialComplex graph_complex(const AttributedGraph& g);

//! Heat kernel signature on the symmetric normalized Laplacian. An isolated
//! vertex has a zero Laplacian row.
[[nodiscard]] std::vector<double> hks(const AttributedGraph& g, double t = 10.0);

//! 4 - deg(u) - deg(v) per edge, in edge-list order.
[[nodiscard]] std::vector<double> forman_ricci(const AttributedGraph& g);

//! Edge curvature min-max scaled to [0, 1]; 0 when all edges agree.
[[nodiscard]] std::vector<double> normalized_curvature(const AttributedGraph& g);

//! (lower-star HKS, scaled curvature on edges and 0 on vertices), normalized
//! and snapped.
[[nodiscard]] BiFiltration hks_rc_bifiltration(const AttributedGraph& g, const GridSpec& grid, double t = 10.0);

enum class Traversal { T1, T2 };

//! Two circulant graphs (offsets 1 and 2) joined by random cross edges
//! between the upper half of one and the lower half of the other. The label
//! is 0 for T1 and 1 for T2.
[[nodiscard]] AttributedGraph hourglass_generate(std::size_t n1, std::size_t n2, Traversal traversal,
                                                 std::uint64_t seed);

//! HourGlass[a,b]: count graphs with both halves sized uniformly in [a, b],
//! alternating T1 and T2 starting with T1.
[[nodiscard]] std::vector<AttributedGraph> hourglass_dataset(std::size_t a, std::size_t b, std::size_t count,
                                                             std::uint64_t seed);

//! (attribute, scaled curvature) with lower-star first coordinate.
[[nodiscard]] BiFiltration hourglass_bifiltration(const AttributedGraph& g, const GridSpec& grid);

using PointCloud = std::vector<std::array<double, 2>>;

//! Vertices (1 - exp(-mean distance to the alpha nearest neighbours), 0);
//! Rips edges up to r_max with second value 1 - exp(-length); Rips triangles
//! take the componentwise max of their edges.
[[nodiscard]] BiFiltration knn_density_bifiltration(const PointCloud& pts, std::size_t alpha, double r_max,
                                                    const GridSpec& grid);

}  // namespace gril
