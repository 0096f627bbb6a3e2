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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace gril {

using VertexId = std::uint32_t;

//! A simplex of dimension 0..2, stored as its sorted vertex ids.
class Simplex {
  public:
    static constexpr std::size_t kMaxVertices = 3;

    Simplex() = default;
    //! Vertices may come in any order; duplicates, empty input or more than
    //! three vertices throw InvalidArgument.
    Simplex(std::initializer_list<VertexId> vertices);
    explicit Simplex(std::span<const VertexId> vertices);

    [[nodiscard]] int dimension() const noexcept { return static_cast<int>(size_) - 1; }
    [[nodiscard]] std::span<const VertexId> vertices() const noexcept { return {v_.data(), size_}; }
    [[nodiscard]] VertexId operator[](std::size_t i) const noexcept { return v_[i]; }

    //! Codimension-one faces, empty for a vertex.
    [[nodiscard]] std::vector<Simplex> facets() const;
    [[nodiscard]] bool is_face_of(const Simplex& other) const noexcept;

    friend bool operator==(const Simplex& a, const Simplex& b) noexcept {
        return a.size_ == b.size_ && a.v_ == b.v_;
    }
    //! Dimension first, then lexicographic.
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept;

    [[nodiscard]] std::string to_string() const;

  private:
    std::array<VertexId, kMaxVertices> v_{};
    std::uint8_t size_ = 0;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

//! Face-closed set of simplices. Simplices are indexed in insertion order and
//! every face is inserted before its cofaces, so index order is a valid
//! filtration order.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    //! Smallest complex containing the given simplices, ordered by dimension
    //! then lexicographically.
    static SimplicialComplex closure(std::span<const Simplex> simplices);

    //! Adds a simplex whose facets are all present; returns its index.
    std::size_t add(const Simplex& s);

    [[nodiscard]] std::size_t size() const noexcept { return simplices_.size(); }
    [[nodiscard]] bool empty() const noexcept { return simplices_.empty(); }
    [[nodiscard]] const Simplex& simplex(std::size_t i) const { return simplices_.at(i); }
    [[nodiscard]] std::span<const Simplex> simplices() const noexcept { return simplices_; }
    [[nodiscard]] std::optional<std::size_t> index_of(const Simplex& s) const;
    [[nodiscard]] bool contains(const Simplex& s) const { return index_of(s).has_value(); }
    //! Indices of the codimension-one faces of simplex i.
    [[nodiscard]] std::span<const std::uint32_t> boundary(std::size_t i) const { return boundary_.at(i); }
    [[nodiscard]] int max_dimension() const noexcept;
    //! One more than the largest vertex id, 0 when empty.
    [[nodiscard]] std::size_t vertex_bound() const noexcept;

  private:
    std::vector<Simplex> simplices_;
    std::vector<std::vector<std::uint32_t>> boundary_;
    std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
};

//! Uniform grid {0, 1/M, ..., 1}^2.
struct GridSpec {
    int M = 1;

    [[nodiscard]] double rho() const noexcept { return 1.0 / static_cast<double>(M); }
    //! Throws InvalidArgument unless M >= 1.
    void check() const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

//! Point of the grid in integer coordinates; real value is (i/M, j/M).
struct GridPoint {
    int i = 0;
    int j = 0;

    friend bool operator==(const GridPoint&, const GridPoint&) = default;
    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;  // lexicographic, for containers
};

//! Product order on the plane.
[[nodiscard]] constexpr bool leq(GridPoint a, GridPoint b) noexcept { return a.i <= b.i && a.j <= b.j; }
[[nodiscard]] constexpr bool comparable(GridPoint a, GridPoint b) noexcept { return leq(a, b) || leq(b, a); }
[[nodiscard]] constexpr GridPoint join(GridPoint a, GridPoint b) noexcept {
    return {a.i > b.i ? a.i : b.i, a.j > b.j ? a.j : b.j};
}
[[nodiscard]] constexpr bool on_grid(GridPoint p, const GridSpec& g) noexcept {
    return p.i >= 0 && p.j >= 0 && p.i <= g.M && p.j <= g.M;
}

using Value2 = std::array<double, 2>;

//! Real-valued function on simplices before normalization and snapping.
struct PreBiFiltration {
    SimplicialComplex complex;
    std::vector<Value2> values;  // indexed like complex
};

//! A face pair (face, coface) whose values break monotonicity.
struct Violation {
    std::size_t face;
    std::size_t coface;
};

//! Monotone grid-valued function on a simplicial complex.
class BiFiltration {
  public:
    BiFiltration() = default;
    //! Throws ValidationError on a monotonicity violation and InvalidArgument
    //! on a size mismatch or off-grid value.
    BiFiltration(SimplicialComplex complex, GridSpec grid, std::vector<GridPoint> values);

    [[nodiscard]] const SimplicialComplex& complex() const noexcept { return complex_; }
    [[nodiscard]] const GridSpec& grid() const noexcept { return grid_; }
    [[nodiscard]] std::size_t size() const noexcept { return complex_.size(); }
    [[nodiscard]] GridPoint value(std::size_t i) const { return values_.at(i); }
    [[nodiscard]] std::span<const GridPoint> values() const noexcept { return values_; }

  private:
    SimplicialComplex complex_;
    GridSpec grid_;
    std::vector<GridPoint> values_;
};

//! Componentwise maximum of vertex values. vertex_values is indexed by vertex
//! id; throws InvalidArgument if a vertex has no value.
[[nodiscard]] PreBiFiltration lower_star(std::span<const Value2> vertex_values, const SimplicialComplex& complex);

//! Smallest grid index whose value is >= x (x in [0, 1]).
[[nodiscard]] int snap_up(double x, const GridSpec& grid);

//! Per-coordinate min-max rescaling to [0, 1] followed by rounding up to the
//! grid. A constant coordinate maps to 0.
[[nodiscard]] BiFiltration normalize_and_snap(const PreBiFiltration& pre, const GridSpec& grid);

//! Rounds up to the grid without rescaling; values must already lie in [0, 1].
[[nodiscard]] BiFiltration snap(const PreBiFiltration& pre, const GridSpec& grid);

[[nodiscard]] std::vector<Violation> validate(const SimplicialComplex& complex, std::span<const GridPoint> values);
[[nodiscard]] std::vector<Violation> validate(const SimplicialComplex& complex, std::span<const Value2> values);
[[nodiscard]] std::vector<Violation> validate(const BiFiltration& f);

//! Indices of simplices with value <= u, in increasing index order.
[[nodiscard]] std::vector<std::size_t> sublevel_indices(const BiFiltration& f, GridPoint u);
[[nodiscard]] SimplicialComplex subcomplex_at(const BiFiltration& f, GridPoint u);

}  // namespace gril
