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

#include "gril/complex.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gril/error.hpp"

namespace gril {

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::span<const VertexId>(vertices.begin(), vertices.size())) {}

Simplex::Simplex(std::span<const VertexId> vertices) {
    if (vertices.empty() || vertices.size() > kMaxVertices) {
        throw InvalidArgument("simplex must have 1 to 3 vertices, got " + std::to_string(vertices.size()));
    }
    size_ = static_cast<std::uint8_t>(vertices.size());
    std::copy(vertices.begin(), vertices.end(), v_.begin());
    std::sort(v_.begin(), v_.begin() + size_);
    if (std::adjacent_find(v_.begin(), v_.begin() + size_) != v_.begin() + size_) {
        throw InvalidArgument("simplex has repeated vertex");
    }
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (size_ <= 1) return out;
    out.reserve(size_);
    std::array<VertexId, kMaxVertices> buf{};
    for (std::size_t skip = 0; skip < size_; ++skip) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < size_; ++i) {
            if (i != skip) buf[k++] = v_[i];
        }
        out.emplace_back(std::span<const VertexId>(buf.data(), k));
    }
    return out;
}

bool Simplex::is_face_of(const Simplex& other) const noexcept {
    return std::includes(other.v_.begin(), other.v_.begin() + other.size_, v_.begin(), v_.begin() + size_);
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.v_.begin(), a.v_.begin() + a.size_, b.v_.begin(),
                                                  b.v_.begin() + b.size_);
}

std::string Simplex::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < size_; ++i) {
        if (i) out += ',';
        out += std::to_string(v_[i]);
    }
    return out + "}";
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    std::size_t h = static_cast<std::size_t>(s.dimension() + 1);
    for (VertexId v : s.vertices()) {
        h ^= std::hash<VertexId>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

SimplicialComplex SimplicialComplex::closure(std::span<const Simplex> simplices) {
    std::set<Simplex> all;
    std::vector<Simplex> stack(simplices.begin(), simplices.end());
    while (!stack.empty()) {
        Simplex s = stack.back();
        stack.pop_back();
        if (!all.insert(s).second) continue;
        for (auto& f : s.facets()) stack.push_back(f);
    }
    SimplicialComplex out;
    for (const auto& s : all) out.add(s);  // std::set order is dimension-major
    return out;
}

std::size_t SimplicialComplex::add(const Simplex& s) {
    if (index_.contains(s)) throw InvalidArgument("simplex " + s.to_string() + " already present");
    std::vector<std::uint32_t> bd;
    for (const auto& f : s.facets()) {
        auto it = index_.find(f);
        if (it == index_.end()) {
            throw InvalidArgument("face " + f.to_string() + " of " + s.to_string() + " is missing");
        }
        bd.push_back(static_cast<std::uint32_t>(it->second));
    }
    std::sort(bd.begin(), bd.end());
    std::size_t idx = simplices_.size();
    simplices_.push_back(s);
    boundary_.push_back(std::move(bd));
    index_.emplace(s, idx);
    return idx;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int SimplicialComplex::max_dimension() const noexcept {
    int d = -1;
    for (const auto& s : simplices_) d = std::max(d, s.dimension());
    return d;
}

std::size_t SimplicialComplex::vertex_bound() const noexcept {
    std::size_t b = 0;
    for (const auto& s : simplices_) {
        if (s.dimension() == 0) b = std::max<std::size_t>(b, s[0] + 1);
    }
    return b;
}

void GridSpec::check() const {
    if (M < 1) throw InvalidArgument("grid subdivision M must be >= 1, got " + std::to_string(M));
}

BiFiltration::BiFiltration(SimplicialComplex complex, GridSpec grid, std::vector<GridPoint> values)
    : complex_(std::move(complex)), grid_(grid), values_(std::move(values)) {
    grid_.check();
    if (values_.size() != complex_.size()) {
        throw InvalidArgument("bifiltration has " + std::to_string(values_.size()) + " values for " +
                              std::to_string(complex_.size()) + " simplices");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!on_grid(values_[i], grid_)) {
            throw InvalidArgument("value of simplex " + complex_.simplex(i).to_string() + " is off the grid");
        }
    }
    if (auto v = validate(complex_, std::span<const GridPoint>(values_)); !v.empty()) {
        throw ValidationError("not monotone: " + complex_.simplex(v.front().face).to_string() + " > " +
                              complex_.simplex(v.front().coface).to_string());
    }
}

PreBiFiltration lower_star(std::span<const Value2> vertex_values, const SimplicialComplex& complex) {
    PreBiFiltration out{complex, {}};
    out.values.reserve(complex.size());
    for (const auto& s : complex.simplices()) {
        Value2 v{-HUGE_VAL, -HUGE_VAL};
        for (VertexId x : s.vertices()) {
            if (x >= vertex_values.size()) {
                throw InvalidArgument("vertex " + std::to_string(x) + " has no value");
            }
            v[0] = std::max(v[0], vertex_values[x][0]);
            v[1] = std::max(v[1], vertex_values[x][1]);
        }
        out.values.push_back(v);
    }
    return out;
}

int snap_up(double x, const GridSpec& grid) {
    // Tolerance keeps exact grid values (0.5 * 10 = 5.000000001) on their point.
    double scaled = x * grid.M;
    int i = static_cast<int>(std::ceil(scaled - 1e-9));
    return std::clamp(i, 0, grid.M);
}

BiFiltration snap(const PreBiFiltration& pre, const GridSpec& grid) {
    grid.check();
    std::vector<GridPoint> vals;
    vals.reserve(pre.values.size());
    for (const auto& v : pre.values) vals.push_back({snap_up(v[0], grid), snap_up(v[1], grid)});
    return BiFiltration(pre.complex, grid, std::move(vals));
}

BiFiltration normalize_and_snap(const PreBiFiltration& pre, const GridSpec& grid) {
    if (pre.values.size() != pre.complex.size()) throw InvalidArgument("value count does not match complex");
    if (pre.values.empty()) throw InvalidArgument("cannot normalize an empty bifiltration");
    PreBiFiltration scaled{pre.complex, pre.values};
    for (int c = 0; c < 2; ++c) {
        double lo = HUGE_VAL, hi = -HUGE_VAL;
        for (const auto& v : pre.values) {
            lo = std::min(lo, v[c]);
            hi = std::max(hi, v[c]);
        }
        for (auto& v : scaled.values) {
            v[c] = hi > lo ? (v[c] - lo) / (hi - lo) : 0.0;
        }
    }
    return snap(scaled, grid);
}

namespace {

template <class V, class Leq>
std::vector<Violation> validate_impl(const SimplicialComplex& complex, std::span<const V> values, Leq le) {
    if (values.size() != complex.size()) throw InvalidArgument("value count does not match complex");
    std::vector<Violation> out;
    for (std::size_t i = 0; i < complex.size(); ++i) {
        for (std::uint32_t f : complex.boundary(i)) {
            if (!le(values[f], values[i])) out.push_back({f, i});
        }
    }
    return out;
}

}  // namespace

std::vector<Violation> validate(const SimplicialComplex& complex, std::span<const GridPoint> values) {
    return validate_impl(complex, values, [](GridPoint a, GridPoint b) { return leq(a, b); });
}

std::vector<Violation> validate(const SimplicialComplex& complex, std::span<const Value2> values) {
    return validate_impl(complex, values, [](const Value2& a, const Value2& b) { return a[0] <= b[0] && a[1] <= b[1]; });
}

std::vector<Violation> validate(const BiFiltration& f) { return validate(f.complex(), f.values()); }

std::vector<std::size_t> sublevel_indices(const BiFiltration& f, GridPoint u) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (leq(f.value(i), u)) out.push_back(i);
    }
    return out;
}

SimplicialComplex subcomplex_at(const BiFiltration& f, GridPoint u) {
    SimplicialComplex out;
    for (std::size_t i : sublevel_indices(f, u)) out.add(f.complex().simplex(i));
    return out;
}

}  // namespace gril
