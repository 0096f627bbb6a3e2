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

#include "gril/homology.hpp"

#include <unordered_set>

#include "gril/error.hpp"

namespace gril {

using gf2::Gf2Matrix;
using gf2::Gf2Vector;
using gf2::Index;

HomologySpace::HomologySpace(const BiFiltration& f, GridPoint u, int dim) : dim_(dim), point_(u) {
    if (dim < 0) throw InvalidArgument("homology dimension must be >= 0");
    const auto& cx = f.complex();
    std::vector<Index> chains;  // dim-simplices of X_u
    std::vector<Index> cochains;  // (dim+1)-simplices of X_u
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!leq(f.value(i), u)) continue;
        int d = cx.simplex(i).dimension();
        if (d == dim) chains.push_back(static_cast<Index>(i));
        if (d == dim + 1) cochains.push_back(static_cast<Index>(i));
    }

    // Cycles: kernel of the boundary on dim-chains, one per zero column, with
    // lowest simplex equal to the column's own simplex.
    std::vector<Gf2Vector> cycles;
    std::vector<Index> cycle_low;
    if (dim == 0) {
        for (Index c : chains) {
            cycles.push_back(Gf2Vector::unit(c));
            cycle_low.push_back(c);
        }
    } else {
        std::vector<Gf2Vector> cols;
        cols.reserve(chains.size());
        for (Index c : chains) {
            auto bd = cx.boundary(c);
            cols.emplace_back(std::vector<Index>(bd.begin(), bd.end()));
        }
        auto red = gf2::column_reduce(Gf2Matrix(f.size(), std::move(cols)), true);
        for (std::size_t j = 0; j < chains.size(); ++j) {
            if (red.pivot[j]) continue;
            std::vector<Index> z;
            for (Index k : red.transform[j].indices()) z.push_back(chains[k]);
            cycles.emplace_back(std::move(z));
            cycle_low.push_back(chains[j]);
        }
    }

    std::vector<Gf2Vector> bcols;
    bcols.reserve(cochains.size());
    for (Index c : cochains) {
        auto bd = cx.boundary(c);
        bcols.emplace_back(std::vector<Index>(bd.begin(), bd.end()));
    }
    auto bred = gf2::column_reduce(Gf2Matrix(f.size(), std::move(bcols)));
    for (std::size_t j = 0; j < cochains.size(); ++j) {
        if (auto l = bred.pivot[j]) by_low_.emplace(*l, Reducer{bred.reduced.column(j), -1});
    }
    for (std::size_t k = 0; k < cycles.size(); ++k) {
        if (by_low_.contains(cycle_low[k])) continue;
        by_low_.emplace(cycle_low[k], Reducer{cycles[k], static_cast<int>(basis_.size())});
        basis_.push_back(cycles[k]);
    }
}

Gf2Vector HomologySpace::coordinates(const Gf2Vector& cycle) const {
    Gf2Vector z = cycle;
    std::vector<Index> coords;
    while (auto l = z.low()) {
        auto it = by_low_.find(*l);
        if (it == by_low_.end()) throw InvalidArgument("chain is not a cycle of this complex");
        z += it->second.vec;
        if (it->second.basis_index >= 0) coords.push_back(static_cast<Index>(it->second.basis_index));
    }
    return Gf2Vector(std::move(coords));
}

HomologySpace homology_space(const BiFiltration& f, GridPoint u, int dim) { return HomologySpace(f, u, dim); }

Gf2Matrix induced_map(const HomologySpace& from, const HomologySpace& to) {
    if (from.dim() != to.dim()) throw InvalidArgument("induced_map across homology dimensions");
    if (!leq(from.point(), to.point())) throw InvalidArgument("induced_map needs u <= v");
    std::vector<Gf2Vector> cols;
    cols.reserve(from.dimension());
    for (const auto& z : from.basis()) cols.push_back(to.coordinates(z));
    return Gf2Matrix(to.dimension(), std::move(cols));
}

Gf2Matrix induced_map(const BiFiltration& f, GridPoint u, GridPoint v, int dim) {
    if (!leq(u, v)) throw InvalidArgument("induced_map needs u <= v");
    return induced_map(HomologySpace(f, u, dim), HomologySpace(f, v, dim));
}

std::size_t rectangle_rank(const BiFiltration& f, GridPoint u, GridPoint v, int dim) {
    return gf2::rank(induced_map(f, u, v, dim));
}

}  // namespace gril
