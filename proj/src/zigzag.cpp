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

// Zigzag barcodes through the up-down reduction.
//
// The simplex-wise filtration F (closed off with deletions so it ends empty)
// is rearranged into U: all insertions in F's order, then all deletions in
// F's order. U is encoded as an ordinary filtration by coning: the insertions
// followed by the cones w*s over deleted simplices in reverse deletion order,
// with a cone apex w first. One standard reduction of that boundary matrix
// gives every bar of U, and each U bar maps back to exactly one bar of F:
//
//   both ends among insertions:       same dimension, same simplices
//   both ends among cones (relative):  dimension - 1, deletion endpoints
//   born at insertion, dies at cone:   if the insertion precedes the deletion
//                                      in F the bar keeps its dimension,
//                                      otherwise it flips to an open-open bar
//                                      one dimension lower.
//
// Bars of F are finally restricted to the batch boundaries of the input.

#include "gril/zigzag.hpp"

#include <algorithm>
#include <iterator>
#include <unordered_map>

namespace gril {

std::vector<Bar> Barcode::of_dim(int dim) const {
    std::vector<Bar> out;
    std::copy_if(bars.begin(), bars.end(), std::back_inserter(out), [dim](const Bar& b) { return b.dim == dim; });
    return out;
}

namespace {

using Col = std::vector<std::uint32_t>;

struct FlatFiltration {
    // Columns 1..n: boundary of the k-th insertion in terms of insertion ids.
    std::vector<Col> insert_boundary;
    std::vector<int> insert_dim;
    std::vector<std::size_t> insert_pos;  // F op index of insertion k (0-based k)
    std::vector<std::uint32_t> delete_id;  // insertion id removed by deletion k
    std::vector<std::size_t> delete_pos;   // F op index of deletion k
    std::vector<std::size_t> batch_end;    // F position after each input batch
};

FlatFiltration flatten(const ZigzagFiltration& zf) {
    FlatFiltration out;
    std::unordered_map<Simplex, std::uint32_t, SimplexHash> live;   // simplex -> insertion id (1-based)
    std::unordered_map<Simplex, std::uint32_t, SimplexHash> cofaces;  // live coface count
    std::size_t op = 0;

    auto do_insert = [&](const Simplex& s, std::size_t step) {
        if (live.contains(s)) throw ZigzagOrderError(step, "insert of present simplex " + s.to_string());
        Col bd;
        for (const auto& f : s.facets()) {
            auto it = live.find(f);
            if (it == live.end()) {
                throw ZigzagOrderError(step, "insert of " + s.to_string() + " before its face " + f.to_string());
            }
            bd.push_back(it->second);
            ++cofaces[f];
        }
        std::sort(bd.begin(), bd.end());
        auto id = static_cast<std::uint32_t>(out.insert_boundary.size() + 1);
        out.insert_boundary.push_back(std::move(bd));
        out.insert_dim.push_back(s.dimension());
        out.insert_pos.push_back(op++);
        live.emplace(s, id);
    };
    auto do_delete = [&](const Simplex& s, std::size_t step) {
        auto it = live.find(s);
        if (it == live.end()) throw ZigzagOrderError(step, "delete of absent simplex " + s.to_string());
        if (auto c = cofaces.find(s); c != cofaces.end() && c->second > 0) {
            throw ZigzagOrderError(step, "delete of " + s.to_string() + " while a coface is present");
        }
        for (const auto& f : s.facets()) --cofaces[f];
        cofaces.erase(s);
        out.delete_id.push_back(it->second);
        out.delete_pos.push_back(op++);
        live.erase(it);
    };

    for (std::size_t step = 0; step < zf.steps.size(); ++step) {
        const auto& st = zf.steps[step];
        for (const auto& s : st.simplices) {
            if (st.op == ZigzagOp::Insert) {
                do_insert(s, step);
            } else {
                do_delete(s, step);
            }
        }
        out.batch_end.push_back(op);
    }

    // Close off so the filtration ends empty: cofaces first.
    std::vector<std::pair<Simplex, std::uint32_t>> rest(live.begin(), live.end());
    std::sort(rest.begin(), rest.end(), [](const auto& a, const auto& b) {
        if (a.first.dimension() != b.first.dimension()) return a.first.dimension() > b.first.dimension();
        return a.second > b.second;
    });
    for (const auto& [s, id] : rest) do_delete(s, zf.steps.size());
    return out;
}

void add_into(Col& target, const Col& src, Col& scratch) {
    scratch.clear();
    std::set_symmetric_difference(target.begin(), target.end(), src.begin(), src.end(), std::back_inserter(scratch));
    target.swap(scratch);
}

struct Pair {
    std::uint32_t birth;
    std::uint32_t death;
};

// Standard reduction with clearing, highest dimension first.
std::vector<Pair> reduce(std::vector<Col>& cols, const std::vector<int>& dims) {
    const std::size_t n = cols.size();
    constexpr std::uint32_t kNone = ~std::uint32_t{0};
    std::vector<std::uint32_t> owner(n, kNone);  // row -> column whose low it is
    std::vector<bool> cleared(n, false);
    std::vector<Pair> pairs;
    int max_dim = 0;
    for (int d : dims) max_dim = std::max(max_dim, d);
    Col scratch;
    for (int dim = max_dim; dim >= 1; --dim) {
        for (std::uint32_t j = 0; j < n; ++j) {
            if (dims[j] != dim || cleared[j]) continue;
            Col& c = cols[j];
            while (!c.empty()) {
                std::uint32_t low = c.back();
                std::uint32_t k = owner[low];
                if (k == kNone) break;
                add_into(c, cols[k], scratch);
            }
            if (!c.empty()) {
                std::uint32_t low = c.back();
                owner[low] = j;
                pairs.push_back({low, j});
                cleared[low] = true;
                cols[low].clear();
            }
        }
    }
    return pairs;
}

}  // namespace

Barcode zigzag_barcode(const ZigzagFiltration& zf, int max_dim) {
    FlatFiltration flat = flatten(zf);
    const std::size_t n = flat.insert_boundary.size();

    // Column 0 is the cone apex, 1..n the insertions, n+1..2n the cones over
    // deleted simplices in reverse deletion order.
    std::vector<Col> cols(2 * n + 1);
    std::vector<int> dims(2 * n + 1, 0);
    std::vector<std::uint32_t> cone_of(n + 1, 0);  // insertion id -> cone column
    for (std::size_t k = 0; k < n; ++k) {
        cols[k + 1] = flat.insert_boundary[k];
        dims[k + 1] = flat.insert_dim[k];
    }
    for (std::size_t t = 1; t <= n; ++t) {
        const std::uint32_t sid = flat.delete_id[n - t];
        const auto col = static_cast<std::uint32_t>(n + t);
        Col bd{sid};
        if (cols[sid].empty() && dims[sid] == 0) {
            bd.push_back(0);
        } else {
            for (std::uint32_t f : flat.insert_boundary[sid - 1]) bd.push_back(cone_of[f]);
        }
        std::sort(bd.begin(), bd.end());
        cols[col] = std::move(bd);
        dims[col] = dims[sid] + 1;
        cone_of[sid] = col;
    }

    std::vector<Pair> pairs = reduce(cols, dims);

    // Bars of the simplex-wise filtration as closed position ranges [x, y],
    // position q being the complex after q operations.
    Barcode bc;
    const auto& ends = flat.batch_end;
    auto emit = [&](int dim, std::size_t x, std::size_t y) {
        if (dim < 0 || dim > max_dim || x > y) return;
        auto first = std::lower_bound(ends.begin(), ends.end(), x);
        auto last = std::upper_bound(ends.begin(), ends.end(), y);
        if (first >= last) return;
        bc.bars.push_back({dim, static_cast<std::size_t>(first - ends.begin()),
                           static_cast<std::size_t>(last - ends.begin())});
    };
    for (const Pair& p : pairs) {
        const std::size_t b = p.birth, c = p.death;
        const int dim = dims[b];
        if (c <= n) {
            emit(dim, flat.insert_pos[b - 1] + 1, flat.insert_pos[c - 1]);
        } else if (b > n) {
            const std::size_t j1 = n - (c - n) + 1;
            const std::size_t j2 = n - (b - n);
            emit(dim - 1, flat.delete_pos[j1 - 1] + 1, flat.delete_pos[j2]);
        } else {
            const std::size_t jd = n - (c - n) + 1;
            const std::size_t a = flat.insert_pos[b - 1];
            const std::size_t d = flat.delete_pos[jd - 1];
            if (a < d) {
                emit(dim, a + 1, d);
            } else {
                emit(dim - 1, d + 1, a);
            }
        }
    }
    std::sort(bc.bars.begin(), bc.bars.end());
    return bc;
}

std::size_t count_full_bars(const Barcode& bc, std::size_t n, int dim) {
    if (n == 0) return 0;
    return static_cast<std::size_t>(std::count_if(bc.bars.begin(), bc.bars.end(), [&](const Bar& b) {
        return b.dim == dim && b.birth == 0 && b.death == n;
    }));
}

}  // namespace gril
