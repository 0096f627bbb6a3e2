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

#include "gril/gf2.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <string>
#include <unordered_map>

#include "gril/error.hpp"
#include "gril/simd/bitops.hpp"

namespace gril::gf2 {

namespace {

void normalize(std::vector<Index>& v) {
    std::sort(v.begin(), v.end());
    std::vector<Index> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(v[i]);
        i = j;
    }
    v.swap(out);
}

}  // namespace

Gf2Vector::Gf2Vector(std::vector<Index> indices) : idx_(std::move(indices)) {
    if (!std::is_sorted(idx_.begin(), idx_.end()) ||
        std::adjacent_find(idx_.begin(), idx_.end()) != idx_.end()) {
        normalize(idx_);
    }
}

Gf2Vector::Gf2Vector(std::initializer_list<Index> indices) : Gf2Vector(std::vector<Index>(indices)) {}

bool Gf2Vector::contains(Index i) const noexcept { return std::binary_search(idx_.begin(), idx_.end(), i); }

std::optional<Index> Gf2Vector::low() const noexcept {
    if (idx_.empty()) return std::nullopt;
    return idx_.back();
}

Gf2Vector& Gf2Vector::operator+=(const Gf2Vector& other) {
    if (other.idx_.empty()) return *this;
    if (idx_.empty()) {
        idx_ = other.idx_;
        return *this;
    }
    std::vector<Index> out;
    out.reserve(idx_.size() + other.idx_.size());
    std::set_symmetric_difference(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                                  std::back_inserter(out));
    idx_.swap(out);
    return *this;
}

void Gf2Vector::flip(Index i) {
    auto it = std::lower_bound(idx_.begin(), idx_.end(), i);
    if (it != idx_.end() && *it == i) {
        idx_.erase(it);
    } else {
        idx_.insert(it, i);
    }
}

Gf2Matrix::Gf2Matrix(std::size_t nrows, std::size_t ncols) : nrows_(nrows), cols_(ncols) {}

Gf2Matrix::Gf2Matrix(std::size_t nrows, std::vector<Gf2Vector> columns) : nrows_(nrows), cols_(std::move(columns)) {
    for (std::size_t j = 0; j < cols_.size(); ++j) {
        if (auto l = cols_[j].low(); l && *l >= nrows_) {
            throw InvalidArgument("column " + std::to_string(j) + " has row index " + std::to_string(*l) +
                                  " >= nrows " + std::to_string(nrows_));
        }
    }
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    std::vector<Gf2Vector> cols;
    cols.reserve(n);
    for (std::size_t i = 0; i < n; ++i) cols.push_back(Gf2Vector::unit(static_cast<Index>(i)));
    return Gf2Matrix(n, std::move(cols));
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const { return cols_.at(c).contains(static_cast<Index>(r)); }

void Gf2Matrix::set_column(std::size_t j, Gf2Vector v) {
    if (auto l = v.low(); l && *l >= nrows_) throw InvalidArgument("row index out of range");
    cols_.at(j) = std::move(v);
}

Gf2Matrix Gf2Matrix::transpose() const {
    std::vector<std::vector<Index>> rows(nrows_);
    for (std::size_t j = 0; j < cols_.size(); ++j) {
        for (Index r : cols_[j].indices()) rows[r].push_back(static_cast<Index>(j));
    }
    std::vector<Gf2Vector> cols;
    cols.reserve(nrows_);
    for (auto& r : rows) cols.emplace_back(std::move(r));
    return Gf2Matrix(cols_.size(), std::move(cols));
}

Gf2Vector Gf2Matrix::apply(const Gf2Vector& v) const {
    Gf2Vector out;
    for (Index j : v.indices()) out += cols_.at(j);
    return out;
}

Gf2Matrix Gf2Matrix::multiply(const Gf2Matrix& rhs) const {
    if (rhs.nrows() != ncols()) throw InvalidArgument("dimension mismatch in multiply");
    std::vector<Gf2Vector> cols;
    cols.reserve(rhs.ncols());
    for (const auto& c : rhs.cols_) cols.push_back(apply(c));
    return Gf2Matrix(nrows_, std::move(cols));
}

std::size_t ColumnReduction::rank() const noexcept {
    return static_cast<std::size_t>(std::count_if(pivot.begin(), pivot.end(), [](const auto& p) { return p.has_value(); }));
}

ColumnReduction column_reduce(const Gf2Matrix& m, bool track_transform) {
    ColumnReduction out;
    std::vector<Gf2Vector> cols(m.columns().begin(), m.columns().end());
    out.pivot.assign(cols.size(), std::nullopt);
    if (track_transform) {
        out.transform.reserve(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) out.transform.push_back(Gf2Vector::unit(static_cast<Index>(j)));
    }
    std::unordered_map<Index, std::size_t> owner;  // pivot row -> column
    for (std::size_t j = 0; j < cols.size(); ++j) {
        while (auto l = cols[j].low()) {
            auto it = owner.find(*l);
            if (it == owner.end()) {
                owner.emplace(*l, j);
                out.pivot[j] = *l;
                break;
            }
            cols[j] += cols[it->second];
            if (track_transform) out.transform[j] += out.transform[it->second];
        }
    }
    out.reduced = Gf2Matrix(m.nrows(), std::move(cols));
    return out;
}

std::size_t rank_sparse(const Gf2Matrix& m) { return column_reduce(m).rank(); }

std::size_t rank_dense(const Gf2Matrix& m) { return BitMatrix::from_columns(m).rank(); }

std::size_t rank(const Gf2Matrix& m) {
    // Dense elimination wins on small or fairly full blocks.
    if (m.ncols() < 64 || m.nrows() * m.ncols() <= (std::size_t{1} << 20)) return rank_dense(m);
    return rank_sparse(m);
}

std::optional<std::vector<std::size_t>> in_span(std::span<const Gf2Vector> basis, const Gf2Vector& target) {
    struct Entry {
        Gf2Vector vec;
        Gf2Vector combo;  // over basis indices
    };
    std::unordered_map<Index, Entry> by_low;
    auto reduce = [&](Gf2Vector v, Gf2Vector combo) -> Entry {
        while (auto l = v.low()) {
            auto it = by_low.find(*l);
            if (it == by_low.end()) break;
            v += it->second.vec;
            combo += it->second.combo;
        }
        return Entry{std::move(v), std::move(combo)};
    };
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Entry e = reduce(basis[i], Gf2Vector::unit(static_cast<Index>(i)));
        if (auto l = e.vec.low()) by_low.emplace(*l, std::move(e));
    }
    Entry t = reduce(target, Gf2Vector{});
    if (!t.vec.empty()) return std::nullopt;
    std::vector<std::size_t> out(t.combo.indices().begin(), t.combo.indices().end());
    return out;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

BitMatrix BitMatrix::from_columns(const Gf2Matrix& m) {
    // Row r of the result is column r of m; rank is transpose-invariant.
    BitMatrix out(m.ncols(), m.nrows());
    for (std::size_t j = 0; j < m.ncols(); ++j) {
        for (Index r : m.column(j).indices()) out.set(j, r);
    }
    return out;
}

std::vector<std::size_t> BitMatrix::reduce_rows() {
    const auto& k = simd::kernels();
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols_ && next < rows_; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        std::size_t r = next;
        while (r < rows_ && (data_[r * wpr_ + w] & mask) == 0) ++r;
        if (r == rows_) continue;
        if (r != next) {
            std::swap_ranges(row(r), row(r) + wpr_, row(next));
        }
        const std::uint64_t* prow = row(next) + w;
        const std::size_t span = wpr_ - w;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i != next && (data_[i * wpr_ + w] & mask) != 0) {
                k.xor_into(row(i) + w, prow, span);
            }
        }
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

std::size_t BitMatrix::rank() const {
    // Forward elimination only; cheaper than the full reduced form.
    BitMatrix work = *this;
    const auto& k = simd::kernels();
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols_ && next < rows_; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        std::size_t r = next;
        while (r < rows_ && (work.data_[r * wpr_ + w] & mask) == 0) ++r;
        if (r == rows_) continue;
        if (r != next) std::swap_ranges(work.row(r), work.row(r) + wpr_, work.row(next));
        const std::uint64_t* prow = work.row(next) + w;
        for (std::size_t i = next + 1; i < rows_; ++i) {
            if ((work.data_[i * wpr_ + w] & mask) != 0) k.xor_into(work.row(i) + w, prow, wpr_ - w);
        }
        ++next;
    }
    return next;
}

BitMatrix BitMatrix::nullspace() const {
    BitMatrix work = *this;
    std::vector<std::size_t> pivots = work.reduce_rows();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::size_t nfree = cols_ - pivots.size();
    BitMatrix out(nfree, cols_);
    std::size_t k = 0;
    for (std::size_t fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        out.set(k, fc);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (work.get(i, fc)) out.set(k, pivots[i]);
        }
        ++k;
    }
    return out;
}

}  // namespace gril::gf2
