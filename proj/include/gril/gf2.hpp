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

// Linear algebra over the two-element field.
//
// Sparse vectors are sorted index sets; a sparse matrix is a list of such
// columns. BitMatrix is the dense row-major counterpart used for small blocks
// and for the limit/colimit computations, and is where the SIMD kernels run.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace gril::gf2 {

using Index = std::uint32_t;

class Gf2Vector {
  public:
    Gf2Vector() = default;
    //! Indices may be unsorted; repeated indices cancel in pairs.
    explicit Gf2Vector(std::vector<Index> indices);
    Gf2Vector(std::initializer_list<Index> indices);

    static Gf2Vector unit(Index i) { return Gf2Vector(std::vector<Index>{i}); }

    [[nodiscard]] bool empty() const noexcept { return idx_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return idx_.size(); }
    [[nodiscard]] std::span<const Index> indices() const noexcept { return idx_; }
    [[nodiscard]] bool contains(Index i) const noexcept;
    //! Largest index with coefficient 1.
    [[nodiscard]] std::optional<Index> low() const noexcept;

    //! In-place addition (symmetric difference).
    Gf2Vector& operator+=(const Gf2Vector& other);
    friend Gf2Vector operator+(Gf2Vector a, const Gf2Vector& b) { return a += b; }
    void flip(Index i);

    friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

  private:
    std::vector<Index> idx_;
};

class Gf2Matrix {
  public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t nrows, std::size_t ncols);
    //! Throws InvalidArgument if a row index is out of range.
    Gf2Matrix(std::size_t nrows, std::vector<Gf2Vector> columns);

    static Gf2Matrix identity(std::size_t n);

    [[nodiscard]] std::size_t nrows() const noexcept { return nrows_; }
    [[nodiscard]] std::size_t ncols() const noexcept { return cols_.size(); }
    [[nodiscard]] const Gf2Vector& column(std::size_t j) const { return cols_.at(j); }
    [[nodiscard]] std::span<const Gf2Vector> columns() const noexcept { return cols_; }
    [[nodiscard]] bool get(std::size_t r, std::size_t c) const;

    void set_column(std::size_t j, Gf2Vector v);

    [[nodiscard]] Gf2Matrix transpose() const;
    //! Matrix product this * rhs; inner dimensions must agree.
    [[nodiscard]] Gf2Matrix multiply(const Gf2Matrix& rhs) const;
    //! this * v for a vector over the column index space.
    [[nodiscard]] Gf2Vector apply(const Gf2Vector& v) const;

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

  private:
    std::size_t nrows_ = 0;
    std::vector<Gf2Vector> cols_;
};

struct ColumnReduction {
    Gf2Matrix reduced;
    //! pivot[j] = lowest-one row of reduced column j, empty for zero columns.
    std::vector<std::optional<Index>> pivot;
    //! transform[j] = set of original columns summing to reduced column j.
    //! Filled only when requested.
    std::vector<Gf2Vector> transform;

    [[nodiscard]] std::size_t rank() const noexcept;
};

//! Left-to-right reduction: a column is cleared by adding earlier reduced
//! columns until its lowest one is unique or it vanishes.
[[nodiscard]] ColumnReduction column_reduce(const Gf2Matrix& m, bool track_transform = false);

[[nodiscard]] std::size_t rank(const Gf2Matrix& m);
[[nodiscard]] std::size_t rank_sparse(const Gf2Matrix& m);
[[nodiscard]] std::size_t rank_dense(const Gf2Matrix& m);

//! Indices S with sum of basis[S] == target, or nullopt when target is not in
//! the span. S is sorted.
[[nodiscard]] std::optional<std::vector<std::size_t>> in_span(std::span<const Gf2Vector> basis,
                                                              const Gf2Vector& target);

//! Dense row-major bit matrix.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix from_columns(const Gf2Matrix& m);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t words_per_row() const noexcept { return wpr_; }

    [[nodiscard]] bool get(std::size_t r, std::size_t c) const noexcept {
        return (data_[r * wpr_ + c / 64] >> (c % 64)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool v = true) noexcept {
        std::uint64_t mask = std::uint64_t{1} << (c % 64);
        auto& w = data_[r * wpr_ + c / 64];
        w = v ? (w | mask) : (w & ~mask);
    }
    void flip(std::size_t r, std::size_t c) noexcept { data_[r * wpr_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

    [[nodiscard]] std::uint64_t* row(std::size_t r) noexcept { return data_.data() + r * wpr_; }
    [[nodiscard]] const std::uint64_t* row(std::size_t r) const noexcept { return data_.data() + r * wpr_; }

    //! Brings the matrix to reduced row echelon form in place and returns the
    //! pivot column of each nonzero row (in row order).
    std::vector<std::size_t> reduce_rows();

    [[nodiscard]] std::size_t rank() const;
    //! Basis of {x : A x = 0}, as dense column-space vectors (rows of result).
    [[nodiscard]] BitMatrix nullspace() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

}  // namespace gril::gf2
