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
#include "gril/error.hpp"

namespace gril {

enum class ZigzagOp { Insert, Delete };

//! One arrow of the zigzag. Insert batches list faces before cofaces, delete
//! batches cofaces before faces.
struct ZigzagStep {
    ZigzagOp op = ZigzagOp::Insert;
    std::vector<Simplex> simplices;
};

//! Sequence of batched insertions and deletions starting from the empty
//! complex. Position s is the complex after step s.
struct ZigzagFiltration {
    std::vector<ZigzagStep> steps;

    [[nodiscard]] std::size_t length() const noexcept { return steps.size(); }
    void insert(Simplex s) { steps.push_back({ZigzagOp::Insert, {s}}); }
    void remove(Simplex s) { steps.push_back({ZigzagOp::Delete, {s}}); }
};

//! Bar alive at positions birth .. death - 1.
struct Bar {
    int dim = 0;
    std::size_t birth = 0;
    std::size_t death = 0;

    friend bool operator==(const Bar&, const Bar&) = default;
    friend auto operator<=>(const Bar&, const Bar&) = default;
};

struct Barcode {
    std::vector<Bar> bars;  // sorted by (dim, birth, death)

    [[nodiscard]] std::vector<Bar> of_dim(int dim) const;
    friend bool operator==(const Barcode&, const Barcode&) = default;
};

//! Raised for a step that would leave a non-complex.
class ZigzagOrderError : public InvalidArgument {
  public:
    ZigzagOrderError(std::size_t step, const std::string& what)
        : InvalidArgument("step " + std::to_string(step) + ": " + what), step_(step) {}
    [[nodiscard]] std::size_t step() const noexcept { return step_; }

  private:
    std::size_t step_;
};

//! Interval decomposition of the homology zigzag module in dimensions
//! 0..max_dim. Throws ZigzagOrderError at the first invalid step.
[[nodiscard]] Barcode zigzag_barcode(const ZigzagFiltration& zf, int max_dim);

//! Bars of dimension dim equal to [0, n).
[[nodiscard]] std::size_t count_full_bars(const Barcode& bc, std::size_t n, int dim);

}  // namespace gril
