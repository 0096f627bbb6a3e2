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

// Steepest-ascent assignment for a single GRIL entry.
//
// With d* the GRIL width, the simplices that decide the rank change are those
// whose events on the boundary walk differ between the worms of width d* and
// d* + 1:
//
//   case 1  y between the two top edges               s = (0, +l)
//   case 2  x between the two left edges              s = (-l, 0)
//   case 3  join of sigma, tau (sigma upper-left of tau) meets the inner lower
//           staircase only: s(sigma) = (0, -1), s(tau) = (-1, 0); a single
//           simplex there gets (-1, -1)
//   case 4  join meets the outer upper staircase only, signs flipped; a single
//           simplex gets (+1, +1)
//   case 5  y between the two bottom rows, at or left of the walk's first
//           point                                     s = (0, -l)
//   case 6  x between the two right columns, at or below the walk's last
//           point                                     s = (+l, 0)
//
// Cases 5 and 6 cover the endpoints of the two edges the walk leaves out.

#include <array>
#include <cstddef>
#include <vector>

#include "gril/complex.hpp"
#include "gril/error.hpp"
#include "gril/landscape.hpp"

namespace gril {

//! Two simplices share a coordinate value.
class NonGenericError : public InvalidArgument {
  public:
    NonGenericError(std::size_t a, std::size_t b, int coord)
        : InvalidArgument("simplices " + std::to_string(a) + " and " + std::to_string(b) + " share coordinate " +
                          std::to_string(coord)),
          a_(a),
          b_(b) {}
    [[nodiscard]] std::size_t first() const noexcept { return a_; }
    [[nodiscard]] std::size_t second() const noexcept { return b_; }

  private:
    std::size_t a_, b_;
};

struct Assignment {
    std::vector<std::array<int, 2>> s;  // indexed like the complex
    std::vector<std::size_t> support;   // sorted simplex indices with s != 0
    std::vector<int> cases;             // distinct cases seen, sorted
    bool mixed = false;  // edge cases (1, 2, 5, 6) and staircase cases (3, 4) together, or a simplex
                         // pulled two ways; s is then all zero
    int width_steps = 0;                // GRIL width at the query

    [[nodiscard]] int norm() const noexcept;  // max |s| entry
};

//! Throws NonGenericError if two simplices share a coordinate and
//! InvalidArgument if the GRIL value at q is 0.
[[nodiscard]] Assignment assignment(const BiFiltration& f, const GrilQuery& q);

//! f + alpha * s / |s|, alpha in real units. The shift must land on the grid
//! and inside [0, 1]; the result is revalidated (ValidationError).
[[nodiscard]] BiFiltration perturb(const BiFiltration& f, const Assignment& s, double alpha);

struct ProbeResult {
    double predicted_slope = 0.0;  // 1/l for edge cases, 1 for staircase cases, 0 without support
    double observed_delta = 0.0;   // GRIL(f + alpha s) - GRIL(f)
};

[[nodiscard]] ProbeResult directional_probe(const BiFiltration& f, const Assignment& s, double alpha,
                                            const GrilQuery& q);

}  // namespace gril
