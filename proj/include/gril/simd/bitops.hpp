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

// Word-level kernels behind the dense GF(2) bit matrix. Each instruction set
// lives in its own translation unit so only that file is built with the
// matching -m flags; the dispatcher picks one at first use.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace gril::simd {

enum class Isa { Scalar, Avx2, Neon };

[[nodiscard]] std::string_view isa_name(Isa isa) noexcept;

struct BitKernels {
    Isa isa;
    //! dst[i] ^= src[i] for i < n.
    void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
    //! true iff any word in [p, p + n) is nonzero.
    bool (*any)(const std::uint64_t* p, std::size_t n);
    //! Number of set bits in [p, p + n).
    std::size_t (*popcount)(const std::uint64_t* p, std::size_t n);
};

namespace scalar {
void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
bool any(const std::uint64_t* p, std::size_t n);
std::size_t popcount(const std::uint64_t* p, std::size_t n);
}  // namespace scalar

#if defined(GRIL_HAVE_AVX2)
namespace avx2 {
void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
bool any(const std::uint64_t* p, std::size_t n);
std::size_t popcount(const std::uint64_t* p, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
bool any(const std::uint64_t* p, std::size_t n);
std::size_t popcount(const std::uint64_t* p, std::size_t n);
}  // namespace neon
#endif

//! Kernel sets compiled into this binary and supported by the running CPU.
[[nodiscard]] std::vector<Isa> available_isas();

//! Kernels for a specific instruction set; falls back to scalar if unsupported.
[[nodiscard]] const BitKernels& kernels_for(Isa isa) noexcept;

//! Active kernels. Chosen once from CPU features; GRIL_SIMD=scalar forces the
//! reference path.
[[nodiscard]] const BitKernels& kernels() noexcept;

}  // namespace gril::simd
