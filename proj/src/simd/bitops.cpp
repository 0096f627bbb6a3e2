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

#include "gril/simd/bitops.hpp"

#include <cstdlib>
#include <string>

namespace gril::simd {

namespace {

constexpr BitKernels kScalar{Isa::Scalar, &scalar::xor_into, &scalar::any, &scalar::popcount};

#if defined(GRIL_HAVE_AVX2)
constexpr BitKernels kAvx2{Isa::Avx2, &avx2::xor_into, &avx2::any, &avx2::popcount};
#endif

#if defined(__aarch64__)
constexpr BitKernels kNeon{Isa::Neon, &neon::xor_into, &neon::any, &neon::popcount};
#endif

bool cpu_supports(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(GRIL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::Neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const BitKernels& select() noexcept {
    if (const char* env = std::getenv("GRIL_SIMD"); env != nullptr && std::string(env) == "scalar") {
        return kScalar;
    }
    if (cpu_supports(Isa::Avx2)) return kernels_for(Isa::Avx2);
    if (cpu_supports(Isa::Neon)) return kernels_for(Isa::Neon);
    return kScalar;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Avx2:
            return "avx2";
        case Isa::Neon:
            return "neon";
    }
    return "unknown";
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out{Isa::Scalar};
    for (Isa isa : {Isa::Avx2, Isa::Neon}) {
        if (cpu_supports(isa)) out.push_back(isa);
    }
    return out;
}

const BitKernels& kernels_for(Isa isa) noexcept {
    if (!cpu_supports(isa)) return kScalar;
    switch (isa) {
#if defined(GRIL_HAVE_AVX2)
        case Isa::Avx2:
            return kAvx2;
#endif
#if defined(__aarch64__)
        case Isa::Neon:
            return kNeon;
#endif
        default:
            return kScalar;
    }
}

const BitKernels& kernels() noexcept {
    static const BitKernels& active = select();
    return active;
}

}  // namespace gril::simd
