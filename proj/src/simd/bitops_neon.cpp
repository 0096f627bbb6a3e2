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

#include <arm_neon.h>

#include "gril/simd/bitops.hpp"

namespace gril::simd::neon {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    }
    for (; i < n; ++i) {
        dst[i] ^= src[i];
    }
}

bool any(const std::uint64_t* p, std::size_t n) {
    std::size_t i = 0;
    uint64x2_t acc = vdupq_n_u64(0);
    for (; i + 2 <= n; i += 2) {
        acc = vorrq_u64(acc, vld1q_u64(p + i));
    }
    if ((vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1)) != 0) return true;
    for (; i < n; ++i) {
        if (p[i] != 0) return true;
    }
    return false;
}

std::size_t popcount(const std::uint64_t* p, std::size_t n) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(p + i)));
        total += vaddvq_u8(bytes);
    }
    for (; i < n; ++i) {
        total += static_cast<std::size_t>(__builtin_popcountll(p[i]));
    }
    return total;
}

}  // namespace gril::simd::neon
