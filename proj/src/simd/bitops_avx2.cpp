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

// Built with -mavx2. Only reached through the dispatcher after a CPUID check.

#include <immintrin.h>

#include <bit>

#include "gril/simd/bitops.hpp"

namespace gril::simd::avx2 {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i a1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i + 4));
        __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i b1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 4));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a0, b0));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i + 4), _mm256_xor_si256(a1, b1));
    }
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < n; ++i) {
        dst[i] ^= src[i];
    }
}

bool any(const std::uint64_t* p, std::size_t n) {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i)));
    }
    if (!_mm256_testz_si256(acc, acc)) return true;
    for (; i < n; ++i) {
        if (p[i] != 0) return true;
    }
    return false;
}

// No AVX2 vector popcount; the win here is the unrolled hardware popcnt.
std::size_t popcount(const std::uint64_t* p, std::size_t n) {
    std::size_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        c0 += static_cast<std::size_t>(std::popcount(p[i]));
        c1 += static_cast<std::size_t>(std::popcount(p[i + 1]));
        c2 += static_cast<std::size_t>(std::popcount(p[i + 2]));
        c3 += static_cast<std::size_t>(std::popcount(p[i + 3]));
    }
    for (; i < n; ++i) {
        c0 += static_cast<std::size_t>(std::popcount(p[i]));
    }
    return c0 + c1 + c2 + c3;
}

}  // namespace gril::simd::avx2
