// Built with -mavx2; only called after a runtime CPU check.
#include <immintrin.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hnbetti/exactalg/kernels.hpp"

namespace hnbetti::exactalg::kernels {

namespace {

inline void accumulate_row(std::uint64_t* dst, const std::uint32_t* b, std::size_t count,
                           std::uint64_t ai) {
    const __m256i va = _mm256_set1_epi64x(static_cast<long long>(ai));
    std::size_t j = 0;
    for (; j + 8 <= count; j += 8) {
        const __m256i b0 = _mm256_cvtepu32_epi64(
            _mm_loadu_si128(reinterpret_cast<const __m128i*>(b + j)));
        const __m256i b1 = _mm256_cvtepu32_epi64(
            _mm_loadu_si128(reinterpret_cast<const __m128i*>(b + j + 4)));
        __m256i* d0 = reinterpret_cast<__m256i*>(dst + j);
        __m256i* d1 = reinterpret_cast<__m256i*>(dst + j + 4);
        _mm256_storeu_si256(d0, _mm256_add_epi64(_mm256_loadu_si256(d0), _mm256_mul_epu32(va, b0)));
        _mm256_storeu_si256(d1, _mm256_add_epi64(_mm256_loadu_si256(d1), _mm256_mul_epu32(va, b1)));
    }
    for (; j + 4 <= count; j += 4) {
        const __m256i b0 = _mm256_cvtepu32_epi64(
            _mm_loadu_si128(reinterpret_cast<const __m128i*>(b + j)));
        __m256i* d0 = reinterpret_cast<__m256i*>(dst + j);
        _mm256_storeu_si256(d0, _mm256_add_epi64(_mm256_loadu_si256(d0), _mm256_mul_epu32(va, b0)));
    }
    for (; j < count; ++j) dst[j] += ai * b[j];
}

}  // namespace

void mod_convolve_avx2(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                       std::span<std::uint32_t> out, std::uint32_t prime) {
    const std::size_t n = out.size();
    std::vector<std::uint64_t> acc(n, 0);
    std::size_t rows = 0;
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i] != 0) accumulate_row(acc.data() + i, b.data(), std::min(b.size(), n - i), a[i]);
        if (++rows == kLazyTerms - 1) {
            for (auto& x : acc) x %= prime;
            rows = 0;
        }
    }
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<std::uint32_t>(acc[k] % prime);
}

}  // namespace hnbetti::exactalg::kernels
