#include <arm_neon.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hnbetti/exactalg/kernels.hpp"

namespace hnbetti::exactalg::kernels {

void mod_convolve_neon(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                       std::span<std::uint32_t> out, std::uint32_t prime) {
    const std::size_t n = out.size();
    std::vector<std::uint64_t> acc(n, 0);
    std::size_t rows = 0;
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        const std::uint32_t ai = a[i];
        if (ai != 0) {
            const std::size_t count = std::min(b.size(), n - i);
            std::uint64_t* dst = acc.data() + i;
            const uint32x2_t va = vdup_n_u32(ai);
            std::size_t j = 0;
            for (; j + 4 <= count; j += 4) {
                const uint32x4_t vb = vld1q_u32(b.data() + j);
                vst1q_u64(dst + j, vmlal_u32(vld1q_u64(dst + j), va, vget_low_u32(vb)));
                vst1q_u64(dst + j + 2, vmlal_u32(vld1q_u64(dst + j + 2), va, vget_high_u32(vb)));
            }
            for (; j < count; ++j) dst[j] += std::uint64_t{ai} * b[j];
        }
        if (++rows == kLazyTerms - 1) {
            for (auto& x : acc) x %= prime;
            rows = 0;
        }
    }
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<std::uint32_t>(acc[k] % prime);
}

}  // namespace hnbetti::exactalg::kernels
