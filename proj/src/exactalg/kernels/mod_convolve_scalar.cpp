#include <algorithm>
#include <cstdint>
#include <vector>

#include "hnbetti/exactalg/kernels.hpp"

namespace hnbetti::exactalg::kernels {

void mod_convolve_scalar(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                         std::span<std::uint32_t> out, std::uint32_t prime) {
    const std::size_t n = out.size();
    std::vector<std::uint64_t> acc(n, 0);
    std::size_t rows = 0;
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        const std::uint64_t ai = a[i];
        if (ai != 0) {
            const std::size_t jmax = std::min(b.size(), n - i);
            std::uint64_t* dst = acc.data() + i;
            for (std::size_t j = 0; j < jmax; ++j) dst[j] += ai * b[j];
        }
        if (++rows == kLazyTerms - 1) {
            for (auto& x : acc) x %= prime;
            rows = 0;
        }
    }
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<std::uint32_t>(acc[k] % prime);
}

}  // namespace hnbetti::exactalg::kernels
