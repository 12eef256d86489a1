#ifndef HNBETTI_EXACTALG_KERNELS_HPP
#define HNBETTI_EXACTALG_KERNELS_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

// Word-level modular convolution kernels: a scalar reference and
// instruction-set specific variants chosen at runtime.
//
// Contract shared by every kernel: residues are < prime < 2^24, so a single
// product is < 2^48 and up to 2^16 products can be accumulated in a 64-bit
// lane before a reduction is required. out[k] = sum_{i+j=k} a[i]*b[j] mod
// prime for k < out.size().

namespace hnbetti::exactalg::kernels {

inline constexpr std::uint32_t kMaxPrime = 1u << 24;
inline constexpr std::size_t kLazyTerms = std::size_t{1} << 16;

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

using ModConvolveFn = void (*)(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                               std::span<std::uint32_t> out, std::uint32_t prime);

void mod_convolve_scalar(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                         std::span<std::uint32_t> out, std::uint32_t prime);
#if defined(HNBETTI_HAVE_AVX2_KERNEL)
void mod_convolve_avx2(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                       std::span<std::uint32_t> out, std::uint32_t prime);
#endif
#if defined(HNBETTI_HAVE_NEON_KERNEL)
void mod_convolve_neon(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                       std::span<std::uint32_t> out, std::uint32_t prime);
#endif

// Compiled in and supported by the running CPU.
bool isa_available(Isa isa) noexcept;
std::vector<Isa> available_isas();

// Best available ISA, unless HNBETTI_KERNEL=scalar|avx2|neon names another
// available one.
Isa detected_isa() noexcept;

// Process-wide selection used by the multimodular convolution. Throws
// InvalidArgument for an unavailable ISA.
Isa active_isa() noexcept;
void set_active_isa(Isa isa);

ModConvolveFn kernel_for(Isa isa);

}  // namespace hnbetti::exactalg::kernels

#endif  // HNBETTI_EXACTALG_KERNELS_HPP
