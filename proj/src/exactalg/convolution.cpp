#include "hnbetti/exactalg/convolution.hpp"

#include <algorithm>
#include <cstdint>

#include "hnbetti/exactalg/kernels.hpp"
#include "hnbetti/exactalg/modular.hpp"

namespace hnbetti::exactalg {

namespace {

// Below this many effective terms in the shorter operand the CRT setup costs
// more than it saves.
constexpr std::size_t kMultimodularThreshold = 16;

std::vector<Integer> schoolbook(std::span<const Integer> a, std::span<const Integer> b,
                                std::size_t n) {
    std::vector<Integer> out(n);
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (sgn(a[i]) == 0) continue;
        const std::size_t jmax = std::min(b.size(), n - i);
        for (std::size_t j = 0; j < jmax; ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return out;
}

std::size_t max_bits(std::span<const Integer> xs) {
    std::size_t bits = 0;
    for (const auto& x : xs)
        if (sgn(x) != 0) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
    return bits;
}

std::size_t bit_length(std::size_t n) {
    std::size_t bits = 0;
    while (n > 0) {
        ++bits;
        n >>= 1;
    }
    return bits;
}

std::vector<Integer> multimodular(std::span<const Integer> a, std::span<const Integer> b,
                                  std::size_t n) {
    const std::size_t terms = std::min(a.size(), b.size());
    const CrtBasis basis =
        CrtBasis::for_signed_bits(max_bits(a) + max_bits(b) + bit_length(terms));
    if (basis.empty()) return schoolbook(a, b, n);

    const std::size_t k = basis.size();
    const auto kernel = kernels::kernel_for(kernels::active_isa());
    std::vector<std::uint32_t> ra(a.size()), rb(b.size()), rc(n);
    // residues[c * k + p] for output coefficient c and prime index p.
    std::vector<std::uint32_t> residues(n * k);
    for (std::size_t p = 0; p < k; ++p) {
        const std::uint32_t prime = basis.primes()[p];
        for (std::size_t i = 0; i < a.size(); ++i)
            ra[i] = static_cast<std::uint32_t>(mpz_fdiv_ui(a[i].get_mpz_t(), prime));
        for (std::size_t j = 0; j < b.size(); ++j)
            rb[j] = static_cast<std::uint32_t>(mpz_fdiv_ui(b[j].get_mpz_t(), prime));
        kernel(ra, rb, rc, prime);
        for (std::size_t c = 0; c < n; ++c) residues[c * k + p] = rc[c];
    }
    std::vector<Integer> out(n);
    for (std::size_t c = 0; c < n; ++c)
        out[c] = basis.reconstruct(std::span<const std::uint32_t>(residues).subspan(c * k, k));
    return out;
}

}  // namespace

std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b,
                              std::size_t out_length, ConvolutionMethod method) {
    a = a.first(std::min(a.size(), out_length));
    b = b.first(std::min(b.size(), out_length));
    if (a.empty() || b.empty()) return std::vector<Integer>(out_length);
    switch (method) {
        case ConvolutionMethod::schoolbook: return schoolbook(a, b, out_length);
        case ConvolutionMethod::multimodular: return multimodular(a, b, out_length);
        case ConvolutionMethod::automatic: break;
    }
    if (std::min(a.size(), b.size()) >= kMultimodularThreshold)
        return multimodular(a, b, out_length);
    return schoolbook(a, b, out_length);
}

}  // namespace hnbetti::exactalg
