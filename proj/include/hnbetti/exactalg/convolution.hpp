#ifndef HNBETTI_EXACTALG_CONVOLUTION_HPP
#define HNBETTI_EXACTALG_CONVOLUTION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hnbetti/exactalg/integer.hpp"

namespace hnbetti::exactalg {

enum class ConvolutionMethod {
    automatic,
    // Direct O(n*m) big-integer products.
    schoolbook,
    // Reduce modulo word-size primes, convolve with the active SIMD kernel,
    // reconstruct by CRT. Falls back to schoolbook when the coefficient bound
    // needs more primes than are tabulated.
    multimodular,
};

// c[k] = sum_{i+j=k} a[i]*b[j] for k < out_length. Every method returns the
// same exact result.
std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b,
                              std::size_t out_length,
                              ConvolutionMethod method = ConvolutionMethod::automatic);

}  // namespace hnbetti::exactalg

#endif  // HNBETTI_EXACTALG_CONVOLUTION_HPP
