#ifndef HNBETTI_EXACTALG_MODULAR_HPP
#define HNBETTI_EXACTALG_MODULAR_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hnbetti/exactalg/integer.hpp"

namespace hnbetti::exactalg {

// The largest primes below kernels::kMaxPrime, in decreasing order.
std::span<const std::uint32_t> modular_primes();

/// A fixed set of pairwise coprime moduli with precomputed Garner constants.
/// Reconstruction is symmetric: results lie in (-M/2, M/2] where M is the
/// product of the moduli.
class CrtBasis {
public:
    explicit CrtBasis(std::span<const std::uint32_t> primes);

    // Smallest prefix of modular_primes() whose product exceeds 2^(bits+1).
    // Returns an empty basis when the table is too short.
    static CrtBasis for_signed_bits(std::size_t bits);

    std::size_t size() const noexcept { return primes_.size(); }
    bool empty() const noexcept { return primes_.empty(); }
    std::span<const std::uint32_t> primes() const noexcept { return primes_; }

    // residues[k] = x mod primes[k], in [0, prime).
    void reduce(const Integer& x, std::span<std::uint32_t> residues) const;
    Integer reconstruct(std::span<const std::uint32_t> residues) const;

private:
    std::vector<std::uint32_t> primes_;
    // inverse_[i][j] = primes_[j]^-1 mod primes_[i] for j < i.
    std::vector<std::vector<std::uint32_t>> inverse_;
    Integer modulus_;
    Integer half_modulus_;
};

}  // namespace hnbetti::exactalg

#endif  // HNBETTI_EXACTALG_MODULAR_HPP
