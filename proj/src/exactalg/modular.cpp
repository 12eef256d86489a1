#include "hnbetti/exactalg/modular.hpp"

#include <algorithm>

#include "hnbetti/error.hpp"
#include "hnbetti/exactalg/kernels.hpp"

namespace hnbetti::exactalg {

namespace {

constexpr std::size_t kPrimeCount = 1024;

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t mod) {
    std::uint64_t result = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

}  // namespace

std::span<const std::uint32_t> modular_primes() {
    static const std::vector<std::uint32_t> table = [] {
        std::vector<std::uint32_t> primes;
        primes.reserve(kPrimeCount);
        for (std::uint32_t n = kernels::kMaxPrime - 1; primes.size() < kPrimeCount; n -= 2)
            if (is_prime(n)) primes.push_back(n);
        return primes;
    }();
    return table;
}

CrtBasis::CrtBasis(std::span<const std::uint32_t> primes)
    : primes_(primes.begin(), primes.end()), modulus_(1) {
    inverse_.resize(primes_.size());
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (primes_[i] >= kernels::kMaxPrime || !is_prime(primes_[i]))
            throw InvalidArgument("CRT modulus must be a prime below 2^24");
        inverse_[i].resize(i);
        for (std::size_t j = 0; j < i; ++j) {
            if (primes_[i] == primes_[j]) throw InvalidArgument("CRT moduli must be distinct");
            inverse_[i][j] = pow_mod(primes_[j], primes_[i] - 2, primes_[i]);
        }
        modulus_ *= primes_[i];
    }
    half_modulus_ = modulus_ / 2;
}

CrtBasis CrtBasis::for_signed_bits(std::size_t bits) {
    const auto table = modular_primes();
    Integer product = 1;
    std::size_t count = 0;
    while (count < table.size() && mpz_sizeinbase(product.get_mpz_t(), 2) <= bits + 1)
        product *= table[count++];
    if (mpz_sizeinbase(product.get_mpz_t(), 2) <= bits + 1) return CrtBasis({});
    return CrtBasis(table.first(count));
}

void CrtBasis::reduce(const Integer& x, std::span<std::uint32_t> residues) const {
    for (std::size_t k = 0; k < primes_.size(); ++k)
        residues[k] = static_cast<std::uint32_t>(mpz_fdiv_ui(x.get_mpz_t(), primes_[k]));
}

Integer CrtBasis::reconstruct(std::span<const std::uint32_t> residues) const {
    const std::size_t k = primes_.size();
    if (k == 0) return 0;
    // Mixed-radix digits.
    std::vector<std::uint64_t> digit(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t p = primes_[i];
        std::uint64_t v = residues[i] % p;
        for (std::size_t j = 0; j < i; ++j) {
            v = (v + p - digit[j] % p) % p;
            v = v * inverse_[i][j] % p;
        }
        digit[i] = v;
    }
    Integer x = static_cast<unsigned long>(digit[k - 1]);
    for (std::size_t i = k - 1; i-- > 0;) {
        x *= static_cast<unsigned long>(primes_[i]);
        x += static_cast<unsigned long>(digit[i]);
    }
    if (x > half_modulus_) x -= modulus_;
    return x;
}

}  // namespace hnbetti::exactalg
