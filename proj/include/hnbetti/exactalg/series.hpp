#ifndef HNBETTI_EXACTALG_SERIES_HPP
#define HNBETTI_EXACTALG_SERIES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hnbetti/exactalg/integer.hpp"
#include "hnbetti/exactalg/polynomial.hpp"

namespace hnbetti::exactalg {

/// Power series in t known up to and including t^order.
///
/// Always stores exactly order + 1 coefficients. Arithmetic between series of
/// different orders yields the smaller order; `agrees_with` compares two
/// series up to the smaller order, while `==` also requires equal orders.
class Series {
public:
    explicit Series(std::size_t order);
    // coefficients.size() must be nonzero; order = size - 1.
    explicit Series(std::vector<Integer> coefficients);

    static Series one(std::size_t order);
    static Series from_polynomial(const Polynomial& p, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Integer& operator[](std::size_t i) const { return coeffs_.at(i); }
    std::span<const Integer> coefficients() const noexcept { return coeffs_; }

    Series truncated(std::size_t order) const;
    // Multiplies by t^k, keeping the order.
    Series shifted(std::size_t k) const;
    Polynomial to_polynomial() const { return Polynomial(coeffs_); }

    bool agrees_with(const Series& other) const;

    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Integer> coeffs_;
};

Series operator+(const Series& lhs, const Series& rhs);
Series operator-(const Series& lhs, const Series& rhs);
Series operator*(const Series& lhs, const Series& rhs);
Series operator*(const Series& lhs, const Polynomial& rhs);

// q with p*q = 1 mod t^(order+1). The constant term of p must be +1 or -1,
// otherwise ArithmeticError.
Series inverse_series(const Polynomial& p, std::size_t order);

}  // namespace hnbetti::exactalg

#endif  // HNBETTI_EXACTALG_SERIES_HPP
