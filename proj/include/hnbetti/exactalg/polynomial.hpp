#ifndef HNBETTI_EXACTALG_POLYNOMIAL_HPP
#define HNBETTI_EXACTALG_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "hnbetti/exactalg/integer.hpp"

namespace hnbetti::exactalg {

/// Dense univariate polynomial in t over the integers.
///
/// Coefficient i is the coefficient of t^i. Storage is normalized: the last
/// stored coefficient is nonzero, so the zero polynomial stores nothing and
/// has no degree.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Integer> coefficients);
    Polynomial(std::initializer_list<long> coefficients);

    static Polynomial constant(const Integer& c);
    static Polynomial monomial(std::size_t exponent, const Integer& c = 1);
    // 1 + c*t^exponent
    static Polynomial binomial(std::size_t exponent, long c);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const noexcept;

    // Zero for i beyond the degree.
    const Integer& coeff(std::size_t i) const noexcept;
    std::span<const Integer> coefficients() const noexcept { return coeffs_; }
    std::size_t length() const noexcept { return coeffs_.size(); }

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void normalize();

    std::vector<Integer> coeffs_;
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(const Polynomial& p);
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

// p^e, with p^0 = 1 (including for p = 0).
Polynomial power(const Polynomial& p, unsigned exponent);

// Quotient q with num = den * q. Throws ArithmeticError when the remainder is
// nonzero or a leading-coefficient division is inexact, InvalidArgument when
// den is zero.
Polynomial divide_exact(const Polynomial& num, const Polynomial& den);

// Throws InvalidArgument on the zero polynomial.
bool is_palindromic(const Polynomial& p);

}  // namespace hnbetti::exactalg

#endif  // HNBETTI_EXACTALG_POLYNOMIAL_HPP
