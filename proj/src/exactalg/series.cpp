#include "hnbetti/exactalg/series.hpp"

#include <algorithm>
#include <utility>

#include "hnbetti/error.hpp"
#include "hnbetti/exactalg/convolution.hpp"

namespace hnbetti::exactalg {

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw InvalidArgument("a truncated series stores at least one coefficient");
}

Series Series::one(std::size_t order) {
    Series s(order);
    s.coeffs_[0] = 1;
    return s;
}

Series Series::from_polynomial(const Polynomial& p, std::size_t order) {
    Series s(order);
    const std::size_t n = std::min(p.length(), order + 1);
    std::copy_n(p.coefficients().begin(), n, s.coeffs_.begin());
    return s;
}

Series Series::truncated(std::size_t order) const {
    if (order > this->order())
        throw InvalidArgument("cannot extend a series from order " + std::to_string(this->order()) +
                              " to " + std::to_string(order));
    return Series(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

Series Series::shifted(std::size_t k) const {
    Series s(order());
    for (std::size_t i = 0; i + k <= order(); ++i) s.coeffs_[i + k] = coeffs_[i];
    return s;
}

bool Series::agrees_with(const Series& other) const {
    const std::size_t n = std::min(order(), other.order()) + 1;
    return std::equal(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n), other.coeffs_.begin());
}

Series& Series::operator+=(const Series& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Series& Series::operator-=(const Series& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Series operator+(const Series& lhs, const Series& rhs) {
    Series out = lhs;
    return out += rhs;
}

Series operator-(const Series& lhs, const Series& rhs) {
    Series out = lhs;
    return out -= rhs;
}

Series operator*(const Series& lhs, const Series& rhs) {
    const std::size_t n = std::min(lhs.order(), rhs.order()) + 1;
    return Series(convolve(lhs.coefficients(), rhs.coefficients(), n));
}

Series operator*(const Series& lhs, const Polynomial& rhs) {
    return Series(convolve(lhs.coefficients(), rhs.coefficients(), lhs.order() + 1));
}

Series inverse_series(const Polynomial& p, std::size_t order) {
    const Integer& c0 = p.coeff(0);
    if (c0 != 1 && c0 != -1)
        throw ArithmeticError("series inverse needs constant term +1 or -1, got " + to_decimal(c0));
    // q_k = -c0 * sum_{i=1..k} p_i q_{k-i}, since 1/c0 = c0.
    std::vector<Integer> q(order + 1);
    q[0] = c0;
    Integer acc;
    for (std::size_t k = 1; k <= order; ++k) {
        acc = 0;
        const std::size_t imax = std::min(k, p.length() == 0 ? 0 : p.length() - 1);
        for (std::size_t i = 1; i <= imax; ++i)
            if (sgn(p.coeff(i)) != 0) mpz_addmul(acc.get_mpz_t(), p.coeff(i).get_mpz_t(), q[k - i].get_mpz_t());
        q[k] = (c0 == 1) ? Integer(-acc) : acc;
    }
    return Series(std::move(q));
}

}  // namespace hnbetti::exactalg
