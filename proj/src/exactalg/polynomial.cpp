#include "hnbetti/exactalg/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "hnbetti/error.hpp"
#include "hnbetti/exactalg/convolution.hpp"

namespace hnbetti::exactalg {

namespace {

const Integer& zero() {
    static const Integer z = 0;
    return z;
}

}  // namespace

Integer parse_decimal(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size() ||
        !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
        throw InvalidArgument("not a decimal integer: '" + text + "'");
    Integer x;
    x.set_str(text[0] == '+' ? text.substr(1) : text, 10);
    return x;
}

Polynomial::Polynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
    normalize();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients)
    : coeffs_(coefficients.begin(), coefficients.end()) {
    normalize();
}

Polynomial Polynomial::constant(const Integer& c) { return Polynomial(std::vector<Integer>{c}); }

Polynomial Polynomial::monomial(std::size_t exponent, const Integer& c) {
    std::vector<Integer> coeffs(exponent + 1);
    coeffs[exponent] = c;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::binomial(std::size_t exponent, long c) {
    std::vector<Integer> coeffs(exponent + 1);
    coeffs[0] = 1;
    coeffs[exponent] += c;
    return Polynomial(std::move(coeffs));
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

const Integer& Polynomial::coeff(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : zero();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

Polynomial operator-(const Polynomial& p) {
    std::vector<Integer> coeffs(p.coefficients().begin(), p.coefficients().end());
    for (auto& c : coeffs) c = -c;
    return Polynomial(std::move(coeffs));
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    return Polynomial(
        convolve(lhs.coefficients(), rhs.coefficients(), lhs.length() + rhs.length() - 1));
}

Polynomial power(const Polynomial& p, unsigned exponent) {
    Polynomial result = Polynomial::constant(1);
    Polynomial base = p;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw InvalidArgument("division by the zero polynomial");
    if (num.is_zero()) return {};
    const std::size_t dn = *num.degree();
    const std::size_t dd = *den.degree();
    if (dn < dd) throw ArithmeticError("inexact polynomial division: divisor degree exceeds dividend degree");

    std::vector<Integer> rem(num.coefficients().begin(), num.coefficients().end());
    std::vector<Integer> quot(dn - dd + 1);
    const Integer& lead = den.coeff(dd);
    for (std::size_t k = dn - dd + 1; k-- > 0;) {
        Integer& top = rem[k + dd];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw ArithmeticError("inexact polynomial division: leading coefficient does not divide at t^" +
                                  std::to_string(k + dd));
        mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t j = 0; j <= dd; ++j)
            mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), den.coeff(j).get_mpz_t());
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (sgn(rem[i]) != 0)
            throw ArithmeticError("inexact polynomial division: nonzero remainder at t^" + std::to_string(i));
    return Polynomial(std::move(quot));
}

bool is_palindromic(const Polynomial& p) {
    if (p.is_zero()) throw InvalidArgument("palindromy is undefined for the zero polynomial");
    const std::size_t d = *p.degree();
    for (std::size_t i = 0; i <= d / 2; ++i)
        if (p.coeff(i) != p.coeff(d - i)) return false;
    return true;
}

}  // namespace hnbetti::exactalg
