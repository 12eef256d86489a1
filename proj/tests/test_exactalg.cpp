#include <doctest.h>

#include <random>

#include "hnbetti/error.hpp"
#include "hnbetti/exactalg/convolution.hpp"
#include "hnbetti/exactalg/polynomial.hpp"
#include "hnbetti/exactalg/series.hpp"
#include "test_helpers.hpp"

using namespace hnbetti;
using namespace hnbetti::exactalg;
using hnbetti::test::coeffs;
using hnbetti::test::ints;

namespace {

// Independent product: plain double loop, no shared code with convolve().
Polynomial naive_product(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.length() + b.length() - 1);
    for (std::size_t i = 0; i < a.length(); ++i)
        for (std::size_t j = 0; j < b.length(); ++j) c[i + j] += a.coeff(i) * b.coeff(j);
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("polynomial representation") {
    const Polynomial zero;
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.degree().has_value());
    CHECK(zero.coeff(5) == 0);

    const Polynomial p{1, 2, 0, 0};
    REQUIRE(p.degree().has_value());
    CHECK(*p.degree() == 1);
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(7) == 0);
    CHECK(Polynomial{0, 0} == zero);
    CHECK((p - p).is_zero());
    CHECK(Polynomial::binomial(3, -1) == Polynomial{1, 0, 0, -1});
}

TEST_CASE("poly_mul examples") {
    CHECK(Polynomial{1, 1} * Polynomial{1} == Polynomial{1, 1});
    CHECK(Polynomial{1, 1} * Polynomial{1, -1} == Polynomial{1, 0, -1});
    const Polynomial lhs{1, 4, 6, 4, 1};
    const Polynomial rhs{1, 0, 1, 4, 1, 0, 1};
    CHECK(coeffs(lhs * rhs) == ints({1, 4, 7, 12, 24, 32, 24, 12, 7, 4, 1}));
    CHECK((lhs * Polynomial{}).is_zero());
}

TEST_CASE("series_inverse examples and errors") {
    CHECK(coeffs(inverse_series(Polynomial{1, -1}, 4)) == ints({1, 1, 1, 1, 1}));
    CHECK(coeffs(inverse_series(Polynomial{1}, 3)) == ints({1, 0, 0, 0}));
    CHECK(coeffs(inverse_series(power(Polynomial{1, 0, -1}, 2), 4)) == ints({1, 0, 2, 0, 3}));
    CHECK(coeffs(inverse_series(Polynomial{-1, 1}, 3)) == ints({-1, -1, -1, -1}));
    CHECK_THROWS_AS(inverse_series(Polynomial{2, 1}, 3), ArithmeticError);
    CHECK_THROWS_AS(inverse_series(Polynomial{0, 1}, 3), ArithmeticError);
    CHECK_THROWS_AS(inverse_series(Polynomial{}, 3), ArithmeticError);
}

TEST_CASE("poly_divide_exact examples and errors") {
    CHECK(divide_exact(Polynomial{1, 0, -1}, Polynomial{1, -1}) == Polynomial{1, 1});
    CHECK(divide_exact(power(Polynomial{1, 1}, 4), Polynomial{1, 1}) == power(Polynomial{1, 1}, 3));
    const Polynomial num{1, 0, 0, 4, -1, -4, 0, -4, -1, 4, 0, 0, 1};
    const Polynomial den{1, 0, -1, 0, -1, 0, 1};
    CHECK(divide_exact(num, den) == Polynomial{1, 0, 1, 4, 1, 0, 1});
    CHECK(divide_exact(Polynomial{}, den).is_zero());
    CHECK_THROWS_AS(divide_exact(Polynomial{1, 0, 1}, Polynomial{1, 1}), ArithmeticError);
    CHECK_THROWS_AS(divide_exact(Polynomial{1, 1}, Polynomial{1, 0, 1}), ArithmeticError);
    CHECK_THROWS_AS(divide_exact(Polynomial{1, 2}, Polynomial{2}), ArithmeticError);
    CHECK_THROWS_AS(divide_exact(Polynomial{1}, Polynomial{}), InvalidArgument);
}

TEST_CASE("poly_pow examples") {
    CHECK(power(Polynomial{1, 1}, 0) == Polynomial{1});
    CHECK(power(Polynomial{}, 0) == Polynomial{1});
    CHECK(coeffs(power(Polynomial{1, 1}, 4)) == ints({1, 4, 6, 4, 1}));
    CHECK(power(Polynomial{1, 0, 0, 1}, 4) == Polynomial{1, 0, 0, 4, 0, 0, 6, 0, 0, 4, 0, 0, 1});
}

TEST_CASE("is_palindromic examples") {
    CHECK(is_palindromic(Polynomial{1, 4, 1}));
    CHECK_FALSE(is_palindromic(Polynomial{1, 2}));
    CHECK(is_palindromic(Polynomial{1, 4, 7, 12, 24, 32, 24, 12, 7, 4, 1}));
    CHECK(is_palindromic(Polynomial{5}));
    CHECK_THROWS_AS(is_palindromic(Polynomial{}), InvalidArgument);
}

TEST_CASE("no overflow: binomial(100, 50) from (1+t)^100") {
    const Polynomial p = power(Polynomial{1, 1}, 100);
    CHECK(p.coeff(50).get_str() == "100891344545564193334812497256");
    Integer expected;
    mpz_bin_uiui(expected.get_mpz_t(), 100, 50);
    CHECK(p.coeff(50) == expected);
}

TEST_CASE("series arithmetic") {
    const Series a = test::series({1, 2, 3, 4});
    const Series b = test::series({1, 1, 1});
    CHECK((a + b).order() == 2);
    CHECK(coeffs(a + b) == ints({2, 3, 4}));
    CHECK(coeffs(a - b) == ints({0, 1, 2}));
    CHECK(coeffs(a * b) == ints({1, 3, 6}));
    CHECK(coeffs(a.shifted(2)) == ints({0, 0, 1, 2}));
    CHECK(a.truncated(1) == test::series({1, 2}));
    CHECK_THROWS_AS(a.truncated(5), InvalidArgument);
    CHECK(a.agrees_with(test::series({1, 2})));
    CHECK_FALSE(a.agrees_with(test::series({1, 3})));
    CHECK_FALSE(a == a.truncated(2));
    CHECK(Series::from_polynomial(Polynomial{1, 2, 3}, 1) == test::series({1, 2}));
    CHECK(Series::from_polynomial(Polynomial{1}, 2) == test::series({1, 0, 0}));
    CHECK_THROWS_AS(Series(std::vector<Integer>{}), InvalidArgument);
}

TEST_CASE("parse_decimal") {
    CHECK(parse_decimal("-12") == -12);
    CHECK(parse_decimal("+7") == 7);
    CHECK(parse_decimal("100891344545564193334812497256").get_str() == "100891344545564193334812497256");
    CHECK_THROWS_AS(parse_decimal(""), InvalidArgument);
    CHECK_THROWS_AS(parse_decimal("1e3"), InvalidArgument);
    CHECK_THROWS_AS(parse_decimal("-"), InvalidArgument);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(20261018);
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned bits = trial < 30 ? 20 : 300;
        const Polynomial a = test::random_polynomial(rng, 40, bits);
        const Polynomial b = test::random_polynomial(rng, 40, bits);
        const Polynomial c = test::random_polynomial(rng, 40, bits);
        CHECK(a * b == naive_product(a, b));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("series_inverse property") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = test::random_polynomial(rng, 12, 16);
        p = p - Polynomial::constant(p.coeff(0)) + Polynomial::constant((trial % 2) ? 1 : -1);
        const std::size_t order = 30;
        const Series q = inverse_series(p, order);
        CHECK(q * p == Series::one(order));
    }
}

TEST_CASE("divide_exact property") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial a = test::random_polynomial(rng, 30, 64);
        Polynomial b = test::random_polynomial(rng, 20, 64);
        if (b.is_zero()) b = Polynomial{3, 1};
        CHECK(divide_exact(a * b, b) == a);
    }
}

TEST_CASE("convolution methods agree") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const Polynomial a = test::random_polynomial(rng, 90, trial < 15 ? 12 : 700);
        const Polynomial b = test::random_polynomial(rng, 90, trial < 15 ? 12 : 200);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 200)(rng);
        const auto s = convolve(a.coefficients(), b.coefficients(), n, ConvolutionMethod::schoolbook);
        const auto m = convolve(a.coefficients(), b.coefficients(), n, ConvolutionMethod::multimodular);
        const auto x = convolve(a.coefficients(), b.coefficients(), n, ConvolutionMethod::automatic);
        CHECK(s.size() == n);
        CHECK(s == m);
        CHECK(s == x);
    }
}
