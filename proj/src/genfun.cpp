#include "hnbetti/genfun.hpp"

#include <string>

#include "hnbetti/error.hpp"

namespace hnbetti::genfun {

using exactalg::Integer;

namespace {

void require_rank(int rank) {
    if (rank < 1) throw InvalidArgument("rank must be at least 1, got " + std::to_string(rank));
}

// Binomial coefficients C(n, 0..n).
std::vector<Integer> binomial_row(unsigned n) {
    std::vector<Integer> row(n + 1);
    for (unsigned k = 0; k <= n; ++k) mpz_bin_uiui(row[k].get_mpz_t(), n, k);
    return row;
}

// (1 + t^step)^multiplicity as a series.
Series binomial_expansion(unsigned step, unsigned multiplicity, std::size_t order) {
    const auto row = binomial_row(multiplicity);
    std::vector<Integer> coeffs(order + 1);
    for (std::size_t k = 0; k <= multiplicity && k * step <= order; ++k) coeffs[k * step] = row[k];
    return Series(std::move(coeffs));
}

// 1 / (1 - t^step) for step >= 1.
Series geometric_expansion(unsigned step, std::size_t order) {
    std::vector<Integer> coeffs(order + 1);
    for (std::size_t k = 0; k <= order; k += step) coeffs[k] = 1;
    return Series(std::move(coeffs));
}

}  // namespace

CurveContext::CurveContext(int genus) : genus_(genus) {
    if (genus < 0) throw InvalidArgument("genus must be nonnegative, got " + std::to_string(genus));
}

Polynomial sym_product_poly(const CurveContext& curve, std::int64_t m) {
    if (m < 0) throw InvalidArgument("symmetric product index must be nonnegative");
    // u^m coefficient: choose a odd classes from (1+ut)^(2g), the remaining
    // m - a points contribute t^0, t^2, ..., t^(2(m-a)).
    const auto two_g = static_cast<unsigned>(2 * curve.genus());
    const auto row = binomial_row(two_g);
    const auto points = static_cast<std::size_t>(m);
    std::vector<Integer> coeffs(2 * points + 1);
    for (std::size_t a = 0; a <= std::min<std::size_t>(two_g, points); ++a)
        for (std::size_t c = 0; c <= points - a; ++c) coeffs[a + 2 * c] += row[a];
    return Polynomial(std::move(coeffs));
}

Polynomial div_finite_poly(const CurveContext& curve, int rank, std::int64_t degree, std::int64_t deg_d) {
    require_rank(rank);
    const std::int64_t m = static_cast<std::int64_t>(rank) * deg_d - degree;
    if (m < 0)
        throw InvalidArgument("r*deg D - n = " + std::to_string(m) +
                              " is negative: the divisor variety is empty");
    std::vector<Polynomial> sym;
    sym.reserve(static_cast<std::size_t>(m) + 1);
    for (std::int64_t k = 0; k <= m; ++k) sym.push_back(sym_product_poly(curve, k));

    // Lexicographic walk over compositions of m into `rank` parts.
    const auto r = static_cast<std::size_t>(rank);
    std::vector<std::int64_t> parts(r, 0);
    parts[r - 1] = m;
    Polynomial total;
    while (true) {
        std::int64_t weight = 0;
        Polynomial term = Polynomial::constant(1);
        for (std::size_t i = 0; i < r; ++i) {
            weight += static_cast<std::int64_t>(i) * parts[i];
            if (parts[i] > 0) term *= sym[static_cast<std::size_t>(parts[i])];
        }
        total += term * Polynomial::monomial(static_cast<std::size_t>(2 * weight));

        if (r == 1) break;
        // Next composition in lexicographic order: increment the rightmost
        // slot k < r-1 with a positive tail, zero the slots after it and put
        // the remainder into the last slot.
        std::int64_t tail = parts[r - 1];
        std::size_t k = r - 1;
        bool advanced = false;
        while (k-- > 0) {
            if (tail > 0) {
                ++parts[k];
                std::int64_t used = 0;
                for (std::size_t j = 0; j <= k; ++j) used += parts[j];
                for (std::size_t j = k + 1; j < r; ++j) parts[j] = 0;
                parts[r - 1] = m - used;
                advanced = true;
                break;
            }
            tail += parts[k];
        }
        if (!advanced) break;
    }
    return total;
}

Series div_stable_series(const CurveContext& curve, int rank, std::size_t order) {
    require_rank(rank);
    const auto two_g = static_cast<unsigned>(2 * curve.genus());
    Polynomial numerator = Polynomial::constant(1);
    for (int j = 1; j <= rank; ++j)
        numerator *= exactalg::power(Polynomial::binomial(static_cast<std::size_t>(2 * j - 1), 1), two_g);
    Polynomial denominator = Polynomial::binomial(static_cast<std::size_t>(2 * rank), -1);
    for (int j = 1; j < rank; ++j)
        denominator *= exactalg::power(Polynomial::binomial(static_cast<std::size_t>(2 * j), -1), 2);
    return exactalg::inverse_series(denominator, order) * numerator;
}

FactoredESeries::FactoredESeries(const CurveContext& curve, int rank)
    : genus_(curve.genus()), rank_(rank) {
    require_rank(rank);
    for (int j = 0; j < rank; ++j)
        factors_.push_back(EFactor{static_cast<unsigned>(2 * j + 1), static_cast<unsigned>(2 * genus_),
                                   static_cast<unsigned>(2 * j), static_cast<unsigned>(2 * j + 2)});
}

Series residue_series(const FactoredESeries& e, std::size_t order) {
    Series result = Series::one(order);
    int poles = 0;
    for (const EFactor& f : e.factors()) {
        // Numerator at u = 1.
        result = result * binomial_expansion(f.numerator_exponent, f.numerator_multiplicity, order);
        for (unsigned exponent : {f.first_denominator_exponent, f.second_denominator_exponent}) {
            if (exponent == 0) {
                // -Res_{u=1} h(u)/(1-u) = h(1).
                ++poles;
                continue;
            }
            result = result * geometric_expansion(exponent, order);
        }
    }
    if (poles != 1)
        throw CheckFailure("E(t,u) must have exactly one simple pole factor at u = 1, found " +
                           std::to_string(poles));
    return result;
}

}  // namespace hnbetti::genfun
