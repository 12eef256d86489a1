#ifndef HNBETTI_GENFUN_HPP
#define HNBETTI_GENFUN_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hnbetti/exactalg/polynomial.hpp"
#include "hnbetti/exactalg/series.hpp"

// Closed-form generating functions for symmetric products of a curve and for
// varieties of matrix divisors.

namespace hnbetti::genfun {

using exactalg::Polynomial;
using exactalg::Series;

/// The curve all formulas refer to. Genus 0 and 1 are accepted here since
/// everything in this module is a formal identity.
class CurveContext {
public:
    explicit CurveContext(int genus);
    int genus() const noexcept { return genus_; }

private:
    int genus_;
};

// Poincare polynomial of the m-th symmetric product C^(m): the coefficient of
// u^m in (1+ut)^(2g) / ((1-u)(1-ut^2)).
Polynomial sym_product_poly(const CurveContext& curve, std::int64_t m);

// Poincare polynomial of the finite-level divisor variety: sum over ordered
// tuples (m_1..m_r) of nonnegative integers summing to r*deg_d - n of
// t^(2*sum (i-1) m_i) * prod P(C^(m_i)). Throws InvalidArgument when
// r*deg_d - n < 0 (the variety is empty).
Polynomial div_finite_poly(const CurveContext& curve, int rank, std::int64_t degree, std::int64_t deg_d);

// Stable divisor series
//   prod_{j=1..r} (1+t^(2j-1))^(2g) / ((1-t^(2r)) prod_{j=1..r-1} (1-t^(2j))^2)
// expanded to t^order. It does not depend on the bundle degree.
Series div_stable_series(const CurveContext& curve, int rank, std::size_t order);

/// One factor (1+u t^a)^(2g) / ((1-u t^b)(1-u t^c)) of the bivariate series
/// E(t,u), with a = 2j+1, b = 2j, c = 2j+2.
struct EFactor {
    unsigned numerator_exponent;
    unsigned numerator_multiplicity;
    unsigned first_denominator_exponent;
    unsigned second_denominator_exponent;
};

/// E(t,u) = prod_{j=0}^{r-1} (1+u t^(2j+1))^(2g) / ((1-u t^(2j))(1-u t^(2j+2)))
/// kept as its factor list. The only factor with a pole at u = 1 is the
/// j = 0 denominator term 1 - u.
class FactoredESeries {
public:
    FactoredESeries(const CurveContext& curve, int rank);

    int genus() const noexcept { return genus_; }
    int rank() const noexcept { return rank_; }
    const std::vector<EFactor>& factors() const noexcept { return factors_; }

private:
    int genus_;
    int rank_;
    std::vector<EFactor> factors_;
};

// -Res_{u=1} E(t,u) to t^order: drop the simple-pole factor (1-u)^-1,
// substitute u = 1 in every remaining factor and expand. Uses binomial and
// geometric expansions, not the regrouped closed form of div_stable_series.
Series residue_series(const FactoredESeries& e, std::size_t order);

}  // namespace hnbetti::genfun

#endif  // HNBETTI_GENFUN_HPP
