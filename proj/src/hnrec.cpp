#include "hnbetti/hnrec.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <string>

#include "hnbetti/error.hpp"
#include "hnbetti/genfun.hpp"

namespace hnbetti::hnrec {

using exactalg::Integer;

namespace {

void require_recursion_domain(int genus, int rank) {
    if (genus < 1)
        throw InvalidArgument("the stratification recursion requires genus >= 1, got " + std::to_string(genus));
    if (rank < 1) throw InvalidArgument("rank must be at least 1, got " + std::to_string(rank));
}

std::string describe(const ModuliQuery& q) {
    return "(g=" + std::to_string(q.genus) + ", r=" + std::to_string(q.rank) +
           ", n=" + std::to_string(q.degree) + ", T=" + std::to_string(q.truncation) + ")";
}

}  // namespace

std::optional<Series> MemoStore::find_in_memory(const ModuliQuery& q) const {
    std::shared_lock lock(mutex_);
    const auto family = entries_.find({q.genus, q.rank, q.degree});
    if (family == entries_.end()) return std::nullopt;
    const auto it = family->second.lower_bound(q.truncation);
    if (it == family->second.end()) return std::nullopt;
    return it->second.truncated(q.truncation);
}

bool MemoStore::insert_in_memory(const ModuliQuery& q, const Series& s) {
    if (s.order() != q.truncation)
        throw InvalidArgument("memo entry order " + std::to_string(s.order()) + " does not match key " + describe(q));
    std::unique_lock lock(mutex_);
    auto& family = entries_[{q.genus, q.rank, q.degree}];
    for (const auto& [order, existing] : family)
        if (!existing.agrees_with(s))
            throw CheckFailure("memo conflict for " + describe(q) + ": disagrees with stored order " +
                               std::to_string(order));
    return family.emplace(q.truncation, s).second;
}

std::optional<Series> MemoStore::find(const ModuliQuery& q) {
    if (auto hit = find_in_memory(q)) return hit;
    if (backing_ == nullptr) return std::nullopt;
    auto loaded = backing_->load(q);
    if (!loaded || loaded->order() < q.truncation) return std::nullopt;
    ModuliQuery stored = q;
    stored.truncation = loaded->order();
    insert_in_memory(stored, *loaded);
    return loaded->truncated(q.truncation);
}

void MemoStore::insert(const ModuliQuery& q, const Series& s) {
    if (insert_in_memory(q, s) && backing_ != nullptr) backing_->store(q, s);
}

std::size_t MemoStore::size() const {
    std::shared_lock lock(mutex_);
    std::size_t n = 0;
    for (const auto& [family, entries] : entries_) n += entries.size();
    return n;
}

Series Recursion::ss_series(const ModuliQuery& q) {
    require_recursion_domain(q.genus, q.rank);
    if (auto hit = memo_.find(q)) return *hit;

    const std::size_t order = q.truncation;
    const Series full = genfun::div_stable_series(genfun::CurveContext(q.genus), q.rank, order);
    // Rank 1: no proper subsheaf of positive rank, so every divisor is
    // semistable.
    if (q.rank == 1) {
        memo_.insert(q, full);
        return full;
    }
    std::vector<Integer> coeffs(full.coefficients().begin(), full.coefficients().end());
    const auto max_codim = static_cast<std::int64_t>(order / 2);
    for (const auto& stratum : strata::enumerate_types(q.rank, q.degree, q.genus, max_codim)) {
        const auto shift = static_cast<std::size_t>(2 * stratum.codim);
        const Series piece = stratum_series(q.genus, stratum.type, order - shift);
        for (std::size_t k = 0; k + shift <= order; ++k) coeffs[k + shift] -= piece[k];
    }
    Series result(std::move(coeffs));
    memo_.insert(q, result);
    return result;
}

Series Recursion::stratum_series(int genus, const strata::HNType& type, std::size_t order) {
    Series product = Series::one(order);
    for (const auto& piece : type.pieces())
        product = product * ss_series({genus, static_cast<int>(piece.rank), piece.degree, order});
    return product;
}

Series ss_series(const ModuliQuery& q) {
    MemoStore memo;
    return Recursion(memo).ss_series(q);
}

Series stratum_series(int genus, const strata::HNType& type, std::size_t order) {
    MemoStore memo;
    return Recursion(memo).stratum_series(genus, type, order);
}

std::int64_t dim_moduli(int genus, int rank) {
    require_recursion_domain(genus, rank);
    return 1 + static_cast<std::int64_t>(rank) * rank * (genus - 1);
}

BettiReport betti_poly(int genus, int rank, std::int64_t degree, MemoStore& memo, const BettiOptions& options) {
    require_recursion_domain(genus, rank);
    if (std::gcd(static_cast<std::int64_t>(rank), degree) != 1)
        throw InvalidArgument("Betti polynomials need coprime rank and degree: gcd(" + std::to_string(rank) + ", " +
                              std::to_string(degree) + ") != 1");
    const std::int64_t dim = dim_moduli(genus, rank);
    const auto top = static_cast<std::size_t>(2 * dim);
    const std::size_t order = options.truncation.value_or(top + options.slack);
    if (order < top)
        throw InvalidArgument("truncation " + std::to_string(order) + " is below 2*dim = " + std::to_string(top));

    const Series ss = Recursion(memo).ss_series({genus, rank, degree, order});
    const Series product = ss * Polynomial::binomial(2, -1);

    BettiReport report;
    report.moduli_dimension = dim;
    report.truncation_used = order;
    report.checks.tail_vanishes = true;
    for (std::size_t k = top + 1; k <= order; ++k)
        if (sgn(product[k]) != 0) report.checks.tail_vanishes = false;
    report.polynomial = product.truncated(top).to_polynomial();
    report.checks.degree_matches_2dim = report.polynomial.degree() == top;
    report.checks.palindromic = !report.polynomial.is_zero() && exactalg::is_palindromic(report.polynomial);
    report.checks.nonnegative = true;
    for (const auto& c : product.coefficients())
        if (sgn(c) < 0) report.checks.nonnegative = false;

    if (options.enforce_checks && !report.checks.all()) {
        std::ostringstream dump;
        dump << "structural check failed for (g=" << genus << ", r=" << rank << ", n=" << degree
             << "): palindromic=" << report.checks.palindromic
             << " degree_matches_2dim=" << report.checks.degree_matches_2dim
             << " tail_vanishes=" << report.checks.tail_vanishes << " nonnegative=" << report.checks.nonnegative
             << "\n  dim=" << dim << " T=" << order << "\n  (1-t^2)*P(ss) coefficients:";
        for (std::size_t k = 0; k <= order; ++k) dump << "\n    t^" << k << ": " << product[k].get_str();
        throw CheckFailure(dump.str());
    }
    return report;
}

BettiReport betti_poly(int genus, int rank, std::int64_t degree, const BettiOptions& options) {
    MemoStore memo;
    return betti_poly(genus, rank, degree, memo, options);
}

Series rank2_oracle(int genus, std::int64_t degree, std::size_t order) {
    if (genus < 1) throw InvalidArgument("rank-2 oracle requires genus >= 1");
    if (degree % 2 == 0) throw InvalidArgument("rank-2 oracle requires odd degree, got " + std::to_string(degree));
    const auto two_g = static_cast<unsigned>(2 * genus);
    // Proper types are (1,d)(1,n-d) with 2d > n, codim 2d - n + g - 1; the
    // smallest is g and they step by 2, so the stratum sum is
    //   ((1+t)^(2g) / (1-t^2))^2 * t^(2g) / (1-t^4).
    // Together with the rank-2 divisor series
    //   (1+t)^(2g) (1+t^3)^(2g) / ((1-t^4)(1-t^2)^2)
    // this leaves
    //   P(N) = (1+t)^(2g) [(1+t^3)^(2g) - t^(2g) (1+t)^(2g)] / ((1-t^2)(1-t^4)).
    const Polynomial one_plus_t = exactalg::power(Polynomial::binomial(1, 1), two_g);
    const Polynomial bracket = exactalg::power(Polynomial::binomial(3, 1), two_g) -
                               Polynomial::monomial(two_g) * one_plus_t;
    const Polynomial moduli = exactalg::divide_exact(
        one_plus_t * bracket, Polynomial::binomial(2, -1) * Polynomial::binomial(4, -1));
    // P(ss) = P(N) / (1 - t^2) by running sums over each parity class.
    std::vector<Integer> coeffs(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        coeffs[k] = moduli.coeff(k);
        if (k >= 2) coeffs[k] += coeffs[k - 2];
    }
    return Series(std::move(coeffs));
}

}  // namespace hnbetti::hnrec
