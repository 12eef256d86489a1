#ifndef HNBETTI_HNREC_HPP
#define HNBETTI_HNREC_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <tuple>

#include "hnbetti/exactalg/polynomial.hpp"
#include "hnbetti/exactalg/series.hpp"
#include "hnbetti/strata.hpp"

// Semistable divisor series by subtracting Harder-Narasimhan strata from the
// stable divisor series, and Betti polynomials of the moduli space N(r,n)
// obtained from them.

namespace hnbetti::hnrec {

using exactalg::Polynomial;
using exactalg::Series;

struct ModuliQuery {
    int genus;
    int rank;
    std::int64_t degree;
    std::size_t truncation;

    friend auto operator<=>(const ModuliQuery&, const ModuliQuery&) = default;
};

struct BettiChecks {
    bool palindromic = false;
    bool degree_matches_2dim = false;
    bool tail_vanishes = false;
    bool nonnegative = false;

    bool all() const noexcept { return palindromic && degree_matches_2dim && tail_vanishes && nonnegative; }
    friend bool operator==(const BettiChecks&, const BettiChecks&) = default;
};

struct BettiReport {
    Polynomial polynomial;
    std::int64_t moduli_dimension = 0;
    std::size_t truncation_used = 0;
    BettiChecks checks;

    friend bool operator==(const BettiReport&, const BettiReport&) = default;
};

/// Storage behind a MemoStore, e.g. a cache directory. Implementations must
/// be safe to call from several threads and must never throw on corrupt
/// content: a bad entry is a miss.
class SeriesBacking {
public:
    virtual ~SeriesBacking() = default;
    // A stored series for (genus, rank, degree) with order >= q.truncation.
    virtual std::optional<Series> load(const ModuliQuery& q) = 0;
    virtual void store(const ModuliQuery& q, const Series& s) = 0;
};

/// Semistable series keyed on exact (g, r, n, T).
///
/// A request is served by any entry with the same (g, r, n) and a larger
/// order, truncated. Entries never change: re-inserting an equal value is a
/// no-op, inserting a value that disagrees with an existing entry on their
/// common prefix throws CheckFailure. Readers proceed concurrently, writers
/// are serialized.
class MemoStore {
public:
    explicit MemoStore(SeriesBacking* backing = nullptr) : backing_(backing) {}
    MemoStore(const MemoStore&) = delete;
    MemoStore& operator=(const MemoStore&) = delete;

    std::optional<Series> find(const ModuliQuery& q);
    void insert(const ModuliQuery& q, const Series& s);
    std::size_t size() const;

private:
    using Family = std::tuple<int, int, std::int64_t>;

    std::optional<Series> find_in_memory(const ModuliQuery& q) const;
    // Returns true when the entry was new.
    bool insert_in_memory(const ModuliQuery& q, const Series& s);

    mutable std::shared_mutex mutex_;
    std::map<Family, std::map<std::size_t, Series>> entries_;
    SeriesBacking* backing_;
};

/// The stratification recursion over one memo store.
class Recursion {
public:
    explicit Recursion(MemoStore& memo) : memo_(memo) {}

    // Semistable divisor series P((Div^{r,n})^ss; t) to t^T. Requires g >= 1.
    Series ss_series(const ModuliQuery& q);

    // Product of the semistable series of the pieces, to t^order.
    Series stratum_series(int genus, const strata::HNType& type, std::size_t order);

private:
    MemoStore& memo_;
};

// One-shot variants over a private memo store.
Series ss_series(const ModuliQuery& q);
Series stratum_series(int genus, const strata::HNType& type, std::size_t order);

// 1 + r^2 (g - 1)
std::int64_t dim_moduli(int genus, int rank);

inline constexpr std::size_t kDefaultSlack = 10;

struct BettiOptions {
    // Default 2*dim + slack.
    std::optional<std::size_t> truncation;
    std::size_t slack = kDefaultSlack;
    // When false a report is returned even if checks fail. Only reachable from
    // the CLI in builds configured with HNBETTI_ENABLE_UNSAFE.
    bool enforce_checks = true;
};

// P(N(r,n); t) = (1 - t^2) P(ss; t). Requires gcd(r, n) = 1 and g >= 1.
// Throws CheckFailure with a coefficient dump when any structural check fails.
BettiReport betti_poly(int genus, int rank, std::int64_t degree, MemoStore& memo,
                       const BettiOptions& options = {});
BettiReport betti_poly(int genus, int rank, std::int64_t degree, const BettiOptions& options = {});

// Semistable rank-2 series for odd n from the closed geometric sum over the
// types (1,d)(1,n-d), computed without the recursion or the enumerator.
Series rank2_oracle(int genus, std::int64_t degree, std::size_t order);

}  // namespace hnbetti::hnrec

#endif  // HNBETTI_HNREC_HPP
