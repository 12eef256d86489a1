// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <gmpxx.h>

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hnbetti/cli.hpp"
#include "hnbetti/document.hpp"
#include "hnbetti/genfun.hpp"
#include "hnbetti/hnrec.hpp"
#include "hnbetti/strata.hpp"
#include "strata_oracle.hpp"

using namespace hnbetti;
using exactalg::Integer;
using exactalg::Polynomial;
using exactalg::Series;

namespace {

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

Integer binomial(unsigned n, unsigned k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// 1. Jacobian: (1+t)^{2g}, dimension g.
void rank_one(double budget) {
    for (int g : {1, 2, 3, 5}) {
        const auto start = Clock::now();
        int code = 0;
        const auto json = run_cli({"betti", "--genus", std::to_string(g), "--rank", "1", "--deg", "0", "--format",
                                   "json"},
                                  code);
        const double elapsed = seconds_since(start);
        const std::string tag = "g=" + std::to_string(g);
        expect(code == cli::kExitOk, tag + ": exit " + std::to_string(code));
        const auto doc = cli::parse_json(json);
        const auto& report = std::get<hnrec::BettiReport>(doc.payload);
        expect(report.moduli_dimension == g, tag + ": dimension");
        expect(report.polynomial.length() == static_cast<std::size_t>(2 * g + 1), tag + ": length");
        for (int i = 0; i <= 2 * g; ++i)
            expect(report.polynomial.coeff(i) == binomial(2 * g, i), tag + ": b_" + std::to_string(i));
        expect(elapsed < budget, tag + ": took " + std::to_string(elapsed) + " s");
    }
}

// 2. Rank 2 against the closed-form oracle.
void rank_two() {
    const std::vector<Integer> expected{1, 4, 7, 12, 24, 32, 24, 12, 7, 4, 1};
    const auto r = hnrec::betti_poly(2, 2, 1);
    expect(r.polynomial == Polynomial(expected), "g=2 n=1 coefficients");
    expect(r.polynomial.degree() == std::optional<std::size_t>(10) && r.moduli_dimension == 5, "g=2 degree");
    expect(exactalg::is_palindromic(r.polynomial), "g=2 palindromic");
    for (int g : {2, 3}) {
        const std::vector<std::int64_t> degrees = g == 2 ? std::vector<std::int64_t>{1}
                                                         : std::vector<std::int64_t>{1, 3, -1};
        std::optional<Polynomial> first;
        for (std::int64_t n : degrees) {
            const auto report = hnrec::betti_poly(g, 2, n);
            const std::string tag = "g=" + std::to_string(g) + " n=" + std::to_string(n);
            const auto dim = static_cast<std::size_t>(report.moduli_dimension);
            const Series oracle = hnrec::rank2_oracle(g, n, 2 * dim + 4);
            // The oracle gives the semistable series; multiply back by (1 - t^2).
            const Series oracle_poly = oracle * Polynomial::binomial(2, -1);
            expect(Series::from_polynomial(report.polynomial, 2 * dim + 4) == oracle_poly, tag + ": oracle");
            expect(exactalg::is_palindromic(report.polynomial), tag + ": palindromic");
            if (first) expect(*first == report.polynomial, tag + ": shift in n");
            first = report.polynomial;
        }
    }
}

// 3. Residue route against the product formula.
void two_ways() {
    constexpr std::size_t order = 40;
    for (int g = 1; g <= 3; ++g)
        for (int r = 1; r <= 4; ++r) {
            const genfun::CurveContext curve(g);
            const auto a = genfun::residue_series(genfun::FactoredESeries(curve, r), order);
            const auto b = genfun::div_stable_series(curve, r, order);
            expect(a == b, "g=" + std::to_string(g) + " r=" + std::to_string(r));
        }
}

// 4. Finite divisor spaces stabilise below r*degD - n.
void stabilization() {
    bool deviation_seen = false;
    const std::vector<std::tuple<int, int, std::int64_t>> cases{{2, 2, 1}, {2, 3, 1}, {3, 2, 1}};
    for (const auto& [g, r, n] : cases) {
        const genfun::CurveContext curve(g);
        for (std::int64_t deg_d = 2; deg_d <= 8; ++deg_d) {
            const auto finite = genfun::div_finite_poly(curve, r, n, deg_d);
            const std::int64_t bound = r * deg_d - n;
            const std::size_t order = std::max<std::size_t>(finite.length(), static_cast<std::size_t>(bound)) + 1;
            const auto stable = genfun::div_stable_series(curve, r, order);
            const std::string tag = "(" + std::to_string(g) + "," + std::to_string(r) + "," + std::to_string(n) +
                                    ") degD=" + std::to_string(deg_d);
            for (std::int64_t i = 0; i < bound; ++i)
                expect(finite.coeff(static_cast<std::size_t>(i)) == stable[static_cast<std::size_t>(i)],
                       tag + ": t^" + std::to_string(i));
            for (std::size_t i = static_cast<std::size_t>(std::max<std::int64_t>(bound, 0)); i <= order; ++i)
                if (finite.coeff(i) != stable[i]) {
                    deviation_seen = true;
                    break;
                }
        }
    }
    expect(deviation_seen, "no deviation at or above the bound");
}

// 5. Stratification identity.
void additivity() {
    const std::vector<std::tuple<int, int, std::int64_t>> cases{{2, 2, 1}, {2, 3, 1}, {2, 3, 2}, {3, 2, 1}};
    for (const auto& [g, r, n] : cases) {
        const auto order = static_cast<std::size_t>(2 * hnrec::dim_moduli(g, r) + 10);
        const Series ss = hnrec::ss_series({g, r, n, order});
        Series total = ss;
        for (const auto& s : strata::enumerate_types(r, n, g, static_cast<std::int64_t>(order / 2))) {
            const auto shift = static_cast<std::size_t>(2 * s.codim);
            if (shift > order) continue;
            total += hnrec::stratum_series(g, s.type, order).shifted(shift);
        }
        const auto div = genfun::div_stable_series(genfun::CurveContext(g), r, order);
        expect(total == div, "(" + std::to_string(g) + "," + std::to_string(r) + "," + std::to_string(n) + ")");
    }
}

// 6. Enumerator against a bounded brute-force scan.
void enumeration() {
    constexpr int g = 2;
    for (int r = 1; r <= 3; ++r)
        for (std::int64_t n = -3; n <= 3; ++n)
            for (std::int64_t c = 0; c <= 12; ++c)
                expect(test::as_set(strata::enumerate_types(r, n, g, c)) == test::brute_force_types(r, n, g, c),
                       "r=" + std::to_string(r) + " n=" + std::to_string(n) + " C=" + std::to_string(c));
}

// 7. Structural checks on every coprime case up to rank 4, genus 3.
void structural(double per_case_budget, std::string& detail) {
    double slowest = 0;
    for (int g = 1; g <= 3; ++g)
        for (int r = 1; r <= 4; ++r)
            for (std::int64_t n = 0; n < r; ++n) {
                if (std::gcd<std::int64_t>(r, n) != 1) continue;
                const auto start = Clock::now();
                hnrec::BettiOptions opts;
                opts.enforce_checks = false;
                const auto rep = hnrec::betti_poly(g, r, n, opts);
                const double elapsed = seconds_since(start);
                slowest = std::max(slowest, elapsed);
                const std::string tag = "g=" + std::to_string(g) + " r=" + std::to_string(r) +
                                        " n=" + std::to_string(n);
                const auto top = static_cast<std::size_t>(2 * rep.moduli_dimension);
                expect(rep.truncation_used == top + hnrec::kDefaultSlack, tag + ": tail length");
                expect(rep.checks.nonnegative, tag + ": nonnegative");
                expect(rep.checks.palindromic, tag + ": palindromic");
                expect(rep.checks.tail_vanishes, tag + ": tail");
                expect(rep.checks.degree_matches_2dim, tag + ": degree");
                expect(rep.polynomial.coeff(0) == 1 && rep.polynomial.coeff(top) == 1, tag + ": b_0, b_top");
                expect(elapsed < per_case_budget, tag + ": took " + std::to_string(elapsed) + " s");
            }
    detail = "slowest case " + std::to_string(slowest) + " s";
}

// 8. Cold and warm cache give the same bytes.
void determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "hnbetti-acceptance-cache";
    fs::remove_all(dir);
    const std::vector<std::string> args{"betti", "--genus", "2", "--rank", "3", "--deg", "1",
                                        "--format", "json", "--cache-dir", dir.string()};
    int cold_code = 0, warm_code = 0;
    const auto cold = run_cli(args, cold_code);
    const bool populated = fs::exists(dir) && !fs::is_empty(dir);
    const auto warm = run_cli(args, warm_code);
    fs::remove_all(dir);
    expect(cold_code == 0 && warm_code == 0, "nonzero exit");
    expect(populated, "cold run left no cache entries");
    expect(!cold.empty() && cold == warm, "documents differ");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        double budget;
        std::function<void(std::string&)> body;
    };
    const std::vector<Criterion> criteria{
        {1, "rank-1 closed loop", 4.0, [](std::string&) { rank_one(1.0); }},
        {2, "rank-2 oracle", 5.0, [](std::string&) { rank_two(); }},
        {3, "residue series vs product formula", 5.0, [](std::string&) { two_ways(); }},
        {4, "stabilization of finite divisor spaces", 10.0, [](std::string&) { stabilization(); }},
        {5, "additivity of the stratification", 30.0, [](std::string&) { additivity(); }},
        {6, "enumeration completeness", 10.0, [](std::string&) { enumeration(); }},
        {7, "structural suite", 12 * 60.0, [](std::string& d) { structural(60.0, d); }},
        {8, "byte determinism, cold vs warm cache", 60.0, [](std::string&) { determinism(); }},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        std::string error;
        const auto start = Clock::now();
        try {
            c.body(detail);
        } catch (const Failure& f) {
            error = f.what;
        } catch (const std::exception& e) {
            error = std::string("exception: ") + e.what();
        }
        const double elapsed = seconds_since(start);
        if (error.empty() && elapsed >= c.budget) error = "over budget";
        const bool ok = error.empty();
        failures += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << "  (" << std::fixed
                  << std::setprecision(3) << elapsed << " s, budget " << std::setprecision(0) << c.budget << " s)";
        if (!detail.empty()) std::cout << "  " << detail;
        if (!ok) std::cout << "  -- " << error;
        std::cout << '\n';
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
