#include "hnbetti/cli.hpp"

#include <CLI11.hpp>

#include <memory>
#include <optional>
#include <ostream>

#include "hnbetti/cache.hpp"
#include "hnbetti/document.hpp"
#include "hnbetti/error.hpp"
#include "hnbetti/genfun.hpp"
#include "hnbetti/hnrec.hpp"
#include "hnbetti/strata.hpp"

namespace hnbetti::cli {

namespace {

struct Common {
    std::string format = "text";
    std::optional<std::string> cache_dir;
    bool strict_cache = false;
};

struct Args {
    int genus = 0;
    int rank = 0;
    std::optional<std::int64_t> degree;
    std::int64_t points = 0;
    std::int64_t twist = 0;
    std::int64_t max_codim = 0;
    std::optional<std::int64_t> truncate;
    bool skip_checks = false;
    bool unsafe = false;
};

void add_common(CLI::App* sub, Common& common) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex", "csv"}))
        ->capture_default_str();
    sub->add_option("--cache-dir", common.cache_dir,
                    "Persistent memo cache directory (default: $HNBETTI_CACHE_DIR, else none)");
    sub->add_flag("--strict-cache", common.strict_cache, "Treat cache warnings as errors (exit 4)");
}

std::size_t truncation_from(std::int64_t t) {
    if (t < 0) throw InvalidArgument("truncation must be nonnegative, got " + std::to_string(t));
    return static_cast<std::size_t>(t);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Poincare polynomials of symmetric products, divisor varieties and moduli of "
                 "stable bundles on a curve",
                 "hnbetti"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", std::string(kToolVersion));

    Common common;
    Args a;

    auto* sympoly = app.add_subcommand("sympoly", "Poincare polynomial of the symmetric product C^(M)");
    sympoly->add_option("--genus", a.genus, "Curve genus")->required();
    sympoly->add_option("--points", a.points, "Number of points M")->required();

    auto* divpoly = app.add_subcommand("divpoly", "Finite-level divisor variety Div^{R,N}(D) with deg D = DEGD");
    divpoly->add_option("--genus", a.genus)->required();
    divpoly->add_option("--rank", a.rank)->required();
    divpoly->add_option("--deg", a.degree)->required();
    divpoly->add_option("--twist", a.twist, "deg D")->required();

    auto* divseries = app.add_subcommand("divseries", "Stable divisor series (independent of the degree)");
    divseries->add_option("--genus", a.genus)->required();
    divseries->add_option("--rank", a.rank)->required();
    divseries->add_option("--truncate", a.truncate)->required();
    divseries->add_option("--deg", a.degree, "Accepted and ignored: the stable series does not depend on it");

    auto* polygons = app.add_subcommand("polygons", "Proper Harder-Narasimhan types up to a codimension");
    polygons->add_option("--genus", a.genus)->required();
    polygons->add_option("--rank", a.rank)->required();
    polygons->add_option("--deg", a.degree)->required();
    polygons->add_option("--max-codim", a.max_codim)->required();

    auto* ssseries = app.add_subcommand("ssseries", "Semistable divisor series");
    ssseries->add_option("--genus", a.genus)->required();
    ssseries->add_option("--rank", a.rank)->required();
    ssseries->add_option("--deg", a.degree)->required();
    ssseries->add_option("--truncate", a.truncate)->required();

    auto* betti = app.add_subcommand("betti", "Betti polynomial of N(R,N) for coprime R, N");
    betti->add_option("--genus", a.genus)->required();
    betti->add_option("--rank", a.rank)->required();
    betti->add_option("--deg", a.degree)->required();
    betti->add_option("--truncate", a.truncate, "Default 2*dim + 10");
    betti->add_flag("--skip-checks", a.skip_checks, "Emit the report even if structural checks fail (unsafe builds only)");
    betti->add_flag("--unsafe", a.unsafe, "Acknowledge --skip-checks");

    for (auto* sub : {sympoly, divpoly, divseries, polygons, ssseries, betti}) add_common(sub, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidArgument;
    }

    std::unique_ptr<DirectoryCache> cache;
    try {
        const Format format = parse_format(common.format);
        if (auto dir = resolve_cache_dir(common.cache_dir)) cache = std::make_unique<DirectoryCache>(*dir);
        hnrec::MemoStore memo(cache.get());

        Metadata meta;
        meta.genus = a.genus;
        std::optional<OutputDocument> doc;
        if (sympoly->parsed()) {
            meta.points = a.points;
            doc = polynomial_document(genfun::sym_product_poly(genfun::CurveContext(a.genus), a.points), meta);
        } else if (divpoly->parsed()) {
            meta.rank = a.rank;
            meta.degree = a.degree;
            meta.twist = a.twist;
            doc = polynomial_document(
                genfun::div_finite_poly(genfun::CurveContext(a.genus), a.rank, *a.degree, a.twist), meta);
        } else if (divseries->parsed()) {
            meta.rank = a.rank;
            meta.degree = a.degree;
            doc = series_document(
                genfun::div_stable_series(genfun::CurveContext(a.genus), a.rank, truncation_from(*a.truncate)), meta);
        } else if (polygons->parsed()) {
            meta.rank = a.rank;
            meta.degree = a.degree;
            meta.max_codim = a.max_codim;
            doc = type_list_document(strata::enumerate_types(a.rank, *a.degree, a.genus, a.max_codim), meta);
        } else if (ssseries->parsed()) {
            meta.rank = a.rank;
            meta.degree = a.degree;
            const hnrec::ModuliQuery q{a.genus, a.rank, *a.degree, truncation_from(*a.truncate)};
            doc = series_document(hnrec::Recursion(memo).ss_series(q), meta);
        } else if (betti->parsed()) {
            meta.rank = a.rank;
            meta.degree = a.degree;
            hnrec::BettiOptions options;
            if (a.truncate) options.truncation = truncation_from(*a.truncate);
            if (a.skip_checks) {
#if defined(HNBETTI_ENABLE_UNSAFE)
                if (!a.unsafe) throw InvalidArgument("--skip-checks must be acknowledged with --unsafe");
                options.enforce_checks = false;
#else
                throw InvalidArgument("--skip-checks is only available in builds configured with HNBETTI_ENABLE_UNSAFE=ON");
#endif
            }
            doc = betti_document(hnrec::betti_poly(a.genus, a.rank, *a.degree, memo, options), meta);
        }

        if (cache) {
            const auto warnings = cache->warnings();
            for (const auto& w : warnings) err << "warning: " << w << "\n";
            if (common.strict_cache && !warnings.empty()) {
                err << "error: cache warnings escalated by --strict-cache\n";
                return kExitCacheWarning;
            }
        }
        out << render(*doc, format);
        return kExitOk;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidArgument;
    } catch (const CheckFailure& e) {
        err << "internal check failure: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const ArithmeticError& e) {
        err << "internal check failure: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const CacheError& e) {
        err << "cache error: " << e.what() << "\n";
        return kExitCacheWarning;
    }
}

}  // namespace hnbetti::cli
