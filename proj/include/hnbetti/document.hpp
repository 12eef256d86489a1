#ifndef HNBETTI_DOCUMENT_HPP
#define HNBETTI_DOCUMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hnbetti/exactalg/polynomial.hpp"
#include "hnbetti/exactalg/series.hpp"
#include "hnbetti/hnrec.hpp"
#include "hnbetti/strata.hpp"

namespace hnbetti::cli {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class DocumentKind { polynomial, series, type_list, betti_report };

std::string_view kind_name(DocumentKind kind) noexcept;

struct Metadata {
    std::optional<int> genus;
    std::optional<int> rank;
    // Bundle degree n.
    std::optional<std::int64_t> degree;
    std::optional<std::int64_t> points;     // sympoly
    std::optional<std::int64_t> twist;      // divpoly: deg D
    std::optional<std::int64_t> max_codim;  // polygons
    std::string version{kToolVersion};

    friend bool operator==(const Metadata&, const Metadata&) = default;
};

using TypeList = std::vector<strata::Stratum>;
using Payload = std::variant<exactalg::Polynomial, exactalg::Series, TypeList, hnrec::BettiReport>;

struct OutputDocument {
    DocumentKind kind;
    Metadata meta;
    Payload payload;

    friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

OutputDocument polynomial_document(exactalg::Polynomial p, Metadata meta);
OutputDocument series_document(exactalg::Series s, Metadata meta);
OutputDocument type_list_document(TypeList types, Metadata meta);
OutputDocument betti_document(hnrec::BettiReport report, Metadata meta);

enum class Format { text, json, latex, csv };

// Throws InvalidArgument for an unknown name.
Format parse_format(std::string_view name);

// Every renderer ends its output with a single LF.
std::string render(const OutputDocument& doc, Format format);
std::string render_json(const OutputDocument& doc);
std::string render_text(const OutputDocument& doc);
std::string render_latex(const OutputDocument& doc);
std::string render_csv(const OutputDocument& doc);

// Inverse of render_json. Throws InvalidArgument on malformed input.
OutputDocument parse_json(std::string_view text);

// "1 + 4t - t^2"; "0" for the zero polynomial.
std::string format_polynomial_text(const exactalg::Polynomial& p);
// "1 + 4t + t^{2}"
std::string format_polynomial_latex(const exactalg::Polynomial& p);

}  // namespace hnbetti::cli

#endif  // HNBETTI_DOCUMENT_HPP
