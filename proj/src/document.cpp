#include "hnbetti/document.hpp"

#include <json.hpp>

#include <sstream>
#include <utility>

#include "hnbetti/error.hpp"

namespace hnbetti::cli {

using exactalg::Integer;
using exactalg::Polynomial;
using exactalg::Series;
using Json = nlohmann::ordered_json;

namespace {

template <typename Term>
std::string format_terms(std::span<const Integer> coeffs, Term&& power) {
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Integer& c = coeffs[k];
        if (sgn(c) == 0) continue;
        const bool negative = sgn(c) < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Integer magnitude = abs(c);
        if (k == 0 || magnitude != 1) out += magnitude.get_str();
        if (k > 0) out += power(k);
    }
    return out.empty() ? "0" : out;
}

std::string text_power(std::size_t k) { return k == 1 ? "t" : "t^" + std::to_string(k); }
std::string latex_power(std::size_t k) { return k == 1 ? "t" : "t^{" + std::to_string(k) + "}"; }

std::span<const Integer> payload_coefficients(const OutputDocument& doc) {
    return std::visit(
        [](const auto& value) -> std::span<const Integer> {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, Polynomial> || std::is_same_v<T, Series>)
                return value.coefficients();
            else if constexpr (std::is_same_v<T, hnrec::BettiReport>)
                return value.polynomial.coefficients();
            else
                return {};
        },
        doc.payload);
}

std::string footer(const OutputDocument& doc) {
    std::ostringstream os;
    os << "[" << kind_name(doc.kind);
    const auto& m = doc.meta;
    if (m.genus) os << " genus=" << *m.genus;
    if (m.rank) os << " rank=" << *m.rank;
    if (m.degree) os << " degree=" << *m.degree;
    if (m.points) os << " points=" << *m.points;
    if (m.twist) os << " twist=" << *m.twist;
    if (m.max_codim) os << " max_codim=" << *m.max_codim;
    if (const auto* s = std::get_if<Series>(&doc.payload)) os << " truncation=" << s->order();
    if (const auto* b = std::get_if<hnrec::BettiReport>(&doc.payload)) os << " truncation=" << b->truncation_used;
    os << " | hnbetti " << m.version << "]\n";
    return os.str();
}

std::string checks_summary(const hnrec::BettiChecks& c) {
    if (c.all()) return "all pass";
    std::string failed;
    const auto note = [&](bool ok, const char* name) {
        if (ok) return;
        if (!failed.empty()) failed += ",";
        failed += name;
    };
    note(c.palindromic, "palindromic");
    note(c.degree_matches_2dim, "degree_matches_2dim");
    note(c.tail_vanishes, "tail_vanishes");
    note(c.nonnegative, "nonnegative");
    return "FAILED " + failed;
}

std::string piece_list(const strata::HNType& type, char sep) {
    std::string out;
    for (const auto& p : type.pieces())
        out += "(" + std::to_string(p.rank) + sep + std::to_string(p.degree) + ")";
    return out;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_field(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

std::vector<Integer> parse_coefficients(const Json& j) {
    if (!j.is_array()) throw InvalidArgument("'coefficients' must be an array of decimal strings");
    std::vector<Integer> out;
    out.reserve(j.size());
    for (const auto& c : j) {
        if (!c.is_string()) throw InvalidArgument("coefficients must be decimal strings");
        out.push_back(exactalg::parse_decimal(c.get<std::string>()));
    }
    return out;
}

}  // namespace

std::string_view kind_name(DocumentKind kind) noexcept {
    switch (kind) {
        case DocumentKind::polynomial: return "polynomial";
        case DocumentKind::series: return "series";
        case DocumentKind::type_list: return "type-list";
        case DocumentKind::betti_report: return "betti-report";
    }
    return "unknown";
}

OutputDocument polynomial_document(Polynomial p, Metadata meta) {
    return {DocumentKind::polynomial, std::move(meta), std::move(p)};
}
OutputDocument series_document(Series s, Metadata meta) {
    return {DocumentKind::series, std::move(meta), std::move(s)};
}
OutputDocument type_list_document(TypeList types, Metadata meta) {
    return {DocumentKind::type_list, std::move(meta), std::move(types)};
}
OutputDocument betti_document(hnrec::BettiReport report, Metadata meta) {
    return {DocumentKind::betti_report, std::move(meta), std::move(report)};
}

Format parse_format(std::string_view name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "latex") return Format::latex;
    if (name == "csv") return Format::csv;
    throw InvalidArgument("unknown format '" + std::string(name) + "' (expected text, json, latex or csv)");
}

std::string format_polynomial_text(const Polynomial& p) { return format_terms(p.coefficients(), text_power); }
std::string format_polynomial_latex(const Polynomial& p) { return format_terms(p.coefficients(), latex_power); }

std::string render(const OutputDocument& doc, Format format) {
    switch (format) {
        case Format::text: return render_text(doc);
        case Format::json: return render_json(doc);
        case Format::latex: return render_latex(doc);
        case Format::csv: return render_csv(doc);
    }
    return {};
}

std::string render_json(const OutputDocument& doc) {
    Json j;
    j["kind"] = std::string(kind_name(doc.kind));
    j["genus"] = optional_json(doc.meta.genus);
    j["rank"] = optional_json(doc.meta.rank);
    j["degree"] = optional_json(doc.meta.degree);
    j["variable"] = "t";

    if (doc.kind == DocumentKind::type_list) {
        j["coefficients"] = nullptr;
    } else {
        Json coeffs = Json::array();
        for (const auto& c : payload_coefficients(doc)) coeffs.push_back(c.get_str());
        if (coeffs.empty()) coeffs.push_back("0");
        j["coefficients"] = std::move(coeffs);
    }

    j["truncation"] = nullptr;
    j["dimension"] = nullptr;
    j["checks"] = nullptr;
    if (const auto* s = std::get_if<Series>(&doc.payload)) j["truncation"] = s->order();
    if (const auto* b = std::get_if<hnrec::BettiReport>(&doc.payload)) {
        j["truncation"] = b->truncation_used;
        j["dimension"] = b->moduli_dimension;
        j["checks"] = Json{{"palindromic", b->checks.palindromic},
                           {"degree_matches_2dim", b->checks.degree_matches_2dim},
                           {"tail_vanishes", b->checks.tail_vanishes},
                           {"nonnegative", b->checks.nonnegative}};
    }
    if (const auto* types = std::get_if<TypeList>(&doc.payload)) {
        Json list = Json::array();
        for (const auto& s : *types) {
            Json pieces = Json::array();
            for (const auto& p : s.type.pieces()) pieces.push_back(Json::array({p.rank, p.degree}));
            list.push_back(Json{{"codim", s.codim}, {"pieces", std::move(pieces)}});
        }
        j["types"] = std::move(list);
    }
    if (doc.meta.points) j["points"] = *doc.meta.points;
    if (doc.meta.twist) j["twist"] = *doc.meta.twist;
    if (doc.meta.max_codim) j["max_codim"] = *doc.meta.max_codim;
    j["version"] = doc.meta.version;
    return j.dump(2) + "\n";
}

OutputDocument parse_json(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed JSON document: ") + e.what());
    }
    try {
        if (!j.is_object()) throw InvalidArgument("JSON document must be an object");
        if (j.value("variable", "") != "t") throw InvalidArgument("JSON document variable must be \"t\"");
        Metadata meta;
        meta.genus = optional_field<int>(j, "genus");
        meta.rank = optional_field<int>(j, "rank");
        meta.degree = optional_field<std::int64_t>(j, "degree");
        meta.points = optional_field<std::int64_t>(j, "points");
        meta.twist = optional_field<std::int64_t>(j, "twist");
        meta.max_codim = optional_field<std::int64_t>(j, "max_codim");
        meta.version = j.at("version").get<std::string>();

        const auto kind = j.at("kind").get<std::string>();
        if (kind == "polynomial") return polynomial_document(Polynomial(parse_coefficients(j.at("coefficients"))), meta);
        if (kind == "series") {
            auto coeffs = parse_coefficients(j.at("coefficients"));
            const auto order = j.at("truncation").get<std::size_t>();
            if (coeffs.size() != order + 1)
                throw InvalidArgument("series document has " + std::to_string(coeffs.size()) +
                                      " coefficients for truncation " + std::to_string(order));
            return series_document(Series(std::move(coeffs)), meta);
        }
        if (kind == "type-list") {
            TypeList types;
            for (const auto& entry : j.at("types")) {
                std::vector<strata::Piece> pieces;
                for (const auto& p : entry.at("pieces"))
                    pieces.push_back({p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()});
                types.push_back({strata::HNType(std::move(pieces)), entry.at("codim").get<std::int64_t>()});
            }
            return type_list_document(std::move(types), meta);
        }
        if (kind == "betti-report") {
            hnrec::BettiReport report;
            report.polynomial = Polynomial(parse_coefficients(j.at("coefficients")));
            report.moduli_dimension = j.at("dimension").get<std::int64_t>();
            report.truncation_used = j.at("truncation").get<std::size_t>();
            const auto& c = j.at("checks");
            report.checks = {c.at("palindromic").get<bool>(), c.at("degree_matches_2dim").get<bool>(),
                             c.at("tail_vanishes").get<bool>(), c.at("nonnegative").get<bool>()};
            return betti_document(std::move(report), meta);
        }
        throw InvalidArgument("unknown document kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("invalid JSON document: ") + e.what());
    }
}

std::string render_text(const OutputDocument& doc) {
    std::string body;
    switch (doc.kind) {
        case DocumentKind::polynomial:
            body = format_polynomial_text(std::get<Polynomial>(doc.payload)) + "\n";
            break;
        case DocumentKind::series: {
            const auto& s = std::get<Series>(doc.payload);
            const std::string head = format_polynomial_text(s.to_polynomial());
            body = (head == "0" ? std::string() : head + " + ") + "O(" + text_power(s.order() + 1) + ")\n";
            break;
        }
        case DocumentKind::type_list: {
            const auto& types = std::get<TypeList>(doc.payload);
            if (types.empty()) body = "(no proper types)\n";
            for (const auto& s : types) body += "codim " + std::to_string(s.codim) + ": " + s.type.to_string() + "\n";
            break;
        }
        case DocumentKind::betti_report: {
            const auto& b = std::get<hnrec::BettiReport>(doc.payload);
            body = format_polynomial_text(b.polynomial) + "  (dim " + std::to_string(b.moduli_dimension) +
                   ", checks: " + checks_summary(b.checks) + ")\n";
            break;
        }
    }
    return body + footer(doc);
}

std::string render_latex(const OutputDocument& doc) {
    switch (doc.kind) {
        case DocumentKind::polynomial:
            return format_polynomial_latex(std::get<Polynomial>(doc.payload)) + "\n";
        case DocumentKind::series: {
            const auto& s = std::get<Series>(doc.payload);
            const std::string head = format_polynomial_latex(s.to_polynomial());
            return (head == "0" ? std::string() : head + " + ") + "O(" + latex_power(s.order() + 1) + ")\n";
        }
        case DocumentKind::betti_report:
            return format_polynomial_latex(std::get<hnrec::BettiReport>(doc.payload).polynomial) + "\n";
        case DocumentKind::type_list: {
            std::string out = "\\begin{array}{rl}\n";
            for (const auto& s : std::get<TypeList>(doc.payload))
                out += std::to_string(s.codim) + " & " + piece_list(s.type, ',') + " \\\\\n";
            return out + "\\end{array}\n";
        }
    }
    return {};
}

std::string render_csv(const OutputDocument& doc) {
    std::string out;
    if (const auto* types = std::get_if<TypeList>(&doc.payload)) {
        for (const auto& s : *types) out += std::to_string(s.codim) + "," + piece_list(s.type, ';') + "\n";
        return out;
    }
    const auto coeffs = payload_coefficients(doc);
    if (coeffs.empty()) return "0,0\n";
    for (std::size_t k = 0; k < coeffs.size(); ++k) out += std::to_string(k) + "," + coeffs[k].get_str() + "\n";
    return out;
}

}  // namespace hnbetti::cli
