#include "hnbetti/strata.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "hnbetti/error.hpp"

namespace hnbetti::strata {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// slope(a) > slope(b)
bool steeper(std::int64_t ra, std::int64_t da, std::int64_t rb, std::int64_t db) {
    return da * rb > db * ra;
}

}  // namespace

HNType::HNType(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw InvalidArgument("HN type needs at least one piece");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (pieces_[i].rank < 1)
            throw InvalidArgument("HN type piece " + std::to_string(i) + " has rank < 1");
        if (i > 0 && !steeper(pieces_[i - 1].rank, pieces_[i - 1].degree, pieces_[i].rank, pieces_[i].degree))
            throw InvalidArgument("HN type piece " + std::to_string(i) +
                                  " does not have strictly smaller slope than its predecessor");
    }
}

std::int64_t HNType::total_rank() const noexcept {
    std::int64_t r = 0;
    for (const auto& p : pieces_) r += p.rank;
    return r;
}

std::int64_t HNType::total_degree() const noexcept {
    std::int64_t d = 0;
    for (const auto& p : pieces_) d += p.degree;
    return d;
}

std::string HNType::to_string() const {
    std::string out;
    for (const auto& p : pieces_) out += "(" + std::to_string(p.rank) + "," + std::to_string(p.degree) + ")";
    return out;
}

ShatzPolygon::ShatzPolygon(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) throw InvalidArgument("Shatz polygon needs at least two vertices");
    if (vertices_[0] != Vertex{0, 0}) throw InvalidArgument("Shatz polygon vertex 0 must be (0,0)");
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        const std::int64_t dr = vertices_[i].rank - vertices_[i - 1].rank;
        const std::int64_t dd = vertices_[i].degree - vertices_[i - 1].degree;
        if (dr < 1)
            throw InvalidArgument("Shatz polygon vertex " + std::to_string(i) + " does not increase the rank");
        if (i >= 2) {
            const std::int64_t pr = vertices_[i - 1].rank - vertices_[i - 2].rank;
            const std::int64_t pd = vertices_[i - 1].degree - vertices_[i - 2].degree;
            if (!steeper(pr, pd, dr, dd))
                throw InvalidArgument("Shatz polygon is not strictly convex at vertex " + std::to_string(i - 1));
        }
    }
}

HNType type_from_vertices(const ShatzPolygon& polygon) {
    const auto& v = polygon.vertices();
    std::vector<Piece> pieces;
    pieces.reserve(v.size() - 1);
    for (std::size_t i = 1; i < v.size(); ++i)
        pieces.push_back({v[i].rank - v[i - 1].rank, v[i].degree - v[i - 1].degree});
    return HNType(std::move(pieces));
}

ShatzPolygon vertices_from_type(const HNType& type) {
    std::vector<Vertex> v{{0, 0}};
    for (const auto& p : type.pieces()) v.push_back({v.back().rank + p.rank, v.back().degree + p.degree});
    return ShatzPolygon(std::move(v));
}

std::int64_t codim(const HNType& type, int genus) {
    if (genus < 1) throw InvalidArgument("stratum codimension is only defined here for genus >= 1");
    const auto& p = type.pieces();
    std::int64_t total = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            total += (p[i].rank * p[j].degree - p[j].rank * p[i].degree) +
                     p[i].rank * p[j].rank * (genus - 1);
    return total;
}

// Termination bound.
//
// Write a type as a first piece (r1, d1) followed by a type of the remaining
// rank R - r1 and degree N - d1. Summing the pair terms of the codimension
// that involve the first piece gives
//
//     cost(r1, d1) = R*d1 - r1*N + r1*(R - r1)*(g - 1),
//
// independently of how the remainder splits, and codim(type) = cost of the
// first piece + codim(remainder). The slope of the first piece exceeds the
// slope of the remainder, equivalently d1/r1 > N/R, so R*d1 - r1*N >= 1 and,
// for g >= 1, cost >= 1. Hence a budget B admits only
//
//     floor(r1*N/R) + 1 <= d1 <= floor((B + r1*N - r1*(R-r1)*(g-1)) / R),
//
// and the remainder is the same problem with budget B - cost and a slope
// ceiling d1/r1. Every branch that passes the bound has at least one
// completion (the remainder as a single piece), so the search visits only
// prefixes of actual results.
namespace {

struct Search {
    int genus;
    std::int64_t max_codim;
    std::vector<Piece> prefix;
    std::vector<Stratum> out;

    void run(std::int64_t rank, std::int64_t degree, std::optional<Piece> ceiling, std::int64_t spent) {
        const std::int64_t budget = max_codim - spent;
        // Close the type with a single final piece.
        if (!prefix.empty() && (!ceiling || steeper(ceiling->rank, ceiling->degree, rank, degree))) {
            prefix.push_back({rank, degree});
            out.push_back({HNType(prefix), spent});
            prefix.pop_back();
        }
        for (std::int64_t r1 = 1; r1 < rank; ++r1) {
            const std::int64_t fixed = r1 * (rank - r1) * (genus - 1);
            std::int64_t lo = floor_div(r1 * degree, rank) + 1;
            std::int64_t hi = floor_div(budget + r1 * degree - fixed, rank);
            if (ceiling) hi = std::min(hi, floor_div(ceiling->degree * r1 - 1, ceiling->rank));
            for (std::int64_t d1 = lo; d1 <= hi; ++d1) {
                const std::int64_t cost = rank * d1 - r1 * degree + fixed;
                prefix.push_back({r1, d1});
                run(rank - r1, degree - d1, Piece{r1, d1}, spent + cost);
                prefix.pop_back();
            }
        }
    }
};

}  // namespace

std::vector<Stratum> enumerate_types(int rank, std::int64_t degree, int genus, std::int64_t max_codim) {
    if (rank < 1) throw InvalidArgument("rank must be at least 1, got " + std::to_string(rank));
    if (genus < 1)
        throw InvalidArgument("type enumeration requires genus >= 1: the codimension bound fails for genus " +
                              std::to_string(genus));
    Search search{genus, max_codim, {}, {}};
    if (max_codim >= 0) search.run(rank, degree, std::nullopt, 0);
    std::sort(search.out.begin(), search.out.end(), [](const Stratum& a, const Stratum& b) {
        if (a.codim != b.codim) return a.codim < b.codim;
        return a.type < b.type;
    });
    return std::move(search.out);
}

}  // namespace hnbetti::strata
