#ifndef HNBETTI_STRATA_HPP
#define HNBETTI_STRATA_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

// Harder-Narasimhan types, Shatz polygons and the codimension of the
// corresponding strata of the ind-variety of divisors.

namespace hnbetti::strata {

struct Piece {
    std::int64_t rank;
    std::int64_t degree;

    friend auto operator<=>(const Piece&, const Piece&) = default;
};

struct Vertex {
    std::int64_t rank;
    std::int64_t degree;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Ordered list of semistable subquotient (rank, degree) pairs with strictly
/// decreasing slopes. Slopes are compared by cross-multiplication only.
class HNType {
public:
    // Throws InvalidArgument naming the first offending index.
    explicit HNType(std::vector<Piece> pieces);

    const std::vector<Piece>& pieces() const noexcept { return pieces_; }
    std::size_t length() const noexcept { return pieces_.size(); }
    std::int64_t total_rank() const noexcept;
    std::int64_t total_degree() const noexcept;

    // "(1,1)(1,0)"
    std::string to_string() const;

    friend auto operator<=>(const HNType&, const HNType&) = default;

private:
    std::vector<Piece> pieces_;
};

/// Vertices (0,0) = (r_0,d_0), ..., (r_l,d_l) of a strictly convex polygon
/// with strictly increasing ranks.
class ShatzPolygon {
public:
    // Throws InvalidArgument naming the first offending index.
    explicit ShatzPolygon(std::vector<Vertex> vertices);

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

    friend bool operator==(const ShatzPolygon&, const ShatzPolygon&) = default;

private:
    std::vector<Vertex> vertices_;
};

// (r'_i, d'_i) = (r_i - r_{i-1}, d_i - d_{i-1}) and its inverse (prefix sums).
HNType type_from_vertices(const ShatzPolygon& polygon);
ShatzPolygon vertices_from_type(const HNType& type);

// Codimension of the stratum, in integral form
//   sum_{i>j} (r'_i d'_j - r'_j d'_i) + r'_i r'_j (g-1).
// Requires g >= 1.
std::int64_t codim(const HNType& type, int genus);

struct Stratum {
    HNType type;
    std::int64_t codim;

    friend auto operator<=>(const Stratum&, const Stratum&) = default;
};

// All proper types (length >= 2) of total rank r and degree n with
// codim <= max_codim, sorted by (codim, pieces). Rejects g < 1 and r < 1.
std::vector<Stratum> enumerate_types(int rank, std::int64_t degree, int genus, std::int64_t max_codim);

}  // namespace hnbetti::strata

#endif  // HNBETTI_STRATA_HPP
