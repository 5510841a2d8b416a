#pragma once

#include <optional>
#include <vector>

#include "homsys/mat.hpp"

namespace homsys {

struct RrefResult {
    Mat mat;
    std::uint32_t rank = 0;
    std::vector<std::uint32_t> pivots;
};

// Reduced row-echelon form; idempotent.
RrefResult rref(const Mat& m);

std::uint32_t rank(const Mat& m);

// A subspace of GF(p)^ambient, canonically represented by its RREF basis.
// Two subspaces are equal iff their representations compare equal.
struct Subspace {
    std::uint32_t ambient = 0;
    Mat basis;  // basis vectors as rows, RREF, no zero rows

    static Subspace zero(std::uint32_t ambient, PrimeField f);
    static Subspace full(std::uint32_t ambient, PrimeField f);
    // Span of arbitrary row vectors (canonicalized).
    static Subspace span(const Mat& vectors_as_rows);

    std::uint32_t dim() const { return basis.rows; }
    PrimeField field() const { return basis.fld; }
    bool is_zero() const { return basis.rows == 0; }
    bool is_full() const { return basis.rows == ambient; }

    bool contains_vector(const Mat& row) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace&) const = default;
};

// Right kernel {x : m x = 0}, solutions stored as rows.
Subspace kernel(const Mat& m);

// Some x with a x = b, or nullopt when inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);

// Throws on non-square or singular input.
Mat inverse(const Mat& m);

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
// Image {m x : x in u} of a subspace under a matrix (column-vector action).
Subspace image(const Mat& m, const Subspace& u);

// Coordinates on GF(p)^n / U: proj is (n-d) x n with kernel exactly U, and
// section is a right inverse of proj (n x (n-d)).
struct QuotientMap {
    Mat proj;
    Mat section;
};
QuotientMap quotient_map(const Subspace& u);

}  // namespace homsys
