#pragma once

#include "homsys/rep.hpp"

namespace homsys {

// One matrix per arrow, delta_a : X_{s(a)} -> Y_{t(a)}, for a fixed pair
// (X, Y). Realized as the extension with arrow maps [[Y_a, delta_a], [0, X_a]].
struct Cochain {
    std::vector<Mat> per_arrow;

    bool operator==(const Cochain&) const = default;
};

// Ext^1(X, Y) through the arrow-cochain model: cocycles are the cochains
// whose block extension still satisfies every relation, coboundaries are the
// cochains of the form (Y_a c_{s(a)} - c_{t(a)} X_a).
struct ExtSpace {
    std::vector<std::uint32_t> offsets;                       // flattening offset per arrow
    std::vector<std::pair<std::uint32_t, std::uint32_t>> shapes;  // (rows, cols) per arrow
    std::uint32_t cochain_len = 0;
    PrimeField fld;
    Subspace cocycles;      // Z^1, flattened
    Subspace coboundaries;  // B^1 (subset of Z^1)

    std::uint32_t dim() const { return cocycles.dim() - coboundaries.dim(); }
    Cochain unpack(const Mat& flat_row) const;
    Mat pack(const Cochain& c) const;
    // Combination of the Z^1 basis with the given coefficients.
    Cochain cocycle(const std::vector<std::uint32_t>& coeffs) const;
    Cochain zero() const;
    bool is_coboundary(const Cochain& c) const;
};

ExtSpace ext_space(const BoundQuiverAlgebra& alg, const Representation& X, const Representation& Y);

// 0 -> sub -> middle -> quot -> 0 with explicit inclusion and projection.
struct ShortExactSequence {
    Representation sub;
    Representation middle;
    Representation quot;
    HomTuple inclusion;   // sub -> middle
    HomTuple projection;  // middle -> quot
};

bool ses_valid(const BoundQuiverAlgebra& alg, const ShortExactSequence& seq);

// Realizes a cocycle as 0 -> Y -> E -> X -> 0 with the sub block first.
// Throws when delta violates a relation (not a cocycle).
ShortExactSequence build_extension(const BoundQuiverAlgebra& alg, const Representation& X,
                                   const Representation& Y, const Cochain& delta);

// A right inverse of the projection that is a module map; present iff the
// sequence splits. One joint linear system over all vertices and arrows.
std::optional<HomTuple> find_section(const BoundQuiverAlgebra& alg, const ShortExactSequence& seq);

// Image of a section: a submodule of the middle isomorphic to quot and
// complementary to the image of the inclusion.
Submodule complement_of_sub(const BoundQuiverAlgebra& alg, const ShortExactSequence& seq,
                            const HomTuple& section);

}  // namespace homsys
