#pragma once

#include <vector>

#include "homsys/linalg.hpp"
#include "homsys/quiver.hpp"

namespace homsys {

// A finite-dimensional module over a bound quiver algebra: one GF(p) space
// per vertex and one matrix per arrow, acting on column vectors.
struct Representation {
    std::vector<std::uint32_t> dims;  // per vertex
    std::vector<Mat> maps;            // per arrow, shape dims[tgt] x dims[src]

    std::uint32_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }

    bool operator==(const Representation&) const = default;
};

Representation zero_rep(const BoundQuiverAlgebra& alg);
Representation simple_rep(const BoundQuiverAlgebra& alg, std::size_t vertex);

// Composes the path's matrices on a representation (first arrow acts first).
Mat eval_path(const BoundQuiverAlgebra& alg, const Representation& rep,
              const std::vector<std::size_t>& arrows);

struct RelationViolation {
    std::size_t relation = 0;
    Mat value;  // the nonzero evaluation
};

// Shape mismatches throw; relation failures are reported as values.
std::vector<RelationViolation> validate_representation(const BoundQuiverAlgebra& alg,
                                                       const Representation& rep);

// A module homomorphism as its family of vertex matrices f_v : X_v -> Y_v.
using HomTuple = std::vector<Mat>;

HomTuple zero_hom(const BoundQuiverAlgebra& alg, const Representation& X, const Representation& Y);
HomTuple identity_hom(const BoundQuiverAlgebra& alg, const Representation& X);
bool is_module_hom(const BoundQuiverAlgebra& alg, const Representation& X, const Representation& Y,
                   const HomTuple& f);
// g after f, vertexwise.
HomTuple hom_compose(const HomTuple& g, const HomTuple& f);
HomTuple hom_add(const HomTuple& f, const HomTuple& g);
HomTuple hom_scale(std::uint32_t c, const HomTuple& f);
// Invertible at every vertex.
bool hom_is_iso(const HomTuple& f);
HomTuple hom_inverse(const HomTuple& f);

struct HomSpace {
    std::vector<HomTuple> basis;
    std::uint32_t dim() const { return static_cast<std::uint32_t>(basis.size()); }
};

// Basis of Hom(X, Y): the solution space of the commuting-square system
// f_{t(a)} X_a = Y_a f_{s(a)} over all arrows.
HomSpace hom_space(const BoundQuiverAlgebra& alg, const Representation& X, const Representation& Y);

// Linear combination sum_i coeffs[i] * basis[i].
HomTuple hom_combination(const HomSpace& hs, const std::vector<std::uint32_t>& coeffs,
                         const BoundQuiverAlgebra& alg, const Representation& X,
                         const Representation& Y);

struct DirectSum {
    Representation rep;  // X block first, then Y
    HomTuple inj1, inj2;   // X -> rep, Y -> rep
    HomTuple proj1, proj2; // rep -> X, rep -> Y
};

DirectSum direct_sum(const BoundQuiverAlgebra& alg, const Representation& X, const Representation& Y);

// A vertexwise family of subspaces closed under all arrow maps. Stored in
// canonical RREF, so equality of submodules is structural equality.
struct Submodule {
    std::vector<Subspace> spaces;  // per vertex

    std::vector<std::uint32_t> dims() const;
    std::uint32_t total_dim() const;
    bool operator==(const Submodule&) const = default;
};

Submodule zero_submodule(const BoundQuiverAlgebra& alg, const Representation& rep);
Submodule full_submodule(const BoundQuiverAlgebra& alg, const Representation& rep);
bool submodule_valid(const BoundQuiverAlgebra& alg, const Representation& rep, const Submodule& sub);
Submodule submodule_sum(const Submodule& a, const Submodule& b);
Submodule submodule_intersect(const Submodule& a, const Submodule& b);
bool submodule_contains(const Submodule& outer, const Submodule& inner);

// Generating vectors at one vertex, one generator per row.
struct VertexVectors {
    std::size_t vertex = 0;
    Mat rows;
};

// Smallest arrow-closed subspace family containing the generators
// (fixed-point iteration of arrow images).
Submodule submodule_generated(const BoundQuiverAlgebra& alg, const Representation& rep,
                              const std::vector<VertexVectors>& gens);

struct SubmoduleRep {
    Representation rep;   // in the basis of the stored RREF rows
    HomTuple inclusion;   // rep -> parent
};

SubmoduleRep submodule_rep(const BoundQuiverAlgebra& alg, const Representation& parent,
                           const Submodule& sub);

struct QuotientRep {
    Representation rep;
    HomTuple projection;  // parent -> rep, surjective with kernel = sub
};

QuotientRep quotient_module(const BoundQuiverAlgebra& alg, const Representation& parent,
                            const Submodule& sub);

// Vertexwise inverse image of a submodule of the codomain along a hom;
// always contains the kernel, and is arrow-closed.
Submodule preimage(const BoundQuiverAlgebra& alg, const HomTuple& f, const Representation& domain,
                   const Submodule& sub_of_codomain);

Submodule hom_image(const HomTuple& f);
Submodule hom_kernel(const HomTuple& f);

// Sum of the images of all homomorphisms from any generator onto the target.
Submodule trace(const BoundQuiverAlgebra& alg, const std::vector<Representation>& generators,
                const Representation& target);

}  // namespace homsys
