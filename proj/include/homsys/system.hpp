#pragma once

#include <map>

#include "homsys/decomp.hpp"
#include "homsys/ext.hpp"
#include "homsys/preorder.hpp"
#include "homsys/rep.hpp"

namespace homsys {

// A family of modules indexed by a finite pre-ordered set. The axioms
// (indecomposable pairwise non-isomorphic members, Hom respecting the order,
// Ext^1 respecting it strictly) are checked by check_system, not assumed.
struct HomologicalSystem {
    BoundQuiverAlgebra algebra;
    Preorder omega;
    std::vector<Representation> delta;  // indexed like omega.elements
    std::optional<HeightMap> heights;   // absent when omega is malformed

    std::size_t size() const { return delta.size(); }
    const HeightMap& height_map() const;
    std::uint32_t height_of(std::size_t w) const { return height_map().h[w]; }
    std::uint32_t max_height() const { return height_map().max_height; }
    std::vector<std::size_t> indices_of_height(std::uint32_t h) const;
    std::vector<Representation> deltas_of_height(std::uint32_t h) const;
};

// Validates shapes and relations of every member (throws on failure) and
// caches the height map when the pre-order is well-formed.
HomologicalSystem make_system(BoundQuiverAlgebra alg, Preorder omega,
                              std::vector<Representation> delta);

struct AxiomViolation {
    std::string axiom;  // "HS1" .. "HS4", or "remark4-hom" / "remark4-ext"
    std::size_t w1 = 0, w2 = 0;
    std::string detail;
};

struct SystemCheck {
    enum class Verdict { ok, violated, unverified } verdict;
    std::vector<AxiomViolation> violations;
    std::vector<std::string> unverified;  // search-exhausted pairs, blocks "ok"
    // pairwise dimension tables, filled when the pre-order is usable
    std::vector<std::vector<std::uint32_t>> hom_dims;
    std::vector<std::vector<std::uint32_t>> ext_dims;
};

SystemCheck check_system(const HomologicalSystem& sys, const SearchOptions& opts, Rng& rng);

// Height consequences of the axioms: h(w) > h(w') forces Hom = 0 and
// h(w) >= h(w') forces Ext = 0. Empty result on a sound checked system.
std::vector<AxiomViolation> remark4_consequences(const HomologicalSystem& sys);

}  // namespace homsys
