#pragma once

#include "homsys/rep.hpp"

namespace homsys {

// Isomorphism search: an element sum c_i f_i of Hom(X, Y) is an isomorphism
// iff every vertex matrix is invertible. Exhaustive over GF(p)^dim Hom below
// the threshold (then both answers are definitive), randomized above it.
SearchResult<HomTuple> iso_test(const BoundQuiverAlgebra& alg, const Representation& X,
                                const Representation& Y, const SearchOptions& opts, Rng& rng);

struct PeelResult {
    std::size_t candidate = 0;  // index into the candidate list
    Submodule complement;       // kernel of the split idempotent, complements the summand
    HomTuple split_mono;        // candidate -> L, image is the peeled copy
    HomTuple retraction;        // L -> candidate, restricts to an iso on the image
};

// Finds a candidate that is a direct summand of L, by searching for
// f : D -> L and g : L -> D with g o f invertible; then e = f (gf)^-1 g is a
// split idempotent and L = im(e) + ker(e). When candidates are known to be
// indecomposable their endomorphism rings are local, so it is enough to test
// the finitely many basis pair compositions g_j f_i; set
// candidates_indecomposable to make a failed pair scan definitive.
SearchResult<PeelResult> peel_summand(const BoundQuiverAlgebra& alg, const Representation& L,
                                      const std::vector<Representation>& candidates,
                                      const SearchOptions& opts, Rng& rng,
                                      bool candidates_indecomposable = false);

struct DecompWitness {
    HomTuple idempotent;  // nontrivial e with e o e = e
    Submodule image;
    Submodule kernel;
};

struct IndecompResult {
    enum class Verdict { indecomposable, decomposable, unverified } verdict;
    std::optional<DecompWitness> witness;  // present iff decomposable
};

// Idempotent search in End(X): exhaustive below the threshold (both verdicts
// certified), otherwise randomized Fitting splitting of sampled
// endomorphisms, which can only certify "decomposable".
IndecompResult indecomposable_test(const BoundQuiverAlgebra& alg, const Representation& X,
                                   const SearchOptions& opts, Rng& rng);

// Vertex matrices of the projection onto `onto` along `along`
// (complementary subspace families).
HomTuple projection_onto(const BoundQuiverAlgebra& alg, const Submodule& onto,
                         const Submodule& along);

}  // namespace homsys
