#pragma once

#include "homsys/filtration.hpp"

// Random instance generators for property testing. Systems produced here are
// valid by construction (and cheap to re-check); filtrations are grown by
// splicing genuine extensions, so they verify by construction too.
namespace homsys::gen {

// The two-vertex worked example over GF(2): one arrow 1 -> 2, family
// {1 -> the projective (k -> k), 2 -> the simple at vertex 2}, order 2 <= 1.
HomologicalSystem a2_system();

// Acyclic quiver (arrows only go upward in the vertex order, parallels
// allowed), optionally bound by a few length-2 zero relations.
BoundQuiverAlgebra random_algebra(Rng& rng, std::uint32_t p, std::size_t max_vertices = 4,
                                  std::size_t max_arrows = 4, bool allow_relations = true);

// The simple modules, ordered by the reflexive-transitive closure of the
// arrow relation; passes every axiom on an acyclic bound quiver.
HomologicalSystem simples_system(const BoundQuiverAlgebra& alg);

// Simples of a random algebra, sometimes enriched by extension-built
// indecomposables with the induced order. Always returns a system that
// check_system accepts.
HomologicalSystem random_system(Rng& rng, const SearchOptions& opts, std::uint32_t p,
                                bool enrich = true);

// The one-step filtration of a single family member.
Filtration member_filtration(const HomologicalSystem& sys, std::size_t w,
                             const SearchOptions& opts, Rng& rng);

// Grows a filtration by repeatedly realizing a random extension of the
// current module under a fresh bottom member and splicing.
Filtration random_filtration(const HomologicalSystem& sys, Rng& rng, const SearchOptions& opts,
                             std::size_t steps, std::uint32_t max_total_dim = 12);

// Random walk of legal adjacent swaps: another filtration of the same module
// with the same label multiset.
Filtration random_resplit(const HomologicalSystem& sys, const Filtration& f, Rng& rng,
                          const SearchOptions& opts, std::size_t attempts);

}  // namespace homsys::gen
