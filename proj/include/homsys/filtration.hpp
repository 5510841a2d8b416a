#pragma once

#include <map>
#include <utility>

#include "homsys/system.hpp"

namespace homsys {

// Chain 0 = C_0 < C_1 < ... < C_t = M of submodules of `module`, each factor
// C_i/C_{i-1} isomorphic to the family member named by labels[i-1]. The
// witness isomorphisms are computed once at construction; re-verification
// replays them without any search.
struct Filtration {
    Representation module;
    std::vector<Submodule> chain;      // size length()+1, ascending
    std::vector<std::size_t> labels;   // family indices, one per step
    std::vector<HomTuple> witnesses;   // factor rep -> labelled member

    std::size_t length() const { return labels.size(); }
};

// Subquotient C_{i-1} <= C_i of M presented as a representation of its own,
// together with the coordinate scaffolding used to move in and out of it.
struct Factor {
    SubmoduleRep outer;        // rep of C_i, inclusion into M coordinates
    Submodule inner_in_outer;  // C_{i-1} rewritten in C_i coordinates
    QuotientRep quot;          // C_i rep -> factor rep

    const Representation& rep() const { return quot.rep; }
};

Factor factor_of(const BoundQuiverAlgebra& alg, const Representation& m,
                 const Submodule& inner, const Submodule& outer);

// Rewrite sub (given in m-coordinates, contained in outer) in the coordinates
// of outer's own representation. Throws if containment fails.
Submodule restrict_to(const BoundQuiverAlgebra& alg, const SubmoduleRep& outer,
                      const Submodule& sub);

// Expand a submodule given in outer-coordinates back to ambient coordinates.
Submodule expand_from(const Submodule& outer_in_ambient, const Submodule& sub_in_outer);

// Image of a submodule of the domain under a module homomorphism.
Submodule push_submodule(const HomTuple& f, const Representation& codomain, const Submodule& sub);

struct FiltrationVerdict {
    enum class Status { ok, failed, unverified } status;
    std::optional<std::size_t> failing_step;  // 1-based, when a step is at fault
    std::string reason;

    bool ok() const { return status == Status::ok; }
};

struct FiltrationBuild {
    FiltrationVerdict verdict;
    std::optional<Filtration> filtration;  // present iff verdict.ok()
};

// Validates the chain (submodules, strictness, endpoints) and searches for a
// witness isomorphism per step. failed = some factor provably not isomorphic
// to its label; unverified = an isomorphism search ran out of budget.
FiltrationBuild make_filtration(const HomologicalSystem& sys, Representation module,
                                std::vector<Submodule> chain, std::vector<std::size_t> labels,
                                const SearchOptions& opts, Rng& rng);

// Structure recheck plus witness replay; never searches when witnesses exist.
FiltrationVerdict verify_filtration(const HomologicalSystem& sys, const Filtration& f);

// Label multiplicities; .first maps family index -> count, .second = length.
std::pair<std::map<std::size_t, std::uint32_t>, std::size_t>
multiplicities(const Filtration& f);

// Exchanges steps i and i+1 (1-based) when the two-step subquotient between
// chain[i-1] and chain[i+1] splits; nullopt when it does not. Labels swap,
// every other chain member stays put.
std::optional<Filtration> swap_adjacent(const HomologicalSystem& sys, const Filtration& f,
                                        std::size_t i, const SearchOptions& opts, Rng& rng);

// Reorders the chain until step heights are weakly decreasing, swapping the
// leftmost adjacent rise each pass. Length, module, and label multiset are
// preserved; only the interior chain members move. Throws when a forced
// splitting unexpectedly fails, which would contradict the axioms.
Filtration normalize(const HomologicalSystem& sys, const Filtration& f,
                     const SearchOptions& opts, Rng& rng);

// Layered refinement by height: w(1) >= w(2) >= ... >= w(a+1) = 0 with w(1)
// the whole module and each layer w(i)/w(i+1) a direct sum of height-i
// members. peel_steps records, per height, the peeled label and the shrinking
// inner boundary in ambient coordinates, so flattening needs no new searches.
struct HFiltration {
    Representation module;
    std::vector<Submodule> layers;  // layers[i-1] = w(i), i = 1..a+1
    std::map<std::pair<std::uint32_t, std::size_t>, std::uint32_t> mult;  // (height, label)
    std::vector<std::vector<std::pair<std::size_t, Submodule>>> peel_steps;  // [height-1]

    std::uint32_t top_height() const { return static_cast<std::uint32_t>(layers.size()) - 1; }
    const Submodule& w(std::uint32_t i) const { return layers.at(i - 1); }
};

// Height layering induced by an existing filtration (normalizes first).
// exhausted propagates from summand peeling; absent cannot occur.
SearchResult<HFiltration> h_filtration_from(const HomologicalSystem& sys, const Filtration& f,
                                            const SearchOptions& opts, Rng& rng);

// Intrinsic layering by descending trace: no filtration input. absent means
// the module carries no such layering (it lies outside the filtered class).
SearchResult<HFiltration> h_filtration_canonical(const HomologicalSystem& sys,
                                                 const Representation& m,
                                                 const SearchOptions& opts, Rng& rng);

// Reads the stored peel transcript back into an ordinary filtration.
Filtration flatten(const HomologicalSystem& sys, const HFiltration& hf,
                   const SearchOptions& opts, Rng& rng);

struct UniquenessVerdict {
    enum class Status { ok, differs, unverified } status;
    std::string detail;

    bool ok() const { return status == Status::ok; }
};

// Confirms that two filtrations of the same module agree in length, label
// multiset, and per-height layer multiplicities.
UniquenessVerdict check_uniqueness(const HomologicalSystem& sys, const Filtration& f1,
                                   const Filtration& f2, const SearchOptions& opts, Rng& rng);

// Given a short exact sequence and filtrations of its ends, produce the glued
// filtration of the middle: images of the sub chain, then preimages of the
// quotient chain. Lengths add.
Filtration splice(const HomologicalSystem& sys, const ShortExactSequence& seq,
                  const Filtration& f_sub, const Filtration& f_quot,
                  const SearchOptions& opts, Rng& rng);

struct AdditivityReport {
    Filtration spliced;
    bool counts_ok = false;
    std::string detail;
};

AdditivityReport additivity_check(const HomologicalSystem& sys, const ShortExactSequence& seq,
                                  const Filtration& f_sub, const Filtration& f_quot,
                                  const SearchOptions& opts, Rng& rng);

struct SummandDecomposition {
    Filtration first, second;
    std::map<std::size_t, std::uint32_t> whole_counts;  // label -> count in the whole module
};

// Constructive closure under direct summands: from a biproduct presentation
// of m (split injections with complementary images), build filtrations of
// both summands whose label counts add up to the counts of m. absent = m is
// not filtered by the family; exhausted = a search ran out of budget.
SearchResult<SummandDecomposition> decompose_summands(const HomologicalSystem& sys,
                                                      const Representation& m,
                                                      const Representation& m1, const HomTuple& inj1,
                                                      const Representation& m2, const HomTuple& inj2,
                                                      const SearchOptions& opts, Rng& rng);

}  // namespace homsys
