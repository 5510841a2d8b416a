#pragma once

#include "homsys/preorder.hpp"
#include "homsys/rep.hpp"

// Brute-force cross-checks, written with raw enumeration loops on purpose:
// they share no algorithmic machinery with the main library, so agreement is
// meaningful evidence. Everything here is exponential and guarded by
// enumeration limits; use only on tiny inputs.
namespace homsys::oracle {

inline constexpr std::uint64_t kMaxEnumeration = 1u << 24;

// log_p of the number of solutions, by trying every vertex-matrix tuple.
std::uint32_t hom_dim_brute(const BoundQuiverAlgebra& alg, const Representation& x,
                            const Representation& y);

// Counts valid arrow cochains and distinct coboundaries by full enumeration.
std::uint32_t ext_dim_brute(const BoundQuiverAlgebra& alg, const Representation& x,
                            const Representation& y);

// Rank via the size of the row span, built as an explicit vector set.
std::uint32_t rank_brute(const Mat& m);

// Nullity by counting vectors the matrix kills.
std::uint32_t kernel_dim_brute(const Mat& m);

std::uint32_t intersect_dim_brute(const Subspace& u, const Subspace& v);
std::uint32_t sum_dim_brute(const Subspace& u, const Subspace& v);

// dim of {x : m x in target}, counting domain vectors one by one.
std::uint32_t preimage_dim_brute(const Mat& m, const Subspace& target);

// Longest strictly descending chain in the class order, one height per
// element. Input must be a valid pre-order.
std::vector<std::uint32_t> height_brute(const Preorder& p);

// Per-vertex dimensions of the sum of images of all homomorphisms from the
// generators into the target.
std::vector<std::uint32_t> trace_dims_brute(const BoundQuiverAlgebra& alg,
                                            const std::vector<Representation>& gens,
                                            const Representation& target);

// Exhaustive isomorphism decision (throws when out of enumeration budget).
bool iso_brute(const BoundQuiverAlgebra& alg, const Representation& x, const Representation& y);

// Every representation with the given dimension vector that satisfies the
// relations, by enumerating all arrow-matrix entries.
std::vector<Representation> all_reps(const BoundQuiverAlgebra& alg,
                                     const std::vector<std::uint32_t>& dims);

// All representations with total dimension <= bound, all dimension vectors.
std::vector<Representation> all_reps_up_to(const BoundQuiverAlgebra& alg, std::uint32_t bound);

}  // namespace homsys::oracle
