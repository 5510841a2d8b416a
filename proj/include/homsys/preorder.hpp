#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homsys/common.hpp"

namespace homsys {

// Finite pre-ordered set: a reflexive and transitive relation on labels.
// Relations are stored as given; a non-transitive input is reported, never
// silently closed.
struct Preorder {
    std::vector<std::string> elements;
    std::vector<std::vector<char>> leq;  // leq[i][j]: elements[i] <= elements[j]

    std::size_t size() const { return elements.size(); }
    std::size_t index_of(const std::string& name) const;
    bool le(std::size_t i, std::size_t j) const { return leq[i][j] != 0; }
    bool equivalent(std::size_t i, std::size_t j) const { return le(i, j) && le(j, i); }
    bool strictly_less(std::size_t i, std::size_t j) const { return le(i, j) && !le(j, i); }
    bool operator==(const Preorder&) const = default;
};

struct PreorderViolation {
    enum class Kind { empty, reflexivity, transitivity } kind;
    std::size_t i = 0, j = 0, k = 0;  // transitivity: i<=j, j<=k, but not i<=k
    std::string describe(const Preorder& p) const;
};

std::vector<PreorderViolation> transitive_closure_check(const Preorder& p);

// Partition into equivalence classes of (i<=j and j<=i) with the induced
// partial order on classes; classes are the SCCs of the relation digraph.
struct QuotientPoset {
    std::vector<std::vector<std::size_t>> classes;  // members sorted ascending
    std::vector<std::size_t> class_of;              // the projection pi
    std::vector<std::vector<char>> prec;            // induced order, reflexive + antisymmetric

    std::size_t size() const { return classes.size(); }
};

QuotientPoset quotient(const Preorder& p);  // throws on a malformed preorder

// Levels assigned by repeatedly removing the minimal classes of the quotient
// poset; heights form the contiguous range {1, ..., max_height}.
struct HeightMap {
    std::vector<std::uint32_t> h;  // per element of the preorder
    std::uint32_t max_height = 0;
};

HeightMap height(const Preorder& p);

// Checks, for one ordered pair, that the height map is compatible with the
// order: strict comparability forces strictly smaller height, and a height
// gap forces incomparability downwards. Returns a message on failure.
std::optional<std::string> remark4_pair_check(const Preorder& p, const HeightMap& hm,
                                              std::size_t i, std::size_t j);

}  // namespace homsys
