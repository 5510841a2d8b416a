#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homsys/gf.hpp"

namespace homsys {

struct Arrow {
    std::string name;
    std::size_t src = 0;
    std::size_t tgt = 0;

    bool operator==(const Arrow&) const = default;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::size_t vertex_index(const std::string& name) const;
    std::size_t arrow_index(const std::string& name) const;

    bool operator==(const Quiver&) const = default;
};

// A path is a nonempty arrow sequence traversed left to right:
// arrows[k].tgt == arrows[k+1].src. Evaluation on a representation composes
// the matrices in reverse (the first arrow acts first).
struct PathTerm {
    std::uint32_t coeff = 1;
    std::vector<std::size_t> arrows;

    bool operator==(const PathTerm&) const = default;
};

struct Relation {
    std::vector<PathTerm> terms;

    bool operator==(const Relation&) const = default;
};

// Path algebra of a finite quiver over GF(p) modulo admissible relations:
// every relation is a combination of parallel paths of length >= 2.
struct BoundQuiverAlgebra {
    Quiver quiver;
    PrimeField field;
    std::vector<Relation> relations;

    std::size_t num_vertices() const { return quiver.vertices.size(); }
    std::size_t num_arrows() const { return quiver.arrows.size(); }
    std::size_t path_source(const PathTerm& t) const { return quiver.arrows[t.arrows.front()].src; }
    std::size_t path_target(const PathTerm& t) const { return quiver.arrows[t.arrows.back()].tgt; }

    bool operator==(const BoundQuiverAlgebra&) const = default;
};

// Validates well-formedness (arrow endpoints, path composability, parallel
// admissible relations, nonzero coefficients); throws error on failure.
BoundQuiverAlgebra make_algebra(Quiver q, PrimeField f, std::vector<Relation> relations);

}  // namespace homsys
