#pragma once

#include "homsys/gen.hpp"

// Shared handcrafted algebras and modules for the unit suites.
namespace fixtures {

using namespace homsys;

// 1 --a--> 2 over GF(2).
inline BoundQuiverAlgebra a2_algebra() {
    return make_algebra(Quiver{{"1", "2"}, {{"a", 0, 1}}}, PrimeField(2), {});
}

// 1 ==a,b==> 2 over GF(2), two parallel arrows.
inline BoundQuiverAlgebra kronecker_algebra() {
    return make_algebra(Quiver{{"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}}}, PrimeField(2), {});
}

// 1 --a--> 2 --b--> 3 over GF(2) with the zero relation a b = 0.
inline BoundQuiverAlgebra a3_bound_algebra() {
    return make_algebra(Quiver{{"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}}}, PrimeField(2),
                        {Relation{{PathTerm{1, {0, 1}}}}});
}

// Same quiver, no relation.
inline BoundQuiverAlgebra a3_free_algebra() {
    return make_algebra(Quiver{{"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}}}, PrimeField(2), {});
}

inline Mat random_mat(Rng& rng, std::uint32_t r, std::uint32_t c, PrimeField f) {
    Mat m(r, c, f);
    for (std::uint32_t i = 0; i < r; ++i)
        for (std::uint32_t j = 0; j < c; ++j) m.at(i, j) = static_cast<std::uint32_t>(rng() % f.p);
    return m;
}

inline Representation random_rep(Rng& rng, const BoundQuiverAlgebra& alg,
                                 std::uint32_t max_dim) {
    // rejection-sample until the relations hold
    for (;;) {
        Representation rep;
        for (std::size_t v = 0; v < alg.num_vertices(); ++v)
            rep.dims.push_back(static_cast<std::uint32_t>(rng() % (max_dim + 1)));
        for (std::size_t a = 0; a < alg.num_arrows(); ++a)
            rep.maps.push_back(random_mat(rng, rep.dims[alg.quiver.arrows[a].tgt],
                                          rep.dims[alg.quiver.arrows[a].src], alg.field));
        if (validate_representation(alg, rep).empty()) return rep;
    }
}

}  // namespace fixtures
