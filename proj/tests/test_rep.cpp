#include <doctest.h>

#include "fixtures.hpp"
#include "homsys/oracle.hpp"

using namespace homsys;
using fixtures::a2_algebra;
using fixtures::a3_bound_algebra;
using fixtures::kronecker_algebra;

TEST_SUITE("rep") {

TEST_CASE("make_algebra rejects malformed input") {
    PrimeField f(2);
    // arrow endpoint out of range
    CHECK_THROWS_AS(make_algebra(Quiver{{"1"}, {{"a", 0, 1}}}, f, {}), error);
    // duplicate names
    CHECK_THROWS_AS(make_algebra(Quiver{{"1", "1"}, {}}, f, {}), error);
    CHECK_THROWS_AS(make_algebra(Quiver{{"1", "2"}, {{"a", 0, 1}, {"a", 0, 1}}}, f, {}), error);

    Quiver a3{{"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}}};
    // non-composable path b then a
    CHECK_THROWS_AS(make_algebra(a3, f, {Relation{{PathTerm{1, {1, 0}}}}}), error);
    // admissibility: single-arrow relation
    CHECK_THROWS_AS(make_algebra(a3, f, {Relation{{PathTerm{1, {0}}}}}), error);
    // terms not parallel
    Quiver par{{"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}, {"c", 0, 1}, {"d", 1, 1}}};
    CHECK_THROWS_AS(
        make_algebra(par, f, {Relation{{PathTerm{1, {0, 1}}, PathTerm{1, {3, 3}}}}}), error);
    // zero coefficient
    CHECK_THROWS_AS(make_algebra(a3, f, {Relation{{PathTerm{2, {0, 1}}}}}), error);
    // the same relation with coefficient 1 is fine
    CHECK_NOTHROW(make_algebra(a3, f, {Relation{{PathTerm{1, {0, 1}}}}}));
}

TEST_CASE("eval_path composes first arrow first") {
    BoundQuiverAlgebra alg = fixtures::a3_free_algebra();
    PrimeField f = alg.field;
    Representation rep;
    rep.dims = {2, 2, 2};
    Mat xa = Mat::from_rows(f, {{1, 1}, {0, 1}});
    Mat xb = Mat::from_rows(f, {{0, 1}, {1, 0}});
    rep.maps = {xa, xb};
    CHECK(eval_path(alg, rep, {0, 1}) == xb * xa);
    CHECK(eval_path(alg, rep, {0}) == xa);
}

TEST_CASE("validate_representation reports relation failures") {
    BoundQuiverAlgebra alg = a3_bound_algebra();
    Representation good{{1, 1, 1}, {Mat::from_rows(alg.field, {{1}}), Mat(1, 1, alg.field)}};
    CHECK(validate_representation(alg, good).empty());

    Representation bad{{1, 1, 1},
                       {Mat::from_rows(alg.field, {{1}}), Mat::from_rows(alg.field, {{1}})}};
    auto v = validate_representation(alg, bad);
    REQUIRE(v.size() == 1);
    CHECK(v[0].relation == 0);
    CHECK(!v[0].value.is_zero());

    Representation shape{{1, 2, 1}, {Mat(1, 1, alg.field), Mat(1, 1, alg.field)}};
    CHECK_THROWS_AS(validate_representation(alg, shape), error);
}

TEST_CASE("hom_space dimension matches brute force") {
    Rng rng = make_rng(301);
    int pairs = 0;
    for (const BoundQuiverAlgebra& alg :
         {a2_algebra(), kronecker_algebra(), a3_bound_algebra()}) {
        for (int trial = 0; trial < 12; ++trial) {
            Representation x = fixtures::random_rep(rng, alg, 2);
            Representation y = fixtures::random_rep(rng, alg, 2);
            // keep the brute-force search space tiny
            std::uint64_t params = 0;
            for (std::size_t v = 0; v < alg.num_vertices(); ++v)
                params += std::uint64_t(x.dims[v]) * y.dims[v];
            if (params > 12) continue;
            HomSpace hs = hom_space(alg, x, y);
            CHECK(hs.dim() == oracle::hom_dim_brute(alg, x, y));
            for (const HomTuple& b : hs.basis) CHECK(is_module_hom(alg, x, y, b));
            ++pairs;
        }
    }
    CHECK(pairs >= 20);
}

TEST_CASE("hom algebra: compose, add, iso, inverse") {
    BoundQuiverAlgebra alg = a2_algebra();
    auto [p1, s2] = []() {
        HomologicalSystem sys = homsys::gen::a2_system();
        return std::pair{sys.delta[0], sys.delta[1]};
    }();
    HomTuple id = identity_hom(alg, p1);
    CHECK(hom_is_iso(id));
    CHECK(hom_inverse(id) == id);
    CHECK(hom_compose(id, id) == id);
    CHECK(hom_add(id, id) == zero_hom(alg, p1, p1));  // characteristic 2
    CHECK(hom_scale(0, id) == zero_hom(alg, p1, p1));

    HomSpace hs = hom_space(alg, s2, p1);
    REQUIRE(hs.dim() == 1);
    CHECK(!hom_is_iso(hs.basis[0]));
    HomTuple f = hom_combination(hs, {1}, alg, s2, p1);
    CHECK(f == hs.basis[0]);
    CHECK(is_module_hom(alg, s2, p1, f));
    // tampering breaks the commuting squares
    HomTuple broken = f;
    broken[0] = Mat::from_rows(alg.field, {{1}});  // s2 is zero at vertex 1, shape mismatch
    CHECK(!is_module_hom(alg, s2, p1, broken));
}

TEST_CASE("direct sum identities and hom additivity") {
    BoundQuiverAlgebra alg = kronecker_algebra();
    Rng rng = make_rng(303);
    for (int trial = 0; trial < 10; ++trial) {
        Representation x = fixtures::random_rep(rng, alg, 2);
        Representation y = fixtures::random_rep(rng, alg, 2);
        DirectSum ds = direct_sum(alg, x, y);
        CHECK(ds.rep.total_dim() == x.total_dim() + y.total_dim());
        CHECK(validate_representation(alg, ds.rep).empty());
        CHECK(is_module_hom(alg, x, ds.rep, ds.inj1));
        CHECK(is_module_hom(alg, y, ds.rep, ds.inj2));
        CHECK(hom_compose(ds.proj1, ds.inj1) == identity_hom(alg, x));
        CHECK(hom_compose(ds.proj2, ds.inj2) == identity_hom(alg, y));
        for (std::size_t v = 0; v < alg.num_vertices(); ++v)
            CHECK(hom_compose(ds.proj1, ds.inj2)[v].is_zero());
        HomTuple e1 = hom_compose(ds.inj1, ds.proj1);
        HomTuple e2 = hom_compose(ds.inj2, ds.proj2);
        CHECK(hom_add(e1, e2) == identity_hom(alg, ds.rep));

        Representation z = fixtures::random_rep(rng, alg, 2);
        CHECK(hom_space(alg, ds.rep, z).dim() ==
              hom_space(alg, x, z).dim() + hom_space(alg, y, z).dim());
        CHECK(hom_space(alg, z, ds.rep).dim() ==
              hom_space(alg, z, x).dim() + hom_space(alg, z, y).dim());
    }
}

TEST_CASE("submodule generation, inclusion and quotient") {
    BoundQuiverAlgebra alg = a2_algebra();
    PrimeField f = alg.field;
    // P1: k --id--> k
    Representation p1{{1, 1}, {Mat::from_rows(f, {{1}})}};

    // the vertex-1 line generates everything; the vertex-2 line only itself
    Submodule whole = submodule_generated(alg, p1, {{0, Mat::from_rows(f, {{1}})}});
    CHECK(whole == full_submodule(alg, p1));
    Submodule socle = submodule_generated(alg, p1, {{1, Mat::from_rows(f, {{1}})}});
    CHECK(socle.dims() == std::vector<std::uint32_t>{0, 1});
    CHECK(submodule_valid(alg, p1, socle));
    CHECK(submodule_contains(whole, socle));
    CHECK(!submodule_contains(socle, whole));
    CHECK(submodule_sum(socle, whole) == whole);
    CHECK(submodule_intersect(socle, whole) == socle);

    // a vertex-1 line alone is not arrow-closed
    Submodule open_line{{Subspace::full(1, f), Subspace::zero(1, f)}};
    CHECK(!submodule_valid(alg, p1, open_line));

    SubmoduleRep sr = submodule_rep(alg, p1, socle);
    CHECK(sr.rep.dims == std::vector<std::uint32_t>{0, 1});
    CHECK(is_module_hom(alg, sr.rep, p1, sr.inclusion));
    QuotientRep qr = quotient_module(alg, p1, socle);
    CHECK(qr.rep.dims == std::vector<std::uint32_t>{1, 0});
    CHECK(is_module_hom(alg, p1, qr.rep, qr.projection));
    // projection kills exactly the submodule
    CHECK(hom_kernel(qr.projection) == socle);
    CHECK(hom_image(sr.inclusion) == socle);
    // inclusion then projection is zero
    for (std::size_t v = 0; v < 2; ++v)
        CHECK(hom_compose(qr.projection, sr.inclusion)[v].is_zero());
}

TEST_CASE("preimage is arrow-closed and brute-force correct per vertex") {
    Rng rng = make_rng(307);
    BoundQuiverAlgebra alg = kronecker_algebra();
    for (int trial = 0; trial < 20; ++trial) {
        Representation x = fixtures::random_rep(rng, alg, 3);
        Representation y = fixtures::random_rep(rng, alg, 3);
        HomSpace hs = hom_space(alg, x, y);
        if (hs.dim() == 0) continue;
        std::vector<std::uint32_t> coeffs(hs.dim());
        for (auto& c : coeffs) c = rng() % alg.field.p;
        HomTuple fmap = hom_combination(hs, coeffs, alg, x, y);
        // random submodule of y: arrow-closure of random vectors
        std::vector<VertexVectors> gens;
        for (std::size_t v = 0; v < 2; ++v)
            gens.push_back({v, fixtures::random_mat(rng, 1, y.dims[v], alg.field)});
        Submodule target = submodule_generated(alg, y, gens);
        Submodule pre = preimage(alg, fmap, x, target);
        CHECK(submodule_valid(alg, x, pre));
        CHECK(submodule_contains(pre, hom_kernel(fmap)));
        for (std::size_t v = 0; v < 2; ++v)
            CHECK(pre.spaces[v].dim() == oracle::preimage_dim_brute(fmap[v], target.spaces[v]));
    }
}

TEST_CASE("trace matches brute force") {
    Rng rng = make_rng(311);
    for (const BoundQuiverAlgebra& alg : {a2_algebra(), a3_bound_algebra()}) {
        for (int trial = 0; trial < 8; ++trial) {
            Representation g1 = fixtures::random_rep(rng, alg, 2);
            Representation g2 = fixtures::random_rep(rng, alg, 2);
            Representation tgt = fixtures::random_rep(rng, alg, 2);
            std::uint64_t params = 0;
            for (std::size_t v = 0; v < alg.num_vertices(); ++v)
                params += std::uint64_t(std::max(g1.dims[v], g2.dims[v])) * tgt.dims[v];
            if (params > 10) continue;
            Submodule tr = trace(alg, {g1, g2}, tgt);
            CHECK(submodule_valid(alg, tgt, tr));
            CHECK(tr.dims() == oracle::trace_dims_brute(alg, {g1, g2}, tgt));
        }
    }
}

}  // TEST_SUITE
