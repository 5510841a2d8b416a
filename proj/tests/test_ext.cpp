#include <doctest.h>

#include "fixtures.hpp"
#include "homsys/ext.hpp"
#include "homsys/oracle.hpp"

using namespace homsys;
using fixtures::a2_algebra;
using fixtures::a3_bound_algebra;
using fixtures::a3_free_algebra;

TEST_SUITE("ext") {

TEST_CASE("frozen first extension groups on the two-vertex algebra") {
    BoundQuiverAlgebra alg = a2_algebra();
    Representation s1 = simple_rep(alg, 0), s2 = simple_rep(alg, 1);
    Representation p1{{1, 1}, {Mat::from_rows(alg.field, {{1}})}};
    CHECK(ext_space(alg, s1, s2).dim() == 1);
    CHECK(ext_space(alg, s2, s1).dim() == 0);
    CHECK(ext_space(alg, s1, s1).dim() == 0);
    CHECK(ext_space(alg, p1, s2).dim() == 0);
    CHECK(ext_space(alg, s2, p1).dim() == 0);
}

TEST_CASE("a zero relation kills the one-dimensional extension") {
    // on 1 -a-> 2 -b-> 3: the composite relation ab = 0 removes exactly the
    // cocycles whose block extension would realize the composite
    Representation p12{{1, 1, 0}, {}};
    Representation s3;
    {
        BoundQuiverAlgebra free = a3_free_algebra();
        p12.maps = {Mat::from_rows(free.field, {{1}}), Mat(0, 1, free.field)};
        s3 = simple_rep(free, 2);
        CHECK(ext_space(free, p12, s3).cocycles.dim() == 1);
        CHECK(ext_space(free, p12, s3).dim() == 1);
    }
    {
        BoundQuiverAlgebra bound = a3_bound_algebra();
        CHECK(ext_space(bound, p12, s3).cocycles.dim() == 0);
        CHECK(ext_space(bound, p12, s3).dim() == 0);
        // a nonzero delta_b on p12 -> s3 is not a cocycle over the bound algebra
        ExtSpace es = ext_space(bound, p12, s3);
        Cochain bad = es.zero();
        bad.per_arrow[1] = Mat::from_rows(bound.field, {{1}});
        CHECK_THROWS_AS(build_extension(bound, p12, s3, bad), error);
    }
}

TEST_CASE("ext dimension matches brute force") {
    Rng rng = make_rng(501);
    int pairs = 0;
    for (const BoundQuiverAlgebra& alg :
         {a2_algebra(), fixtures::kronecker_algebra(), a3_bound_algebra()}) {
        for (int trial = 0; trial < 10; ++trial) {
            Representation x = fixtures::random_rep(rng, alg, 2);
            Representation y = fixtures::random_rep(rng, alg, 2);
            std::uint64_t params = 0;
            for (std::size_t a = 0; a < alg.num_arrows(); ++a) {
                const Arrow& ar = alg.quiver.arrows[a];
                params += std::uint64_t(x.dims[ar.src]) * y.dims[ar.tgt];
            }
            if (params > 12) continue;
            ExtSpace es = ext_space(alg, x, y);
            CHECK(es.dim() == oracle::ext_dim_brute(alg, x, y));
            CHECK(es.cocycles.contains(es.coboundaries));
            ++pairs;
        }
    }
    CHECK(pairs >= 18);
}

TEST_CASE("build_extension realizes a short exact sequence") {
    BoundQuiverAlgebra alg = a2_algebra();
    Representation s1 = simple_rep(alg, 0), s2 = simple_rep(alg, 1);
    ExtSpace es = ext_space(alg, s1, s2);
    REQUIRE(es.cocycles.dim() == 1);

    ShortExactSequence seq = build_extension(alg, s1, s2, es.cocycle({1}));
    CHECK(ses_valid(alg, seq));
    CHECK(seq.middle.dims == std::vector<std::uint32_t>{1, 1});
    CHECK(validate_representation(alg, seq.middle).empty());
    // the nonsplit extension of s1 by s2 is the projective p1
    Representation p1{{1, 1}, {Mat::from_rows(alg.field, {{1}})}};
    SearchOptions opts;
    Rng rng = make_rng(503);
    CHECK(iso_test(alg, seq.middle, p1, opts, rng).found());
    CHECK(!find_section(alg, seq).has_value());

    // the zero cocycle gives the split extension
    ShortExactSequence split = build_extension(alg, s1, s2, es.zero());
    CHECK(ses_valid(alg, split));
    auto sec = find_section(alg, split);
    REQUIRE(sec.has_value());
    CHECK(hom_compose(split.projection, *sec) == identity_hom(alg, split.quot));
    Submodule comp = complement_of_sub(alg, split, *sec);
    Submodule img = hom_image(split.inclusion);
    CHECK(submodule_valid(alg, split.middle, comp));
    CHECK(submodule_sum(comp, img).total_dim() == split.middle.total_dim());
    CHECK(submodule_intersect(comp, img).total_dim() == 0);
    SubmoduleRep comp_rep = submodule_rep(alg, split.middle, comp);
    CHECK(iso_test(alg, comp_rep.rep, split.quot, opts, rng).found());
}

TEST_CASE("ses_valid rejects broken sequences") {
    BoundQuiverAlgebra alg = a2_algebra();
    Representation s1 = simple_rep(alg, 0), s2 = simple_rep(alg, 1);
    ExtSpace es = ext_space(alg, s1, s2);
    ShortExactSequence seq = build_extension(alg, s1, s2, es.cocycle({1}));
    REQUIRE(ses_valid(alg, seq));

    ShortExactSequence wrong = seq;
    wrong.projection = zero_hom(alg, seq.middle, seq.quot);  // no longer surjective
    CHECK(!ses_valid(alg, wrong));

    ShortExactSequence mism = seq;
    mism.quot = s2;  // projection shapes no longer line up
    CHECK(!ses_valid(alg, mism));
}

TEST_CASE("a cocycle is a coboundary exactly when its extension splits") {
    Rng rng = make_rng(505);
    int split_count = 0, nonsplit_count = 0;
    for (int trial = 0; trial < 60; ++trial) {
        BoundQuiverAlgebra alg = gen::random_algebra(rng, trial % 2 ? 2 : 3);
        Representation x = fixtures::random_rep(rng, alg, 2);
        Representation y = fixtures::random_rep(rng, alg, 2);
        ExtSpace es = ext_space(alg, x, y);
        if (es.cocycles.dim() == 0) continue;
        std::vector<std::uint32_t> coeffs(es.cocycles.dim());
        for (auto& c : coeffs) c = rng() % alg.field.p;
        Cochain delta = es.cocycle(coeffs);
        ShortExactSequence seq = build_extension(alg, x, y, delta);
        REQUIRE(ses_valid(alg, seq));
        bool split = find_section(alg, seq).has_value();
        CHECK(split == es.is_coboundary(delta));
        split ? ++split_count : ++nonsplit_count;
    }
    CHECK(split_count > 0);
    CHECK(nonsplit_count > 0);
}

TEST_CASE("pack and unpack are mutually inverse") {
    BoundQuiverAlgebra alg = fixtures::kronecker_algebra();
    Representation x = simple_rep(alg, 0);
    Representation y = simple_rep(alg, 1);
    ExtSpace es = ext_space(alg, x, y);
    REQUIRE(es.cochain_len == 2);
    for (std::uint32_t i = 0; i < es.cocycles.dim(); ++i) {
        Mat row = submat(es.cocycles.basis, i, 0, 1, es.cochain_len);
        CHECK(es.pack(es.unpack(row)) == row);
    }
    CHECK(ext_space(alg, x, y).dim() == 2);  // two independent arrows
}

}  // TEST_SUITE
