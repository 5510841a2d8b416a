#include <doctest.h>

#include "fixtures.hpp"
#include "homsys/linalg.hpp"
#include "homsys/oracle.hpp"

using namespace homsys;

TEST_SUITE("linalg") {

TEST_CASE("rref canonical form over GF(2)") {
    PrimeField f(2);
    Mat m = Mat::from_rows(f, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    RrefResult r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.mat == Mat::from_rows(f, {{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
    CHECK(r.pivots == std::vector<std::uint32_t>{0, 1});
    // idempotent
    CHECK(rref(r.mat).mat == r.mat);
}

TEST_CASE("rref over GF(5) scales pivots to one") {
    PrimeField f(5);
    Mat m = Mat::from_rows(f, {{2, 4}, {3, 2}});  // det = 2*2 - 4*3 = 2 (mod 5)
    RrefResult r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.mat == Mat::identity(2, f));
}

TEST_CASE("rank and kernel match brute force") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField f(p);
        Rng rng = make_rng(101 + p);
        for (int trial = 0; trial < 40; ++trial) {
            std::uint32_t r = rng() % 4, c = rng() % 5;
            Mat m = fixtures::random_mat(rng, r, c, f);
            std::uint32_t rk = rank(m);
            CHECK(rk == oracle::rank_brute(m));
            Subspace k = kernel(m);
            CHECK(k.dim() == oracle::kernel_dim_brute(m));
            CHECK(k.dim() + rk == c);
            // every kernel basis row is killed by m
            for (std::uint32_t i = 0; i < k.dim(); ++i) {
                Mat col(c, 1, f);
                for (std::uint32_t j = 0; j < c; ++j) col.at(j, 0) = k.basis.at(i, j);
                CHECK((m * col).is_zero());
            }
        }
    }
}

TEST_CASE("solve finds a preimage exactly when one exists") {
    PrimeField f(3);
    Rng rng = make_rng(7);
    int consistent = 0, inconsistent = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::uint32_t r = 1 + rng() % 3, c = 1 + rng() % 3;
        Mat m = fixtures::random_mat(rng, r, c, f);
        Mat b = fixtures::random_mat(rng, r, 1, f);
        auto x = solve(m, b);
        // consistency is equivalent to b lying in the column span
        bool expect = rank(hstack(m, b)) == rank(m);
        CHECK(x.has_value() == expect);
        if (x) {
            CHECK(m * *x == b);
            ++consistent;
        } else {
            ++inconsistent;
        }
    }
    CHECK(consistent > 0);
    CHECK(inconsistent > 0);
}

TEST_CASE("inverse round-trips and rejects singular input") {
    PrimeField f(5);
    Rng rng = make_rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::uint32_t n = 1 + rng() % 4;
        Mat m = fixtures::random_mat(rng, n, n, f);
        if (rank(m) < n) {
            CHECK_THROWS_AS(inverse(m), error);
        } else {
            Mat inv = inverse(m);
            CHECK(m * inv == Mat::identity(n, f));
            CHECK(inv * m == Mat::identity(n, f));
        }
    }
}

TEST_CASE("subspace span is basis-independent") {
    PrimeField f(3);
    Rng rng = make_rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        std::uint32_t n = 2 + rng() % 3;
        Mat gen = fixtures::random_mat(rng, 3, n, f);
        Subspace u = Subspace::span(gen);
        // mix the generators by a random invertible change and re-span
        Mat g = fixtures::random_mat(rng, 3, 3, f);
        if (rank(g) < 3) continue;
        CHECK(Subspace::span(g * gen) == u);
        for (std::uint32_t i = 0; i < 3; ++i) {
            Mat row = submat(gen, i, 0, 1, n);
            CHECK(u.contains_vector(row));
        }
    }
    CHECK(Subspace::zero(4, f).dim() == 0);
    CHECK(Subspace::full(4, f).is_full());
}

TEST_CASE("sum and intersection match brute force and the dimension formula") {
    PrimeField f(2);
    Rng rng = make_rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        std::uint32_t n = 1 + rng() % 5;
        Subspace u = Subspace::span(fixtures::random_mat(rng, rng() % 4, n, f));
        Subspace v = Subspace::span(fixtures::random_mat(rng, rng() % 4, n, f));
        Subspace s = sum(u, v), i = intersect(u, v);
        CHECK(s.dim() == oracle::sum_dim_brute(u, v));
        CHECK(i.dim() == oracle::intersect_dim_brute(u, v));
        CHECK(s.dim() + i.dim() == u.dim() + v.dim());
        CHECK(s.contains(u));
        CHECK(s.contains(v));
        CHECK(u.contains(i));
        CHECK(v.contains(i));
    }
}

TEST_CASE("image and preimage of a linear map") {
    PrimeField f(3);
    Rng rng = make_rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint32_t c = 1 + rng() % 4, r = 1 + rng() % 4;
        Mat m = fixtures::random_mat(rng, r, c, f);
        Subspace u = Subspace::span(fixtures::random_mat(rng, rng() % 3, c, f));
        Subspace im = image(m, u);
        CHECK(im.ambient == r);
        CHECK(im.dim() <= u.dim());
        Subspace target = Subspace::span(fixtures::random_mat(rng, rng() % 3, r, f));
        // preimage of target under m = kernel of (project-past-target) . m
        Subspace pre = kernel(quotient_map(target).proj * m);
        CHECK(pre.dim() == oracle::preimage_dim_brute(m, target));
        CHECK(target.contains(image(m, pre)));
        // the preimage always contains the kernel
        CHECK(pre.contains(kernel(m)));
    }
}

TEST_CASE("quotient map splits the projection") {
    PrimeField f(2);
    Rng rng = make_rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint32_t n = 1 + rng() % 5;
        Subspace u = Subspace::span(fixtures::random_mat(rng, rng() % (n + 1), n, f));
        QuotientMap q = quotient_map(u);
        std::uint32_t d = n - u.dim();
        CHECK(q.proj.rows == d);
        CHECK(q.proj.cols == n);
        CHECK(q.section.rows == n);
        CHECK(q.section.cols == d);
        CHECK(q.proj * q.section == Mat::identity(d, f));
        CHECK(kernel(q.proj) == u);
    }
}

}  // TEST_SUITE
