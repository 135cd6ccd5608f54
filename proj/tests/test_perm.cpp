#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dpchroma/perm.hpp"
#include "dpchroma/rng.hpp"

using namespace dpchroma;

TEST_CASE("identity and validation") {
    const Perm id = Perm::identity(4);
    CHECK(id.is_identity());
    CHECK(id.twist() == 0);
    CHECK_THROWS_AS(Perm({0, 0, 1}), ValidationError);
    CHECK_THROWS_AS(Perm({0, 3}), ValidationError);
}

TEST_CASE("composition applies left then right") {
    // a: 0->1->2->0, b: swap 0,1
    const Perm a({1, 2, 0});
    const Perm b({1, 0, 2});
    const Perm ab = compose(a, b);
    for (int x = 0; x < 3; ++x) CHECK(ab.image(x) == b.image(a.image(x)));
}

TEST_CASE("sigma composed with its inverse is the identity") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + rng.below_int(8);
        const Perm p = Perm::unchecked(random_images(rng, m));
        CHECK(compose(p, inverse(p)).is_identity());
        CHECK(compose(inverse(p), p).is_identity());
    }
}

TEST_CASE("conjugation is an action and preserves cycle type") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 + rng.below_int(6);
        const Perm sigma = Perm::unchecked(random_images(rng, m));
        const Perm pi = Perm::unchecked(random_images(rng, m));
        const Perm rho = Perm::unchecked(random_images(rng, m));
        // acting by (pi then rho) equals acting by pi, then by rho
        CHECK(conjugate(sigma, compose(pi, rho)) == conjugate(conjugate(sigma, pi), rho));
        CHECK(conjugate(sigma, pi).twist() == sigma.twist());
        CHECK(conjugate(sigma, Perm::identity(m)) == sigma);
    }
}

TEST_CASE("lex rank round-trips") {
    for (int m = 1; m <= 5; ++m) {
        const auto table = all_perms(m, 1000);
        for (std::uint64_t r = 0; r < table.size(); ++r) {
            CHECK(lex_rank(table[r]) == r);
            CHECK(from_lex_rank(m, r) == table[r]);
        }
    }
}

TEST_CASE("all_perms is lexicographically sorted and capped") {
    const auto table = all_perms(4, 24);
    REQUIRE(table.size() == 24);
    for (std::size_t i = 1; i < table.size(); ++i) CHECK(table[i - 1] < table[i]);
    CHECK_THROWS_AS(all_perms(5, 24), CapacityError);
}

TEST_CASE("twist counts moved points") {
    CHECK(Perm({1, 0, 2}).twist() == 2);  // transposition on 3 points
    CHECK(Perm({1, 2, 0}).twist() == 3);  // 3-cycle
    CHECK(Perm({0, 1, 2}).twist() == 0);
}
