#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <random>

#include "simbound/covering.hpp"
#include "simbound/spaces.hpp"

#include "helpers.hpp"

using namespace simbound;

namespace {

Cochain h1_generator(const DeltaSet& ds, std::size_t which = 0) {
    auto h1 = cohomology_basis(ds, 1);
    REQUIRE(h1.betti > which);
    return h1.representatives[which];
}

} // namespace

TEST_CASE("double cover of a circle") {
    auto circle = complex_to_delta(cycle_complex(4));

    SECTION("nontrivial class: connected double circle") {
        auto cov = double_cover(circle, h1_generator(circle));
        verify_covering(cov);
        REQUIRE(cov.total.counts == std::vector<std::size_t>{8, 8});
        REQUIRE(connected_components(cov.total) == 1);
        REQUIRE(euler_characteristic(cov.total) == 0);
    }

    SECTION("trivial class: two disjoint circles") {
        auto cov = double_cover(circle, zero_cochain(circle, 1));
        verify_covering(cov);
        REQUIRE(connected_components(cov.total) == 2);
    }

    SECTION("coboundary class: still two disjoint circles") {
        Cochain u{0, f2::F2Vector(circle.counts[0])};
        u.values.set(2, true);
        auto cov = double_cover(circle, apply_coboundary(circle, u));
        verify_covering(cov);
        REQUIRE(connected_components(cov.total) == 2);
    }
}

TEST_CASE("sphere over the projective plane") {
    auto rp2 = rp_deltaset(2);
    auto cov = double_cover(rp2, h1_generator(rp2));
    verify_covering(cov);
    REQUIRE(cov.total.counts == std::vector<std::size_t>{6, 12, 8});
    REQUIRE(euler_characteristic(cov.total) == 2);
    REQUIRE(connected_components(cov.total) == 1);
    REQUIRE(betti_number(cov.total, 0) == 1);
    REQUIRE(betti_number(cov.total, 1) == 0);
    REQUIRE(betti_number(cov.total, 2) == 1);
    REQUIRE(is_regular(cov.total));
}

TEST_CASE("rank-2 fiberwise product over the torus") {
    auto t7 = torus7();
    auto h1 = cohomology_basis(t7, 1);
    auto cov = fiberwise_product(t7, {h1.representatives[0], h1.representatives[1]});
    verify_covering(cov);
    REQUIRE(cov.sheet_bits == 2);
    REQUIRE(cov.total.counts == std::vector<std::size_t>{28, 84, 56});
    REQUIRE(euler_characteristic(cov.total) == 0);
    REQUIRE(connected_components(cov.total) == 1);
    // A finite cover of the torus is again a torus.
    REQUIRE(betti_number(cov.total, 1) == 2);
    REQUIRE(betti_number(cov.total, 2) == 1);
    REQUIRE(cov.deck.group.order == 4);
}

TEST_CASE("zero sheet bits give the identity covering") {
    auto t7 = torus7();
    auto cov = fiberwise_product(t7, {});
    verify_covering(cov);
    REQUIRE(cov.total.counts == t7.counts);
    REQUIRE(cov.total.faces == t7.faces);
    REQUIRE(cov.deck.group.order == 1);
}

TEST_CASE("classifying cochain must be a cocycle") {
    auto ds = complex_to_delta(complex_from_facets(3, {{0, 1, 2}}));
    Cochain z{1, f2::F2Vector(ds.counts[1])};
    z.values.set(0, true);
    REQUIRE_FALSE(is_cocycle(ds, z));
    try {
        double_cover(ds, z);
        FAIL("non-cocycle accepted");
    } catch (const Error& e) {
        REQUIRE(e.code() == errc::not_a_cocycle);
    }
}

TEST_CASE("verify_covering locates corruption") {
    auto circle = complex_to_delta(cycle_complex(4));
    auto cov = double_cover(circle, h1_generator(circle));

    SECTION("projection sent off fiber") {
        auto bad = cov;
        bad.projection[0][0] ^= 1;
        try {
            verify_covering(bad);
            FAIL("corrupt projection accepted");
        } catch (const Error& e) {
            REQUIRE((e.code() == errc::fiber_size || e.code() == errc::commutation));
        }
    }

    SECTION("deck transformation with a fixed simplex") {
        auto bad = cov;
        bad.deck.perms[1][0][0] = 0;
        bad.deck.perms[1][0][1] = 1;
        try {
            verify_covering(bad);
            FAIL("fixed deck point accepted");
        } catch (const Error& e) {
            // The deck table is no longer an action (axiom failure) or no
            // longer free, depending on which check fires first.
            REQUIRE((e.code() == errc::deck_not_free || e.code() == errc::not_closed ||
                     e.code() == errc::orbit_violation || e.code() == errc::commutation));
        }
    }

    SECTION("face map twisted off the cocycle") {
        auto bad = cov;
        bad.total.faces[1][0][0] ^= 1;
        try {
            verify_covering(bad);
            FAIL("broken total space accepted");
        } catch (const Error& e) {
            REQUIRE((e.code() == errc::identity_violation ||
                     e.code() == errc::commutation));
        }
    }
}

TEST_CASE("random double covers satisfy all structural invariants") {
    std::mt19937_64 rng(20260401);
    for (int trial = 0; trial < 15; ++trial) {
        auto ds = complex_to_delta(testutil::random_complex(rng, 6, 5));
        auto cocycles = f2::kernel_basis(coboundary_matrix(ds, 1));
        if (cocycles.empty()) continue;
        // Random element of the cocycle space.
        f2::F2Vector z(ds.counts[1]);
        for (const auto& basis_vec : cocycles)
            if (rng() & 1) z ^= basis_vec;
        auto cov = double_cover(ds, Cochain{1, z});
        verify_covering(cov);
        REQUIRE(euler_characteristic(cov.total) == 2 * euler_characteristic(ds));
        for (std::size_t d = 0; d < ds.counts.size(); ++d)
            REQUIRE(cov.total.counts[d] == 2 * ds.counts[d]);
    }
}

TEST_CASE("deck action commutes with the projection on iterated faces") {
    auto rp3 = rp_deltaset(3);
    auto cov = double_cover(rp3, h1_generator(rp3));
    verify_covering(cov);
    // Lifting commutes with the full subface calculus, not just d_i.
    for (std::size_t s = 0; s < cov.total.counts[3]; ++s)
        for (std::uint64_t mask = 1; mask < 16; ++mask) {
            std::size_t below = subface(cov.total, 3, s, mask);
            std::size_t base = subface(cov.base, 3, cov.projection[3][s], mask);
            std::size_t d = static_cast<std::size_t>(std::popcount(mask)) - 1;
            REQUIRE(cov.projection[d][below] == base);
        }
}
