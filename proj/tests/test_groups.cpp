#include <catch2/catch_amalgamated.hpp>

#include "simbound/group.hpp"

using namespace simbound;

namespace {

bool fails_with(errc code, void (*fn)()) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

} // namespace

TEST_CASE("cyclic groups") {
    auto z6 = cyclic_group(6);
    REQUIRE(z6.order == 6);
    REQUIRE(z6.identity == 0);
    REQUIRE(z6.mult(4, 5) == 3);
    REQUIRE(z6.inv(2) == 4);
    REQUIRE(is_abelian(z6));
    REQUIRE_FALSE(is_elementary_abelian_2(z6));

    auto z1 = cyclic_group(1);
    REQUIRE(z1.order == 1);
    REQUIRE(z1.mult(0, 0) == 0);

    REQUIRE(is_elementary_abelian_2(cyclic_group(2)));
}

TEST_CASE("elementary abelian groups") {
    auto g = elementary_abelian(3);
    REQUIRE(g.order == 8);
    REQUIRE(g.identity == 0);
    for (std::size_t x = 0; x < 8; ++x) {
        REQUIRE(g.mult(x, x) == 0);
        REQUIRE(g.inv(x) == x);
    }
    REQUIRE(g.mult(0b101, 0b011) == 0b110);
    REQUIRE(is_elementary_abelian_2(g));
    REQUIRE(is_abelian(g));

    auto trivial = elementary_abelian(0);
    REQUIRE(trivial.order == 1);
    REQUIRE(is_elementary_abelian_2(trivial));
}

TEST_CASE("table validation rejects broken tables") {
    REQUIRE(fails_with(errc::not_closed, [] {
        group_from_table({{0, 1}, {1, 7}});
    }));
    // Latin-square-free check: no element acts as a two-sided identity.
    REQUIRE(fails_with(errc::no_identity, [] {
        group_from_table({{0, 1}, {0, 1}});
    }));
    // Identity exists but 1 never reaches it.
    REQUIRE(fails_with(errc::no_inverse, [] {
        group_from_table({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
    }));
    // Closed, has identity and inverses, fails (1*2)*2 = 1*(2*2).
    REQUIRE(fails_with(errc::not_associative, [] {
        group_from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 0}});
    }));
}

TEST_CASE("table round trip through group_from_table") {
    auto z4 = cyclic_group(4);
    auto again = group_from_table(z4.table);
    REQUIRE(again.order == 4);
    REQUIRE(again.identity == z4.identity);
    REQUIRE(again.inverses == z4.inverses);
}

TEST_CASE("integer determinants are exact") {
    using detail::integer_determinant;
    REQUIRE(integer_determinant({{5}}) == 5);
    REQUIRE(integer_determinant({{2, 0}, {0, 3}}) == 6);
    REQUIRE(integer_determinant({{0, 1}, {1, 0}}) == -1);
    REQUIRE(integer_determinant({{1, 2}, {2, 4}}) == 0);
    REQUIRE(integer_determinant({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}) == 1);
    // Cofactor expansion along the first row: 3*6 + 1*2 + 2*(-4) = 12.
    REQUIRE(integer_determinant({{3, -1, 2}, {0, 4, -2}, {1, 1, 1}}) == 12);
    // Needs pivoting on the first column.
    REQUIRE(integer_determinant({{0, 2}, {5, 1}}) == -10);
}

TEST_CASE("sign representation of elementary abelian groups") {
    auto rep = sign_representation(2);
    REQUIRE(rep.group.order == 4);
    REQUIRE(rep.dim == 2);
    validate_representation(rep);
    // Character on coordinate i reads bit i.
    REQUIRE(rep.matrices[0b01][0][0] == -1);
    REQUIRE(rep.matrices[0b01][1][1] == 1);
    REQUIRE(rep.matrices[0b10][0][0] == 1);
    REQUIRE(rep.matrices[0b10][1][1] == -1);
    REQUIRE(rep.matrices[0b11][0][0] == -1);
    REQUIRE(rep.matrices[0b11][1][1] == -1);
}

TEST_CASE("antipodal representation") {
    auto rep = antipodal_representation(3);
    REQUIRE(rep.group.order == 2);
    REQUIRE(rep.dim == 3);
    validate_representation(rep);
    for (std::size_t i = 0; i < 3; ++i) REQUIRE(rep.matrices[1][i][i] == -1);
}

TEST_CASE("representation validation") {
    // Identity must map to the identity matrix.
    REQUIRE(fails_with(errc::identity_violation, [] {
        Representation rep;
        rep.group = cyclic_group(2);
        rep.dim = 1;
        rep.matrices = {{{2}}, {{-1}}};
        validate_representation(rep);
    }));
    // Singular image.
    REQUIRE(fails_with(errc::no_inverse, [] {
        Representation rep;
        rep.group = cyclic_group(2);
        rep.dim = 1;
        rep.matrices = {{{1}}, {{0}}};
        validate_representation(rep);
    }));
    // Not a homomorphism: M(1)^2 should be M(0) = I.
    REQUIRE(fails_with(errc::not_closed, [] {
        Representation rep;
        rep.group = cyclic_group(2);
        rep.dim = 1;
        rep.matrices = {{{1}}, {{2}}};
        validate_representation(rep);
    }));
    // A faithful integer representation of Z4 by the 90 degree rotation.
    Representation rot;
    rot.group = cyclic_group(4);
    rot.dim = 2;
    rot.matrices = {
        {{1, 0}, {0, 1}},
        {{0, -1}, {1, 0}},
        {{-1, 0}, {0, -1}},
        {{0, 1}, {-1, 0}},
    };
    validate_representation(rot);
}

TEST_CASE("matrix product helper") {
    auto p = matrix_product({{1, 2}, {3, 4}}, {{0, 1}, {1, 0}});
    REQUIRE(p == std::vector<std::vector<std::int64_t>>{{2, 1}, {4, 3}});
}
