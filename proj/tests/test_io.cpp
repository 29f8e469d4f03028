#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include "simbound/io.hpp"

using namespace simbound;
using nlohmann::json;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const json& j) : path(name) {
        io::write_json_file(path, j);
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("group round trip") {
    auto z6 = cyclic_group(6);
    auto j = io::group_to_json(z6);
    auto back = io::group_from_json(j);
    REQUIRE(back.order == 6);
    REQUIRE(back.table == z6.table);
    REQUIRE(back.identity == z6.identity);
}

TEST_CASE("group JSON validation") {
    REQUIRE_THROWS_AS(io::group_from_json(json{{"order", 2}}), Error);
    // Order must agree with the table.
    REQUIRE_THROWS_AS(
        io::group_from_json(json{{"order", 3}, {"table", {{0, 1}, {1, 0}}}}), Error);
    // The table itself is validated.
    try {
        io::group_from_json(json{{"order", 2}, {"table", {{0, 1}, {0, 1}}}});
        FAIL("bad table accepted");
    } catch (const Error& e) {
        REQUIRE(e.code() == errc::no_identity);
    }
}

TEST_CASE("group shorthand specs") {
    REQUIRE(io::parse_group_spec("Z6").order == 6);
    REQUIRE(io::parse_group_spec("Z2").order == 2);
    auto g = io::parse_group_spec("Z2^3");
    REQUIRE(g.order == 8);
    REQUIRE(is_elementary_abelian_2(g));
    REQUIRE_THROWS_AS(io::parse_group_spec("Z3^2"), Error);
    // Not a shorthand: treated as a path, and the file does not exist.
    REQUIRE_THROWS_AS(io::parse_group_spec("Zx"), Error);

    TempFile f("io_test_group.json", io::group_to_json(cyclic_group(5)));
    REQUIRE(io::parse_group_spec(f.path).order == 5);
}

TEST_CASE("representation round trip and shorthands") {
    auto rep = sign_representation(2);
    auto j = io::representation_to_json(rep);
    auto back = io::representation_from_json(j, rep.group);
    REQUIRE(back.dim == 2);
    REQUIRE(back.matrices == rep.matrices);

    auto sign = io::parse_representation_spec("sign", elementary_abelian(2));
    REQUIRE(sign.dim == 2);
    auto neg = io::parse_representation_spec("neg:3", cyclic_group(2));
    REQUIRE(neg.dim == 3);
    REQUIRE(neg.matrices[1][0][0] == -1);
    REQUIRE_THROWS_AS(io::parse_representation_spec("sign", cyclic_group(3)), Error);
    REQUIRE_THROWS_AS(io::parse_representation_spec("neg:2", cyclic_group(4)), Error);

    TempFile f("io_test_rep.json", j);
    auto from_file = io::parse_representation_spec(f.path, rep.group);
    REQUIRE(from_file.matrices == rep.matrices);
}

TEST_CASE("complex and delta-set round trips") {
    auto sc = torus7_complex();
    auto j = io::complex_to_json(sc);
    REQUIRE(j["vertices"] == 7);
    REQUIRE(j["facets"].size() == 14);
    auto back = io::complex_from_json(j);
    auto ds = complex_to_delta(back);
    REQUIRE(ds.counts == std::vector<std::size_t>{7, 21, 14});

    auto rp3 = rp_deltaset(3);
    auto dj = io::delta_to_json(rp3);
    auto rp3_back = io::delta_from_json(dj);
    REQUIRE(rp3_back.counts == rp3.counts);
    REQUIRE(rp3_back.faces == rp3.faces);
}

TEST_CASE("space sniffing picks the right format") {
    auto from_complex = io::space_from_json(io::complex_to_json(cycle_complex(4)));
    REQUIRE(from_complex.counts == std::vector<std::size_t>{4, 4});
    auto from_delta = io::space_from_json(io::delta_to_json(rp_deltaset(2)));
    REQUIRE(from_delta.counts == std::vector<std::size_t>{3, 6, 4});
    REQUIRE_THROWS_AS(io::space_from_json(json{{"something", 1}}), Error);
}

TEST_CASE("delta-set JSON is validated on load") {
    auto j = io::delta_to_json(rp_deltaset(2));
    j["faces"]["2"][0][0] = 99;
    try {
        io::delta_from_json(j);
        FAIL("corrupt faces accepted");
    } catch (const Error& e) {
        REQUIRE((e.code() == errc::dimension_mismatch ||
                 e.code() == errc::identity_violation));
    }
}

TEST_CASE("cochain round trip") {
    Cochain c{1, f2::F2Vector(5)};
    c.values.set(0, true);
    c.values.set(3, true);
    auto j = io::cochain_to_json(c);
    REQUIRE(j["degree"] == 1);
    REQUIRE(j["values"] == json({1, 0, 0, 1, 0}));
    auto back = io::cochain_from_json(j);
    REQUIRE(back.degree == 1);
    REQUIRE(back.values == c.values);

    REQUIRE_THROWS_AS(io::cochain_from_json(json{{"degree", 1}, {"values", {0, 2}}}),
                      Error);
}

TEST_CASE("action round trip") {
    auto sc = crosspolytope_complex(3);
    auto ds = complex_to_delta(sc);
    auto act = antipodal_action(sc);
    auto j = io::action_to_json(act);
    auto back = io::action_from_json(j);
    REQUIRE(back.group.order == 2);
    REQUIRE(back.perms == act.perms);
    validate_action(ds, back);
}

TEST_CASE("covering serialization carries all parts") {
    auto rp2 = rp_deltaset(2);
    auto h1 = cohomology_basis(rp2, 1);
    auto cov = double_cover(rp2, h1.representatives[0]);
    auto j = io::covering_to_json(cov);
    REQUIRE(j.contains("base"));
    REQUIRE(j.contains("total"));
    REQUIRE(j.contains("projection"));
    REQUIRE(j.contains("deck"));
    REQUIRE(j["sheet_bits"] == 1);
    auto total = io::delta_from_json(j["total"]);
    REQUIRE(total.counts == std::vector<std::size_t>{6, 12, 8});
    auto deck = io::action_from_json(j["deck"]);
    validate_action(total, deck);
}

TEST_CASE("file round trips and errors") {
    TempFile f("io_test_space.json", io::delta_to_json(torus7()));
    auto ds = io::load_space(f.path);
    REQUIRE(ds.counts == std::vector<std::size_t>{7, 21, 14});

    try {
        io::load_space("does_not_exist_12345.json");
        FAIL("missing file accepted");
    } catch (const Error& e) {
        REQUIRE(e.code() == errc::io);
    }

    std::ofstream bad("io_test_bad.json");
    bad << "{ not json";
    bad.close();
    try {
        io::read_json_file("io_test_bad.json");
        FAIL("malformed JSON accepted");
    } catch (const Error& e) {
        REQUIRE(e.code() == errc::io);
    }
    std::remove("io_test_bad.json");
}
