#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "senet/complex_io.hpp"
#include "support/oracles.hpp"

using namespace senet;

TEST_CASE("serialization renders the documented canonical form", "[io]") {
    auto u = VertexUniverse::from_ids({"b", "a"});
    SimplicialComplex c(u);
    c.insert_closed(canonicalize(u, {"b", "a"}));
    // Ids render in lexicographic order regardless of registration order.
    CHECK(serialize_complex(c) == "dim=1 vertices=2\n"
                                  "a\n"
                                  "a b\n"
                                  "b\n");
}

TEST_CASE("empty complex serializes and parses", "[io]") {
    auto u = VertexUniverse::from_ids({"a"});
    SimplicialComplex c(u);
    const auto text = serialize_complex(c);
    CHECK(text == "dim=-1 vertices=0\n");
    auto back = parse_complex(text);
    CHECK(back.empty());
    CHECK(back.dimension() == -1);
}

TEST_CASE("round trips are byte-identical for random complexes", "[io][property]") {
    // Parsing assigns indices by lexicographic id rank, so members are
    // compared by rendered ids, not raw indices.
    auto id_members = [](const SimplicialComplex& c) {
        std::set<std::string> out;
        for (const auto& s : c.members()) out.insert(render_member(c.universe(), s));
        return out;
    };

    std::mt19937 rng(20201);
    for (int round = 0; round < 60; ++round) {
        auto u = oracle::universe_of_size(9);
        SimplicialComplex c(u);
        for (const auto& raw : oracle::random_family(rng, 9, 5, 6))
            c.insert_closed(Simplex::from_canonical(raw));

        const auto text = serialize_complex(c);
        auto parsed = parse_complex(text);
        CHECK(serialize_complex(parsed) == text);
        CHECK(id_members(parsed) == id_members(c));
    }
}

TEST_CASE("parse rejects malformed documents with line numbers", "[io]") {
    auto expect_parse_error = [](const std::string& text, const std::string& needle) {
        try {
            parse_complex(text);
            FAIL("expected a parse error for: " << text);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::parse);
            CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring(needle));
        }
    };

    expect_parse_error("", "header");
    expect_parse_error("dimension=2 vertices=3\na\n", "header");
    expect_parse_error("dim=x vertices=3\na\n", "header");
    expect_parse_error("dim=0x vertices=1\na\n", "header");
    expect_parse_error("dim=0 vertices=-1\na\n", "header");
    expect_parse_error("dim=0 vertices=1 extra\na\n", "header");
    expect_parse_error("dim=0 vertices=2\na\n", "distinct ids");
    expect_parse_error("dim=1 vertices=2\na\nb\n", "dim");
    expect_parse_error("dim=1 vertices=2\na\na  b\nb\n", "spacing");
    expect_parse_error("dim=1 vertices=2\na\nb a\nb\n", "canonical order");
    expect_parse_error("dim=1 vertices=2\na\na a\nb\n", "canonical order");
    expect_parse_error("dim=1 vertices=2\nb\na\na b\n", "sorted");
    expect_parse_error("dim=0 vertices=1\na\na\n", "sorted");
    expect_parse_error("dim=0 vertices=1\na\n\n", "blank");
}

TEST_CASE("parse rejects families that are not closed", "[io]") {
    try {
        parse_complex("dim=1 vertices=2\na b\n");
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::validation);
    }
}

TEST_CASE("parse applies the simplex cap", "[io]") {
    auto u = oracle::universe_of_size(6);
    SimplicialComplex c(u);
    std::vector<VertexIndex> all{0, 1, 2, 3, 4, 5};
    c.insert_closed(Simplex::from_canonical(all));
    const auto text = serialize_complex(c);
    CHECK_THROWS_AS(parse_complex(text, 4), Error);
    CHECK(parse_complex(text, 6).member_count() == 63);
}

TEST_CASE("file round trip through the filesystem", "[io]") {
    auto dir = std::filesystem::temp_directory_path() / "senet-io-test";
    std::filesystem::create_directories(dir);
    auto path = dir / "triangle.scx";

    auto u = VertexUniverse::from_ids({"vi", "vj", "vk"});
    SimplicialComplex c(u);
    c.insert_closed(canonicalize(u, {"vi", "vj", "vk"}));
    write_complex_file(path, c);
    auto back = read_complex_file(path);
    CHECK(back == c);

    CHECK_THROWS_AS(read_complex_file(dir / "missing.scx"), Error);
    std::filesystem::remove_all(dir);
}
