#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "senet/ses.hpp"
#include "senet/ses_io.hpp"
#include "support/oracles.hpp"

using namespace senet;

TEST_CASE("a minimal cross-system SES builds", "[ses]") {
    auto ses = SesStructure::build({"s1"}, {"e1"}, {{"s1", "e1"}});
    CHECK(ses.social_count() == 1);
    CHECK(ses.ecological_count() == 1);
    REQUIRE(ses.interactions().size() == 1);
    CHECK(ses.interactions().begin()->dimension() == 1);
    CHECK(ses.kind_of("s1") == UnitKind::social);
    CHECK(ses.kind_of("e1") == UnitKind::ecological);
}

TEST_CASE("social and ecological universes must be disjoint", "[ses]") {
    try {
        SesStructure::build({"s1"}, {"s1"}, {});
        FAIL("expected a disjointness violation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::disjointness);
        CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("s1"));
    }
}

TEST_CASE("empty sides are rejected in strict mode, allowed when relaxed", "[ses]") {
    const std::vector<std::string> participants{"p1", "p2", "p3", "p4", "p5"};

    try {
        SesStructure::build(participants, {}, {});
        FAIL("expected an empty-universe rejection");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::empty_universe);
    }

    SesStructure::Options relaxed;
    relaxed.strict_kinds = false;
    auto ses = SesStructure::build(participants, {}, {}, {}, relaxed);
    CHECK(ses.universe().size() == 5);
    CHECK(ses.ecological_count() == 0);

    // A fully empty universe is rejected even when relaxed.
    CHECK_THROWS_AS(SesStructure::build({}, {}, {}, {}, relaxed), Error);
}

TEST_CASE("interactions must reference declared ids", "[ses]") {
    try {
        SesStructure::build({"s1"}, {"e1"}, {{"s1", "ghost"}});
        FAIL("expected an unknown-vertex rejection");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::validation);
        CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("ghost"));
    }
}

TEST_CASE("interaction order is cardinality minus one", "[ses]") {
    CHECK(interaction_order(Simplex::of({0})) == 0);
    CHECK(interaction_order(Simplex::of({0, 1})) == 1);
    for (std::size_t k = 1; k <= 12; ++k) {
        std::vector<VertexIndex> verts(k + 1);
        std::iota(verts.begin(), verts.end(), VertexIndex{0});
        CHECK(interaction_order(Simplex::from_canonical(verts)) == static_cast<int>(k));
    }
}

TEST_CASE("order classification splits at three participants", "[ses]") {
    CHECK(classify_order(Simplex::of({0})) == OrderClass::lower);
    CHECK(classify_order(Simplex::of({0, 1})) == OrderClass::lower);
    CHECK(classify_order(Simplex::of({0, 1, 2})) == OrderClass::higher);
    CHECK(classify_order(Simplex::of({0, 1, 2, 3})) == OrderClass::higher);

    std::mt19937 rng(11);
    for (int round = 0; round < 50; ++round) {
        auto raw = oracle::random_simplex(rng, 9, 7);
        auto s = Simplex::from_canonical(raw);
        CHECK((classify_order(s) == OrderClass::higher) == (interaction_order(s) >= 2));
    }
}

TEST_CASE("subset dependency detection", "[ses]") {
    SECTION("an explicitly closed family holds") {
        auto ses = SesStructure::build({"a", "b"}, {"x"}, {{"a"}, {"b"}, {"a", "b"}});
        CHECK(check_subset_dependency(ses).holds);
    }
    SECTION("a lone triple fails with a pair witness") {
        auto ses = SesStructure::build({"a", "b"}, {"c"}, {{"a", "b", "c"}});
        auto report = check_subset_dependency(ses);
        CHECK_FALSE(report.holds);
        REQUIRE_FALSE(report.missing.empty());
        CHECK(report.missing[0] == Simplex::of({0, 1})); // {a, b}
    }
    SECTION("agrees with the closure oracle on random families") {
        std::mt19937 rng(222);
        for (int round = 0; round < 60; ++round) {
            auto inputs = oracle::random_family(rng, 8, 5, 5);
            const bool close_it = round % 2 == 0;
            oracle::Family family = close_it
                                        ? oracle::closure(inputs)
                                        : oracle::Family(inputs.begin(), inputs.end());

            std::vector<std::vector<std::string>> id_lists;
            auto u = oracle::universe_of_size(8);
            for (const auto& raw : family) {
                std::vector<std::string> ids;
                for (auto v : raw) ids.push_back(u.id_of(v));
                id_lists.push_back(std::move(ids));
            }
            std::vector<std::string> social(u.ids().begin(), u.ids().begin() + 4);
            std::vector<std::string> ecological(u.ids().begin() + 4, u.ids().end());
            auto ses = SesStructure::build(social, ecological, id_lists);

            const bool oracle_holds =
                oracle::closure({family.begin(), family.end()}) == family;
            CHECK(check_subset_dependency(ses).holds == oracle_holds);
        }
    }
}

TEST_CASE("interaction partition by kinds touched", "[ses]") {
    auto ses = SesStructure::build({"s1", "s2"}, {"e1", "e2"},
                                   {{"s1", "s2"}, {"e1", "e2"}, {"s1", "e1"}});
    auto partition = partition_interactions(ses);
    CHECK(partition.social_pure.size() == 1);
    CHECK(partition.ecological_pure.size() == 1);
    CHECK(partition.cross.size() == 1);

    SECTION("all-social families leave the other classes empty") {
        auto social_only =
            SesStructure::build({"s1", "s2", "s3"}, {"e1"}, {{"s1", "s2"}, {"s2", "s3"}});
        auto p = partition_interactions(social_only);
        CHECK(p.social_pure.size() == 2);
        CHECK(p.ecological_pure.empty());
        CHECK(p.cross.empty());
    }
    SECTION("classes are disjoint and cover E on random systems") {
        std::mt19937 rng(333);
        for (int round = 0; round < 40; ++round) {
            auto inputs = oracle::random_family(rng, 8, 5, 6);
            auto u = oracle::universe_of_size(8);
            std::vector<std::vector<std::string>> id_lists;
            for (const auto& raw : oracle::Family(inputs.begin(), inputs.end())) {
                std::vector<std::string> ids;
                for (auto v : raw) ids.push_back(u.id_of(v));
                id_lists.push_back(std::move(ids));
            }
            std::vector<std::string> social(u.ids().begin(), u.ids().begin() + 3);
            std::vector<std::string> ecological(u.ids().begin() + 3, u.ids().end());
            auto ses = SesStructure::build(social, ecological, id_lists);
            auto p = partition_interactions(ses);
            CHECK(p.social_pure.size() + p.ecological_pure.size() + p.cross.size() ==
                  ses.interactions().size());
            std::set<Simplex> all;
            all.insert(p.social_pure.begin(), p.social_pure.end());
            all.insert(p.ecological_pure.begin(), p.ecological_pure.end());
            all.insert(p.cross.begin(), p.cross.end());
            CHECK(all == ses.interactions());
        }
    }
}

TEST_CASE("environment embedding", "[ses]") {
    auto ses = SesStructure::build({"s1"}, {"e1"}, {{"s1", "e1"}});

    SECTION("no externals: X = V") {
        auto env = embed_in_environment(ses, {});
        CHECK(env.complement().empty());
        CHECK(env.size() == 2);
        CHECK(env.in_system("s1"));
    }
    SECTION("one external") {
        auto env = embed_in_environment(ses, {"x1"});
        CHECK(env.complement() == std::vector<std::string>{"x1"});
        CHECK(env.size() == 3);
        CHECK(env.contains("x1"));
        CHECK_FALSE(env.in_system("x1"));
    }
    SECTION("colliding externals are rejected") {
        CHECK_THROWS_AS(embed_in_environment(ses, {"s1"}), Error);
        CHECK_THROWS_AS(embed_in_environment(ses, {"x1", "x1"}), Error);
    }
    SECTION("|X| = |V| + |externals| and the parts are disjoint") {
        std::mt19937 rng(444);
        for (int round = 0; round < 20; ++round) {
            std::uniform_int_distribution<std::size_t> dist(0, 6);
            const auto extra_count = dist(rng);
            std::vector<std::string> extras;
            for (std::size_t i = 0; i < extra_count; ++i)
                extras.push_back("x" + std::to_string(i));
            auto env = embed_in_environment(ses, extras);
            CHECK(env.size() == ses.universe().size() + extras.size());
            for (const auto& id : extras) {
                CHECK(env.contains(id));
                CHECK_FALSE(env.in_system(id));
            }
            for (const auto& id : ses.universe().ids()) CHECK(env.in_system(id));
        }
    }
}

TEST_CASE("ingestion documents parse and reject with line numbers", "[ses][io]") {
    const std::string good = "# a tiny system\n"
                             "vertices\n"
                             "s1 social\n"
                             "e1 ecological\n"
                             "interactions\n"
                             "s1 e1\n"
                             "constants\n"
                             "no-harvest-in-breeding-season\n";
    auto doc = parse_ses_document(good);
    CHECK(doc.social_ids == std::vector<std::string>{"s1"});
    CHECK(doc.ecological_ids == std::vector<std::string>{"e1"});
    REQUIRE(doc.interactions.size() == 1);
    CHECK(doc.constants.size() == 1);
    auto ses = doc.build();
    CHECK(ses.universe().size() == 2);

    auto expect_line_error = [](const std::string& text, const std::string& line) {
        try {
            parse_ses_document(text);
            FAIL("expected parse rejection");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::parse);
            CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("line " + line));
        }
    };

    expect_line_error("vertices\ns1 social\ns1 social\n", "3");
    expect_line_error("vertices\ns1 martian\n", "2");
    expect_line_error("vertices\ns1\n", "2");
    expect_line_error("vertices\ns1 social\ninteractions\ns1 ghost\n", "4");
    expect_line_error("s1 social\n", "1");
    CHECK_THROWS_AS(parse_ses_document("# nothing\n"), Error);

    SECTION("cross-kind re-declaration flows to the disjointness check") {
        auto overlapping = parse_ses_document("vertices\ns1 social\ns1 ecological\n");
        try {
            overlapping.build();
            FAIL("expected disjointness rejection");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::disjointness);
        }
    }
}

TEST_CASE("rendered documents re-parse to the same content", "[ses][io]") {
    SesDocument doc;
    doc.social_ids = {"s1", "s2"};
    doc.ecological_ids = {"e1"};
    doc.interactions = {{"s1", "e1"}, {"s1", "s2", "e1"}};
    doc.constants = {"label one", "label-two"};
    auto text = render_ses_document(doc);
    auto back = parse_ses_document(text);
    CHECK(back.social_ids == doc.social_ids);
    CHECK(back.ecological_ids == doc.ecological_ids);
    CHECK(back.interactions == doc.interactions);
    CHECK(back.constants == doc.constants);
}

TEST_CASE("the document complex carries every declared vertex", "[ses][io]") {
    auto doc = parse_ses_document("vertices\n"
                                  "s1 social\n"
                                  "s2 social\n"
                                  "e1 ecological\n"
                                  "interactions\n"
                                  "s1 e1\n");
    auto ses = doc.build();
    auto complex = complex_of_ses(ses);
    // s2 appears even though no interaction touches it.
    CHECK(complex.stratum(0).size() == 3);
    CHECK(complex.member_count() == 4);
    CHECK(complex.validate().ok());
}
