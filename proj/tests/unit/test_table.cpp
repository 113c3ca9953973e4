#include <doctest.h>

#include <cstdlib>

#include "knotpoly/knot_table.hpp"
#include "knotpoly/skein.hpp"

using namespace knotpoly;

namespace {

const std::filesystem::path kData{KNOTPOLY_TEST_DATA};

KnotTable shipped() { return KnotTable::load(default_table_path()); }

}  // namespace

TEST_CASE("shipped table validates") {
    KnotTable t = shipped();
    CHECK(t.entries().size() == 6);
    SkeinContext ctx;
    for (const EntryCheck& c : validate(t, ctx)) {
        CAPTURE(c.name);
        CHECK(c.passed);
        CHECK(c.expected == c.computed);
    }
}

TEST_CASE("reference values") {
    KnotTable t = shipped();
    SkeinContext ctx;
    CHECK(format_poly(conway(t.diagram("3_1"), ctx)) == "1+z^2");
    CHECK(format_poly(conway(t.diagram("8_19"), ctx)) == "1+5z^2+5z^4+z^6");
    CHECK(format_poly(conway(mirror(t.diagram("10_148")), ctx)) == "1+4z^2+3z^4+z^6");
    CHECK(format_poly(conway(t.diagram("6^2_3"), ctx)) == "2z+2z^3");
    CHECK(a2(t.diagram("5_2"), ctx) == 2);
    CHECK(a2(t.diagram("8_19"), ctx) == 5);
    CHECK(a2(mirror(t.diagram("3_1")), ctx) == 1);
    CHECK(t.diagram("6^2_3").component_count() == 2);
    CHECK(linking_number(t.diagram("6^2_3"), 0, 1) == 2);
    CHECK(t.diagram("0_1") == Diagram::unknot());
}

TEST_CASE("lookup") {
    KnotTable t = shipped();
    CHECK(t.find("3_1") != nullptr);
    CHECK(t.find("3_2") == nullptr);
    CHECK_THROWS_AS(t.at("3_2"), TableError);
    CHECK(t.published("6^2_3") == IntPoly{0, 2, 0, 2});
    t.set_conway("3_1", "1");
    CHECK(t.published("3_1") == IntPoly{1});
    CHECK_THROWS_AS(t.set_conway("nope", "1"), TableError);
}

TEST_CASE("corrupted polynomial fails validation") {
    KnotTable t = KnotTable::load(kData / "corrupt_table.json");
    SkeinContext ctx;
    int failures = 0;
    for (const EntryCheck& c : validate(t, ctx)) {
        if (!c.passed) {
            ++failures;
            CHECK(c.name == "8_19");
            CHECK(c.computed == "1+5z^2+5z^4+z^6");
        }
    }
    CHECK(failures == 1);
}

TEST_CASE("corrupted PD is reported, not thrown") {
    KnotTable t = KnotTable::load(kData / "bad_pd_table.json");
    SkeinContext ctx;
    std::vector<EntryCheck> checks;
    REQUIRE_NOTHROW(checks = validate(t, ctx));
    int failures = 0;
    for (const EntryCheck& c : checks) {
        if (c.passed) continue;
        ++failures;
        CHECK(c.name == "5_2");
        CHECK(c.computed.rfind("error:", 0) == 0);
    }
    CHECK(failures == 1);
}

TEST_CASE("component count mismatch") {
    KnotTable t = KnotTable::from_json(R"j([{"name":"h","pd":"X(4,2,3,1);X(2,4,1,3)","conway":"z","components":1}])j");
    SkeinContext ctx;
    auto checks = validate(t, ctx);
    REQUIRE(checks.size() == 1);
    CHECK(!checks[0].passed);
}

TEST_CASE("malformed table files") {
    CHECK_THROWS_AS(KnotTable::from_json("{"), TableError);
    CHECK_THROWS_AS(KnotTable::from_json("{}"), TableError);
    CHECK_THROWS_AS(KnotTable::from_json(R"([{"name":"x","pd":"O","conway":"1"}])"), TableError);
    CHECK_THROWS_AS(KnotTable::from_json(R"([{"name":"x","pd":"O","conway":1,"components":1}])"), TableError);
    CHECK_THROWS_AS(KnotTable::load(kData / "missing.json"), TableError);
    CHECK(KnotTable::from_json("[]").entries().empty());
}

TEST_CASE("KNOT_TABLE overrides the default path") {
    std::string corrupt = (kData / "corrupt_table.json").string();
    setenv("KNOT_TABLE", corrupt.c_str(), 1);
    CHECK(default_table_path() == corrupt);
    unsetenv("KNOT_TABLE");
    CHECK(std::filesystem::exists(default_table_path()));
}
