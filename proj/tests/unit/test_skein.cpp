#include <doctest.h>

#include "knotpoly/diagram.hpp"
#include "knotpoly/error.hpp"
#include "knotpoly/random_diagrams.hpp"
#include "knotpoly/skein.hpp"

using namespace knotpoly;

namespace {

const char* const kHopf = "X(4,2,3,1);X(2,4,1,3)";

struct Known {
    const char* name;
    const char* pd;
    const char* conway;
};

// KnotInfo PD codes and Conway polynomials, independent of the shipped table.
const Known kKnots[] = {
    {"4_1", "X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)", "1-z^2"},
    {"5_1", "X(2,8,3,7);X(4,10,5,9);X(6,2,7,1);X(8,4,9,3);X(10,6,1,5)", "1+3z^2+z^4"},
    {"6_1", "X(1,7,2,6);X(3,10,4,11);X(5,3,6,2);X(7,1,8,12);X(9,4,10,5);X(11,9,12,8)", "1-2z^2"},
    {"6_2", "X(1,8,2,9);X(3,11,4,10);X(5,1,6,12);X(7,2,8,3);X(9,7,10,6);X(11,5,12,4)", "1-z^2-z^4"},
    {"6_3", "X(4,2,5,1);X(8,4,9,3);X(12,9,1,10);X(10,5,11,6);X(6,11,7,12);X(2,8,3,7)", "1+z^2+z^4"},
    {"7_4", "X(2,10,3,9);X(4,12,5,11);X(6,14,7,13);X(8,4,9,3);X(10,2,11,1);X(12,8,13,7);X(14,6,1,5)", "1+4z^2"},
    {"7_7", "X(1,10,2,11);X(3,13,4,12);X(5,14,6,1);X(7,5,8,4);X(9,2,10,3);X(11,9,12,8);X(13,6,14,7)",
     "1-z^2+z^4"},
    {"8_17",
     "X(6,2,7,1);X(14,8,15,7);X(8,3,9,4);X(2,13,3,14);X(12,5,13,6);X(4,9,5,10);X(16,12,1,11);X(10,16,11,15)",
     "1-z^2-2z^4-z^6"},
    {"9_42",
     "X(1,5,2,4);X(5,11,6,10);X(3,8,4,9);X(9,2,10,3);X(16,11,17,12);X(14,8,15,7);X(6,16,7,15);X(18,13,1,14);"
     "X(12,17,13,18)",
     "1-2z^2-z^4"},
};

}  // namespace

TEST_CASE("conway base cases") {
    CHECK(format_poly(conway(parse_pd("O"))) == "1");
    CHECK(format_poly(conway(parse_pd("O;O"))) == "0");
    CHECK(format_poly(conway(parse_pd(kHopf))) == "z");
    CHECK(format_poly(conway(mirror(parse_pd(kHopf)))) == "-z");
    CHECK(format_poly(conway(parse_pd("X(1,1,2,2)"))) == "1");
}

TEST_CASE("conway matches independent knot data") {
    for (const Known& k : kKnots) {
        CAPTURE(k.name);
        Diagram d = parse_pd(k.pd);
        CHECK(format_poly(conway(d)) == k.conway);
        CHECK(format_poly(conway(mirror(d))) == k.conway);
    }
}

TEST_CASE("conway without simplification") {
    SkeinContext ctx;
    ctx.set_simplify(false);
    for (const Known& k : kKnots) {
        CAPTURE(k.name);
        CHECK(format_poly(conway(parse_pd(k.pd), ctx)) == k.conway);
    }
}

TEST_CASE("torus closed form") {
    CHECK(format_poly(conway_torus2(0)) == "0");
    CHECK(format_poly(conway_torus2(1)) == "1");
    CHECK(format_poly(conway_torus2(2)) == "z");
    CHECK(format_poly(conway_torus2(3)) == "1+z^2");
    CHECK(format_poly(conway_torus2(5)) == "1+3z^2+z^4");
    CHECK(format_poly(conway_torus2(7)) == "1+6z^2+5z^4+z^6");
    CHECK_THROWS_AS(conway_torus2(-1), ValidationError);
    for (int m = 1; m <= 9; ++m) {
        CAPTURE(m);
        CHECK(conway(torus2_diagram(m)) == conway_torus2(m));
    }
}

TEST_CASE("Kn") {
    CHECK(conway_Kn(1) == IntPoly{1, 0, 3, 0, 1} * IntPoly{1, 0, 1});
    CHECK(conway_Kn(1) == conway(connected_sum(torus2_diagram(5), 1, mirror(torus2_diagram(3)), 1)));
    for (int n = 1; n <= 20; ++n) CHECK(conway_Kn(n).coeff(0) == 1);
    CHECK_THROWS_AS(conway_Kn(0), ValidationError);
}

TEST_CASE("a2") {
    CHECK(a2(parse_pd("X(2,14,3,13);X(5,11,6,10);X(7,15,8,14);X(9,5,10,4);X(11,7,12,6);X(12,2,13,1);"
                      "X(15,9,16,8);X(16,4,1,3)")) == 5);
    CHECK(a2(parse_pd("X(1,5,2,4);X(3,1,4,6);X(5,3,6,2)")) == 1);
    CHECK(a2(parse_pd("X(1,5,2,4);X(3,9,4,8);X(5,1,6,10);X(7,3,8,2);X(9,7,10,6)")) == 2);
    CHECK(a2(parse_pd("O")) == 0);
    CHECK_THROWS_AS(a2(parse_pd(kHopf)), ValidationError);
}

TEST_CASE("skein identity") {
    SkeinContext ctx;
    Diagram hopf = parse_pd(kHopf);
    CHECK(check_skein_identity(hopf, 0, ctx));
    CHECK(check_skein_identity(hopf, 1, ctx));
    Diagram t5 = torus2_diagram(5);
    for (std::size_t x = 0; x < t5.crossing_count(); ++x) CHECK(check_skein_identity(t5, x, ctx));

    RandomDiagrams gen(31337);
    for (int i = 0; i < 100; ++i) {
        Diagram d = gen.any(8);
        for (std::size_t x = 0; x < d.crossing_count(); ++x) CHECK(check_skein_identity(d, x, ctx));
    }
}

TEST_CASE("a2 skein") {
    SkeinContext ctx;
    Diagram t3 = torus2_diagram(3);
    for (std::size_t x = 0; x < 3; ++x) {
        CHECK(check_a2_skein(t3, x, ctx));
        CHECK(a2(t3, ctx) - a2(switch_crossing(t3, x), ctx) == 1);
    }
    Diagram t5 = torus2_diagram(5);
    CHECK(check_a2_skein(t5, 0, ctx));
    CHECK(a2(t5, ctx) - a2(switch_crossing(t5, 0), ctx) == linking_number(torus2_diagram(4), 0, 1));
    CHECK_THROWS_AS(check_a2_skein(mirror(t3), 0, ctx), ValidationError);
    CHECK_THROWS_AS(check_a2_skein(parse_pd(kHopf), 0, ctx), ValidationError);
}

TEST_CASE("parity and normalization") {
    RandomDiagrams gen(8080);
    SkeinContext ctx;
    for (int i = 0; i < 200; ++i) {
        Diagram d = gen.any(8);
        IntPoly p = conway(d, ctx);
        CAPTURE(format_pd(d));
        if (d.component_count() % 2 == 1) {
            CHECK((p.parity() == Parity::even || p.parity() == Parity::zero));
        } else {
            CHECK((p.parity() == Parity::odd || p.parity() == Parity::zero));
        }
        if (d.component_count() == 1) CHECK(p.coeff(0) == 1);
        if (d.component_count() == 2) CHECK(p.coeff(1) == linking_number(d, 0, 1));
    }
}

TEST_CASE("memo and stats") {
    SkeinContext ctx;
    Diagram d = torus2_diagram(7);
    IntPoly first = conway(d, ctx);
    auto expanded = ctx.stats().nodes_expanded;
    CHECK(expanded > 0);
    CHECK(ctx.memo_size() > 0);
    IntPoly second = conway(d, ctx);
    CHECK(first == second);
    CHECK(ctx.stats().nodes_expanded == expanded);
    CHECK(ctx.stats().cache_hits > 0);
    REQUIRE(ctx.lookup(canonical_code(reduce(d))) != nullptr);
    CHECK(*ctx.lookup(canonical_code(reduce(d))) == first);
    ctx.clear();
    CHECK(ctx.memo_size() == 0);
}

TEST_CASE("node budget") {
    SkeinContext tiny(2);
    CHECK_THROWS_AS(conway(torus2_diagram(9), tiny), BudgetExceeded);
    SkeinContext ok(2);
    CHECK(conway(parse_pd("O"), ok) == IntPoly{1});
}

TEST_CASE("measure decreases") {
    RandomDiagrams gen(5);
    for (int i = 0; i < 50; ++i) {
        Diagram d = gen.any(8);
        if (is_descending(d)) continue;
        SkeinMeasure m = skein_measure(d);
        // the engine changes the first crossing met on its under-strand
        bool some_child_smaller = false;
        for (std::size_t x = 0; x < d.crossing_count(); ++x) {
            if (skein_measure(switch_crossing(d, x)) < m) some_child_smaller = true;
            CHECK(skein_measure(smooth_crossing(d, x)).crossings < m.crossings);
        }
        CHECK(some_child_smaller);
    }
    CHECK(is_descending(parse_pd("O")));
    CHECK(!is_descending(torus2_diagram(3)));
}
