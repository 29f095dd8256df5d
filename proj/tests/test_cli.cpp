#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfp/height.hpp"
#include "qfp/report.hpp"

using namespace qfp;

TEST_CASE("declaration grammar: the documented examples") {
    RingDecl e = parse_ring_decl("ring E = GF(2)[x,y,z] / (x^3 + y^2*z + y*z^2) graded");
    CHECK(e.mode == RingDecl::Mode::Graded);
    CHECK(e.relations.size() == 1);
    CHECK(e.p == 2);

    RingDecl a = parse_ring_decl("ring A = GF(2)[x] / (x^2) finite");
    CHECK(a.mode == RingDecl::Mode::Finite);

    // GF(6) is not a prime power
    CHECK_THROWS_AS(parse_ring_decl("ring B = GF(6)[x] finite"), ParseError);
    // undeclared variable
    CHECK_THROWS_AS(parse_ring_decl("ring C = GF(2)[x] / (x*y) finite"), ParseError);
    // inhomogeneous relation in graded mode
    CHECK_THROWS_AS(parse_ring_decl("ring D = GF(2)[x,y] / (x^2 + y) graded"), ParseError);
    // syntax errors carry positions and the expected-token set
    try {
        parse_ring_decl("ring X = GF(2)[x] / (x^2 finite");
        CHECK(false);
    } catch (const ParseError& pe) {
        CHECK(pe.line == 1);
        CHECK(pe.col > 1);
        CHECK(!pe.expected.empty());
    }
}

TEST_CASE("parse -> print -> parse is a fixpoint on the corpus") {
    const std::vector<std::string> corpus = {
        "ring A = GF(2)[x] / (x^2) finite",
        "ring F4 = GF(4)[x] / (x) finite",
        "ring F8 = GF(8)[x] / (x) finite",
        "ring F9 = GF(9)[x] / (x) finite",
        "ring Pair = GF(2)[x] / (x^2 + x) finite",
        "ring F4eps = GF(4)[x] / (x^2) finite",
        "ring NilPlane = GF(2)[x, y] / (x^2, x*y, y^2) finite",
        "ring Line12 = GF(2)[x] / (x^12) finite",
        "ring PairF4 = GF(2)[t] / (t^3 + t^2 + t) finite",
        "ring Ordinary = GF(2)[x, y, z] / (x^3 + z^3 + y^2*z + x*y*z) graded",
        "ring Supersingular = GF(2)[x,y,z]/(x^3+y^2*z+y*z^2) graded",
        "ring Fermat = GF(2)[x, y, z] / (x^3 + y^3 + z^3) graded",
        "ring NormalCrossing = GF(2)[x, y, z] / (x*y) graded",
        "ring Quadric = GF(2)[x, y, z] / (x*y + z^2) graded",
        "ring Cubic3 = GF(3)[x, y, z] / (x^3 + y^3 + z^3) graded",
        "ring Plane = GF(5)[x, y] / (x^2 + 2*x*y + y^2) graded",
        "ring Primed = GF(2)[s', t', x] / (s'^2 + t'*x) graded",
        "ring Spread = GF(2)[x,y]/(x^2,y^2) finite",
        "ring Dense = GF(3)[x] / (x^3 + 2 x + 1) finite",
        "ring Wide = GF(2)[a, b, c, d] / (a*b + c*d) graded",
    };
    CHECK(corpus.size() == 20);
    for (const auto& text : corpus) {
        RingDecl d1 = parse_ring_decl(text);
        std::string printed = print_ring_decl(d1);
        RingDecl d2 = parse_ring_decl(printed);
        INFO(text, " -> ", printed);
        CHECK(d1 == d2);
        CHECK(print_ring_decl(d2) == printed);
    }
}

TEST_CASE("realization of prime-power fields and modes") {
    RingDecl f4eps = parse_ring_decl("ring F4eps = GF(4)[x] / (x^2) finite");
    RealizedRing r = realize(f4eps);
    REQUIRE(r.finite);
    CHECK(r.finite->dim() == 4);  // {1, x} over GF(4) = dim 4 over GF(2)
    CHECK(r.finite->element_count() == 16);

    RingDecl cone = parse_ring_decl("ring E = GF(2)[x,y,z] / (x^3 + y^2*z + y*z^2) graded");
    RealizedRing g = realize(cone);
    REQUIRE(g.graded);
    CHECK(g.graded->graded_piece_basis(3).size() == 9);

    // graded realization needs a prime base field
    RingDecl bad = parse_ring_decl("ring G = GF(4)[x, y] / (x*y) graded");
    CHECK_THROWS_AS(realize(bad), error);

    // a relation-free declaration is grammatical but infinite-dimensional
    RingDecl free_line = parse_ring_decl("ring L = GF(2)[x] finite");
    CHECK_THROWS_AS(realize(free_line), error);
}

TEST_CASE("witt eval computes 1+1+1+1 = (0,0,1) in length 3 over GF(2)") {
    WittEvalResult res = eval_witt_expr(2, 3, "[1]+[1]+[1]+[1]");
    REQUIRE(res.coords.size() == 3);
    CHECK(res.coords[0] == 0);
    CHECK(res.coords[1] == 0);
    CHECK(res.coords[2] == 1);
    CHECK(!res.trace.empty());

    // V([1])*V([1]) = (0,0,1) and the literal 3 = (1,1,0)
    CHECK(eval_witt_expr(2, 3, "V([1])*V([1])").coords == std::vector<std::uint32_t>{0, 0, 1});
    CHECK(eval_witt_expr(2, 3, "3").coords == std::vector<std::uint32_t>{1, 1, 0});
    CHECK(eval_witt_expr(3, 2, "F([2])").coords == std::vector<std::uint32_t>{2, 0});
}

TEST_CASE("reports are byte-identical across repeated runs") {
    RingDecl cone =
        parse_ring_decl("ring SS = GF(2)[x,y,z] / (x^3 + y^2*z + y*z^2) graded");
    auto run = [&]() {
        RealizedRing g = realize(cone);
        HeightReport rep = height_search(*g.graded, 2, 4);
        return build_height_report(cone, rep, 2, 4, 7).dump(2);
    };
    std::string a = run();
    std::string b = run();
    CHECK(a == b);
    CHECK(a.find("\"kind\": \"lower_bound\"") != std::string::npos);
    CHECK(a.find("\"value\": 2") != std::string::npos);

    RingDecl fin = parse_ring_decl("ring A = GF(2)[x] / (x^2) finite");
    auto run_fin = [&]() {
        RealizedRing r = realize(fin);
        HeightReport rep = height_search(*r.finite, 2);
        return build_height_report(fin, rep, 2, 0, 7).dump(2);
    };
    CHECK(run_fin() == run_fin());
}
