#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace fpsl;
using namespace fpsl::testing;

TEST_CASE("parsing") {
    CHECK(parse_term("x")->is_leaf());
    CHECK(parse_term("x")->var() == "x");
    CHECK(equal_terms(parse_term("(x^y)^z"), meet(meet(leaf("x"), leaf("y")), leaf("z"))));
    CHECK(equal_terms(parse_term("x^y^z"), meet(meet(leaf("x"), leaf("y")), leaf("z"))));
    CHECK(equal_terms(parse_term("  x ^ ( y ^ z ) "), meet(leaf("x"), meet(leaf("y"), leaf("z")))));
    CHECK(parse_term("x_1'")->var() == "x_1'");
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_term(""), ParseError);
    CHECK_THROWS_AS(parse_term("x^"), ParseError);
    CHECK_THROWS_AS(parse_term("(x^y"), ParseError);
    CHECK_THROWS_AS(parse_term("x y"), ParseError);
    CHECK_THROWS_AS(parse_term("^x"), ParseError);
    CHECK_THROWS_AS(parse_term("3x"), ParseError);
    try {
        parse_term("x^(y%z)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("formatting") {
    CHECK(format_term(leaf("x")) == "x");
    CHECK(format_term(meet(leaf("x"), meet(leaf("y"), leaf("z")))) == "(x^(y^z))");
    CHECK(format_term(meet(meet(leaf("x"), leaf("y")), leaf("z"))) == "((x^y)^z)");
}

TEST_CASE("parse/format round trip on random terms") {
    std::mt19937 rng(7);
    auto vars = var_pool(5);
    for (int i = 0; i < 200; ++i) {
        TermPtr t = random_term(rng, 1 + i % 25, vars);
        CHECK(equal_terms(parse_term(format_term(t)), t));
    }
}

TEST_CASE("invariants of a single letter") {
    InvariantRecord rec = term_invariants(leaf("x"));
    CHECK(rec.l == "x");
    CHECK(rec.r == "x");
    CHECK(rec.co == std::set<Symbol>{"x"});
    CHECK(rec.co_l.empty());
    CHECK(rec.co_r.empty());
    CHECK(rec.co2 == std::set<std::pair<Symbol, Symbol>>{{"x", "x"}});
}

TEST_CASE("invariants of (x^y)^z") {
    InvariantRecord rec = term_invariants(parse_term("(x^y)^z"));
    CHECK(rec.l == "x");
    CHECK(rec.r == "z");
    CHECK(rec.co == std::set<Symbol>{"x", "y", "z"});
    CHECK(rec.co_l == std::set<Symbol>{"x"});
    CHECK(rec.co_r == std::set<Symbol>{"y", "z"});
    CHECK(rec.co2 == std::set<std::pair<Symbol, Symbol>>{
                         {"x", "x"}, {"y", "y"}, {"z", "z"}, {"x", "y"}, {"x", "z"}});
}

TEST_CASE("invariants of x^(y^z)") {
    InvariantRecord rec = term_invariants(parse_term("x^(y^z)"));
    CHECK(rec.l == "x");
    CHECK(rec.r == "z");
    CHECK(rec.co == std::set<Symbol>{"x", "y", "z"});
    CHECK(rec.co_l == std::set<Symbol>{"x", "y"});
    CHECK(rec.co_r == std::set<Symbol>{"z"});
    CHECK(rec.co2 == std::set<std::pair<Symbol, Symbol>>{
                         {"x", "x"}, {"y", "y"}, {"z", "z"}, {"y", "z"}, {"x", "z"}});
}

TEST_CASE("invariant properties on random terms") {
    std::mt19937 rng(11);
    auto vars = var_pool(4);
    for (int i = 0; i < 200; ++i) {
        TermPtr u = random_term(rng, 1 + i % 12, vars);
        TermPtr v = random_term(rng, 1 + (i * 3) % 12, vars);
        InvariantRecord ru = term_invariants(u), rv = term_invariants(v);
        InvariantRecord rm = term_invariants(meet(u, v));
        CHECK(rm.l == ru.l);
        CHECK(rm.r == rv.r);
        for (const auto& p : ru.co2) CHECK(rm.co2.count(p) == 1);
        for (const auto& p : rv.co2) CHECK(rm.co2.count(p) == 1);
        CHECK(rm.co2.size() <= ru.co2.size() + rv.co2.size() + 1);
        for (const auto& x : ru.co_l) CHECK(ru.co.count(x) == 1);
        for (const auto& x : ru.co_r) CHECK(ru.co.count(x) == 1);
        CHECK(ru.co.count(ru.l) == 1);
        CHECK(ru.co.count(ru.r) == 1);
    }
}

TEST_CASE("substitution") {
    Substitution s{{"x", parse_term("y^z")}};
    CHECK(equal_terms(substitute(leaf("x"), s), parse_term("y^z")));
    CHECK(equal_terms(substitute(parse_term("x^y"), {}), parse_term("x^y")));
    CHECK(equal_terms(substitute(parse_term("x^x"), {{"x", parse_term("x^y")}}),
                      parse_term("(x^y)^(x^y)")));
}

TEST_CASE("substitution composes") {
    std::mt19937 rng(13);
    auto vars = var_pool(3);
    for (int i = 0; i < 100; ++i) {
        TermPtr t = random_term(rng, 1 + i % 10, vars);
        Substitution s1, s2;
        for (const auto& x : vars) {
            s1[x] = random_term(rng, 1 + i % 3, vars);
            s2[x] = random_term(rng, 1 + (i + 1) % 3, vars);
        }
        Substitution composed;
        for (const auto& x : vars) composed[x] = substitute(s1[x], s2);
        CHECK(equal_terms(substitute(substitute(t, s1), s2), substitute(t, composed)));
    }
}
