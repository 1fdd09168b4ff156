#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace fpsl;
using namespace fpsl::testing;

TEST_CASE("meet_raw on singletons") {
    BiTree g = meet_raw(singleton("x"), singleton("y"));
    REQUIRE(g.vertices.size() == 2);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.left_root.has_value());
    CHECK(g.right_root.has_value());
    CHECK(g.label(*g.left_root) == "x");
    CHECK(g.vertex(*g.left_root).side == Side::L);
    CHECK(g.label(*g.right_root) == "y");
    CHECK(g.vertex(*g.right_root).side == Side::R);

    BiTree h = meet_raw(singleton("x"), singleton("x"));
    CHECK(h.vertices.size() == 2);
    CHECK(h.label(*h.left_root) == "x");
    CHECK(h.label(*h.right_root) == "x");
}

TEST_CASE("meet_raw of an edge with a singleton") {
    BiTree xy = meet_raw(singleton("x"), singleton("y"));
    BiTree g = meet_raw(xy, singleton("z"));
    REQUIRE(g.vertices.size() == 3);
    REQUIRE(g.edges.size() == 2);
    CHECK(g.label(*g.left_root) == "x");
    CHECK(g.label(*g.right_root) == "z");
    // path y_R - x_L - z_R
    CHECK(g.degree(*g.left_root) == 2);
    for (const auto& v : g.vertices)
        CHECK(v.side == (v.id == *g.left_root ? Side::L : Side::R));
}

TEST_CASE("delta basics") {
    CHECK(delta(leaf("x")).is_singleton());
    BiTree g = delta(parse_term("x^y"));
    CHECK(g.vertices.size() == 2);
    CHECK(same_graph(g, meet_raw(singleton("x"), singleton("y"))));
}

TEST_CASE("delta reproduces the worked nine-vertex figure") {
    BiTree g = delta(worked_term());
    REQUIRE(g.vertices.size() == 9);
    REQUIRE(g.edges.size() == 8);
    CHECK(same_graph(g, worked_figure()));
    CHECK(g.label(*g.left_root) == "x");
    CHECK(g.label(*g.right_root) == "y");
}

TEST_CASE("gamma_contract equals delta") {
    CHECK(same_graph(gamma_contract(parse_term("x^y")), delta(parse_term("x^y"))));
    CHECK(same_graph(gamma_contract(worked_term()), worked_figure()));
    BiTree g = gamma_contract(parse_term("(x^y)^z"));
    CHECK(g.vertices.size() == 3);
    CHECK(same_graph(g, delta(parse_term("(x^y)^z"))));
    CHECK_THROWS_AS(gamma_contract(leaf("x")), std::invalid_argument);

    std::mt19937 rng(17);
    auto vars = var_pool(5);
    for (int i = 0; i < 300; ++i) {
        TermPtr t = random_term(rng, 2 + i % 30, vars);
        CHECK(same_graph(gamma_contract(t), delta(t)));
    }
}

TEST_CASE("vertex counts match leaf counts") {
    std::mt19937 rng(19);
    auto vars = var_pool(4);
    auto leaves_by_side = [](auto&& self, const TermPtr& u, bool is_left, int& l,
                             int& r) -> void {
        if (u->is_leaf()) {
            (is_left ? l : r)++;
            return;
        }
        self(self, u->left(), true, l, r);
        self(self, u->right(), false, l, r);
    };
    for (int i = 0; i < 100; ++i) {
        TermPtr t = random_term(rng, 2 + i % 20, vars);
        BiTree g = delta(t);
        int lcount = 0, rcount = 0;
        for (const auto& v : g.vertices) (v.side == Side::L ? lcount : rcount)++;
        int l = 0, r = 0;
        leaves_by_side(leaves_by_side, t->left(), true, l, r);
        leaves_by_side(leaves_by_side, t->right(), false, l, r);
        CHECK(lcount == l);
        CHECK(rcount == r);
    }
}

TEST_CASE("graph_substitute with identity pieces") {
    BiTree g = delta(parse_term("x^y"));
    std::map<Symbol, BiTree> pieces{{"x", delta(leaf("x"))}, {"y", delta(leaf("y"))}};
    CHECK(same_graph(graph_substitute(g, pieces), g));
}

TEST_CASE("graph_substitute agrees with term substitution") {
    BiTree g = graph_substitute(delta(parse_term("x^x")),
                                {{"x", delta(parse_term("y^z"))}});
    CHECK(same_graph(g, delta(parse_term("(y^z)^(y^z)"))));

    std::mt19937 rng(23);
    auto vars = var_pool(3);
    for (int i = 0; i < 150; ++i) {
        TermPtr t = random_term(rng, 1 + i % 12, vars);
        Substitution psi;
        std::map<Symbol, BiTree> pieces;
        for (const auto& x : vars) {
            psi[x] = random_term(rng, 1 + i % 4, vars);
            pieces[x] = delta(psi[x]);
        }
        CHECK(same_graph(graph_substitute(delta(t), pieces), delta(substitute(t, psi))));
    }
}

TEST_CASE("graph_substitute reproduces the eleven-vertex figure") {
    CHECK(same_graph(delta(substituted_term()), substituted_figure()));
}

TEST_CASE("graph_substitute error cases") {
    CHECK_THROWS_AS(graph_substitute(delta(parse_term("x^y")), {{"x", delta(leaf("x"))}}),
                    std::invalid_argument);
}

TEST_CASE("skeleton") {
    CHECK(same_graph(skeleton(parse_term("x^y"), {}), delta(parse_term("x^y"))));
    BiTree sk = skeleton(parse_term("x^y"),
                         {{"x", parse_term("a^b")}, {"y", parse_term("c^d")}});
    CHECK(same_graph(sk, delta(parse_term("a^d"))));
    BiTree sk9 = skeleton(worked_term(), {{"x", parse_term("p^q")}});
    CHECK(sk9.vertices.size() == 9);
    CHECK(sk9.edges.size() == 8);
}

TEST_CASE("skeleton embeds as the block-root subtree of the substituted graph") {
    std::mt19937 rng(29);
    auto vars = var_pool(3);
    for (int i = 0; i < 100; ++i) {
        TermPtr t = random_term(rng, 1 + i % 10, vars);
        Substitution psi;
        std::map<Symbol, BiTree> pieces;
        for (const auto& x : vars) {
            psi[x] = random_term(rng, 1 + (i + 1) % 4, vars);
            pieces[x] = delta(psi[x]);
        }
        BiTree base = delta(t);
        BiTree sk = skeleton(t, psi);
        auto res = graph_substitute_detail(base, pieces);
        for (const auto& v : base.vertices)
            CHECK(res.graph.label(res.block_root.at(v.id)) == sk.label(v.id));
        for (auto [a, b] : base.edges)
            CHECK(res.graph.adjacent(res.block_root.at(a), res.block_root.at(b)));
        CHECK(res.graph.vertex(res.block_root.at(*base.left_root)).id ==
              *res.graph.left_root);
    }
}

TEST_CASE("project") {
    BiTree l = project(delta(parse_term("x^y")), Rooting::Left);
    CHECK(l.left_root.has_value());
    CHECK_FALSE(l.right_root.has_value());
    CHECK(l.vertices.size() == 2);

    // reduced projections drop the root-adjacent essential thorn
    NormalForm tx = theta(parse_term("x"));
    BiTree lx = project(tx.graph, Rooting::LeftReduced);
    CHECK(lx.vertices.size() == 1);
    CHECK(lx.vertices.front().side == Side::L);
    CHECK(lx.vertices.front().label == "x");
    BiTree rx = project(tx.graph, Rooting::RightReduced);
    CHECK(rx.vertices.size() == 1);
    CHECK(rx.vertices.front().side == Side::R);

    NormalForm txy = theta(parse_term("x^y"));
    CHECK(project(txy.graph, Rooting::LeftReduced).vertices.size() == 2);

    // delta((x^y)^(x^z)) contains a fold, so the reduced projections reject it
    CHECK_THROWS_AS(project(delta(parse_term("(x^y)^(x^z)")), Rooting::LeftReduced),
                    std::invalid_argument);
}

TEST_CASE("hat") {
    CHECK(hat(theta(parse_term("x")).graph).is_singleton());
    UnrootedTree h = hat(theta(parse_term("x^y")).graph);
    CHECK(h.vertices.size() == 2);
    CHECK(h.edges.size() == 1);

    std::mt19937 rng(31);
    auto vars = var_pool(4);
    for (int i = 0; i < 100; ++i) {
        NormalForm a = theta(random_term(rng, 1 + i % 15, vars));
        std::string base = canonical_key(hat(a.graph));
        for (Rooting m : {Rooting::Left, Rooting::Right, Rooting::LeftReduced,
                          Rooting::RightReduced})
            CHECK(canonical_key(hat(project(a.graph, m))) == base);
    }
}

TEST_CASE("reroot") {
    NormalForm txy = theta(parse_term("x^y"));
    BiTree same = reroot(txy.graph, *txy.graph.left_root, *txy.graph.right_root);
    CHECK(same_graph(same, txy.graph));

    // moving the roots one edge over keeps the hat
    NormalForm nf = theta(parse_term("x^((z^(x^w))^y)"));
    const BiTree& g = nf.graph;
    bool moved = false;
    for (auto [a, b] : g.edges) {
        int lv = g.vertex(a).side == Side::L ? a : b;
        int rv = lv == a ? b : a;
        if (lv == *g.left_root && rv == *g.right_root) continue;
        try {
            BiTree r = reroot(g, lv, rv);
            CHECK(is_reduced(r));
            CHECK(canonical_key(hat(r)) == canonical_key(hat(g)));
            moved = true;
        } catch (const std::invalid_argument&) {
            // some positions would create a non-essential thorn
        }
    }
    CHECK(moved);

    // rerooting away from an essential thorn must be rejected:
    // theta((x^y)^x) is the path y_R - x_L = x_R with the thorn at x_R
    NormalForm thorny = theta(parse_term("(x^y)^x"));
    REQUIRE(thorny.graph.vertices.size() == 3);
    int lv = *thorny.graph.left_root;
    int yv = -1;
    for (const auto& v : thorny.graph.vertices)
        if (v.label == "y") yv = v.id;
    REQUIRE(yv >= 0);
    CHECK_THROWS_AS(reroot(thorny.graph, lv, yv), std::invalid_argument);

    CHECK_THROWS_AS(reroot(txy.graph, *txy.graph.right_root, *txy.graph.left_root),
                    std::invalid_argument);
}
