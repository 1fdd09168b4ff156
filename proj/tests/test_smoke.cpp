#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace fpsl;
using namespace fpsl::testing;

TEST_CASE("end-to-end smoke") {
    CHECK(equal_ps(parse_term("x^x"), parse_term("x")));
    CHECK(same_graph(delta(worked_term()), worked_figure()));
    CHECK(check_axioms(e2()).all_pass());
    CHECK(family_pair(Family::A, 2).lower.graph.vertices.size() == 6);
}
