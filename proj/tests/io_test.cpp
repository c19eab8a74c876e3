#include <catch2/catch_amalgamated.hpp>

#include "ecc/io.hpp"
#include "test_util.hpp"

using namespace ecc;
using namespace ecc_test;

TEST_CASE("graph document round-trips losslessly and byte-stably") {
    auto g = cycle_n(5);
    std::vector<int> colors{1, 1, 1, 1, 2};
    GraphDocument doc = make_document(g, &colors);
    doc.roles["start"] = "c1";
    doc.meta["note"] = "five cycle";

    std::string text = serialize(doc);
    GraphDocument back = parse_document(text);
    CHECK(back.vertices == doc.vertices);
    CHECK(back.edges == doc.edges);
    CHECK(back.roles == doc.roles);
    CHECK(back.colored);
    CHECK(serialize(back) == text);

    Graph g2 = back.to_graph();
    CHECK(g2.n() == 5);
    CHECK(g2.m() == 5);
    EdgeColoring f(g2, back.edge_colors(g2));
    CHECK(f.num_colors() == 2);
}

TEST_CASE("uncolored document round-trip") {
    auto g = path_n(3);
    GraphDocument doc = make_document(g);
    std::string text = serialize(doc);
    GraphDocument back = parse_document(text);
    CHECK_FALSE(back.colored);
    CHECK(serialize(back) == text);
    CHECK_THROWS_AS(back.edge_colors(back.to_graph()), error);
}

TEST_CASE("document rejects mixed colored and uncolored edges") {
    std::string bad = R"({
      "version": 1,
      "vertices": ["a", "b", "c"],
      "edges": [["a", "b"], ["b", "c", 1]]
    })";
    CHECK_THROWS_AS(parse_document(bad), error);
}

TEST_CASE("document rejects malformed json and missing fields") {
    CHECK_THROWS_AS(parse_document("not json"), error);
    CHECK_THROWS_AS(parse_document(R"({"version": 1})"), error);
    CHECK_THROWS_AS(parse_document(R"({
      "version": 1, "vertices": ["a","b"], "edges": [["a","b",0]]
    })"),
                    error);
}

TEST_CASE("dot export") {
    auto g = path_n(3);
    GraphDocument plain = make_document(g);
    std::string dot = to_dot(plain);
    CHECK(dot.find("n0 -- n1") != std::string::npos);
    CHECK(dot.find("n1 -- n2") != std::string::npos);
    CHECK(dot.find("color=") == std::string::npos);

    std::vector<int> colors{1, 2};
    GraphDocument colored = make_document(g, &colors);
    colored.roles["left end"] = "p1";
    std::string cdot = to_dot(colored);
    CHECK(cdot.find("color=red") != std::string::npos);
    CHECK(cdot.find("color=blue") != std::string::npos);
    CHECK(cdot.find("left end") != std::string::npos);
}

TEST_CASE("dimacs parser") {
    std::istringstream ok("c comment\np cnf 3 1\n1 2 3 0\n");
    Cnf3Formula phi = parse_dimacs(ok);
    CHECK(phi.num_vars == 3);
    CHECK(phi.num_clauses() == 1);

    std::istringstream repeated("p cnf 2 1\n1 1 2 0\n");
    CHECK_THROWS_AS(parse_dimacs(repeated), error);

    std::istringstream arity("p cnf 3 1\n1 2 0\n");
    CHECK_THROWS_AS(parse_dimacs(arity), error);

    std::istringstream badcount("p cnf 3 2\n1 2 3 0\n");
    CHECK_THROWS_AS(parse_dimacs(badcount), error);

    std::istringstream noheader("1 2 3 0\n");
    CHECK_THROWS_AS(parse_dimacs(noheader), error);

    std::istringstream var_range("p cnf 2 1\n1 2 3 0\n");
    CHECK_THROWS_AS(parse_dimacs(var_range), error);

    // round trip
    std::istringstream again(to_dimacs(phi));
    Cnf3Formula phi2 = parse_dimacs(again);
    CHECK(phi2.num_vars == phi.num_vars);
    CHECK(phi2.clauses.size() == phi.clauses.size());
}

TEST_CASE("gadget documents carry roles and meta") {
    Cnf3Formula phi{3, {Clause{Literal{1, true}, Literal{2, false}, Literal{3, true}}}};
    auto gg = build_pc_reduction(phi);
    GraphDocument doc = make_document(gg);
    CHECK(doc.meta["kind"] == "pc");
    CHECK(doc.roles.count("w[1][2]"));
    std::string text = serialize(doc);
    GraphDocument back = parse_document(text);
    CHECK(back.roles.at("w[1][2]") == "u[2][1][8]");

    auto g4 = build_cc1_reduction(phi);
    GraphDocument doc4 = make_document(g4);
    CHECK(doc4.meta["v0"].size() == 7);
    CHECK(doc4.meta["ham_path"].size() == 6);
}
