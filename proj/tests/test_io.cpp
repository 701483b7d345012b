#include <catch2/catch_amalgamated.hpp>

#include "rcgraph/json_io.hpp"
#include "rcgraph/render.hpp"

using namespace rcgraph;
using rcgraph::io::json;

TEST_CASE("JSON round trips")
{
    SECTION("permutations")
    {
        for (const Permutation& w :
             {Permutation::identity(), Permutation({1, 4, 3, 2}), Permutation({2, 5, 6, 1, 3, 4})})
            CHECK(io::permutation_from_json(io::to_json(w)) == w);
        CHECK_THROWS_AS(io::permutation_from_json(json::parse("[1,1]")), std::invalid_argument);
        CHECK_THROWS_AS(io::permutation_from_json(json::parse("{}")), std::invalid_argument);
    }

    SECTION("partitions")
    {
        for (const Partition& p : {Partition{}, Partition({2, 2}), Partition({4, 2, 1})})
            CHECK(io::partition_from_json(io::to_json(p)) == p);
        CHECK(io::partition_from_json(json::parse("[2,0]")) == Partition({2}));
        CHECK_THROWS_AS(io::partition_from_json(json::parse("[1,2]")), std::invalid_argument);
    }

    SECTION("graphs")
    {
        Graph g{{1, 3}, {2, 1}, {2, 3}, {3, 1}};
        CHECK(io::graph_from_json(io::to_json(g)) == g);
        CHECK(io::to_json(g)["crossings"].dump() == "[[1,3],[2,1],[2,3],[3,1]]");
        CHECK_THROWS_AS(io::graph_from_json(json::parse("{\"crossings\":[[0,1]]}")),
                        std::invalid_argument);
    }

    SECTION("tableaux")
    {
        TranspositionTableau t = TranspositionTableau::from_word(
            Partition({2, 2}), 3, {{3, 5}, {3, 6}, {1, 4}, {2, 6}});
        CHECK(io::tableau_from_json(io::to_json(t)) == t);

        TranspositionTableau partial = t.cleared_last();
        json j = io::to_json(partial);
        CHECK(j["entries"][3].is_null());
        CHECK(io::tableau_from_json(j) == partial);

        json bad = io::to_json(t);
        bad["entries"][0] = nullptr;  // hole before a filled box
        CHECK_THROWS_AS(io::tableau_from_json(bad), std::invalid_argument);

        json wrong_r = io::to_json(t);
        wrong_r["r"] = 1;  // entries no longer satisfy a <= r < b
        CHECK_THROWS_AS(io::tableau_from_json(wrong_r), std::invalid_argument);
    }

    SECTION("polynomials and expansions")
    {
        SchubertPolynomial p = schubert_polynomial(Permutation({1, 4, 3, 2}), 5);
        CHECK(io::polynomial_from_json(io::to_json(p)) == p);

        SchubertExpansion e = lr_oracle(Permutation({1, 4, 3, 2}), Permutation({1, 4, 2, 3}));
        CHECK(io::expansion_from_json(io::to_json(e)) == e);
    }
}

TEST_CASE("trace records serialize")
{
    StepRecord rec{2, 1, StepKind::insertion, {{2, 3}}, {}, "box 1 = (3 5)"};
    json j = io::to_json(rec);
    CHECK(j["step"].dump() == "[2,1]");
    CHECK(j["kind"] == "insertion");
    CHECK(j["added"].dump() == "[[2,3]]");
}

TEST_CASE("ASCII rendering is byte-stable")
{
    Graph r{{1, 2}, {1, 3}, {2, 2}};
    CHECK(render_ascii(r) ==
          "   1 2 3 4\n"
          " 1 . + +\n"
          " 2 . +\n"
          " 3 .\n"
          " 4\n");

    Graph u{{1, 1}, {1, 3}, {1, 4}, {2, 1}, {2, 3}, {2, 4}, {3, 1}};
    CHECK(render_ascii(u) ==
          "   1 2 3 4 5 6\n"
          " 1 + . + + .\n"
          " 2 + . + +\n"
          " 3 + . .\n"
          " 4 . .\n"
          " 5 .\n"
          " 6\n");

    CHECK(render_ascii(Graph{}, 3) ==
          "   1 2 3\n"
          " 1 . .\n"
          " 2 .\n"
          " 3\n");

    // Crossings outside the requested staircase still render.
    CHECK(render_ascii(Graph{{2, 2}}, 3) ==
          "   1 2 3\n"
          " 1 . .\n"
          " 2 . +\n"
          " 3\n");
}

TEST_CASE("rendered figures of the worked examples are stable across runs")
{
    Graph y{{1, 3}, {2, 1}, {2, 3}, {3, 1}};
    std::string once = render_ascii(y);
    std::string twice = render_ascii(y);
    CHECK(once == twice);
    CHECK(once ==
          "   1 2 3 4 5\n"
          " 1 . . + .\n"
          " 2 + . +\n"
          " 3 + .\n"
          " 4 .\n"
          " 5\n");
}
