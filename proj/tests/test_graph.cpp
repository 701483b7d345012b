#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rcgraph/graph.hpp"

using namespace rcgraph;

namespace {

// Figure-1 graphs of the source material: the full staircase word for n=5 is
// drawn first; the second picture is the subword 2323, the third 4132.
const Graph kSecondGraph{{2, 1}, {3, 1}, {1, 2}, {2, 2}};
const Graph kThirdGraph{{1, 1}, {2, 1}, {2, 2}, {1, 4}};

Graph full_staircase(int n)
{
    std::vector<Place> places;
    for (int i = 1; i < n; ++i)
        for (int j = 1; i + j <= n; ++j)
            places.push_back({i, j});
    return Graph(places);
}

std::vector<Place> staircase_places(int n)
{
    std::vector<Place> places;
    for (int i = 1; i < n; ++i)
        for (int j = n - i; j >= 1; --j)
            places.push_back({i, j});
    return places;
}

}  // namespace

TEST_CASE("graphs are sets of places")
{
    Graph g{{2, 1}, {1, 1}, {2, 1}};
    CHECK(g.size() == 2);
    CHECK(g.contains({1, 1}));
    CHECK_FALSE(g.contains({3, 3}));
    CHECK_THROWS_AS((Graph{{0, 1}}), std::invalid_argument);
    CHECK(unite(g, Graph{{3, 1}}) == Graph{{1, 1}, {2, 1}, {3, 1}});
}

TEST_CASE("word of a graph")
{
    CHECK(word_of_graph(full_staircase(3), 3) == std::vector<int>({2, 1, 2}));
    CHECK(word_of_graph(kThirdGraph, 5) == std::vector<int>({4, 1, 3, 2}));
    CHECK(word_of_graph(Graph{}, 4).empty());
    CHECK_THROWS_AS(word_of_graph(kThirdGraph, 3), std::invalid_argument);
}

TEST_CASE("strand tracing recovers the permutation")
{
    CHECK(permutation_of(kSecondGraph) == Permutation({1, 4, 2, 3}));
    CHECK(permutation_of(Graph{{1, 2}, {1, 3}, {2, 2}}) == Permutation({1, 4, 3, 2}));
    CHECK(permutation_of(Graph{}) == Permutation::identity());
    CHECK(permutation_of(kThirdGraph) == Permutation({2, 5, 1, 3, 4}));
}

TEST_CASE("reducedness")
{
    CHECK_FALSE(is_rcgraph(kSecondGraph));  // strands 3 and 4 intersect twice
    CHECK(is_rcgraph(kThirdGraph));
    CHECK(is_rcgraph(Graph{}));
    CHECK(length(permutation_of(kSecondGraph)) == 2);
    CHECK(kSecondGraph.size() == 4);
}

TEST_CASE("strands passing a place")
{
    CHECK(strands_at(kThirdGraph, {2, 2}) == std::make_pair(2, 4));
    CHECK(strands_at(kThirdGraph, {1, 3}) == std::make_pair(4, 2));

    // Untouched anti-diagonal strands on the empty graph.
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            CHECK(strands_at(Graph{}, {i, j}) == std::make_pair(i + j - 1, i + j));

    CHECK(strands_at(Graph{{2, 2}}, {2, 3}) == std::make_pair(3, 5));
}

TEST_CASE("box plus")
{
    CHECK(box_plus(kSecondGraph, 3, 4) == std::vector<int>{3});
    CHECK(box_plus(kSecondGraph, 4, 3) == std::vector<int>{1});
    CHECK(box_plus(kThirdGraph, 1, 2) == std::vector<int>{});  // never intersect
    CHECK(box_plus(kThirdGraph, 1, 3) == std::vector<int>{1});
    CHECK(box_plus(kThirdGraph, 3, 1) == std::vector<int>{});  // wrong orientation
}

TEST_CASE("row restriction")
{
    Graph r{{1, 3}, {1, 4}, {2, 3}, {3, 3}};
    CHECK(r.rows_at_least(2) == Graph{{2, 3}, {3, 3}});
    CHECK(r.rows_at_least(1) == r);
    CHECK(r.restrict_rows({}) == Graph{});
    CHECK(r.restrict_rows({1, 3}) == Graph{{1, 3}, {1, 4}, {3, 3}});
    CHECK(r.row(2) == Graph{{2, 3}});
}

TEST_CASE("union splits permutations across a row boundary")
{
    Graph above{{1, 1}};
    Graph below{{2, 1}};
    Graph both = unite(above, below);
    CHECK(permutation_of(both) == permutation_of(above) * permutation_of(below));
    CHECK(permutation_of(both) == Permutation({2, 3, 1}));
}

TEST_CASE("adding and removing crossings")
{
    RcGraph empty;
    RcGraph s1 = add_crossing(empty, {1, 1});
    CHECK(s1.graph() == Graph{{1, 1}});
    CHECK(s1.permutation() == Permutation::simple(1));

    RcGraph r20(Graph{{2, 2}});
    RcGraph r21 = add_crossing(r20, {2, 3});
    CHECK(r21.graph() == Graph{{2, 2}, {2, 3}});

    CHECK_THROWS_AS(add_crossing(r21, {2, 2}), std::invalid_argument);

    auto [back, place] = remove_crossing_of(s1, 1, 2);
    CHECK(back == empty);
    CHECK(place == Place{1, 1});
    CHECK_THROWS_AS(remove_crossing_of(s1, 1, 3), std::invalid_argument);
}

TEST_CASE("chain removals of the worked package")
{
    // S_4 = rows 1 and 2 of columns 1..3; removing the crossings of
    // (15), (25), (23), (14) walks down to S_0.
    RcGraph s4(Graph{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}});
    CHECK(s4.permutation() == Permutation({4, 5, 1, 2, 3}));

    auto [s3, p4] = remove_crossing_of(s4, 1, 5);
    CHECK(p4 == Place{1, 3});
    auto [s2, p3] = remove_crossing_of(s3, 2, 5);
    CHECK(p3 == Place{2, 3});
    auto [s1, p2] = remove_crossing_of(s2, 2, 3);
    CHECK(p2 == Place{2, 1});
    auto [s0, p1] = remove_crossing_of(s1, 1, 4);
    CHECK(p1 == Place{1, 2});
    CHECK(s0.graph() == Graph{{1, 1}, {2, 2}});
}

TEST_CASE("exponents")
{
    CHECK(exponent(Graph{{1, 2}, {1, 3}, {2, 2}}) == std::vector<int>({2, 1}));
    CHECK(exponent(Graph{{1, 3}, {2, 1}, {2, 3}, {3, 1}}) == std::vector<int>({1, 2, 1}));
    CHECK(exponent(Graph{}).empty());
}

TEST_CASE("random subwords: permutation and reducedness criteria agree")
{
    std::mt19937 rng(20240817);
    const std::vector<Place> places = staircase_places(5);
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<Place> chosen;
        for (const Place& p : places)
            if (rng() & 1)
                chosen.push_back(p);
        Graph g(chosen);

        // Strand tracing equals the reading-order product of simple
        // reflections.
        Permutation by_word;
        for (int k : word_of_graph(g, 5))
            by_word = by_word * Permutation::simple(k);
        CHECK(permutation_of(g) == by_word);

        // |R| = l(w(R)) exactly when no two strands intersect twice.
        CHECK(is_rcgraph(g) == !detail::has_double_crossing(g));
    }
}

TEST_CASE("add and remove are mutually inverse where defined")
{
    RcGraph r(Graph{{1, 2}, {1, 3}, {2, 2}});
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            Place p{i, j};
            if (r.graph().contains(p))
                continue;
            auto [c, d] = strands_at(r.graph(), p);
            RcGraph grown;
            try {
                grown = add_crossing(r, p);
            } catch (const std::invalid_argument&) {
                continue;  // strands already cross
            }
            CHECK(grown.permutation() ==
                  r.permutation().times_transposition(std::min(c, d), std::max(c, d)));
            auto [back, place] = remove_crossing_of(grown, c, d);
            CHECK(back == r);
            CHECK(place == p);
        }
}
