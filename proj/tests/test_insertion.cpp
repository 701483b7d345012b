#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "rcgraph/insertion.hpp"

using namespace rcgraph;

namespace {

// Worked examples; rc-graphs as crossing sets read off the figures.
const Graph kExample1R{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}};

const Graph kExample2R{{1, 2}, {1, 3}, {2, 2}};
const Graph kExample2Y{{1, 3}, {2, 1}, {2, 3}, {3, 1}};
const Graph kExample2U{{1, 1}, {1, 3}, {1, 4}, {2, 1}, {2, 3}, {2, 4}, {3, 1}};

const Graph kExample3R{{1, 3}, {3, 2}, {3, 3}};
const Graph kExample3Y{{3, 1}, {1, 2}, {1, 4}};
const Graph kExample3U{{1, 2}, {1, 3}, {1, 6}, {3, 1}, {3, 2}, {3, 3}};

const Graph kExample4R{{1, 3}, {1, 4}, {2, 3}, {3, 3}};
const Graph kExample4Y{{2, 1}, {2, 2}};
const Graph kExample4U{{1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 3}};

std::vector<Transposition> tableau_word(const TranspositionTableau& t)
{
    return t.word();
}

std::map<std::pair<int, int>, StepKind> kinds_of(const InsertionTrace& trace)
{
    std::map<std::pair<int, int>, StepKind> out;
    for (const StepRecord& rec : trace.steps)
        out[{rec.row, rec.index}] = rec.kind;
    return out;
}

Graph replay(const Graph& start, const InsertionTrace& trace)
{
    Graph g = start;
    for (const StepRecord& rec : trace.steps) {
        for (const Place& p : rec.removed)
            g = g.without(p);
        for (const Place& p : rec.added)
            g = g.with(p);
    }
    return g;
}

}  // namespace

TEST_CASE("shuffle words")
{
    CHECK(shuffle_word(RcGraph(kExample2Y), 3).rows() == std::vector<int>({2, 1, 3, 2}));
    CHECK(shuffle_word(RcGraph(kExample3Y), 3).rows() == std::vector<int>({1, 3, 1}));
    CHECK(shuffle_word(RcGraph(kExample4Y), 2).rows() == std::vector<int>({2, 2}));
    CHECK(shuffle_word(RcGraph(), 3).rows().empty());
    CHECK_THROWS_AS(shuffle_word(RcGraph(Graph{{1, 1}, {2, 1}}), 1), std::invalid_argument);
}

TEST_CASE("restricted words and their links")
{
    ShuffleWord word = shuffle_word(RcGraph(kExample2Y), 3);

    auto at2 = restricted_word(word, 2);
    REQUIRE(at2.size() == 3);
    CHECK(at2[0].letter.row == 2);
    CHECK(at2[0].i_plus == 0);
    CHECK(at2[1].letter.row == 3);
    CHECK(at2[1].i_plus == 1);
    CHECK(at2[2].letter.row == 2);
    CHECK(at2[2].i_plus == 0);

    auto at3 = restricted_word(word, 3);
    REQUIRE(at3.size() == 1);
    CHECK(at3[0].letter.row == 3);

    auto at1 = restricted_word(word, 1);
    REQUIRE(at1.size() == 4);
    CHECK(at1[0].i_plus == 1);  // the (2,1) crossing is letter 1 one row up
    CHECK(at1[2].i_plus == 2);
    CHECK(at1[3].i_plus == 3);
}

TEST_CASE("the S_j chain of the worked package")
{
    Permutation w({2, 1, 4, 3});
    TranspositionTableau t = TranspositionTableau::from_word(Partition({2, 2}), 2,
                                                             {{1, 4}, {2, 3}, {2, 5}, {1, 5}});
    RcGraph r(kExample1R);
    SChain chain = s_chain(w, r, t);

    REQUIRE(chain.graphs.size() == 5);
    CHECK(chain.removed[3] == Place{1, 3});
    CHECK(chain.removed[2] == Place{2, 3});
    CHECK(chain.removed[1] == Place{2, 1});
    CHECK(chain.removed[0] == Place{1, 2});
    CHECK(chain.graphs[0].graph() == Graph{{1, 1}, {2, 2}});
    for (std::size_t j = 0; j < chain.graphs.size(); ++j)
        CHECK(chain.graphs[j].size() == static_cast<int>(length(w) + j));

    SECTION("empty tableau gives the one-element chain")
    {
        SChain trivial = s_chain(r.permutation(), r, TranspositionTableau(Partition{}, 2));
        CHECK(trivial.graphs.size() == 1);
        CHECK(trivial.graphs[0] == r);
    }
}

TEST_CASE("allowed places")
{
    // After the first row-2 insertion of the square example the rightmost
    // allowed place sits in column 3 with strands 3 and 5.
    std::vector<AllowedPlace> a = allowed_places_forward(RcGraph(Graph{{2, 2}}), 2, 3);
    REQUIRE_FALSE(a.empty());
    CHECK(a.back().col == 3);
    CHECK(a.back().west == 3);
    CHECK(a.back().south == 5);

    std::vector<AllowedPlace> b = allowed_places_forward(RcGraph(), 1, 1);
    REQUIRE(b.size() == 1);
    CHECK(b[0].col == 1);
    CHECK(b[0].west == 1);
    CHECK(b[0].south == 2);
}

TEST_CASE("square-shape example runs step by step")
{
    InsertionResult res = insert(RcGraph(kExample2R), RcGraph(kExample2Y), 3);

    CHECK(res.graph.graph() == kExample2U);
    CHECK(tableau_word(res.tableau) ==
          std::vector<Transposition>({{3, 5}, {3, 6}, {1, 4}, {2, 6}}));

    auto kinds = kinds_of(res.trace);
    CHECK(kinds.at({3, 1}) == StepKind::insertion);
    CHECK(kinds.at({2, 1}) == StepKind::insertion);
    CHECK(kinds.at({2, 2}) == StepKind::rectification);
    CHECK(kinds.at({2, 3}) == StepKind::insertion);
    CHECK(kinds.at({1, 1}) == StepKind::rectification);
    CHECK(kinds.at({1, 2}) == StepKind::insertion);
    CHECK(kinds.at({1, 3}) == StepKind::rectification);
    CHECK(kinds.at({1, 4}) == StepKind::rectification);
    CHECK(kinds.at({3, 0}) == StepKind::row_to_row);
    CHECK(kinds.at({2, 0}) == StepKind::row_to_row);
    CHECK(kinds.at({1, 0}) == StepKind::row_to_row);

    // Intermediate rc-graphs, straight off the figures.
    std::map<std::pair<int, int>, Graph> seen;
    Graph cur = kExample2R.rows_at_least(3);
    for (const StepRecord& rec : res.trace.steps) {
        for (const Place& p : rec.removed)
            cur = cur.without(p);
        for (const Place& p : rec.added)
            cur = cur.with(p);
        seen[{rec.row, rec.index}] = cur;
    }
    CHECK(seen.at({3, 1}) == Graph{{3, 1}});
    CHECK(seen.at({2, 0}) == Graph{{2, 2}});
    CHECK(seen.at({2, 1}) == Graph{{2, 2}, {2, 3}});
    CHECK(seen.at({2, 2}) == Graph{{2, 1}, {2, 3}, {3, 1}});
    CHECK(seen.at({2, 3}) == Graph{{2, 1}, {2, 3}, {2, 4}, {3, 1}});
    CHECK(seen.at({1, 0}) == Graph{{1, 2}, {1, 3}, {3, 1}});
    CHECK(seen.at({1, 1}) == Graph{{1, 2}, {1, 3}, {2, 3}, {3, 1}});
    CHECK(seen.at({1, 2}) == Graph{{1, 2}, {1, 3}, {1, 5}, {2, 3}, {3, 1}});
    CHECK(seen.at({1, 3}) == Graph{{1, 1}, {1, 3}, {1, 5}, {2, 1}, {2, 3}, {3, 1}});
    CHECK(seen.at({1, 4}) == kExample2U);
}

TEST_CASE("hook-shape example with the second removal pattern")
{
    InsertionResult res = insert(RcGraph(kExample3R), RcGraph(kExample3Y), 3);

    CHECK(res.graph.graph() == kExample3U);
    CHECK(tableau_word(res.tableau) ==
          std::vector<Transposition>({{3, 4}, {2, 4}, {3, 7}}));

    auto kinds = kinds_of(res.trace);
    CHECK(kinds.at({3, 1}) == StepKind::insertion);
    CHECK(kinds.at({2, 1}) == StepKind::rectification);
    CHECK(kinds.at({1, 1}) == StepKind::insertion);
    CHECK(kinds.at({1, 2}) == StepKind::rectification);
    CHECK(kinds.at({1, 3}) == StepKind::insertion);

    int pattern_b = 0;
    for (const StepRecord& rec : res.trace.steps)
        if (rec.removal_used_previous_box) {
            ++pattern_b;
            CHECK(rec.row == 1);
            CHECK(rec.index == 2);
        }
    CHECK(pattern_b == 1);
}

TEST_CASE("row-shape example with the second insertion pattern")
{
    InsertionResult res = insert(RcGraph(kExample4R), RcGraph(kExample4Y), 2);

    CHECK(res.graph.graph() == kExample4U);
    CHECK(tableau_word(res.tableau) == std::vector<Transposition>({{2, 4}, {2, 3}}));

    auto kinds = kinds_of(res.trace);
    CHECK(kinds.at({2, 1}) == StepKind::insertion);
    CHECK(kinds.at({2, 2}) == StepKind::insertion);
    CHECK(kinds.at({1, 1}) == StepKind::rectification);
    CHECK(kinds.at({1, 2}) == StepKind::rectification);

    int continuation = 0;
    for (const StepRecord& rec : res.trace.steps)
        if (rec.insertion_used_previous_box) {
            ++continuation;
            CHECK(rec.row == 1);
            CHECK(rec.index == 2);
        }
    CHECK(continuation == 1);
}

TEST_CASE("inserting the empty shuffle is the identity")
{
    RcGraph r(kExample2R);
    InsertionResult res = insert(r, RcGraph(), 3);
    CHECK(res.graph == r);
    CHECK(res.tableau.box_count() == 0);
}

TEST_CASE("unsupported cases are refused")
{
    // w has a descent above r and the shape is not a hook.
    RcGraph r(kExample4R);  // w = (1,2,5,4,6,3), descents at 3 and 5
    RcGraph y(kExample2Y);  // v((2,2),3)
    CHECK_THROWS_AS(insert(r, y, 3), unsupported_case_error);
    // Y not an r-shuffle for this r.
    CHECK_THROWS_AS(insert(RcGraph(kExample2R), y, 2), unsupported_case_error);
}

TEST_CASE("monomial conservation and the package conditions hold on the outputs")
{
    for (const Graph* rg : {&kExample2R, &kExample3R, &kExample4R}) {
        const Graph* yg = rg == &kExample2R ? &kExample2Y : rg == &kExample3R ? &kExample3Y
                                                                              : &kExample4Y;
        int r = rg == &kExample4R ? 2 : 3;
        RcGraph R(*rg), Y(*yg);
        InsertionResult res = insert(R, Y, r);
        CHECK(exponent(res.graph.graph()) ==
              add_exponents(exponent(*rg), exponent(*yg)));
        CHECK(is_r_bruhat_package(R.permutation(), res.graph, res.tableau));
        CHECK(is_row_and_column_strict(E_tableau(R.permutation(), res.tableau)));
        CHECK(length(res.graph.permutation()) ==
              length(R.permutation()) + partition_of_shuffle(Y.permutation(), r).total());
    }
}

TEST_CASE("traces replay and are deterministic")
{
    RcGraph r(kExample2R), y(kExample2Y);
    InsertionResult once = insert(r, y, 3);
    InsertionResult twice = insert(r, y, 3);

    CHECK(once.graph == twice.graph);
    CHECK(once.tableau == twice.tableau);
    REQUIRE(once.trace.steps.size() == twice.trace.steps.size());
    for (std::size_t k = 0; k < once.trace.steps.size(); ++k) {
        CHECK(once.trace.steps[k].added == twice.trace.steps[k].added);
        CHECK(once.trace.steps[k].removed == twice.trace.steps[k].removed);
        CHECK(once.trace.steps[k].kind == twice.trace.steps[k].kind);
    }

    CHECK(replay(kExample2R.rows_at_least(3), once.trace) == once.graph.graph());
}
