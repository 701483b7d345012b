#include <catch2/catch_amalgamated.hpp>

#include "rcgraph/lr.hpp"

using namespace rcgraph;

TEST_CASE("chain counting")
{
    SECTION("identity gives the basis coefficient")
    {
        for (int r = 1; r <= 3; ++r)
            for (const Partition& lambda :
                 {Partition({1}), Partition({2}), Partition({2, 1})}) {
                if (lambda.rows() > r)
                    continue;
                CoefficientMap counts = count_chains(Permutation::identity(), lambda, r);
                REQUIRE(counts.size() == 1);
                CHECK(counts.begin()->first == shuffle_from_partition(lambda, r));
                CHECK(counts.begin()->second == 1);
            }
    }

    SECTION("matches the oracle on the square-shape example")
    {
        Permutation w({1, 4, 3, 2});
        Partition lambda({2, 2});
        CoefficientMap counts = count_chains(w, lambda, 3);
        SchubertExpansion oracle = lr_oracle(w, shuffle_from_partition(lambda, 3));
        Permutation u({2, 5, 6, 1, 3, 4});
        CHECK(counts.at(u) == oracle.coeff(u));
        CHECK(counts.at(u) >= 1);
    }

    SECTION("matches the oracle on the hook example")
    {
        Permutation w({1, 2, 4, 6, 3, 5});
        Partition lambda({2, 1});
        CoefficientMap counts = count_chains(w, lambda, 3);
        SchubertExpansion oracle = lr_oracle(w, shuffle_from_partition(lambda, 3));
        Permutation u({1, 4, 7, 2, 3, 5, 6});
        CHECK(counts.at(u) == oracle.coeff(u));
    }
}

TEST_CASE("coefficients through insertion")
{
    SECTION("inserting into the empty graph bijects with RC(v)")
    {
        Partition lambda({2, 1});
        CoefficientMap counts = lr_via_insertion(Permutation::identity(), lambda, 3, 6);
        REQUIRE(counts.size() == 1);
        CHECK(counts.begin()->first == shuffle_from_partition(lambda, 3));
        CHECK(counts.begin()->second == 1);
    }

    SECTION("square-shape example parameters")
    {
        CoefficientMap counts = lr_via_insertion(Permutation({1, 4, 3, 2}), Partition({2, 2}), 3, 9);
        CHECK(counts.at(Permutation({2, 5, 6, 1, 3, 4})) >= 1);
    }

    SECTION("row-shape example parameters")
    {
        CoefficientMap counts = lr_via_insertion(Permutation({1, 2, 5, 4, 6, 3}), Partition({2}), 2, 9);
        CHECK(counts.at(Permutation({1, 5, 4, 2, 6, 3})) >= 1);
    }

    CHECK_THROWS_AS(lr_via_insertion(Permutation({1, 2, 5, 4, 6, 3}), Partition({2, 2}), 3, 9),
                    unsupported_case_error);
}

TEST_CASE("verify_triple agrees for the worked parameters")
{
    CHECK_NOTHROW(verify_triple(Permutation::identity(), Partition({1}), 1, 3));
    VerifyReport a = verify_triple(Permutation({1, 4, 3, 2}), Partition({2, 2}), 3, 9);
    CHECK(!a.entries.empty());
    for (const VerifyEntry& e : a.entries) {
        CHECK(e.chains == e.coefficient);
        CHECK(e.insertion == e.coefficient);
        CHECK(e.oracle == e.coefficient);
    }
    CHECK_NOTHROW(verify_triple(Permutation({1, 2, 5, 4, 6, 3}), Partition({2}), 2, 9));
}

TEST_CASE("hook path counts")
{
    SECTION("single box agrees with the Monk coefficients")
    {
        for (const Permutation& w : all_permutations(3)) {
            auto [count_b, count_a] = hook_path_counts(w, Partition({1}), 2);
            SchubertExpansion monk = lr_oracle(w, shuffle_from_partition(Partition({1}), 2));
            CoefficientMap expected;
            for (const auto& [u, c] : monk.coeffs())
                expected[u] = c;
            CHECK(count_b == expected);
            CHECK(count_a == expected);
        }
    }

    SECTION("both sides agree on the hook example")
    {
        auto [count_b, count_a] =
            hook_path_counts(Permutation({1, 2, 4, 6, 3, 5}), Partition({2, 1}), 3);
        CHECK(count_b == count_a);
        CHECK(count_b.at(Permutation({1, 4, 7, 2, 3, 5, 6})) >= 1);
    }

    SECTION("identity with a row is an indicator")
    {
        for (int p = 1; p <= 3; ++p) {
            auto [count_b, count_a] = hook_path_counts(Permutation::identity(), Partition({p}), 2);
            Permutation v = shuffle_from_partition(Partition({p}), 2);
            REQUIRE(count_b.size() == 1);
            CHECK(count_b.at(v) == 1);
            CHECK(count_a == count_b);
        }
    }

    CHECK_THROWS_AS(hook_path_counts(Permutation::identity(), Partition({2, 2}), 3),
                    std::invalid_argument);
}

TEST_CASE("sweep cases cover the advertised families")
{
    std::vector<SweepCase> semi = semi_shuffle_cases(3, 2);
    CHECK(!semi.empty());
    for (const SweepCase& c : semi) {
        CHECK(is_r_semi_shuffle(c.w, c.r));
        CHECK(shuffle_from_partition(c.lambda, c.r).window() <= 4);
    }

    std::vector<SweepCase> hooks = hook_cases(3, 3, 2);
    CHECK(!hooks.empty());
    for (const SweepCase& c : hooks) {
        CHECK(hook_shape(c.lambda).has_value());
        CHECK(c.lambda.total() <= 3);
    }
}

TEST_CASE("a small sweep passes end to end")
{
    std::vector<SweepCase> cases = semi_shuffle_cases(3, 2);
    SweepOutcome outcome = run_sweep(cases, 2, false, true);
    CHECK(outcome.cases == cases.size());
    CHECK(outcome.round_trips > 0);

    std::vector<SweepCase> hooks = hook_cases(2, 2, 2);
    SweepOutcome hook_outcome = run_sweep(hooks, 1, true, true);
    CHECK(hook_outcome.cases == hooks.size());
}
