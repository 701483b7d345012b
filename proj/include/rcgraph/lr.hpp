#ifndef RCGRAPH_LR_HPP
#define RCGRAPH_LR_HPP

#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "rcgraph/errors.hpp"
#include "rcgraph/graph.hpp"
#include "rcgraph/insertion.hpp"
#include "rcgraph/inverse.hpp"
#include "rcgraph/permutation.hpp"
#include "rcgraph/schubert.hpp"
#include "rcgraph/tableau.hpp"

namespace rcgraph {

using CoefficientMap = std::map<Permutation, long long>;

namespace detail {

inline void require_supported(const Permutation& w, const Partition& lambda, int r)
{
    if (r <= 0)
        throw std::invalid_argument("r must be positive");
    if (!lambda.empty() && !is_r_semi_shuffle(w, r) && !hook_shape(lambda))
        throw unsupported_case_error(
            "unsupported case: w is not an r-semi-shuffle and lambda is not a hook");
}

inline std::string perm_string(const Permutation& w)
{
    std::ostringstream os;
    os << "(";
    for (int i = 1; i <= std::max(w.window(), 1); ++i)
        os << (i > 1 ? "," : "") << w(i);
    os << ")";
    return os.str();
}

inline std::string partition_string(const Partition& p)
{
    std::ostringstream os;
    os << "(";
    for (int j = 1; j <= p.rows(); ++j)
        os << (j > 1 ? "," : "") << p.part(j);
    os << ")";
    return os.str();
}

}  // namespace detail

// Number of fully filled tableaux of transpositions T of shape lambda such
// that T is an r-Bruhat chain of w, E(w,T) is row and column strict, and
// w w(T) = u, keyed by u. Depth-first fill in box order, pruning by the
// covering test and by strictness against the already filled neighbours.
inline CoefficientMap count_chains(const Permutation& w, const Partition& lambda, int r)
{
    detail::require_supported(w, lambda, r);
    const BoxOrder order(lambda);
    const int m = order.size();
    const int b_max = std::max(w.window(), r) + lambda.total();

    CoefficientMap out;
    std::vector<int> e_entries(m, 0);

    auto strict_ok = [&](int i, int value) {
        if (auto left = order.left(i); left && *left <= i - 1)
            if (e_entries[*left - 1] >= value)
                return false;
        if (auto below = order.below(i); below && *below <= i - 1)
            if (e_entries[*below - 1] <= value)
                return false;
        return true;
    };

    auto rec = [&](auto&& self, int i, const Permutation& cur) -> void {
        if (i > m) {
            ++out[cur];
            return;
        }
        for (int a = 1; a <= r; ++a)
            for (int b = r + 1; b <= b_max; ++b) {
                if (!is_covering(cur, a, b))
                    continue;
                Permutation next = cur.times_transposition(a, b);
                int value = next(b);
                if (!strict_ok(i, value))
                    continue;
                e_entries[i - 1] = value;
                self(self, i + 1, next);
            }
    };
    rec(rec, 1, w);
    return out;
}

// Coefficients through the insertion bijection: insert every pair
// (R, Y) in RC(w) x RC(v(lambda,r)) and histogram by the resulting rc-graph.
// For each u the fibre over every U in RC(u) has the same size, which is the
// coefficient.
inline CoefficientMap lr_via_insertion(const Permutation& w, const Partition& lambda, int r, int n)
{
    detail::require_supported(w, lambda, r);
    const Permutation v = shuffle_from_partition(lambda, r);
    if (w.window() > n || v.window() > n)
        throw std::invalid_argument("ambient n too small for the inputs");

    std::map<Permutation, std::map<Graph, long long>> fibres;
    for (const RcGraph& rg : enumerate_rcgraphs(w, n))
        for (const RcGraph& y : enumerate_rcgraphs(v, n)) {
            InsertionResult res = insert(rg, y, r);
            detail::invariant(exponent(res.graph.graph()) ==
                                  add_exponents(exponent(rg.graph()), exponent(y.graph())),
                              "x^U = x^R x^Y must hold for every insertion");
            fibres[res.graph.permutation()][res.graph.graph()] += 1;
        }

    CoefficientMap out;
    for (const auto& [u, by_graph] : fibres) {
        const long long fibre = by_graph.begin()->second;
        for (const auto& [g, count] : by_graph)
            detail::invariant(count == fibre,
                              "insertion fibre sizes must not depend on the representative U");
        detail::invariant(static_cast<long long>(by_graph.size()) ==
                              static_cast<long long>(enumerate_rcgraphs(u, n).size()),
                          "insertion must reach every rc-graph of u");
        out[u] = fibre;
    }
    return out;
}

// Chain counts of the Pieri-type rule: r-Bruhat paths of length |lambda|
// from w whose watched values strictly decrease through the column of the
// hook and then strictly increase, keyed by endpoint. Returned for both the
// b-side and the a-side conditions.
inline std::pair<CoefficientMap, CoefficientMap> hook_path_counts(const Permutation& w,
                                                                  const Partition& lambda, int r)
{
    auto hook = hook_shape(lambda);
    if (!hook)
        throw std::invalid_argument("hook_path_counts requires a hook shape");
    if (r <= 0)
        throw std::invalid_argument("r must be positive");
    const int m = lambda.total();
    const int b_max = std::max(w.window(), r) + m;
    // Turning point of the watched sequence: the strict decrease runs through
    // the column of the hook (q boxes) on both sides.
    const int turn_b = hook->second;
    const int turn_a = hook->second;

    CoefficientMap count_b, count_a;
    std::vector<int> bs(m, 0), as(m, 0);

    auto pattern_ok = [m](const std::vector<int>& xs, int i, int turn) {
        if (i == 1)
            return true;
        (void)m;
        if (i <= turn)
            return xs[i - 2] > xs[i - 1];
        return xs[i - 2] < xs[i - 1];
    };

    auto rec = [&](auto&& self, int i, const Permutation& cur, bool ok_b, bool ok_a) -> void {
        if (i > m) {
            if (ok_b)
                ++count_b[cur];
            if (ok_a)
                ++count_a[cur];
            return;
        }
        for (int a = 1; a <= r; ++a)
            for (int b = r + 1; b <= b_max; ++b) {
                if (!is_covering(cur, a, b))
                    continue;
                Permutation next = cur.times_transposition(a, b);
                bs[i - 1] = next(b);
                as[i - 1] = next(a);
                bool nb = ok_b && pattern_ok(bs, i, turn_b);
                bool na = ok_a && pattern_ok(as, i, turn_a);
                if (nb || na)
                    self(self, i + 1, next, nb, na);
            }
    };
    rec(rec, 1, w, true, true);
    return {count_b, count_a};
}

struct VerifyEntry {
    Permutation u;
    long long coefficient = 0;
    long long chains = 0;
    long long insertion = 0;
    long long oracle = 0;
};

struct VerifyReport {
    Permutation w;
    Partition lambda;
    int r = 0;
    int n = 0;
    std::vector<VerifyEntry> entries;
};

// Ambient size for the sweeps, asserted sufficient by the n/n+1 stability
// check inside the oracle.
inline int sweep_ambient(const Permutation& w, const Partition& lambda, int r)
{
    Permutation v = shuffle_from_partition(lambda, r);
    return std::max({w.window(), v.window(), 1}) + lambda.total() + 1;
}

// Cross-checks the three computations of c^u_{w v(lambda,r)}: chain counting,
// the insertion bijection, and the polynomial oracle. Any mismatch throws
// with a counterexample dump.
inline VerifyReport verify_triple(const Permutation& w, const Partition& lambda, int r, int n,
                                  SchubertCache& cache)
{
    detail::require_supported(w, lambda, r);
    const Permutation v = shuffle_from_partition(lambda, r);

    CoefficientMap chains = count_chains(w, lambda, r);
    CoefficientMap by_insertion = lr_via_insertion(w, lambda, r, n);
    const SchubertExpansion expansion = lr_oracle(w, v, cache);
    CoefficientMap oracle;
    for (const auto& [u, c] : expansion.coeffs())
        oracle[u] = c;

    if (chains != oracle || by_insertion != oracle) {
        std::ostringstream os;
        os << "LR coefficient mismatch for w=" << detail::perm_string(w)
           << " lambda=" << detail::partition_string(lambda) << " r=" << r << "\n";
        auto dump = [&os](const char* name, const CoefficientMap& map) {
            os << "  " << name << ":";
            for (const auto& [u, c] : map)
                os << " " << detail::perm_string(u) << "->" << c;
            os << "\n";
        };
        dump("oracle", oracle);
        dump("chains", chains);
        dump("insertion", by_insertion);
        throw invariant_error(os.str());
    }

    VerifyReport report{w, lambda, r, n, {}};
    for (const auto& [u, c] : oracle)
        report.entries.push_back({u, c, chains[u], by_insertion[u], c});
    return report;
}

inline VerifyReport verify_triple(const Permutation& w, const Partition& lambda, int r, int n)
{
    SchubertCache cache;
    return verify_triple(w, lambda, r, n, cache);
}

// All partitions lambda with v(lambda, r) in S_n: at most r parts, each at
// most n - r. Includes the empty partition.
inline std::vector<Partition> partitions_in_box(int r, int max_part)
{
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int row, int bound) -> void {
        out.push_back(Partition(parts));
        if (row > r)
            return;
        for (int p = bound; p >= 1; --p) {
            parts.push_back(p);
            self(self, row + 1, p);
            parts.pop_back();
        }
    };
    rec(rec, 1, max_part);
    return out;
}

inline std::vector<Partition> hooks_up_to(int max_boxes)
{
    std::vector<Partition> out;
    for (int p = 1; p <= max_boxes; ++p)
        for (int q = 1; p + q - 1 <= max_boxes; ++q) {
            std::vector<int> parts{p};
            parts.insert(parts.end(), q - 1, 1);
            out.push_back(Partition(parts));
        }
    return out;
}

struct SweepCase {
    Permutation w;
    Partition lambda;
    int r = 0;
};

// Criterion sweep over case (semi-shuffle): all r <= max_r, all
// r-semi-shuffles w in S_{max_perm}, all lambda with v(lambda,r) in
// S_{max_perm + 1}.
inline std::vector<SweepCase> semi_shuffle_cases(int max_perm, int max_r = 3)
{
    std::vector<SweepCase> out;
    const std::vector<Permutation> perms = all_permutations(max_perm);
    for (int r = 1; r <= max_r; ++r) {
        if (max_perm + 1 - r < 0)
            continue;
        const std::vector<Partition> lambdas = partitions_in_box(r, max_perm + 1 - r);
        for (const Permutation& w : perms) {
            if (!is_r_semi_shuffle(w, r))
                continue;
            for (const Partition& lambda : lambdas)
                out.push_back({w, lambda, r});
        }
    }
    return out;
}

// Criterion sweep over case (hook): all w in S_{max_perm}, all hooks with at
// most max_boxes boxes, all r <= max_r.
inline std::vector<SweepCase> hook_cases(int max_perm, int max_boxes, int max_r = 3)
{
    std::vector<SweepCase> out;
    const std::vector<Permutation> perms = all_permutations(max_perm);
    for (int r = 1; r <= max_r; ++r)
        for (const Permutation& w : perms)
            for (const Partition& lambda : hooks_up_to(max_boxes)) {
                if (lambda.rows() > r)
                    continue;
                out.push_back({w, lambda, r});
            }
    return out;
}

namespace detail {

// Round trip A: inverse(insert(R, Y)) = (R, Y) over the full sweep of pairs.
// Round trip B: insert(inverse(U, T)) = (U, T) for every valid (w, U, T).
inline std::size_t round_trip_case(const SweepCase& c, int n)
{
    std::size_t checked = 0;
    const Permutation v = shuffle_from_partition(c.lambda, c.r);
    const std::vector<RcGraph> rs = enumerate_rcgraphs(c.w, n);
    const std::vector<RcGraph> ys = enumerate_rcgraphs(v, n);
    for (const RcGraph& rg : rs)
        for (const RcGraph& y : ys) {
            InsertionResult fwd = insert(rg, y, c.r);
            InverseResult back = inverse_insert(fwd.graph, fwd.tableau, c.w, c.r);
            invariant(back.r_graph == rg && back.y == y,
                      "inverse(insert(R, Y)) must return (R, Y) for w=" + perm_string(c.w) +
                          " lambda=" + partition_string(c.lambda) + " r=" + std::to_string(c.r));
            ++checked;
        }

    // Every valid (w, U, T): chains T with E strict, U in RC(w w(T)).
    const BoxOrder order(c.lambda);
    const int m = order.size();
    const int b_max = std::max(c.w.window(), c.r) + c.lambda.total();
    std::vector<Transposition> word;
    std::vector<int> e_entries(m, 0);

    auto strict_ok = [&](int i, int value) {
        if (auto left = order.left(i); left && *left <= i - 1)
            if (e_entries[*left - 1] >= value)
                return false;
        if (auto below = order.below(i); below && *below <= i - 1)
            if (e_entries[*below - 1] <= value)
                return false;
        return true;
    };

    auto rec = [&](auto&& self, int i, const Permutation& cur) -> void {
        if (i > m) {
            TranspositionTableau t = TranspositionTableau::from_word(c.lambda, c.r, word);
            for (const RcGraph& u : enumerate_rcgraphs(cur, n)) {
                InverseResult back = inverse_insert(u, t, c.w, c.r);
                InsertionResult fwd = insert(back.r_graph, back.y, c.r);
                invariant(fwd.graph == u && fwd.tableau == t,
                          "insert(inverse(U, T)) must return (U, T) for w=" + perm_string(c.w) +
                              " lambda=" + partition_string(c.lambda) +
                              " r=" + std::to_string(c.r));
            }
            return;
        }
        for (int a = 1; a <= c.r; ++a)
            for (int b = c.r + 1; b <= b_max; ++b) {
                if (!is_covering(cur, a, b))
                    continue;
                Permutation nextp = cur.times_transposition(a, b);
                int value = nextp(b);
                if (!strict_ok(i, value))
                    continue;
                e_entries[i - 1] = value;
                word.push_back({a, b});
                self(self, i + 1, nextp);
                word.pop_back();
            }
    };
    rec(rec, 1, c.w);
    return checked;
}

}  // namespace detail

struct SweepOutcome {
    std::size_t cases = 0;
    long long coefficient_sum = 0;  // over all (case, u)
    std::size_t round_trips = 0;
};

// Runs verify_triple on every case, plus (optionally) the hook path counts
// and full round-trip checks of the inverse algorithm. Cases fan out to a
// small worker pool; each worker keeps its own polynomial cache.
inline SweepOutcome run_sweep(const std::vector<SweepCase>& cases, int jobs, bool hook_paths,
                              bool round_trips)
{
    if (jobs < 1)
        jobs = 1;
    std::atomic<std::size_t> next{0};
    std::mutex mutex;
    SweepOutcome total;
    std::vector<std::string> failures;

    auto worker = [&]() {
        SchubertCache cache;
        SweepOutcome local;
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= cases.size())
                break;
            const SweepCase& c = cases[k];
            try {
                const int n = sweep_ambient(c.w, c.lambda, c.r);
                VerifyReport report = verify_triple(c.w, c.lambda, c.r, n, cache);
                ++local.cases;
                for (const VerifyEntry& e : report.entries)
                    local.coefficient_sum += e.coefficient;

                if (hook_paths && hook_shape(c.lambda)) {
                    auto [count_b, count_a] = hook_path_counts(c.w, c.lambda, c.r);
                    CoefficientMap expected;
                    for (const VerifyEntry& e : report.entries)
                        expected[e.u] = e.coefficient;
                    detail::invariant(count_b == expected && count_a == expected,
                                      "hook path counts disagree with the coefficients for w=" +
                                          detail::perm_string(c.w) + " lambda=" +
                                          detail::partition_string(c.lambda) +
                                          " r=" + std::to_string(c.r));
                }

                if (round_trips)
                    local.round_trips += detail::round_trip_case(c, n);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(mutex);
                failures.push_back(e.what());
                return;
            }
        }
        std::lock_guard<std::mutex> lock(mutex);
        total.cases += local.cases;
        total.coefficient_sum += local.coefficient_sum;
        total.round_trips += local.round_trips;
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
    }
    if (!failures.empty())
        throw invariant_error(failures.front());
    return total;
}

}  // namespace rcgraph

#endif
