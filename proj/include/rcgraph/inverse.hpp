#ifndef RCGRAPH_INVERSE_HPP
#define RCGRAPH_INVERSE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcgraph/errors.hpp"
#include "rcgraph/graph.hpp"
#include "rcgraph/insertion.hpp"
#include "rcgraph/permutation.hpp"
#include "rcgraph/schubert.hpp"
#include "rcgraph/tableau.hpp"

namespace rcgraph {

// The unique Y in RC(v(lambda, r)) whose shuffle word has the given rows.
// Reference implementation: search the enumeration of RC(v(lambda, r)).
inline RcGraph rcgraph_from_word(const std::vector<int>& rows, const Partition& lambda, int r)
{
    Permutation v = shuffle_from_partition(lambda, r);
    std::optional<RcGraph> found;
    for (const RcGraph& y : enumerate_rcgraphs(v, std::max(1, v.window()))) {
        if (shuffle_word(y, r).rows() == rows) {
            detail::invariant(!found, "two rc-graphs of the shuffle share a word");
            found = y;
        }
    }
    detail::invariant(found.has_value(), "no rc-graph of the shuffle realizes this word");
    return *found;
}

struct InverseResult {
    RcGraph r_graph;  // U -> T
    RcGraph y;        // Y(U,T)
    InsertionTrace trace;
};

namespace detail {

struct InverseRow {
    int ell = 0;
    Permutation base;  // w(R_{>=ell}) = w(R(ell,i)) w_i(T(ell,i))^{-1}
    RcGraph cur;       // R(ell, i)
    TranspositionTableau tableau{Partition{}, 0};
};

inline void check_inverse_conditions(const InverseRow& row)
{
    invariant(is_row_and_column_strict(E_tableau(row.base, row.tableau)),
              "E(w(R_>=ell), T) must stay row and column strict");
    invariant(is_r_bruhat_package(row.base, row.cur, row.tableau),
              "(w(R_>=ell), R, T) must stay an r-Bruhat package");
}

// Largest column of a place in the working row whose south strand can still
// be at most r: such a strand exits in a column at least as far right.
inline int inverse_scan_bound(const Graph& g, int r)
{
    Permutation w = permutation_of(g);
    int bound = 0;
    for (int s = 1; s <= r; ++s)
        bound = std::max(bound, w(s));
    return bound;
}

// The transposition t with after = before * t, where both permutations
// describe the part of the graph below the working row.
inline Transposition below_row_transposition(const Permutation& before, const Permutation& after, int r)
{
    Permutation t = before.inverse() * after;
    std::vector<int> moved;
    for (int i = 1; i <= t.window(); ++i)
        if (t(i) != i)
            moved.push_back(i);
    invariant(moved.size() == 2 && t(moved[0]) == moved[1],
              "below-row part must change by exactly one transposition");
    invariant(moved[0] <= r && r < moved[1], "below-row transposition must satisfy a <= r < b");
    return {moved[0], moved[1]};
}

struct InverseStepOutcome {
    // Set for inverse rectifications: the transposition by which the part
    // below the working row shrank, feeding the entries of T(ell+1).
    std::optional<Transposition> below;
};

// Undoes step (ell, i), turning R(ell,i), T(ell,i) into R(ell,i-1), T(ell,i-1).
inline InverseStepOutcome inverse_step(InverseRow& row, int i, int r, InsertionTrace& trace)
{
    const Transposition cd = *row.tableau.entry(i);
    const Permutation below_before = permutation_of(row.cur.graph().rows_at_least(row.ell + 1));

    Wiring wiring(row.cur.graph());
    const std::vector<Place> hits = wiring.crossings_of(cd.a, cd.b);
    invariant(hits.size() == 1, "the strands of box i must cross exactly once");
    const Place pl = hits[0];
    invariant(pl.row >= row.ell, "crossing above the working row");

    auto finish_rectification = [&]() {
        const Permutation below_after = permutation_of(row.cur.graph().rows_at_least(row.ell + 1));
        return InverseStepOutcome{below_row_transposition(below_after, below_before, r)};
    };

    Graph rpp;
    TranspositionTableau tpp{Partition{}, 0};
    Place first_removed{};
    std::string note;

    if (pl.row != row.ell) {
        // The crossing lives below the working row. Unless the continuation
        // pattern applies, removing it undoes an accepted import.
        std::optional<Place> special;
        if (i >= 2) {
            const Transposition ef = *row.tableau.entry(i - 1);
            if (ef.a == cd.a)
                for (const Place& p : wiring.crossings_of(ef.b, cd.b))
                    if (p.row == row.ell)
                        special = p;
        }
        if (!special) {
            row.cur = RcGraph(row.cur.graph().without(pl));
            row.tableau = row.tableau.cleared_last();
            trace.steps.push_back({row.ell, i, StepKind::inverse_rectification, {}, {pl},
                                   "undo accepted import of " + entry_string(cd)});
            return finish_rectification();
        }
        first_removed = *special;
        rpp = row.cur.graph().without(first_removed);
        tpp = row.tableau.cleared_last().with_entry(i - 1, cd);
        note = "continuation; box " + std::to_string(i - 1) + " = " + entry_string(cd);
    } else {
        first_removed = pl;
        rpp = row.cur.graph().without(first_removed);
        tpp = row.tableau.cleared_last();

        // Classification: if no place right of the removal has its south
        // strand at most r and its west strand above r, this undoes a plain
        // insertion.
        const int bound = inverse_scan_bound(rpp, r);
        Wiring w2(rpp, row.ell + std::max(bound, first_removed.col));
        bool rectification = false;
        for (int j = first_removed.col + 1; j <= bound && !rectification; ++j) {
            Place p{row.ell, j};
            if (rpp.contains(p))
                continue;
            if (w2.south_strand(p) <= r && w2.west_strand(p) > r)
                rectification = true;
        }
        if (!rectification) {
            row.cur = RcGraph(rpp);
            row.tableau = tpp;
            trace.steps.push_back({row.ell, i, StepKind::inverse_insertion, {}, {first_removed},
                                   "undo insertion of " + entry_string(cd)});
            return {};
        }
        note = "reopen " + entry_string(cd);
    }

    // Inverse rectification: insert at the leftmost allowed place right of
    // the removal, then expel the crossing of the new box-i strands from
    // below the working row.
    std::optional<Transposition> continuation_entry;
    int bound = inverse_scan_bound(rpp, r);
    if (i >= 2 && tpp.entry(i - 1)) {
        continuation_entry = *tpp.entry(i - 1);
        bound = std::max(bound, permutation_of(rpp)(continuation_entry->b));
    }
    Wiring w3(rpp, row.ell + std::max(bound, first_removed.col));
    std::optional<Place> target;
    bool continuation = false;
    Transposition picked{};
    for (int j = first_removed.col + 1; j <= bound && !target; ++j) {
        Place p{row.ell, j};
        if (rpp.contains(p))
            continue;
        const int west = w3.west_strand(p);
        const int south = w3.south_strand(p);
        if (south <= r && west > r) {
            target = p;
            picked = {south, west};
        } else if (continuation_entry && west == continuation_entry->b && south > r) {
            target = p;
            continuation = true;
            picked = {continuation_entry->a, south};  // the new box i-1 entry (e d)
        }
    }
    invariant(target.has_value(), "inverse rectification found no allowed place");

    TranspositionTableau tp{Partition{}, 0};
    if (!continuation) {
        tp = tpp.with_entry(i, picked);
        note += "; box " + std::to_string(i) + " = " + entry_string(picked);
    } else {
        const Transposition eg = *continuation_entry;
        tp = tpp.with_entry(i - 1, picked).with_entry(i, eg);
        note += "; box " + std::to_string(i - 1) + " = " + entry_string(picked) + ", box " +
                std::to_string(i) + " = " + entry_string(eg);
    }

    Graph rp = rpp.with(*target);
    const Transposition ab = *tp.entry(i);
    Wiring w4(rp);
    std::optional<Place> below;
    for (const Place& p : w4.crossings_of(ab.a, ab.b))
        if (p.row > row.ell) {
            invariant(!below, "box-i strands cross twice below the working row");
            below = p;
        }
    invariant(below.has_value(), "box-i strands must cross below the working row");

    row.cur = RcGraph(rp.without(*below));
    row.tableau = tp.cleared_last();
    note += "; expel " + entry_string(ab);
    trace.steps.push_back(
        {row.ell, i, StepKind::inverse_rectification, {*target}, {first_removed, *below}, note});
    return finish_rectification();
}

}  // namespace detail

// The inverse insertion algorithm: recovers (R, Y) with insert(R, Y, r) =
// (U, T). Requires (w, U, T) to be an r-Bruhat package with E(w, T) row and
// column strict, in the semi-shuffle or hook case.
inline InverseResult inverse_insert(const RcGraph& u, const TranspositionTableau& t,
                                    const Permutation& w, int r)
{
    if (r <= 0)
        throw std::invalid_argument("r must be positive");
    if (t.r() != r)
        throw std::invalid_argument("tableau was built for a different r");
    if (!t.fully_filled())
        throw std::invalid_argument("inverse insertion requires a fully filled tableau");
    const Partition lambda = t.shape();
    if (!lambda.empty() && !is_r_semi_shuffle(w, r) && !hook_shape(lambda))
        throw unsupported_case_error(
            "unsupported case: w is not an r-semi-shuffle and the shape of T is not a hook");
    if (!is_r_bruhat_package(w, u, t))
        throw unsupported_case_error("(w, U, T) is not an r-Bruhat package");
    if (!is_row_and_column_strict(E_tableau(w, t)))
        throw unsupported_case_error("E(w, T) is not row and column strict");

    InsertionTrace trace;
    detail::InverseRow row;
    row.ell = 1;
    row.base = w;
    row.cur = u;
    row.tableau = t;

    std::vector<Graph> recovered_rows;                  // rows 1 .. r-1 of R
    std::vector<std::vector<int>> rect_positions(r + 1);  // per working row
    std::vector<int> row_sizes(r + 1, 0);               // m_ell

    for (int ell = 1;; ++ell) {
        detail::check_inverse_conditions(row);
        const int m = row.tableau.fill_level();
        row_sizes[ell] = m;
        const RcGraph row_start = row.cur;  // R(ell, m_ell)
        std::vector<Transposition> below_entries;  // ascending step index
        for (int i = m; i >= 1; --i) {
            detail::InverseStepOutcome out = detail::inverse_step(row, i, r, trace);
            if (out.below) {
                rect_positions[ell].insert(rect_positions[ell].begin(), i);
                below_entries.insert(below_entries.begin(), *out.below);
            }
            detail::check_inverse_conditions(row);
        }

        if (ell == r) {
            recovered_rows.push_back(row.cur.graph());  // R(r, 0) holds rows >= r
            break;
        }
        recovered_rows.push_back(row.cur.graph().row(ell));

        // Inverse row-to-row step: m_{ell+1} inverse rectifications happened;
        // their positions select the boxes of sh(Y_{>=ell+1}) inside
        // sh(Y_{>=ell}), and the below-row transpositions fill T(ell+1).
        const std::vector<int>& positions = rect_positions[ell];
        const int m_next = static_cast<int>(positions.size());
        const BoxOrder& old_boxes = row.tableau.boxes();
        std::vector<int> per_row(row.tableau.shape().rows() + 1, 0);
        for (int idx : positions)
            ++per_row[old_boxes.box(idx).row];
        std::vector<int> parts;
        for (std::size_t d = 1; d < per_row.size(); ++d)
            parts.push_back(per_row[d]);
        Partition next_shape(parts);  // validates weak decrease; zero rows drop off the end
        detail::invariant(next_shape.total() == m_next,
                          "rectification positions must form a Young subdiagram");
        BoxOrder next_boxes(next_shape);
        for (int k = 1; k <= m_next; ++k)
            detail::invariant(next_boxes.box(k) == old_boxes.box(positions[k - 1]),
                              "rectification positions must map onto the box order of the subshape");

        TranspositionTableau next_tableau(next_shape, r);
        for (int k = 1; k <= m_next; ++k)
            next_tableau = next_tableau.with_entry(k, below_entries[k - 1]);

        detail::InverseRow next;
        next.ell = ell + 1;
        next.cur = RcGraph(row_start.graph().rows_at_least(ell + 1));
        next.tableau = next_tableau;
        Permutation base = next.cur.permutation();
        const std::vector<Transposition> word = next_tableau.word();
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            base = base.times_transposition(it->a, it->b);
        next.base = base;

        trace.steps.push_back({ell, 0, StepKind::inverse_row_to_row, {}, {},
                               "m_" + std::to_string(ell + 1) + " = " + std::to_string(m_next)});
        row = std::move(next);
    }

    Graph r_total;
    for (const Graph& g : recovered_rows)
        r_total = unite(r_total, g);
    RcGraph r_result(r_total);
    detail::invariant(r_result.permutation() == w, "recovered R must be an rc-graph of w");

    // Y from the rectification positions: letters at those positions copy the
    // word one row down, all other letters name the working row itself.
    std::vector<std::vector<int>> words(r + 2);
    for (int ell = r; ell >= 1; --ell) {
        std::vector<int> word(row_sizes[ell], ell);
        const std::vector<int>& positions = rect_positions[ell];
        for (std::size_t k = 0; k < positions.size(); ++k)
            word[positions[k] - 1] = words[ell + 1][k];
        words[ell] = std::move(word);
    }
    RcGraph y = rcgraph_from_word(words[1], lambda, r);

    return {r_result, y, std::move(trace)};
}

}  // namespace rcgraph

#endif
