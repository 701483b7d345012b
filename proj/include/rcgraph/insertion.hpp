#ifndef RCGRAPH_INSERTION_HPP
#define RCGRAPH_INSERTION_HPP

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rcgraph/errors.hpp"
#include "rcgraph/graph.hpp"
#include "rcgraph/permutation.hpp"
#include "rcgraph/schubert.hpp"
#include "rcgraph/tableau.hpp"

namespace rcgraph {

enum class StepKind {
    row_to_row,
    insertion,
    rectification,
    inverse_row_to_row,
    inverse_insertion,
    inverse_rectification,
};

inline const char* to_string(StepKind k)
{
    switch (k) {
    case StepKind::row_to_row: return "row_to_row";
    case StepKind::insertion: return "insertion";
    case StepKind::rectification: return "rectification";
    case StepKind::inverse_row_to_row: return "inverse_row_to_row";
    case StepKind::inverse_insertion: return "inverse_insertion";
    case StepKind::inverse_rectification: return "inverse_rectification";
    }
    return "?";
}

// One step of the algorithm: which crossings moved and how the tableau
// changed. Replaying added/removed from the starting graph reproduces the
// final graph.
struct StepRecord {
    int row = 0;
    int index = 0;
    StepKind kind = StepKind::row_to_row;
    std::vector<Place> added;
    std::vector<Place> removed;
    std::string tableau_edit;
    // Rectification bookkeeping: whether the imported crossing had to be
    // repaired, whether the removal matched the second pattern (the crossing
    // of b with the second component of box i-1), and whether the
    // re-insertion used the second pattern (the strand of box i-1).
    bool repaired = false;
    bool removal_used_previous_box = false;
    bool insertion_used_previous_box = false;
};

struct InsertionTrace {
    std::vector<StepRecord> steps;
};

// Letter of word(Y): the row of one crossing of Y, tagged with the crossing
// itself and the strand s <= r whose block it belongs to.
struct ShuffleLetter {
    int row = 0;
    Place crossing;
    int strand = 0;
    friend bool operator==(const ShuffleLetter&, const ShuffleLetter&) = default;
};

class ShuffleWord {
public:
    ShuffleWord() = default;
    explicit ShuffleWord(std::vector<ShuffleLetter> letters) : letters_(std::move(letters)) {}

    const std::vector<ShuffleLetter>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }

    std::vector<int> rows() const
    {
        std::vector<int> out;
        for (const ShuffleLetter& l : letters_)
            out.push_back(l.row);
        return out;
    }

private:
    std::vector<ShuffleLetter> letters_;
};

// word(Y) = word(Y,1)...word(Y,r), where word(Y,s) lists the rows of the
// crossings on strand s in path order (weakly decreasing).
inline ShuffleWord shuffle_word(const RcGraph& y, int r)
{
    if (!is_r_shuffle(y.permutation(), r))
        throw std::invalid_argument("shuffle_word requires an r-shuffle rc-graph");
    Partition lambda = partition_of_shuffle(y.permutation(), r);
    Wiring wiring(y.graph());
    std::vector<ShuffleLetter> letters;
    for (int s = 1; s <= r; ++s) {
        std::vector<Place> on_strand = s <= wiring.size() ? wiring.crossings_on_strand(s)
                                                          : std::vector<Place>{};
        detail::invariant(static_cast<int>(on_strand.size()) == lambda.part(r + 1 - s),
                          "strand s must cross exactly lambda_{r+1-s} strands");
        int prev = 0;
        for (const Place& p : on_strand) {
            detail::invariant(prev == 0 || p.row <= prev, "rows weakly decrease within a block");
            prev = p.row;
            letters.push_back({p.row, p, s});
        }
    }
    return ShuffleWord(std::move(letters));
}

// word(Y_{>=ell}) with, for every letter living strictly below ell, its index
// inside word(Y_{>=ell+1}) (matched by crossing identity).
struct RestrictedLetter {
    ShuffleLetter letter;
    int i_plus = 0;  // 0 when the letter sits in row ell itself
};

inline std::vector<RestrictedLetter> restricted_word(const ShuffleWord& word, int ell)
{
    std::vector<RestrictedLetter> out;
    int deeper = 0;  // running index within word(Y_{>=ell+1})
    for (const ShuffleLetter& l : word.letters()) {
        if (l.row < ell)
            continue;
        RestrictedLetter rl{l, 0};
        if (l.row > ell)
            rl.i_plus = ++deeper;
        out.push_back(rl);
    }
    return out;
}

// The interpolating chain of an r-Bruhat package: S_m = R and S_{j-1} is
// S_j minus the crossing of the strands in box j of T.
struct SChain {
    std::vector<RcGraph> graphs;  // S_0 .. S_m
    std::vector<Place> removed;   // removed[j-1]: crossing removed from S_j
};

inline SChain s_chain(const Permutation& w, const RcGraph& r, const TranspositionTableau& t)
{
    if (!t.fully_filled())
        throw std::invalid_argument("s_chain requires a fully filled tableau");
    if (!is_r_bruhat_package(w, r, t))
        throw std::invalid_argument("s_chain requires an r-Bruhat package");
    const int m = t.box_count();
    SChain chain;
    chain.graphs.assign(m + 1, RcGraph());
    chain.removed.assign(m, Place{});
    chain.graphs[m] = r;
    for (int j = m; j >= 1; --j) {
        Transposition x = *t.entry(j);
        auto [smaller, place] = remove_crossing_of(chain.graphs[j], x.a, x.b);
        chain.graphs[j - 1] = smaller;
        chain.removed[j - 1] = place;
    }
    return chain;
}

struct AllowedPlace {
    int col = 0;
    int west = 0;
    int south = 0;
};

// Empty places (ell, j) whose west strand c and south strand d satisfy
// c <= r < d, in increasing column order. A west strand c <= r still has to
// exit in column w(c) >= j, so the scan stops at max_{s<=r} w(R)(s).
inline std::vector<AllowedPlace> allowed_places_forward(const RcGraph& r, int ell, int rr)
{
    int bound = 0;
    for (int s = 1; s <= rr; ++s)
        bound = std::max(bound, r.permutation()(s));
    Wiring wiring(r.graph(), ell + bound);
    std::vector<AllowedPlace> out;
    for (int j = 1; j <= bound; ++j) {
        Place p{ell, j};
        if (r.graph().contains(p))
            continue;
        int c = wiring.west_strand(p);
        int d = wiring.south_strand(p);
        if (c <= rr && rr < d)
            out.push_back({j, c, d});
    }
    return out;
}

struct InsertionResult {
    RcGraph graph;                // R <- Y
    TranspositionTableau tableau; // T(R,Y)
    InsertionTrace trace;
};

namespace detail {

inline std::string place_string(const Place& p)
{
    std::ostringstream os;
    os << "(" << p.row << "," << p.col << ")";
    return os.str();
}

inline std::string entry_string(const Transposition& t)
{
    std::ostringstream os;
    os << "(" << t.a << " " << t.b << ")";
    return os.str();
}

// Shape of Y_{>=ell}: the restricted graph is again an r-shuffle rc-graph.
inline Partition restricted_shape(const RcGraph& y, int ell, int r)
{
    return partition_of_shuffle(permutation_of(y.graph().rows_at_least(ell)), r);
}

struct InsertionRow {
    int ell = 0;
    Permutation base;  // w(R_{>=ell})
    RcGraph cur;       // R(ell, i)
    TranspositionTableau tableau{Partition{}, 0};
    // Data of the finished row below: T(ell+1) and the chain S_j(P(ell+1)).
    TranspositionTableau below_tableau{Partition{}, 0};
    SChain below_chain;
};

// Conditions every step has to re-establish: E(w(R_{>=ell}), T) row and
// column strict, and (w(R_{>=ell}), R, T) an r-Bruhat package.
inline void check_step_conditions(const InsertionRow& row)
{
    invariant(is_row_and_column_strict(E_tableau(row.base, row.tableau)),
              "E(w(R_>=ell), T) must stay row and column strict");
    invariant(is_r_bruhat_package(row.base, row.cur, row.tableau),
              "(w(R_>=ell), R, T) must stay an r-Bruhat package");
}

inline void insertion_step(InsertionRow& row, int i, int r, InsertionTrace& trace)
{
    std::vector<AllowedPlace> allowed = allowed_places_forward(row.cur, row.ell, r);
    invariant(!allowed.empty(), "insertion step found no allowed place");
    const AllowedPlace& pick = allowed.back();
    Place place{row.ell, pick.col};
    Transposition cd{pick.west, pick.south};

    row.cur = RcGraph(row.cur.graph().with(place));
    row.tableau = row.tableau.with_entry(i, cd);
    trace.steps.push_back({row.ell, i, StepKind::insertion, {place}, {},
                           "box " + std::to_string(i) + " = " + entry_string(cd)});
    check_step_conditions(row);
}

inline void rectification_step(InsertionRow& row, int i, int i_plus, int r, InsertionTrace& trace)
{
    invariant(i_plus >= 1 && i_plus <= static_cast<int>(row.below_chain.removed.size()),
              "rectification letter has no counterpart in the row below");
    // S_{i+}(P(ell+1)) exceeds S_{i+-1}(P(ell+1)) by one crossing; import it.
    const Place diff = row.below_chain.removed[i_plus - 1];
    const Transposition ab = *row.below_tableau.entry(i_plus);

    Graph rp = row.cur.graph().with(diff);
    TranspositionTableau tp = row.tableau.with_entry(i, ab);

    const bool reduced = static_cast<int>(rp.size()) == length(permutation_of(rp));
    if (reduced) {
        RcGraph candidate(rp);
        if (is_row_and_column_strict(E_tableau(row.base, tp)) &&
            is_r_bruhat_package(row.base, candidate, tp)) {
            row.cur = candidate;
            row.tableau = tp;
            trace.steps.push_back({row.ell, i, StepKind::rectification, {diff}, {},
                                   "box " + std::to_string(i) + " = " + entry_string(ab)});
            invariant(row.cur.graph().rows_at_least(row.ell + 1) ==
                          row.below_chain.graphs[i_plus].graph(),
                      "accepted rectification must leave S_{i+} below the working row");
            check_step_conditions(row);
            return;
        }
    }

    // Repair: one crossing in the working row has to be removed.
    Wiring wiring(rp);
    Place removed_place{};
    TranspositionTableau tpp(row.tableau.shape(), row.tableau.r());
    std::string note;
    if (!reduced) {
        // Strands a and b intersect twice; drop their crossing in this row.
        std::optional<Place> hit;
        for (const Place& p : wiring.crossings_of(ab.a, ab.b))
            if (p.row == row.ell) {
                invariant(!hit, "strands a,b cross twice within the working row");
                hit = p;
            }
        invariant(hit.has_value(), "non-reduced import must cross in the working row");
#if RCGRAPH_EXTRA_CHECKS
        invariant(wiring.west_strand(*hit) == ab.b && wiring.south_strand(*hit) == ab.a,
                  "removed crossing must have b horizontal and a vertical");
#endif
        removed_place = *hit;
        tpp = tp.cleared_last();
        note = "remove " + entry_string(ab);
    } else {
        // Reduced but E not strict: the crossing of b with the second
        // component f of box i-1 sits in this row; boxes i-1 and i share
        // their first component.
        invariant(i >= 2, "strictness repair needs a previous box");
        const Transposition af = *tp.entry(i - 1);
        invariant(af.a == ab.a, "strictness repair expects boxes i-1 and i to share a");
        std::optional<Place> hit;
        for (const Place& p : wiring.crossings_of(ab.b, af.b))
            if (p.row == row.ell) {
                invariant(!hit, "strands b,f cross twice within the working row");
                hit = p;
            }
        invariant(hit.has_value(), "strictness repair found no crossing of b and f");
#if RCGRAPH_EXTRA_CHECKS
        invariant(wiring.west_strand(*hit) == ab.b && wiring.south_strand(*hit) == af.b,
                  "removed crossing must have b horizontal and f vertical");
#endif
        removed_place = *hit;
        tpp = tp.cleared_last().with_entry(i - 1, ab);
        note = "remove " + entry_string({af.a, af.b}) + " pattern, box " + std::to_string(i - 1) +
               " = " + entry_string(ab);
    }

    Graph rpp = rp.without(removed_place);
    const int j0 = removed_place.col;

    // Rightmost allowed place strictly left of the removed column. Either a
    // fresh pair c <= r < d, or the continuation pattern on the strand g of
    // box i-1.
    Wiring wiring2(rpp, row.ell + j0);
    std::optional<Place> target;
    bool continuation = false;
    Transposition entry{};
    for (int j = j0 - 1; j >= 1 && !target; --j) {
        Place p{row.ell, j};
        if (rpp.contains(p))
            continue;
        int c = wiring2.west_strand(p);
        int d = wiring2.south_strand(p);
        if (d <= r)
            continue;
        if (c <= r) {
            target = p;
            entry = {c, d};
        } else if (i >= 2 && tpp.entry(i - 1) && c == tpp.entry(i - 1)->b) {
            target = p;
            continuation = true;
            entry = {0, d};  // filled below
        }
    }
    invariant(target.has_value(), "rectification found no allowed place to re-insert");

    TranspositionTableau next(row.tableau.shape(), row.tableau.r());
    if (!continuation) {
        next = tpp.with_entry(i, entry);
        note += "; box " + std::to_string(i) + " = " + entry_string(entry);
    } else {
        const Transposition eg = *tpp.entry(i - 1);
        next = tpp.with_entry(i - 1, {eg.a, entry.b}).with_entry(i, eg);
        note += "; box " + std::to_string(i - 1) + " = " + entry_string({eg.a, entry.b}) +
                ", box " + std::to_string(i) + " = " + entry_string(eg);
    }

    row.cur = RcGraph(rpp.with(*target));
    row.tableau = next;
    StepRecord rec{row.ell, i, StepKind::rectification, {diff, *target}, {removed_place}, note};
    rec.repaired = true;
    rec.removal_used_previous_box = reduced;  // non-reduced imports use the plain pattern
    rec.insertion_used_previous_box = continuation;
    trace.steps.push_back(std::move(rec));
    invariant(row.cur.graph().rows_at_least(row.ell + 1) == row.below_chain.graphs[i_plus].graph(),
              "rectification must leave S_{i+} below the working row");
    check_step_conditions(row);
}

}  // namespace detail

// The generalized Schensted insertion R <- Y for an rc-graph Y of an
// r-shuffle v(lambda, r). Supported when w(R) is an r-semi-shuffle or when
// lambda is a hook.
inline InsertionResult insert(const RcGraph& r_graph, const RcGraph& y, int r)
{
    if (r <= 0)
        throw std::invalid_argument("r must be positive");
    const Permutation& w = r_graph.permutation();
    const Permutation& v = y.permutation();
    if (!is_r_shuffle(v, r))
        throw unsupported_case_error("Y is not an rc-graph of an r-shuffle");
    const Partition lambda = partition_of_shuffle(v, r);
    if (!lambda.empty() && !is_r_semi_shuffle(w, r) && !hook_shape(lambda))
        throw unsupported_case_error(
            "unsupported case: w(R) is not an r-semi-shuffle and the shape of Y is not a hook");

    const ShuffleWord word = shuffle_word(y, r);
    InsertionTrace trace;

    detail::InsertionRow row;
    row.ell = r;
    row.base = permutation_of(r_graph.graph().rows_at_least(r));
    row.cur = RcGraph(r_graph.graph().rows_at_least(r));
    row.tableau = TranspositionTableau(detail::restricted_shape(y, r, r), r);
    trace.steps.push_back({r, 0, StepKind::row_to_row, {}, {}, "start"});
    detail::check_step_conditions(row);

    for (int ell = r;; --ell) {
        const std::vector<RestrictedLetter> letters = restricted_word(word, ell);
        detail::invariant(static_cast<int>(letters.size()) == row.tableau.box_count(),
                          "word(Y_>=ell) and sh(Y_>=ell) disagree");
        for (int i = 1; i <= static_cast<int>(letters.size()); ++i) {
            if (letters[i - 1].letter.row == ell)
                detail::insertion_step(row, i, r, trace);
            else
                detail::rectification_step(row, i, letters[i - 1].i_plus, r, trace);
        }
        // x^{R(ell)} = x^{R_{>=ell}} x^{Y_{>=ell}}
        detail::invariant(exponent(row.cur.graph()) ==
                              add_exponents(exponent(r_graph.graph().rows_at_least(ell)),
                                            exponent(y.graph().rows_at_least(ell))),
                          "monomial conservation failed at the end of a row");
        if (ell == 1)
            break;

        // Row-to-row step: backtrack the finished row to S_0 and add the
        // crossings of R in the next row up.
        detail::InsertionRow next;
        next.ell = ell - 1;
        next.below_tableau = row.tableau;
        next.below_chain = s_chain(row.base, row.cur, row.tableau);
        Graph start = unite(next.below_chain.graphs[0].graph(), r_graph.graph().row(ell - 1));
        next.base = permutation_of(r_graph.graph().rows_at_least(ell - 1));
        next.cur = RcGraph(start);
        next.tableau = TranspositionTableau(detail::restricted_shape(y, ell - 1, r), r);

        StepRecord rec{ell - 1, 0, StepKind::row_to_row, {}, {}, "backtrack and add row"};
        for (int j = static_cast<int>(next.below_chain.removed.size()); j >= 1; --j)
            rec.removed.push_back(next.below_chain.removed[j - 1]);
        const Graph next_row = r_graph.graph().row(ell - 1);
        rec.added = next_row.places();
        trace.steps.push_back(std::move(rec));

        row = std::move(next);
        detail::check_step_conditions(row);
    }

    return {row.cur, row.tableau, std::move(trace)};
}

}  // namespace rcgraph

#endif
