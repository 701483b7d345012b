#ifndef RCGRAPH_TABLEAU_HPP
#define RCGRAPH_TABLEAU_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "rcgraph/errors.hpp"
#include "rcgraph/graph.hpp"
#include "rcgraph/permutation.hpp"

namespace rcgraph {

// Diagram coordinates: row 1 is the top row, column 1 the left column.
struct DiagramBox {
    int row = 0;
    int col = 0;
    friend bool operator==(const DiagramBox&, const DiagramBox&) = default;
};

// The labelling of the boxes of a Young diagram used throughout: bottom row
// first going up, left to right within each row.
class BoxOrder {
public:
    explicit BoxOrder(Partition shape) : shape_(std::move(shape))
    {
        for (int row = shape_.rows(); row >= 1; --row)
            for (int col = 1; col <= shape_.part(row); ++col)
                boxes_.push_back({row, col});
    }

    const Partition& shape() const { return shape_; }
    int size() const { return static_cast<int>(boxes_.size()); }

    DiagramBox box(int i) const
    {
        detail::invariant(i >= 1 && i <= size(), "box index out of range");
        return boxes_[i - 1];
    }

    std::optional<int> index_of(const DiagramBox& b) const
    {
        auto it = std::find(boxes_.begin(), boxes_.end(), b);
        if (it == boxes_.end())
            return std::nullopt;
        return static_cast<int>(it - boxes_.begin()) + 1;
    }

    // Box directly above box i (one diagram row up, same column).
    std::optional<int> above(int i) const
    {
        DiagramBox b = box(i);
        return index_of({b.row - 1, b.col});
    }

    std::optional<int> below(int i) const
    {
        DiagramBox b = box(i);
        return index_of({b.row + 1, b.col});
    }

    std::optional<int> left(int i) const
    {
        DiagramBox b = box(i);
        return index_of({b.row, b.col - 1});
    }

    friend bool operator==(const BoxOrder&, const BoxOrder&) = default;

private:
    Partition shape_;
    std::vector<DiagramBox> boxes_;
};

template <typename Entry>
class PrefixTableau {
public:
    explicit PrefixTableau(Partition shape)
        : order_(std::move(shape)), entries_(order_.size(), std::nullopt)
    {
    }

    const Partition& shape() const { return order_.shape(); }
    const BoxOrder& boxes() const { return order_; }
    int box_count() const { return order_.size(); }

    // Boxes 1..fill_level() are filled, the rest are empty.
    int fill_level() const { return fill_; }
    bool fully_filled() const { return fill_ == box_count(); }

    std::optional<Entry> entry(int i) const
    {
        detail::invariant(i >= 1 && i <= box_count(), "box index out of range");
        return entries_[i - 1];
    }

    // Entries of boxes 1..fill_level in box order.
    std::vector<Entry> word() const
    {
        std::vector<Entry> out;
        for (int i = 1; i <= fill_; ++i)
            out.push_back(*entries_[i - 1]);
        return out;
    }

    friend bool operator==(const PrefixTableau&, const PrefixTableau&) = default;

protected:
    void set(int i, Entry e)
    {
        detail::invariant(i >= 1 && i <= fill_ + 1 && i <= box_count(),
                          "filled boxes must stay a prefix of the box order");
        entries_[i - 1] = std::move(e);
        fill_ = std::max(fill_, i);
    }

    void clear_last()
    {
        detail::invariant(fill_ >= 1, "no filled box to clear");
        entries_[fill_ - 1] = std::nullopt;
        --fill_;
    }

private:
    BoxOrder order_;
    std::vector<std::optional<Entry>> entries_;
    int fill_ = 0;
};

struct Transposition {
    int a = 0;
    int b = 0;
    friend bool operator==(const Transposition&, const Transposition&) = default;
};

// Young-diagram-shaped array of transpositions (a,b) with a <= r < b, filled
// up to some box in the box order.
class TranspositionTableau : public PrefixTableau<Transposition> {
public:
    TranspositionTableau(Partition shape, int r)
        : PrefixTableau<Transposition>(std::move(shape)), r_(r)
    {
        if (r < 0)
            throw std::invalid_argument("r must be nonnegative");
    }

    static TranspositionTableau from_word(Partition shape, int r, const std::vector<Transposition>& word)
    {
        TranspositionTableau t(std::move(shape), r);
        if (static_cast<int>(word.size()) > t.box_count())
            throw std::invalid_argument("word longer than the diagram");
        for (std::size_t k = 0; k < word.size(); ++k)
            t = t.with_entry(static_cast<int>(k) + 1, word[k]);
        return t;
    }

    int r() const { return r_; }

    TranspositionTableau with_entry(int i, Transposition t) const
    {
        detail::invariant(0 < t.a && t.a <= r_ && r_ < t.b, "tableau entries satisfy a <= r < b");
        TranspositionTableau next = *this;
        next.set(i, t);
        return next;
    }

    TranspositionTableau cleared_last() const
    {
        TranspositionTableau next = *this;
        next.clear_last();
        return next;
    }

    friend bool operator==(const TranspositionTableau&, const TranspositionTableau&) = default;

private:
    int r_ = 0;
};

class IntTableau : public PrefixTableau<int> {
public:
    explicit IntTableau(Partition shape) : PrefixTableau<int>(std::move(shape)) {}

    IntTableau with_entry(int i, int value) const
    {
        IntTableau next = *this;
        next.set(i, value);
        return next;
    }

    friend bool operator==(const IntTableau&, const IntTableau&) = default;
};

inline BoxOrder box_order(const Partition& shape)
{
    return BoxOrder(shape);
}

// [w w_1(T), ..., w w_j(T)] for j = fill level, where w_i(T) is the product
// of the first i entries of word(T).
inline std::vector<Permutation> chain_permutations(const Permutation& w, const TranspositionTableau& t)
{
    std::vector<Permutation> out;
    Permutation cur = w;
    for (const Transposition& x : t.word()) {
        cur = cur.times_transposition(x.a, x.b);
        out.push_back(cur);
    }
    return out;
}

// l(w w_i(T)) = l(w) + i for 1 <= i <= fill level.
inline bool is_r_bruhat_chain(const Permutation& w, const TranspositionTableau& t)
{
    Permutation cur = w;
    for (const Transposition& x : t.word()) {
        if (!is_covering(cur, x.a, x.b))
            return false;
        cur = cur.times_transposition(x.a, x.b);
    }
    return true;
}

// Box i holds w w_i(T)(b_i).
inline IntTableau E_tableau(const Permutation& w, const TranspositionTableau& t)
{
    IntTableau e(t.shape());
    Permutation cur = w;
    int i = 0;
    for (const Transposition& x : t.word()) {
        cur = cur.times_transposition(x.a, x.b);
        e = e.with_entry(++i, cur(x.b));
    }
    return e;
}

// Entry-wise second components b_i.
inline IntTableau B_tableau(const TranspositionTableau& t)
{
    IntTableau b(t.shape());
    int i = 0;
    for (const Transposition& x : t.word())
        b = b.with_entry(++i, x.b);
    return b;
}

namespace detail {

// Compares each filled box against its filled left and upper neighbours.
// strict_rows: entries strictly increase left to right (else weakly).
// strict_cols: entries strictly increase top to bottom (else weakly).
inline bool tableau_monotone(const IntTableau& t, bool strict_rows, bool strict_cols)
{
    const BoxOrder& order = t.boxes();
    for (int i = 1; i <= t.box_count(); ++i) {
        auto e = t.entry(i);
        if (!e)
            continue;
        if (auto left = order.left(i); left && t.entry(*left)) {
            int prev = *t.entry(*left);
            if (strict_rows ? prev >= *e : prev > *e)
                return false;
        }
        if (auto above = order.above(i); above && t.entry(*above)) {
            int up = *t.entry(*above);
            if (strict_cols ? up >= *e : up > *e)
                return false;
        }
    }
    return true;
}

}  // namespace detail

// Strictly increasing along rows and down columns, restricted to the filled
// boxes of a partial tableau.
inline bool is_row_and_column_strict(const IntTableau& t)
{
    return detail::tableau_monotone(t, true, true);
}

// Strict rows, weakly increasing down columns.
inline bool is_row_strict(const IntTableau& t)
{
    return detail::tableau_monotone(t, true, false);
}

// w w(T) = w(R) and T is an r-Bruhat chain of w; a partial T is compared
// against w w_{fill}(T).
inline bool is_r_bruhat_package(const Permutation& w, const RcGraph& r, const TranspositionTableau& t)
{
    if (!is_r_bruhat_chain(w, t))
        return false;
    Permutation cur = w;
    for (const Transposition& x : t.word())
        cur = cur.times_transposition(x.a, x.b);
    return cur == r.permutation();
}

enum class HookSide { b_side, a_side };

// Chain condition of the Pieri-type rule for a hook shape (p, 1^{q-1}): the
// watched values strictly decrease along the first column of the chain and
// then strictly increase along the first row. In box order that is a strict
// decrease through box q followed by a strict increase through box m.
inline bool hook_condition(const Permutation& w, const TranspositionTableau& t, HookSide side)
{
    auto hook = hook_shape(t.shape());
    if (!hook)
        throw std::invalid_argument("hook_condition requires a hook shape");
    if (!t.fully_filled())
        throw std::invalid_argument("hook_condition requires a fully filled tableau");
    const int q = hook->second;  // column length = number of chain steps in the decreasing run
    const int m = t.box_count();

    std::vector<int> watched;
    Permutation cur = w;
    for (const Transposition& x : t.word()) {
        cur = cur.times_transposition(x.a, x.b);
        watched.push_back(side == HookSide::b_side ? cur(x.b) : cur(x.a));
    }
    for (int i = 1; i < q; ++i)
        if (!(watched[i - 1] > watched[i]))
            return false;
    for (int i = q; i < m; ++i)
        if (!(watched[i - 1] < watched[i]))
            return false;
    return true;
}

}  // namespace rcgraph

#endif
