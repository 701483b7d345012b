#ifndef RCGRAPH_GRAPH_HPP
#define RCGRAPH_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <utility>
#include <vector>

#include "rcgraph/errors.hpp"
#include "rcgraph/permutation.hpp"

namespace rcgraph {

struct Place {
    int row = 0;
    int col = 0;
    friend bool operator==(const Place&, const Place&) = default;
    friend auto operator<=>(const Place&, const Place&) = default;
};

// A finite set of crossing places. Sparse and unbounded: no staircase bound is
// imposed here; strands extend to the right and down without intersecting.
class Graph {
public:
    Graph() = default;

    Graph(std::initializer_list<Place> places) : Graph(std::vector<Place>(places)) {}

    explicit Graph(std::vector<Place> places) : places_(std::move(places))
    {
        for (const Place& p : places_)
            if (p.row <= 0 || p.col <= 0)
                throw std::invalid_argument("crossing places need positive row and column");
        std::sort(places_.begin(), places_.end());
        places_.erase(std::unique(places_.begin(), places_.end()), places_.end());
    }

    const std::vector<Place>& places() const { return places_; }
    int size() const { return static_cast<int>(places_.size()); }
    bool empty() const { return places_.empty(); }

    bool contains(const Place& p) const
    {
        return std::binary_search(places_.begin(), places_.end(), p);
    }

    Graph with(const Place& p) const
    {
        detail::invariant(!contains(p), "place is already a crossing");
        std::vector<Place> next = places_;
        next.insert(std::upper_bound(next.begin(), next.end(), p), p);
        return Graph(Unchecked{}, std::move(next));
    }

    Graph without(const Place& p) const
    {
        detail::invariant(contains(p), "place is not a crossing");
        std::vector<Place> next = places_;
        next.erase(std::lower_bound(next.begin(), next.end(), p));
        return Graph(Unchecked{}, std::move(next));
    }

    // R_I for I = {ell, ell+1, ...}
    Graph rows_at_least(int ell) const
    {
        return filtered([ell](const Place& p) { return p.row >= ell; });
    }

    // R_ell
    Graph row(int ell) const
    {
        return filtered([ell](const Place& p) { return p.row == ell; });
    }

    // R_I for an arbitrary row set I.
    Graph restrict_rows(const std::vector<int>& rows) const
    {
        return filtered([&rows](const Place& p) {
            return std::find(rows.begin(), rows.end(), p.row) != rows.end();
        });
    }

    int crossings_in_row(int ell) const
    {
        int n = 0;
        for (const Place& p : places_)
            if (p.row == ell)
                ++n;
        return n;
    }

    int max_row() const
    {
        int m = 0;
        for (const Place& p : places_)
            m = std::max(m, p.row);
        return m;
    }

    int max_col() const
    {
        int m = 0;
        for (const Place& p : places_)
            m = std::max(m, p.col);
        return m;
    }

    // Largest row+col over crossings; the wiring of the graph is trivial
    // beyond this bound.
    int staircase_bound() const
    {
        int m = 0;
        for (const Place& p : places_)
            m = std::max(m, p.row + p.col);
        return m;
    }

    friend Graph unite(const Graph& a, const Graph& b)
    {
        std::vector<Place> next;
        std::set_union(a.places_.begin(), a.places_.end(), b.places_.begin(), b.places_.end(),
                       std::back_inserter(next));
        return Graph(Unchecked{}, std::move(next));
    }

    friend bool operator==(const Graph&, const Graph&) = default;
    friend auto operator<=>(const Graph&, const Graph&) = default;

private:
    struct Unchecked {};
    Graph(Unchecked, std::vector<Place> places) : places_(std::move(places)) {}

    template <typename Pred>
    Graph filtered(Pred pred) const
    {
        std::vector<Place> next;
        std::copy_if(places_.begin(), places_.end(), std::back_inserter(next), pred);
        return Graph(Unchecked{}, std::move(next));
    }

    std::vector<Place> places_;  // sorted, unique
};

// Full strand trace of a graph over the window {1..n} x {1..n}.
//
// Tile semantics: at a crossing both strands pass straight through (west to
// east and south to north); at an empty place the west strand turns north and
// the south strand turns east. Strand i enters from the west at row i; it
// exits at the top in column w(i).
class Wiring {
public:
    Wiring(Graph&&, int = 0) = delete;  // keeps a pointer to the graph

    explicit Wiring(const Graph& g, int min_size = 0) : graph_(&g)
    {
        n_ = std::max({1, min_size, g.staircase_bound()});
        west_.assign(static_cast<std::size_t>(n_) * n_, 0);
        south_.assign(static_cast<std::size_t>(n_) * n_, 0);

        // north[j] holds the strand leaving the row below northward at column
        // j; below the window everything is untouched anti-diagonal strands.
        std::vector<int> north(n_ + 1, 0);
        for (int j = 1; j <= n_; ++j)
            north[j] = n_ + j;

        for (int i = n_; i >= 1; --i) {
            int east = i;  // strand entering row i from the west edge
            for (int j = 1; j <= n_; ++j) {
                int w_in = east;
                int s_in = north[j];
                at(west_, i, j) = w_in;
                at(south_, i, j) = s_in;
                if (g.contains({i, j})) {
                    east = w_in;
                    north[j] = s_in;
                } else {
                    east = s_in;
                    north[j] = w_in;
                }
            }
            detail::invariant(east > n_, "a labelled strand escaped the wiring window");
        }

        std::vector<int> img(n_, 0);
        for (int j = 1; j <= n_; ++j) {
            int s = north[j];
            detail::invariant(s >= 1 && s <= n_, "strand bookkeeping out of range");
            img[s - 1] = j;
        }
        perm_ = Permutation(std::move(img));
    }

    int size() const { return n_; }
    const Permutation& permutation() const { return perm_; }

    int west_strand(const Place& p) const
    {
        check(p);
        return west_[index(p.row, p.col)];
    }

    int south_strand(const Place& p) const
    {
        check(p);
        return south_[index(p.row, p.col)];
    }

    // Places where strands a and b cross, in place order.
    std::vector<Place> crossings_of(int a, int b) const
    {
        std::vector<Place> out;
        for (const Place& p : graph_->places()) {
            int w = west_strand(p);
            int s = south_strand(p);
            if ((w == a && s == b) || (w == b && s == a))
                out.push_back(p);
        }
        return out;
    }

    // a [+] b: rows where strand a crosses strand b as the horizontal strand.
    std::vector<int> box_plus(int a, int b) const
    {
        std::vector<int> rows;
        for (const Place& p : graph_->places())
            if (west_strand(p) == a && south_strand(p) == b)
                rows.push_back(p.row);
        return rows;
    }

    // Crossings lying on strand s, in the order the strand passes them (rows
    // weakly decreasing, columns weakly increasing).
    std::vector<Place> crossings_on_strand(int s) const
    {
        std::vector<Place> out;
        for (const Place& p : graph_->places())
            if (west_strand(p) == s || south_strand(p) == s)
                out.push_back(p);
        std::sort(out.begin(), out.end(),
                  [](const Place& x, const Place& y) { return x.row != y.row ? x.row > y.row : x.col < y.col; });
        return out;
    }

private:
    void check(const Place& p) const
    {
        detail::invariant(p.row >= 1 && p.col >= 1 && p.row <= n_ && p.col <= n_,
                          "place outside the wiring window");
    }

    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }

    int& at(std::vector<int>& v, int i, int j) { return v[index(i, j)]; }

    const Graph* graph_;
    int n_ = 0;
    std::vector<int> west_, south_;
    Permutation perm_;
};

// Letters of the crossings read top to bottom row, right to left in each row;
// the letter at place (i,j) is i+j-1. Requires row+col <= n for every
// crossing.
inline std::vector<int> word_of_graph(const Graph& g, int n)
{
    for (const Place& p : g.places())
        if (p.row + p.col > n)
            throw std::invalid_argument("crossing outside the staircase");
    std::vector<Place> order = g.places();
    std::sort(order.begin(), order.end(),
              [](const Place& a, const Place& b) { return a.row != b.row ? a.row < b.row : a.col > b.col; });
    std::vector<int> word;
    for (const Place& p : order)
        word.push_back(p.row + p.col - 1);
    return word;
}

namespace detail {

inline Permutation reading_order_product(const Graph& g)
{
    Permutation w;
    for (int k : word_of_graph(g, std::max(1, g.staircase_bound())))
        w = w * Permutation::simple(k);
    return w;
}

}  // namespace detail

// w(R) by strand tracing; the reading-order product of simple reflections
// gives the same permutation.
inline Permutation permutation_of(const Graph& g)
{
    Permutation w = Wiring(g).permutation();
#if RCGRAPH_EXTRA_CHECKS
    detail::invariant(w == detail::reading_order_product(g),
                      "strand tracing disagrees with the reading-order product");
#endif
    return w;
}

namespace detail {

// Some pair of strands crosses twice.
inline bool has_double_crossing(const Graph& g)
{
    Wiring wiring(g);
    std::vector<std::pair<int, int>> seen;
    for (const Place& p : g.places()) {
        int a = wiring.west_strand(p);
        int b = wiring.south_strand(p);
        std::pair<int, int> key{std::min(a, b), std::max(a, b)};
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            return true;
        seen.push_back(key);
    }
    return false;
}

}  // namespace detail

// |R| = l(w(R)); equivalently no two strands intersect twice.
inline bool is_rcgraph(const Graph& g)
{
    bool reduced = g.size() == length(permutation_of(g));
#if RCGRAPH_EXTRA_CHECKS
    detail::invariant(reduced == !detail::has_double_crossing(g),
                      "length criterion disagrees with the double-crossing criterion");
#endif
    return reduced;
}

// (west strand, south strand) at a place.
inline std::pair<int, int> strands_at(const Graph& g, const Place& p)
{
    if (p.row <= 0 || p.col <= 0)
        throw std::invalid_argument("places need positive row and column");
    Wiring wiring(g, p.row + p.col);
    return {wiring.west_strand(p), wiring.south_strand(p)};
}

inline std::vector<int> box_plus(const Graph& g, int a, int b)
{
    return Wiring(g).box_plus(a, b);
}

// Per-row crossing counts x^R, trailing zeros trimmed.
inline std::vector<int> exponent(const Graph& g)
{
    std::vector<int> e(g.max_row(), 0);
    for (const Place& p : g.places())
        ++e[p.row - 1];
    while (!e.empty() && e.back() == 0)
        e.pop_back();
    return e;
}

inline std::vector<int> add_exponents(std::vector<int> a, const std::vector<int>& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] += b[i];
    return a;
}

// A graph that is a reduced word of its permutation. The constructor verifies
// |R| = l(w(R)) and keeps the traced permutation.
class RcGraph {
public:
    RcGraph() = default;

    explicit RcGraph(Graph g) : graph_(std::move(g)), perm_(permutation_of(graph_))
    {
        detail::invariant(graph_.size() == length(perm_), "graph is not reduced");
    }

    // For callers that already know the permutation (enumeration emits
    // reduced graphs by construction).
    static RcGraph trusted(Graph g, Permutation w)
    {
#if RCGRAPH_EXTRA_CHECKS
        return RcGraph(std::move(g));
#else
        RcGraph r;
        r.graph_ = std::move(g);
        r.perm_ = std::move(w);
        return r;
#endif
    }

    const Graph& graph() const { return graph_; }
    const Permutation& permutation() const { return perm_; }
    int size() const { return graph_.size(); }

    friend bool operator==(const RcGraph& a, const RcGraph& b) { return a.graph_ == b.graph_; }
    friend auto operator<=>(const RcGraph& a, const RcGraph& b) { return a.graph_ <=> b.graph_; }

private:
    Graph graph_;
    Permutation perm_;
};

// Insert a crossing at an empty place whose strands never intersect. The
// result is reduced, with w' = w t_{cd} covering w.
inline RcGraph add_crossing(const RcGraph& r, const Place& p)
{
    if (p.row <= 0 || p.col <= 0)
        throw std::invalid_argument("places need positive row and column");
    if (r.graph().contains(p))
        throw std::invalid_argument("place is occupied");
    Wiring wiring(r.graph(), p.row + p.col);
    int c = wiring.west_strand(p);
    int d = wiring.south_strand(p);
    if (!wiring.crossings_of(c, d).empty())
        throw std::invalid_argument("strands already cross; the result would not be reduced");
    RcGraph out(r.graph().with(p));
    detail::invariant(out.permutation() == r.permutation().times_transposition(std::min(c, d), std::max(c, d)),
                      "add_crossing changed the permutation by something other than t_{cd}");
    return out;
}

// Remove the unique crossing of strands c, d; requires the removal to drop
// the length by one.
inline std::pair<RcGraph, Place> remove_crossing_of(const RcGraph& r, int c, int d)
{
    if (c <= 0 || d <= 0 || c == d)
        throw std::invalid_argument("strand labels must be distinct positive integers");
    const Permutation& w = r.permutation();
    if (length(w.times_transposition(c, d)) != length(w) - 1)
        throw std::invalid_argument("removing the crossing of these strands does not drop the length");
    Wiring wiring(r.graph());
    std::vector<Place> crossings = wiring.crossings_of(c, d);
    detail::invariant(crossings.size() == 1, "strands of a reduced graph cross at most once");
    return {RcGraph(r.graph().without(crossings[0])), crossings[0]};
}

}  // namespace rcgraph

#endif
