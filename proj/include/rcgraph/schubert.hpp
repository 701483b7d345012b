#ifndef RCGRAPH_SCHUBERT_HPP
#define RCGRAPH_SCHUBERT_HPP

#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "rcgraph/errors.hpp"
#include "rcgraph/graph.hpp"
#include "rcgraph/permutation.hpp"

namespace rcgraph {

// Exponent vector of a monomial, trailing zeros trimmed.
using Exponent = std::vector<int>;

inline Exponent trimmed(Exponent e)
{
    while (!e.empty() && e.back() == 0)
        e.pop_back();
    return e;
}

// Integer-coefficient polynomial in x_1, x_2, ... as a term map. No zero
// coefficients are stored.
class SchubertPolynomial {
public:
    SchubertPolynomial() = default;

    static SchubertPolynomial one() { return monomial({}, 1); }

    static SchubertPolynomial monomial(Exponent e, long long c)
    {
        SchubertPolynomial p;
        p.add_term(std::move(e), c);
        return p;
    }

    const std::map<Exponent, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long long coeff(const Exponent& e) const
    {
        auto it = terms_.find(trimmed(e));
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(Exponent e, long long c)
    {
        if (c == 0)
            return;
        e = trimmed(std::move(e));
        auto [it, inserted] = terms_.emplace(std::move(e), c);
        if (!inserted && (it->second += c) == 0)
            terms_.erase(it);
    }

    friend SchubertPolynomial operator+(const SchubertPolynomial& p, const SchubertPolynomial& q)
    {
        SchubertPolynomial out = p;
        for (const auto& [e, c] : q.terms_)
            out.add_term(e, c);
        return out;
    }

    friend SchubertPolynomial operator-(const SchubertPolynomial& p, const SchubertPolynomial& q)
    {
        SchubertPolynomial out = p;
        for (const auto& [e, c] : q.terms_)
            out.add_term(e, -c);
        return out;
    }

    friend SchubertPolynomial operator*(const SchubertPolynomial& p, const SchubertPolynomial& q)
    {
        SchubertPolynomial out;
        for (const auto& [e1, c1] : p.terms_)
            for (const auto& [e2, c2] : q.terms_) {
                Exponent e = e1;
                if (e.size() < e2.size())
                    e.resize(e2.size(), 0);
                for (std::size_t i = 0; i < e2.size(); ++i)
                    e[i] += e2[i];
                out.add_term(std::move(e), c1 * c2);
            }
        return out;
    }

    friend SchubertPolynomial operator*(const SchubertPolynomial& p, long long c)
    {
        SchubertPolynomial out;
        for (const auto& [e, k] : p.terms_)
            out.add_term(e, k * c);
        return out;
    }

    friend bool operator==(const SchubertPolynomial&, const SchubertPolynomial&) = default;

private:
    std::map<Exponent, long long> terms_;
};

// Coefficients of an expansion in the Schubert basis.
class SchubertExpansion {
public:
    const std::map<Permutation, long long>& coeffs() const { return coeffs_; }

    long long coeff(const Permutation& u) const
    {
        auto it = coeffs_.find(u);
        return it == coeffs_.end() ? 0 : it->second;
    }

    void add(const Permutation& u, long long c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = coeffs_.emplace(u, c);
        if (!inserted && (it->second += c) == 0)
            coeffs_.erase(it);
    }

    friend bool operator==(const SchubertExpansion&, const SchubertExpansion&) = default;

private:
    std::map<Permutation, long long> coeffs_;
};

// All reduced subwords of W^n_0 whose permutation is w, as crossing sets.
// Depth-first search over staircase places in reading order; a place can be
// chosen only when its letter raises the length of the prefix (every prefix
// of a reduced word is reduced).
inline std::vector<RcGraph> enumerate_rcgraphs(const Permutation& w, int n)
{
    if (n < 1 || w.window() > n)
        throw std::invalid_argument("w is not contained in S_n");
    const int target_len = length(w);
    const std::vector<int> target = w.images(n);

    std::vector<Place> order;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = n - i; j >= 1; --j)
            order.push_back({i, j});

    std::vector<int> cur(n);
    std::iota(cur.begin(), cur.end(), 1);
    std::vector<Place> chosen;
    std::vector<RcGraph> out;

    auto rec = [&](auto&& self, std::size_t idx, int len) -> void {
        if (len == target_len) {
            if (cur == target)
                out.push_back(RcGraph::trusted(Graph(chosen), w));
            return;
        }
        if (target_len - len > static_cast<int>(order.size() - idx))
            return;
        const Place p = order[idx];
        const int k = p.row + p.col - 1;
        if (cur[k - 1] < cur[k]) {
            std::swap(cur[k - 1], cur[k]);
            chosen.push_back(p);
            self(self, idx + 1, len + 1);
            chosen.pop_back();
            std::swap(cur[k - 1], cur[k]);
        }
        self(self, idx + 1, len);
    };
    rec(rec, 0, 0);
    return out;
}

namespace detail {

inline SchubertPolynomial sum_of_monomials(const std::vector<RcGraph>& graphs)
{
    SchubertPolynomial p;
    for (const RcGraph& r : graphs)
        p.add_term(exponent(r.graph()), 1);
    return p;
}

}  // namespace detail

// Sum of x^R over RC(w). Independent of n once n covers the support of w;
// asserted by recomputing at n+1.
inline SchubertPolynomial schubert_polynomial(const Permutation& w, int n)
{
    SchubertPolynomial p = detail::sum_of_monomials(enumerate_rcgraphs(w, n));
    detail::invariant(p == detail::sum_of_monomials(enumerate_rcgraphs(w, n + 1)),
                      "Schubert polynomial changed between ambient n and n+1");
    return p;
}

// Sum over semistandard tableaux of shape lambda with entries at most r
// (weakly increasing rows, strictly increasing columns).
inline SchubertPolynomial schur_polynomial(const Partition& lambda, int r)
{
    if (r < 0)
        throw std::invalid_argument("variable count must be nonnegative");
    SchubertPolynomial p;
    std::vector<std::vector<int>> rows(lambda.rows());
    Exponent mult(r, 0);

    auto rec = [&](auto&& self, int row, int col) -> void {
        if (row == lambda.rows()) {
            p.add_term(mult, 1);
            return;
        }
        if (col > lambda.part(row + 1)) {
            self(self, row + 1, 1);
            return;
        }
        int lo = 1;
        if (col > 1)
            lo = std::max(lo, rows[row][col - 2]);
        if (row > 0 && lambda.part(row) >= col)
            lo = std::max(lo, rows[row - 1][col - 1] + 1);
        for (int v = lo; v <= r; ++v) {
            rows[row].resize(std::max<std::size_t>(rows[row].size(), col));
            rows[row][col - 1] = v;
            ++mult[v - 1];
            self(self, row, col + 1);
            --mult[v - 1];
        }
    };
    rec(rec, 0, 1);
    return p;
}

// Memoizes Schubert polynomials per permutation, each verified once by the
// n/n+1 stability recomputation. One cache per worker thread; no sharing.
class SchubertCache {
public:
    const SchubertPolynomial& schubert(const Permutation& w)
    {
        auto it = cache_.find(w);
        if (it == cache_.end())
            it = cache_.emplace(w, schubert_polynomial(w, std::max(1, w.window()))).first;
        return it->second;
    }

private:
    std::map<Permutation, SchubertPolynomial> cache_;
};

// Greedy expansion over the Schubert basis: repeatedly strip the
// lexicographically smallest exponent a, which equals code(u) for a unique u
// whose polynomial has x^a with coefficient one. Self-verifying: the result
// is multiplied back and compared against the input.
inline SchubertExpansion expand_in_schubert_basis(const SchubertPolynomial& p, SchubertCache& cache)
{
    SchubertExpansion out;
    SchubertPolynomial rem = p;
    int guard = 0;
    while (!rem.is_zero()) {
        detail::invariant(++guard <= 1000000, "Schubert expansion failed to terminate");
        const auto& [e, c] = *rem.terms().begin();
        Permutation u = permutation_from_code(e);
        rem = rem - cache.schubert(u) * c;
        out.add(u, c);
    }
    SchubertPolynomial back;
    for (const auto& [u, c] : out.coeffs())
        back = back + cache.schubert(u) * c;
    detail::invariant(back == p, "Schubert expansion does not reproduce its input");
    return out;
}

inline SchubertExpansion expand_in_schubert_basis(const SchubertPolynomial& p)
{
    SchubertCache cache;
    return expand_in_schubert_basis(p, cache);
}

// Brute-force LR coefficients: expand the product of the two Schubert
// polynomials. All coefficients come out as positive integers on homogeneous
// components of degree l(w) + l(v).
inline SchubertExpansion lr_oracle(const Permutation& w, const Permutation& v, SchubertCache& cache)
{
    SchubertExpansion out = expand_in_schubert_basis(cache.schubert(w) * cache.schubert(v), cache);
    for (const auto& [u, c] : out.coeffs()) {
        detail::invariant(c >= 1, "LR coefficients must be positive");
        detail::invariant(length(u) == length(w) + length(v),
                          "LR expansion is not homogeneous of degree l(w)+l(v)");
    }
    return out;
}

inline SchubertExpansion lr_oracle(const Permutation& w, const Permutation& v)
{
    SchubertCache cache;
    return lr_oracle(w, v, cache);
}

}  // namespace rcgraph

#endif
