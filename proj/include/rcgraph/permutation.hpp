#ifndef RCGRAPH_PERMUTATION_HPP
#define RCGRAPH_PERMUTATION_HPP

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rcgraph/errors.hpp"

namespace rcgraph {

// A permutation of {1,2,...} fixing all but finitely many integers, stored in
// one-line notation with trailing fixed points trimmed. Trimming makes
// equality independent of the window a caller happened to build it in.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images))
    {
        validate();
        trim();
    }

    static Permutation identity() { return Permutation(); }

    // t_{ab}: exchanges the values a and b.
    static Permutation transposition(int a, int b)
    {
        if (a <= 0 || b <= 0 || a == b)
            throw std::invalid_argument("transposition needs two distinct positive integers");
        if (a > b)
            std::swap(a, b);
        std::vector<int> img(b);
        std::iota(img.begin(), img.end(), 1);
        std::swap(img[a - 1], img[b - 1]);
        return Permutation(std::move(img));
    }

    // s_i = t_{i,i+1}
    static Permutation simple(int i) { return transposition(i, i + 1); }

    int operator()(int i) const
    {
        if (i <= 0)
            throw std::invalid_argument("permutations act on positive integers");
        return i <= window() ? images_[i - 1] : i;
    }

    // Size of the stored window. Every i > window() is a fixed point, and
    // position window() itself is moved (0 for the identity).
    int window() const { return static_cast<int>(images_.size()); }

    bool is_identity() const { return images_.empty(); }

    const std::vector<int>& images() const { return images_; }

    // One-line notation padded with fixed points to length n.
    std::vector<int> images(int n) const
    {
        if (n < window())
            throw std::invalid_argument("window too small for this permutation");
        std::vector<int> img = images_;
        for (int i = window() + 1; i <= n; ++i)
            img.push_back(i);
        return img;
    }

    // (uv)(i) = u(v(i))
    friend Permutation operator*(const Permutation& u, const Permutation& v)
    {
        int n = std::max(u.window(), v.window());
        std::vector<int> img(n);
        for (int i = 1; i <= n; ++i)
            img[i - 1] = u(v(i));
        return Permutation(std::move(img));
    }

    Permutation inverse() const
    {
        std::vector<int> img(window());
        for (int i = 1; i <= window(); ++i)
            img[images_[i - 1] - 1] = i;
        return Permutation(std::move(img));
    }

    // Right multiplication by t_{cd}: exchanges the entries at positions c, d.
    Permutation times_transposition(int c, int d) const
    {
        if (c <= 0 || d <= 0 || c == d)
            throw std::invalid_argument("transposition needs two distinct positive integers");
        if (c > d)
            std::swap(c, d);
        std::vector<int> img = images(std::max(d, window()));
        std::swap(img[c - 1], img[d - 1]);
        return Permutation(std::move(img));
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    void validate() const
    {
        std::vector<char> seen(images_.size(), 0);
        for (int x : images_) {
            if (x <= 0 || x > static_cast<int>(images_.size()) || seen[x - 1])
                throw std::invalid_argument("one-line notation is not a bijection of {1..n}");
            seen[x - 1] = 1;
        }
    }

    void trim()
    {
        while (!images_.empty() && images_.back() == static_cast<int>(images_.size()))
            images_.pop_back();
    }

    std::vector<int> images_;
};

// l(w) = #{(i,j) : i < j, w(i) > w(j)}
inline int length(const Permutation& w)
{
    const auto& img = w.images();
    int n = w.window();
    int inv = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (img[i] > img[j])
                ++inv;
    return inv;
}

inline std::vector<int> descents(const Permutation& w)
{
    std::vector<int> out;
    for (int i = 1; i < w.window(); ++i)
        if (w(i) > w(i + 1))
            out.push_back(i);
    return out;
}

// l(w t_{cd}) = l(w) + 1, tested via: w(c) < w(d) and no c < i < d with
// w(c) < w(i) < w(d).
inline bool is_covering(const Permutation& w, int c, int d)
{
    if (!(0 < c && c < d))
        throw std::invalid_argument("is_covering requires 0 < c < d");
    bool covering = w(c) < w(d);
    for (int i = c + 1; covering && i < d; ++i)
        if (w(c) < w(i) && w(i) < w(d))
            covering = false;
#if RCGRAPH_EXTRA_CHECKS
    detail::invariant(covering == (length(w.times_transposition(c, d)) == length(w) + 1),
                      "covering criterion disagrees with direct length computation");
#endif
    return covering;
}

// Weakly decreasing positive parts; trailing zeros in the input are dropped,
// so (2,0) and (2) denote the same partition.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (k > 0 && parts_[k] > parts_[k - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Number of boxes.
    int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // 1-based; zero beyond the last part.
    int part(int j) const
    {
        if (j <= 0)
            throw std::invalid_argument("partition parts are indexed from 1");
        return j <= rows() ? parts_[j - 1] : 0;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// w(i) < w(i+1) for all i != r.
inline bool is_r_shuffle(const Permutation& w, int r)
{
    for (int i = 1; i < w.window(); ++i)
        if (i != r && w(i) > w(i + 1))
            return false;
    return true;
}

// w(i) < w(i+1) for all i > r.
inline bool is_r_semi_shuffle(const Permutation& w, int r)
{
    for (int i = r + 1; i < w.window(); ++i)
        if (w(i) > w(i + 1))
            return false;
    return true;
}

// The unique r-shuffle with lambda_j = v(r+1-j) - r - 1 + j.
inline Permutation shuffle_from_partition(const Partition& lambda, int r)
{
    if (r < 0 || lambda.rows() > r)
        throw std::invalid_argument("shuffle_from_partition requires at most r parts");
    int n = std::max(r, r + lambda.part(1));
    std::vector<int> img(r);
    std::vector<char> used(n, 0);
    for (int i = 1; i <= r; ++i) {
        img[i - 1] = lambda.part(r + 1 - i) + i;
        used[img[i - 1] - 1] = 1;
    }
    for (int x = 1; x <= n; ++x)
        if (!used[x - 1])
            img.push_back(x);
    return Permutation(std::move(img));
}

inline Partition partition_of_shuffle(const Permutation& v, int r)
{
    if (r < 0 || !is_r_shuffle(v, r))
        throw std::invalid_argument("permutation is not an r-shuffle");
    std::vector<int> parts;
    for (int j = 1; j <= r; ++j)
        parts.push_back(v(r + 1 - j) - r - 1 + j);
    Partition lambda(std::move(parts));
#if RCGRAPH_EXTRA_CHECKS
    detail::invariant(shuffle_from_partition(lambda, r) == v,
                      "partition_of_shuffle does not invert shuffle_from_partition");
#endif
    return lambda;
}

// Lehmer code: c_i = #{j > i : w(j) < w(i)}, trailing zeros trimmed.
inline std::vector<int> code(const Permutation& w)
{
    int n = w.window();
    std::vector<int> c(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(j) < w(i))
                ++c[i - 1];
    while (!c.empty() && c.back() == 0)
        c.pop_back();
    return c;
}

// Inverse of code(): w(i) is the (c_i+1)-st smallest unused value.
inline Permutation permutation_from_code(const std::vector<int>& c)
{
    int n = static_cast<int>(c.size());
    int maxc = 0;
    for (int x : c) {
        if (x < 0)
            throw std::invalid_argument("code entries must be nonnegative");
        maxc = std::max(maxc, x);
    }
    int m = n + maxc + 1;
    std::vector<int> pool(m);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> img;
    for (int i = 0; i < m; ++i) {
        int ci = i < n ? c[i] : 0;
        detail::invariant(ci < static_cast<int>(pool.size()), "code entry exceeds remaining pool");
        img.push_back(pool[ci]);
        pool.erase(pool.begin() + ci);
    }
    Permutation w{std::move(img)};
    detail::invariant([&] {
        auto back = code(w);
        back.resize(std::max(back.size(), c.size()), 0);
        auto in = c;
        in.resize(back.size(), 0);
        return back == in;
    }(), "permutation_from_code does not invert code");
    return w;
}

// (p, q) with lambda = (p, 1^{q-1}); rows and columns count as hooks.
inline std::optional<std::pair<int, int>> hook_shape(const Partition& lambda)
{
    if (lambda.empty())
        return std::nullopt;
    for (int j = 2; j <= lambda.rows(); ++j)
        if (lambda.part(j) != 1)
            return std::nullopt;
    return std::make_pair(lambda.part(1), lambda.rows());
}

// All of S_n, in lexicographic one-line order.
inline std::vector<Permutation> all_permutations(int n)
{
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace rcgraph

#endif
