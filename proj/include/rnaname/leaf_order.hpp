#pragma once

// Optimal leaf ordering of a binary dendrogram.
//
// Among the 2^(n-1) leaf orders reachable by swapping the children of
// internal nodes, find one minimising the summed distance between adjacent
// leaves. This is the subtree-pair dynamic program of Bar-Joseph, Gifford and
// Jaakkola: for every internal node v and every pair of leaves (u, w) whose
// lowest common ancestor is v, best(u, w) is the cheapest order of v's leaves
// that starts at u and ends at w. Each leaf pair has exactly one lowest common
// ancestor, so all values fit one n x n table. Both inner minimisations use
// the published early-termination bound (candidates sorted by partial
// cost, stop once the partial cost plus the smallest possible remainder
// cannot improve).

#include <rnaname/clustering.hpp>
#include <rnaname/error.hpp>
#include <rnaname/matrix.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <type_traits>
#include <utility>
#include <vector>

namespace rnaname {

template <typename T>
using OrderCost = std::conditional_t<std::is_integral_v<T>, std::int64_t, double>;

template <typename T>
OrderCost<T> order_cost(const std::vector<std::size_t>& order, const SquareMatrix<T>& d)
{
    OrderCost<T> total{};
    for (std::size_t i = 1; i < order.size(); ++i)
        total += static_cast<OrderCost<T>>(d(order[i - 1], order[i]));
    return total;
}

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

namespace detail {

struct Span {
    std::size_t begin;
    std::size_t end;
};

template <typename T>
class LeafOrderSolver {
public:
    using Cost = OrderCost<T>;

    LeafOrderSolver(const Dendrogram& tree, const SquareMatrix<T>& d)
        : tree_(tree), n_(tree.leaf_count()), natural_(tree.natural_order()), span_(tree.node_count()),
          split_(tree.node_count(), 0), dist_(n_), best_(n_)
    {
        std::vector<std::size_t> pos(n_);
        for (std::size_t p = 0; p < n_; ++p)
            pos[natural_[p]] = p;
        for (std::size_t leaf = 0; leaf < n_; ++leaf)
            span_[leaf] = {pos[leaf], pos[leaf] + 1};
        for (std::size_t k = 0; k < tree.merges().size(); ++k) {
            const Merge& m = tree.merges()[k];
            span_[n_ + k] = {span_[m.left].begin, span_[m.right].end};
            split_[n_ + k] = span_[m.left].end;
        }
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                dist_(i, j) = static_cast<Cost>(d(natural_[i], natural_[j]));
    }

    std::vector<std::size_t> solve(const ProgressFn& progress)
    {
        const std::size_t total = tree_.merges().size();
        for (std::size_t k = 0; k < total; ++k) {
            fill_node(n_ + k);
            if (progress)
                progress(k + 1, total);
        }

        std::vector<std::size_t> out;
        out.reserve(n_);
        if (n_ == 1) {
            out.push_back(natural_[0]);
            return out;
        }

        const std::size_t root = tree_.root();
        const std::size_t mid = split_[root];
        std::size_t first = 0, last = 0;
        bool found = false;
        Cost best{};
        for (std::size_t p = span_[root].begin; p < mid; ++p) {
            for (std::size_t q = mid; q < span_[root].end; ++q) {
                const Cost c = best_(p, q);
                // Either orientation has the same cost; start from the smaller leaf id.
                std::size_t a = p, b = q;
                if (natural_[b] < natural_[a])
                    std::swap(a, b);
                if (!found || c < best ||
                    (c == best && std::pair(natural_[a], natural_[b]) < std::pair(natural_[first], natural_[last]))) {
                    best = c;
                    first = a;
                    last = b;
                    found = true;
                }
            }
        }
        emit(root, first, last, out);
        return out;
    }

private:
    // Leaves that may sit at the inner end of child `node` when `end` is its outer end.
    Span opposite(std::size_t node, std::size_t end) const
    {
        if (tree_.is_leaf(node))
            return {end, end + 1};
        const std::size_t mid = split_[node];
        return end < mid ? Span{mid, span_[node].end} : Span{span_[node].begin, mid};
    }

    static std::vector<std::size_t> iota(Span s)
    {
        std::vector<std::size_t> v(s.end - s.begin);
        std::iota(v.begin(), v.end(), s.begin);
        return v;
    }

    void fill_node(std::size_t v)
    {
        const Merge& m = tree_.merge_of(v);
        const std::size_t lb = span_[v].begin, mid = split_[v], re = span_[v].end;
        constexpr Cost inf = std::numeric_limits<Cost>::max();

        // Smallest distance from each right-side leaf k to each possible inner set of the left child.
        const auto min_dist_to = [&](Span s) {
            std::vector<Cost> out(re - mid, inf);
            for (std::size_t k = mid; k < re; ++k)
                for (std::size_t x = s.begin; x < s.end; ++x)
                    out[k - mid] = std::min(out[k - mid], dist_(x, k));
            return out;
        };
        // Cheapest inner-end cost for each right-side outer end w.
        std::vector<Cost> min_inner(re - mid, inf);
        for (std::size_t w = mid; w < re; ++w) {
            const Span s = opposite(m.right, w);
            for (std::size_t k = s.begin; k < s.end; ++k)
                min_inner[w - mid] = std::min(min_inner[w - mid], best_(k, w));
        }

        std::vector<Cost> lower_left_a, lower_left_b;
        Span left_a{lb, lb + 1}, left_b{lb, lb + 1};
        if (tree_.is_leaf(m.left)) {
            lower_left_a = min_dist_to(left_a);
        } else {
            left_a = {split_[m.left], mid}; // inner set when u is in the first grandchild
            left_b = {lb, split_[m.left]};
            lower_left_a = min_dist_to(left_a);
            lower_left_b = min_dist_to(left_b);
        }

        std::vector<Span> right_sets;
        if (tree_.is_leaf(m.right))
            right_sets = {Span{mid, re}};
        else
            right_sets = {Span{mid, split_[m.right]}, Span{split_[m.right], re}};

        std::vector<Cost> via(re - mid);
        std::vector<std::size_t> inner;
        std::vector<std::vector<std::size_t>> sorted_right(right_sets.size());
        for (std::size_t u = lb; u < mid; ++u) {
            const Span s = opposite(m.left, u);
            const std::vector<Cost>& lower =
                (tree_.is_leaf(m.left) || s.begin == left_a.begin) ? lower_left_a : lower_left_b;
            inner = iota(s);
            std::sort(inner.begin(), inner.end(),
                      [&](std::size_t x, std::size_t y) { return best_(u, x) < best_(u, y); });

            // via[k]: cheapest order of the left child from u ending next to k.
            for (std::size_t k = mid; k < re; ++k) {
                Cost best = inf;
                for (std::size_t x : inner) {
                    if (best != inf && best_(u, x) + lower[k - mid] >= best)
                        break;
                    best = std::min(best, best_(u, x) + dist_(x, k));
                }
                via[k - mid] = best;
            }

            for (std::size_t r = 0; r < right_sets.size(); ++r) {
                sorted_right[r] = iota(right_sets[r]);
                std::sort(sorted_right[r].begin(), sorted_right[r].end(),
                          [&](std::size_t x, std::size_t y) { return via[x - mid] < via[y - mid]; });
            }

            for (std::size_t w = mid; w < re; ++w) {
                const Span s = opposite(m.right, w);
                const auto& candidates =
                    sorted_right[right_sets.size() == 1 || s.begin == right_sets[0].begin ? 0 : 1];
                Cost best = inf;
                for (std::size_t k : candidates) {
                    if (best != inf && via[k - mid] + min_inner[w - mid] >= best)
                        break;
                    best = std::min(best, via[k - mid] + best_(k, w));
                }
                best_(u, w) = best;
                best_(w, u) = best;
            }
        }
    }

    // Appends the optimal order of `node` running from leaf position `from` to `to`.
    void emit(std::size_t node, std::size_t from, std::size_t to, std::vector<std::size_t>& out) const
    {
        if (tree_.is_leaf(node)) {
            out.push_back(natural_[from]);
            return;
        }
        const Merge& m = tree_.merge_of(node);
        const std::size_t mid = split_[node];
        const bool forward = from < mid;
        const std::size_t p = forward ? from : to; // outer end inside the left child
        const std::size_t q = forward ? to : from; // outer end inside the right child

        const Span ls = opposite(m.left, p);
        const Span rs = opposite(m.right, q);
        std::size_t bm = ls.begin, bk = rs.begin;
        bool found = false;
        Cost best{};
        for (std::size_t x = ls.begin; x < ls.end; ++x) {
            for (std::size_t k = rs.begin; k < rs.end; ++k) {
                const Cost c = (best_(p, x) + dist_(x, k)) + best_(k, q);
                if (!found || c < best ||
                    (c == best && std::pair(natural_[x], natural_[k]) < std::pair(natural_[bm], natural_[bk]))) {
                    best = c;
                    bm = x;
                    bk = k;
                    found = true;
                }
            }
        }
        if (forward) {
            emit(m.left, p, bm, out);
            emit(m.right, bk, q, out);
        } else {
            emit(m.right, q, bk, out);
            emit(m.left, bm, p, out);
        }
    }

    const Dendrogram& tree_;
    std::size_t n_;
    std::vector<std::size_t> natural_;
    std::vector<Span> span_;
    std::vector<std::size_t> split_;
    SquareMatrix<Cost> dist_; // indexed by natural-order position
    SquareMatrix<Cost> best_; // indexed by natural-order position
};

} // namespace detail

// Returns a leaf order reachable from `tree` by child swaps that minimises
// the summed adjacent distance. Among equal-cost orders the one starting at
// the smallest leaf id is returned; remaining ties are broken at each node
// by the smallest (inner-left, inner-right) leaf ids.
template <typename T>
std::vector<std::size_t> optimal_leaf_order(const Dendrogram& tree, const SquareMatrix<T>& d,
                                            const ProgressFn& progress = {})
{
    if (d.size() != tree.leaf_count())
        throw Error(ErrorKind::bad_matrix, "distance matrix does not match the dendrogram's leaves");
    return detail::LeafOrderSolver<T>(tree, d).solve(progress);
}

} // namespace rnaname
