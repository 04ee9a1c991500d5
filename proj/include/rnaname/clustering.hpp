#pragma once

#include <rnaname/error.hpp>
#include <rnaname/matrix.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace rnaname {

// One agglomeration step. Node ids below leaf_count() are leaves; merge k
// creates node leaf_count() + k.
struct Merge {
    std::size_t left;
    std::size_t right;
    double height;
    std::size_t size;

    friend bool operator==(const Merge&, const Merge&) = default;
};

class Dendrogram {
public:
    Dendrogram() = default;

    Dendrogram(std::size_t leaf_count, std::vector<Merge> merges)
        : leaves_(leaf_count), merges_(std::move(merges))
    {
        if (leaves_ == 0 || merges_.size() + 1 != leaves_)
            throw Error(ErrorKind::invariant_violation, "dendrogram over n leaves needs n - 1 merges");
        std::vector<bool> used(node_count(), false);
        std::vector<std::size_t> sizes(node_count(), 1);
        for (std::size_t k = 0; k < merges_.size(); ++k) {
            const std::size_t id = leaves_ + k;
            for (std::size_t child : {merges_[k].left, merges_[k].right}) {
                if (child >= id || used[child])
                    throw Error(ErrorKind::invariant_violation, "merge " + std::to_string(k) + " has an invalid child");
                used[child] = true;
            }
            sizes[id] = sizes[merges_[k].left] + sizes[merges_[k].right];
            if (merges_[k].size != sizes[id])
                throw Error(ErrorKind::invariant_violation, "merge " + std::to_string(k) + " has a wrong size");
        }
    }

    std::size_t leaf_count() const noexcept { return leaves_; }
    std::size_t node_count() const noexcept { return 2 * leaves_ - 1; }
    std::size_t root() const noexcept { return node_count() - 1; }
    bool is_leaf(std::size_t node) const noexcept { return node < leaves_; }

    const std::vector<Merge>& merges() const noexcept { return merges_; }
    const Merge& merge_of(std::size_t node) const { return merges_[node - leaves_]; }

    // Left-to-right leaf order with no children flipped.
    std::vector<std::size_t> natural_order() const
    {
        std::vector<std::size_t> order;
        order.reserve(leaves_);
        std::vector<std::size_t> stack{root()};
        while (!stack.empty()) {
            const std::size_t node = stack.back();
            stack.pop_back();
            if (is_leaf(node)) {
                order.push_back(node);
            } else {
                stack.push_back(merge_of(node).right);
                stack.push_back(merge_of(node).left);
            }
        }
        return order;
    }

    friend bool operator==(const Dendrogram&, const Dendrogram&) = default;

private:
    std::size_t leaves_ = 0;
    std::vector<Merge> merges_;
};

template <typename T>
void require_distance_matrix(const SquareMatrix<T>& d)
{
    if (d.size() == 0)
        throw Error(ErrorKind::bad_matrix, "distance matrix is empty");
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d(i, i) != T{})
            throw Error(ErrorKind::bad_matrix, "distance matrix diagonal must be zero");
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d(i, j) != d(j, i))
                throw Error(ErrorKind::bad_matrix,
                            "distance matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
}

namespace detail {

// Mean inter-cluster distance kept as (sum of pairwise distances, pair count).
// Integral distances are compared exactly by cross-multiplication.
template <typename T>
struct Linkage {
    using Sum = std::conditional_t<std::is_integral_v<T>, std::int64_t, double>;

    Sum sum{};
    std::int64_t pairs = 0;

    double mean() const noexcept { return static_cast<double>(sum) / static_cast<double>(pairs); }

    friend bool operator<(const Linkage& x, const Linkage& y) noexcept
    {
        if constexpr (std::is_integral_v<T>)
            return static_cast<__int128>(x.sum) * y.pairs < static_cast<__int128>(y.sum) * x.pairs;
        else
            return x.sum / static_cast<double>(x.pairs) < y.sum / static_cast<double>(y.pairs);
    }
};

} // namespace detail

// Average-linkage (UPGMA) agglomeration. Each step merges the pair of
// clusters with the smallest mean inter-cluster distance; ties go to the
// lowest (i, j) pair where a cluster is identified by its smallest leaf
// index. The cluster with the smaller leaf index becomes the left child.
template <typename T>
Dendrogram average_linkage_cluster(const SquareMatrix<T>& distances)
{
    require_distance_matrix(distances);
    using Link = detail::Linkage<T>;
    using Sum = typename Link::Sum;

    const std::size_t n = distances.size();
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

    SquareMatrix<Sum> sums(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            sums(i, j) = static_cast<Sum>(distances(i, j));

    std::vector<std::size_t> size(n, 1);
    std::vector<std::size_t> node(n);
    std::vector<bool> active(n, true);
    for (std::size_t i = 0; i < n; ++i)
        node[i] = i;

    const auto link = [&](std::size_t i, std::size_t j) {
        return Link{sums(i, j), static_cast<std::int64_t>(size[i] * size[j])};
    };

    // Nearest active partner j > i of every slot i, lowest j on ties.
    std::vector<std::size_t> nn(n, none);
    const auto refresh = [&](std::size_t i) {
        nn[i] = none;
        for (std::size_t j = i + 1; j < n; ++j)
            if (active[j] && (nn[i] == none || link(i, j) < link(i, nn[i])))
                nn[i] = j;
    };
    for (std::size_t i = 0; i < n; ++i)
        refresh(i);

    std::vector<Merge> merges;
    merges.reserve(n - 1);
    for (std::size_t step = 0; step + 1 < n; ++step) {
        std::size_t i = none;
        for (std::size_t k = 0; k < n; ++k)
            if (active[k] && nn[k] != none && (i == none || link(k, nn[k]) < link(i, nn[i])))
                i = k;
        const std::size_t j = nn[i];

        merges.push_back(Merge{node[i], node[j], link(i, j).mean(), size[i] + size[j]});
        node[i] = n + step;
        size[i] += size[j];
        active[j] = false;
        for (std::size_t k = 0; k < n; ++k) {
            if (!active[k] || k == i)
                continue;
            sums(i, k) += sums(j, k);
            sums(k, i) = sums(i, k);
        }

        for (std::size_t k = 0; k < j; ++k) {
            if (!active[k] || k == i)
                continue;
            if (nn[k] == i || nn[k] == j) {
                refresh(k);
            } else if (k < i) {
                const Link candidate = link(k, i);
                const Link current = link(k, nn[k]);
                if (candidate < current || (!(current < candidate) && i < nn[k]))
                    nn[k] = i;
            }
        }
        refresh(i);
    }
    return Dendrogram(n, std::move(merges));
}

} // namespace rnaname
