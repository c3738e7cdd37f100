#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "binhopf/limits.hpp"
#include "binhopf/tree.hpp"

namespace binhopf {

namespace detail {

inline bool by_enc(const Tree& a, const Tree& b) { return a.enc() < b.enc(); }

/// levels[k] holds every tree with k leaves, sorted by enc.
inline std::vector<std::vector<Tree>> tree_levels(std::size_t n, const std::string& label)
{
    std::vector<std::vector<Tree>> levels(n + 1);
    if (n == 0)
        return levels;
    levels[1].push_back(Tree::leaf(label));
    for (std::size_t k = 2; k <= n; ++k) {
        for (std::size_t i = 1; i <= k / 2; ++i) {
            const auto& small = levels[i];
            const auto& large = levels[k - i];
            for (std::size_t a = 0; a < small.size(); ++a)
                for (std::size_t b = (i == k - i ? a : 0); b < large.size(); ++b)
                    levels[k].push_back(Tree::join(small[a], large[b]));
        }
        std::sort(levels[k].begin(), levels[k].end(), by_enc);
    }
    return levels;
}

} // namespace detail

/// Every isomorphism class of full binary trees with n leaves, all carrying
/// the same label, sorted by canonical encoding. The count is the
/// Wedderburn-Etherington number W_n.
inline std::vector<Tree> enumerate_trees(std::size_t n, const std::string& label = std::string(unlabelled),
                                         const Limits& limits = {})
{
    require_within(n, limits.max_tree_leaves, "enumerate_trees");
    if (n == 0)
        return {};
    return detail::tree_levels(n, label)[n];
}

/// Every unlabelled forest with n leaves in total, sorted by encoding.
inline std::vector<Forest> enumerate_forests(std::size_t n, const Limits& limits = {})
{
    require_within(n, limits.max_forest_leaves, "enumerate_forests");
    const auto levels = detail::tree_levels(n, std::string(unlabelled));
    // Trees in global (n_leaves, enc) order; multisets are built as
    // non-decreasing index sequences so each appears once.
    std::vector<Tree> pool;
    for (const auto& level : levels)
        pool.insert(pool.end(), level.begin(), level.end());

    std::vector<Forest> out;
    std::vector<Tree> current;
    auto extend = [&](auto&& self, std::size_t first, std::size_t remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (std::size_t i = first; i < pool.size(); ++i) {
            if (pool[i].n_leaves() > remaining)
                break;
            current.push_back(pool[i]);
            self(self, i, remaining - pool[i].n_leaves());
            current.pop_back();
        }
    };
    extend(extend, 0, n);
    std::sort(out.begin(), out.end(), [](const Forest& a, const Forest& b) { return a.enc() < b.enc(); });
    return out;
}

/// Every full binary tree whose leaves carry the given pairwise distinct
/// labels, one per leaf; there are (2n-3)!! of them. Built by inserting each
/// new leaf at every edge, ghost edge included, of the trees on the previous
/// labels.
inline std::vector<Tree> enumerate_labelled_trees(const std::vector<std::string>& labels, const Limits& limits = {})
{
    require_within(labels.size(), limits.max_tree_leaves, "enumerate_labelled_trees");
    if (labels.empty())
        return {};
    std::vector<Tree> current{Tree::leaf(labels.front())};
    for (std::size_t k = 1; k < labels.size(); ++k) {
        const Tree fresh = Tree::leaf(labels[k]);
        std::vector<Tree> next;
        for (const Tree& t : current)
            for (std::size_t e = 0; e < edge_slots(t); ++e)
                next.push_back(rebuild_by_edge(t, [&](std::size_t idx, const Tree& s) {
                    return idx == e ? Tree::join(s, fresh) : s;
                }));
        current = std::move(next);
    }
    std::sort(current.begin(), current.end(), detail::by_enc);
    return current;
}

/// Unlabelled comb C_n: C_1 is a leaf and C_n joins C_{n-1} with a leaf.
inline Tree comb_tree(std::size_t n)
{
    if (n == 0)
        throw BadIndex("comb tree needs at least one leaf");
    Tree t = Tree::dot();
    for (std::size_t k = 2; k <= n; ++k)
        t = Tree::join(t, Tree::dot());
    return t;
}

} // namespace binhopf
