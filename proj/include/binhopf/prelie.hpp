#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "binhopf/limits.hpp"
#include "binhopf/linear.hpp"
#include "binhopf/tree.hpp"

namespace binhopf {

/// Edge of a forest: component index and preorder edge index within that
/// component, 0 being the ghost edge above its root.
struct EdgeRef {
    std::size_t component = 0;
    std::size_t edge = 0;

    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Splits edge `edge` of t with a new vertex and hangs s from it. The ghost
/// edge 0 gives the merge (t s).
inline Tree insert_at_edge(const Tree& t, std::size_t edge, const Tree& s)
{
    if (edge >= edge_slots(t))
        throw BadIndex("edge " + std::to_string(edge) + " out of range for a tree with " +
                       std::to_string(edge_slots(t)) + " edge slots");
    return rebuild_by_edge(t, [&](std::size_t idx, const Tree& sub) { return idx == edge ? Tree::join(sub, s) : sub; });
}

/// t <| s: insertion of s at every edge of t, ghost edge included.
inline LinComb prelie(const Tree& t, const Tree& s)
{
    LinComb out;
    for (std::size_t e = 0; e < edge_slots(t); ++e)
        out.add(single(insert_at_edge(t, e, s)), 1);
    return out;
}

/// Assignment of the trees of an inserted forest to edges of a base forest.
/// Copies of identical trees are distinguished by their index in `inserted`.
/// An unassigned entry means the tree stays a free component (the e0 target).
struct Graft {
    Forest base;
    std::vector<Tree> inserted;
    std::vector<std::optional<EdgeRef>> assignment;
    /// Per targeted edge, inserted indices read from the edge's source down to its target.
    std::map<EdgeRef, std::vector<std::size_t>> orders;
};

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > UINT64_MAX / a)
        return UINT64_MAX;
    return a * b;
}

inline std::size_t total_edge_slots(const Forest& base)
{
    std::size_t slots = 0;
    for (const Tree& t : base.trees())
        slots += edge_slots(t);
    return slots;
}

inline void guard_graft_count(const Forest& base, std::size_t inserted, bool allow_skip, const Limits& limits)
{
    const std::uint64_t slots = total_edge_slots(base);
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < inserted; ++i)
        count = saturating_mul(count, slots + i + (allow_skip ? 1 : 0));
    if (count > limits.max_grafts)
        throw ResourceLimit("graft enumeration of " + std::to_string(inserted) + " trees into " +
                            std::to_string(slots) + " edges exceeds " + std::to_string(limits.max_grafts));
}

/// Visits every placement. `lists[s]` holds the ordered inserted indices on
/// global slot s; `skipped` flags trees left free.
template<class Visit>
void for_each_placement(std::size_t slots, std::size_t inserted, bool allow_skip, Visit&& visit)
{
    std::vector<std::vector<std::size_t>> lists(slots);
    std::vector<bool> skipped(inserted, false);
    auto place = [&](auto&& self, std::size_t i) -> void {
        if (i == inserted) {
            visit(static_cast<const std::vector<std::vector<std::size_t>>&>(lists),
                  static_cast<const std::vector<bool>&>(skipped));
            return;
        }
        if (allow_skip) {
            skipped[i] = true;
            self(self, i + 1);
            skipped[i] = false;
        }
        for (std::size_t s = 0; s < slots; ++s) {
            auto& list = lists[s];
            for (std::size_t pos = 0; pos <= list.size(); ++pos) {
                list.insert(list.begin() + static_cast<std::ptrdiff_t>(pos), i);
                self(self, i + 1);
                list.erase(list.begin() + static_cast<std::ptrdiff_t>(pos));
            }
        }
    };
    place(place, 0);
}

inline Forest placement_outcome(const Forest& base, const std::vector<Tree>& inserted,
                                const std::vector<std::vector<std::size_t>>& lists, const std::vector<bool>& skipped)
{
    std::vector<Tree> components;
    components.reserve(base.size() + inserted.size());
    std::size_t offset = 0;
    for (const Tree& t : base.trees()) {
        components.push_back(rebuild_by_edge(t, [&](std::size_t idx, const Tree& sub) {
            const auto& list = lists[offset + idx];
            Tree out = sub;
            for (auto it = list.rbegin(); it != list.rend(); ++it)
                out = Tree::join(out, inserted[*it]);
            return out;
        }));
        offset += edge_slots(t);
    }
    for (std::size_t i = 0; i < inserted.size(); ++i)
        if (skipped[i])
            components.push_back(inserted[i]);
    return Forest(std::move(components));
}

inline std::vector<EdgeRef> slot_table(const Forest& base)
{
    std::vector<EdgeRef> table;
    for (std::size_t c = 0; c < base.size(); ++c)
        for (std::size_t e = 0; e < edge_slots(base.trees()[c]); ++e)
            table.push_back({c, e});
    return table;
}

} // namespace detail

/// All grafts of the trees of `inserted` into `base`, ghost edges of every
/// component included, plus the free target when `allow_skip`. Each tree may
/// share an edge with others in any linear order. Identical inserted trees are
/// not deduplicated.
inline std::vector<Graft> enumerate_grafts(const Forest& base, const Forest& inserted, bool allow_skip,
                                           const Limits& limits = {})
{
    detail::guard_graft_count(base, inserted.size(), allow_skip, limits);
    const auto table = detail::slot_table(base);
    std::vector<Graft> out;
    detail::for_each_placement(table.size(), inserted.size(), allow_skip, [&](const auto& lists, const auto&) {
        Graft g{base, inserted.trees(), std::vector<std::optional<EdgeRef>>(inserted.size()), {}};
        for (std::size_t s = 0; s < lists.size(); ++s) {
            if (lists[s].empty())
                continue;
            g.orders.emplace(table[s], lists[s]);
            for (std::size_t i : lists[s])
                g.assignment[i] = table[s];
        }
        out.push_back(std::move(g));
    });
    return out;
}

/// Forest produced by a graft: each targeted edge becomes a descending ladder
/// of new vertices, one per inserted tree in order; free trees are appended.
inline Forest graft_outcome(const Graft& g)
{
    const auto table = detail::slot_table(g.base);
    std::vector<std::vector<std::size_t>> lists(table.size());
    std::vector<bool> skipped(g.inserted.size(), true);
    for (std::size_t s = 0; s < table.size(); ++s) {
        auto it = g.orders.find(table[s]);
        if (it == g.orders.end())
            continue;
        lists[s] = it->second;
        for (std::size_t i : it->second) {
            if (i >= g.inserted.size())
                throw BadIndex("graft order names inserted tree " + std::to_string(i));
            skipped[i] = false;
        }
    }
    return detail::placement_outcome(g.base, g.inserted, lists, skipped);
}

/// "(component,edge)←[t1,t2]" per targeted edge, then free trees as "e0←[...]".
inline std::string to_string(const Graft& g)
{
    std::string out;
    auto names = [&](const std::vector<std::size_t>& idx) {
        std::string s = "[";
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (k > 0)
                s += ",";
            s += to_string(g.inserted[idx[k]]);
        }
        return s + "]";
    };
    for (const auto& [edge, order] : g.orders) {
        if (!out.empty())
            out += " ";
        out += "(" + std::to_string(edge.component) + "," + std::to_string(edge.edge) + ")←" + names(order);
    }
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < g.assignment.size(); ++i)
        if (!g.assignment[i])
            free.push_back(i);
    if (!free.empty()) {
        if (!out.empty())
            out += " ";
        out += "e0←" + names(free);
    }
    return out.empty() ? "identity" : out;
}

namespace detail {

inline LinComb sum_of_grafts(const Forest& a, const Forest& b, bool allow_skip, const Limits& limits)
{
    guard_graft_count(a, b.size(), allow_skip, limits);
    const std::size_t slots = total_edge_slots(a);
    std::map<Forest, std::uint64_t> counts;
    for_each_placement(slots, b.size(), allow_skip, [&](const auto& lists, const auto& skipped) {
        ++counts[placement_outcome(a, b.trees(), lists, skipped)];
    });
    LinComb out;
    for (const auto& [f, n] : counts)
        out.add(f, Rational(n));
    return out;
}

} // namespace detail

/// Simultaneous grafting A <| B: every tree of B goes into some edge of A.
inline LinComb triangle_monomials(const Forest& a, const Forest& b, const Limits& limits = {})
{
    return detail::sum_of_grafts(a, b, false, limits);
}

inline LinComb triangle(const LinComb& a, const LinComb& b, const Limits& limits = {})
{
    LinComb out;
    for (const auto& [fa, ca] : a)
        for (const auto& [fb, cb] : b)
            out.add_scaled(triangle_monomials(fa, fb, limits), ca * cb);
    return out;
}

/// A * B = sum over shuffle splits of (A <| B') B''; on monomials this is the
/// sum over grafts where trees of B may stay free.
inline LinComb star_monomials(const Forest& a, const Forest& b, const Limits& limits = {})
{
    return detail::sum_of_grafts(a, b, true, limits);
}

inline LinComb star(const LinComb& a, const LinComb& b, const Limits& limits = {})
{
    LinComb out;
    for (const auto& [fa, ca] : a)
        for (const auto& [fb, cb] : b)
            out.add_scaled(star_monomials(fa, fb, limits), ca * cb);
    return out;
}

/// (a <| b) <| c - a <| (b <| c), with <| extended bilinearly to forests.
inline LinComb associator(const LinComb& a, const LinComb& b, const LinComb& c)
{
    return triangle(triangle(a, b), c) - triangle(a, triangle(b, c));
}

inline LinComb lie_bracket(const LinComb& a, const LinComb& b) { return triangle(a, b) - triangle(b, a); }

/// Sum over index subsets I of the components: x_I (x) x_rest.
inline Tensor2 shuffle_coproduct(const Forest& f)
{
    const auto& trees = f.trees();
    if (trees.size() >= 64)
        throw ResourceLimit("shuffle coproduct of a forest with " + std::to_string(trees.size()) + " components");
    Tensor2 out;
    const std::uint64_t subsets = std::uint64_t{1} << trees.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        std::vector<Tree> in;
        std::vector<Tree> rest;
        for (std::size_t i = 0; i < trees.size(); ++i)
            ((mask >> i) & 1 ? in : rest).push_back(trees[i]);
        out.add({Forest(std::move(in)), Forest(std::move(rest))}, 1);
    }
    return out;
}

inline Tensor2 shuffle_coproduct(const LinComb& a)
{
    Tensor2 out;
    for (const auto& [f, c] : a)
        out.add_scaled(shuffle_coproduct(f), c);
    return out;
}

/// A <| B computed from the defining recursion instead of graft enumeration:
///   A <| 1 = A,
///   X <| (A Y) = (X <| A) <| Y - X <| (A <| Y),
///   (A B) <| C = sum over shuffle splits of (A <| C') (B <| C''),
/// with the pre-Lie product of two trees as the base case.
inline LinComb triangle_recursive(const Forest& a, const Forest& b)
{
    if (b.empty())
        return basis(a);
    if (a.empty())
        return {};
    if (a.size() > 1) {
        const Forest head = single(a.trees().front());
        const Forest tail(std::vector<Tree>(a.trees().begin() + 1, a.trees().end()));
        LinComb out;
        for (const auto& [split, c] : shuffle_coproduct(b))
            out.add_scaled(lc_multiply(triangle_recursive(head, split[0]), triangle_recursive(tail, split[1])), c);
        return out;
    }
    const Tree& x = a.trees().front();
    if (b.size() == 1)
        return prelie(x, b.trees().front());
    const Tree& y = b.trees().back();
    const Forest rest(std::vector<Tree>(b.trees().begin(), b.trees().end() - 1));
    LinComb out;
    for (const auto& [f, c] : triangle_recursive(a, rest))
        out.add_scaled(prelie(f.trees().front(), y), c);
    for (const auto& [f, c] : triangle_recursive(rest, single(y)))
        out.add_scaled(triangle_recursive(a, f), -c);
    return out;
}

/// Growth operator: insertion of a single leaf everywhere, F <| •.
inline LinComb growth(const LinComb& a)
{
    LinComb out;
    const Forest dot = single(Tree::dot());
    for (const auto& [f, c] : a)
        out.add_scaled(triangle_monomials(f, dot), c);
    return out;
}

/// Pruning operator: removal of each single leaf in turn; a component that
/// is a lone leaf disappears.
inline LinComb pruning(const LinComb& a)
{
    LinComb out;
    for (const auto& [f, c] : a) {
        const auto& trees = f.trees();
        for (std::size_t i = 0; i < trees.size(); ++i) {
            std::vector<Tree> others(trees.begin(), trees.end());
            others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
            for (std::size_t p = 0; p < trees[i].n_leaves(); ++p) {
                std::vector<Tree> next = others;
                if (auto kept = remove_leaf(trees[i], p))
                    next.push_back(*kept);
                out.add(Forest(std::move(next)), c);
            }
        }
    }
    return out;
}

inline LinComb power(LinComb (*op)(const LinComb&), LinComb a, std::size_t k)
{
    for (std::size_t i = 0; i < k; ++i)
        a = op(a);
    return a;
}

/// Truncation of W(•) = sum_k (1/k!) N^(k-1)(•) to degrees 1..max_degree.
inline LinComb prelie_exponential(std::size_t max_degree, const Limits& limits = {})
{
    if (max_degree == 0)
        throw BadIndex("exponential needs max_degree >= 1");
    require_within(max_degree, limits.max_exp_degree, "prelie_exponential");
    LinComb current = basis(Tree::dot());
    LinComb out = current;
    for (std::size_t k = 2; k <= max_degree; ++k) {
        current = growth(current);
        out.add_scaled(current, Rational(Integer(1), factorial(k)));
    }
    return out;
}

} // namespace binhopf
