#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "binhopf/enumerate.hpp"
#include "binhopf/limits.hpp"
#include "binhopf/linear.hpp"
#include "binhopf/tree.hpp"

namespace binhopf {

/// Subset of leaf positions of a tree. Each subset indexes exactly one term
/// of the coproduct: the pruned forest on the left, the contracted remainder
/// on the right.
struct CutSubset {
    Tree tree;
    std::vector<std::size_t> leaves;
};

/// Set of real edges (preorder indices >= 1) with at most one edge on every
/// root-to-leaf path and never both child edges of one vertex.
struct BinaryAdmissibleCut {
    Tree tree;
    std::vector<std::size_t> edges;
};

/// Marker for the cut that removes the whole tree, giving T (x) 1.
struct TotalCut {
    Tree tree;
};

enum class CutChoice { keep, cut_left, cut_right };

/// One choice per internal node, internal nodes taken in preorder.
struct BinaryTotalCut {
    Tree tree;
    std::vector<CutChoice> choices;
};

namespace detail {

struct EdgeSpan {
    std::size_t left;
    std::size_t right;
};

inline EdgeSpan child_edges(const Tree& t, std::size_t edge)
{
    return {edge + 1, edge + 1 + edge_slots(t.left())};
}

/// All (pruned, remainder) outcomes over leaf subsets of `t`, with counts.
/// The remainder is a forest with zero or one tree.
inline const Tensor2& subset_splits(const Tree& t, std::unordered_map<std::string, Tensor2>& memo)
{
    if (auto it = memo.find(t.enc()); it != memo.end())
        return it->second;
    Tensor2 out;
    if (t.is_leaf()) {
        out.add({Forest{}, single(t)}, 1);
        out.add({single(t), Forest{}}, 1);
    } else {
        const Tensor2& ls = subset_splits(t.left(), memo);
        const Tensor2& rs = subset_splits(t.right(), memo);
        for (const auto& [lk, lc] : ls) {
            for (const auto& [rk, rc] : rs) {
                const Forest& lrem = lk[1];
                const Forest& rrem = rk[1];
                if (lrem.empty() && rrem.empty())
                    out.add({single(t), Forest{}}, lc * rc);
                else if (lrem.empty())
                    out.add({disjoint_union(lk[0], rk[0]), rrem}, lc * rc);
                else if (rrem.empty())
                    out.add({disjoint_union(lk[0], rk[0]), lrem}, lc * rc);
                else
                    out.add({disjoint_union(lk[0], rk[0]), single(Tree::join(lrem.trees()[0], rrem.trees()[0]))},
                            lc * rc);
            }
        }
    }
    return memo.emplace(t.enc(), std::move(out)).first->second;
}

} // namespace detail

/// Coproduct of a single tree: sum over all leaf subsets S of
/// pruned(S) (x) remainder(S). Coefficients collect over isomorphic outcomes,
/// so the total mass is 2^n.
inline Tensor2 coproduct_tree(const Tree& t)
{
    std::unordered_map<std::string, Tensor2> memo;
    return detail::subset_splits(t, memo);
}

inline Tensor2 coproduct(const Forest& f)
{
    std::unordered_map<std::string, Tensor2> memo;
    Tensor2 out = Tensor2::basis({Forest{}, Forest{}});
    for (const Tree& t : f.trees())
        out = tensor_multiply(out, detail::subset_splits(t, memo));
    return out;
}

/// Multiplicative, linear extension of the tree coproduct.
inline Tensor2 coproduct(const LinComb& a)
{
    Tensor2 out;
    for (const auto& [f, c] : a)
        out.add_scaled(coproduct(f), c);
    return out;
}

inline Rational counit(const LinComb& a) { return a.coefficient(Forest{}); }

/// The unique binary-admissible cut pruning exactly the leaves in `subset`,
/// or the total-cut marker when the subset is every leaf.
inline std::variant<BinaryAdmissibleCut, TotalCut> cut_for_subset(const CutSubset& subset)
{
    const Tree& t = subset.tree;
    std::vector<bool> chosen(t.n_leaves(), false);
    for (std::size_t p : subset.leaves) {
        if (p >= t.n_leaves())
            throw BadIndex("leaf position " + std::to_string(p) + " out of range");
        chosen[p] = true;
    }
    std::vector<std::size_t> edges;
    std::size_t next_leaf = 0;
    std::function<bool(const Tree&, std::size_t)> full = [&](const Tree& s, std::size_t edge) -> bool {
        if (s.is_leaf())
            return chosen[next_leaf++];
        const auto span = detail::child_edges(s, edge);
        const bool l = full(s.left(), span.left);
        const bool r = full(s.right(), span.right);
        if (l && r)
            return true;
        if (l)
            edges.push_back(span.left);
        if (r)
            edges.push_back(span.right);
        return false;
    };
    if (full(t, 0))
        return TotalCut{t};
    std::sort(edges.begin(), edges.end());
    return BinaryAdmissibleCut{t, std::move(edges)};
}

inline bool is_binary_admissible(const Tree& t, const std::vector<std::size_t>& edges)
{
    std::vector<bool> cut(edge_slots(t), false);
    for (std::size_t e : edges) {
        if (e == 0 || e >= cut.size() || cut[e])
            return false;
        cut[e] = true;
    }
    std::function<bool(const Tree&, std::size_t, bool)> ok = [&](const Tree& s, std::size_t edge, bool above) {
        if (cut[edge] && above)
            return false;
        if (s.is_leaf())
            return true;
        const auto span = detail::child_edges(s, edge);
        if (cut[span.left] && cut[span.right])
            return false;
        const bool below = above || cut[edge];
        return ok(s.left(), span.left, below) && ok(s.right(), span.right, below);
    };
    return ok(t, 0, false);
}

/// Pruned forest and contracted remainder of an admissible cut.
inline std::array<Forest, 2> apply_cut(const BinaryAdmissibleCut& cut)
{
    const Tree& t = cut.tree;
    if (!is_binary_admissible(t, cut.edges))
        throw BadIndex("edge set is not a binary-admissible cut");
    std::vector<bool> marked(edge_slots(t), false);
    for (std::size_t e : cut.edges)
        marked[e] = true;
    std::vector<Tree> pruned;
    std::function<std::optional<Tree>(const Tree&, std::size_t)> keep =
        [&](const Tree& s, std::size_t edge) -> std::optional<Tree> {
        if (marked[edge]) {
            pruned.push_back(s);
            return std::nullopt;
        }
        if (s.is_leaf())
            return s;
        const auto span = detail::child_edges(s, edge);
        auto l = keep(s.left(), span.left);
        auto r = keep(s.right(), span.right);
        if (l && r)
            return Tree::join(*l, *r);
        return l ? l : r;
    };
    auto rem = keep(t, 0);
    return {Forest(std::move(pruned)), rem ? single(*rem) : Forest{}};
}

/// Every binary-admissible cut of `t`, the empty cut included; there are
/// 2^n - 1 of them.
inline std::vector<BinaryAdmissibleCut> enumerate_binary_admissible_cuts(const Tree& t, const Limits& limits = {})
{
    require_within(t.n_leaves(), limits.max_cut_leaves, "enumerate_binary_admissible_cuts");
    std::function<std::vector<std::vector<std::size_t>>(const Tree&, std::size_t)> below =
        [&](const Tree& s, std::size_t edge) -> std::vector<std::vector<std::size_t>> {
        if (s.is_leaf())
            return {{}};
        const auto span = detail::child_edges(s, edge);
        const auto ls = below(s.left(), span.left);
        const auto rs = below(s.right(), span.right);
        std::vector<std::vector<std::size_t>> out;
        out.reserve(ls.size() * rs.size() + ls.size() + rs.size());
        for (const auto& l : ls)
            for (const auto& r : rs) {
                auto both = l;
                both.insert(both.end(), r.begin(), r.end());
                out.push_back(std::move(both));
            }
        for (const auto& r : rs) {
            auto with = r;
            with.push_back(span.left);
            out.push_back(std::move(with));
        }
        for (const auto& l : ls) {
            auto with = l;
            with.push_back(span.right);
            out.push_back(std::move(with));
        }
        return out;
    };
    std::vector<BinaryAdmissibleCut> out;
    for (auto& edges : below(t, 0)) {
        std::sort(edges.begin(), edges.end());
        out.push_back({t, std::move(edges)});
    }
    return out;
}

enum class Nesting { left, right };

/// Delta^(k) with k >= 1, as a tensor of rank k + 1. Left nesting computes
/// (Delta^(k-1) (x) 1) o Delta, right nesting (1 (x) Delta^(k-1)) o Delta.
inline TensorN iterated_coproduct(const LinComb& a, std::size_t k, Nesting nesting = Nesting::left,
                                  const Limits& limits = {})
{
    if (k == 0)
        throw BadIndex("iterated coproduct needs k >= 1");
    require_within(k, limits.max_iterations, "iterated_coproduct");
    TensorN current;
    for (const auto& [f, c] : a)
        current.add(std::vector<Forest>{f}, c);
    for (std::size_t step = 0; step < k; ++step) {
        TensorN next;
        for (const auto& [key, c] : current) {
            const std::size_t leg = nesting == Nesting::left ? 0 : key.size() - 1;
            for (const auto& [split, sc] : coproduct(key[leg])) {
                std::vector<Forest> grown;
                grown.reserve(key.size() + 1);
                grown.insert(grown.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(leg));
                grown.push_back(split[0]);
                grown.push_back(split[1]);
                grown.insert(grown.end(), key.begin() + static_cast<std::ptrdiff_t>(leg) + 1, key.end());
                next.add(std::move(grown), c * sc);
            }
        }
        current = std::move(next);
    }
    return current;
}

/// Shared memo for the recursive antipode. Entries are idempotent, so
/// concurrent writers racing on one key are harmless.
class AntipodeMemo {
public:
    std::optional<LinComb> find(const std::string& key) const
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end())
            return std::nullopt;
        return it->second;
    }

    void store(const std::string& key, const LinComb& value)
    {
        std::unique_lock lock(mutex_);
        table_.insert_or_assign(key, value);
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

    void clear()
    {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

    static AntipodeMemo& global()
    {
        static AntipodeMemo memo;
        return memo;
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, LinComb> table_;
};

inline LinComb antipode(const Forest& f);

/// S(T) = -T - sum S(T') T'' over the reduced coproduct, T' the pruned side.
inline LinComb antipode_tree(const Tree& t)
{
    auto& memo = AntipodeMemo::global();
    if (auto hit = memo.find(t.enc()))
        return *hit;
    LinComb out = basis(t, -1);
    for (const auto& [key, c] : coproduct_tree(t)) {
        if (key[0].empty() || key[1].empty())
            continue;
        out.add_scaled(lc_multiply(antipode(key[0]), basis(key[1])), -c);
    }
    memo.store(t.enc(), out);
    return out;
}

inline LinComb antipode(const Forest& f)
{
    LinComb out = unit();
    for (const Tree& t : f.trees())
        out = lc_multiply(out, antipode_tree(t));
    return out;
}

inline LinComb antipode(const LinComb& a)
{
    LinComb out;
    for (const auto& [f, c] : a)
        out.add_scaled(antipode(f), c);
    return out;
}

/// Every binary-total cut of `t`: 3^(n-1) choice vectors.
inline std::vector<BinaryTotalCut> enumerate_binary_total_cuts(const Tree& t, const Limits& limits = {})
{
    require_within(t.n_leaves(), limits.max_cut_leaves, "enumerate_binary_total_cuts");
    std::vector<BinaryTotalCut> out;
    std::vector<CutChoice> choices(t.n_internal(), CutChoice::keep);
    auto fill = [&](auto&& self, std::size_t i) -> void {
        if (i == choices.size()) {
            out.push_back({t, choices});
            return;
        }
        for (CutChoice c : {CutChoice::keep, CutChoice::cut_left, CutChoice::cut_right}) {
            choices[i] = c;
            self(self, i + 1);
        }
    };
    fill(fill, 0);
    return out;
}

/// Components left by a binary-total cut, each contracted to full binary.
inline Forest total_cut_outcome(const BinaryTotalCut& cut)
{
    if (cut.choices.size() != cut.tree.n_internal())
        throw BadIndex("binary-total cut needs one choice per internal node");
    std::vector<Tree> closed;
    std::size_t next = 0;
    std::function<Tree(const Tree&)> go = [&](const Tree& s) -> Tree {
        if (s.is_leaf())
            return s;
        const CutChoice choice = cut.choices[next++];
        Tree l = go(s.left());
        Tree r = go(s.right());
        switch (choice) {
        case CutChoice::cut_left:
            closed.push_back(l);
            return r;
        case CutChoice::cut_right:
            closed.push_back(r);
            return l;
        default:
            return Tree::join(l, r);
        }
    };
    closed.push_back(go(cut.tree));
    return Forest(std::move(closed));
}

/// Antipode as a signed sum over binary-total cuts, each contributing
/// (-1)^(number of components) times its contracted forest.
inline LinComb antipode_by_total_cuts(const Tree& t)
{
    // Per subtree: (closed components, open component containing the subtree
    // root) with multiplicities.
    std::unordered_map<std::string, Tensor2> memo;
    std::function<const Tensor2&(const Tree&)> states = [&](const Tree& s) -> const Tensor2& {
        if (auto it = memo.find(s.enc()); it != memo.end())
            return it->second;
        Tensor2 out;
        if (s.is_leaf()) {
            out.add({Forest{}, single(s)}, 1);
        } else {
            const Tensor2& ls = states(s.left());
            const Tensor2& rs = states(s.right());
            for (const auto& [lk, lc] : ls) {
                for (const auto& [rk, rc] : rs) {
                    const Forest closed = disjoint_union(lk[0], rk[0]);
                    const Rational c = lc * rc;
                    out.add({closed, single(Tree::join(lk[1].trees()[0], rk[1].trees()[0]))}, c);
                    out.add({disjoint_union(closed, lk[1]), rk[1]}, c);
                    out.add({disjoint_union(closed, rk[1]), lk[1]}, c);
                }
            }
        }
        return memo.emplace(s.enc(), std::move(out)).first->second;
    };
    LinComb out;
    for (const auto& [key, c] : states(t)) {
        Forest f = disjoint_union(key[0], key[1]);
        out.add(f, f.size() % 2 == 0 ? c : Rational(-c));
    }
    return out;
}

/// First closed formula for Delta(C_n) on the comb basis, n >= 2.
inline Tensor2 comb_coproduct_formula(std::size_t n)
{
    if (n < 2)
        throw BadIndex("comb coproduct formula needs n >= 2");
    auto comb = [](std::size_t k) { return k == 0 ? Forest{} : single(comb_tree(k)); };
    auto dots = [](std::size_t i) { return Forest(std::vector<Tree>(i, Tree::dot())); };
    Tensor2 out;
    for (std::size_t i = 0; i <= n - 2; ++i)
        out.add({dots(i), comb(n - i)}, Rational(binomial(n - 2, i)));
    for (std::size_t j = 0; j <= n - 2; ++j)
        out.add({dots(j + 1), comb(n - j - 1)}, Rational(2 * binomial(n - 2, j)));
    for (std::size_t k = 2; k <= n - 1; ++k)
        for (std::size_t l = 0; l <= n - k - 1; ++l)
            out.add({disjoint_union(comb(k), dots(l)), comb(n - k - l)}, Rational(binomial(n - k - 1, l)));
    out.add({comb(n), Forest{}}, 1);
    return out;
}

/// Exponent of each leaf label: the image of a forest in k[X_label].
using Monomial = std::map<std::string, std::size_t>;
using MonomialTensor = LinearCombination<std::array<Monomial, 2>>;

inline Monomial leaf_character(const Forest& f)
{
    Monomial out;
    for (const Tree& t : f.trees())
        for (const auto& label : leaf_labels(t))
            ++out[label];
    return out;
}

/// (phi (x) phi) applied to a tensor of forests.
inline MonomialTensor leaf_character(const Tensor2& t)
{
    MonomialTensor out;
    for (const auto& [key, c] : t)
        out.add({leaf_character(key[0]), leaf_character(key[1])}, c);
    return out;
}

/// Coproduct of k[X_1..X_m] with every X primitive: X^n maps to
/// sum_k C(n,k) X^k (x) X^(n-k), variable by variable.
inline MonomialTensor binomial_coproduct(const Monomial& m)
{
    MonomialTensor out = MonomialTensor::basis({Monomial{}, Monomial{}});
    for (const auto& [label, power] : m) {
        MonomialTensor next;
        for (const auto& [key, c] : out) {
            for (std::size_t k = 0; k <= power; ++k) {
                auto left = key[0];
                auto right = key[1];
                if (k > 0)
                    left[label] += k;
                if (power - k > 0)
                    right[label] += power - k;
                next.add({std::move(left), std::move(right)}, c * Rational(binomial(power, k)));
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace binhopf
