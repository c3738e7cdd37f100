#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "binhopf/error.hpp"
#include "binhopf/rational.hpp"

namespace binhopf {

/// Label carried by every leaf of an unlabelled tree.
inline constexpr std::string_view unlabelled = "*";

inline bool is_valid_label(std::string_view text)
{
    if (text == unlabelled)
        return true;
    if (text.empty())
        return false;
    return std::all_of(text.begin(), text.end(), [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

/// Isomorphism class of a nonplanar rooted full binary tree with labelled
/// leaves, held as its canonical representative.
///
/// The canonical encoding is enc(leaf l) = "L:" + l and
/// enc(node) = "(" + enc(a) + "," + enc(b) + ")" with enc(a) <= enc(b), so two
/// trees are isomorphic exactly when their encodings are equal. Nodes are
/// immutable and shared, which makes copies cheap and thread safe.
class Tree {
    struct Node {
        std::string label;
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
        std::string enc;
        std::size_t leaves = 1;
        std::size_t twins = 0;
    };

public:
    static Tree leaf(std::string label)
    {
        if (!is_valid_label(label))
            throw BadLabel("invalid leaf label '" + label + "'");
        auto node = std::make_shared<Node>();
        node->enc = "L:" + label;
        node->label = std::move(label);
        return Tree(std::move(node));
    }

    static Tree dot() { return leaf(std::string(unlabelled)); }

    /// Root with children a and b, stored in canonical order.
    static Tree join(const Tree& a, const Tree& b)
    {
        const bool swap = b.enc() < a.enc();
        const Tree& lo = swap ? b : a;
        const Tree& hi = swap ? a : b;
        auto node = std::make_shared<Node>();
        node->left = lo.node_;
        node->right = hi.node_;
        node->enc.reserve(lo.enc().size() + hi.enc().size() + 3);
        node->enc += '(';
        node->enc += lo.enc();
        node->enc += ',';
        node->enc += hi.enc();
        node->enc += ')';
        node->leaves = lo.n_leaves() + hi.n_leaves();
        node->twins = lo.node_->twins + hi.node_->twins + (lo.enc() == hi.enc() ? 1 : 0);
        return Tree(std::move(node));
    }

    bool is_leaf() const noexcept { return !node_->left; }
    const std::string& label() const noexcept { return node_->label; }
    Tree left() const { return Tree(node_->left); }
    Tree right() const { return Tree(node_->right); }

    const std::string& enc() const noexcept { return node_->enc; }
    std::size_t n_leaves() const noexcept { return node_->leaves; }
    std::size_t n_internal() const noexcept { return node_->leaves - 1; }
    /// Real edges only; the ghost root edge is not counted.
    std::size_t n_edges() const noexcept { return 2 * node_->leaves - 2; }

    /// Number of internal nodes whose two children are isomorphic.
    std::size_t twin_count() const noexcept { return node_->twins; }
    /// Order of the root-preserving automorphism group, 2^twin_count.
    Integer aut_order() const { return Integer(1) << node_->twins; }

    friend bool operator==(const Tree& a, const Tree& b) noexcept
    {
        return a.node_ == b.node_ || a.enc() == b.enc();
    }

    friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) noexcept
    {
        if (a.n_leaves() != b.n_leaves())
            return a.n_leaves() <=> b.n_leaves();
        if (a.node_ == b.node_)
            return std::strong_ordering::equal;
        const int c = a.enc().compare(b.enc());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Multiset of trees, kept sorted by (n_leaves, enc). The empty forest is the
/// unit of the algebra.
class Forest {
public:
    Forest() = default;

    explicit Forest(std::vector<Tree> trees) : trees_(std::move(trees))
    {
        std::sort(trees_.begin(), trees_.end());
        refresh();
    }

    Forest(std::initializer_list<Tree> trees) : Forest(std::vector<Tree>(trees)) {}

    const std::vector<Tree>& trees() const noexcept { return trees_; }
    bool empty() const noexcept { return trees_.empty(); }
    std::size_t size() const noexcept { return trees_.size(); }
    std::size_t n_leaves() const noexcept { return leaves_; }
    const std::string& enc() const noexcept { return enc_; }

    /// s_F = prod_i a_i! * s_{T_i}^{a_i} over distinct classes T_i of multiplicity a_i.
    Integer aut_order() const
    {
        Integer out = 1;
        std::size_t run = 0;
        for (std::size_t i = 0; i < trees_.size(); ++i) {
            run = (i > 0 && trees_[i] == trees_[i - 1]) ? run + 1 : 1;
            out *= run;
            out <<= trees_[i].twin_count();
        }
        return out;
    }

    friend Forest disjoint_union(const Forest& a, const Forest& b)
    {
        if (a.empty())
            return b;
        if (b.empty())
            return a;
        Forest out;
        out.trees_.reserve(a.size() + b.size());
        std::merge(a.trees_.begin(), a.trees_.end(), b.trees_.begin(), b.trees_.end(), std::back_inserter(out.trees_));
        out.refresh();
        return out;
    }

    friend bool operator==(const Forest& a, const Forest& b) noexcept
    {
        return a.leaves_ == b.leaves_ && a.enc_ == b.enc_;
    }

    friend std::strong_ordering operator<=>(const Forest& a, const Forest& b) noexcept
    {
        if (a.leaves_ != b.leaves_)
            return a.leaves_ <=> b.leaves_;
        const int c = a.enc_.compare(b.enc_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    void refresh()
    {
        leaves_ = 0;
        enc_.clear();
        for (std::size_t i = 0; i < trees_.size(); ++i) {
            if (i > 0)
                enc_ += ';';
            enc_ += trees_[i].enc();
            leaves_ += trees_[i].n_leaves();
        }
    }

    std::vector<Tree> trees_;
    std::size_t leaves_ = 0;
    std::string enc_;
};

inline Forest single(const Tree& t) { return Forest(std::vector<Tree>{t}); }

inline Integer aut_order_forest(const Forest& f) { return f.aut_order(); }

/// Tree description with unordered children of arbitrary arity, used as the
/// input of canonicalization and contraction.
struct RawTree {
    std::string label;
    std::vector<RawTree> children;

    static RawTree leaf(std::string l) { return RawTree{std::move(l), {}}; }
    static RawTree node(std::vector<RawTree> c) { return RawTree{{}, std::move(c)}; }
};

/// Unique canonical representative of a full binary tree description.
inline Tree canonicalize(const RawTree& raw)
{
    if (raw.children.empty())
        return Tree::leaf(raw.label);
    if (raw.children.size() != 2)
        throw MalformedTree("internal vertex with " + std::to_string(raw.children.size()) +
                            " children in a full binary tree");
    return Tree::join(canonicalize(raw.children[0]), canonicalize(raw.children[1]));
}

/// Contracts every vertex with exactly one child into that child. A unary
/// chain above a leaf collapses onto the leaf and keeps its label.
inline Tree contract_to_binary(const RawTree& raw)
{
    switch (raw.children.size()) {
    case 0:
        return Tree::leaf(raw.label);
    case 1:
        return contract_to_binary(raw.children.front());
    case 2:
        return Tree::join(contract_to_binary(raw.children[0]), contract_to_binary(raw.children[1]));
    default:
        throw NonBinaryInput("vertex with " + std::to_string(raw.children.size()) + " children");
    }
}

inline std::optional<Tree> contract_to_binary(const std::optional<RawTree>& raw)
{
    if (!raw)
        return std::nullopt;
    return contract_to_binary(*raw);
}

inline RawTree to_raw(const Tree& t)
{
    if (t.is_leaf())
        return RawTree::leaf(t.label());
    return RawTree::node({to_raw(t.left()), to_raw(t.right())});
}

/// Leaf labels in deterministic depth-first order over the canonical form.
/// This order defines leaf positions.
inline std::vector<std::string> leaf_labels(const Tree& t)
{
    std::vector<std::string> out;
    out.reserve(t.n_leaves());
    std::function<void(const Tree&)> walk = [&](const Tree& s) {
        if (s.is_leaf()) {
            out.push_back(s.label());
            return;
        }
        walk(s.left());
        walk(s.right());
    };
    walk(t);
    return out;
}

/// Deletes the leaf at `position` and its parent edge, then contracts.
/// Removing the only leaf gives the empty tree.
inline std::optional<Tree> remove_leaf(const Tree& t, std::size_t position)
{
    if (position >= t.n_leaves())
        throw BadIndex("leaf position " + std::to_string(position) + " out of range for " +
                       std::to_string(t.n_leaves()) + " leaves");
    std::function<std::optional<Tree>(const Tree&, std::size_t)> drop =
        [&](const Tree& s, std::size_t pos) -> std::optional<Tree> {
        if (s.is_leaf())
            return std::nullopt;
        const Tree l = s.left();
        if (pos < l.n_leaves()) {
            auto kept = drop(l, pos);
            return kept ? Tree::join(*kept, s.right()) : s.right();
        }
        auto kept = drop(s.right(), pos - l.n_leaves());
        return kept ? Tree::join(l, *kept) : l;
    };
    return drop(t, position);
}

// Edges are indexed in preorder over the canonical form: index 0 is the ghost
// edge above the root, and every other index names the edge entering the
// vertex with that preorder number. A tree with n leaves has 2n - 1 indices.

/// Number of edge indices including the ghost edge.
inline std::size_t edge_slots(const Tree& t) { return 2 * t.n_leaves() - 1; }

/// Subtree hanging below edge `edge`.
inline Tree subtree_below(const Tree& t, std::size_t edge)
{
    if (edge >= edge_slots(t))
        throw BadIndex("edge " + std::to_string(edge) + " out of range");
    Tree cur = t;
    while (edge > 0) {
        const Tree l = cur.left();
        const std::size_t left_span = edge_slots(l);
        if (edge <= left_span) {
            cur = l;
            edge -= 1;
        } else {
            cur = cur.right();
            edge -= 1 + left_span;
        }
    }
    return cur;
}

/// Rebuilds `t` bottom-up, letting `wrap(edge, rebuilt_subtree)` replace the
/// subtree below each edge. Indices follow the preorder of the input.
template<class Wrap>
Tree rebuild_by_edge(const Tree& t, Wrap&& wrap)
{
    std::size_t next = 0;
    std::function<Tree(const Tree&)> go = [&](const Tree& s) -> Tree {
        const std::size_t here = next++;
        if (s.is_leaf())
            return wrap(here, s);
        Tree l = go(s.left());
        Tree r = go(s.right());
        return wrap(here, Tree::join(l, r));
    };
    return go(t);
}

inline std::string to_string(const Tree& t)
{
    if (t.is_leaf())
        return t.label();
    return "(" + to_string(t.left()) + " " + to_string(t.right()) + ")";
}

/// Trees joined by ", "; the empty forest prints as "1".
inline std::string to_string(const Forest& f)
{
    if (f.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += to_string(f.trees()[i]);
    }
    return out;
}

} // namespace binhopf

template<>
struct std::hash<binhopf::Tree> {
    std::size_t operator()(const binhopf::Tree& t) const noexcept { return std::hash<std::string>{}(t.enc()); }
};

template<>
struct std::hash<binhopf::Forest> {
    std::size_t operator()(const binhopf::Forest& f) const noexcept { return std::hash<std::string>{}(f.enc()); }
};
