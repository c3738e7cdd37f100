#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "binhopf.hpp"

using namespace binhopf;

namespace {

Tree L(const char* s) { return Tree::leaf(s); }
Tree J(const Tree& a, const Tree& b) { return Tree::join(a, b); }
Forest F(std::initializer_list<Tree> ts) { return Forest(std::vector<Tree>(ts)); }

std::vector<Tree> unlabelled_up_to(std::size_t n)
{
    std::vector<Tree> out;
    for (std::size_t k = 1; k <= n; ++k)
        for (const Tree& t : enumerate_trees(k))
            out.push_back(t);
    return out;
}

std::vector<Tree> labelled_up_to(std::size_t n)
{
    const std::vector<std::string> names{"a", "b", "c", "d", "e", "f", "g"};
    std::vector<Tree> out;
    for (std::size_t k = 1; k <= n; ++k)
        for (const Tree& t : enumerate_labelled_trees({names.begin(), names.begin() + static_cast<long>(k)}))
            out.push_back(t);
    return out;
}

std::vector<Forest> forests_up_to(std::size_t n)
{
    std::vector<Forest> out;
    for (std::size_t k = 0; k <= n; ++k)
        for (const Forest& f : enumerate_forests(k))
            out.push_back(f);
    return out;
}

// Connes-Kreimer coproduct over admissible edge sets, followed by dropping
// every term whose remainder has a vertex that lost both children and
// contracting unary vertices in the rest.
Tensor2 connes_kreimer_then_project(const Tree& t)
{
    struct V {
        RawTree raw;
        int parent;
        std::vector<int> kids;
    };
    std::vector<V> vs;
    std::function<int(const RawTree&, int)> flatten = [&](const RawTree& r, int parent) {
        const int me = static_cast<int>(vs.size());
        vs.push_back({r, parent, {}});
        for (const auto& c : r.children) {
            const int k = flatten(c, me);
            vs[me].kids.push_back(k);
        }
        return me;
    };
    flatten(to_raw(t), -1);
    const std::size_t edges = vs.size() - 1;  // edge i enters vertex i + 1

    auto ancestor = [&](int a, int b) {
        for (int p = vs[b].parent; p >= 0; p = vs[p].parent)
            if (p == a)
                return true;
        return false;
    };

    Tensor2 out = Tensor2::basis({single(t), Forest{}});
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges); ++mask) {
        std::vector<bool> cut(vs.size(), false);
        std::vector<int> chosen;
        for (std::size_t e = 0; e < edges; ++e)
            if (mask >> e & 1U) {
                cut[e + 1] = true;
                chosen.push_back(static_cast<int>(e + 1));
            }
        bool admissible = true;
        for (int a : chosen)
            for (int b : chosen)
                admissible = admissible && !(a != b && ancestor(a, b));
        if (!admissible)
            continue;
        std::vector<Tree> pruned;
        for (int v : chosen)
            pruned.push_back(canonicalize(vs[v].raw));
        bool killed = false;
        std::function<RawTree(int)> rest = [&](int v) {
            if (vs[v].kids.empty())
                return vs[v].raw;
            std::vector<RawTree> kept;
            for (int k : vs[v].kids)
                if (!cut[k])
                    kept.push_back(rest(k));
            if (kept.empty())
                killed = true;
            return RawTree::node(std::move(kept));
        };
        const RawTree remainder = rest(0);
        if (killed)
            continue;
        out.add({Forest(std::move(pruned)), single(contract_to_binary(remainder))}, 1);
    }
    return out;
}

Tensor3 left_then(const Tensor2& d)
{
    Tensor3 out;
    for (const auto& [k, c] : d)
        for (const auto& [k2, c2] : coproduct(k[0]))
            out.add({k2[0], k2[1], k[1]}, c * c2);
    return out;
}

Tensor3 right_then(const Tensor2& d)
{
    Tensor3 out;
    for (const auto& [k, c] : d)
        for (const auto& [k2, c2] : coproduct(k[1]))
            out.add({k[0], k2[0], k2[1]}, c * c2);
    return out;
}

LinComb convolve(const Tensor2& d, const std::function<LinComb(const Forest&)>& f,
                 const std::function<LinComb(const Forest&)>& g)
{
    LinComb out;
    for (const auto& [k, c] : d)
        out.add_scaled(lc_multiply(f(k[0]), g(k[1])), c);
    return out;
}

Forest comb(std::size_t k) { return k == 0 ? Forest{} : single(comb_tree(k)); }
Forest dots(std::size_t i) { return Forest(std::vector<Tree>(i, Tree::dot())); }

} // namespace

TEST(Coproduct, GoldenThreeLeafTree)
{
    const Tree a = L("a"), b = L("b"), c = L("c");
    const Tree t = J(J(a, b), c);
    Tensor2 expected;
    expected.add({Forest{}, single(t)}, 1);
    expected.add({single(a), single(J(b, c))}, 1);
    expected.add({single(b), single(J(a, c))}, 1);
    expected.add({single(c), single(J(a, b))}, 1);
    expected.add({single(J(a, b)), single(c)}, 1);
    expected.add({F({a, c}), single(b)}, 1);
    expected.add({F({b, c}), single(a)}, 1);
    expected.add({single(t), Forest{}}, 1);
    EXPECT_EQ(coproduct_tree(t), expected);
    EXPECT_EQ(coproduct_tree(t).size(), 8u);
}

TEST(Coproduct, GoldenCherryAndLeaf)
{
    const Tree a = L("a"), b = L("b");
    Tensor2 cherry;
    cherry.add({Forest{}, single(J(a, b))}, 1);
    cherry.add({single(a), single(b)}, 1);
    cherry.add({single(b), single(a)}, 1);
    cherry.add({single(J(a, b)), Forest{}}, 1);
    EXPECT_EQ(coproduct_tree(J(a, b)), cherry);
    EXPECT_EQ(coproduct_tree(a), Tensor2::basis({Forest{}, single(a)}) + Tensor2::basis({single(a), Forest{}}));
    EXPECT_EQ(coproduct(Forest{}), Tensor2::basis({Forest{}, Forest{}}));
}

TEST(Coproduct, MatchesConnesKreimerProjection)
{
    for (const Tree& t : labelled_up_to(5))
        EXPECT_EQ(coproduct_tree(t), connes_kreimer_then_project(t)) << to_string(t);
    for (const Tree& t : unlabelled_up_to(7))
        EXPECT_EQ(coproduct_tree(t), connes_kreimer_then_project(t)) << to_string(t);
}

TEST(Coproduct, MassIsTwoToTheLeaves)
{
    for (const Tree& t : unlabelled_up_to(8))
        EXPECT_EQ(coproduct_tree(t).mass(), Rational(Integer(1) << t.n_leaves()));
}

TEST(Coproduct, Coassociative)
{
    for (const Tree& t : unlabelled_up_to(7)) {
        const Tensor2 d = coproduct_tree(t);
        EXPECT_EQ(left_then(d), right_then(d)) << to_string(t);
    }
    for (const Tree& t : labelled_up_to(5)) {
        const Tensor2 d = coproduct_tree(t);
        EXPECT_EQ(left_then(d), right_then(d)) << to_string(t);
    }
}

TEST(Coproduct, MultiplicativeOnForests)
{
    const auto fs = forests_up_to(4);
    for (const Forest& f : fs)
        for (const Forest& g : fs)
            EXPECT_EQ(coproduct(disjoint_union(f, g)), tensor_multiply(coproduct(f), coproduct(g)));
}

TEST(Coproduct, CounitAndGrading)
{
    for (const Forest& f : forests_up_to(6)) {
        LinComb left, right;
        for (const auto& [k, c] : coproduct(f)) {
            EXPECT_EQ(k[0].n_leaves() + k[1].n_leaves(), f.n_leaves());
            left.add(k[1], c * counit(basis(k[0])));
            right.add(k[0], c * counit(basis(k[1])));
        }
        EXPECT_EQ(left, basis(f));
        EXPECT_EQ(right, basis(f));
    }
    EXPECT_EQ(counit(unit()), 1);
    EXPECT_EQ(counit(basis(single(Tree::dot()))), 0);
}

TEST(Cuts, SubsetsMapToUniqueCuts)
{
    for (const Tree& t : labelled_up_to(6)) {
        const auto labels = leaf_labels(t);
        const std::size_t n = t.n_leaves();
        Tensor2 rebuilt;
        std::set<std::vector<std::size_t>> seen_edges;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            CutSubset subset{t, {}};
            std::set<std::string> wanted;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1U) {
                    subset.leaves.push_back(i);
                    wanted.insert(labels[i]);
                }
            const auto cut = cut_for_subset(subset);
            if (std::holds_alternative<TotalCut>(cut)) {
                EXPECT_EQ(mask, (std::uint64_t{1} << n) - 1);
                rebuilt.add({single(t), Forest{}}, 1);
                continue;
            }
            const auto& bac = std::get<BinaryAdmissibleCut>(cut);
            EXPECT_TRUE(is_binary_admissible(t, bac.edges));
            EXPECT_TRUE(seen_edges.insert(bac.edges).second);
            const auto [pruned, rem] = apply_cut(bac);
            std::set<std::string> got;
            for (const Tree& p : pruned.trees())
                for (const auto& l : leaf_labels(p))
                    got.insert(l);
            EXPECT_EQ(got, wanted);
            rebuilt.add({pruned, rem}, 1);
        }
        EXPECT_EQ(rebuilt, coproduct_tree(t)) << to_string(t);
    }
}

TEST(Cuts, AdmissibleCutCount)
{
    for (const Tree& t : unlabelled_up_to(8)) {
        const auto cuts = enumerate_binary_admissible_cuts(t);
        EXPECT_EQ(cuts.size(), (std::size_t{1} << t.n_leaves()) - 1);
        Tensor2 sum = Tensor2::basis({single(t), Forest{}});
        for (const auto& c : cuts) {
            EXPECT_TRUE(is_binary_admissible(t, c.edges));
            const auto [p, r] = apply_cut(c);
            sum.add({p, r}, 1);
        }
        EXPECT_EQ(sum, coproduct_tree(t));
    }
}

TEST(Cuts, RejectsBothChildrenAndNestedEdges)
{
    const Tree t = J(J(L("a"), L("b")), L("c"));
    EXPECT_FALSE(is_binary_admissible(t, {1, 4}));
    EXPECT_FALSE(is_binary_admissible(t, {2, 3}));
    EXPECT_FALSE(is_binary_admissible(t, {1, 2}));
    EXPECT_FALSE(is_binary_admissible(t, {0}));
    EXPECT_TRUE(is_binary_admissible(t, {2, 4}));
    EXPECT_TRUE(is_binary_admissible(t, {}));
    EXPECT_THROW(apply_cut({t, {1, 4}}), BadIndex);
}

TEST(IteratedCoproduct, MassAndNesting)
{
    const Tree t = J(J(L("a"), L("b")), L("c"));
    const TensorN d2 = iterated_coproduct(basis(t), 2);
    EXPECT_EQ(d2.mass(), 27);
    EXPECT_EQ(d2, iterated_coproduct(basis(t), 2, Nesting::right));
    for (const Tree& u : unlabelled_up_to(5))
        for (std::size_t k = 1; k <= 3; ++k) {
            Integer expected = 1;
            for (std::size_t i = 0; i < u.n_leaves(); ++i)
                expected *= k + 1;
            const TensorN left = iterated_coproduct(basis(u), k);
            EXPECT_EQ(left.mass(), Rational(expected));
            EXPECT_EQ(left, iterated_coproduct(basis(u), k, Nesting::right));
        }
    EXPECT_THROW(iterated_coproduct(basis(t), 0), BadIndex);
    EXPECT_THROW(iterated_coproduct(basis(t), 50), ResourceLimit);
}

TEST(Antipode, Goldens)
{
    const Tree a = L("a"), b = L("b"), c = L("c");
    EXPECT_EQ(antipode(single(a)), basis(single(a), -1));
    EXPECT_EQ(antipode(single(J(a, b))), basis(single(J(a, b)), -1) + basis(F({a, b}), 2));
    const Tree t = J(J(a, b), c);
    LinComb expected = basis(single(t), -1);
    expected.add(F({a, J(b, c)}), 1);
    expected.add(F({b, J(a, c)}), 1);
    expected.add(F({c, J(a, b)}), 2);
    expected.add(F({a, b, c}), -4);
    EXPECT_EQ(antipode(single(t)), expected);
    EXPECT_EQ(antipode(Forest{}), unit());
}

TEST(Antipode, SatisfiesHopfAxiom)
{
    auto id = [](const Forest& f) { return basis(f); };
    auto s = [](const Forest& f) { return antipode(f); };
    for (const Forest& f : forests_up_to(6)) {
        const Tensor2 d = coproduct(f);
        const LinComb expected = f.empty() ? unit() : LinComb{};
        EXPECT_EQ(convolve(d, s, id), expected) << to_string(f);
        EXPECT_EQ(convolve(d, id, s), expected) << to_string(f);
    }
}

TEST(Antipode, MultiplicativeAndInvolutive)
{
    const auto fs = forests_up_to(4);
    for (const Forest& f : fs) {
        EXPECT_EQ(antipode(antipode(f)), basis(f));
        for (const Forest& g : fs)
            EXPECT_EQ(antipode(disjoint_union(f, g)), lc_multiply(antipode(f), antipode(g)));
    }
}

TEST(Antipode, EqualsSignedSumOverTotalCuts)
{
    for (const Tree& t : unlabelled_up_to(7)) {
        const auto cuts = enumerate_binary_total_cuts(t);
        std::size_t expected_count = 1;
        for (std::size_t i = 1; i < t.n_leaves(); ++i)
            expected_count *= 3;
        EXPECT_EQ(cuts.size(), expected_count);
        LinComb sum;
        for (const auto& cut : cuts) {
            const Forest out = total_cut_outcome(cut);
            EXPECT_EQ(out.n_leaves(), t.n_leaves());
            sum.add(out, out.size() % 2 == 0 ? 1 : -1);
        }
        const LinComb s = antipode_tree(t);
        EXPECT_EQ(sum, s) << to_string(t);
        EXPECT_EQ(antipode_by_total_cuts(t), s);
        EXPECT_EQ(s.abs_mass(), Rational(expected_count));
        for (const auto& [f, c] : s)
            EXPECT_EQ(c > 0, f.size() % 2 == 0);
    }
    EXPECT_EQ(antipode_tree(comb_tree(7)).abs_mass(), 729);
}

TEST(Comb, BothClosedFormulas)
{
    for (std::size_t n = 2; n <= 8; ++n) {
        const Tensor2 direct = coproduct_tree(comb_tree(n));
        EXPECT_EQ(comb_coproduct_formula(n), direct) << n;

        Tensor2 second;
        for (std::size_t i = 1; i + 2 <= n; ++i)
            second.add({dots(i), comb(n - i)}, Rational(binomial(n - 2, i - 1) + binomial(n - 1, i)));
        for (std::size_t k = 2; k + 1 <= n; ++k)
            for (std::size_t l = 0; l + k + 1 <= n; ++l)
                second.add({disjoint_union(comb(k), dots(l)), comb(n - k - l)}, Rational(binomial(n - k - 1, l)));
        second.add({dots(n - 1), comb(1)}, 2);
        second.add({Forest{}, comb(n)}, 1);
        second.add({comb(n), Forest{}}, 1);
        EXPECT_EQ(second, direct) << n;
    }
    EXPECT_EQ(comb_tree(3), J(J(Tree::dot(), Tree::dot()), Tree::dot()));
    EXPECT_THROW(comb_coproduct_formula(1), BadIndex);
}

TEST(Character, LeafCountIsHopfMorphism)
{
    for (const Forest& f : forests_up_to(6))
        EXPECT_EQ(leaf_character(coproduct(f)), binomial_coproduct(leaf_character(f)));
    for (const Tree& t : labelled_up_to(4))
        EXPECT_EQ(leaf_character(coproduct_tree(t)), binomial_coproduct(leaf_character(single(t))));
}
