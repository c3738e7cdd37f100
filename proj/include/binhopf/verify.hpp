#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "binhopf/enumerate.hpp"
#include "binhopf/hopf.hpp"
#include "binhopf/linear.hpp"
#include "binhopf/pairing.hpp"
#include "binhopf/prelie.hpp"

namespace binhopf::verify {

/// Outcome of one property check over a finite family of inputs. `witness`
/// names the first counterexample.
struct CheckResult {
    std::string name;
    bool pass = true;
    std::size_t checked = 0;
    std::string witness;
};

struct Bounds {
    std::size_t max_leaves = 6;
    std::size_t degree = 6;
    std::uint64_t seed = 1;
};

namespace detail {

class Check {
public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& witness)
    {
        ++result_.checked;
        if (!ok && result_.pass) {
            result_.pass = false;
            result_.witness = witness();
        }
    }

    CheckResult done() { return std::move(result_); }

private:
    CheckResult result_;
};

inline std::vector<Tree> trees_up_to(std::size_t max_leaves)
{
    std::vector<Tree> out;
    for (std::size_t n = 1; n <= max_leaves; ++n) {
        auto level = enumerate_trees(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

inline std::vector<Forest> forests_up_to(std::size_t max_leaves)
{
    std::vector<Forest> out;
    for (std::size_t n = 0; n <= max_leaves; ++n) {
        auto level = enumerate_forests(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

inline std::vector<std::string> letters(std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

inline std::vector<Tree> labelled_trees_up_to(std::size_t max_leaves)
{
    std::vector<Tree> out;
    for (std::size_t n = 1; n <= max_leaves; ++n) {
        auto level = enumerate_labelled_trees(letters(n));
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

/// m o (op (x) id) or m o (id (x) op) applied to a tensor.
inline LinComb multiply_legs(const Tensor2& t, const std::function<LinComb(const Forest&)>& left,
                             const std::function<LinComb(const Forest&)>& right)
{
    LinComb out;
    for (const auto& [key, c] : t)
        out.add_scaled(lc_multiply(left(key[0]), right(key[1])), c);
    return out;
}

} // namespace detail

inline CheckResult coassociativity(std::size_t max_unlabelled, std::size_t max_labelled)
{
    detail::Check check("coassociativity");
    auto delta = [](const Forest& f) { return coproduct(f); };
    auto run = [&](const Tree& t) {
        const Tensor2 d = coproduct_tree(t);
        check.expect(t2_apply_left(delta, d) == t2_apply_right(delta, d), [&] { return to_string(t); });
    };
    for (const Tree& t : detail::trees_up_to(max_unlabelled))
        run(t);
    for (const Tree& t : detail::labelled_trees_up_to(max_labelled))
        run(t);
    return check.done();
}

/// Distinct-labelled trees: 2^n unit terms whose pruned label sets are all
/// subsets of the leaves, each exactly once.
inline CheckResult subset_bijection(std::size_t max_labelled)
{
    detail::Check check("subset bijection");
    for (const Tree& t : detail::labelled_trees_up_to(max_labelled)) {
        const Tensor2 d = coproduct_tree(t);
        std::vector<std::vector<std::string>> seen;
        bool units = true;
        for (const auto& [key, c] : d) {
            units = units && c == 1;
            std::vector<std::string> pruned;
            for (const Tree& p : key[0].trees())
                for (const auto& l : leaf_labels(p))
                    pruned.push_back(l);
            std::sort(pruned.begin(), pruned.end());
            seen.push_back(std::move(pruned));
        }
        std::sort(seen.begin(), seen.end());
        const bool distinct = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
        check.expect(units && distinct && d.size() == (std::size_t{1} << t.n_leaves()), [&] { return to_string(t); });
    }
    return check.done();
}

inline CheckResult counit_axioms(std::size_t max_leaves)
{
    detail::Check check("counit axioms");
    for (const Forest& f : detail::forests_up_to(max_leaves)) {
        const Tensor2 d = coproduct(f);
        LinComb left;
        LinComb right;
        for (const auto& [key, c] : d) {
            if (key[0].empty())
                left.add(key[1], c);
            if (key[1].empty())
                right.add(key[0], c);
        }
        check.expect(left == basis(f) && right == basis(f), [&] { return to_string(f); });
    }
    return check.done();
}

inline CheckResult antipode_axiom(std::size_t max_leaves)
{
    detail::Check check("antipode axiom");
    auto id = [](const Forest& f) { return basis(f); };
    auto s = [](const Forest& f) { return antipode(f); };
    for (const Forest& f : detail::forests_up_to(max_leaves)) {
        const Tensor2 d = coproduct(f);
        const LinComb expected = f.empty() ? unit() : LinComb{};
        check.expect(detail::multiply_legs(d, s, id) == expected && detail::multiply_legs(d, id, s) == expected,
                     [&] { return to_string(f); });
    }
    return check.done();
}

/// Recursive antipode equals the total-cut sum; signs follow the parity of
/// the component count; absolute coefficients sum to 3^(n-1).
inline CheckResult antipode_total_cuts(std::size_t max_leaves)
{
    detail::Check check("antipode by binary-total cuts, signs, 3^(n-1)");
    for (const Tree& t : detail::trees_up_to(max_leaves)) {
        const LinComb s = antipode_tree(t);
        bool signs = true;
        for (const auto& [f, c] : s)
            signs = signs && ((f.size() % 2 == 0) == (c > 0));
        Integer expected_mass = 1;
        for (std::size_t i = 1; i < t.n_leaves(); ++i)
            expected_mass *= 3;
        check.expect(s == antipode_by_total_cuts(t) && signs && s.abs_mass() == Rational(expected_mass),
                     [&] { return to_string(t); });
    }
    return check.done();
}

inline CheckResult grading(std::size_t max_leaves)
{
    detail::Check check("coproduct grading");
    for (const Forest& f : detail::forests_up_to(max_leaves)) {
        bool ok = true;
        for (const auto& [key, c] : coproduct(f))
            ok = ok && key[0].n_leaves() + key[1].n_leaves() == f.n_leaves();
        check.expect(ok, [&] { return to_string(f); });
    }
    return check.done();
}

inline CheckResult comb_formula(std::size_t max_leaves)
{
    detail::Check check("comb coproduct formula");
    for (std::size_t n = 2; n <= max_leaves; ++n)
        check.expect(comb_coproduct_formula(n) == coproduct_tree(comb_tree(n)), [&] { return "C_" + std::to_string(n); });
    return check.done();
}

inline CheckResult character_morphism(std::size_t max_leaves)
{
    detail::Check check("leaf character is a Hopf morphism");
    for (const Forest& f : detail::forests_up_to(max_leaves))
        check.expect(leaf_character(coproduct(f)) == binomial_coproduct(leaf_character(f)),
                     [&] { return to_string(f); });
    return check.done();
}

inline std::vector<CheckResult> hopf_suite(const Bounds& b)
{
    const std::size_t n = b.max_leaves;
    return {coassociativity(n, std::min<std::size_t>(n, 5)),
            subset_bijection(std::min<std::size_t>(n, 6)),
            counit_axioms(n),
            antipode_axiom(n),
            antipode_total_cuts(n),
            grading(n),
            comb_formula(std::max<std::size_t>(n, 2)),
            character_morphism(n)};
}

inline CheckResult vinberg(std::size_t max_total)
{
    detail::Check check("Vinberg identity");
    const auto trees = detail::trees_up_to(max_total);
    for (const Tree& x : trees)
        for (const Tree& y : trees)
            for (const Tree& z : trees) {
                if (x.n_leaves() + y.n_leaves() + z.n_leaves() > max_total)
                    continue;
                const LinComb bx = basis(x), by = basis(y), bz = basis(z);
                check.expect(associator(bx, by, bz) == associator(bx, bz, by), [&] {
                    return to_string(x) + " | " + to_string(y) + " | " + to_string(z);
                });
            }
    return check.done();
}

inline CheckResult non_freeness()
{
    detail::Check check("cherry <| leaf = 3 C_3, leaf <| cherry = C_3");
    const Tree cherry = comb_tree(2);
    check.expect(prelie(cherry, Tree::dot()) == basis(comb_tree(3), 3), [] { return std::string("cherry <| leaf"); });
    check.expect(prelie(Tree::dot(), cherry) == basis(comb_tree(3)), [] { return std::string("leaf <| cherry"); });
    return check.done();
}

inline CheckResult guin_oudom(std::size_t max_total)
{
    detail::Check check("graft enumeration matches the Guin-Oudom recursion");
    const auto forests = detail::forests_up_to(max_total);
    for (const Forest& a : forests)
        for (const Forest& b : forests) {
            if (a.n_leaves() + b.n_leaves() > max_total)
                continue;
            check.expect(triangle_monomials(a, b) == triangle_recursive(a, b),
                         [&] { return to_string(a) + " <| " + to_string(b); });
        }
    return check.done();
}

inline CheckResult star_associativity(std::size_t max_total, std::size_t random_trials, std::size_t random_total,
                                      std::uint64_t seed)
{
    detail::Check check("star associativity");
    const auto forests = detail::forests_up_to(std::max(max_total, random_total));
    auto run = [&](const Forest& a, const Forest& b, const Forest& c) {
        const LinComb la = basis(a), lb = basis(b), lc = basis(c);
        check.expect(star(star(la, lb), lc) == star(la, star(lb, lc)),
                     [&] { return to_string(a) + " * " + to_string(b) + " * " + to_string(c); });
    };
    for (const Forest& a : forests)
        for (const Forest& b : forests)
            for (const Forest& c : forests)
                if (a.n_leaves() + b.n_leaves() + c.n_leaves() <= max_total)
                    run(a, b, c);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, forests.size() - 1);
    for (std::size_t done = 0; done < random_trials;) {
        const Forest& a = forests[pick(rng)];
        const Forest& b = forests[pick(rng)];
        const Forest& c = forests[pick(rng)];
        if (a.n_leaves() + b.n_leaves() + c.n_leaves() > random_total)
            continue;
        run(a, b, c);
        ++done;
    }
    return check.done();
}

inline CheckResult shuffle_properties(std::size_t max_leaves)
{
    detail::Check check("shuffle coproduct coassociative and cocommutative");
    auto sh = [](const Forest& f) { return shuffle_coproduct(f); };
    for (const Forest& f : detail::forests_up_to(max_leaves)) {
        const Tensor2 d = shuffle_coproduct(f);
        Tensor2 flipped;
        for (const auto& [k, c] : d)
            flipped.add({k[1], k[0]}, c);
        check.expect(d == flipped && t2_apply_left(sh, d) == t2_apply_right(sh, d), [&] { return to_string(f); });
    }
    return check.done();
}

/// Sh(a * b) = Sh(a) * Sh(b) with * taken leg by leg.
inline CheckResult bialgebra_compatibility(std::size_t max_leaves)
{
    detail::Check check("shuffle coproduct is multiplicative for star");
    const auto forests = detail::forests_up_to(max_leaves);
    for (const Forest& a : forests)
        for (const Forest& b : forests) {
            if (a.n_leaves() + b.n_leaves() > max_leaves)
                continue;
            const Tensor2 lhs = shuffle_coproduct(star_monomials(a, b));
            Tensor2 rhs;
            for (const auto& [ka, ca] : shuffle_coproduct(a))
                for (const auto& [kb, cb] : shuffle_coproduct(b))
                    rhs.add_scaled(tensor(star_monomials(ka[0], kb[0]), star_monomials(ka[1], kb[1])), ca * cb);
            check.expect(lhs == rhs, [&] { return to_string(a) + " * " + to_string(b); });
        }
    return check.done();
}

inline CheckResult star_homogeneity(std::size_t max_leaves)
{
    detail::Check check("star, growth and pruning are homogeneous");
    const auto forests = detail::forests_up_to(max_leaves);
    for (const Forest& a : forests) {
        check.expect(is_homogeneous(growth(basis(a)), a.n_leaves() + 1) &&
                         (a.empty() || is_homogeneous(pruning(basis(a)), a.n_leaves() - 1)),
                     [&] { return to_string(a); });
        for (const Forest& b : forests)
            if (a.n_leaves() + b.n_leaves() <= max_leaves)
                check.expect(is_homogeneous(star_monomials(a, b), a.n_leaves() + b.n_leaves()),
                             [&] { return to_string(a) + " * " + to_string(b); });
    }
    return check.done();
}

inline std::vector<CheckResult> prelie_suite(const Bounds& b)
{
    const std::size_t n = b.max_leaves;
    return {vinberg(n),
            non_freeness(),
            guin_oudom(n),
            star_associativity(std::min<std::size_t>(n, 5), 200, std::min<std::size_t>(n, 6), b.seed),
            shuffle_properties(n),
            bialgebra_compatibility(std::min<std::size_t>(n, 4)),
            star_homogeneity(std::min<std::size_t>(n, 5))};
}

/// The worked triple: cherry * {•, •, cherry} against ((((••)•)(••))•).
inline DualityReport worked_example()
{
    const Tree dot = Tree::dot();
    const Tree cherry = Tree::join(dot, dot);
    const Tree c = Tree::join(Tree::join(comb_tree(3), cherry), dot);
    return duality_check(single(cherry), Forest{dot, dot, cherry}, single(c));
}

inline CheckResult duality(std::size_t max_leaves, std::vector<DualityReport>* reports = nullptr)
{
    detail::Check check("duality <a*b, c> = <b (x) a, Delta(c)>");
    auto all = duality_sweep(max_leaves);
    for (const auto& r : all)
        check.expect(r.pass, [&] { return to_string(r.a) + " | " + to_string(r.b) + " | " + to_string(r.c); });
    if (reports)
        *reports = std::move(all);
    return check.done();
}

inline CheckResult duality_worked_example()
{
    detail::Check check("worked example n=14, m=7, 56 = 56");
    const auto r = worked_example();
    check.expect(r.n_count == 14 && r.m_count == 7 && r.lhs == 56 && r.rhs == 56 && r.pass,
                 [&] { return "n=" + r.n_count.str() + " m=" + r.m_count.str(); });
    return check.done();
}

/// <Sh(F), G (x) H> = <F, G H>.
inline CheckResult shuffle_adjunction(std::size_t max_leaves)
{
    detail::Check check("shuffle coproduct is adjoint to disjoint union");
    const auto forests = detail::forests_up_to(max_leaves);
    for (const Forest& f : forests) {
        const Tensor2 sh = shuffle_coproduct(f);
        for (const Forest& g : forests)
            for (const Forest& h : forests) {
                if (g.n_leaves() + h.n_leaves() != f.n_leaves())
                    continue;
                check.expect(pair_tensor2(sh, Tensor2::basis({g, h})) == pair(f, disjoint_union(g, h)),
                             [&] { return to_string(f) + " | " + to_string(g) + " | " + to_string(h); });
            }
    }
    return check.done();
}

inline std::vector<CheckResult> duality_suite(const Bounds& b, std::vector<DualityReport>* reports = nullptr)
{
    return {duality(std::min<std::size_t>(b.max_leaves, 5), reports), duality_worked_example(),
            shuffle_adjunction(std::min<std::size_t>(b.max_leaves, 5))};
}

inline CheckResult growth_pruning_adjoint(std::size_t max_leaves)
{
    detail::Check check("growth and pruning are adjoint");
    check.expect(adjointness_check(max_leaves), [] { return std::string("see adjointness_check"); });
    return check.done();
}

inline CheckResult pruning_to_leaf(std::size_t max_leaves)
{
    detail::Check check("P^(k-1)(T) = k! •");
    for (const Tree& t : detail::trees_up_to(max_leaves)) {
        const std::size_t k = t.n_leaves();
        check.expect(power(pruning, basis(t), k - 1) == basis(Tree::dot(), Rational(factorial(k))),
                     [&] { return to_string(t); });
    }
    return check.done();
}

inline CheckResult exponential_coefficients(std::size_t degree)
{
    detail::Check check("W(•) coefficient of T is 1/s_T");
    const LinComb w = prelie_exponential(degree);
    for (const Tree& t : detail::trees_up_to(degree))
        check.expect(w.coefficient(single(t)) == Rational(Integer(1), t.aut_order()), [&] { return to_string(t); });
    check.expect(w.size() == detail::trees_up_to(degree).size(), [] { return std::string("extra terms in W(•)"); });
    return check.done();
}

inline std::vector<CheckResult> exp_suite(const Bounds& b)
{
    return {growth_pruning_adjoint(std::max<std::size_t>(b.max_leaves, 2)), pruning_to_leaf(b.max_leaves),
            exponential_coefficients(b.degree)};
}

} // namespace binhopf::verify
