#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "binhopf/enumerate.hpp"
#include "binhopf/hopf.hpp"
#include "binhopf/limits.hpp"
#include "binhopf/linear.hpp"
#include "binhopf/prelie.hpp"

namespace binhopf {

/// <F, G> = s_F when F and G are the same forest, 0 otherwise.
inline Rational pair(const Forest& f, const Forest& g)
{
    return f == g ? Rational(f.aut_order()) : Rational(0);
}

inline Rational pair_linear(const LinComb& a, const LinComb& b)
{
    Rational out = 0;
    for (const auto& [f, c] : a) {
        const Rational other = b.coefficient(f);
        if (other != 0)
            out += c * other * Rational(f.aut_order());
    }
    return out;
}

inline Rational pair_tensor2(const Tensor2& a, const Tensor2& b)
{
    Rational out = 0;
    for (const auto& [key, c] : a) {
        const Rational other = b.coefficient(key);
        if (other != 0)
            out += c * other * Rational(key[0].aut_order() * key[1].aut_order());
    }
    return out;
}

/// One instance of the duality identity <a * b, c> = <b (x) a, Delta(c)>.
/// b is the pruned side and a the remainder side of the coproduct.
struct DualityReport {
    Forest a;
    Forest b;
    Forest c;
    Integer n_count;  // coefficient of c in a * b
    Integer m_count;  // coefficient of b (x) a in Delta(c)
    Integer lhs;      // n_count * s_c
    Integer rhs;      // m_count * s_a * s_b
    bool pass = false;
};

namespace detail {

inline Integer as_integer(const Rational& r)
{
    if (boost::multiprecision::denominator(r) != 1)
        throw Error("expected an integral multiplicity, got " + to_string(r));
    return boost::multiprecision::numerator(r);
}

inline DualityReport make_report(const Forest& a, const Forest& b, const Forest& c, const Rational& n,
                                 const Rational& m)
{
    DualityReport r{a, b, c, as_integer(n), as_integer(m), 0, 0, false};
    r.lhs = r.n_count * c.aut_order();
    r.rhs = r.m_count * a.aut_order() * b.aut_order();
    r.pass = r.lhs == r.rhs;
    return r;
}

} // namespace detail

inline DualityReport duality_check(const Forest& a, const Forest& b, const Forest& c, const Limits& limits = {})
{
    if (a.n_leaves() + b.n_leaves() != c.n_leaves())
        return detail::make_report(a, b, c, 0, 0);
    const Rational n = star_monomials(a, b, limits).coefficient(c);
    const Rational m = coproduct(c).coefficient({b, a});
    return detail::make_report(a, b, c, n, m);
}

/// Every unlabelled triple with deg(a) + deg(b) = deg(c) <= max_leaves,
/// ordered by c, then a, then b in enumeration order.
inline std::vector<DualityReport> duality_sweep(std::size_t max_leaves, const Limits& limits = {})
{
    require_within(max_leaves, limits.max_duality_leaves, "duality_sweep");
    std::vector<std::vector<Forest>> by_degree;
    for (std::size_t d = 0; d <= max_leaves; ++d)
        by_degree.push_back(enumerate_forests(d, limits));

    std::map<std::pair<Forest, Forest>, LinComb> stars;
    std::vector<DualityReport> out;
    for (std::size_t d = 0; d <= max_leaves; ++d) {
        for (const Forest& c : by_degree[d]) {
            const Tensor2 delta = coproduct(c);
            for (std::size_t i = 0; i <= d; ++i) {
                for (const Forest& a : by_degree[i]) {
                    for (const Forest& b : by_degree[d - i]) {
                        auto key = std::make_pair(a, b);
                        auto it = stars.find(key);
                        if (it == stars.end())
                            it = stars.emplace(key, star_monomials(a, b, limits)).first;
                        out.push_back(detail::make_report(a, b, c, it->second.coefficient(c), delta.coefficient({b, a})));
                    }
                }
            }
        }
    }
    return out;
}

/// <N^k(T), T'> = <T, P^k(T')> for every unlabelled tree pair with
/// |T'| = |T| + k <= max_leaves and k >= 1.
inline bool adjointness_check(std::size_t max_leaves, const Limits& limits = {})
{
    require_within(max_leaves, limits.max_tree_leaves, "adjointness_check");
    for (std::size_t n = 1; n < max_leaves; ++n) {
        for (const Tree& t : enumerate_trees(n, std::string(unlabelled), limits)) {
            LinComb grown = basis(t);
            for (std::size_t k = 1; n + k <= max_leaves; ++k) {
                grown = growth(grown);
                for (const Tree& u : enumerate_trees(n + k, std::string(unlabelled), limits)) {
                    const LinComb pruned = power(pruning, basis(u), k);
                    if (pair_linear(grown, basis(u)) != pair_linear(basis(t), pruned))
                        return false;
                }
            }
        }
    }
    return true;
}

} // namespace binhopf
