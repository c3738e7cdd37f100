#include <gtest/gtest.h>

#include "binhopf.hpp"
#include "binhopf/json_io.hpp"

using namespace binhopf;

namespace {

const Tree dot = Tree::dot();
const Tree cherry = Tree::join(dot, dot);

std::vector<Forest> forests_up_to(std::size_t n)
{
    std::vector<Forest> out;
    for (std::size_t k = 0; k <= n; ++k)
        for (const Forest& f : enumerate_forests(k))
            out.push_back(f);
    return out;
}

} // namespace

TEST(Pairing, DiagonalWithSymmetryWeights)
{
    const Forest f({dot, dot, cherry});
    EXPECT_EQ(pair(f, f), 4);
    EXPECT_EQ(pair(f, single(cherry)), 0);
    EXPECT_EQ(pair(Forest{}, Forest{}), 1);
    const LinComb a = basis(f, 3) + basis(single(cherry), Rational(1, 2));
    const LinComb b = basis(f, -1) + basis(single(cherry), 4);
    EXPECT_EQ(pair_linear(a, b), Rational(3 * -1 * 4) + Rational(1, 2) * 4 * 2);
    EXPECT_EQ(pair_linear(a, b), pair_linear(b, a));
}

TEST(Duality, WorkedExample)
{
    const Forest a = single(cherry);
    const Forest b({dot, dot, cherry});
    const Forest c = single(Tree::join(Tree::join(comb_tree(3), cherry), dot));
    const DualityReport r = duality_check(a, b, c);
    EXPECT_EQ(r.n_count, 14);
    EXPECT_EQ(r.m_count, 7);
    EXPECT_EQ(r.lhs, 56);
    EXPECT_EQ(r.rhs, 56);
    EXPECT_TRUE(r.pass);
}

TEST(Duality, EveryTripleUpToFiveLeaves)
{
    const auto reports = duality_sweep(5);
    std::size_t nonzero = 0;
    for (const auto& r : reports) {
        EXPECT_TRUE(r.pass) << to_string(r.a) << " | " << to_string(r.b) << " | " << to_string(r.c);
        nonzero += r.n_count != 0 ? 1 : 0;
    }
    EXPECT_GT(nonzero, 0u);
    EXPECT_THROW(duality_sweep(9), ResourceLimit);
}

TEST(Duality, StarIsDualToCoproductAsBilinearForms)
{
    const auto fs = forests_up_to(4);
    for (const Forest& a : fs)
        for (const Forest& b : fs)
            for (const Forest& c : fs) {
                if (a.n_leaves() + b.n_leaves() != c.n_leaves())
                    continue;
                EXPECT_EQ(pair_linear(star_monomials(a, b), basis(c)),
                          pair_tensor2(Tensor2::basis({b, a}), coproduct(c)));
            }
}

TEST(Duality, MismatchedDegreesPassVacuously)
{
    const DualityReport r = duality_check(single(dot), single(dot), single(dot));
    EXPECT_EQ(r.n_count, 0);
    EXPECT_TRUE(r.pass);
}

TEST(Duality, ShuffleIsAdjointToUnion)
{
    const auto fs = forests_up_to(4);
    for (const Forest& f : fs)
        for (const Forest& g : fs)
            for (const Forest& h : fs)
                if (g.n_leaves() + h.n_leaves() == f.n_leaves()) {
                    EXPECT_EQ(pair_tensor2(shuffle_coproduct(f), Tensor2::basis({g, h})),
                              pair(f, disjoint_union(g, h)));
                }
}

TEST(Duality, GrowthAndPruningAreAdjoint)
{
    EXPECT_TRUE(adjointness_check(7));
    // on forests pruning may delete a lone leaf, so its adjoint is F * leaf
    for (std::size_t n = 0; n <= 4; ++n)
        for (const Forest& f : enumerate_forests(n))
            for (const Forest& g : enumerate_forests(n + 1))
                EXPECT_EQ(pair_linear(star_monomials(f, single(dot)), basis(g)), pair_linear(basis(f), pruning(basis(g))))
                    << to_string(f) << " | " << to_string(g);
}

TEST(Json, ReportAndLinComb)
{
    const auto r = duality_check(single(cherry), Forest({dot, dot, cherry}),
                                 single(Tree::join(Tree::join(comb_tree(3), cherry), dot)));
    const auto j = to_json(r);
    EXPECT_EQ(j.at("lhs").get<std::string>(), "56");
    EXPECT_TRUE(j.at("pass").get<bool>());
    const auto lc = to_json(antipode(single(cherry)));
    EXPECT_EQ(lc.at("terms").size(), 2u);
    const auto t2 = to_json(coproduct(single(dot)));
    EXPECT_TRUE(t2.at("terms").at(0).at("left").empty());
    EXPECT_EQ(t2.at("terms").at(0).at("right").at(0).get<std::string>(), "*");
}
