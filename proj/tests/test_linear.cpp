#include <gtest/gtest.h>
#include <gmpxx.h>

#include <map>
#include <random>

#include "binhopf.hpp"

using namespace binhopf;

namespace {

std::vector<Forest> small_forests()
{
    std::vector<Forest> out;
    for (std::size_t n = 0; n <= 4; ++n)
        for (const Forest& f : enumerate_forests(n))
            out.push_back(f);
    return out;
}

struct RandomSource {
    std::mt19937_64 rng{2024};
    std::vector<Forest> pool = small_forests();

    Rational rational()
    {
        std::uniform_int_distribution<long> num(-40, 40);
        std::uniform_int_distribution<long> den(1, 12);
        return Rational(num(rng), den(rng));
    }

    LinComb lincomb()
    {
        LinComb out;
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int i = 0; i < 5; ++i)
            out.add(pool[pick(rng)], rational());
        return out;
    }
};

mpq_class to_mpq(const Rational& r)
{
    mpq_class q(to_string(r));
    q.canonicalize();
    return q;
}

} // namespace

TEST(Rational, Formatting)
{
    EXPECT_EQ(to_string(Rational(1)), "1");
    EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
    EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("1/"), ParseError);
    EXPECT_THROW(parse_rational("x"), ParseError);
    EXPECT_EQ(factorial(7), 5040);
    EXPECT_EQ(binomial(8, 3), 56);
}

TEST(LinearCombination, ModuleAxioms)
{
    RandomSource src;
    for (int trial = 0; trial < 300; ++trial) {
        const LinComb a = src.lincomb(), b = src.lincomb(), c = src.lincomb();
        const Rational r = src.rational(), s = src.rational();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a + LinComb{}, a);
        EXPECT_EQ(r * (a + b), r * a + r * b);
        EXPECT_EQ((r + s) * a, r * a + s * a);
        EXPECT_EQ((r * s) * a, r * (s * a));
        EXPECT_EQ(Rational(1) * a, a);
        EXPECT_TRUE((Rational(0) * a).is_zero());
        EXPECT_EQ(-(-a), a);
        LinComb d = a;
        d.add_scaled(b, r);
        EXPECT_EQ(d, a + r * b);
    }
}

TEST(LinearCombination, NoZeroCoefficientsStored)
{
    const Forest f({Tree::dot()});
    LinComb a = basis(f, Rational(1, 3));
    a.add(f, Rational(-1, 3));
    EXPECT_TRUE(a.is_zero());
    EXPECT_EQ(a.size(), 0u);
    EXPECT_EQ(a, LinComb{});
}

// Mirrors a random sequence of operations with GMP rationals keyed by the
// forest encoding and compares every coefficient.
TEST(LinearCombination, AgreesWithGmpOnTenThousandOps)
{
    RandomSource src;
    std::uniform_int_distribution<std::size_t> pick(0, src.pool.size() - 1);
    std::uniform_int_distribution<int> op(0, 9);
    LinComb mine;
    std::map<std::string, mpq_class> oracle;
    auto compare = [&] {
        std::size_t nonzero = 0;
        for (const auto& [key, q] : oracle)
            nonzero += q != 0 ? 1 : 0;
        ASSERT_EQ(mine.size(), nonzero);
        for (const auto& [f, c] : mine)
            ASSERT_EQ(to_mpq(c), oracle[f.enc()]) << to_string(f);
    };
    for (int step = 0; step < 10'000; ++step) {
        const int kind = op(src.rng);
        if (kind < 7) {
            const Forest& f = src.pool[pick(src.rng)];
            const Rational c = src.rational();
            mine.add(f, c);
            oracle[f.enc()] += to_mpq(c);
        } else if (kind < 9) {
            Rational c = src.rational();
            if (c == 0)
                c = 1;
            mine *= c;
            for (auto& [key, q] : oracle)
                q *= to_mpq(c);
        } else {
            mine = -mine;
            for (auto& [key, q] : oracle)
                q = -q;
        }
        if (step % 50 == 0)
            compare();
    }
    compare();
}

TEST(LinearCombination, ProductsAndTensors)
{
    const Tree dot = Tree::dot();
    const Forest one({dot});
    const LinComb x = basis(one, 2) + basis(Forest({Tree::join(dot, dot)}), -1);
    const LinComb sq = lc_multiply(x, x);
    EXPECT_EQ(sq.coefficient(Forest({dot, dot})), 4);
    EXPECT_EQ(sq.coefficient(Forest({dot, Tree::join(dot, dot)})), -4);
    EXPECT_EQ(lc_multiply(unit(), x), x);
    const Tensor2 t = tensor(x, unit());
    EXPECT_EQ(t.size(), 2u);
    EXPECT_EQ(t.coefficient({one, Forest{}}), 2);
    EXPECT_EQ(tensor_multiply(t, Tensor2::basis({Forest{}, one})).coefficient({one, one}), 2);
    EXPECT_TRUE(is_homogeneous(sq, 4) == false);
    EXPECT_TRUE(is_homogeneous(basis(one), 1));
    EXPECT_EQ(x.mass(), 1);
    EXPECT_EQ(x.abs_mass(), 3);
}

TEST(LinearCombination, TextFormat)
{
    const Tree dot = Tree::dot();
    LinComb a;
    EXPECT_EQ(to_string(a), "0");
    a.add(Forest({dot}), Rational(-1));
    a.add(Forest({Tree::join(dot, dot)}), Rational(1, 2));
    a.add(Forest{}, Rational(3));
    EXPECT_EQ(to_string(a), "3 1 - 1 * + 1/2 (* *)");
    const Tensor2 t = Tensor2::basis({Forest({dot}), Forest{}}, Rational(-2));
    EXPECT_EQ(to_string(t), "-2 * ⨂ 1");
}
