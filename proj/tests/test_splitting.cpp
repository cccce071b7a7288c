#include <gtest/gtest.h>

#include "quadlattice/splitting.hpp"

using namespace quadlattice;

namespace {

QuadInt q(long x, long y) { return QuadInt{Integer(x), Integer(y)}; }
IdealRep D(long a, long b, long c) { return IdealRep{Ring::InD, a, b, c}; }

SplitData data(int d, int f)
{
    auto ctx = OrderContext::make(d, f);
    return split_data(ctx, unit_group(ctx));
}

} // namespace

TEST(Splitting, Type)
{
    EXPECT_EQ(splitting_type(OrderContext::make(-1, 3)), SplittingType::Inert);
    EXPECT_EQ(splitting_type(OrderContext::make(-1, 5)), SplittingType::Split);
    EXPECT_EQ(splitting_type(OrderContext::make(-1, 2)), SplittingType::Ramified);
    EXPECT_EQ(splitting_type(OrderContext::make(5, 2)), SplittingType::Inert);
    EXPECT_EQ(splitting_type(OrderContext::make(-7, 2)), SplittingType::Split);
    EXPECT_EQ(splitting_type(OrderContext::make(-3, 3)), SplittingType::Ramified);
    EXPECT_EQ(splitting_type(OrderContext::make(10, 3)), SplittingType::Split);
    EXPECT_EQ(splitting_name(SplittingType::Ramified), "ramified");
}

// Legendre symbol of the discriminant decides the type for odd f.
TEST(Splitting, AgreesWithKronecker)
{
    for (int d : {-11, -7, -5, -3, -2, -1, 2, 3, 5, 10, 13}) {
        for (int f : {3, 5, 7, 11, 13}) {
            auto ctx = OrderContext::make(d, f);
            Integer disc = mod(ctx.disc_D(), f);
            SplittingType want = SplittingType::Inert;
            if (disc == 0) want = SplittingType::Ramified;
            else
                for (Integer x = 1; x < f; ++x)
                    if (mod(x * x - disc, f) == 0) want = SplittingType::Split;
            EXPECT_EQ(splitting_type(ctx), want) << d << " " << f;
        }
    }
}

TEST(Splitting, PrimeAbove)
{
    EXPECT_EQ(prime_above(OrderContext::make(-1, 2)), D(2, 1, 1));
    auto c = OrderContext::make(-5, 2);
    EXPECT_EQ(prime_above(c), ideal_from_generators(c, Ring::InD, {QuadInt(2), q(1, 1)}));
    EXPECT_EQ(prime_above(OrderContext::make(-1, 5)), D(5, 2, 1));
    // f = 2, d = 3 mod 4 uses (2, 1 + sqrt d); otherwise (f, sqrt d)
    auto r = OrderContext::make(3, 2);
    EXPECT_EQ(prime_above(r), ideal_from_generators(r, Ring::InD, {QuadInt(2), q(1, 1)}));
    auto t = OrderContext::make(-2, 2);
    EXPECT_EQ(prime_above(t), ideal_from_generators(t, Ring::InD, {QuadInt(2), q(0, 1)}));
    for (int d : {-1, -2, -3, -5, -7, -11, 2, 3, 5, 10})
        for (int f : {2, 3, 5, 7}) {
            auto ctx = OrderContext::make(d, f);
            auto st = splitting_type(ctx);
            if (st == SplittingType::Inert) continue;
            IdealRep P = prime_above(ctx);
            EXPECT_EQ(ideal_norm(P), f);
            IdealRep fD = ideal_from_generators(ctx, Ring::InD, {QuadInt(f)});
            if (st == SplittingType::Split) {
                EXPECT_NE(P, conjugate_ideal(ctx, P));
                EXPECT_EQ(product(ctx, P, conjugate_ideal(ctx, P)), fD);
            } else {
                EXPECT_EQ(P, conjugate_ideal(ctx, P));
                EXPECT_EQ(product(ctx, P, P), fD);
            }
        }
}

TEST(ClassData, GaussianFive)
{
    auto sd = data(-1, 5);
    EXPECT_EQ(sd.stype, SplittingType::Split);
    EXPECT_EQ(*sd.m, 1u);
    EXPECT_EQ(*sd.beta, q(2, 1));
    EXPECT_EQ(sd.tau, 2u);
}

TEST(ClassData, MinusFive)
{
    auto ctx = OrderContext::make(-5, 3);
    auto sd = split_data(ctx, unit_group(ctx));
    EXPECT_EQ(*sd.m, 2u);
    EXPECT_EQ(abs(norm(ctx, *sd.beta)), 9);
    EXPECT_EQ(*sd.beta, q(2, -1));
    EXPECT_EQ(principal_ideal(ctx, Ring::InD, *sd.beta), power(ctx, *sd.P, 2));
    EXPECT_EQ(*data(-5, 7).m, 2u);
    EXPECT_EQ(*data(-1, 13).m, 1u);
}

TEST(ClassData, RealAndRamified)
{
    auto sd = data(10, 3);
    EXPECT_EQ(*sd.m, 2u);
    EXPECT_EQ(sd.tau, 2u);
    auto rp = data(-1, 2);
    ASSERT_TRUE(rp.beta.has_value());
    EXPECT_EQ(*rp.beta, q(1, 1));
    EXPECT_FALSE(data(-5, 2).beta.has_value());
}

TEST(ClassData, CapIsEnforced)
{
    auto ctx = OrderContext::make(-5, 3);
    auto u = unit_group(ctx);
    try {
        class_order_and_generator(ctx, u, prime_above(ctx), 1);
        FAIL();
    } catch (Error const& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IterationCapExceeded);
    }
}

TEST(CompositeConductor, Components)
{
    auto c6 = OrderContext::make_any_conductor(-1, 6);
    auto comps = conductor_factorization(c6);
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0].primary, ideal_from_generators(c6, Ring::InO, {QuadInt(2), q(0, 6)}));
    EXPECT_EQ(comps[1].primary, ideal_from_generators(c6, Ring::InO, {QuadInt(3), q(0, 6)}));
    EXPECT_EQ(comps[0].radical, comps[0].primary);

    auto c4 = OrderContext::make_any_conductor(-1, 4);
    auto one = conductor_factorization(c4);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].exponent, 2u);
    EXPECT_EQ(one[0].primary, ideal_from_generators(c4, Ring::InO, {QuadInt(4), q(0, 4)}));
    EXPECT_EQ(one[0].radical, ideal_from_generators(c4, Ring::InO, {QuadInt(2), q(0, 4)}));

    auto c7 = OrderContext::make(-1, 7);
    auto prime = conductor_factorization(c7);
    ASSERT_EQ(prime.size(), 1u);
    EXPECT_EQ(prime[0].primary, conductor(c7));
}

TEST(CompositeConductor, MultipliesBack)
{
    for (auto [d, f] : {std::pair{-1, 6}, {-1, 12}, {5, 10}, {-3, 30}, {2, 9}}) {
        auto chk = check_conductor_factorization(OrderContext::make_any_conductor(d, f));
        EXPECT_TRUE(chk.product_is_F) << d << " " << f;
        EXPECT_TRUE(chk.ok()) << d << " " << f;
    }
}
