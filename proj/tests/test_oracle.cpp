#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "quadlattice/oracle.hpp"

using namespace quadlattice;

namespace {

QuadInt q(long x, long y) { return QuadInt{Integer(x), Integer(y)}; }
IdealRep O(long a, long b, long c) { return IdealRep{Ring::InO, a, b, c}; }

} // namespace

TEST(EnumeratePrimary, SmallCases)
{
    auto c3 = OrderContext::make(-1, 3);
    EXPECT_EQ(enumerate_primary(c3, 1), std::vector<IdealRep>{conductor(c3)});
    auto all = enumerate_primary(c3, 3);
    // norm f^2: the four intermediates; norm f^3: F^2 only
    std::size_t n2 = 0, n3 = 0;
    for (auto const& I : all) {
        auto e = *norm_exponent(c3, I);
        if (e == 2) ++n2;
        if (e == 3) ++n3;
    }
    EXPECT_EQ(n2, 4u);
    EXPECT_EQ(n3, 1u);
    auto c5 = OrderContext::make(-1, 5);
    auto e5 = enumerate_primary(c5, 3);
    EXPECT_TRUE(std::find(e5.begin(), e5.end(), O(25, 10, 1)) != e5.end());
}

TEST(EnumeratePrimary, EveryResultIsPrimaryAndSorted)
{
    for (int d : {-3, 2, -7}) {
        auto ctx = OrderContext::make(d, 3);
        auto all = enumerate_primary(ctx, 4);
        for (std::size_t i = 0; i < all.size(); ++i) {
            EXPECT_TRUE(is_F_primary(ctx, all[i]));
            if (i) EXPECT_LE(ideal_norm(all[i - 1]), ideal_norm(all[i]));
        }
        EXPECT_EQ(std::set<IdealRep>(all.begin(), all.end()).size(), all.size());
    }
}

TEST(EnumeratePrimary, Budget)
{
    auto ctx = OrderContext::make(-1, 7);
    try {
        enumerate_primary(ctx, 6, 1000);
        FAIL();
    } catch (Error const& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    }
    EXPECT_EQ(candidate_count(7, 3), 7 * 7 * 7 + 7);
    setenv("QUADLATTICE_BUDGET", "12345", 1);
    EXPECT_EQ(budget_from_env(), 12345u);
    unsetenv("QUADLATTICE_BUDGET");
    EXPECT_EQ(budget_from_env(), default_candidate_budget);
}

TEST(EnumerateBetween, Counts)
{
    auto c3 = OrderContext::make(-1, 3);
    EXPECT_EQ(enumerate_between(c3, conductor(c3), conductor_power(c3, 2)).size(), 4u);
    auto c2 = OrderContext::make(-1, 2);
    IdealRep F = conductor(c2);
    EXPECT_EQ(enumerate_between(c2, F, scale(F, 2)).size(), 3u);
    try {
        enumerate_between(c3, conductor(c3), conductor(c3));
        FAIL();
    } catch (Error const& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotNested);
    }
    EXPECT_THROW(enumerate_between(c3, f_times_O(c3), conductor(c3)), Error);
}

TEST(FreeAction, AllTypes)
{
    for (auto [d, f] : {std::pair{-1, 3}, {-1, 5}, {-1, 2}, {-3, 3}, {5, 2}, {10, 3}, {-5, 7}}) {
        auto r = verify_free_action(OrderContext::make(d, f));
        EXPECT_TRUE(r.ok()) << d << " " << f << ": " << (r.ok() ? "" : r.failures.front());
        EXPECT_EQ(r.group_order, r.expected_group_order);
        EXPECT_EQ(r.fixed_points, r.d_modules);
        EXPECT_EQ(r.intermediates, std::size_t(f + 1));
    }
}

TEST(Verify, AllPassWithManyChecks)
{
    auto r = verify_theorems(OrderContext::make(-1, 3), 3);
    EXPECT_TRUE(r.all_passed());
    EXPECT_GE(r.checks.size(), 12u);
    auto s = verify_theorems(OrderContext::make(-5, 3), 4);
    EXPECT_TRUE(s.all_passed());
    bool saw_class = false;
    for (auto const& c : s.checks)
        if (c.claim == "split-class-order") saw_class = c.passed;
    EXPECT_TRUE(saw_class);
}

TEST(Verify, WithoutOracle)
{
    VerifyOptions o;
    o.with_oracle = false;
    auto r = verify_theorems(OrderContext::make(-1, 2), 5, o);
    EXPECT_TRUE(r.all_passed());
    for (auto const& c : r.checks) EXPECT_NE(c.claim.rfind("oracle-", 0), 0u);
}

TEST(Verify, InjectedFaultGivesExactlyOneFailure)
{
    VerifyOptions o;
    o.inject_formula_node = O(5, 1, 1);
    auto r = verify_theorems(OrderContext::make(-1, 5), 3, o);
    ASSERT_EQ(r.failures(), 1u);
    for (auto const& c : r.checks)
        if (!c.passed) {
            EXPECT_EQ(c.claim, "oracle-equivalence");
            EXPECT_NE(c.witness.find("O(5,1,1)"), std::string::npos);
        }
}
