#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "quadlattice/lattice.hpp"

using namespace quadlattice;

namespace {

QuadInt q(long x, long y) { return QuadInt{Integer(x), Integer(y)}; }
IdealRep O(long a, long b, long c) { return IdealRep{Ring::InO, a, b, c}; }

std::set<IdealRep> ideals(std::vector<LatticeNode> const& v)
{
    std::set<IdealRep> s;
    for (auto const& n : v) s.insert(n.ideal);
    return s;
}

LatticeNode const* find(std::vector<LatticeNode> const& v, IdealRep const& I)
{
    auto it = std::find_if(v.begin(), v.end(), [&](auto const& n) { return n.ideal == I; });
    return it == v.end() ? nullptr : &*it;
}

} // namespace

TEST(Intermediates, InertF)
{
    auto ctx = OrderContext::make(-1, 3);
    auto list = intermediates(ctx, conductor(ctx));
    std::vector<IdealRep> want = {O(3, 0, 3)};
    for (long a = 0; a < 3; ++a) want.push_back(ideal_from_generators(ctx, Ring::InO, {QuadInt(9), q(3 * a, 3)}));
    EXPECT_EQ(list, want);
}

TEST(Intermediates, NonDModuleHasOne)
{
    auto ctx = OrderContext::make(-1, 3);
    auto list = intermediates(ctx, ideal_from_generators(ctx, Ring::InO, {QuadInt(9), q(3, 3)}));
    EXPECT_EQ(list.size(), 1u);
}

TEST(Intermediates, SplitFHasTwoDModules)
{
    auto ctx = OrderContext::make(-1, 5);
    auto list = intermediates(ctx, conductor(ctx));
    EXPECT_EQ(list.size(), 6u);
    EXPECT_EQ(std::count_if(list.begin(), list.end(), [&](auto const& I) { return is_D_module(ctx, I); }), 2);
}

TEST(BasicLayer, Inert)
{
    auto lc = LatticeContext::make(OrderContext::make(-1, 3));
    auto b = basic_layer(lc, 4);
    EXPECT_EQ(b.size(), 5u);
    EXPECT_EQ(b.front().label(), "F");
    for (auto const& n : b) EXPECT_TRUE(contains(lc.ctx, n.ideal, conductor_power(lc.ctx, 2)));
    // the two principal ones are 3O and 3iO
    EXPECT_EQ(std::count_if(b.begin(), b.end(), [](auto const& n) { return n.principal(); }), 2);
}

TEST(BasicLayer, SplitGaussian)
{
    auto lc = LatticeContext::make(OrderContext::make(-1, 5));
    auto const& ctx = lc.ctx;
    auto b = basic_layer(lc, 3);
    auto s = ideals(b);
    EXPECT_TRUE(s.count(O(25, 10, 1)));
    EXPECT_TRUE(s.count(conjugate_ideal(ctx, O(25, 10, 1))));
    EXPECT_TRUE(s.count(split_Q(lc, 3)));
    EXPECT_TRUE(s.count(conjugate_ideal(ctx, split_Q(lc, 3))));
    EXPECT_TRUE(s.count(conductor(ctx)));
    EXPECT_TRUE(s.count(f_times_O(ctx)));
    EXPECT_EQ(split_Q(lc, 2), O(25, 10, 1));
    for (unsigned k = 2; k <= 2; ++k)
        for (long a = 1; a <= 4; ++a) EXPECT_TRUE(s.count(split_node(lc, k, a)));
    auto const* q2 = find(b, O(25, 10, 1));
    ASSERT_NE(q2, nullptr);
    EXPECT_EQ(q2->label(), "Q_2");
    EXPECT_TRUE(q2->d_module);
    for (auto const& n : b) EXPECT_LE(n.norm_exp, 3u);
}

// One of the k = 1 nodes (f^2, a f + t_1) is the D-module conj(Q_2).
TEST(BasicLayer, SplitFirstNodeException)
{
    for (auto [d, f] : {std::pair{-1, 5}, {-5, 3}, {-5, 7}, {-2, 3}, {10, 3}}) {
        auto lc = LatticeContext::make(OrderContext::make(d, f));
        unsigned dmods = 0;
        for (long a = 1; a < f; ++a) {
            IdealRep Q = split_node(lc, 1, a);
            if (is_D_module(lc.ctx, Q)) {
                ++dmods;
                EXPECT_EQ(Q, conjugate_ideal(lc.ctx, split_Q(lc, 2)));
                EXPECT_EQ(mod(a + trace(lc.ctx, *lc.split.beta), f), 0);
            }
        }
        EXPECT_EQ(dmods, 1u) << d << " " << f;
        for (unsigned k = 2; k <= 3; ++k)
            for (long a = 1; a < f; ++a) EXPECT_TRUE(is_invertible(lc.ctx, split_node(lc, k, a)));
    }
}

TEST(BasicLayer, RamifiedGaussianTwo)
{
    auto lc = LatticeContext::make(OrderContext::make(-1, 2));
    auto b = basic_layer(lc, 4);
    EXPECT_EQ(b.size(), 6u);
    auto const* p3 = find(b, contract_to_O(lc.ctx, power(lc.ctx, *lc.split.P, 3)));
    ASSERT_NE(p3, nullptr);
    EXPECT_TRUE(std::find(p3->labels.begin(), p3->labels.end(), "P^3") != p3->labels.end());
    // H_a = (8, 2(1+i)) and (8, 4 + 2(1+i))
    auto s = ideals(b);
    EXPECT_TRUE(s.count(ideal_from_generators(lc.ctx, Ring::InO, {QuadInt(8), q(2, 2)})));
    EXPECT_TRUE(s.count(ideal_from_generators(lc.ctx, Ring::InO, {QuadInt(8), q(6, 2)})));
    auto const* h = find(b, ideal_from_generators(lc.ctx, Ring::InO, {QuadInt(8), q(2, 2)}));
    ASSERT_TRUE(h && h->principal());
    EXPECT_EQ(principal_ideal(lc.ctx, Ring::InO, *h->generator), h->ideal);
}

TEST(BasicLayer, RamifiedCounts)
{
    for (auto [d, f] : {std::pair{-1, 2}, {-5, 2}, {-3, 3}, {-5, 5}, {-7, 7}, {10, 5}, {3, 3}})
        EXPECT_EQ(basic_layer(LatticeContext::make(OrderContext::make(d, f)), 4).size(), std::size_t(2 * f + 2)) << d << f;
}

TEST(Layers, ScaleByF)
{
    auto lc = LatticeContext::make(OrderContext::make(-1, 3));
    auto b = basic_layer(lc, 4);
    auto two = layer_n(lc.ctx, b, 2);
    EXPECT_EQ(two.front().ideal, conductor_power(lc.ctx, 2));
    EXPECT_EQ(two.front().label(), "F^2");
    EXPECT_EQ(ideals(layer_n(lc.ctx, b, 1)), ideals(b));
    for (auto const& n : two) EXPECT_EQ(conductor_depth(lc.ctx, n.ideal), 2u);
}

TEST(Hasse, InertFigure)
{
    auto lc = LatticeContext::make(OrderContext::make(-1, 3));
    auto g = build_lattice(lc, 2, 4);
    ASSERT_EQ(g.nodes.size(), 10u);
    EXPECT_EQ(g.nodes[0].ideal, conductor(lc.ctx));
    EXPECT_EQ(g.nodes[5].ideal, conductor_power(lc.ctx, 2));
    std::set<std::pair<std::size_t, std::size_t>> e(g.edges.begin(), g.edges.end());
    for (std::size_t i = 1; i <= 4; ++i) {
        EXPECT_TRUE(e.count({0, i}));
        EXPECT_TRUE(e.count({i, 5}));
    }
    for (std::size_t i = 6; i <= 9; ++i) EXPECT_TRUE(e.count({5, i}));
    EXPECT_EQ(g.edges.size(), 12u);
}

TEST(Hasse, RamifiedFigure)
{
    auto lc = LatticeContext::make(OrderContext::make(-1, 2));
    auto g = build_lattice(lc, 1, 4, true);
    ASSERT_EQ(g.nodes.size(), 7u);
    EXPECT_EQ(g.nodes[0].label(), "O");
    std::vector<char> has_parent(g.nodes.size(), 0);
    for (auto const& [p, c] : g.edges) has_parent[c] = 1;
    EXPECT_FALSE(has_parent[0]);
    EXPECT_EQ(std::count(has_parent.begin(), has_parent.end(), 0), 1);
}

TEST(Hasse, SingleNode)
{
    auto ctx = OrderContext::make(-1, 3);
    LatticeNode n;
    n.ideal = conductor(ctx);
    n.layer = 1;
    n.norm_exp = 1;
    auto g = hasse(ctx, {n});
    EXPECT_TRUE(g.edges.empty());
}

TEST(PrincipalChain, SplitGaussian)
{
    auto ctx = OrderContext::make(-1, 5);
    QuadInt t = q(10, 5);
    auto chain = principal_chain(ctx, t);
    ASSERT_EQ(chain.size(), 3u);
    EXPECT_EQ(chain[0], conductor(ctx));
    EXPECT_EQ(chain[1], ideal_from_generators(ctx, Ring::InO, {QuadInt(25), t}));
    EXPECT_EQ(chain[2], principal_ideal(ctx, Ring::InO, t));
    auto f = principal_chain(ctx, QuadInt(5));
    EXPECT_EQ(f, (std::vector<IdealRep>{conductor(ctx), f_times_O(ctx)}));
    EXPECT_THROW(principal_chain(ctx, q(2, 1)), Error);
}

TEST(PrincipalChain, LengthIsMnPlusTwo)
{
    for (auto [d, f] : {std::pair{-1, 5}, {-5, 3}, {-5, 7}}) {
        auto lc = LatticeContext::make(OrderContext::make(d, f));
        for (unsigned n = 0; n <= 2; ++n) {
            auto chain = principal_chain(lc.ctx, split_t(lc, n));
            EXPECT_EQ(chain.size(), *lc.split.m * n + 2);
            for (std::size_t i = 0; i < chain.size(); ++i) EXPECT_EQ(ideal_norm(chain[i]), pow(Integer(f), unsigned(i + 1)));
        }
    }
}

TEST(PrincipalBasic, Census)
{
    auto lc = LatticeContext::make(OrderContext::make(-1, 5));
    auto pb = principal_basic_ideals(lc, 2);
    for (auto const& p : pb) {
        EXPECT_TRUE(is_basic(lc.ctx, p.ideal));
        EXPECT_TRUE(is_invertible(lc.ctx, p.ideal));
    }
    EXPECT_TRUE(is_basic_element(lc.ctx, q(10, 5)));
    EXPECT_FALSE(is_basic_element(lc.ctx, q(25, 0)));
    EXPECT_FALSE(is_basic_element(lc.ctx, q(5, 5)));
}
