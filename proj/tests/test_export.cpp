#include <gtest/gtest.h>

#include <set>

#include "quadlattice/export.hpp"

using namespace quadlattice;

namespace {

LatticeDocument doc_for(int d, int f, unsigned layers, unsigned K = 4, bool top = false)
{
    auto lc = LatticeContext::make(OrderContext::make(d, f));
    return make_document(lc, build_lattice(lc, layers, K, top));
}

} // namespace

TEST(Json, Schema)
{
    auto j = lattice_to_json(doc_for(-1, 5, 1, 3));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"d", "f", "splitting", "tau", "m", "nodes", "edges"}));
    EXPECT_EQ(j["splitting"], "split");
    EXPECT_EQ(j["m"], 1);
    auto const& n0 = j["nodes"][0];
    std::vector<std::string> nkeys;
    for (auto it = n0.begin(); it != n0.end(); ++it) nkeys.push_back(it.key());
    EXPECT_EQ(nkeys, (std::vector<std::string>{"id", "hnf", "label", "layer", "normExp", "dModule", "invertible", "principal"}));
    EXPECT_EQ(n0["hnf"], Json::array({5, 0, 1}));
    EXPECT_TRUE(n0["principal"].is_null());
    EXPECT_TRUE(lattice_to_json(doc_for(-1, 3, 1))["m"].is_null());
    for (auto const& e : j["edges"]) EXPECT_EQ(e.size(), 2u);
}

TEST(Json, PrincipalRendering)
{
    auto j = lattice_to_json(doc_for(-1, 2, 1));
    std::set<std::string> gens, labels;
    for (auto const& n : j["nodes"]) {
        labels.insert(n["label"].get<std::string>());
        if (!n["principal"].is_null()) gens.insert(n["principal"].get<std::string>());
    }
    EXPECT_TRUE(labels.count("P^3"));
    EXPECT_TRUE(gens.count("2+0*w"));
    EXPECT_TRUE(gens.count("2+2*w"));
}

TEST(Json, RoundTrip)
{
    for (auto [d, f] : {std::pair{-1, 3}, {-1, 5}, {-1, 2}, {5, 2}, {10, 3}}) {
        for (bool top : {false, true}) {
            auto doc = doc_for(d, f, 2, 3, top);
            auto back = lattice_from_json_text(lattice_to_json_text(doc));
            ASSERT_EQ(back.graph.nodes.size(), doc.graph.nodes.size());
            for (std::size_t i = 0; i < doc.graph.nodes.size(); ++i) {
                auto const& a = doc.graph.nodes[i];
                auto const& b = back.graph.nodes[i];
                EXPECT_EQ(a.ideal, b.ideal);
                EXPECT_EQ(a.label(), b.label());
                EXPECT_EQ(a.layer, b.layer);
                EXPECT_EQ(a.norm_exp, b.norm_exp);
                EXPECT_EQ(a.d_module, b.d_module);
                EXPECT_EQ(a.invertible, b.invertible);
                EXPECT_EQ(a.generator, b.generator);
            }
            EXPECT_EQ(back.graph.edges, doc.graph.edges);
            EXPECT_EQ(back.d, doc.d);
            EXPECT_EQ(back.m, doc.m);
            EXPECT_EQ(lattice_to_json_text(back), lattice_to_json_text(doc));
        }
    }
}

TEST(Json, RejectsBadInput)
{
    EXPECT_THROW(lattice_from_json_text("{}"), std::exception);
    EXPECT_THROW(lattice_from_json_text(R"({"d":-1,"f":3,"splitting":"weird","tau":1,"m":null,"nodes":[],"edges":[]})"),
                 std::exception);
    EXPECT_THROW(lattice_from_json_text(R"({"d":-1,"f":3,"splitting":"inert","tau":1,"m":null,"nodes":[],"edges":[[0,1]]})"),
                 std::exception);
}

TEST(Json, BigIntegersAsStrings)
{
    EXPECT_EQ(integer_to_json(Integer(-7)), Json(-7));
    Integer big = pow(Integer(10), 30);
    EXPECT_EQ(integer_to_json(big), Json(big.str()));
    EXPECT_EQ(integer_from_json(integer_to_json(big)), big);
}

TEST(Dot, DeterministicWithRanks)
{
    auto a = lattice_to_dot(doc_for(-1, 3, 2));
    auto b = lattice_to_dot(doc_for(-1, 3, 2));
    EXPECT_EQ(a, b);
    EXPECT_NE(a.find("subgraph rank_1_1"), std::string::npos);
    EXPECT_NE(a.find("subgraph rank_1_2"), std::string::npos);
    EXPECT_NE(a.find("subgraph rank_2_3"), std::string::npos);
    EXPECT_NE(a.find("subgraph rank_2_4"), std::string::npos);
    EXPECT_NE(a.find("n0 -> n1;"), std::string::npos);
    EXPECT_NE(a.find("label=\"F\\nO(3,0,1)\""), std::string::npos);
}

TEST(Report, Json)
{
    VerifyOptions o;
    o.inject_formula_node = IdealRep{Ring::InO, 5, 1, 1};
    auto r = verify_theorems(OrderContext::make(-1, 5), 3, o);
    auto j = report_to_json(r);
    EXPECT_EQ(j["passed"], false);
    EXPECT_EQ(j["failures"], 1);
    std::size_t with_witness = 0;
    for (auto const& c : j["checks"])
        if (!c["witness"].is_null()) ++with_witness;
    EXPECT_EQ(with_witness, 1u);
}
