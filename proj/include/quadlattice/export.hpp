#pragma once

// JSON and DOT serialisation of lattices and conformance reports.
//
// Lattice JSON:
//   {"d", "f", "splitting", "tau", "m": int|null,
//    "nodes": [{"id", "hnf": [q, r, s], "label", "layer", "normExp",
//               "dModule", "invertible", "principal": "x+y*w"|null}],
//    "edges": [[parentId, childId]]}
// Integers that do not fit in 64 bits are written as decimal strings.

#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "quadlattice/error.hpp"
#include "quadlattice/ideal.hpp"
#include "quadlattice/integer.hpp"
#include "quadlattice/lattice.hpp"
#include "quadlattice/oracle.hpp"
#include "quadlattice/splitting.hpp"

namespace quadlattice {

using Json = nlohmann::ordered_json;

inline Json integer_to_json(Integer const& n)
{
    if (fits_int64(n)) return Json(n.convert_to<std::int64_t>());
    return Json(n.str());
}

inline Integer integer_from_json(Json const& j)
{
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

/// Lattice plus the field data that the JSON header carries.
struct LatticeDocument {
    Integer d;
    Integer f;
    SplittingType stype = SplittingType::Inert;
    unsigned tau = 1;
    std::optional<unsigned> m;
    LatticeGraph graph;
};

inline LatticeDocument make_document(LatticeContext const& lc, LatticeGraph graph)
{
    return {lc.ctx.d(), lc.ctx.f(), lc.split.stype, lc.split.tau, lc.split.m, std::move(graph)};
}

inline Json lattice_to_json(LatticeDocument const& doc)
{
    Json j;
    j["d"] = integer_to_json(doc.d);
    j["f"] = integer_to_json(doc.f);
    j["splitting"] = std::string(splitting_name(doc.stype));
    j["tau"] = doc.tau;
    j["m"] = doc.m ? Json(*doc.m) : Json(nullptr);
    Json nodes = Json::array();
    for (std::size_t i = 0; i < doc.graph.nodes.size(); ++i) {
        auto const& n = doc.graph.nodes[i];
        Json jn;
        jn["id"] = i;
        jn["hnf"] = Json::array({integer_to_json(n.ideal.q), integer_to_json(n.ideal.r), integer_to_json(n.ideal.s)});
        jn["label"] = n.label();
        jn["layer"] = n.layer;
        jn["normExp"] = n.norm_exp;
        jn["dModule"] = n.d_module;
        jn["invertible"] = n.invertible;
        jn["principal"] = n.generator ? Json(to_string(*n.generator)) : Json(nullptr);
        nodes.push_back(std::move(jn));
    }
    j["nodes"] = std::move(nodes);
    Json edges = Json::array();
    for (auto const& [p, c] : doc.graph.edges) edges.push_back(Json::array({p, c}));
    j["edges"] = std::move(edges);
    return j;
}

inline SplittingType splitting_from_name(std::string const& s)
{
    if (s == "inert") return SplittingType::Inert;
    if (s == "split") return SplittingType::Split;
    if (s == "ramified") return SplittingType::Ramified;
    throw std::invalid_argument("unknown splitting type " + s);
}

/// Inverse of lattice_to_json.  Node ids must be 0..n-1 in order.
inline LatticeDocument lattice_from_json(Json const& j)
{
    LatticeDocument doc;
    doc.d = integer_from_json(j.at("d"));
    doc.f = integer_from_json(j.at("f"));
    doc.stype = splitting_from_name(j.at("splitting").get<std::string>());
    doc.tau = j.at("tau").get<unsigned>();
    if (!j.at("m").is_null()) doc.m = j.at("m").get<unsigned>();
    for (auto const& jn : j.at("nodes")) {
        if (jn.at("id").get<std::size_t>() != doc.graph.nodes.size())
            throw std::invalid_argument("node ids are not consecutive");
        LatticeNode n;
        auto const& h = jn.at("hnf");
        n.ideal = IdealRep{Ring::InO, integer_from_json(h.at(0)), integer_from_json(h.at(1)), integer_from_json(h.at(2))};
        n.labels.push_back(jn.at("label").get<std::string>());
        n.layer = jn.at("layer").get<unsigned>();
        n.norm_exp = jn.at("normExp").get<unsigned>();
        n.d_module = jn.at("dModule").get<bool>();
        n.invertible = jn.at("invertible").get<bool>();
        if (!jn.at("principal").is_null()) n.generator = parse_quadint(jn.at("principal").get<std::string>());
        doc.graph.nodes.push_back(std::move(n));
    }
    for (auto const& e : j.at("edges")) {
        std::size_t p = e.at(0).get<std::size_t>(), c = e.at(1).get<std::size_t>();
        if (p >= doc.graph.nodes.size() || c >= doc.graph.nodes.size())
            throw std::invalid_argument("edge refers to a missing node");
        doc.graph.edges.emplace_back(p, c);
    }
    return doc;
}

inline std::string lattice_to_json_text(LatticeDocument const& doc) { return lattice_to_json(doc).dump(2) + "\n"; }

inline LatticeDocument lattice_from_json_text(std::string const& text) { return lattice_from_json(Json::parse(text)); }

namespace detail {

inline std::string dot_escape(std::string const& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace detail

/// Graphviz source with one rank=same subgraph per (layer, normExp).
/// Output depends only on the node list order, which build_lattice fixes.
inline std::string lattice_to_dot(LatticeDocument const& doc)
{
    std::ostringstream os;
    os << "digraph lattice {\n";
    os << "  // d=" << doc.d << " f=" << doc.f << " " << splitting_name(doc.stype) << " tau=" << doc.tau;
    if (doc.m) os << " m=" << *doc.m;
    os << "\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=box, fontname=\"Helvetica\"];\n";

    std::map<std::pair<unsigned, unsigned>, std::vector<std::size_t>> ranks;
    for (std::size_t i = 0; i < doc.graph.nodes.size(); ++i) {
        auto const& n = doc.graph.nodes[i];
        ranks[{n.layer, n.norm_exp}].push_back(i);
    }
    for (auto const& [key, ids] : ranks) {
        os << "  subgraph rank_" << key.first << "_" << key.second << " {\n";
        os << "    rank=same;\n";
        for (auto i : ids) {
            auto const& n = doc.graph.nodes[i];
            std::string text = detail::dot_escape(n.label()) + "\\n" + to_string(n.ideal);
            if (n.generator) text += "\\n(" + to_string(*n.generator) + ")";
            os << "    n" << i << " [label=\"" << text << "\"";
            if (n.d_module) os << ", style=filled, fillcolor=lightgrey";
            else if (n.principal()) os << ", peripheries=2";
            os << "];\n";
        }
        os << "  }\n";
    }
    for (auto const& [p, c] : doc.graph.edges) os << "  n" << p << " -> n" << c << ";\n";
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------

inline Json report_to_json(ConformanceReport const& r)
{
    Json j;
    j["d"] = integer_to_json(r.d);
    j["f"] = integer_to_json(r.f);
    j["splitting"] = std::string(splitting_name(r.stype));
    j["K"] = r.K;
    j["oracle"] = r.with_oracle;
    if (r.with_oracle) j["oracleKmax"] = r.oracle_kmax;
    j["passed"] = r.all_passed();
    j["failures"] = r.failures();
    Json checks = Json::array();
    for (auto const& c : r.checks) {
        Json jc;
        jc["claim"] = c.claim;
        jc["statement"] = c.statement;
        jc["pass"] = c.passed;
        jc["witness"] = c.passed ? Json(nullptr) : Json(c.witness);
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    return j;
}

} // namespace quadlattice
