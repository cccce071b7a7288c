#pragma once

// The lattice of F-primary ideals of O, built from the closed-form
// description of its first layer (the basic ideals) in each splitting
// case, with deeper layers obtained by scaling with powers of f.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadlattice/error.hpp"
#include "quadlattice/ideal.hpp"
#include "quadlattice/integer.hpp"
#include "quadlattice/quadratic_core.hpp"
#include "quadlattice/splitting.hpp"

namespace quadlattice {

struct LatticeNode {
    IdealRep ideal;
    unsigned norm_exp = 0;          // N(ideal) = f^norm_exp
    unsigned layer = 0;             // ideal ⊆ F^layer, ⊄ F^(layer+1); 0 for O itself
    bool d_module = false;
    bool invertible = false;
    std::optional<QuadInt> generator;
    bool power_of_F = false;
    std::vector<std::string> labels;   // first one is the display label

    bool principal() const { return generator.has_value(); }
    std::string label() const { return labels.empty() ? std::string() : labels.front(); }
};

struct LatticeGraph {
    std::vector<LatticeNode> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;   // (parent, child): parent covers child
};

/// Everything needed to build lattices for one (d, f).
struct LatticeContext {
    OrderContext ctx;
    UnitGroupData units;
    SplitData split;

    static LatticeContext make(OrderContext const& ctx, unsigned class_cap = default_class_order_cap)
    {
        auto units = unit_group(ctx);
        auto sd = split_data(ctx, units, class_cap);
        return {ctx, std::move(units), std::move(sd)};
    }
};

/// Ideals strictly between fQ and Q, for basic Q != fO.
///
/// If Q is a D-module the result is [J, J_0, ..., J_{f-1}] with
/// J = (f^k, f^2 alpha) and J_a = (f^(k+1), a f^k + f alpha); otherwise it
/// is the single ideal J = (f^k, f^2 alpha) = fQD.  `hint` replaces the
/// primitive-form alpha; it must satisfy Q = (f^k, f hint).
inline std::vector<IdealRep> intermediates(OrderContext const& ctx, IdealRep const& Q,
                                           std::optional<QuadInt> const& hint = std::nullopt)
{
    auto [k, alpha] = primitive_form(ctx, Q);
    Integer const& f = ctx.f();
    if (hint) {
        if (ideal_from_generators(ctx, Ring::InO, {QuadInt{pow(f, k), 0}, f * *hint}) != Q)
            throw std::logic_error(to_string(*hint) + " does not give " + to_string(Q));
        alpha = *hint;
    }
    Integer fk = pow(f, k);
    QuadInt f_alpha = f * alpha;
    std::vector<IdealRep> out;
    out.push_back(ideal_from_generators(ctx, Ring::InO, {QuadInt{fk, 0}, f * f_alpha}));
    if (is_D_module(ctx, Q)) {
        for (Integer a = 0; a < f; ++a)
            out.push_back(ideal_from_generators(ctx, Ring::InO, {QuadInt{fk * f, 0}, QuadInt{a * fk, 0} + f_alpha}));
    }
    IdealRep fQ = scale(Q, f);
    for (auto const& J : out)
        if (J == Q || J == fQ || !contains(ctx, Q, J) || !contains(ctx, J, fQ))
            throw std::logic_error(to_string(J) + " is not strictly between " + to_string(fQ) + " and " + to_string(Q));
    return out;
}

namespace detail {

inline LatticeNode annotate(LatticeContext const& lc, IdealRep const& I)
{
    auto const& ctx = lc.ctx;
    LatticeNode n;
    n.ideal = I;
    n.norm_exp = exact_log(ideal_norm(I), ctx.f()).value_or(0);
    n.layer = I == unit_ideal(Ring::InO) ? 0 : conductor_depth(ctx, I);
    n.d_module = is_D_module(ctx, I);
    n.invertible = is_invertible(ctx, I);
    n.generator = is_principal_O(ctx, lc.units, I);
    n.power_of_F = n.layer > 0 && I == conductor_power(ctx, n.layer);
    return n;
}

/// Insertion-ordered set of ideals, merging labels of duplicates.
class NodeCollector {
    std::map<IdealRep, std::size_t> index_;
    std::vector<std::pair<IdealRep, std::vector<std::string>>> items_;

  public:
    void add(IdealRep const& I, std::string label)
    {
        auto [it, fresh] = index_.try_emplace(I, items_.size());
        if (fresh) items_.push_back({I, {}});
        auto& labels = items_[it->second].second;
        if (std::find(labels.begin(), labels.end(), label) == labels.end()) labels.push_back(std::move(label));
    }

    std::vector<std::pair<IdealRep, std::vector<std::string>>> const& items() const { return items_; }
};

inline std::string idx(std::string const& base, std::string const& sub) { return base + "_" + sub; }

} // namespace detail

/// Order used for display and deterministic output.
inline bool node_order(LatticeNode const& a, LatticeNode const& b)
{
    return std::tie(a.layer, a.norm_exp, a.ideal.q, a.ideal.r, a.ideal.s) <
           std::tie(b.layer, b.norm_exp, b.ideal.q, b.ideal.r, b.ideal.s);
}

/// Q_k = (f^k, f beta^k), checked against the contraction of P^k Pbar.
inline IdealRep split_Q(LatticeContext const& lc, unsigned k)
{
    auto const& ctx = lc.ctx;
    auto const& sd = lc.split;
    if (sd.stype != SplittingType::Split) throw std::logic_error("Q_k only exists in the split case");
    QuadInt t = ctx.f() * pow(ctx, *sd.beta, k);
    IdealRep Q = ideal_from_generators(ctx, Ring::InO, {QuadInt{pow(ctx.f(), k), 0}, t});
    IdealRep viaP = contract_to_O(ctx, product(ctx, power(ctx, *sd.P, k), conjugate_ideal(ctx, *sd.P)));
    if (Q != viaP)
        throw std::logic_error("Q_" + std::to_string(k) + " = " + to_string(Q) + " differs from P^k Pbar = " + to_string(viaP));
    return Q;
}

/// The element t_n = f beta^n (split case).
inline QuadInt split_t(LatticeContext const& lc, unsigned n)
{
    return lc.ctx.f() * pow(lc.ctx, *lc.split.beta, n);
}

/// (f^(k+1), a f^k + t_k), the candidates for basic ideals of the split
/// case that contain no basic element.
inline IdealRep split_node(LatticeContext const& lc, unsigned k, Integer const& a)
{
    Integer fk = pow(lc.ctx.f(), k);
    return ideal_from_generators(lc.ctx, Ring::InO, {QuadInt{fk * lc.ctx.f(), 0}, QuadInt{a * fk, 0} + split_t(lc, k)});
}

/// All basic F-primary ideals of norm at most f^K (K only matters in the
/// split case, where the first layer is infinite).
inline std::vector<LatticeNode> basic_layer(LatticeContext const& lc, unsigned K)
{
    auto const& ctx = lc.ctx;
    auto const& sd = lc.split;
    IdealRep F = conductor(ctx);
    detail::NodeCollector nodes;
    nodes.add(F, "F");

    // jname "J" gives J_a; "J_{3" gives J_{3,a}
    auto add_intermediates = [&](IdealRep const& Q, std::string const& jname,
                                 std::optional<QuadInt> const& hint = std::nullopt) {
        auto list = intermediates(ctx, Q, hint);
        if (list.front() == f_times_O(ctx)) nodes.add(list.front(), "fO");
        bool braced = jname.back() != '}' && jname.find('{') != std::string::npos;
        for (std::size_t i = 1; i < list.size(); ++i) {
            std::string a = std::to_string(i - 1);
            nodes.add(list[i], braced ? jname + "," + a + "}" : detail::idx(jname, a));
        }
    };

    switch (sd.stype) {
    case SplittingType::Inert:
        add_intermediates(F, "J");
        break;
    case SplittingType::Split: {
        std::vector<IdealRep> Qs;
        for (unsigned k = 1; k <= K; ++k) {
            IdealRep Q = split_Q(lc, k);
            Qs.push_back(Q);
            nodes.add(Q, detail::idx("Q", std::to_string(k)));
            nodes.add(conjugate_ideal(ctx, Q), detail::idx("Qbar", std::to_string(k)));
        }
        for (unsigned k = 1; k <= K; ++k) {
            IdealRep const& Q = Qs[k - 1];
            std::string ks = std::to_string(k);
            QuadInt bk = pow(ctx, *sd.beta, k);
            // J_{k,a} = (f^(k+1), a f^k + t_k)
            add_intermediates(Q, "J_{" + ks, bk);
            add_intermediates(conjugate_ideal(ctx, Q), "Jbar_{" + ks, conjugate(ctx, bk));
        }
        break;
    }
    case SplittingType::Ramified: {
        IdealRep P3 = contract_to_O(ctx, power(ctx, *sd.P, 3));
        nodes.add(P3, "P^3");
        add_intermediates(F, "J");
        add_intermediates(P3, "H");
        break;
    }
    }

    std::vector<LatticeNode> out;
    for (auto const& [I, labels] : nodes.items()) {
        if (!is_basic(ctx, I)) continue;
        auto k = *norm_exponent(ctx, I);
        if (sd.stype == SplittingType::Split && k > K) continue;
        LatticeNode n = detail::annotate(lc, I);
        n.labels = labels;
        out.push_back(std::move(n));
    }
    return out;
}

/// The n-th layer: every basic ideal times f^(n-1).
inline std::vector<LatticeNode> layer_n(OrderContext const& ctx, std::vector<LatticeNode> const& basic, unsigned n)
{
    if (n == 0) throw std::invalid_argument("layers are numbered from 1");
    if (n == 1) return basic;
    Integer c = pow(ctx.f(), n - 1);
    std::string prefix = n == 2 ? std::string("f*") : "f^" + std::to_string(n - 1) + "*";
    std::vector<LatticeNode> out;
    for (auto const& b : basic) {
        LatticeNode s = b;
        s.ideal = scale(b.ideal, c);
        s.norm_exp = b.norm_exp + 2 * (n - 1);
        s.layer = n;
        if (b.generator) s.generator = c * *b.generator;
        s.labels.clear();
        for (auto const& l : b.labels) {
            if (l == "F")
                s.labels.push_back("F^" + std::to_string(n));
            else if (l == "fO")
                s.labels.push_back("f^" + std::to_string(n) + "O");
            else
                s.labels.push_back(prefix + l);
        }
        s.power_of_F = b.power_of_F;
        out.push_back(std::move(s));
    }
    return out;
}

inline LatticeNode top_node()
{
    LatticeNode n;
    n.ideal = unit_ideal(Ring::InO);
    n.invertible = true;
    n.generator = QuadInt(1);
    n.labels = {"O"};
    return n;
}

/// Covering relation of containment on `nodes` (sorted by node_order).
inline LatticeGraph hasse(OrderContext const& ctx, std::vector<LatticeNode> nodes, bool with_top = false)
{
    if (with_top && std::none_of(nodes.begin(), nodes.end(), [](auto const& n) { return n.layer == 0; }))
        nodes.push_back(top_node());
    std::sort(nodes.begin(), nodes.end(), node_order);
    std::size_t n = nodes.size();
    std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));   // below[i][j]: nodes[i] ⊋ nodes[j]
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && contains(ctx, nodes[i].ideal, nodes[j].ideal)) below[i][j] = 1;
    LatticeGraph g;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!below[i][j]) continue;
            bool covered = true;
            for (std::size_t k = 0; k < n && covered; ++k)
                if (below[i][k] && below[k][j]) covered = false;
            if (covered) g.edges.emplace_back(i, j);
        }
    g.nodes = std::move(nodes);
    return g;
}

/// Layers 1..layers of the lattice as a Hasse diagram.
inline LatticeGraph build_lattice(LatticeContext const& lc, unsigned layers, unsigned K, bool with_top = false)
{
    if (layers == 0) throw std::invalid_argument("at least one layer is required");
    auto basic = basic_layer(lc, K);
    std::vector<LatticeNode> all;
    for (unsigned n = 1; n <= layers; ++n) {
        auto L = layer_n(lc.ctx, basic, n);
        all.insert(all.end(), L.begin(), L.end());
    }
    return hasse(lc.ctx, std::move(all), with_top);
}

struct PrincipalBasic {
    QuadInt generator;
    IdealRep ideal;
};

/// Principal basic ideals predicted by the classification: f w O for the
/// unit classes w of D*/O*; in the split case also t_n w O and
/// conj(t_n) w O for m n <= K; in the ramified case f beta w O when P = beta D.
inline std::vector<PrincipalBasic> principal_basic_ideals(LatticeContext const& lc, unsigned K)
{
    auto const& ctx = lc.ctx;
    auto const& sd = lc.split;
    std::vector<PrincipalBasic> out;
    auto push = [&](QuadInt const& t) { out.push_back({t, principal_ideal(ctx, Ring::InO, t)}); };
    for (auto const& w : lc.units.coset_reps) push(ctx.f() * w);
    if (sd.stype == SplittingType::Split) {
        for (unsigned n = 1; *sd.m * n <= K; ++n) {
            QuadInt t = split_t(lc, n);
            for (auto const& w : lc.units.coset_reps) {
                push(mul(ctx, t, w));
                push(mul(ctx, conjugate(ctx, t), w));
            }
        }
    } else if (sd.stype == SplittingType::Ramified && sd.beta) {
        for (auto const& w : lc.units.coset_reps) push(mul(ctx, ctx.f() * *sd.beta, w));
    }
    return out;
}

/// A basic element: t = f(x + y w) with gcd(x, y) = 1 and |N(t)| a power of f.
inline bool is_basic_element(OrderContext const& ctx, QuadInt const& t)
{
    Integer const& f = ctx.f();
    if (t.x % f != 0 || t.y % f != 0) return false;
    if (gcd(t.x / f, t.y / f) != 1) return false;
    auto e = exact_log(abs(norm(ctx, t)), f);
    return e.has_value() && *e >= 2;
}

/// Every ideal of O containing tO, from F down to tO: (f^i, t) for
/// i = 1 .. log_f |N(t)|.  When t is associated to f the chain is F ⊃ fO.
inline std::vector<IdealRep> principal_chain(OrderContext const& ctx, QuadInt const& t)
{
    if (!is_basic_element(ctx, t)) throw Error(ErrorKind::NotBasicElement, to_string(t) + " is not a basic element");
    Integer const& f = ctx.f();
    unsigned e = *exact_log(abs(norm(ctx, t)), f);
    IdealRep tO = principal_ideal(ctx, Ring::InO, t);
    if (in_order(ctx, QuadInt{t.x / f, t.y / f})) return {conductor(ctx), tO};
    std::vector<IdealRep> chain;
    for (unsigned i = 1; i <= e; ++i) {
        IdealRep I = ideal_from_generators(ctx, Ring::InO, {QuadInt{pow(f, i), 0}, t});
        if (ideal_norm(I) != pow(f, i))
            throw std::logic_error("(f^" + std::to_string(i) + ", t) has norm " + ideal_norm(I).str());
        chain.push_back(I);
    }
    if (chain.back() != tO) throw std::logic_error("chain does not end at tO");
    return chain;
}

} // namespace quadlattice
