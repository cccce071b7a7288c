#pragma once

// Brute-force ground truth.  F-primary ideals are enumerated straight from
// the definition (every HNF triple of index f^k that is closed under
// multiplication by f w), and the classification is checked against it.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quadlattice/error.hpp"
#include "quadlattice/ideal.hpp"
#include "quadlattice/integer.hpp"
#include "quadlattice/lattice.hpp"
#include "quadlattice/quadratic_core.hpp"
#include "quadlattice/splitting.hpp"

namespace quadlattice {

inline constexpr std::uint64_t default_candidate_budget = 10'000'000;

/// QUADLATTICE_BUDGET overrides the default candidate cap.
inline std::uint64_t budget_from_env()
{
    if (char const* v = std::getenv("QUADLATTICE_BUDGET")) {
        try {
            return std::stoull(v);
        } catch (std::exception const&) {
            throw Error(ErrorKind::BudgetExceeded, std::string("QUADLATTICE_BUDGET is not a number: ") + v);
        }
    }
    return default_candidate_budget;
}

/// Number of HNF triples (q, r, s) with q s = f^k, s | q, s | r, 0 <= r < q.
inline Integer candidate_count(Integer const& f, unsigned k)
{
    Integer total = 0;
    for (unsigned j = 0; 2 * j <= k; ++j) total += pow(f, k - 2 * j);
    return total;
}

inline bool theta_closed(OrderContext const& ctx, IdealRep const& I)
{
    QuadInt th = I.ring == Ring::InD ? ctx.omega() : ctx.theta();
    auto [b1, b2] = basis(ctx, I);
    return contains_element(ctx, I, mul(ctx, th, b1)) && contains_element(ctx, I, mul(ctx, th, b2));
}

/// All F-primary ideals of O of norm f^k, 1 <= k <= kmax, sorted by
/// (norm, q, r, s).
inline std::vector<IdealRep> enumerate_primary(OrderContext const& ctx, unsigned kmax,
                                               std::uint64_t budget = default_candidate_budget)
{
    Integer const& f = ctx.f();
    Integer work = 0;
    for (unsigned k = 1; k <= kmax; ++k) work += candidate_count(f, k);
    if (work > budget)
        throw Error(ErrorKind::BudgetExceeded, work.str() + " candidates exceed the budget of " + std::to_string(budget));

    IdealRep F = conductor(ctx);
    auto one_norm = [&ctx, &F, &f](unsigned k) {
        std::vector<IdealRep> found;
        for (unsigned j = 0; 2 * j <= k; ++j) {
            Integer s = pow(f, j);
            Integer q = pow(f, k - j);
            for (Integer r = 0; r < q; r += s) {
                IdealRep I{Ring::InO, q, r, s};
                if (theta_closed(ctx, I) && contains(ctx, F, I)) found.push_back(I);
            }
        }
        std::sort(found.begin(), found.end());
        return found;
    };
    std::vector<std::future<std::vector<IdealRep>>> parts;
    for (unsigned k = 1; k <= kmax; ++k) parts.push_back(std::async(std::launch::async, one_norm, k));
    std::vector<IdealRep> all;
    for (auto& p : parts) {
        auto v = p.get();
        all.insert(all.end(), v.begin(), v.end());
    }
    return all;
}

/// Every ideal K of O with J ⊊ K ⊊ I, found among the subgroups of I/J.
inline std::vector<IdealRep> enumerate_between(OrderContext const& ctx, IdealRep const& I, IdealRep const& J)
{
    require_same_ring(I, J);
    if (I == J || !contains(ctx, I, J))
        throw Error(ErrorKind::NotNested, to_string(J) + " is not strictly inside " + to_string(I));
    Integer index = ideal_norm(J) / ideal_norm(I);
    auto [e1, e2] = basis(ctx, I);
    std::vector<IdealRep> out;
    // sublattices {a e1, b e1 + c e2} of I with a c | [I : J]
    for (Integer a = 1; a <= index; ++a) {
        if (index % a != 0) continue;
        for (Integer c = 1; a * c <= index; ++c) {
            if ((index / a) % c != 0) continue;
            for (Integer b = 0; b < a; ++b) {
                QuadInt g1 = a * e1;
                QuadInt g2 = b * e1 + c * e2;
                auto v1 = *detail::to_theta(ctx, I.ring, g1);
                auto v2 = *detail::to_theta(ctx, I.ring, g2);
                auto [q, r, s] = detail::hnf({v1, v2});
                IdealRep L{I.ring, q, r, s};
                if (L == I || L == J) continue;
                if (!theta_closed(ctx, L) || !contains(ctx, L, J)) continue;
                out.push_back(L);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// The action of G = (D/F)* / (O/F)* on the ideals strictly between F and F^2.

struct FreeActionReport {
    unsigned group_order = 0;
    unsigned expected_group_order = 0;
    std::size_t intermediates = 0;
    std::size_t fixed_points = 0;
    std::size_t d_modules = 0;
    std::vector<std::size_t> orbit_sizes;   // orbits of non-fixed points
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Class representatives of (D/fD)* modulo the scalars (Z/f)*.
inline std::vector<QuadInt> residue_group(OrderContext const& ctx)
{
    Integer const& f = ctx.f();
    std::set<QuadInt> reps;
    for (Integer x = 0; x < f; ++x)
        for (Integer y = 0; y < f; ++y) {
            QuadInt z{x, y};
            if (mod(norm(ctx, z), f) == 0) continue;
            QuadInt best = z;
            for (Integer c = 1; c < f; ++c) {
                QuadInt cz{mod(c * x, f), mod(c * y, f)};
                if (cz < best) best = cz;
            }
            reps.insert(best);
        }
    return {reps.begin(), reps.end()};
}

inline FreeActionReport verify_free_action(OrderContext const& ctx)
{
    FreeActionReport rep;
    Integer const& f = ctx.f();
    auto G = residue_group(ctx);
    rep.group_order = static_cast<unsigned>(G.size());
    SplittingType st = splitting_type(ctx);
    Integer expected = st == SplittingType::Inert ? f + 1 : st == SplittingType::Split ? f - 1 : f;
    rep.expected_group_order = expected.convert_to<unsigned>();
    if (rep.group_order != rep.expected_group_order)
        rep.failures.push_back("|G| = " + std::to_string(rep.group_order) + ", expected " + expected.str());

    IdealRep F = conductor(ctx);
    IdealRep F2 = conductor_power(ctx, 2);
    auto ideals = enumerate_between(ctx, F, F2);
    rep.intermediates = ideals.size();
    std::map<IdealRep, std::size_t> where;
    for (std::size_t i = 0; i < ideals.size(); ++i) where[ideals[i]] = i;
    auto [f1, f2] = basis(ctx, F2);

    // action[g][i] = index of g * I_i
    std::vector<std::vector<std::size_t>> action(G.size(), std::vector<std::size_t>(ideals.size()));
    for (std::size_t g = 0; g < G.size(); ++g)
        for (std::size_t i = 0; i < ideals.size(); ++i) {
            auto [b1, b2] = basis(ctx, ideals[i]);
            IdealRep moved = ideal_from_generators(ctx, Ring::InO, {mul(ctx, G[g], b1), mul(ctx, G[g], b2), f1, f2});
            auto it = where.find(moved);
            if (it == where.end()) {
                rep.failures.push_back(to_string(G[g]) + " maps " + to_string(ideals[i]) + " outside the set");
                return rep;
            }
            action[g][i] = it->second;
        }

    std::vector<char> seen(ideals.size(), 0);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        bool dmod = is_D_module(ctx, ideals[i]);
        if (dmod) ++rep.d_modules;
        std::size_t stab = 0;
        for (std::size_t g = 0; g < G.size(); ++g)
            if (action[g][i] == i) ++stab;
        bool fixed = stab == G.size();
        if (fixed) ++rep.fixed_points;
        if (dmod && !fixed) rep.failures.push_back("D-module " + to_string(ideals[i]) + " is not fixed by G");
        if (!dmod && stab != 1)
            rep.failures.push_back(to_string(ideals[i]) + " has stabiliser of order " + std::to_string(stab));
        if (!fixed && !seen[i]) {
            std::set<std::size_t> orbit;
            for (std::size_t g = 0; g < G.size(); ++g) orbit.insert(action[g][i]);
            for (auto j : orbit) seen[j] = 1;
            rep.orbit_sizes.push_back(orbit.size());
            if (orbit.size() != G.size())
                rep.failures.push_back("orbit of " + to_string(ideals[i]) + " has size " + std::to_string(orbit.size()));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Conformance report.

struct CheckResult {
    std::string claim;
    std::string statement;
    bool passed = true;
    std::string witness;   // first counterexample, empty on success
};

struct ConformanceReport {
    Integer d;
    Integer f;
    SplittingType stype = SplittingType::Inert;
    unsigned K = 0;
    bool with_oracle = false;
    unsigned oracle_kmax = 0;
    std::vector<CheckResult> checks;

    std::size_t failures() const
    {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](auto const& c) { return !c.passed; }));
    }
    bool all_passed() const { return failures() == 0; }
};

struct VerifyOptions {
    bool with_oracle = true;
    std::optional<unsigned> oracle_kmax;          // defaults to K
    std::uint64_t budget = default_candidate_budget;
    std::optional<IdealRep> inject_formula_node;  // test hook: corrupts the formula side of one check
    unsigned class_cap = default_class_order_cap;
};

namespace detail {

class CheckRecorder {
    ConformanceReport& report_;

  public:
    explicit CheckRecorder(ConformanceReport& r) : report_(r) {}

    /// `body` returns an empty string on success, else a witness.
    template <class Body>
    void run(std::string claim, std::string statement, Body&& body)
    {
        CheckResult c{std::move(claim), std::move(statement), true, {}};
        try {
            c.witness = body();
        } catch (std::exception const& e) {
            c.witness = std::string("exception: ") + e.what();
        }
        c.passed = c.witness.empty();
        report_.checks.push_back(std::move(c));
    }
};

inline std::string describe_set_difference(std::set<IdealRep> const& a, std::set<IdealRep> const& b,
                                           std::string const& aname, std::string const& bname)
{
    for (auto const& x : a)
        if (!b.count(x)) return to_string(x) + " in " + aname + " but not in " + bname;
    for (auto const& x : b)
        if (!a.count(x)) return to_string(x) + " in " + bname + " but not in " + aname;
    return {};
}

} // namespace detail

inline ConformanceReport verify_theorems(OrderContext const& ctx, unsigned K, VerifyOptions const& opt = {})
{
    ConformanceReport report;
    report.d = ctx.d();
    report.f = ctx.f();
    report.K = K;
    report.with_oracle = opt.with_oracle;
    report.oracle_kmax = opt.oracle_kmax.value_or(K);
    detail::CheckRecorder check(report);

    LatticeContext lc = LatticeContext::make(ctx, opt.class_cap);
    auto const& sd = lc.split;
    report.stype = sd.stype;
    Integer const& f = ctx.f();
    IdealRep F = conductor(ctx);
    IdealRep F2 = conductor_power(ctx, 2);
    IdealRep fO = f_times_O(ctx);
    unsigned kmax = report.oracle_kmax;

    check.run("conductor-norm", "N(F^k) = f^(2k-1) and F^k = f^(k-1) F for k <= 5", [&]() -> std::string {
        for (unsigned k = 1; k <= 5; ++k) {
            IdealRep Fk = power(ctx, F, k);
            if (ideal_norm(Fk) != pow(f, 2 * k - 1)) return "N(F^" + std::to_string(k) + ") = " + ideal_norm(Fk).str();
            if (Fk != conductor_power(ctx, k)) return "F^" + std::to_string(k) + " = " + to_string(Fk);
        }
        return {};
    });

    check.run("conductor-square", "F^2 = fF and F is the D-ideal fD inside O", [&]() -> std::string {
        if (product(ctx, F, F) != scale(F, f)) return "F*F = " + to_string(product(ctx, F, F));
        if (extend_to_D(ctx, F) != ideal_from_generators(ctx, Ring::InD, {QuadInt{f, 0}})) return "FD != fD";
        if (index_in_extension(ctx, F) != 1) return "[FD : F] != 1";
        if (index_in_extension(ctx, fO) != f) return "[fD : fO] != f";
        if (!is_D_module(ctx, F) || is_invertible(ctx, F)) return "F must be a non-invertible D-module";
        if (is_principal_O(ctx, lc.units, F)) return "F is principal";
        return {};
    });

    check.run("conductor-generator", "(f, a) = F for every a in F \\ fO", [&]() -> std::string {
        for (Integer x = 0; x < f; ++x)
            for (Integer y = 1; y < f; ++y) {
                QuadInt a{f * x, f * y};
                if (ideal_from_generators(ctx, Ring::InO, {QuadInt{f, 0}, a}) != F) return "(f, " + to_string(a) + ") != F";
            }
        return {};
    });

    auto mids = intermediates(ctx, F);
    check.run("intermediate-count", "exactly f+1 pairwise distinct ideals lie strictly between F^2 and F", [&]() -> std::string {
        std::set<IdealRep> s(mids.begin(), mids.end());
        if (s.size() != mids.size()) return "duplicates among intermediates";
        if (Integer(mids.size()) != f + 1) return std::to_string(mids.size()) + " intermediates";
        return {};
    });

    check.run("d-module-census", "0 / 2 / 1 of the intermediates are D-modules (inert / split / ramified)", [&]() -> std::string {
        std::size_t n = std::count_if(mids.begin(), mids.end(), [&](auto const& I) { return is_D_module(ctx, I); });
        std::size_t want = sd.stype == SplittingType::Inert ? 0 : sd.stype == SplittingType::Split ? 2 : 1;
        if (n != want) return std::to_string(n) + " D-modules, expected " + std::to_string(want);
        return {};
    });

    check.run("unit-index", "tau = |D*/O*| divides f+1 / f-1 / f (inert / split / ramified)", [&]() -> std::string {
        Integer bound = sd.stype == SplittingType::Inert ? f + 1 : sd.stype == SplittingType::Split ? f - 1 : f;
        if (bound % sd.tau != 0) return "tau = " + std::to_string(sd.tau) + " does not divide " + bound.str();
        return {};
    });

    check.run("principal-intermediates", "the principal ideals between F^2 and F are exactly f w O, one per class of D*/O*", [&]() -> std::string {
        std::set<IdealRep> predicted;
        for (auto const& w : lc.units.coset_reps) predicted.insert(principal_ideal(ctx, Ring::InO, f * w));
        if (predicted.size() != sd.tau) return "f w O not pairwise distinct";
        std::set<IdealRep> found;
        for (auto const& I : mids)
            if (is_principal_O(ctx, lc.units, I)) found.insert(I);
        return detail::describe_set_difference(found, predicted, "principal intermediates", "{f w O}");
    });

    check.run("free-action", "G acts freely on the non-D-module intermediates and fixes the D-modules", [&]() -> std::string {
        auto rep = verify_free_action(ctx);
        return rep.ok() ? std::string() : rep.failures.front();
    });

    std::vector<LatticeNode> basic = basic_layer(lc, std::max(K, opt.with_oracle ? kmax : K));

    check.run("node-flags", "each basic ideal is either a D-module or invertible, and principal ones are invertible", [&]() -> std::string {
        for (auto const& n : basic) {
            if (n.d_module == n.invertible) return to_string(n.ideal) + " has d_module == invertible";
            if (n.principal() && !n.invertible) return to_string(n.ideal) + " principal but not invertible";
            if (n.layer != 1) return to_string(n.ideal) + " is not in the first layer";
        }
        return {};
    });

    check.run("d-module-criterion", "a basic (f^k, f a) != fO is a D-module iff f^(k-1) | N(a)", [&]() -> std::string {
        for (auto const& n : basic) {
            if (n.ideal == fO) continue;
            auto [k, alpha] = primitive_form(ctx, n.ideal);
            bool crit = norm(ctx, alpha) % pow(f, k - 1) == 0;
            if (crit != n.d_module) return to_string(n.ideal) + " disagrees with the norm criterion";
            if (ideal_from_generators(ctx, Ring::InO, {QuadInt{pow(f, k), 0}, f * alpha}) != n.ideal)
                return "primitive form of " + to_string(n.ideal) + " does not reproduce it";
            if (min_power_contained(ctx, n.ideal) != k) return "F^k minimality fails for " + to_string(n.ideal);
        }
        return {};
    });

    auto dichotomy = [&](IdealRep const& Q) -> std::string {
        IdealRep p = product(ctx, Q, conjugate_ideal(ctx, Q));
        Integer N = ideal_norm(Q);
        bool inv = p == IdealRep{Ring::InO, N, 0, N};
        bool dmod = p == scale(F, N);
        if (inv == dmod) return to_string(Q) + ": Q Qbar = " + to_string(p);
        if (inv != is_invertible(ctx, Q) || dmod != is_D_module(ctx, Q)) return to_string(Q) + ": predicates disagree";
        return {};
    };
    check.run("invertibility-dichotomy", "Q Qbar is N(Q) O or N(Q) fD, matching invertible / D-module", [&]() -> std::string {
        for (auto const& n : basic)
            if (auto w = dichotomy(n.ideal); !w.empty()) return w;
        return {};
    });

    check.run("principal-census", "the principal basic ideals are those predicted from units and basic elements", [&]() -> std::string {
        unsigned cut = std::max(K, opt.with_oracle ? kmax : K);
        std::set<IdealRep> predicted, found;
        for (auto const& pb : principal_basic_ideals(lc, cut))
            if (*norm_exponent(ctx, pb.ideal) <= cut) predicted.insert(pb.ideal);
        for (auto const& n : basic)
            if (n.principal()) found.insert(n.ideal);
        return detail::describe_set_difference(found, predicted, "principal nodes", "predicted principal ideals");
    });

    check.run("hasse-shape", "the two-layer diagram has F as its unique maximal node", [&]() -> std::string {
        auto g = build_lattice(lc, 2, K);
        std::vector<char> has_parent(g.nodes.size(), 0);
        for (auto const& [p, c] : g.edges) {
            if (!contains(ctx, g.nodes[p].ideal, g.nodes[c].ideal)) return "edge against containment";
            has_parent[c] = 1;
        }
        std::size_t roots = 0;
        for (std::size_t i = 0; i < g.nodes.size(); ++i)
            if (!has_parent[i]) {
                ++roots;
                if (g.nodes[i].ideal != F) return to_string(g.nodes[i].ideal) + " is maximal";
            }
        return roots == 1 ? std::string() : "no maximal node";
    });

    // --- case-specific structure
    switch (sd.stype) {
    case SplittingType::Inert:
        check.run("inert-first-layer", "every basic ideal contains F^2; they are F and the f+1 intermediates", [&]() -> std::string {
            if (Integer(basic.size()) != f + 2) return std::to_string(basic.size()) + " basic ideals";
            for (auto const& n : basic)
                if (!contains(ctx, n.ideal, F2)) return to_string(n.ideal) + " does not contain F^2";
            return {};
        });
        break;
    case SplittingType::Split:
        check.run("split-prime", "fD = P Pbar with P != Pbar of norm f", [&]() -> std::string {
            IdealRep Pb = conjugate_ideal(ctx, *sd.P);
            if (Pb == *sd.P) return "P = Pbar";
            if (product(ctx, *sd.P, Pb) != ideal_from_generators(ctx, Ring::InD, {QuadInt{f, 0}})) return "P Pbar != fD";
            if (ideal_norm(*sd.P) != f) return "N(P) != f";
            return {};
        });
        check.run("split-class-order", "beta D = P^m, no smaller power of P is principal, beta^n is never in O", [&]() -> std::string {
            unsigned m = *sd.m;
            if (principal_ideal(ctx, Ring::InD, *sd.beta) != power(ctx, *sd.P, m)) return "beta D != P^m";
            if (abs(norm(ctx, *sd.beta)) != pow(f, m)) return "|N(beta)| != f^m";
            for (unsigned j = 1; j < m; ++j)
                if (is_principal_D(ctx, lc.units, power(ctx, *sd.P, j))) return "P^" + std::to_string(j) + " is principal";
            for (unsigned n = 1; n <= 3 * m; ++n)
                if (in_order(ctx, pow(ctx, *sd.beta, n))) return "beta^" + std::to_string(n) + " lies in O";
            return {};
        });
        check.run("split-Qk", "Q_k = (f^k, t_k) = P^k Pbar are pairwise distinct D-modules of norm f^k", [&]() -> std::string {
            std::set<IdealRep> seen;
            for (unsigned k = 1; k <= K; ++k) {
                IdealRep Q = split_Q(lc, k);
                if (!seen.insert(Q).second) return "Q_" + std::to_string(k) + " repeats";
                if (ideal_norm(Q) != pow(f, k) || !is_D_module(ctx, Q)) return "Q_" + std::to_string(k) + " malformed";
            }
            return {};
        });
        check.run("split-chain", "the ideals containing t_n O are (f^i, t_n), i = 1..mn+2, of norm f^i", [&]() -> std::string {
            unsigned m = *sd.m;
            for (unsigned n = 0; n <= 2; ++n) {
                auto chain = principal_chain(ctx, split_t(lc, n));
                if (chain.size() != m * n + 2) return "chain of t_" + std::to_string(n) + " has length " + std::to_string(chain.size());
                for (std::size_t i = 0; i < chain.size(); ++i) {
                    if (ideal_norm(chain[i]) != pow(f, static_cast<unsigned>(i + 1))) return "norm mismatch in chain";
                    if (i > 0 && !contains(ctx, chain[i - 1], chain[i])) return "chain not descending";
                }
            }
            return {};
        });
        check.run("split-invertible-nodes",
                  "(f^(k+1), a f^k + t_k), 1 <= a < f, is an invertible basic ideal unless k = 1 and a = -Tr(beta) mod f, "
                  "where it is conj(Q_2)", [&]() -> std::string {
            for (unsigned k = 1; k <= std::min(3u, K); ++k)
                for (Integer a = 1; a < f; ++a) {
                    IdealRep Q = split_node(lc, k, a);
                    bool exceptional = k == 1 && mod(a + trace(ctx, *sd.beta), f) == 0;
                    if (exceptional) {
                        if (Q != conjugate_ideal(ctx, split_Q(lc, 2))) return to_string(Q) + " should be conj(Q_2)";
                    } else if (!is_invertible(ctx, Q) || !is_basic(ctx, Q)) {
                        return to_string(Q) + " not an invertible basic ideal";
                    }
                }
            return {};
        });
        break;
    case SplittingType::Ramified:
        check.run("ramified-prime", "fD = P^2 with P = Pbar", [&]() -> std::string {
            if (conjugate_ideal(ctx, *sd.P) != *sd.P) return "P != Pbar";
            if (product(ctx, *sd.P, *sd.P) != ideal_from_generators(ctx, Ring::InD, {QuadInt{f, 0}})) return "P^2 != fD";
            return {};
        });
        check.run("ramified-windows", "every basic Q satisfies P^4 < Q <= P^2 or P^5 < Q <= P^3", [&]() -> std::string {
            if (Integer(basic.size()) != 2 * f + 2) return std::to_string(basic.size()) + " basic ideals";
            IdealRep P2 = power(ctx, *sd.P, 2), P3 = power(ctx, *sd.P, 3);
            for (auto const& n : basic) {
                IdealRep ext = extend_to_D(ctx, n.ideal);
                if (ext != P2 && ext != P3) return to_string(n.ideal) + " extends to neither P^2 nor P^3";
                IdealRep low = contract_to_O(ctx, scale(ext, f));
                if (!contains(ctx, n.ideal, low) || n.ideal == low) return to_string(n.ideal) + " not above f QD";
            }
            return {};
        });
        check.run("ramified-principal-window", "a principal basic ideal lies strictly between P^5 and P^3 iff P is principal", [&]() -> std::string {
            IdealRep P3 = contract_to_O(ctx, power(ctx, *sd.P, 3));
            IdealRep P5 = contract_to_O(ctx, power(ctx, *sd.P, 5));
            bool found = false;
            for (auto const& I : enumerate_between(ctx, P3, P5))
                if (is_principal_O(ctx, lc.units, I)) found = true;
            if (found != sd.beta.has_value()) return found ? "principal ideal found but P is not principal" : "P principal but no principal ideal";
            return {};
        });
        break;
    }

    if (!opt.with_oracle) return report;

    // --- oracle side
    auto oracle = enumerate_primary(ctx, kmax, opt.budget);
    std::set<IdealRep> oracle_basic;
    for (auto const& I : oracle)
        if (!contains(ctx, F2, I)) oracle_basic.insert(I);

    check.run("oracle-intermediates", "brute-force enumeration between F^2 and F matches the f+1 formula ideals", [&]() -> std::string {
        auto between = enumerate_between(ctx, F, F2);
        return detail::describe_set_difference(std::set<IdealRep>(between.begin(), between.end()),
                                               std::set<IdealRep>(mids.begin(), mids.end()), "oracle", "formula");
    });

    check.run("oracle-equivalence", "the basic ideals of norm <= f^kmax found by brute force are exactly the constructed ones", [&]() -> std::string {
        std::set<IdealRep> formula;
        for (auto const& n : basic)
            if (n.norm_exp <= kmax) formula.insert(n.ideal);
        if (opt.inject_formula_node) formula.insert(*opt.inject_formula_node);
        return detail::describe_set_difference(oracle_basic, formula, "oracle", "formula");
    });

    check.run("oracle-layers", "layer n of the brute-force list is f^(n-1) times layer 1", [&]() -> std::string {
        for (unsigned n = 2; 2 * (n - 1) + 1 <= kmax; ++n) {
            std::set<IdealRep> layer, scaled;
            for (auto const& I : oracle)
                if (conductor_depth(ctx, I) == n) layer.insert(I);
            Integer c = pow(f, n - 1);
            for (auto const& I : oracle_basic)
                if (*norm_exponent(ctx, I) + 2 * (n - 1) <= kmax) scaled.insert(scale(I, c));
            auto w = detail::describe_set_difference(layer, scaled, "layer " + std::to_string(n), "f^(n-1) * layer 1");
            if (!w.empty()) return w;
        }
        return {};
    });

    check.run("oracle-basic-component", "every F-primary Q equals f^(k-1) times its basic component", [&]() -> std::string {
        for (auto const& I : oracle) {
            if (!is_F_primary(ctx, I)) return to_string(I) + " not F-primary";
            auto bc = basic_component(ctx, I);
            if (!is_basic(ctx, bc.basic) || scale(bc.basic, pow(f, bc.k - 1)) != I) return to_string(I) + " basic component fails";
            if (auto w = dichotomy(I); !w.empty()) return w;
        }
        return {};
    });

    if (sd.stype == SplittingType::Split) {
        check.run("oracle-Qk-chain", "the ideals containing Q_k are exactly O = Q_0, Q_1, ..., Q_k", [&]() -> std::string {
            for (unsigned k = 1; k <= std::min(K, kmax); ++k) {
                IdealRep Qk = split_Q(lc, k);
                std::set<IdealRep> found{unit_ideal(Ring::InO)}, want{unit_ideal(Ring::InO)};
                for (auto const& I : oracle)
                    if (contains(ctx, I, Qk)) found.insert(I);
                for (unsigned i = 1; i <= k; ++i) want.insert(split_Q(lc, i));
                auto w = detail::describe_set_difference(found, want, "oracle over Q_k", "{Q_i}");
                if (!w.empty()) return w;
            }
            return {};
        });
        check.run("oracle-t-chain", "the brute-force ideals containing t_n O form the chain (f^i, t_n)", [&]() -> std::string {
            for (unsigned n = 0; *sd.m * n + 2 <= kmax; ++n) {
                QuadInt t = split_t(lc, n);
                IdealRep tO = principal_ideal(ctx, Ring::InO, t);
                std::set<IdealRep> found;
                for (auto const& I : oracle)
                    if (contains(ctx, I, tO)) found.insert(I);
                auto chain = principal_chain(ctx, t);
                auto w = detail::describe_set_difference(found, std::set<IdealRep>(chain.begin(), chain.end()), "oracle", "chain");
                if (!w.empty()) return w;
            }
            return {};
        });
        check.run("oracle-invertible-isolated",
                  "a basic ideal without basic elements is some (f^(k+1), a f^k + t_k) or its conjugate, "
                  "and contains no other basic ideal",
                  [&]() -> std::string {
            std::set<IdealRep> family;
            for (unsigned k = 1; k + 1 <= kmax; ++k)
                for (Integer a = 1; a < f; ++a) {
                    IdealRep Q = split_node(lc, k, a);
                    if (is_D_module(ctx, Q)) continue;
                    for (IdealRep const& X : {Q, conjugate_ideal(ctx, Q)}) {
                        family.insert(X);
                        for (auto const& B : oracle_basic)
                            if (B != X && contains(ctx, X, B)) return to_string(X) + " contains " + to_string(B);
                    }
                }
            for (auto const& B : oracle_basic) {
                if (is_D_module(ctx, B) || is_principal_O(ctx, lc.units, B)) continue;
                if (!family.count(B)) return to_string(B) + " has no basic element and is not of the stated form";
            }
            return {};
        });
    }
    return report;
}

} // namespace quadlattice
