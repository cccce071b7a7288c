#pragma once

// How the prime f behaves in D, the prime P of D above f, the order m of
// the class of P, and the factorisation of a composite conductor into
// primary components.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "quadlattice/error.hpp"
#include "quadlattice/ideal.hpp"
#include "quadlattice/integer.hpp"
#include "quadlattice/quadratic_core.hpp"

namespace quadlattice {

enum class SplittingType { Inert, Split, Ramified };

constexpr std::string_view splitting_name(SplittingType t)
{
    switch (t) {
    case SplittingType::Inert: return "inert";
    case SplittingType::Split: return "split";
    case SplittingType::Ramified: return "ramified";
    }
    return "?";
}

struct SplitData {
    SplittingType stype;
    std::optional<IdealRep> P;        // prime of D above f; absent when inert
    std::optional<unsigned> m;        // split only: order of [P] in the class group
    std::optional<QuadInt> beta;      // split: generator of P^m; ramified: generator of P if any
    int beta_norm_sign = 1;           // sign of N(beta); -1 can only happen for d > 0
    unsigned tau = 1;
};

inline constexpr unsigned default_class_order_cap = 64;

/// Residues r in [0, f) with N(r + w) = 0 mod f, i.e. -r is a root of the
/// minimal polynomial of w modulo f.
inline std::vector<Integer> shifts_with_norm_divisible(OrderContext const& ctx)
{
    std::vector<Integer> out;
    for (Integer r = 0; r < ctx.f(); ++r)
        if (mod(norm(ctx, QuadInt{r, 1}), ctx.f()) == 0) out.push_back(r);
    return out;
}

inline SplittingType splitting_type(OrderContext const& ctx)
{
    if (mod(ctx.disc_D(), ctx.f()) == 0) return SplittingType::Ramified;
    return shifts_with_norm_divisible(ctx).empty() ? SplittingType::Inert : SplittingType::Split;
}

/// P with N(P) = f.  Inert: fD.
inline IdealRep prime_above(OrderContext const& ctx)
{
    Integer const& f = ctx.f();
    switch (splitting_type(ctx)) {
    case SplittingType::Inert:
        return ideal_from_generators(ctx, Ring::InD, {QuadInt{f, 0}});
    case SplittingType::Split: {
        Integer r = shifts_with_norm_divisible(ctx).front();
        return ideal_from_generators(ctx, Ring::InD, {QuadInt{f, 0}, QuadInt{r, 1}});
    }
    case SplittingType::Ramified:
        if (f == 2 && mod(ctx.d(), 4) == 3)
            return ideal_from_generators(ctx, Ring::InD, {QuadInt{2, 0}, QuadInt(1) + ctx.sqrt_d()});
        return ideal_from_generators(ctx, Ring::InD, {QuadInt{f, 0}, ctx.sqrt_d()});
    }
    throw std::logic_error("unreachable");
}

/// Least m with P^m principal, and a normalised generator of P^m.
inline std::pair<unsigned, QuadInt> class_order_and_generator(OrderContext const& ctx, UnitGroupData const& units,
                                                              IdealRep const& P,
                                                              unsigned cap = default_class_order_cap)
{
    IdealRep power = P;
    for (unsigned k = 1; k <= cap; ++k) {
        if (auto g = is_principal_D(ctx, units, power)) return {k, *g};
        power = product(ctx, power, P);
    }
    throw Error(ErrorKind::IterationCapExceeded, "no principal power of P up to cap " + std::to_string(cap));
}

inline SplitData split_data(OrderContext const& ctx, UnitGroupData const& units,
                            unsigned cap = default_class_order_cap)
{
    SplitData sd;
    sd.stype = splitting_type(ctx);
    sd.tau = units.tau;
    if (sd.stype == SplittingType::Inert) return sd;
    sd.P = prime_above(ctx);
    if (sd.stype == SplittingType::Split) {
        auto [m, beta] = class_order_and_generator(ctx, units, *sd.P, cap);
        sd.m = m;
        sd.beta = beta;
    } else {
        sd.beta = is_principal_D(ctx, units, *sd.P);
    }
    if (sd.beta) sd.beta_norm_sign = norm(ctx, *sd.beta) < 0 ? -1 : 1;
    return sd;
}

// ---------------------------------------------------------------------------
// Composite conductors.

struct ConductorComponent {
    Integer prime;        // f_i
    unsigned exponent;    // s_i
    IdealRep primary;     // G_i = (f_i^s_i, f w)
    IdealRep radical;     // F_i = (f_i, f w)
};

/// F = prod G_i with G_i = (f_i^s_i, f w) and radicals F_i = (f_i, f w),
/// all as ideals of Z[f w].  `ctx` may carry a composite f.
inline std::vector<ConductorComponent> conductor_factorization(OrderContext const& ctx)
{
    std::vector<ConductorComponent> out;
    QuadInt fw = ctx.theta();
    for (auto const& [p, e] : factorize(ctx.f())) {
        Integer pe = pow(p, e);
        out.push_back({p, e, ideal_from_generators(ctx, Ring::InO, {QuadInt{pe, 0}, fw}),
                       ideal_from_generators(ctx, Ring::InO, {QuadInt{p, 0}, fw})});
    }
    return out;
}

/// The Z-lattice of an ideal of O, written in the coordinates {1, w} of D.
/// Used to compare ideals of different orders inside D.
inline std::tuple<Integer, Integer, Integer> lattice_in_D(OrderContext const& ctx, IdealRep const& I)
{
    auto [b1, b2] = basis(ctx, I);
    return detail::hnf({{b1.x, b1.y}, {b2.x, b2.y}});
}

struct FactorizationCheck {
    std::vector<ConductorComponent> components;
    bool product_is_F = false;
    std::vector<bool> radical_matches;   // F_i = f_i O_{f/f_i}, per component

    bool ok() const
    {
        return product_is_F && std::all_of(radical_matches.begin(), radical_matches.end(), [](bool b) { return b; });
    }
};

/// Multiplies the primary components back together and compares each
/// radical with f_i O_{f/f_i}, built in its own order.
inline FactorizationCheck check_conductor_factorization(OrderContext const& ctx)
{
    FactorizationCheck out;
    out.components = conductor_factorization(ctx);
    IdealRep prod = unit_ideal(Ring::InO);
    for (auto const& c : out.components) prod = product(ctx, prod, c.primary);
    out.product_is_F = prod == conductor(ctx);
    for (auto const& c : out.components) {
        auto other = OrderContext::make_any_conductor(ctx.d(), ctx.f() / c.prime);
        IdealRep scaled{Ring::InO, c.prime, 0, c.prime};
        out.radical_matches.push_back(lattice_in_D(ctx, c.radical) == lattice_in_D(other, scaled));
    }
    return out;
}

} // namespace quadlattice
