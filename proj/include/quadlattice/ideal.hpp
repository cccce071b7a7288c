#pragma once

// Ideals of O = Z[f w] and of D = Z[w] as rank-2 lattices in Hermite
// normal form.
//
// An IdealRep (ring, q, r, s) denotes the Z-module  qZ + (r + s*theta)Z
// with theta = w for ideals of D and theta = f*w for ideals of O.  The
// triple is canonical: q > 0, 0 <= r < q, s > 0, and closure under
// multiplication by theta forces s | q and s | r.  Equality of ideals is
// equality of triples.

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "quadlattice/error.hpp"
#include "quadlattice/integer.hpp"
#include "quadlattice/quadratic_core.hpp"

namespace quadlattice {

enum class Ring { InD, InO };

constexpr std::string_view ring_name(Ring r) { return r == Ring::InD ? "D" : "O"; }

struct IdealRep {
    Ring ring = Ring::InO;
    Integer q = 1;
    Integer r = 0;
    Integer s = 1;

    friend bool operator==(IdealRep const& a, IdealRep const& b)
    {
        return a.ring == b.ring && a.q == b.q && a.r == b.r && a.s == b.s;
    }
    friend bool operator!=(IdealRep const& a, IdealRep const& b) { return !(a == b); }
    friend bool operator<(IdealRep const& a, IdealRep const& b)
    {
        return std::tie(a.ring, a.q, a.r, a.s) < std::tie(b.ring, b.q, b.r, b.s);
    }
};

inline std::string to_string(IdealRep const& I)
{
    return std::string(ring_name(I.ring)) + "(" + I.q.str() + "," + I.r.str() + "," + I.s.str() + ")";
}

inline std::ostream& operator<<(std::ostream& os, IdealRep const& I) { return os << to_string(I); }

namespace detail {

struct Vec2 {
    Integer a;   // coefficient of 1
    Integer b;   // coefficient of theta
};

inline Integer theta_scale(OrderContext const& ctx, Ring ring) { return ring == Ring::InD ? Integer(1) : ctx.f(); }

inline std::optional<Vec2> to_theta(OrderContext const& ctx, Ring ring, QuadInt const& z)
{
    Integer sc = theta_scale(ctx, ring);
    if (z.y % sc != 0) return std::nullopt;
    return Vec2{z.x, z.y / sc};
}

inline QuadInt from_theta(OrderContext const& ctx, Ring ring, Integer const& a, Integer const& b)
{
    return {a, b * theta_scale(ctx, ring)};
}

/// Canonical HNF of the Z-span of `vs`; throws ZeroIdeal if rank < 2.
inline std::tuple<Integer, Integer, Integer> hnf(std::vector<Vec2> const& vs)
{
    Vec2 pivot{0, 0};
    Integer q = 0;
    for (auto const& v : vs) {
        if (v.b == 0) {
            q = gcd(q, v.a);
            continue;
        }
        if (pivot.b == 0) {
            pivot = v;
            continue;
        }
        auto eg = extended_gcd(pivot.b, v.b);
        Vec2 combined{eg.u * pivot.a + eg.v * v.a, eg.g};
        Integer rest = (v.b / eg.g) * pivot.a - (pivot.b / eg.g) * v.a;
        q = gcd(q, rest);
        pivot = std::move(combined);
    }
    if (pivot.b == 0 || q == 0) throw Error(ErrorKind::ZeroIdeal, "generators span a lattice of rank < 2");
    if (pivot.b < 0) {
        pivot.a = -pivot.a;
        pivot.b = -pivot.b;
    }
    return {q, mod(pivot.a, q), pivot.b};
}

} // namespace detail

/// The two Z-basis elements {q, r + s*theta} in D-coordinates.
inline std::pair<QuadInt, QuadInt> basis(OrderContext const& ctx, IdealRep const& I)
{
    return {QuadInt{I.q, 0}, detail::from_theta(ctx, I.ring, I.r, I.s)};
}

inline bool contains_element(OrderContext const& ctx, IdealRep const& I, QuadInt const& z)
{
    auto v = detail::to_theta(ctx, I.ring, z);
    if (!v) return false;
    if (v->b % I.s != 0) return false;
    Integer c = v->b / I.s;
    return (v->a - c * I.r) % I.q == 0;
}

/// Builds the ideal from a validated triple.  Throws NotAnIdeal if the
/// lattice is not stable under theta.
inline IdealRep make_ideal(OrderContext const& ctx, Ring ring, Integer q, Integer r, Integer s)
{
    if (q <= 0 || s <= 0) throw Error(ErrorKind::NotAnIdeal, "q and s must be positive");
    r = mod(r, q);
    IdealRep I{ring, std::move(q), std::move(r), std::move(s)};
    QuadInt th = ring == Ring::InD ? ctx.omega() : ctx.theta();
    auto [b1, b2] = basis(ctx, I);
    if (!contains_element(ctx, I, mul(ctx, th, b1)) || !contains_element(ctx, I, mul(ctx, th, b2)))
        throw Error(ErrorKind::NotAnIdeal, to_string(I) + " is not closed under multiplication");
    return I;
}

/// Ideal of `ring` generated by `gens` (each must lie in `ring`).
inline IdealRep ideal_from_generators(OrderContext const& ctx, Ring ring, std::vector<QuadInt> const& gens)
{
    QuadInt th = ring == Ring::InD ? ctx.omega() : ctx.theta();
    std::vector<detail::Vec2> vs;
    bool any = false;
    for (auto const& g : gens) {
        auto v = detail::to_theta(ctx, ring, g);
        if (!v) throw Error(ErrorKind::RingMismatch, "generator " + to_string(g) + " is not in " + std::string(ring_name(ring)));
        if (!g.is_zero()) any = true;
        vs.push_back(*v);
        vs.push_back(*detail::to_theta(ctx, ring, mul(ctx, th, g)));
    }
    if (!any) throw Error(ErrorKind::ZeroIdeal, "all generators are zero");
    auto [q, r, s] = detail::hnf(vs);
    return IdealRep{ring, q, r, s};
}

inline IdealRep unit_ideal(Ring ring) { return IdealRep{ring, 1, 0, 1}; }

inline void require_same_ring(IdealRep const& I, IdealRep const& J)
{
    if (I.ring != J.ring) throw Error(ErrorKind::RingMismatch, to_string(I) + " vs " + to_string(J));
}

/// I contains J.
inline bool contains(OrderContext const& ctx, IdealRep const& I, IdealRep const& J)
{
    require_same_ring(I, J);
    auto [b1, b2] = basis(ctx, J);
    return contains_element(ctx, I, b1) && contains_element(ctx, I, b2);
}

inline bool equals(IdealRep const& I, IdealRep const& J)
{
    require_same_ring(I, J);
    return I == J;
}

inline IdealRep product(OrderContext const& ctx, IdealRep const& I, IdealRep const& J)
{
    require_same_ring(I, J);
    auto [a1, a2] = basis(ctx, I);
    auto [b1, b2] = basis(ctx, J);
    return ideal_from_generators(ctx, I.ring,
                                 {mul(ctx, a1, b1), mul(ctx, a1, b2), mul(ctx, a2, b1), mul(ctx, a2, b2)});
}

inline IdealRep power(OrderContext const& ctx, IdealRep const& I, unsigned n)
{
    IdealRep r = unit_ideal(I.ring);
    for (unsigned i = 0; i < n; ++i) r = product(ctx, r, I);
    return r;
}

/// n * I for a positive integer n.
inline IdealRep scale(IdealRep const& I, Integer const& n)
{
    return IdealRep{I.ring, I.q * n, I.r * n, I.s * n};
}

/// I / n; n must divide the content of I.
inline IdealRep divide_exact(IdealRep const& I, Integer const& n)
{
    if (I.s % n != 0) throw std::logic_error(to_string(I) + " is not divisible by " + n.str());
    return IdealRep{I.ring, I.q / n, I.r / n, I.s / n};
}

/// Index in the ambient ring.
inline Integer ideal_norm(IdealRep const& I) { return I.q * I.s; }

inline IdealRep principal_ideal(OrderContext const& ctx, Ring ring, QuadInt const& g)
{
    return ideal_from_generators(ctx, ring, {g});
}

inline IdealRep conjugate_ideal(OrderContext const& ctx, IdealRep const& I)
{
    auto [b1, b2] = basis(ctx, I);
    return ideal_from_generators(ctx, I.ring, {conjugate(ctx, b1), conjugate(ctx, b2)});
}

/// ID for an ideal I of O.
inline IdealRep extend_to_D(OrderContext const& ctx, IdealRep const& I)
{
    if (I.ring != Ring::InO) throw Error(ErrorKind::RingMismatch, "extend_to_D needs an ideal of O");
    auto [b1, b2] = basis(ctx, I);
    return ideal_from_generators(ctx, Ring::InD, {b1, b2});
}

/// I ∩ O for an ideal I of D.
inline IdealRep contract_to_O(OrderContext const& ctx, IdealRep const& I)
{
    if (I.ring != Ring::InD) throw Error(ErrorKind::RingMismatch, "contract_to_O needs an ideal of D");
    // q*u + v*(r + s w) has w-coefficient v*s, which must be divisible by f.
    Integer step = ctx.f() / gcd(ctx.f(), I.s);
    QuadInt second{step * I.r, step * I.s};
    auto v1 = *detail::to_theta(ctx, Ring::InO, QuadInt{I.q, 0});
    auto v2 = *detail::to_theta(ctx, Ring::InO, second);
    auto [q, r, s] = detail::hnf({v1, v2});
    return IdealRep{Ring::InO, q, r, s};
}

/// [ID : I]; always 1 or f.
inline Integer index_in_extension(OrderContext const& ctx, IdealRep const& I)
{
    if (I.ring == Ring::InD) return 1;
    // [D : I] = f * [O : I]
    return ctx.f() * ideal_norm(I) / ideal_norm(extend_to_D(ctx, I));
}

// ---------------------------------------------------------------------------
// The conductor and the predicates on ideals of O.

/// F = fD = fZ + f w Z, as an ideal of O.
inline IdealRep conductor(OrderContext const& ctx) { return IdealRep{Ring::InO, ctx.f(), 0, 1}; }

/// F^n = f^(n-1) F for n >= 1; F^0 = O.
inline IdealRep conductor_power(OrderContext const& ctx, unsigned n)
{
    if (n == 0) return unit_ideal(Ring::InO);
    return scale(conductor(ctx), pow(ctx.f(), n - 1));
}

inline IdealRep f_times_O(OrderContext const& ctx) { return IdealRep{Ring::InO, ctx.f(), 0, ctx.f()}; }

inline bool is_D_module(OrderContext const& ctx, IdealRep const& Q)
{
    if (Q.ring == Ring::InD) return true;
    auto [b1, b2] = basis(ctx, Q);
    QuadInt w = ctx.omega();
    return contains_element(ctx, Q, mul(ctx, w, b1)) && contains_element(ctx, Q, mul(ctx, w, b2));
}

/// Q Qbar == N(Q) O.
inline bool is_invertible(OrderContext const& ctx, IdealRep const& Q)
{
    if (Q.ring != Ring::InO) throw Error(ErrorKind::RingMismatch, "is_invertible needs an ideal of O");
    IdealRep p = product(ctx, Q, conjugate_ideal(ctx, Q));
    IdealRep n = IdealRep{Ring::InO, ideal_norm(Q), 0, ideal_norm(Q)};
    return p == n;
}

/// Norm exponent k with N(Q) = f^k, if N(Q) is a power of f.
inline std::optional<unsigned> norm_exponent(OrderContext const& ctx, IdealRep const& Q)
{
    return exact_log(ideal_norm(Q), ctx.f());
}

inline bool is_F_primary(OrderContext const& ctx, IdealRep const& Q)
{
    if (Q.ring != Ring::InO) return false;
    auto k = norm_exponent(ctx, Q);
    return k && *k >= 1 && contains(ctx, conductor(ctx), Q);
}

/// Largest n with Q ⊆ F^n (requires Q ⊆ F).
inline unsigned conductor_depth(OrderContext const& ctx, IdealRep const& Q)
{
    unsigned n = 0;
    while (contains(ctx, conductor_power(ctx, n + 1), Q)) ++n;
    return n;
}

inline bool is_basic(OrderContext const& ctx, IdealRep const& Q)
{
    return is_F_primary(ctx, Q) && !contains(ctx, conductor_power(ctx, 2), Q);
}

/// Not contained in nO for any n >= 2.  The content of (q, r, s) is s.
inline bool is_primitive(OrderContext const&, IdealRep const& Q) { return Q.s == 1; }

struct BasicComponent {
    unsigned k;        // Q ⊆ F^k, Q ⊄ F^(k+1)
    IdealRep basic;    // Q = f^(k-1) * basic
};

inline BasicComponent basic_component(OrderContext const& ctx, IdealRep const& Q)
{
    if (!is_F_primary(ctx, Q)) throw Error(ErrorKind::NotPrimary, to_string(Q) + " is not F-primary");
    unsigned k = conductor_depth(ctx, Q);
    return {k, divide_exact(Q, pow(ctx.f(), k - 1))};
}

struct PrimitiveForm {
    unsigned k;       // N(Q) = f^k
    QuadInt alpha;    // Q = f^k Z + f*alpha Z, alpha in D \ O
};

/// Q = (f^k, f*alpha) for basic Q != fO.  alpha has x-coordinate in [0, f^(k-1)).
inline PrimitiveForm primitive_form(OrderContext const& ctx, IdealRep const& Q)
{
    if (Q == f_times_O(ctx)) throw Error(ErrorKind::IsFO, "fO has no primitive form");
    if (!is_basic(ctx, Q)) throw Error(ErrorKind::NotPrimary, to_string(Q) + " is not a basic F-primary ideal");
    // basic and != fO forces s == 1; Q ⊆ F forces f | r
    auto k = *exact_log(Q.q, ctx.f());
    return {k, QuadInt{Q.r / ctx.f(), 1}};
}

/// Least n with F^n ⊆ Q.
inline unsigned min_power_contained(OrderContext const& ctx, IdealRep const& Q)
{
    if (Q == f_times_O(ctx)) throw Error(ErrorKind::IsFO, "fO contains F^2 but no primitive form");
    if (!is_basic(ctx, Q)) throw Error(ErrorKind::NotPrimary, to_string(Q) + " is not a basic F-primary ideal");
    unsigned n = 1;
    while (!contains(ctx, Q, conductor_power(ctx, n))) ++n;
    return n;
}

// ---------------------------------------------------------------------------
// Principality.

namespace detail {

/// Calls `visit(z)` for every z in D with N(z) = +-N (only +N for d < 0)
/// and |y| below the bound that guarantees every principal ideal of norm N
/// has a generator in range.  Stops early when visit returns true.
template <class Visit>
bool for_each_candidate_of_norm(OrderContext const& ctx, UnitGroupData const& units, Integer const& N, Visit&& visit)
{
    Integer const& d = ctx.d();
    bool half = ctx.omega_kind() == OmegaKind::HalfOnePlusSqrt;
    // Sqrt:  x^2 - d y^2 = n.   Half: (2x + y)^2 - d y^2 = 4n.
    auto solve_row = [&](Integer const& y, Integer const& n) -> bool {
        Integer rhs = half ? Integer(4 * n + d * y * y) : Integer(n + d * y * y);
        Integer root;
        if (!is_square(rhs, &root)) return false;
        for (int sign : {1, -1}) {
            if (sign == -1 && root == 0) break;
            Integer u = sign * root;
            QuadInt z;
            if (half) {
                if ((u - y) % 2 != 0) continue;
                z = QuadInt{(u - y) / 2, y};
            } else {
                z = QuadInt{u, y};
            }
            if (visit(z)) return true;
        }
        return false;
    };
    if (!ctx.is_real()) {
        Integer ad = -d;
        Integer lim = half ? Integer(4 * N) : N;
        for (Integer y = 0; ad * y * y <= lim; ++y) {
            if (solve_row(y, N)) return true;
            if (y != 0 && solve_row(-y, N)) return true;
        }
        return false;
    }
    // Real case: multiplying by eps scales |sigma1 / sigma2| by eps^2, so some
    // generator has that ratio in [1/eps, eps) and |sigma1|, |sigma2| <= sqrt(N eps).
    long double eps = real_embeddings(ctx, *units.fundamental).first;
    if (eps < 0) eps = -eps;
    long double gap = std::sqrt(static_cast<long double>(to_double(d))) * (half ? 1.0L : 2.0L);
    long double bound = 2.0L * std::sqrt(static_cast<long double>(to_double(N)) * eps) / gap;
    Integer Y = Integer(static_cast<long long>(bound * 1.0001L)) + 2;
    for (Integer y = 0; y <= Y; ++y)
        for (Integer const& n : {N, Integer(-N)}) {
            if (solve_row(y, n)) return true;
            if (y != 0 && solve_row(-y, n)) return true;
        }
    return false;
}

} // namespace detail

/// A generator of the ideal I of D, if I is principal.
inline std::optional<QuadInt> is_principal_D(OrderContext const& ctx, UnitGroupData const& units, IdealRep const& I)
{
    if (I.ring != Ring::InD) throw Error(ErrorKind::RingMismatch, "is_principal_D needs an ideal of D");
    std::optional<QuadInt> found;
    Integer N = ideal_norm(I);
    detail::for_each_candidate_of_norm(ctx, units, N, [&](QuadInt const& z) {
        if (contains_element(ctx, I, z)) {
            found = z;
            return true;
        }
        return false;
    });
    if (!found) return std::nullopt;
    return normalize_associate(unit_multiples(ctx, units, *found));
}

/// A generator t in O of the ideal Q of O, if Q is principal.
inline std::optional<QuadInt> is_principal_O(OrderContext const& ctx, UnitGroupData const& units, IdealRep const& Q)
{
    if (Q.ring != Ring::InO) throw Error(ErrorKind::RingMismatch, "is_principal_O needs an ideal of O");
    std::optional<QuadInt> found;
    Integer N = ideal_norm(Q);
    detail::for_each_candidate_of_norm(ctx, units, N, [&](QuadInt const& z) {
        for (auto const& w : units.coset_reps) {
            QuadInt t = mul(ctx, z, w);
            if (in_order(ctx, t) && contains_element(ctx, Q, t)) {
                found = t;
                return true;
            }
        }
        return false;
    });
    if (!found) return std::nullopt;
    if (principal_ideal(ctx, Ring::InO, *found) != Q) return std::nullopt;
    std::vector<QuadInt> assoc;
    for (auto const& v : unit_multiples(ctx, units, *found))
        if (in_order(ctx, v) && principal_ideal(ctx, Ring::InO, v) == Q) assoc.push_back(v);
    return normalize_associate(assoc);
}

} // namespace quadlattice
