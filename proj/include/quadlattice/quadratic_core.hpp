#pragma once

// Arithmetic in the maximal order D = Z[w] of Q(sqrt d) and in the
// suborder O = Z[f w] of index f.
//
// Elements are stored by their coordinates (x, y) in the basis {1, w} of D,
// whichever ring they are meant to live in; membership in O is the
// predicate f | y.  w is sqrt(d) when d = 2, 3 mod 4 and (1 + sqrt d)/2
// when d = 1 mod 4, in which case w^2 = w + (d - 1)/4.

#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "quadlattice/error.hpp"
#include "quadlattice/integer.hpp"

namespace quadlattice {

enum class OmegaKind { Sqrt, HalfOnePlusSqrt };

struct QuadInt {
    Integer x;
    Integer y;

    QuadInt() = default;
    QuadInt(Integer x_, Integer y_ = 0) : x(std::move(x_)), y(std::move(y_)) {}
    QuadInt(int x_) : x(x_), y(0) {}

    bool is_zero() const { return x == 0 && y == 0; }

    friend bool operator==(QuadInt const& a, QuadInt const& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(QuadInt const& a, QuadInt const& b) { return !(a == b); }
    friend bool operator<(QuadInt const& a, QuadInt const& b)
    {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }

    friend QuadInt operator+(QuadInt const& a, QuadInt const& b) { return {a.x + b.x, a.y + b.y}; }
    friend QuadInt operator-(QuadInt const& a, QuadInt const& b) { return {a.x - b.x, a.y - b.y}; }
    friend QuadInt operator-(QuadInt const& a) { return {-a.x, -a.y}; }
    friend QuadInt operator*(Integer const& n, QuadInt const& a) { return {n * a.x, n * a.y}; }
};

/// Renders x + y w as "x+y*w" (or "x-|y|*w").
inline std::string to_string(QuadInt const& z)
{
    std::string s = z.x.str();
    if (z.y < 0)
        s += "-" + Integer(-z.y).str() + "*w";
    else
        s += "+" + z.y.str() + "*w";
    return s;
}

inline std::ostream& operator<<(std::ostream& os, QuadInt const& z) { return os << to_string(z); }

/// Parses the output of `to_string(QuadInt)`.
inline QuadInt parse_quadint(std::string const& text)
{
    auto star = text.rfind("*w");
    if (star == std::string::npos || star + 2 != text.size() || star == 0)
        throw std::invalid_argument("malformed element: " + text);
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < star; ++i)
        if (text[i] == '+' || text[i] == '-') split = i;
    if (split == std::string::npos) throw std::invalid_argument("malformed element: " + text);
    Integer x(text.substr(0, split));
    Integer y(text.substr(split + 1, star - split - 1));
    if (text[split] == '-') y = -y;
    return {x, y};
}

/// The pair (d, f) with everything derived from it.  Immutable.
class OrderContext {
    Integer d_;
    Integer f_;
    OmegaKind kind_;
    Integer disc_D_;
    Integer disc_O_;

    OrderContext(Integer d, Integer f)
        : d_(std::move(d)), f_(std::move(f)),
          kind_(mod(d_, 4) == 1 ? OmegaKind::HalfOnePlusSqrt : OmegaKind::Sqrt),
          disc_D_(kind_ == OmegaKind::HalfOnePlusSqrt ? d_ : Integer(4 * d_)),
          disc_O_(f_ * f_ * disc_D_)
    {
    }

    static void check_field(Integer const& d)
    {
        if (d == 0 || d == 1)
            throw Error(ErrorKind::InvalidFieldParameter, "d must differ from 0 and 1, got " + d.str());
        if (!is_square_free(d))
            throw Error(ErrorKind::NotSquareFree, "d = " + d.str() + " is not square-free");
    }

  public:
    /// Prime conductor: f must be a rational prime.
    static OrderContext make(Integer const& d, Integer const& f)
    {
        check_field(d);
        if (f < 2 || !is_prime_small(f))
            throw Error(ErrorKind::InvalidConductor, "f must be a prime >= 2, got " + f.str());
        return OrderContext(d, f);
    }

    /// Any f >= 1.  Only the conductor factorisation and the
    /// comparison orders Z[(f/p) w] use this.
    static OrderContext make_any_conductor(Integer const& d, Integer const& f)
    {
        check_field(d);
        if (f < 1) throw Error(ErrorKind::InvalidConductor, "f must be >= 1, got " + f.str());
        return OrderContext(d, f);
    }

    Integer const& d() const { return d_; }
    Integer const& f() const { return f_; }
    OmegaKind omega_kind() const { return kind_; }
    Integer const& disc_D() const { return disc_D_; }
    Integer const& disc_O() const { return disc_O_; }
    bool is_real() const { return d_ > 0; }
    bool conductor_is_prime() const { return is_prime_small(f_); }

    /// Coefficients (c0, c1) with w^2 = c0 + c1 w.
    std::pair<Integer, Integer> omega_square() const
    {
        if (kind_ == OmegaKind::Sqrt) return {d_, 0};
        return {(d_ - 1) / 4, 1};
    }

    QuadInt omega() const { return {0, 1}; }
    QuadInt theta() const { return {0, f_}; }
    QuadInt sqrt_d() const
    {
        if (kind_ == OmegaKind::Sqrt) return {0, 1};
        return {-1, 2};
    }

    friend bool operator==(OrderContext const& a, OrderContext const& b)
    {
        return a.d_ == b.d_ && a.f_ == b.f_;
    }
};

inline QuadInt mul(OrderContext const& ctx, QuadInt const& a, QuadInt const& b)
{
    auto [c0, c1] = ctx.omega_square();
    Integer yy = a.y * b.y;
    return {a.x * b.x + c0 * yy, a.x * b.y + a.y * b.x + c1 * yy};
}

inline QuadInt pow(OrderContext const& ctx, QuadInt const& z, unsigned n)
{
    QuadInt r(1);
    QuadInt base = z;
    while (n) {
        if (n & 1u) r = mul(ctx, r, base);
        n >>= 1;
        if (n) base = mul(ctx, base, base);
    }
    return r;
}

inline QuadInt conjugate(OrderContext const& ctx, QuadInt const& z)
{
    if (ctx.omega_kind() == OmegaKind::Sqrt) return {z.x, -z.y};
    return {z.x + z.y, -z.y};
}

inline Integer norm(OrderContext const& ctx, QuadInt const& z)
{
    if (ctx.omega_kind() == OmegaKind::Sqrt) return z.x * z.x - ctx.d() * z.y * z.y;
    return z.x * z.x + z.x * z.y + ((1 - ctx.d()) / 4) * z.y * z.y;
}

inline Integer trace(OrderContext const& ctx, QuadInt const& z)
{
    if (ctx.omega_kind() == OmegaKind::Sqrt) return 2 * z.x;
    return 2 * z.x + z.y;
}

inline bool in_order(OrderContext const& ctx, QuadInt const& z) { return z.y % ctx.f() == 0; }

/// Exact quotient a / b when it lies in D.
inline std::optional<QuadInt> divide(OrderContext const& ctx, QuadInt const& a, QuadInt const& b)
{
    Integer n = norm(ctx, b);
    if (n == 0) return std::nullopt;
    QuadInt p = mul(ctx, a, conjugate(ctx, b));
    if (p.x % n != 0 || p.y % n != 0) return std::nullopt;
    return QuadInt{p.x / n, p.y / n};
}

/// Both real embeddings (w -> w, w -> conj w) for d > 0.
inline std::pair<long double, long double> real_embeddings(OrderContext const& ctx, QuadInt const& z)
{
    long double root = std::sqrt(static_cast<long double>(to_double(ctx.d())));
    long double x = static_cast<long double>(to_double(z.x));
    long double y = static_cast<long double>(to_double(z.y));
    if (ctx.omega_kind() == OmegaKind::Sqrt) return {x + y * root, x - y * root};
    return {x + y * (1 + root) / 2, x + y * (1 - root) / 2};
}

// ---------------------------------------------------------------------------
// Units

enum class UnitKind { ImaginaryTorsion, RealFundamental };

struct UnitGroupData {
    UnitKind kind;
    std::vector<QuadInt> torsion;
    std::optional<QuadInt> fundamental;
    int fundamental_norm = 1;          // +1 or -1, real case only
    unsigned tau = 1;                  // |D* / O*|
    std::vector<QuadInt> coset_reps;   // one per class of D* / O*
};

/// Inverse of a unit of D.
inline QuadInt unit_inverse(OrderContext const& ctx, QuadInt const& u)
{
    Integer n = norm(ctx, u);
    return n * conjugate(ctx, u);
}

/// Fundamental unit (> 1) of a real quadratic field, read off the
/// convergents of the continued fraction of w.
inline std::pair<QuadInt, int> fundamental_unit(OrderContext const& ctx)
{
    if (!ctx.is_real()) throw std::logic_error("fundamental_unit needs d > 0");
    Integer const& N = ctx.d();
    Integer const root = isqrt(N);
    // x = (P + sqrt N) / Q with Q | N - P^2
    Integer P = ctx.omega_kind() == OmegaKind::Sqrt ? 0 : 1;
    Integer Q = ctx.omega_kind() == OmegaKind::Sqrt ? 1 : 2;
    Integer h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    for (;;) {
        // floor((P + sqrt N)/Q); sqrt N is irrational so only floor(sqrt N) matters
        Integer a = Q > 0 ? floor_div(P + root, Q) : floor_div(-P - root - 1, -Q);
        Integer h = a * h1 + h2;
        Integer k = a * k1 + k2;
        h2 = h1;
        h1 = h;
        k2 = k1;
        k1 = k;
        QuadInt eps = ctx.omega_kind() == OmegaKind::Sqrt ? QuadInt{h, k} : QuadInt{h - k, k};
        if (k > 0) {
            Integer n = norm(ctx, eps);
            if (n == 1 || n == -1) return {eps, n == 1 ? 1 : -1};
        }
        Integer P2 = a * Q - P;
        Integer Q2 = (N - P2 * P2) / Q;
        P = P2;
        Q = Q2;
    }
}

inline UnitGroupData unit_group(OrderContext const& ctx)
{
    UnitGroupData g;
    if (!ctx.is_real()) {
        g.kind = UnitKind::ImaginaryTorsion;
        QuadInt gen;
        unsigned order;
        if (ctx.d() == -1) {
            gen = {0, 1};
            order = 4;
        } else if (ctx.d() == -3) {
            gen = {0, 1};   // w = (1 + sqrt -3)/2 is a primitive sixth root of unity
            order = 6;
        } else {
            gen = {-1, 0};
            order = 2;
        }
        QuadInt u(1);
        for (unsigned i = 0; i < order; ++i) {
            g.torsion.push_back(u);
            u = mul(ctx, u, gen);
        }
        for (auto const& cand : g.torsion) {
            bool fresh = true;
            for (auto const& rep : g.coset_reps)
                if (in_order(ctx, mul(ctx, cand, unit_inverse(ctx, rep)))) {
                    fresh = false;
                    break;
                }
            if (fresh) g.coset_reps.push_back(cand);
        }
        g.tau = static_cast<unsigned>(g.coset_reps.size());
        return g;
    }
    g.kind = UnitKind::RealFundamental;
    g.torsion = {QuadInt(1), QuadInt(-1)};
    auto [eps, sign] = fundamental_unit(ctx);
    g.fundamental = eps;
    g.fundamental_norm = sign;
    QuadInt power(1);
    do {
        g.coset_reps.push_back(power);
        power = mul(ctx, power, eps);
    } while (!in_order(ctx, power));
    g.tau = static_cast<unsigned>(g.coset_reps.size());
    return g;
}

/// All unit multiples u*z with u in a finite window of D*: the torsion
/// group, times eps^j for |j| <= spread in the real case.
inline std::vector<QuadInt> unit_multiples(OrderContext const& ctx, UnitGroupData const& units,
                                           QuadInt const& z, int spread = 2)
{
    std::vector<QuadInt> out;
    if (units.kind == UnitKind::ImaginaryTorsion) {
        for (auto const& u : units.torsion) out.push_back(mul(ctx, u, z));
        return out;
    }
    QuadInt eps = *units.fundamental;
    QuadInt inv = unit_inverse(ctx, eps);
    for (int j = -spread; j <= spread; ++j) {
        QuadInt w = j >= 0 ? pow(ctx, eps, static_cast<unsigned>(j)) : pow(ctx, inv, static_cast<unsigned>(-j));
        QuadInt v = mul(ctx, w, z);
        out.push_back(v);
        out.push_back(-v);
    }
    return out;
}

/// Canonical associate: lexicographically smallest (|y|, |x|, x < 0, y < 0).
inline QuadInt normalize_associate(std::vector<QuadInt> const& candidates)
{
    auto key = [](QuadInt const& z) {
        return std::make_tuple(abs(z.y), abs(z.x), z.x < 0, z.y < 0);
    };
    QuadInt best = candidates.front();
    for (auto const& c : candidates)
        if (key(c) < key(best)) best = c;
    return best;
}

} // namespace quadlattice
