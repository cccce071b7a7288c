#pragma once

// Exact integer helpers shared by every module.  All arithmetic in the
// library goes through `Integer`; nothing here ever touches floating point
// except `to_double`, which only feeds search bounds that are re-checked
// exactly afterwards.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quadlattice {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs(Integer const& a) { return a < 0 ? Integer(-a) : a; }

/// Floor division, rounding toward minus infinity for either sign of b.
inline Integer floor_div(Integer const& a, Integer const& b)
{
    Integer q = a / b;
    Integer r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

/// Non-negative remainder of a modulo |m|.
inline Integer mod(Integer const& a, Integer const& m)
{
    Integer mm = abs(m);
    Integer r = a % mm;
    if (r < 0) r += mm;
    return r;
}

inline Integer gcd(Integer a, Integer b)
{
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Integer t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

struct ExtendedGcd {
    Integer g;
    Integer u;
    Integer v;   // u*a + v*b == g, g >= 0
};

inline ExtendedGcd extended_gcd(Integer const& a, Integer const& b)
{
    Integer old_r = a, r = b;
    Integer old_u = 1, u = 0;
    Integer old_v = 0, v = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer t = old_r - q * r;
        old_r = std::move(r);
        r = std::move(t);
        t = old_u - q * u;
        old_u = std::move(u);
        u = std::move(t);
        t = old_v - q * v;
        old_v = std::move(v);
        v = std::move(t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_u = -old_u;
        old_v = -old_v;
    }
    return {old_r, old_u, old_v};
}

inline Integer pow(Integer const& base, unsigned exp)
{
    Integer result = 1;
    for (unsigned i = 0; i < exp; ++i) result *= base;
    return result;
}

/// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(Integer const& n)
{
    if (n < 0) throw std::domain_error("isqrt of a negative integer");
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(Integer const& n, Integer* root = nullptr)
{
    if (n < 0) return false;
    Integer s = isqrt(n);
    if (s * s != n) return false;
    if (root) *root = s;
    return true;
}

/// If n == base^e for some e >= 0, returns e.
inline std::optional<unsigned> exact_log(Integer n, Integer const& base)
{
    if (n <= 0 || base < 2) return std::nullopt;
    unsigned e = 0;
    while (n % base == 0) {
        n /= base;
        ++e;
    }
    if (n != 1) return std::nullopt;
    return e;
}

inline bool is_prime_small(Integer const& n)
{
    if (n < 2) return false;
    for (Integer p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

/// No square of a prime divides n (n != 0).
inline bool is_square_free(Integer const& n)
{
    Integer m = abs(n);
    for (Integer p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    return true;
}

/// Trial factorisation into (prime, exponent) pairs, primes ascending.
inline std::vector<std::pair<Integer, unsigned>> factorize(Integer n)
{
    std::vector<std::pair<Integer, unsigned>> out;
    n = abs(n);
    for (Integer p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1u);
    return out;
}

inline double to_double(Integer const& n) { return n.convert_to<double>(); }

inline std::string to_string(Integer const& n) { return n.str(); }

inline bool fits_int64(Integer const& n)
{
    return n >= std::numeric_limits<std::int64_t>::min() &&
           n <= std::numeric_limits<std::int64_t>::max();
}

} // namespace quadlattice
