#pragma once

/**
 * @file arith.hpp
 * @brief Elementary number theory over 64-bit integers: deterministic
 *        primality testing, squarefree decomposition, Legendre symbols.
 */

#include <concepts>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "qsplit/errors.hpp"

namespace qsplit {

// ===================================================================
// modular helpers
// ===================================================================

/// Mathematical residue of a mod m, in [0, m). Requires m > 0.
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

template <std::unsigned_integral T>
constexpr T mul_mod(T a, T b, T m) {
    return static_cast<T>(static_cast<unsigned __int128>(a) * b % m);
}

template <std::unsigned_integral T>
constexpr T pow_mod(T base, T exp, T m) {
    T result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// ===================================================================
// primality
// ===================================================================

namespace detail {

/// One Miller-Rabin round for witness a, with n - 1 = 2^r * d, d odd.
constexpr bool witness_passes(std::uint64_t a, std::uint64_t n, std::uint64_t d,
                              int r) {
    std::uint64_t x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace detail

/**
 * Deterministic primality test for the full signed 64-bit range.
 *
 * Uses Miller-Rabin with the fixed witness set {2, 3, 5, 7, 11, 13, 17,
 * 19, 23, 29, 31, 37}, which is exact for all n < 3.3 * 10^24.
 */
constexpr bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    const auto u = static_cast<std::uint64_t>(n);
    for (std::uint64_t p : small) {
        if (u % p == 0) return u == p;
    }
    std::uint64_t d = u - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : small) {
        if (!detail::witness_passes(a, u, d, r)) return false;
    }
    return true;
}

/// A positive prime, validated on construction.
class PrimeArg {
  public:
    explicit PrimeArg(std::int64_t p) : value_(p) {
        if (!is_prime(p))
            throw std::invalid_argument("PrimeArg: " + std::to_string(p) +
                                        " is not a positive prime");
    }
    std::int64_t value() const { return value_; }
    friend bool operator==(PrimeArg, PrimeArg) = default;

  private:
    std::int64_t value_;
};

// ===================================================================
// squarefree decomposition
// ===================================================================

/// Decomposition n = squarefree * cofactor^2 with squarefree squarefree
/// and cofactor > 0; the sign of n goes to the squarefree part.
struct SquarefreePart {
    std::int64_t squarefree;
    std::int64_t cofactor;
    friend bool operator==(const SquarefreePart&, const SquarefreePart&) = default;
};

/// Trial-division squarefree decomposition. Throws for n = 0.
inline SquarefreePart squarefree_part(std::int64_t n) {
    if (n == 0) throw std::invalid_argument("squarefree_part: n must be nonzero");
    const std::int64_t sign = n < 0 ? -1 : 1;
    std::uint64_t m = n < 0 ? -static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
    std::int64_t s = 1, f = 1;
    for (std::uint64_t d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
        if (m % d != 0) continue;
        int e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        if (e & 1) s *= static_cast<std::int64_t>(d);
        for (int i = 0; i < e / 2; ++i) f *= static_cast<std::int64_t>(d);
    }
    s *= static_cast<std::int64_t>(m);
    return {sign * s, f};
}

/// A squarefree integer d defining the quadratic field Q(sqrt d); the
/// degenerate values 0 and 1 are rejected (d = -1 is a valid generator).
class SquarefreeD {
  public:
    explicit SquarefreeD(std::int64_t d) : value_(d) {
        if (d == 0 || d == 1)
            throw std::invalid_argument("SquarefreeD: 0 and 1 do not generate a "
                                        "quadratic field");
        if (squarefree_part(d).cofactor != 1)
            throw std::invalid_argument("SquarefreeD: " + std::to_string(d) +
                                        " is not squarefree");
    }
    std::int64_t value() const { return value_; }
    friend bool operator==(SquarefreeD, SquarefreeD) = default;

  private:
    std::int64_t value_;
};

// ===================================================================
// Legendre symbol
// ===================================================================

namespace detail {

/// Legendre symbol core; n must be an odd prime (not validated here).
inline int legendre_raw(std::int64_t a, std::int64_t n) {
    std::int64_t x = mod_floor(a, n);
    if (x == 0) return 0;
    int sign = 1;
    while (x != 0) {
        while ((x & 1) == 0) {
            x >>= 1;
            const std::int64_t r = n & 7;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(x, n);
        if ((x & 3) == 3 && (n & 3) == 3) sign = -sign;
        x %= n;
    }
    // n now holds gcd(a, p), which is 1 for a prime modulus not dividing a.
    return n == 1 ? sign : 0;
}

} // namespace detail

/**
 * Legendre symbol (a | p) for an odd prime p.
 *
 * Returns 0 when p divides a, otherwise +1 or -1. Evaluated by the
 * iterative quadratic-reciprocity (Jacobi) algorithm; a may be negative
 * or larger than p.
 */
inline int legendre(std::int64_t a, PrimeArg p) {
    if (p.value() == 2)
        throw std::invalid_argument("legendre: modulus must be an odd prime");
    return detail::legendre_raw(a, p.value());
}

// ===================================================================
// products modulo squares
// ===================================================================

namespace detail {

/// Squarefree representative of d1 * d2 modulo squares, overflow-checked.
/// For squarefree inputs the result is again squarefree.
inline std::int64_t squarefree_mul(std::int64_t d1, std::int64_t d2) {
    const std::int64_t g = std::gcd(d1, d2);
    const __int128 r = static_cast<__int128>(d1 / g) * (d2 / g);
    if (r > INT64_MAX || r < INT64_MIN)
        throw std::invalid_argument("squarefree_mul: product overflows 64 bits");
    return static_cast<std::int64_t>(r);
}

} // namespace detail

/**
 * Generator of the third quadratic subfield of Q(sqrt d1, sqrt d2): the
 * squarefree representative of d1 * d2.
 *
 * Throws degenerate_field_error when the product is a perfect square
 * (which for squarefree inputs happens exactly when d1 = d2).
 */
inline SquarefreeD third_subfield(SquarefreeD d1, SquarefreeD d2) {
    const std::int64_t r = detail::squarefree_mul(d1.value(), d2.value());
    if (r == 1)
        throw degenerate_field_error("third_subfield: d1 * d2 is a perfect square");
    return SquarefreeD(r);
}

} // namespace qsplit
