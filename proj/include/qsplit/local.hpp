#pragma once

/**
 * @file local.hpp
 * @brief Places of Q, Hilbert symbols, and a brute-force local solvability
 *        check for the conic a x^2 + b y^2 = z^2.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsplit/arith.hpp"

namespace qsplit {

// ===================================================================
// places
// ===================================================================

/// A place of Q: either a finite prime or the real (archimedean) place.
class Place {
  public:
    static Place finite(PrimeArg p) { return Place(p.value()); }
    static Place real() { return Place(0); }

    bool is_real() const { return p_ == 0; }

    /// The underlying prime; only meaningful for finite places.
    std::int64_t prime() const {
        if (is_real()) throw std::logic_error("Place: the real place has no prime");
        return p_;
    }

    /// Encoding used inside certificates: the prime, or 0 for the real place.
    std::int64_t code() const { return p_; }

    std::string to_string() const {
        return is_real() ? "oo" : std::to_string(p_);
    }

    friend bool operator==(Place, Place) = default;

  private:
    explicit Place(std::int64_t p) : p_(p) {}
    std::int64_t p_;
};

// ===================================================================
// Hilbert symbols
// ===================================================================

namespace detail {

/// (x - 1) / 2 mod 2 for odd x: 0 when x = 1 (mod 4), 1 when x = 3 (mod 4).
inline int eps2(std::int64_t x) { return mod_floor(x, 4) == 3 ? 1 : 0; }

/// (x^2 - 1) / 8 mod 2 for odd x: 0 when x = +-1 (mod 8), else 1.
inline int omega2(std::int64_t x) {
    const std::int64_t r = mod_floor(x, 8);
    return (r == 3 || r == 5) ? 1 : 0;
}

/// p-adic valuation together with the signed unit part: n = p^e * unit.
struct Valuation {
    int e;
    std::int64_t unit;
};

inline Valuation split_valuation(std::int64_t n, std::int64_t p) {
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return {e, n};
}

} // namespace detail

/**
 * Hilbert symbol (a, b)_v in {+1, -1} for nonzero integers a, b.
 *
 * Real place: -1 exactly when both a and b are negative. Odd prime p,
 * writing a = p^alpha u and b = p^beta w:
 *
 *     (a, b)_p = (-1)^(alpha beta (p-1)/2) (u|p)^beta (w|p)^alpha.
 *
 * p = 2, with u, w the odd parts:
 *
 *     (a, b)_2 = (-1)^(eps(u) eps(w) + alpha omega(w) + beta omega(u)),
 *
 * where eps(x) = (x-1)/2 and omega(x) = (x^2-1)/8 taken mod 2.
 */
inline int hilbert_symbol(std::int64_t a, std::int64_t b, Place v) {
    if (a == 0 || b == 0)
        throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
    if (v.is_real()) return (a < 0 && b < 0) ? -1 : 1;
    const std::int64_t p = v.prime();
    const auto [alpha, u] = detail::split_valuation(a, p);
    const auto [beta, w] = detail::split_valuation(b, p);
    if (p == 2) {
        const int e = detail::eps2(u) * detail::eps2(w) +
                      (alpha & 1) * detail::omega2(w) +
                      (beta & 1) * detail::omega2(u);
        return (e & 1) ? -1 : 1;
    }
    int sign = ((alpha & 1) && (beta & 1) && mod_floor(p, 4) == 3) ? -1 : 1;
    if (beta & 1) sign *= detail::legendre_raw(u, p);
    if (alpha & 1) sign *= detail::legendre_raw(w, p);
    return sign;
}

// ===================================================================
// brute-force local solvability
// ===================================================================

/**
 * Whether a x^2 + b y^2 = z^2 has a primitive solution modulo p^k, i.e.
 * one with x, y, z not all divisible by p, found by exhaustive search.
 *
 * At Hensel-sufficient precision -- k >= ord_p(4ab) + 1 for odd p and
 * k >= ord_2(4ab) + 3 for p = 2 -- solvability here coincides with
 * hilbert_symbol(a, b, p) = +1. The search is quadratic in p^k and slow
 * by design; it exists to cross-check the symbol formulas.
 */
inline bool conic_solvable_mod(std::int64_t a, std::int64_t b, PrimeArg p, int k) {
    if (a == 0 || b == 0)
        throw std::invalid_argument("conic_solvable_mod: coefficients must be "
                                    "nonzero");
    if (k < 1) throw std::invalid_argument("conic_solvable_mod: k must be >= 1");
    std::int64_t m = 1;
    for (int i = 0; i < k; ++i) {
        if (m > INT64_MAX / p.value())
            throw std::invalid_argument("conic_solvable_mod: p^k overflows 64 bits");
        m *= p.value();
    }
    const auto mm = static_cast<std::uint64_t>(m);
    const std::uint64_t pv = static_cast<std::uint64_t>(p.value());
    const auto am = static_cast<std::uint64_t>(mod_floor(a, m));
    const auto bm = static_cast<std::uint64_t>(mod_floor(b, m));

    // Tables of squares mod m: any square, and squares of units.
    std::vector<std::uint8_t> sq_any(mm, 0), sq_unit(mm, 0);
    for (std::uint64_t z = 0; z < mm; ++z) {
        const auto t = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(z) * z % mm);
        sq_any[t] = 1;
        if (z % pv != 0) sq_unit[t] = 1;
    }
    std::vector<std::uint64_t> by2(mm);
    std::vector<std::uint8_t> y_unit(mm);
    for (std::uint64_t y = 0; y < mm; ++y) {
        by2[y] = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(bm) * y % mm * y % mm);
        y_unit[y] = (y % pv != 0);
    }
    for (std::uint64_t x = 0; x < mm; ++x) {
        const auto ax2 = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(am) * x % mm * x % mm);
        const std::uint8_t x_unit = (x % pv != 0);
        for (std::uint64_t y = 0; y < mm; ++y) {
            std::uint64_t t = ax2 + by2[y];
            if (t >= mm) t -= mm;
            // A solution is primitive when x or y is a unit (z then being
            // arbitrary) or when z itself must be a unit.
            if (x_unit | y_unit[y]) {
                if (sq_any[t]) return true;
            } else if (sq_unit[t]) {
                return true;
            }
        }
    }
    return false;
}

/// The precision at which conic solvability is equivalent to the Hilbert
/// symbol: ord_p(4ab) + 1 for odd p, ord_2(4ab) + 3 for p = 2.
inline int hensel_precision(std::int64_t a, std::int64_t b, PrimeArg p) {
    if (a == 0 || b == 0)
        throw std::invalid_argument("hensel_precision: coefficients must be "
                                    "nonzero");
    const int va = detail::split_valuation(a, p.value()).e;
    const int vb = detail::split_valuation(b, p.value()).e;
    const int v4 = p.value() == 2 ? 2 : 0;
    return v4 + va + vb + (p.value() == 2 ? 3 : 1);
}

} // namespace qsplit
