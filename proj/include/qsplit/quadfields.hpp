#pragma once

/**
 * @file quadfields.hpp
 * @brief Quadratic and multiquadratic fields: discriminants, rational prime
 *        decomposition, complete splitting.
 */

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsplit/arith.hpp"
#include "qsplit/errors.hpp"

namespace qsplit {

// ===================================================================
// discriminants
// ===================================================================

/// Field discriminant of Q(sqrt d): d itself when d = 1 (mod 4), else 4d.
inline std::int64_t discriminant(SquarefreeD d) {
    const std::int64_t v = d.value();
    if (mod_floor(v, 4) == 1) return v;
    if (std::abs(v) > INT64_MAX / 4)
        throw std::invalid_argument("discriminant: 4*d overflows 64 bits");
    return 4 * v;
}

/// A quadratic field Q(sqrt d) with its discriminant precomputed.
class QuadField {
  public:
    explicit QuadField(SquarefreeD d) : d_(d), disc_(discriminant(d)) {}
    SquarefreeD d() const { return d_; }
    std::int64_t disc() const { return disc_; }

  private:
    SquarefreeD d_;
    std::int64_t disc_;
};

// ===================================================================
// prime decomposition
// ===================================================================

/// How a rational prime decomposes in a quadratic field.
enum class SplitType { Ramified, Split, Inert };

inline const char* to_string(SplitType t) {
    switch (t) {
    case SplitType::Ramified: return "Ramified";
    case SplitType::Split: return "Split";
    default: return "Inert";
    }
}

/**
 * Decomposition of the rational prime p in Q(sqrt d).
 *
 * For odd p the three cases are the three values of the Legendre symbol of
 * the field discriminant: 0 ramified, +1 split, -1 inert. For p = 2 the
 * residue of d decides: d = 2, 3 (mod 4) ramified, d = 1 (mod 8) split,
 * d = 5 (mod 8) inert.
 */
inline SplitType prime_decomposition(SquarefreeD d, PrimeArg p) {
    if (p.value() == 2) {
        const std::int64_t r = mod_floor(d.value(), 8);
        if (r == 1) return SplitType::Split;
        if (r == 5) return SplitType::Inert;
        return SplitType::Ramified; // d = 2 or 3 (mod 4)
    }
    switch (legendre(discriminant(d), p)) {
    case 0: return SplitType::Ramified;
    case 1: return SplitType::Split;
    default: return SplitType::Inert;
    }
}

// ===================================================================
// multiquadratic fields
// ===================================================================

/**
 * A multiquadratic field Q(sqrt d_1, ..., sqrt d_n) of degree 2^n.
 *
 * Construction validates multiplicative independence of the generators:
 * no nonempty subset of the d_i may have a perfect-square product (this
 * subsumes pairwise distinctness). Validation enumerates all 2^n - 1
 * subsets, so it is exponential in the rank; intended ranks are small.
 */
class MultiQuadField {
  public:
    explicit MultiQuadField(std::vector<SquarefreeD> gens) : gens_(std::move(gens)) {
        if (gens_.empty())
            throw std::invalid_argument("MultiQuadField: at least one generator "
                                        "is required");
        const std::size_t n = gens_.size();
        if (n >= 63)
            throw std::invalid_argument("MultiQuadField: rank too large");
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            std::int64_t r = 1;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::uint64_t{1} << i))
                    r = detail::squarefree_mul(r, gens_[i].value());
            if (r == 1)
                throw degenerate_field_error(
                    "MultiQuadField: a subset of the generators has a "
                    "perfect-square product");
        }
        for (const SquarefreeD& d : gens_) discs_.push_back(discriminant(d));
    }

    std::size_t rank() const { return gens_.size(); }
    const std::vector<SquarefreeD>& generators() const { return gens_; }
    const std::vector<std::int64_t>& discriminants() const { return discs_; }

  private:
    std::vector<SquarefreeD> gens_;
    std::vector<std::int64_t> discs_;
};

/**
 * Whether the rational prime p splits completely in K.
 *
 * A prime splits completely in a composite of fields exactly when it splits
 * completely in every factor, so it suffices to check each generator's
 * quadratic field.
 */
inline bool splits_completely(const MultiQuadField& field, PrimeArg p) {
    for (const SquarefreeD& d : field.generators())
        if (prime_decomposition(d, p) != SplitType::Split) return false;
    return true;
}

} // namespace qsplit
