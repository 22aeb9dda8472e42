#pragma once

/**
 * @file verify.hpp
 * @brief Exhaustive agreement sweep: the residue-rule classification
 *        against the place oracle over bounded field/prime ranges.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsplit/classify.hpp"
#include "qsplit/oracle.hpp"

namespace qsplit {

struct SweepMismatch {
    std::vector<std::int64_t> ds;
    std::int64_t p, q;
    Verdict fast, oracle;
};

struct SweepStats {
    std::size_t cases = 0;
    std::size_t disagreements = 0;
    /// clause -> (split count, division count) over the fast path.
    std::map<std::string, std::pair<std::size_t, std::size_t>> by_clause;
    std::vector<SweepMismatch> first_mismatches; ///< capped at 10
};

namespace detail {

inline std::vector<std::int64_t> primes_upto(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t v = 2; v <= n; ++v)
        if (is_prime(v)) out.push_back(v);
    return out;
}

/// All valid generator tuples of the given rank with |d_i| <= max_d, in
/// the canonical generator order; dependent tuples are skipped.
inline std::vector<std::vector<std::int64_t>>
generator_tuples(int rank, std::int64_t max_d) {
    std::vector<std::int64_t> ds;
    for (std::int64_t s = 1; s <= max_d; ++s)
        for (std::int64_t d : {-s, s})
            if (d != 1 && squarefree_part(d).cofactor == 1) ds.push_back(d);

    std::vector<std::vector<std::int64_t>> out;
    if (rank == 1) {
        for (std::int64_t d : ds) out.push_back({d});
        return out;
    }
    if (rank == 2) {
        for (std::size_t j = 1; j < ds.size(); ++j)
            for (std::size_t i = 0; i < j; ++i)
                out.push_back({ds[i], ds[j]});
        return out;
    }
    for (std::size_t k = 2; k < ds.size(); ++k)
        for (std::size_t j = 1; j < k; ++j)
            for (std::size_t i = 0; i < j; ++i) {
                // Skip dependent triples (subset product a perfect square).
                if (detail::squarefree_mul(
                        detail::squarefree_mul(ds[i], ds[j]), ds[k]) == 1)
                    continue;
                out.push_back({ds[i], ds[j], ds[k]});
            }
    return out;
}

} // namespace detail

/**
 * Sweep all rank-`rank` fields with |d_i| <= max_d against all ordered
 * prime pairs p, q <= max_prime, comparing the residue-rule verdict with
 * the place oracle's.
 */
inline SweepStats sweep_against_oracle(std::int64_t max_prime,
                                       std::int64_t max_d, int rank) {
    if (rank < 1 || rank > 3)
        throw std::invalid_argument("sweep_against_oracle: rank must be 1, 2 "
                                    "or 3");
    SweepStats stats;
    const std::vector<std::int64_t> primes = detail::primes_upto(max_prime);
    for (const std::vector<std::int64_t>& ds :
         detail::generator_tuples(rank, max_d)) {
        std::vector<SquarefreeD> gens;
        for (std::int64_t d : ds) gens.emplace_back(d);
        const MultiQuadField field(gens);
        for (std::int64_t pv : primes) {
            const PrimeArg p(pv);
            for (std::int64_t qv : primes) {
                const PrimeArg q(qv);
                Decision fast;
                switch (rank) {
                case 1: fast = classify_quadratic(gens[0], p, q); break;
                case 2: fast = classify_biquadratic(gens[0], gens[1], p, q); break;
                default: fast = classify_multiquadratic(field, p, q); break;
                }
                const Decision truth = oracle::decide(field, p, q);
                ++stats.cases;
                auto& bucket = stats.by_clause[fast.certificate.clause];
                (fast.verdict == Verdict::Split ? bucket.first : bucket.second)++;
                if (fast.verdict != truth.verdict) {
                    ++stats.disagreements;
                    if (stats.first_mismatches.size() < 10)
                        stats.first_mismatches.push_back(
                            {ds, pv, qv, fast.verdict, truth.verdict});
                }
            }
        }
    }
    return stats;
}

} // namespace qsplit
