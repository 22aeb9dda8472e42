#pragma once

/**
 * @file oracle.hpp
 * @brief Place-based split/division oracle for H_K(p, q).
 *
 * H_K(p, q) = H_Q(p, q) (x) K stays a division algebra exactly when some
 * place of K sits over a ramified place of H_Q(p, q) with odd local degree.
 * Over a multiquadratic K every local degree is a power of two, so odd
 * degree means degree one: some rational prime ramified in H_Q(p, q) must
 * split completely in K. The infinite places never obstruct for positive
 * p, q. This criterion is independent of the residue-based classification
 * rules and serves as their ground truth.
 */

#include <cstdint>
#include <string>
#include <utility>

#include "qsplit/decision.hpp"
#include "qsplit/quadfields.hpp"
#include "qsplit/ramq.hpp"

namespace qsplit::oracle {

namespace detail {

inline SymbolEval sym_split_type(SquarefreeD d, std::int64_t l) {
    return {"type(" + std::to_string(d.value()) + "," + std::to_string(l) + ")",
            "split_type",
            {d.value(), l},
            static_cast<std::int64_t>(prime_decomposition(d, PrimeArg(l)))};
}

} // namespace detail

/**
 * Decide H_K(p, q) by searching the ramified rational primes for one that
 * splits completely in K.
 *
 * The certificate records the Hilbert symbols determining the ramified set
 * and, per ramified prime, either the full list of generator split types
 * (for the witness) or the first generator that fails to split (blocking
 * that prime).
 */
inline Decision decide(const MultiQuadField& field, PrimeArg p, PrimeArg q) {
    Decision d;
    d.certificate.delegated = true;
    RamSet ram;
    for (std::int64_t l : qsplit::detail::candidate_places(p.value(), q.value())) {
        d.certificate.symbols.push_back(
            qsplit::detail::sym_hilbert(p.value(), q.value(),
                                        Place::finite(PrimeArg(l))));
        if (d.certificate.symbols.back().value == -1) ram.push_back(l);
    }
    if (ram.empty()) {
        d.verdict = Verdict::Split;
        d.certificate.clause = "place-oracle:unramified";
        return d;
    }
    for (std::int64_t l : ram) {
        const PrimeArg lp(l);
        bool all_split = true;
        for (const SquarefreeD& g : field.generators()) {
            const SplitType t = prime_decomposition(g, lp);
            if (t != SplitType::Split) {
                // Record the blocking generator only.
                d.certificate.symbols.push_back(detail::sym_split_type(g, l));
                all_split = false;
                break;
            }
        }
        if (all_split) {
            for (const SquarefreeD& g : field.generators())
                d.certificate.symbols.push_back(detail::sym_split_type(g, l));
            d.verdict = Verdict::Division;
            d.certificate.clause = "place-oracle:witness";
            return d;
        }
    }
    d.verdict = Verdict::Split;
    d.certificate.clause = "place-oracle:no-witness";
    return d;
}

/// Base-field analogue, delegating to the rational classification.
inline Decision decide_over_Q(PrimeArg p, PrimeArg q) {
    return classify_over_Q(p, q);
}

} // namespace qsplit::oracle
