#pragma once

/**
 * @file classify.hpp
 * @brief Residue-based split/division classification of H_K(p, q) over
 *        quadratic, biquadratic and general multiquadratic fields K.
 *
 * The decision procedure, after normalizing the pair so an odd prime takes
 * the first slot:
 *
 *   1. If H_Q(p, q) already splits, so does every H_K(p, q).
 *   2. Otherwise exactly one residue shape applies and division holds
 *      exactly when one of two symbol batteries passes for every
 *      generator d_i of K (discriminants D_i):
 *        - odd distinct p, q with a member = 1 (mod 4):
 *              all (D_i|p) = 1   or   all (D_i|q) = 1
 *        - pair {p, 2} with p = 3, 5 (mod 8):
 *              all (D_i|p) = 1   or   all d_i = 1 (mod 8)
 *        - odd distinct p = q = 3 (mod 4), on the side whose symbol is a
 *          non-residue ((q|p) != 1 checked first):
 *              all (D_i|p) = 1   or   all d_i = 1 (mod 8)
 *      All conditions read strictly: a symbol value of 0 (a prime dividing
 *      a discriminant) fails the "= 1" test, matching the place criterion,
 *      where a ramified prime never splits completely.
 *   3. The shape p = q = 3 (mod 4) is outside the rules and is delegated
 *      to the place oracle, as are multiquadratic inputs violating the
 *      divisibility hypothesis (p and q coprime to every d_i) when the
 *      guard is requested.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qsplit/arith.hpp"
#include "qsplit/decision.hpp"
#include "qsplit/oracle.hpp"
#include "qsplit/quadfields.hpp"
#include "qsplit/ramq.hpp"

namespace qsplit {

namespace detail {

inline Decision delegate_to_oracle(const MultiQuadField& field, PrimeArg p,
                                   PrimeArg q, bool swapped,
                                   std::vector<SymbolEval> context) {
    Decision d = oracle::decide(field, p, q);
    d.certificate.clause = "generic-oracle(" + d.certificate.clause + ")";
    d.certificate.swapped = swapped;
    if (!context.empty())
        d.certificate.symbols.insert(d.certificate.symbols.begin(),
                                     context.begin(), context.end());
    return d;
}

/// Battery "all (D_i | l) = 1", recording every symbol it reads.
inline bool all_disc_residues(const MultiQuadField& field, std::int64_t l,
                              const char* who, std::vector<SymbolEval>& out) {
    bool all = true;
    for (std::int64_t disc : field.discriminants()) {
        out.push_back(sym_legendre("leg(D," + std::string(who) + ")", disc, l));
        all = all && out.back().value == 1;
    }
    return all;
}

/// Battery "all d_i = 1 (mod 8)", recording every residue it reads.
inline bool all_gens_1mod8(const MultiQuadField& field,
                           std::vector<SymbolEval>& out) {
    bool all = true;
    for (const SquarefreeD& g : field.generators()) {
        out.push_back(sym_residue(g.value(), 8));
        all = all && out.back().value == 1;
    }
    return all;
}

inline Decision classify_core(const MultiQuadField& field, PrimeArg pa,
                              PrimeArg qa, bool guard_divisibility) {
    std::int64_t p = pa.value(), q = qa.value();
    const bool swapped = (p == 2 && q != 2);
    if (swapped) std::swap(p, q);

    // 1. Split base algebra: splitting ascends to every extension.
    RamAnalysis base = analyze_ram_fast(p, q);
    if (base.set.empty()) {
        Decision d;
        d.verdict = Verdict::Split;
        d.certificate.clause = "base-splits(" + base.clause + ")";
        d.certificate.swapped = swapped;
        d.certificate.symbols = std::move(base.symbols);
        return d;
    }

    const PrimeArg P(p), Q(q);

    // Divisibility hypothesis guard for the general multiquadratic rule.
    if (guard_divisibility) {
        for (const SquarefreeD& g : field.generators()) {
            for (std::int64_t l : {p, q}) {
                if (g.value() % l == 0)
                    return delegate_to_oracle(field, P, Q, swapped,
                                              {sym_residue(g.value(), l)});
            }
        }
    }

    Decision d;
    d.certificate.swapped = swapped;

    if (q == 2) { // pair {p, 2}, p = 3, 5 (mod 8) since the base ramifies
        d.certificate.clause = "division-test:even-pair";
        d.certificate.symbols.push_back(sym_residue(p, 8));
        const bool via_p = all_disc_residues(field, p, "p", d.certificate.symbols);
        const bool via_2 = all_gens_1mod8(field, d.certificate.symbols);
        d.verdict = (via_p || via_2) ? Verdict::Division : Verdict::Split;
        return d;
    }

    if (p != q && (mod_floor(p, 4) == 1 || mod_floor(q, 4) == 1)) {
        // Odd distinct pair with a member = 1 (mod 4); the base ramifies,
        // so (p|q) = (q|p) = -1.
        d.certificate.clause = "division-test:odd-distinct";
        d.certificate.symbols = {sym_residue(p, 4), sym_residue(q, 4),
                                 sym_legendre("leg(p,q)", p, q)};
        const bool via_p = all_disc_residues(field, p, "p", d.certificate.symbols);
        const bool via_q = all_disc_residues(field, q, "q", d.certificate.symbols);
        d.verdict = (via_p || via_q) ? Verdict::Division : Verdict::Split;
        return d;
    }

    if (p != q) { // odd distinct, both = 3 (mod 4): asymmetric branches,
                  // the (q|p) != 1 branch checked first
        if (legendre_raw(q, p) != 1) {
            d.certificate.clause = "division-test:both-3mod4-p";
            d.certificate.symbols = {sym_residue(p, 4), sym_residue(q, 4),
                                     sym_legendre("leg(q,p)", q, p)};
            const bool via_p =
                all_disc_residues(field, p, "p", d.certificate.symbols);
            const bool via_2 = all_gens_1mod8(field, d.certificate.symbols);
            d.verdict = (via_p || via_2) ? Verdict::Division : Verdict::Split;
            return d;
        }
        d.certificate.clause = "division-test:both-3mod4-q";
        d.certificate.symbols = {sym_residue(p, 4), sym_residue(q, 4),
                                 sym_legendre("leg(p,q)", p, q)};
        const bool via_q = all_disc_residues(field, q, "q", d.certificate.symbols);
        const bool via_2 = all_gens_1mod8(field, d.certificate.symbols);
        d.verdict = (via_q || via_2) ? Verdict::Division : Verdict::Split;
        return d;
    }

    // p = q = 3 (mod 4): no residue rule applies.
    return delegate_to_oracle(field, P, Q, swapped, {});
}

} // namespace detail

/// Classification of H_K(p, q) over a quadratic field K = Q(sqrt d).
inline Decision classify_quadratic(SquarefreeD d, PrimeArg p, PrimeArg q) {
    return detail::classify_core(MultiQuadField({d}), p, q,
                                 /*guard_divisibility=*/false);
}

/// Classification over a biquadratic field K = Q(sqrt d1, sqrt d2).
inline Decision classify_biquadratic(SquarefreeD d1, SquarefreeD d2, PrimeArg p,
                                     PrimeArg q) {
    return detail::classify_core(MultiQuadField({d1, d2}), p, q,
                                 /*guard_divisibility=*/false);
}

/**
 * Classification over a general multiquadratic field.
 *
 * The residue rules additionally require p and q coprime to every
 * generator here; inputs violating that hypothesis are delegated to the
 * place oracle (certificate clause "generic-oracle(...)").
 */
inline Decision classify_multiquadratic(const MultiQuadField& field, PrimeArg p,
                                        PrimeArg q) {
    return detail::classify_core(field, p, q, /*guard_divisibility=*/true);
}

} // namespace qsplit
