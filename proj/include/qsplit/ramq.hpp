#pragma once

/**
 * @file ramq.hpp
 * @brief Ramified primes and split/division classification of H_Q(p, q).
 *
 * H_Q(p, q) is the rational quaternion algebra with defining pair of
 * positive primes (p, q). Its finite ramification set is a subset of
 * {2, p, q} of even size; the algebra splits exactly when it is empty.
 * Two evaluation paths are provided: a generic one computing the three
 * Hilbert symbols, and a fast residue-based case analysis.
 */

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qsplit/arith.hpp"
#include "qsplit/decision.hpp"
#include "qsplit/local.hpp"

namespace qsplit {

/// Sorted set of ramified rational primes; always of size 0 or 2 here.
using RamSet = std::vector<std::int64_t>;

namespace detail {

inline std::vector<std::int64_t> candidate_places(std::int64_t p, std::int64_t q) {
    std::vector<std::int64_t> c{2, p, q};
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

inline SymbolEval sym_residue(std::int64_t n, std::int64_t m) {
    return {std::to_string(n) + " mod " + std::to_string(m), "residue", {n, m},
            mod_floor(n, m)};
}

inline SymbolEval sym_legendre(const std::string& label, std::int64_t a,
                               std::int64_t p) {
    return {label, "legendre", {a, p}, legendre_raw(a, p)};
}

inline SymbolEval sym_hilbert(std::int64_t a, std::int64_t b, Place v) {
    return {"(" + std::to_string(a) + "," + std::to_string(b) + ")_" +
                v.to_string(),
            "hilbert", {a, b, v.code()}, hilbert_symbol(a, b, v)};
}

/// Fast-path result: the set plus the clause and symbols that produced it.
struct RamAnalysis {
    RamSet set;
    std::string clause;
    std::vector<SymbolEval> symbols;
};

/**
 * Residue case analysis for the ramified set of H_Q(p, q).
 *
 * Split clauses: p = q = 2; p = q = 1 (mod 4); a pair {2, l} with
 * l = +-1 (mod 8); distinct odd pair with a member = 1 (mod 4) and
 * (q|p) = 1. Ramification clauses: distinct odd pair with a member
 * = 1 (mod 4) and (p|q) = -1 gives {p, q}; a pair {2, l} with
 * l = 3 or 5 (mod 8) gives {2, l}; distinct odd p = q = 3 (mod 4)
 * gives {2, p} or {2, q} by which symbol is a non-residue. The one
 * uncovered shape, p = q = 3 (mod 4), falls back to the generic path.
 */
inline RamAnalysis analyze_ram_fast(std::int64_t p, std::int64_t q) {
    if (p == 2 && q == 2) return {{}, "q-split:both-two", {}};
    if (p == q && mod_floor(p, 4) == 1)
        return {{}, "q-split:equal-1mod4", {sym_residue(p, 4)}};
    if (p == 2 || q == 2) { // pair {2, l} with l odd
        const std::int64_t l = p == 2 ? q : p;
        const std::int64_t r = mod_floor(l, 8);
        if (r == 1 || r == 7)
            return {{}, "q-split:with-two-pm1mod8", {sym_residue(l, 8)}};
        if (r == 3) return {{2, l}, "q-ram:two-3mod8", {sym_residue(l, 8)}};
        return {{2, l}, "q-ram:two-5mod8", {sym_residue(l, 8)}};
    }
    if (p != q) { // both odd, distinct
        if (mod_floor(p, 4) == 1 || mod_floor(q, 4) == 1) {
            if (legendre_raw(q, p) == 1)
                return {{},
                        "q-split:residue-one-1mod4",
                        {sym_residue(p, 4), sym_residue(q, 4),
                         sym_legendre("leg(q,p)", q, p)}};
            return {{std::min(p, q), std::max(p, q)},
                    "q-ram:nonresidue-one-1mod4",
                    {sym_residue(p, 4), sym_residue(q, 4),
                     sym_legendre("leg(p,q)", p, q)}};
        }
        if (legendre_raw(q, p) != 1)
            return {{2, p},
                    "q-ram:both-3mod4-p",
                    {sym_residue(p, 4), sym_residue(q, 4),
                     sym_legendre("leg(q,p)", q, p)}};
        return {{2, q},
                "q-ram:both-3mod4-q",
                {sym_residue(p, 4), sym_residue(q, 4),
                 sym_legendre("leg(p,q)", p, q)}};
    }
    // p = q = 3 (mod 4): outside the residue case analysis.
    RamAnalysis out{{}, "q-ram:generic", {}};
    for (std::int64_t l : candidate_places(p, q)) {
        out.symbols.push_back(sym_hilbert(p, q, Place::finite(PrimeArg(l))));
        if (out.symbols.back().value == -1) out.set.push_back(l);
    }
    return out;
}

} // namespace detail

/// Ramified set of H_Q(p, q) via the three Hilbert symbols at 2, p, q.
inline RamSet ramified_primes_generic(PrimeArg p, PrimeArg q) {
    RamSet out;
    for (std::int64_t l : detail::candidate_places(p.value(), q.value()))
        if (hilbert_symbol(p.value(), q.value(), Place::finite(PrimeArg(l))) == -1)
            out.push_back(l);
    return out;
}

/// Ramified set of H_Q(p, q) via the residue case analysis.
inline RamSet ramified_primes_fast(PrimeArg p, PrimeArg q) {
    return detail::analyze_ram_fast(p.value(), q.value()).set;
}

/// Split/division verdict for H_Q(p, q) with a clause certificate.
inline Decision classify_over_Q(PrimeArg p, PrimeArg q) {
    detail::RamAnalysis a = detail::analyze_ram_fast(p.value(), q.value());
    Decision d;
    d.verdict = a.set.empty() ? Verdict::Split : Verdict::Division;
    d.certificate.clause = std::move(a.clause);
    d.certificate.symbols = std::move(a.symbols);
    return d;
}

} // namespace qsplit
