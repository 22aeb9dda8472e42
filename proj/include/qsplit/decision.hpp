#pragma once

/**
 * @file decision.hpp
 * @brief Verdicts and machine-checkable certificates.
 *
 * Every classification returns a Decision: the split/division verdict
 * together with a Certificate naming the rule that fired and the evaluated
 * symbols it read. Certificates are replayable: recomputing each recorded
 * symbol and re-applying the named rule reproduces the verdict.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace qsplit {

/// Whether H_K(p, q) is a matrix algebra (Split) or a division algebra.
enum class Verdict { Split, Division };

inline const char* to_string(Verdict v) {
    return v == Verdict::Split ? "Split" : "Division";
}

/**
 * One evaluated symbol inside a certificate.
 *
 * `kind` selects the replay rule; `args` are its operands:
 *   - "legendre":   args = {a, p}       value in {-1, 0, 1}
 *   - "residue":    args = {n, m}       value = n mod m in [0, m)
 *   - "hilbert":    args = {a, b, p}    p = 0 encodes the real place
 *   - "split_type": args = {d, l}       value: 0 ramified, 1 split, 2 inert
 */
struct SymbolEval {
    std::string name;
    std::string kind;
    std::vector<std::int64_t> args;
    std::int64_t value = 0;
    friend bool operator==(const SymbolEval&, const SymbolEval&) = default;
};

/// Which rule produced a verdict, and the symbol values it depended on.
struct Certificate {
    std::string clause;              ///< name of the rule that fired
    bool delegated = false;          ///< true when the place oracle decided
    bool swapped = false;            ///< true when (p, q) were exchanged so
                                     ///< the odd prime takes the first slot
    std::vector<SymbolEval> symbols; ///< evaluated inputs of the rule
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Decision {
    Verdict verdict;
    Certificate certificate;
};

} // namespace qsplit
