#pragma once

/**
 * @file bench.hpp
 * @brief Deterministic benchmark harness comparing the residue-rule path,
 *        the place-oracle path and the brute-force local path, with
 *        cross-method agreement checking.
 *
 * Case enumeration is deterministic and documented:
 *   - field generators d run through squarefree values ordered by |d|
 *     ascending with the negative sign first (-1, -2, 2, -3, 3, -5, ...),
 *     omitting 0 and +1;
 *   - prime pairs {p, q} are unordered with p < q, ordered by (q, p):
 *     (2,3), (2,5), (3,5), (2,7), (3,7), (5,7), (2,11), ...;
 *   - biquadratic generator pairs {d_i, d_j} with i < j are ordered by
 *     (j, i) over the d sequence;
 *   - with r = ceil(sqrt(count)), the first r prime pairs are crossed
 *     with the first r field specs, prime pairs outermost, and the
 *     product is truncated to exactly `count` cases.
 */

#include <atomic>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qsplit/arith.hpp"
#include "qsplit/classify.hpp"
#include "qsplit/local.hpp"
#include "qsplit/oracle.hpp"
#include "qsplit/quadfields.hpp"

namespace qsplit::bench {

enum class CaseMode { Quadratic, Biquadratic };
enum class Method { FastTheorem, PlaceOracle, LocalBrute };

inline const char* to_string(CaseMode m) {
    return m == CaseMode::Quadratic ? "quad" : "biquad";
}

inline const char* to_string(Method m) {
    switch (m) {
    case Method::FastTheorem: return "fast";
    case Method::PlaceOracle: return "oracle";
    default: return "brute";
    }
}

/// One benchmark case: generators of K and the defining prime pair.
struct BenchCase {
    std::vector<std::int64_t> ds;
    std::int64_t p, q;
};

using CaseSet = std::vector<BenchCase>;

// ===================================================================
// deterministic enumeration
// ===================================================================

/// First `count` squarefree field generators in canonical order.
inline std::vector<std::int64_t> squarefree_values(std::size_t count) {
    std::vector<std::int64_t> out;
    for (std::int64_t s = 1; out.size() < count; ++s) {
        for (std::int64_t d : {-s, s}) {
            if (d == 1) continue;
            if (squarefree_part(d).cofactor != 1) continue;
            out.push_back(d);
            if (out.size() == count) break;
        }
    }
    return out;
}

/// First `count` unordered prime pairs {p, q}, p < q, ordered by (q, p).
inline std::vector<std::pair<std::int64_t, std::int64_t>>
prime_pairs(std::size_t count) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    std::vector<std::int64_t> seen;
    for (std::int64_t n = 2; out.size() < count; ++n) {
        if (!is_prime(n)) continue;
        for (std::int64_t p : seen) {
            out.emplace_back(p, n);
            if (out.size() == count) break;
        }
        seen.push_back(n);
    }
    return out;
}

/// Deterministic case set: prime pairs crossed with field specs.
inline CaseSet generate_cases(std::size_t count, CaseMode mode) {
    if (count == 0)
        throw std::invalid_argument("generate_cases: count must be >= 1");
    std::size_t r = 1;
    while (r * r < count) ++r;

    std::vector<std::vector<std::int64_t>> fields;
    if (mode == CaseMode::Quadratic) {
        for (std::int64_t d : squarefree_values(r)) fields.push_back({d});
    } else {
        // Unordered pairs over the d sequence, ordered by the later index.
        // Distinct squarefree generators are automatically independent.
        std::size_t extent = r + 2;
        while (extent * (extent - 1) / 2 < r) ++extent;
        const std::vector<std::int64_t> ds = squarefree_values(extent);
        for (std::size_t j = 1; j < ds.size() && fields.size() < r; ++j)
            for (std::size_t i = 0; i < j && fields.size() < r; ++i)
                fields.push_back({ds[i], ds[j]});
    }
    const auto pairs = prime_pairs(r);

    CaseSet cases;
    cases.reserve(count);
    for (std::size_t i = 0; i < r && cases.size() < count; ++i)
        for (std::size_t j = 0; j < r && cases.size() < count; ++j)
            cases.push_back({fields[j], pairs[i].first, pairs[i].second});
    return cases;
}

// ===================================================================
// method evaluation
// ===================================================================

namespace detail {

struct PreparedCase {
    MultiQuadField field;
    PrimeArg p, q;
};

inline std::vector<PreparedCase> prepare(const CaseSet& cases) {
    std::vector<PreparedCase> out;
    out.reserve(cases.size());
    for (const BenchCase& c : cases) {
        std::vector<SquarefreeD> gens;
        gens.reserve(c.ds.size());
        for (std::int64_t d : c.ds) gens.emplace_back(d);
        out.push_back({MultiQuadField(std::move(gens)), PrimeArg(c.p),
                       PrimeArg(c.q)});
    }
    return out;
}

/// Brute-force verdict: ramification detected by conic search, splitting
/// by the usual residue rules.
inline Decision local_brute_decide(const MultiQuadField& field, PrimeArg p,
                                   PrimeArg q) {
    Decision d;
    d.verdict = Verdict::Split;
    d.certificate.clause = "local-brute";
    for (std::int64_t l :
         qsplit::detail::candidate_places(p.value(), q.value())) {
        const PrimeArg lp(l);
        const int prec = hensel_precision(p.value(), q.value(), lp);
        if (conic_solvable_mod(p.value(), q.value(), lp, prec))
            continue; // unramified at l
        if (splits_completely(field, lp)) {
            d.verdict = Verdict::Division;
            return d;
        }
    }
    return d;
}

inline Decision evaluate(Method m, CaseMode mode, const PreparedCase& c) {
    switch (m) {
    case Method::FastTheorem:
        if (mode == CaseMode::Quadratic)
            return classify_quadratic(c.field.generators()[0], c.p, c.q);
        return classify_biquadratic(c.field.generators()[0],
                                    c.field.generators()[1], c.p, c.q);
    case Method::PlaceOracle:
        return oracle::decide(c.field, c.p, c.q);
    default:
        return local_brute_decide(c.field, c.p, c.q);
    }
}

} // namespace detail

// ===================================================================
// harness
// ===================================================================

/// Per-case outcome, retained when BenchOptions::collect_cases is set.
struct CaseRecord {
    bool evaluated = false;
    Verdict verdict = Verdict::Split;
    Certificate certificate;
    std::uint64_t micros = 0;
};

struct BenchRow {
    Method method;
    CaseMode mode;
    std::size_t case_count = 0;        ///< cases this method completed
    double total_ms = 0.0;             ///< wall clock, excluding generation
    std::size_t agreement_failures = 0;///< cases with any cross-method mismatch
    bool finished = true;              ///< false: budget expired ("n.a.")
};

struct BenchOptions {
    bool single_thread = false;
    unsigned threads = 0; ///< 0 = hardware concurrency, capped at 8
    std::chrono::milliseconds budget{std::chrono::minutes(10)};
    bool collect_cases = false;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    CaseSet cases;
    /// per_method[i][j]: record of methods[i] on case j (collect_cases).
    std::vector<std::vector<CaseRecord>> per_method;
};

/**
 * Run every requested method over the deterministic case set and
 * cross-check verdicts pairwise; agreement_failures (shared by all rows)
 * counts cases on which the completed methods disagree.
 */
inline BenchReport run_benchmark(std::size_t count, CaseMode mode,
                                 const std::vector<Method>& methods,
                                 const BenchOptions& opts = {}) {
    if (methods.empty())
        throw std::invalid_argument("run_benchmark: no methods given");
    for (Method m : methods)
        if (m == Method::LocalBrute && count > 1000)
            throw std::invalid_argument("run_benchmark: the brute method is "
                                        "restricted to count <= 1000");

    BenchReport report;
    report.cases = generate_cases(count, mode);
    const std::vector<detail::PreparedCase> prepared =
        detail::prepare(report.cases);
    const std::size_t n = prepared.size();

    unsigned threads = opts.single_thread
                           ? 1u
                           : (opts.threads
                                  ? opts.threads
                                  : std::min(8u, std::max(1u, std::thread::hardware_concurrency())));
    if (threads > n) threads = static_cast<unsigned>(n);

    // verdicts[i][j]: -1 not evaluated, else the verdict of methods[i].
    std::vector<std::vector<signed char>> verdicts(
        methods.size(), std::vector<signed char>(n, -1));
    report.per_method.resize(opts.collect_cases ? methods.size() : 0);

    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
        const Method method = methods[mi];
        std::vector<CaseRecord>* records = nullptr;
        if (opts.collect_cases) {
            report.per_method[mi].assign(n, CaseRecord{});
            records = &report.per_method[mi];
        }
        std::atomic<bool> expired{false};
        const auto start = std::chrono::steady_clock::now();

        auto worker = [&, mi, method](std::size_t lo, std::size_t hi) {
            for (std::size_t j = lo; j < hi; ++j) {
                if ((j - lo) % 128 == 0) {
                    if (expired.load(std::memory_order_relaxed)) return;
                    if (std::chrono::steady_clock::now() - start >= opts.budget) {
                        expired.store(true, std::memory_order_relaxed);
                        return;
                    }
                }
                if (records) {
                    const auto t0 = std::chrono::steady_clock::now();
                    Decision d = detail::evaluate(method, mode, prepared[j]);
                    const auto t1 = std::chrono::steady_clock::now();
                    verdicts[mi][j] = static_cast<signed char>(d.verdict);
                    auto& rec = (*records)[j];
                    rec.evaluated = true;
                    rec.verdict = d.verdict;
                    rec.certificate = std::move(d.certificate);
                    rec.micros = static_cast<std::uint64_t>(
                        std::chrono::duration_cast<std::chrono::microseconds>(
                            t1 - t0)
                            .count());
                } else {
                    verdicts[mi][j] = static_cast<signed char>(
                        detail::evaluate(method, mode, prepared[j]).verdict);
                }
            }
        };

        if (threads <= 1) {
            worker(0, n);
        } else {
            std::vector<std::thread> pool;
            const std::size_t chunk = (n + threads - 1) / threads;
            for (unsigned t = 0; t < threads; ++t) {
                const std::size_t lo = std::min<std::size_t>(t * chunk, n);
                const std::size_t hi = std::min<std::size_t>(lo + chunk, n);
                if (lo < hi) pool.emplace_back(worker, lo, hi);
            }
            for (std::thread& t : pool) t.join();
        }
        const auto stop = std::chrono::steady_clock::now();

        BenchRow row;
        row.method = method;
        row.mode = mode;
        row.finished = !expired.load();
        row.total_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        for (signed char v : verdicts[mi]) row.case_count += (v >= 0);
        report.rows.push_back(row);
    }

    // Pairwise agreement: a case fails when two completed methods differ.
    std::size_t failures = 0;
    for (std::size_t j = 0; j < n; ++j) {
        signed char seen = -1;
        bool mismatch = false;
        for (std::size_t mi = 0; mi < methods.size(); ++mi) {
            const signed char v = verdicts[mi][j];
            if (v < 0) continue;
            if (seen < 0)
                seen = v;
            else if (v != seen)
                mismatch = true;
        }
        failures += mismatch;
    }
    for (BenchRow& row : report.rows) row.agreement_failures = failures;
    return report;
}

} // namespace qsplit::bench
