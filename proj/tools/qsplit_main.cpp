// Command-line interface: classify | verify | bench.
//
// Exit codes: 0 success; 1 a verification disagreement or benchmark
// agreement failure was detected; 2 invalid usage or invalid input.

#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsplit/json_io.hpp"
#include "qsplit/qsplit.hpp"
#include "qsplit/verify.hpp"

namespace {

int run_classify(std::int64_t p, std::int64_t q, const std::string& field_text,
                 bool as_json) {
    const qsplit::FieldSpec spec = qsplit::parse_field_spec(field_text);
    const qsplit::PrimeArg pa(p), qa(q);
    const qsplit::Decision dec = qsplit::classify_field_spec(spec, pa, qa);

    if (as_json) {
        std::cout << qsplit::to_json(spec, p, q, dec).dump() << "\n";
        return 0;
    }
    std::cout << "field:   " << qsplit::describe(spec) << "\n";
    std::cout << "algebra: H(" << p << ", " << q << ")\n";
    std::cout << "verdict: " << qsplit::to_string(dec.verdict) << "\n";
    std::cout << "clause:  " << dec.certificate.clause;
    if (dec.certificate.swapped) std::cout << " [swapped]";
    if (dec.certificate.delegated) std::cout << " [delegated]";
    std::cout << "\n";
    if (!dec.certificate.symbols.empty()) {
        std::cout << "symbols:";
        for (const qsplit::SymbolEval& s : dec.certificate.symbols)
            std::cout << " " << s.name << "=" << s.value << ";";
        std::cout << "\n";
    }
    return 0;
}

int run_verify(std::int64_t max_prime, std::int64_t max_d, int rank) {
    const qsplit::SweepStats stats =
        qsplit::sweep_against_oracle(max_prime, max_d, rank);
    std::printf("sweep: rank %d fields, |d| <= %" PRId64
                ", primes p, q <= %" PRId64 "\n",
                rank, max_d, max_prime);
    std::printf("cases: %zu\n", stats.cases);
    std::printf("disagreements: %zu\n", stats.disagreements);
    std::printf("%-44s %10s %10s\n", "clause", "split", "division");
    for (const auto& [clause, counts] : stats.by_clause)
        std::printf("%-44s %10zu %10zu\n", clause.c_str(), counts.first,
                    counts.second);
    if (stats.disagreements != 0) {
        std::printf("first mismatches:\n");
        for (const qsplit::SweepMismatch& m : stats.first_mismatches) {
            std::string ds;
            for (std::size_t i = 0; i < m.ds.size(); ++i)
                ds += (i ? "," : "") + std::to_string(m.ds[i]);
            std::printf("  d=[%s] p=%" PRId64 " q=%" PRId64
                        " rules=%s oracle=%s\n",
                        ds.c_str(), m.p, m.q, qsplit::to_string(m.fast),
                        qsplit::to_string(m.oracle));
        }
        return 1;
    }
    return 0;
}

std::vector<qsplit::bench::Method> parse_methods(const std::string& text) {
    std::vector<qsplit::bench::Method> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? std::string::npos
                                                        : comma - pos);
        if (item == "fast") out.push_back(qsplit::bench::Method::FastTheorem);
        else if (item == "oracle")
            out.push_back(qsplit::bench::Method::PlaceOracle);
        else if (item == "brute")
            out.push_back(qsplit::bench::Method::LocalBrute);
        else
            throw std::invalid_argument("unknown method '" + item +
                                        "' (expected fast, oracle or brute)");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string format_total_ms(const qsplit::bench::BenchRow& row) {
    if (!row.finished) return "n.a.";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", row.total_ms);
    return buf;
}

int run_bench(std::size_t count, const std::string& mode_text,
              const std::string& methods_text, const std::string& out_format,
              bool single_thread, unsigned threads, std::int64_t budget_sec) {
    qsplit::bench::CaseMode mode;
    if (mode_text == "quad") mode = qsplit::bench::CaseMode::Quadratic;
    else if (mode_text == "biquad")
        mode = qsplit::bench::CaseMode::Biquadratic;
    else
        throw std::invalid_argument("unknown mode '" + mode_text +
                                    "' (expected quad or biquad)");
    if (out_format != "csv" && out_format != "table" && out_format != "jsonl")
        throw std::invalid_argument("unknown output format '" + out_format +
                                    "' (expected csv, table or jsonl)");
    const std::vector<qsplit::bench::Method> methods =
        parse_methods(methods_text);

    qsplit::bench::BenchOptions opts;
    opts.single_thread = single_thread;
    opts.threads = threads;
    opts.budget = std::chrono::seconds(budget_sec);
    opts.collect_cases = out_format == "jsonl";

    const qsplit::bench::BenchReport report =
        qsplit::bench::run_benchmark(count, mode, methods, opts);

    if (out_format == "csv") {
        std::printf("method,mode,case_count,total_ms,agreement_failures\n");
        for (const qsplit::bench::BenchRow& row : report.rows)
            std::printf("%s,%s,%zu,%s,%zu\n",
                        qsplit::bench::to_string(row.method),
                        qsplit::bench::to_string(row.mode), row.case_count,
                        format_total_ms(row).c_str(), row.agreement_failures);
    } else if (out_format == "table") {
        std::printf("%-8s %-8s %12s %14s %10s\n", "method", "mode", "cases",
                    "total_ms", "failures");
        for (const qsplit::bench::BenchRow& row : report.rows)
            std::printf("%-8s %-8s %12zu %14s %10zu\n",
                        qsplit::bench::to_string(row.method),
                        qsplit::bench::to_string(row.mode), row.case_count,
                        format_total_ms(row).c_str(), row.agreement_failures);
    } else {
        for (std::size_t mi = 0; mi < methods.size(); ++mi)
            for (std::size_t j = 0; j < report.cases.size(); ++j) {
                const qsplit::bench::CaseRecord& rec = report.per_method[mi][j];
                if (!rec.evaluated) continue;
                std::cout << qsplit::to_json(report.cases[j], methods[mi], rec)
                                 .dump()
                          << "\n";
            }
    }

    for (const qsplit::bench::BenchRow& row : report.rows)
        if (row.agreement_failures != 0) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"split/division classification of quaternion algebras "
                 "H_K(p, q) over multiquadratic and dihedral number fields"};
    app.require_subcommand(1);

    std::int64_t p = 0, q = 0;
    std::string field_text = "rational";
    bool as_json = false;
    CLI::App* classify =
        app.add_subcommand("classify", "classify one algebra H_K(p, q)");
    classify->add_option("--p", p, "first defining prime (positive)")
        ->required();
    classify->add_option("--q", q, "second defining prime (positive)")
        ->required();
    classify->add_option(
        "--field", field_text,
        "field K: rational | quad:<d> | multi:<d1,d2,...> | kummer:<alpha> "
        "| hcf:<d>");
    classify->add_flag("--json", as_json, "emit a JSON document");

    std::int64_t max_prime = 100, max_d = 20;
    int rank = 1;
    CLI::App* verify = app.add_subcommand(
        "verify", "sweep the residue rules against the place oracle");
    verify->add_option("--max-prime", max_prime, "prime bound (default 100)");
    verify->add_option("--max-d", max_d,
                       "generator bound |d| (default 20)");
    verify->add_option("--rank", rank, "field rank: 1, 2 or 3")
        ->check(CLI::Range(1, 3));

    std::size_t count = 0;
    std::string mode_text = "quad", methods_text = "fast,oracle",
                out_format = "table";
    bool single_thread = false;
    unsigned threads = 0;
    std::int64_t budget_sec = 600;
    CLI::App* bench = app.add_subcommand(
        "bench", "run the deterministic benchmark case set");
    bench->add_option("--count", count, "number of cases")->required();
    bench->add_option("--mode", mode_text, "case mode: quad | biquad");
    bench->add_option("--methods", methods_text,
                      "comma-separated: fast, oracle, brute");
    bench->add_option("--out", out_format, "output: table | csv | jsonl");
    bench->add_flag("--single-thread", single_thread,
                    "evaluate on one thread");
    bench->add_option("--threads", threads,
                      "worker threads (0 = auto, capped at 8)");
    bench->add_option("--budget-sec", budget_sec,
                      "per-method time budget in seconds (default 600)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed())
            return run_classify(p, q, field_text, as_json);
        if (verify->parsed()) return run_verify(max_prime, max_d, rank);
        return run_bench(count, mode_text, methods_text, out_format,
                         single_thread, threads, budget_sec);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
