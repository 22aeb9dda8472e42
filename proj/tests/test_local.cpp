#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "qsplit/local.hpp"

using qsplit::Place;
using qsplit::PrimeArg;

namespace {

std::vector<Place> small_places() {
    return {Place::real(), Place::finite(PrimeArg(2)),
            Place::finite(PrimeArg(3)), Place::finite(PrimeArg(5)),
            Place::finite(PrimeArg(7)), Place::finite(PrimeArg(11))};
}

std::vector<std::int64_t> relevant_primes(std::int64_t a, std::int64_t b) {
    std::vector<std::int64_t> ps;
    std::int64_t n = 2 * (a < 0 ? -a : a) * (b < 0 ? -b : b);
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

} // namespace

TEST_CASE("Place construction and accessors", "[local]") {
    const Place r = Place::real();
    REQUIRE(r.is_real());
    REQUIRE(r.code() == 0);
    REQUIRE(r.to_string() == "oo");
    REQUIRE_THROWS_AS(r.prime(), std::logic_error);

    const Place f = Place::finite(PrimeArg(7));
    REQUIRE_FALSE(f.is_real());
    REQUIRE(f.code() == 7);
    REQUIRE(f.prime() == 7);
    REQUIRE(f.to_string() == "7");
}

TEST_CASE("hilbert symbol frozen examples", "[local]") {
    REQUIRE(qsplit::hilbert_symbol(2, 5, Place::finite(PrimeArg(5))) == -1);
    REQUIRE(qsplit::hilbert_symbol(2, 5, Place::finite(PrimeArg(2))) == -1);
    REQUIRE(qsplit::hilbert_symbol(2, 5, Place::finite(PrimeArg(3))) == 1);
    REQUIRE(qsplit::hilbert_symbol(7, 47, Place::real()) == 1);
    REQUIRE(qsplit::hilbert_symbol(-1, -1, Place::finite(PrimeArg(2))) == -1);
    REQUIRE(qsplit::hilbert_symbol(-1, -1, Place::real()) == -1);
    REQUIRE(qsplit::hilbert_symbol(-1, 5, Place::finite(PrimeArg(5))) == 1);
    REQUIRE(qsplit::hilbert_symbol(3, 11, Place::finite(PrimeArg(3))) == -1);
    REQUIRE(qsplit::hilbert_symbol(7, 47, Place::finite(PrimeArg(2))) == -1);
    REQUIRE(qsplit::hilbert_symbol(7, 47, Place::finite(PrimeArg(7))) == -1);
    REQUIRE(qsplit::hilbert_symbol(7, 47, Place::finite(PrimeArg(47))) == 1);
}

TEST_CASE("hilbert symbol rejects zero arguments", "[local]") {
    REQUIRE_THROWS_AS(qsplit::hilbert_symbol(0, 5, Place::real()),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(qsplit::hilbert_symbol(5, 0, Place::finite(PrimeArg(3))),
                      std::invalid_argument);
}

TEST_CASE("hilbert symbol is symmetric", "[local]") {
    int mismatches = 0;
    for (const Place& v : small_places())
        for (std::int64_t a = -40; a <= 40; ++a)
            for (std::int64_t b = -40; b <= 40; ++b) {
                if (a == 0 || b == 0) continue;
                if (qsplit::hilbert_symbol(a, b, v) !=
                    qsplit::hilbert_symbol(b, a, v))
                    ++mismatches;
            }
    REQUIRE(mismatches == 0);
}

TEST_CASE("hilbert symbol is bimultiplicative", "[local]") {
    int mismatches = 0;
    for (const Place& v : small_places())
        for (std::int64_t a = -12; a <= 12; ++a)
            for (std::int64_t a2 = -12; a2 <= 12; ++a2)
                for (std::int64_t b = -12; b <= 12; ++b) {
                    if (a == 0 || a2 == 0 || b == 0) continue;
                    if (qsplit::hilbert_symbol(a * a2, b, v) !=
                        qsplit::hilbert_symbol(a, b, v) *
                            qsplit::hilbert_symbol(a2, b, v))
                        ++mismatches;
                }
    REQUIRE(mismatches == 0);
}

TEST_CASE("hilbert symbol norm identities", "[local]") {
    int mismatches = 0;
    for (const Place& v : small_places())
        for (std::int64_t a = -40; a <= 40; ++a) {
            if (a == 0) continue;
            // (a, -a)_v = 1 always; (a, 1-a)_v = 1 when a != 1
            if (qsplit::hilbert_symbol(a, -a, v) != 1) ++mismatches;
            if (a != 1 &&
                qsplit::hilbert_symbol(a, 1 - a, v) != 1)
                ++mismatches;
            // squares are invisible
            if (qsplit::hilbert_symbol(a, 9, v) != 1) ++mismatches;
            if (qsplit::hilbert_symbol(4 * a, a, v) !=
                qsplit::hilbert_symbol(a, a, v))
                ++mismatches;
        }
    REQUIRE(mismatches == 0);
}

TEST_CASE("hilbert product formula on a grid", "[local]") {
    int failures = 0;
    for (std::int64_t a = -30; a <= 30; ++a)
        for (std::int64_t b = -30; b <= 30; ++b) {
            if (a == 0 || b == 0) continue;
            int prod = qsplit::hilbert_symbol(a, b, Place::real());
            for (std::int64_t p : relevant_primes(a, b))
                prod *= qsplit::hilbert_symbol(a, b,
                                               Place::finite(PrimeArg(p)));
            if (prod != 1) ++failures;
        }
    REQUIRE(failures == 0);
}

TEST_CASE("hensel precision", "[local]") {
    REQUIRE(qsplit::hensel_precision(1, 1, PrimeArg(3)) == 1);
    REQUIRE(qsplit::hensel_precision(3, 1, PrimeArg(3)) == 2);
    REQUIRE(qsplit::hensel_precision(9, 3, PrimeArg(3)) == 4);
    REQUIRE(qsplit::hensel_precision(1, 1, PrimeArg(2)) == 5);
    REQUIRE(qsplit::hensel_precision(2, 1, PrimeArg(2)) == 6);
    REQUIRE(qsplit::hensel_precision(4, -8, PrimeArg(2)) == 10);
}

TEST_CASE("conic solvability frozen examples", "[local]") {
    REQUIRE(qsplit::conic_solvable_mod(1, 1, PrimeArg(3), 2));
    REQUIRE_FALSE(qsplit::conic_solvable_mod(2, 5, PrimeArg(5), 3));
    REQUIRE_FALSE(qsplit::conic_solvable_mod(7, 47, PrimeArg(7), 3));
    REQUIRE(qsplit::conic_solvable_mod(7, 47, PrimeArg(47), 2));
    REQUIRE_FALSE(qsplit::conic_solvable_mod(-1, -1, PrimeArg(2), 5));
}

TEST_CASE("conic solvability validates arguments", "[local]") {
    REQUIRE_THROWS_AS(qsplit::conic_solvable_mod(1, 1, PrimeArg(3), 0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(qsplit::conic_solvable_mod(0, 1, PrimeArg(3), 1),
                      std::invalid_argument);
    // 2147483647^3 overflows 64-bit arithmetic
    REQUIRE_THROWS_AS(
        qsplit::conic_solvable_mod(1, 1, PrimeArg(2147483647), 3),
        std::invalid_argument);
}

TEST_CASE("conic solvability matches the hilbert symbol", "[local]") {
    int mismatches = 0;
    for (std::int64_t a = -10; a <= 10; ++a)
        for (std::int64_t b = -10; b <= 10; ++b) {
            if (a == 0 || b == 0) continue;
            for (std::int64_t p : relevant_primes(a, b)) {
                const PrimeArg pa(p);
                const int k = qsplit::hensel_precision(a, b, pa);
                const bool solvable = qsplit::conic_solvable_mod(a, b, pa, k);
                const bool split =
                    qsplit::hilbert_symbol(a, b, Place::finite(pa)) == 1;
                if (solvable != split) ++mismatches;
            }
        }
    REQUIRE(mismatches == 0);
}
