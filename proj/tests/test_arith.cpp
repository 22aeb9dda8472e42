#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <numeric>
#include <vector>

#include "qsplit/arith.hpp"

using qsplit::PrimeArg;
using qsplit::SquarefreeD;

namespace {

// Independent Legendre oracle #1: Euler's criterion with a local modexp.
std::int64_t modexp_local(std::int64_t base, std::int64_t exp,
                          std::int64_t mod) {
    unsigned __int128 acc = 1;
    unsigned __int128 b = static_cast<std::uint64_t>(base % mod);
    while (exp > 0) {
        if (exp & 1) acc = acc * b % static_cast<std::uint64_t>(mod);
        b = b * b % static_cast<std::uint64_t>(mod);
        exp >>= 1;
    }
    return static_cast<std::int64_t>(acc);
}

int legendre_euler(std::int64_t a, std::int64_t p) {
    const std::int64_t r = qsplit::mod_floor(a, p);
    if (r == 0) return 0;
    const std::int64_t e = modexp_local(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

// Independent Legendre oracle #2: membership in the set of squares mod p.
int legendre_squares(std::int64_t a, std::int64_t p) {
    const std::int64_t r = qsplit::mod_floor(a, p);
    if (r == 0) return 0;
    for (std::int64_t x = 1; x <= p / 2; ++x)
        if (x * x % p == r) return 1;
    return -1;
}

std::vector<std::int64_t> odd_primes_upto(std::int64_t n) {
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 3; p <= n; p += 2)
        if (qsplit::is_prime(p)) ps.push_back(p);
    return ps;
}

} // namespace

TEST_CASE("primality matches a sieve", "[arith]") {
    constexpr int N = 20000;
    std::vector<bool> composite(N + 1, false);
    for (int i = 2; i * i <= N; ++i)
        if (!composite[i])
            for (int j = i * i; j <= N; j += i) composite[j] = true;
    int mismatches = 0;
    for (int n = -10; n <= N; ++n) {
        const bool expect = n >= 2 && !composite[n];
        if (qsplit::is_prime(n) != expect) ++mismatches;
    }
    REQUIRE(mismatches == 0);
}

TEST_CASE("primality at 64-bit scale", "[arith]") {
    // 2^61 - 1 is a Mersenne prime; 2^61 + 1 is divisible by 3.
    REQUIRE(qsplit::is_prime(2305843009213693951LL));
    REQUIRE_FALSE(qsplit::is_prime(2305843009213693953LL));
    REQUIRE_FALSE(qsplit::is_prime(3LL * 768614336404564651LL));
}

TEST_CASE("PrimeArg validates", "[arith]") {
    REQUIRE(PrimeArg(2).value() == 2);
    REQUIRE(PrimeArg(97).value() == 97);
    REQUIRE_THROWS_AS(PrimeArg(1), std::invalid_argument);
    REQUIRE_THROWS_AS(PrimeArg(4), std::invalid_argument);
    REQUIRE_THROWS_AS(PrimeArg(-3), std::invalid_argument);
    REQUIRE_THROWS_AS(PrimeArg(0), std::invalid_argument);
}

TEST_CASE("mod_floor returns canonical representatives", "[arith]") {
    REQUIRE(qsplit::mod_floor(7, 4) == 3);
    REQUIRE(qsplit::mod_floor(-1, 4) == 3);
    REQUIRE(qsplit::mod_floor(-8, 8) == 0);
    REQUIRE(qsplit::mod_floor(-3, 8) == 5);
    for (std::int64_t n = -50; n <= 50; ++n)
        for (std::int64_t m : {2, 3, 4, 7, 8}) {
            const std::int64_t r = qsplit::mod_floor(n, m);
            REQUIRE(r >= 0);
            REQUIRE(r < m);
            REQUIRE((n - r) % m == 0);
        }
}

TEST_CASE("legendre frozen examples", "[arith]") {
    REQUIRE(qsplit::legendre(2, PrimeArg(7)) == 1);
    REQUIRE(qsplit::legendre(2, PrimeArg(5)) == -1);
    REQUIRE(qsplit::legendre(-1, PrimeArg(13)) == 1);
    REQUIRE(qsplit::legendre(-1, PrimeArg(7)) == -1);
    REQUIRE(qsplit::legendre(12, PrimeArg(13)) == 1);
    REQUIRE(qsplit::legendre(45, PrimeArg(3)) == 0);
    REQUIRE(qsplit::legendre(3, PrimeArg(7)) == -1);
    REQUIRE(qsplit::legendre(5, PrimeArg(11)) == 1);
    REQUIRE(qsplit::legendre(-163, PrimeArg(41)) == 1);
}

TEST_CASE("legendre rejects p = 2", "[arith]") {
    REQUIRE_THROWS_AS(qsplit::legendre(3, PrimeArg(2)), std::invalid_argument);
}

TEST_CASE("legendre agrees with Euler's criterion", "[arith]") {
    int mismatches = 0;
    for (std::int64_t p : odd_primes_upto(199))
        for (std::int64_t a = -p - 3; a <= p + 3; ++a)
            if (qsplit::legendre(a, PrimeArg(p)) != legendre_euler(a, p))
                ++mismatches;
    REQUIRE(mismatches == 0);
}

TEST_CASE("legendre agrees with the square-set oracle", "[arith]") {
    int mismatches = 0;
    for (std::int64_t p : odd_primes_upto(61))
        for (std::int64_t a = -80; a <= 80; ++a)
            if (qsplit::legendre(a, PrimeArg(p)) != legendre_squares(a, p))
                ++mismatches;
    REQUIRE(mismatches == 0);
}

TEST_CASE("legendre is completely multiplicative", "[arith]") {
    int mismatches = 0;
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23})
        for (std::int64_t a = -25; a <= 25; ++a)
            for (std::int64_t b = -25; b <= 25; ++b) {
                if (a == 0 || b == 0) continue;
                if (qsplit::legendre(a * b, PrimeArg(p)) !=
                    qsplit::legendre(a, PrimeArg(p)) *
                        qsplit::legendre(b, PrimeArg(p)))
                    ++mismatches;
            }
    REQUIRE(mismatches == 0);
}

TEST_CASE("quadratic reciprocity and supplements", "[arith]") {
    const auto ps = odd_primes_upto(150);
    int mismatches = 0;
    for (std::int64_t p : ps)
        for (std::int64_t q : ps) {
            if (p == q) continue;
            const int lhs = qsplit::legendre(p, PrimeArg(q)) *
                            qsplit::legendre(q, PrimeArg(p));
            const int rhs =
                (p % 4 == 3 && q % 4 == 3) ? -1 : 1;
            if (lhs != rhs) ++mismatches;
        }
    for (std::int64_t p : odd_primes_upto(500)) {
        const int m1 = qsplit::legendre(-1, PrimeArg(p));
        if ((m1 == 1) != (p % 4 == 1)) ++mismatches;
        const int two = qsplit::legendre(2, PrimeArg(p));
        if ((two == 1) != (p % 8 == 1 || p % 8 == 7)) ++mismatches;
    }
    REQUIRE(mismatches == 0);
}

TEST_CASE("squarefree_part factors n = s * f^2", "[arith]") {
    for (std::int64_t n = -2000; n <= 2000; ++n) {
        if (n == 0) continue;
        const auto [s, f] = qsplit::squarefree_part(n);
        REQUIRE(f >= 1);
        REQUIRE(s * f * f == n);
        for (std::int64_t k = 2; k * k <= std::abs(s); ++k)
            REQUIRE(s % (k * k) != 0);
    }
    REQUIRE_THROWS_AS(qsplit::squarefree_part(0), std::invalid_argument);
}

TEST_CASE("squarefree_part frozen examples", "[arith]") {
    REQUIRE(qsplit::squarefree_part(12).squarefree == 3);
    REQUIRE(qsplit::squarefree_part(12).cofactor == 2);
    REQUIRE(qsplit::squarefree_part(-18).squarefree == -2);
    REQUIRE(qsplit::squarefree_part(-18).cofactor == 3);
    REQUIRE(qsplit::squarefree_part(1).squarefree == 1);
    REQUIRE(qsplit::squarefree_part(49).squarefree == 1);
    REQUIRE(qsplit::squarefree_part(49).cofactor == 7);
}

TEST_CASE("SquarefreeD validates", "[arith]") {
    REQUIRE(SquarefreeD(-1).value() == -1);
    REQUIRE(SquarefreeD(105).value() == 105);
    REQUIRE_THROWS_AS(SquarefreeD(0), std::invalid_argument);
    REQUIRE_THROWS_AS(SquarefreeD(1), std::invalid_argument);
    REQUIRE_THROWS_AS(SquarefreeD(12), std::invalid_argument);
    REQUIRE_THROWS_AS(SquarefreeD(-4), std::invalid_argument);
}

TEST_CASE("third_subfield examples and laws", "[arith]") {
    REQUIRE(qsplit::third_subfield(SquarefreeD(2), SquarefreeD(3)).value() ==
            6);
    REQUIRE(qsplit::third_subfield(SquarefreeD(6), SquarefreeD(10)).value() ==
            15);
    REQUIRE(qsplit::third_subfield(SquarefreeD(-1), SquarefreeD(2)).value() ==
            -2);
    REQUIRE(qsplit::third_subfield(SquarefreeD(-2), SquarefreeD(-3)).value() ==
            6);
    REQUIRE_THROWS_AS(qsplit::third_subfield(SquarefreeD(2), SquarefreeD(2)),
                      qsplit::degenerate_field_error);

    // commutativity + correctness on a sweep: result is the squarefree
    // part of the product
    std::vector<std::int64_t> ds;
    for (std::int64_t d = -30; d <= 30; ++d)
        if (d != 0 && d != 1 && qsplit::squarefree_part(d).cofactor == 1)
            ds.push_back(d);
    for (std::int64_t a : ds)
        for (std::int64_t b : ds) {
            if (a == b) continue;
            const auto lhs =
                qsplit::third_subfield(SquarefreeD(a), SquarefreeD(b));
            const auto rhs =
                qsplit::third_subfield(SquarefreeD(b), SquarefreeD(a));
            REQUIRE(lhs.value() == rhs.value());
            REQUIRE(lhs.value() ==
                    qsplit::squarefree_part(a * b).squarefree);
        }
}

TEST_CASE("residue closure under composite generators", "[arith]") {
    // If a and b are both squares mod p then so is the squarefree part
    // of a*b, and conversely any two of the three determine the third.
    int failures = 0;
    for (std::int64_t p : odd_primes_upto(50))
        for (std::int64_t a = -40; a <= 40; ++a)
            for (std::int64_t b = -40; b <= 40; ++b) {
                if (a == 0 || b == 0 || a % p == 0 || b % p == 0) continue;
                const std::int64_t c = qsplit::squarefree_part(a * b).squarefree;
                const int la = qsplit::legendre(a, PrimeArg(p));
                const int lb = qsplit::legendre(b, PrimeArg(p));
                const int lc = c == 1 ? 1
                                      : qsplit::legendre(c, PrimeArg(p));
                if (la == 1 && lb == 1 && lc != 1) ++failures;
                if (la == 1 && lc == 1 && lb != 1) ++failures;
            }
    REQUIRE(failures == 0);
}
