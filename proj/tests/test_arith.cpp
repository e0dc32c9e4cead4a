#include <apery/arith.hpp>

#include <catch_amalgamated.hpp>

#include <random>

using namespace apery;

namespace {

// Pascal triangle rows 0..n.
std::vector<std::vector<Integer>> pascal(int n) {
    std::vector<std::vector<Integer>> t{{1}};
    for (int i = 1; i <= n; ++i) {
        std::vector<Integer> row(i + 1, 1);
        for (int j = 1; j < i; ++j) row[j] = t[i - 1][j - 1] + t[i - 1][j];
        t.push_back(row);
    }
    return t;
}

bool trial_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

int euler_criterion(long a, long p) {
    long r = ((a % p) + p) % p;
    if (r == 0) return 0;
    long acc = 1;
    for (long i = 0; i < (p - 1) / 2; ++i) acc = acc * r % p;
    return acc == 1 ? 1 : -1;
}

}  // namespace

TEST_CASE("jacobi symbol anchors") {
    CHECK(jacobi(1L, 7L) == 1);
    CHECK(jacobi(3L, 7L) == -1);
    CHECK(jacobi(14L, 7L) == 0);
    CHECK_THROWS_AS(jacobi(3L, 8L), invalid_argument);
}

TEST_CASE("jacobi agrees with Euler's criterion for odd primes below 200") {
    for (long p = 3; p < 200; p += 2) {
        if (!trial_prime(p)) continue;
        for (long a = -30; a <= 30; ++a) CHECK(jacobi(a, p) == euler_criterion(a, p));
    }
}

TEST_CASE("mod_inv") {
    CHECK(mod_inv(1, 9) == 1);
    const Integer v = mod_inv(3, 25);
    CHECK(v == 17);
    CHECK((3 * v) % 25 == 1);
    CHECK_THROWS_AS(mod_inv(5, 25), not_invertible);
}

TEST_CASE("reduce") {
    const ModCtx c52(5, 2);
    CHECK(c52.reduce(0).is_zero());
    const auto a = c52.reduce(50);
    CHECK(a.val == 2);
    CHECK(a.unit == 2);
    const auto b = c52.reduce(Rational(1, 3));
    CHECK(b.val == 0);
    CHECK(b.unit == mod_inv(3, 25));
    const auto c = c52.reduce(Rational(2, 125));
    CHECK(c.val == -3);
    CHECK(c.unit == 2);
}

TEST_CASE("ModCtx rejects bad parameters") {
    CHECK_THROWS_AS(ModCtx(9, 2), invalid_argument);
    CHECK_THROWS_AS(ModCtx(2, 2), invalid_argument);
    CHECK_THROWS_AS(ModCtx(5, 0), invalid_argument);
}

TEST_CASE("reduce is a ring homomorphism on p-adic values") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> num(-5000, 5000), den(1, 3000);
    for (unsigned long p : {3UL, 5UL, 7UL, 13UL}) {
        const ModCtx ctx(p, 4);
        for (int i = 0; i < 300; ++i) {
            const Rational a = make_rational(num(rng), den(rng));
            const Rational b = make_rational(num(rng), den(rng));
            CHECK(ctx.mul(ctx.reduce(a), ctx.reduce(b)) == ctx.reduce(a * b));
            if (a != 0) CHECK(ctx.mul(ctx.reduce(a), ctx.inv(ctx.reduce(a))) == ctx.reduce(1));
            if (valuation(a, p) >= 0 && valuation(b, p) >= 0) {
                const Integer s = ctx.to_residue(ctx.add(ctx.reduce(a), ctx.reduce(b)));
                CHECK(s == ctx.to_residue(ctx.reduce(a + b)));
            }
        }
    }
}

TEST_CASE("binom_exact matches the Pascal triangle") {
    const auto t = pascal(60);
    for (int n = 0; n <= 60; ++n) {
        for (int m = 0; m <= n; ++m) CHECK(binom_exact(n, m) == t[n][m]);
    }
    CHECK(binom_exact(0, 0) == 1);
    CHECK(binom_exact(6, 3) == 20);
    CHECK(binom_exact(5, 7) == 0);
}

TEST_CASE("binom_mod agrees with reduced exact binomials") {
    const auto t = pascal(80);
    for (unsigned long p : {3UL, 5UL, 7UL, 11UL}) {
        for (unsigned k : {1U, 3U}) {
            const ModCtx ctx(p, k);
            for (unsigned n = 0; n <= 80; ++n) {
                for (unsigned m = 0; m <= n; m += 3) CHECK(binom_mod(n, m, ctx) == ctx.reduce(Rational(t[n][m])));
            }
        }
    }
    const ModCtx c52(5, 2);
    const auto b = binom_mod(6, 3, c52);
    CHECK(b.val == 1);
    CHECK(b.unit == 4);
    // C(10,5) = 252 has no factor 5 (no carries adding 5 + 5 in base 5)
    const ModCtx c51(5, 1);
    const auto c = binom_mod(10, 5, c51);
    CHECK(c.val == 0);
    CHECK(c.unit == 2);
    CHECK(binom_mod(9, 0, c51) == PValued{0, 1});
}

TEST_CASE("lucas_binom") {
    CHECK(lucas_binom(7, 2, 5) == 1);
    CHECK(lucas_binom(123, 0, 7) == 1);
    CHECK(lucas_binom(5, 1, 5) == 0);
    const auto t = pascal(100);
    for (std::uint64_t p : {2, 3, 5, 7, 13}) {
        for (int n = 0; n <= 100; ++n) {
            for (int m = 0; m <= n; ++m) CHECK(lucas_binom(n, m, p) == mpz_fdiv_ui(t[n][m].get_mpz_t(), p));
        }
    }
}

TEST_CASE("primes_in") {
    CHECK(primes_in(PrimeRange(2, 2)) == std::vector<std::uint64_t>{2});
    CHECK(primes_in(PrimeRange(3, 20, {11})) == std::vector<std::uint64_t>{3, 5, 7, 13, 17, 19});
    CHECK(primes_in(PrimeRange(14, 16)).empty());
    CHECK_THROWS_AS(PrimeRange(10, 5), invalid_argument);
    CHECK_THROWS_AS(PrimeRange(3, 20, {23}), invalid_argument);
}

TEST_CASE("sieve and Miller-Rabin agree with trial division") {
    std::vector<std::uint64_t> want;
    for (std::uint64_t n = 1; n <= 20000; ++n) {
        if (trial_prime(n)) want.push_back(n);
        CHECK(is_prime(n) == trial_prime(n));
    }
    CHECK(primes_in(PrimeRange(1, 20000)) == want);
    // segment boundary
    const auto big = primes_in(PrimeRange(262100, 262200));
    for (auto q : big) CHECK(trial_prime(q));
    CHECK(is_prime(2305843009213693951ULL));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("valuation") {
    CHECK(valuation(Integer(250), 5) == 3);
    CHECK(valuation(Rational(7, 75), 5) == -2);
    CHECK(valuation(Rational(7, 75), 3) == -1);
}

TEST_CASE("Residue arithmetic") {
    const ModCtx ctx(7, 2);
    const Residue a = ctx.residue(Integer(10)), b = ctx.residue(Rational(1, 3));
    CHECK((a * b * ctx.residue(Integer(3))).value() == 10);
    CHECK((a - a).value() == 0);
    CHECK(b.inverse().value() == 3);
    CHECK(a.pow(3).value() == 1000 % 49);
    CHECK_THROWS_AS(a.div(Integer(14)), non_unit_division);
    CHECK_THROWS_AS(ctx.residue(Rational(1, 7)), not_invertible);
}

TEST_CASE("canonical text") {
    const ModCtx ctx(13, 1);
    CHECK(canonical(ctx.reduce(-2421), ctx) == "0:10 (mod 13^1)");
    CHECK(canonical(PValued::zero(), ctx) == "inf:0 (mod 13^1)");
    const ModCtx c3(5, 3);
    CHECK(canonical(c3.reduce(50), c3) == "2:2 (mod 5^3)");
    CHECK(canonical(c3.reduce(125), c3) == "inf:0 (mod 5^3)");
}
