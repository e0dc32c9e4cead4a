#include <apery/series.hpp>
#include <apery/special.hpp>

#include <catch_amalgamated.hpp>

#include <functional>
#include <map>

using namespace apery;

namespace {

// Akiyama-Tanigawa: B_n with B_1 = +1/2; flip that one sign.
std::vector<Rational> bernoulli_oracle(int n) {
    std::vector<Rational> out, a(n + 1);
    for (int m = 0; m <= n; ++m) {
        a[m] = Rational(1, m + 1);
        for (int j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
        out.push_back(a[0]);
    }
    if (n >= 1) out[1] = -out[1];
    return out;
}

Rational factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

// Coefficients n! [t^n] of 1/(c (e^t + e^-t)/2 - d) via series inversion.
std::vector<Rational> even_egf_inverse(int n, const Rational& scale, const Rational& shift) {
    TruncatedSeries cosh2(n);  // e^t + e^-t
    for (int j = 0; 2 * j <= n; ++j) cosh2[2 * j] = 2 / factorial(2 * j);
    TruncatedSeries den = cosh2 * scale + TruncatedSeries::constant(n, -shift);
    const auto inv = den.inverse();
    std::vector<Rational> out;
    for (int i = 0; i <= n; ++i) out.push_back(inv[i] * factorial(i));
    return out;
}

std::uint64_t to_fp(const Rational& q, std::uint64_t p) {
    const auto n = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    const auto d = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    return n * detail::powmod64(d, p - 2, p) % p;
}

bool small_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("Bernoulli numbers mod p match Akiyama-Tanigawa") {
    const auto B = bernoulli_oracle(60);
    CHECK(B[1] == Rational(-1, 2));
    CHECK(B[2] == Rational(1, 6));
    CHECK(bernoulli_table_mod(7, 4)[2] == 6);
    CHECK(bernoulli_table_mod(7, 4)[4] == 3);
    CHECK(bernoulli_table_mod(5, 2)[2] == 1);
    for (std::uint64_t p = 5; p < 64; ++p) {
        if (!small_prime(p)) continue;
        const auto t = bernoulli_table_mod(p, p - 2);
        for (std::uint64_t i = 0; i + 2 <= p; ++i) CHECK(t[i] == to_fp(B[i], p));
        CHECK(bernoulli_mod(p) == to_fp(B[p - 3], p));
    }
    CHECK_THROWS_AS(bernoulli_mod(3), invalid_argument);
    CHECK_THROWS_AS(bernoulli_table_mod(7, 6), invalid_argument);
}

TEST_CASE("Euler and U numbers mod p match generating functions") {
    const auto Eh = even_egf_inverse(40, Rational(1, 2), 0);  // 2/(e^t + e^-t)
    const auto U = even_egf_inverse(40, 1, 1);               // 1/(e^t + e^-t - 1)
    CHECK(Eh[2] == -1);
    CHECK(Eh[4] == 5);
    CHECK(U[2] == -2);
    CHECK(Eh[1] == 0);
    for (std::uint64_t p = 5; p < 42; ++p) {
        if (!small_prime(p)) continue;
        const auto te = euler_table_mod(p, p - 3, EulerKind::E);
        const auto tu = euler_table_mod(p, p - 3, EulerKind::U);
        for (std::uint64_t i = 0; i + 3 <= p; ++i) {
            CHECK(te[i] == to_fp(Eh[i], p));
            CHECK(tu[i] == to_fp(U[i], p));
        }
        CHECK(euler_mod(p, EulerKind::E) == to_fp(Eh[p - 3], p));
        CHECK(euler_mod(p, EulerKind::U) == to_fp(U[p - 3], p));
    }
}

TEST_CASE("Legendre polynomials") {
    const Rational x(3, 7);
    CHECK(legendre_poly(0, x) == 1);
    CHECK(legendre_poly(1, x) == x);
    CHECK(legendre_poly(2, x) == (3 * x * x - 1) / 2);
    CHECK(legendre_poly(5, Rational(1)) == 1);
    // P_n(x) = 2^-n sum C(n,k)^2 (x-1)^(n-k) (x+1)^k
    for (long n = 0; n <= 20; ++n) {
        for (const Rational& y : {Rational(2), Rational(-1, 3), Rational(5, 4)}) {
            Rational s = 0;
            for (long k = 0; k <= n; ++k) {
                const Integer c = binom_exact(n, k);
                s += Rational(c * c) * qpow(y - 1, n - k) * qpow(y + 1, k);
            }
            CHECK(legendre_poly(n, y) == s / qpow(Rational(2), n));
        }
    }
    const ModCtx ctx(101, 2);
    const Residue r = ctx.residue(Rational(5, 4));
    CHECK(legendre_poly(30, r).value() == ctx.residue(legendre_poly(30, Rational(5, 4))).value());
}

TEST_CASE("cubic character sums by enumeration") {
    CHECK(cubic_char_sum(0, 0, 5) == 0);
    for (std::uint64_t p : {5ULL, 7ULL, 13ULL, 101ULL}) {
        for (const auto& [A, B] : std::vector<std::pair<long, long>>{{1, 0}, {-840, 9074}, {-336, 2522}, {3, -7}}) {
            long s = 0;
            for (long n = 0; n < static_cast<long>(p); ++n) {
                const Integer v = Integer(n) * n * n + Integer(A) * n + B;
                s += jacobi(v, Integer(static_cast<unsigned long>(p)));
            }
            CHECK(cubic_char_sum(A, B, p) == s);
        }
    }
}

TEST_CASE("quadratic form anchors") {
    auto r = quad_rep(13, quad_form("x2+y2"));
    REQUIRE(r);
    CHECK(r->x == 3);
    CHECK(r->y == 2);
    r = quad_rep(7, quad_form("4p:L2+27M2"));
    REQUIRE(r);
    CHECK(r->x == 1);
    CHECK(r->y == 1);
    r = quad_rep(13, quad_form("4p:L2+27M2"));
    REQUIRE(r);
    CHECK(r->x == -5);
    CHECK_FALSE(quad_rep(7, quad_form("x2+y2")));
    CHECK_THROWS_AS(quad_form("x2+5y2"), not_found);
}

TEST_CASE("quad_rep agrees with brute force and residue-class criteria up to 2000") {
    using Crit = std::function<bool(std::uint64_t)>;
    auto legendre_is_one = [](long d) { return [d](std::uint64_t p) { return jacobi(Integer(p), Integer(d)) == 1; }; };
    auto mod_in = [](std::uint64_t m, std::vector<std::uint64_t> cls) {
        return [m, cls](std::uint64_t p) {
            for (auto c : cls) {
                if (p % m == c) return true;
            }
            return false;
        };
    };
    const std::map<std::string, Crit> criteria = {
        {"x2+y2", mod_in(4, {1})},
        {"x2+2y2", mod_in(8, {1, 3})},
        {"x2+3y2", mod_in(3, {1})},
        {"x2+4y2", mod_in(4, {1})},
        {"x2+6y2", mod_in(24, {1, 7})},
        {"2x2+3y2", mod_in(24, {5, 11})},
        {"x2+7y2", mod_in(7, {1, 2, 4})},
        {"x2+9y2", mod_in(12, {1})},
        {"2p:x2+9y2", mod_in(12, {5})},
        {"x2+15y2", mod_in(30, {1, 19})},
        {"3x2+5y2", mod_in(30, {17, 23})},
        {"4p:x2+11y2", legendre_is_one(11)},
        {"4p:x2+19y2", legendre_is_one(19)},
        {"4p:L2+27M2", mod_in(3, {1})},
        {"4p:x2+43y2", legendre_is_one(43)},
        {"4p:x2+67y2", legendre_is_one(67)},
        {"4p:x2+163y2", legendre_is_one(163)},
    };
    REQUIRE(criteria.size() == quad_forms().size());
    for (const auto& f : quad_forms()) {
        const Crit& crit = criteria.at(f.id);
        for (std::uint64_t p = 5; p <= 2000; ++p) {
            if (!small_prime(p) || f.d % p == 0 || f.a % p == 0) continue;
            const auto r = quad_rep(p, f);
            INFO(f.id << " p=" << p);
            CHECK(static_cast<bool>(r) == crit(p));
            // brute-force existence with the same normalization
            bool brute = false;
            for (long y = 0; static_cast<std::uint64_t>(f.d * y * y) <= f.s * p && !brute; ++y) {
                for (long x = 0; static_cast<std::uint64_t>(f.a * x * x + f.d * y * y) <= f.s * p; ++x) {
                    if (static_cast<std::uint64_t>(f.a * x * x + f.d * y * y) != f.s * p) continue;
                    if (f.x_odd && x % 2 == 0) continue;
                    if (f.l_one_mod3 && x % 3 == 0) continue;
                    brute = true;
                    break;
                }
            }
            CHECK(brute == static_cast<bool>(r));
            if (r) {
                CHECK(static_cast<std::uint64_t>(f.a * r->x * r->x + f.d * r->y * r->y) == f.s * p);
                if (f.x_odd) CHECK(r->x % 2 != 0);
                if (f.l_one_mod3) CHECK(((r->x % 3) + 3) % 3 == 1);
            }
        }
    }
    // 2 * 2 = 2^2 + 9 * 0^2
    auto two = quad_rep(2, quad_form("2p:x2+9y2"));
    REQUIRE(two);
    CHECK(two->x == 2);
}

TEST_CASE("binomial-product sums against exact sums") {
    auto exact_term = [](BinomKind kind, long k) {
        const Integer c2 = binom_exact(2 * k, k);
        switch (kind) {
            case BinomKind::CCC: return Integer(c2 * c2 * c2);
            case BinomKind::CC3: return Integer(c2 * c2 * binom_exact(3 * k, k));
            case BinomKind::CC4: return Integer(c2 * c2 * binom_exact(4 * k, 2 * k));
            case BinomKind::C36: return Integer(c2 * binom_exact(3 * k, k) * binom_exact(6 * k, 3 * k));
        }
        return Integer(0);
    };
    for (unsigned long p : {5UL, 7UL, 13UL, 29UL}) {
        for (unsigned k : {1U, 3U}) {
            const ModCtx ctx(p, k);
            for (BinomKind kind : {BinomKind::CCC, BinomKind::CC3, BinomKind::CC4, BinomKind::C36}) {
                for (const Rational& m : {Rational(1), Rational(-64), Rational(1728), Rational(-3, 2)}) {
                    Rational s = 0;
                    for (long i = 0; i < static_cast<long>(p); ++i) s += Rational(exact_term(kind, i)) / qpow(m, i);
                    CHECK(binom_product_residue(kind, m, ctx) == ctx.residue(s).value());
                }
            }
            CHECK_THROWS_AS(binom_product_residue(BinomKind::CCC, Rational(p), ctx), invalid_argument);
        }
    }
    // p = 13 = 3^2 + 2^2: the C36 sum over 1728^k is 4x^2 = 36 = 10 (mod p)
    const ModCtx c13(13, 1);
    CHECK(binom_product_residue(BinomKind::C36, 1728, c13) == 10);
    CHECK(binom_product_residue(BinomKind::C36, 1728, ModCtx(7, 1)) == 0);
}
