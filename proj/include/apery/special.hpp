#pragma once

/**
 * @file special.hpp
 * @brief Bernoulli, Euler and U numbers mod p; Legendre polynomials over an
 *        exact ring; cubic character sums; binary quadratic form
 *        representations of primes; truncated binomial-product sums.
 */

#include <apery/arith.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace apery {

namespace detail {

/// Small-prime field arithmetic (p < 2^31).
struct Fp {
    std::uint64_t p;

    std::uint64_t norm(long long a) const {
        long long r = a % static_cast<long long>(p);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p) : r);
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a % p + p - b % p) % p; }
    std::uint64_t inv(std::uint64_t a) const {
        if (a % p == 0) throw not_invertible("Fp: zero has no inverse");
        return powmod64(a, p - 2, p);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const { return powmod64(a, e, p); }
    std::uint64_t of(const Integer& a) const { return mpz_fdiv_ui(a.get_mpz_t(), p); }
    std::uint64_t of(const Rational& q) const { return mul(of(q.get_num()), inv(of(q.get_den()))); }
};

inline void require_large_prime(std::uint64_t p, const char* who) {
    if (p <= 3 || !is_prime(p)) throw invalid_argument(std::string(who) + ": p must be a prime > 3");
}

}  // namespace detail

// --------------------------------------------------------------------------
// Bernoulli, Euler, U

/// B_0..B_n mod p from sum_{k<m} C(m,k) B_k = 0; needs n <= p - 2.
inline std::vector<std::uint64_t> bernoulli_table_mod(std::uint64_t p, std::uint64_t n) {
    if (!is_prime(p) || p < 3) throw invalid_argument("bernoulli_table_mod: p must be an odd prime");
    if (n + 2 > p) throw invalid_argument("bernoulli_table_mod: index too large for p");
    const detail::Fp F{p};
    std::vector<std::uint64_t> B{1};
    std::vector<std::uint64_t> row{1, 1};  // Pascal row m = 1
    for (std::uint64_t m = 2; m <= n + 1; ++m) {
        std::vector<std::uint64_t> next(m + 1, 1);
        for (std::uint64_t k = 1; k < m; ++k) next[k] = F.add(row[k - 1], row[k]);
        row = std::move(next);
        std::uint64_t acc = 0;
        for (std::uint64_t k = 0; k + 1 < m; ++k) acc = F.add(acc, F.mul(row[k], B[k]));
        // C(m, m-1) B_{m-1} = m B_{m-1} = -acc
        B.push_back(F.mul(F.sub(0, acc), F.inv(m)));
    }
    return B;
}

/// B_{p-3} mod p.
inline std::uint64_t bernoulli_mod(std::uint64_t p) {
    detail::require_large_prime(p, "bernoulli_mod");
    return bernoulli_table_mod(p, p - 3)[p - 3];
}

enum class EulerKind { E, U };

/// E_0..E_n (or U_0..U_n) mod p; U carries the extra factor 2.
inline std::vector<std::uint64_t> euler_table_mod(std::uint64_t p, std::uint64_t n, EulerKind kind) {
    if (!is_prime(p)) throw invalid_argument("euler_table_mod: p must be prime");
    const detail::Fp F{p};
    const std::uint64_t factor = kind == EulerKind::U ? 2 % p : 1 % p;
    std::vector<std::uint64_t> E{1 % p};
    std::vector<std::uint64_t> row{1};
    for (std::uint64_t m = 1; m <= n; ++m) {
        std::vector<std::uint64_t> next(m + 1, 1 % p);
        for (std::uint64_t k = 1; k < m; ++k) next[k] = F.add(row[k - 1], row[k]);
        row = std::move(next);
        std::uint64_t acc = 0;
        for (std::uint64_t j = 1; 2 * j <= m; ++j) acc = F.add(acc, F.mul(row[2 * j], E[m - 2 * j]));
        E.push_back(F.sub(0, F.mul(factor, acc)));
    }
    return E;
}

/// E_{p-3} or U_{p-3} mod p.
inline std::uint64_t euler_mod(std::uint64_t p, EulerKind kind) {
    detail::require_large_prime(p, "euler_mod");
    return euler_table_mod(p, p - 3, kind)[p - 3];
}

// --------------------------------------------------------------------------
// Legendre polynomials

namespace detail {

inline Rational ring_one(const Rational&) { return 1; }
inline Residue ring_one(const Residue& x) { return x.ctx().residue(Integer(1)); }
inline Rational ring_div(const Rational& a, long d) { return a / d; }
inline Residue ring_div(const Residue& a, long d) { return a.div(Integer(d)); }
inline Rational ring_scale(const Rational& a, long c) { return a * c; }
inline Residue ring_scale(const Residue& a, long c) { return a * c; }

}  // namespace detail

/// P_n(x) from (n+1)P_{n+1} = (2n+1)x P_n - n P_{n-1}. Ring is Rational or Residue;
/// over Z/p^k the divisions require n < p.
template <class Ring>
Ring legendre_poly(long n, const Ring& x) {
    if (n < 0) throw invalid_argument("legendre_poly: n must be nonnegative");
    Ring prev = detail::ring_one(x);
    if (n == 0) return prev;
    Ring cur = x;
    for (long m = 1; m < n; ++m) {
        Ring next = detail::ring_div(detail::ring_scale(x * cur, 2 * m + 1) - detail::ring_scale(prev, m), m + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// --------------------------------------------------------------------------
// Character sums

/// Legendre symbol table (r/p) for r in [0, p).
inline std::vector<int> quadratic_character_table(std::uint64_t p) {
    std::vector<int> t(p, -1);
    t[0] = 0;
    for (std::uint64_t r = 1; r <= p / 2; ++r) t[r * r % p] = 1;
    return t;
}

/// sum_{n=0}^{p-1} ((n^3 + A n + B)/p).
inline long cubic_char_sum(const Integer& A, const Integer& B, std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw invalid_argument("cubic_char_sum: p must be an odd prime");
    const detail::Fp F{p};
    const auto chi = quadratic_character_table(p);
    const std::uint64_t a = F.of(A), b = F.of(B);
    long s = 0;
    for (std::uint64_t n = 0; n < p; ++n) s += chi[F.add(F.add(F.mul(F.mul(n, n), n), F.mul(a, n)), b)];
    return s;
}

// --------------------------------------------------------------------------
// Binary quadratic forms

/// s p = a x^2 + d y^2.
struct QuadForm {
    std::string id;
    unsigned s = 1;
    unsigned a = 1;
    unsigned d = 1;
    bool x_odd = false;      // p = x^2 + y^2 with x odd
    bool l_one_mod3 = false; // 4p = L^2 + 27 M^2 with L = 1 (mod 3)

    std::string equation() const {
        std::string lhs = s == 1 ? "p" : std::to_string(s) + "p";
        std::string ax = a == 1 ? "x^2" : std::to_string(a) + "x^2";
        return lhs + " = " + ax + " + " + std::to_string(d) + "y^2";
    }
};

struct QuadRep {
    long x = 0;
    long y = 0;
    bool normalized = false;
};

inline const std::vector<QuadForm>& quad_forms() {
    static const std::vector<QuadForm> forms = {
        {"x2+y2", 1, 1, 1, true, false},       {"x2+2y2", 1, 1, 2},     {"x2+3y2", 1, 1, 3},
        {"x2+4y2", 1, 1, 4},                   {"x2+6y2", 1, 1, 6},     {"2x2+3y2", 1, 2, 3},
        {"x2+7y2", 1, 1, 7},                   {"x2+9y2", 1, 1, 9},     {"2p:x2+9y2", 2, 1, 9},
        {"x2+15y2", 1, 1, 15},                 {"3x2+5y2", 1, 3, 5},    {"4p:x2+11y2", 4, 1, 11},
        {"4p:x2+19y2", 4, 1, 19},              {"4p:L2+27M2", 4, 1, 27, false, true},
        {"4p:x2+43y2", 4, 1, 43},              {"4p:x2+67y2", 4, 1, 67},
        {"4p:x2+163y2", 4, 1, 163},
    };
    return forms;
}

inline const QuadForm& quad_form(const std::string& id) {
    for (const auto& f : quad_forms()) {
        if (f.id == id) return f;
    }
    throw not_found("unknown quadratic form '" + id + "'");
}

/// Smallest y >= 0 admitting a solution; x >= 0 except that the L form picks
/// the sign with L = 1 (mod 3).
inline std::optional<QuadRep> quad_rep(std::uint64_t p, const QuadForm& f) {
    const std::uint64_t target = f.s * p;
    for (std::uint64_t y = 0; f.d * y * y <= target; ++y) {
        const std::uint64_t r = target - f.d * y * y;
        if (r % f.a) continue;
        const std::uint64_t q = r / f.a;
        auto x = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(q)));
        while (x * x > q) --x;
        while ((x + 1) * (x + 1) <= q) ++x;
        if (x * x != q) continue;
        QuadRep rep{static_cast<long>(x), static_cast<long>(y), true};
        if (f.x_odd && x % 2 == 0) continue;
        if (f.l_one_mod3) {
            if (x % 3 == 0) continue;
            if (x % 3 == 2) rep.x = -rep.x;
        }
        return rep;
    }
    return std::nullopt;
}

// --------------------------------------------------------------------------
// Truncated binomial-product sums

enum class BinomKind {
    CCC,  // C(2k,k)^3
    CC3,  // C(2k,k)^2 C(3k,k)
    CC4,  // C(2k,k)^2 C(4k,2k)
    C36,  // C(2k,k) C(3k,k) C(6k,3k)
};

/// The k-th product as a p-valued number in ctx.
inline PValued binom_product_term(BinomKind kind, unsigned long k, const ModCtx& ctx) {
    const PValued c2 = binom_mod(2 * k, k, ctx);
    switch (kind) {
        case BinomKind::CCC: return ctx.mul(ctx.mul(c2, c2), c2);
        case BinomKind::CC3: return ctx.mul(ctx.mul(c2, c2), binom_mod(3 * k, k, ctx));
        case BinomKind::CC4: return ctx.mul(ctx.mul(c2, c2), binom_mod(4 * k, 2 * k, ctx));
        case BinomKind::C36: return ctx.mul(ctx.mul(c2, binom_mod(3 * k, k, ctx)), binom_mod(6 * k, 3 * k, ctx));
    }
    return PValued::zero();
}

/// sum_{k<p} term_k / m^k as a residue mod p^k; m must be a p-unit.
inline Integer binom_product_residue(BinomKind kind, const Rational& m, const ModCtx& ctx) {
    if (m == 0 || valuation(m, ctx.p()) != 0) throw invalid_argument("binom_product_sum: m must be a p-unit");
    const Integer minv = ctx.residue(1 / m).value();
    Integer acc = 0, w = 1;
    for (unsigned long k = 0; k < ctx.p(); ++k) {
        acc += ctx.to_residue(binom_product_term(kind, k, ctx)) * w;
        w = ctx.mod(w * minv);
    }
    return ctx.mod(acc);
}

inline PValued binom_product_sum(BinomKind kind, const Rational& m, const ModCtx& ctx) {
    return ctx.from_residue(binom_product_residue(kind, m, ctx));
}

}  // namespace apery
