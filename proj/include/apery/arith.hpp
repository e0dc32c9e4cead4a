#pragma once

/**
 * @file arith.hpp
 * @brief Exact integers and rationals, Jacobi symbols, and arithmetic in
 *        Z/p^k with the p-adic valuation carried separately.
 *
 * Big numbers are GMP (`mpz_class`, `mpq_class`). Everything that has to
 * do with primes and prime powers is written here:
 *
 *  - ModCtx    an odd prime p and exponent k, with a lazily built table of
 *              p-stripped factorials mod p^k.
 *  - PValued   p^val * unit, unit a residue mod p^k coprime to p, or ZERO.
 *  - Residue   a plain element of Z/p^k bound to a ModCtx.
 *
 * Binomial coefficients whose factorials contain p are handled by counting
 * the valuation with Legendre's digit-sum formula and multiplying stripped
 * factorials for the unit.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace apery {

using Integer = mpz_class;
using Rational = mpq_class;

struct invalid_argument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct not_invertible : std::domain_error {
    using std::domain_error::domain_error;
};
struct non_unit_division : std::domain_error {
    using std::domain_error::domain_error;
};
struct not_found : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Canonical n/d (gcd 1, positive denominator).
inline Rational make_rational(const Integer& n, const Integer& d = 1) {
    if (d == 0) throw invalid_argument("zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational qpow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw invalid_argument("zero to a negative power");
        return qpow(1 / base, -e);
    }
    Integer n = ipow(base.get_num(), static_cast<unsigned long>(e));
    Integer d = ipow(base.get_den(), static_cast<unsigned long>(e));
    return make_rational(n, d);
}

/// Floor modulo into [0, m).
inline Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// --------------------------------------------------------------------------
// Primes

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Closed interval [lo, hi] of candidate primes with an exclusion list.
class PrimeRange {
public:
    PrimeRange(std::uint64_t lo, std::uint64_t hi, std::set<std::uint64_t> exclusions = {})
        : lo_(lo), hi_(hi), exclusions_(std::move(exclusions)) {
        if (lo_ == 0 || lo_ > hi_) throw invalid_argument("prime range requires 1 <= lo <= hi");
        for (auto e : exclusions_) {
            if (e < lo_ || e > hi_) throw invalid_argument("exclusion " + std::to_string(e) + " outside range");
        }
    }

    std::uint64_t lo() const { return lo_; }
    std::uint64_t hi() const { return hi_; }
    const std::set<std::uint64_t>& exclusions() const { return exclusions_; }

private:
    std::uint64_t lo_, hi_;
    std::set<std::uint64_t> exclusions_;
};

/// All primes of the range minus its exclusions, ascending (segmented sieve).
inline std::vector<std::uint64_t> primes_in(const PrimeRange& range) {
    const std::uint64_t lo = std::max<std::uint64_t>(range.lo(), 2);
    const std::uint64_t hi = range.hi();
    std::vector<std::uint64_t> out;
    if (lo > hi) return out;

    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(hi))) + 1;
    std::vector<bool> small(root + 1, true);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) small[j] = false;
    }

    constexpr std::uint64_t kSegment = 1u << 18;
    for (std::uint64_t seg = lo; seg <= hi; seg += kSegment) {
        const std::uint64_t end = std::min(hi, seg + kSegment - 1);
        std::vector<bool> mark(end - seg + 1, true);
        for (auto q : base) {
            if (q * q > end) break;
            std::uint64_t start = std::max(q * q, (seg + q - 1) / q * q);
            for (std::uint64_t j = start; j <= end; j += q) mark[j - seg] = false;
        }
        for (std::uint64_t n = seg; n <= end; ++n) {
            if (mark[n - seg] && !range.exclusions().count(n)) out.push_back(n);
        }
        if (end == hi) break;
    }
    return out;
}

// --------------------------------------------------------------------------
// Symbols and inverses

/// Jacobi symbol (a/n) for odd n >= 1.
inline int jacobi(const Integer& a, const Integer& n) {
    if (n <= 0 || mpz_even_p(n.get_mpz_t())) throw invalid_argument("jacobi: n must be odd and positive");
    return mpz_jacobi(mod_floor(a, n).get_mpz_t(), n.get_mpz_t());
}

inline int jacobi(long a, long n) { return jacobi(Integer(a), Integer(n)); }

/// u in [0, m) with a*u = 1 (mod m).
inline Integer mod_inv(const Integer& a, const Integer& m) {
    if (m < 2) throw invalid_argument("mod_inv: modulus must be >= 2");
    Integer r;
    if (mpz_invert(r.get_mpz_t(), mod_floor(a, m).get_mpz_t(), m.get_mpz_t()) == 0)
        throw not_invertible("mod_inv: " + a.get_str() + " is not invertible mod " + m.get_str());
    return r;
}

/// Strips p from |a|; returns the exponent. a must be nonzero.
inline long strip_p(Integer& a, unsigned long p) {
    if (a == 0) throw invalid_argument("strip_p of zero");
    Integer pp(p);
    return static_cast<long>(mpz_remove(a.get_mpz_t(), a.get_mpz_t(), pp.get_mpz_t()));
}

inline long valuation(Integer a, unsigned long p) { return strip_p(a, p); }

inline long valuation(const Rational& q, unsigned long p) {
    if (q == 0) throw invalid_argument("valuation of zero");
    return valuation(Integer(q.get_num()), p) - valuation(Integer(q.get_den()), p);
}

// --------------------------------------------------------------------------
// Exact binomials

inline Integer binom_exact(long n, long m) {
    if (n < 0) throw invalid_argument("binom_exact: n must be nonnegative");
    if (m < 0 || m > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    return r;
}

/// C(n, m) mod p by Lucas' theorem on base-p digits.
inline std::uint64_t lucas_binom(std::uint64_t n, std::uint64_t m, std::uint64_t p) {
    if (!is_prime(p)) throw invalid_argument("lucas_binom: p must be prime");
    std::uint64_t result = 1;
    while ((n || m) && result) {
        const std::uint64_t nd = n % p, md = m % p;
        if (md > nd) return 0;
        // digit binomial by the multiplicative formula mod p (nd < p, so md! is invertible)
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t i = 0; i < md; ++i) {
            num = detail::mulmod64(num, nd - i, p);
            den = detail::mulmod64(den, i + 1, p);
        }
        result = detail::mulmod64(result, detail::mulmod64(num, detail::powmod64(den, p - 2, p), p), p);
        n /= p;
        m /= p;
    }
    return result;
}

// --------------------------------------------------------------------------
// p-adic values

/// p^val * unit, unit coprime to p and reduced mod p^k; or ZERO.
struct PValued {
    static constexpr long kZeroVal = std::numeric_limits<long>::max() / 4;

    long val = kZeroVal;
    Integer unit = 0;

    static PValued zero() { return {}; }
    bool is_zero() const { return val == kZeroVal; }

    friend bool operator==(const PValued& a, const PValued& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.val == b.val && a.unit == b.unit;
    }
};

class Residue;

/// Odd prime p and exponent k >= 1. Immutable; safe to share across threads.
class ModCtx {
public:
    ModCtx(unsigned long p, unsigned k) : p_(p), k_(k) {
        if (p < 3 || !is_prime(p)) throw invalid_argument("ModCtx: p must be an odd prime");
        if (k < 1) throw invalid_argument("ModCtx: k must be >= 1");
        modulus_ = ipow(Integer(p), k);
        fact_limit_ = 10 * p;
    }

    unsigned long p() const { return p_; }
    unsigned k() const { return k_; }
    const Integer& modulus() const { return modulus_; }

    Integer mod(const Integer& a) const { return mod_floor(a, modulus_); }

    /// Embeds an exact rational: valuation split off, unit reduced mod p^k.
    PValued reduce(const Rational& q) const {
        if (q == 0) return PValued::zero();
        Integer num = q.get_num(), den = q.get_den();
        const long vn = strip_p(num, p_);
        const long vd = strip_p(den, p_);
        return {vn - vd, mod(num * mod_inv(den, modulus_))};
    }

    PValued reduce(const Integer& a) const { return reduce(Rational(a)); }
    PValued reduce(long a) const { return reduce(Rational(a)); }

    /// A residue r mod p^k as a PValued (r = 0 gives ZERO).
    PValued from_residue(const Integer& r) const {
        Integer a = mod(r);
        if (a == 0) return PValued::zero();
        const long v = strip_p(a, p_);
        return {v, mod(a)};
    }

    /// Value mod p^k; requires val >= 0.
    Integer to_residue(const PValued& a) const {
        if (a.is_zero()) return 0;
        if (a.val < 0) throw non_unit_division("to_residue: negative valuation");
        if (a.val >= static_cast<long>(k_)) return 0;
        return mod(a.unit * ipow(Integer(p_), static_cast<unsigned long>(a.val)));
    }

    PValued mul(const PValued& a, const PValued& b) const {
        if (a.is_zero() || b.is_zero()) return PValued::zero();
        return {a.val + b.val, mod(a.unit * b.unit)};
    }

    PValued neg(const PValued& a) const {
        if (a.is_zero()) return a;
        return {a.val, mod(-a.unit)};
    }

    PValued inv(const PValued& a) const {
        if (a.is_zero()) throw not_invertible("inverse of ZERO");
        return {-a.val, mod_inv(a.unit, modulus_)};
    }

    /// Shifts the higher-valuation unit by p^dv; dv >= k absorbs it entirely.
    PValued add(const PValued& a, const PValued& b) const {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const PValued& lo = a.val <= b.val ? a : b;
        const PValued& hi = a.val <= b.val ? b : a;
        const long dv = hi.val - lo.val;
        if (dv >= static_cast<long>(k_)) return lo;
        Integer s = mod(lo.unit + hi.unit * ipow(Integer(p_), static_cast<unsigned long>(dv)));
        if (s == 0) return PValued::zero();
        const long extra = strip_p(s, p_);
        return {lo.val + extra, mod(s)};
    }

    PValued sub(const PValued& a, const PValued& b) const { return add(a, neg(b)); }

    PValued pow(const PValued& a, long e) const {
        if (e < 0) return pow(inv(a), -e);
        if (a.is_zero()) return e == 0 ? PValued{0, 1} : a;
        Integer u;
        mpz_powm_ui(u.get_mpz_t(), a.unit.get_mpz_t(), static_cast<unsigned long>(e), modulus_.get_mpz_t());
        return {a.val * e, u};
    }

    /// n! with every factor of p removed, mod p^k.
    Integer stripped_factorial(unsigned long n) const {
        if (n <= fact_limit_) {
            std::call_once(fact_once_, [this] { build_factorials(); });
            return fact_[n];
        }
        Integer f = 1;
        for (unsigned long i = 2; i <= n; ++i) {
            Integer t = i;
            if (i % p_ == 0) strip_p(t, p_);
            f = mod(f * t);
        }
        return f;
    }

    /// v_p(n!) by Legendre's formula.
    long factorial_valuation(unsigned long n) const {
        long v = 0;
        while (n) {
            n /= p_;
            v += static_cast<long>(n);
        }
        return v;
    }

    Residue residue(const Integer& a) const;
    Residue residue(const Rational& q) const;

private:
    void build_factorials() const {
        fact_.resize(fact_limit_ + 1);
        fact_[0] = 1;
        for (unsigned long i = 1; i <= fact_limit_; ++i) {
            Integer t = i;
            if (i % p_ == 0) strip_p(t, p_);
            fact_[i] = mod(fact_[i - 1] * t);
        }
    }

    unsigned long p_;
    unsigned k_;
    Integer modulus_;
    unsigned long fact_limit_;
    mutable std::once_flag fact_once_;
    mutable std::vector<Integer> fact_;
};

inline PValued reduce(const Rational& q, const ModCtx& ctx) { return ctx.reduce(q); }

/// C(n, m) in ctx without forming the exact integer.
inline PValued binom_mod(unsigned long n, unsigned long m, const ModCtx& ctx) {
    if (m > n) throw invalid_argument("binom_mod: m > n");
    const long v = ctx.factorial_valuation(n) - ctx.factorial_valuation(m) - ctx.factorial_valuation(n - m);
    Integer den = ctx.mod(ctx.stripped_factorial(m) * ctx.stripped_factorial(n - m));
    return {v, ctx.mod(ctx.stripped_factorial(n) * mod_inv(den, ctx.modulus()))};
}

/// Element of Z/p^k. Holds a non-owning pointer to its context.
class Residue {
public:
    Residue() = default;
    Residue(const ModCtx& ctx, const Integer& v) : ctx_(&ctx), v_(ctx.mod(v)) {}

    const ModCtx& ctx() const { return *ctx_; }
    const Integer& value() const { return v_; }

    friend Residue operator+(const Residue& a, const Residue& b) { return {*a.ctx_, a.v_ + b.v_}; }
    friend Residue operator-(const Residue& a, const Residue& b) { return {*a.ctx_, a.v_ - b.v_}; }
    friend Residue operator*(const Residue& a, const Residue& b) { return {*a.ctx_, a.v_ * b.v_}; }
    friend Residue operator*(const Residue& a, long c) { return {*a.ctx_, a.v_ * c}; }
    Residue operator-() const { return {*ctx_, -v_}; }
    Residue& operator+=(const Residue& b) { return *this = *this + b; }
    Residue& operator-=(const Residue& b) { return *this = *this - b; }
    Residue& operator*=(const Residue& b) { return *this = *this * b; }

    friend bool operator==(const Residue& a, const Residue& b) { return a.v_ == b.v_; }

    Residue inverse() const { return {*ctx_, mod_inv(v_, ctx_->modulus())}; }

    /// Division by an integer constant; the divisor must be a p-unit.
    Residue div(const Integer& d) const {
        if (mpz_divisible_ui_p(d.get_mpz_t(), ctx_->p()))
            throw non_unit_division("division by " + d.get_str() + " in Z/" + ctx_->modulus().get_str());
        return {*ctx_, v_ * mod_inv(d, ctx_->modulus())};
    }

    Residue pow(unsigned long e) const {
        Integer r;
        mpz_powm_ui(r.get_mpz_t(), v_.get_mpz_t(), e, ctx_->modulus().get_mpz_t());
        return {*ctx_, r};
    }

private:
    const ModCtx* ctx_ = nullptr;
    Integer v_ = 0;
};

inline Residue ModCtx::residue(const Integer& a) const { return {*this, a}; }

inline Residue ModCtx::residue(const Rational& q) const {
    if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), p_))
        throw not_invertible("residue: denominator divisible by p");
    return {*this, q.get_num() * mod_inv(q.get_den(), modulus_)};
}

/// Canonical "v:unit (mod p^k)" text; unit reduced to the digits that are
/// determined mod p^k, ZERO printed with v = inf.
inline std::string canonical(const PValued& a, unsigned long p, unsigned k) {
    const std::string suffix = " (mod " + std::to_string(p) + "^" + std::to_string(k) + ")";
    if (a.is_zero() || a.val >= static_cast<long>(k)) return "inf:0" + suffix;
    const long digits = static_cast<long>(k) - a.val;
    const Integer m = ipow(Integer(p), static_cast<unsigned long>(digits));
    return std::to_string(a.val) + ":" + mod_floor(a.unit, m).get_str() + suffix;
}

inline std::string canonical(const PValued& a, const ModCtx& ctx) { return canonical(a, ctx.p(), ctx.k()); }

}  // namespace apery
