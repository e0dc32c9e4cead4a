#pragma once

/**
 * @file claims.hpp
 * @brief Per-prime congruence checking: values with tracked absolute
 *        precision, chain comparison, weighted sequence sums, and the
 *        reflection / Lucas checks for recurrence sequences.
 *
 * Every sum is accumulated as a plain residue mod p^(k+6) and only then
 * turned into a p-adic value. A Value remembers how many p-adic digits are
 * actually known, so a comparison that would need digits lost to division
 * by multiples of p reports `indeterminate` instead of guessing.
 */

#include <apery/arith.hpp>
#include <apery/sequences.hpp>
#include <apery/special.hpp>

#include <json.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace apery {

using json = nlohmann::ordered_json;

enum class Status { verified, failed, skipped, indeterminate };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::verified: return "verified";
        case Status::failed: return "failed";
        case Status::skipped: return "skipped";
        case Status::indeterminate: return "indeterminate";
    }
    return "?";
}

/// Extra p-adic digits carried by every claim computation.
inline constexpr unsigned kGuardDigits = 6;

/// Thrown by evaluators when the statement is not well posed at p.
struct skip_claim : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --------------------------------------------------------------------------
// Values with absolute precision

/// x is known modulo p^prec.
struct Value {
    PValued x;
    long prec = 0;
};

inline constexpr long kExactPrec = 1L << 40;

class Calc {
public:
    explicit Calc(const ModCtx& ctx) : ctx_(ctx) {}

    const ModCtx& ctx() const { return ctx_; }
    long width() const { return static_cast<long>(ctx_.k()); }

    Value exact(const Rational& q) const {
        PValued x = ctx_.reduce(q);
        return {x, x.is_zero() ? kExactPrec : x.val + width()};
    }
    Value exact(const Integer& a) const { return exact(Rational(a)); }
    Value exact(long a) const { return exact(Rational(a)); }

    /// A residue known only mod p^prec.
    Value residue(const Integer& r, long prec) const {
        prec = std::min(prec, width());
        return clamp({ctx_.from_residue(r), prec});
    }

    static long eff_val(const Value& a) { return a.x.is_zero() ? a.prec : a.x.val; }

    Value add(const Value& a, const Value& b) const {
        long prec = std::min(a.prec, b.prec);
        if (!a.x.is_zero() || !b.x.is_zero()) {
            const long lo = std::min(a.x.is_zero() ? kExactPrec : a.x.val, b.x.is_zero() ? kExactPrec : b.x.val);
            prec = std::min(prec, lo + width());
        }
        return clamp({ctx_.add(a.x, b.x), prec});
    }
    Value neg(const Value& a) const { return {ctx_.neg(a.x), a.prec}; }
    Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }

    Value mul(const Value& a, const Value& b) const {
        const long prec = std::min({a.prec + eff_val(b), b.prec + eff_val(a), kExactPrec});
        return clamp({ctx_.mul(a.x, b.x), prec});
    }

    Value inv(const Value& a) const {
        if (a.x.is_zero()) throw not_invertible("inverse of a value indistinguishable from zero");
        return {ctx_.inv(a.x), a.prec - 2 * a.x.val};
    }

    Value scale(const Value& a, const Rational& c) const { return mul(a, exact(c)); }
    Value div(const Value& a, const Rational& c) const { return mul(a, exact(1 / c)); }

    /// verified iff a = b mod p^k with enough known digits.
    Status compare(const Value& a, const Value& b, unsigned k) const {
        const Value d = sub(a, b);
        if (d.prec < static_cast<long>(k)) return Status::indeterminate;
        return eff_val(d) >= static_cast<long>(k) ? Status::verified : Status::failed;
    }

    std::string text(const Value& a, unsigned k) const { return canonical(a.x, ctx_.p(), k); }

private:
    Value clamp(Value v) const {
        if (!v.x.is_zero() && v.x.val >= v.prec) v.x = PValued::zero();
        return v;
    }

    const ModCtx& ctx_;
};

// --------------------------------------------------------------------------
// Results

struct Outcome {
    Status status = Status::verified;
    std::string lhs, rhs;
    json witness = json::object();
    std::string note;
};

struct ClaimResult {
    std::string claim;
    unsigned long p = 0;
    Status status = Status::skipped;
    std::string lhs, rhs;
    json witness = json::object();
    std::string note;
    double ms = 0;
};

/// One member B of "A = c B = ... = R": checked as B = R / c.
struct Member {
    std::string label;
    Value v;
    Rational coef = 1;
};

inline Status merge(Status a, Status b) {
    if (a == Status::failed || b == Status::failed) return Status::failed;
    if (a == Status::indeterminate || b == Status::indeterminate) return Status::indeterminate;
    return Status::verified;
}

/// Checks every member against target / coef. Without a target the first
/// member (times its coefficient) serves as the common value.
inline Outcome check_chain(const Calc& calc, unsigned k, const std::vector<Member>& members,
                           std::optional<Value> target = std::nullopt) {
    if (members.empty()) throw invalid_argument("check_chain: no members");
    const Value common = target ? *target : calc.scale(members.front().v, members.front().coef);
    Outcome out;
    json rows = json::array();
    bool reported = false;
    for (const auto& m : members) {
        const Value want = m.coef == 1 ? common : calc.div(common, m.coef);
        const Status s = calc.compare(m.v, want, k);
        json row;
        row["member"] = m.label;
        if (m.coef != 1) row["coef"] = m.coef.get_str();
        row["value"] = calc.text(m.v, k);
        row["expected"] = calc.text(want, k);
        row["status"] = to_string(s);
        rows.push_back(std::move(row));
        out.status = merge(out.status, s);
        if (!reported && s != Status::verified) {
            out.lhs = calc.text(m.v, k);
            out.rhs = calc.text(want, k);
            reported = true;
        }
    }
    if (!reported) {
        out.lhs = calc.text(members.front().v, k);
        out.rhs = calc.text(target ? *target : members.front().v, k);
    }
    out.witness["members"] = std::move(rows);
    return out;
}

inline Outcome check_equal(const Calc& calc, unsigned k, const std::string& label, const Value& lhs, const Value& rhs) {
    return check_chain(calc, k, {{label, lhs, 1}}, rhs);
}

/// Folds labelled sub-outcomes; lhs/rhs come from the first non-verified one.
inline Outcome combine(std::vector<std::pair<std::string, Outcome>> parts) {
    Outcome out;
    if (parts.empty()) return out;
    json rows = json::array();
    bool reported = false;
    for (auto& [label, o] : parts) {
        out.status = merge(out.status, o.status);
        if (!reported && o.status != Status::verified) {
            out.lhs = o.lhs;
            out.rhs = o.rhs;
            reported = true;
        }
        json row;
        row["case"] = label;
        row["status"] = to_string(o.status);
        row["lhs"] = o.lhs;
        row["rhs"] = o.rhs;
        for (auto& [key, val] : o.witness.items()) row[key] = val;
        rows.push_back(std::move(row));
    }
    if (!reported) {
        out.lhs = parts.front().second.lhs;
        out.rhs = parts.front().second.rhs;
    }
    out.witness["cases"] = std::move(rows);
    return out;
}

// --------------------------------------------------------------------------
// Shared contexts

/// Bounded process-wide cache of immutable contexts.
inline std::shared_ptr<const ModCtx> shared_ctx(unsigned long p, unsigned k) {
    static std::mutex mu;
    static std::map<std::pair<unsigned long, unsigned>, std::shared_ptr<const ModCtx>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    if (cache.size() >= 256) cache.clear();
    auto ctx = std::make_shared<const ModCtx>(p, k);
    cache.emplace(key, ctx);
    return ctx;
}

// --------------------------------------------------------------------------
// Weighted sums

/// u_0..u_{n} for the sums below; Wx evaluated exactly.
inline std::vector<Rational> sequence_prefix(const SequenceId& id, long n, SequenceCache& cache) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    if (id.tag == SeqTag::Wx) {
        for (long k = 0; k <= n; ++k) out.push_back(w_poly(k, id.x));
        return out;
    }
    auto w = cache.window(id.tag, std::max(n, 1L));
    for (long k = 0; k <= n; ++k) out.emplace_back((*w)[static_cast<std::size_t>(k)]);
    return out;
}

/// sum_{k<p} (alpha k + beta) C(2k,k)^[central] u_k / m^k as a residue mod p^ctx.k.
inline Integer weighted_sum_residue(const SequenceId& id, const Rational& m, long alpha, long beta, bool central,
                                    const ModCtx& ctx, SequenceCache& cache = SequenceCache::global()) {
    if (m == 0 || valuation(m, ctx.p()) != 0) throw invalid_argument("weighted_sum: m must be a p-unit");
    const long p = static_cast<long>(ctx.p());
    const Integer minv = ctx.residue(1 / m).value();
    Integer acc = 0, w = 1, term;
    if (id.tag == SeqTag::Wx) {
        for (long k = 0; k < p; ++k) {
            term = ctx.residue(w_poly(k, id.x)).value() * w * (alpha * k + beta);
            if (central) term *= ctx.to_residue(binom_mod(2 * k, k, ctx));
            acc = ctx.mod(acc + term);
            w = ctx.mod(w * minv);
        }
        return acc;
    }
    auto win = cache.window(id.tag, std::max(p - 1, 1L));
    for (long k = 0; k < p; ++k) {
        term = ctx.mod((*win)[static_cast<std::size_t>(k)]) * w * (alpha * k + beta);
        if (central) term *= ctx.to_residue(binom_mod(2 * k, k, ctx));
        acc = ctx.mod(acc + term);
        w = ctx.mod(w * minv);
    }
    return acc;
}

/// The same sum as a p-adic value mod p^ctx.k (ctx.k <= 4); guard digits internal.
inline PValued weighted_sum(const SequenceId& id, const Rational& m, long alpha, long beta, bool central,
                            const ModCtx& ctx) {
    if (ctx.k() > 4) throw invalid_argument("weighted_sum: modulus exponent must be <= 4");
    const auto guarded = shared_ctx(ctx.p(), ctx.k() + kGuardDigits);
    return ctx.from_residue(weighted_sum_residue(id, m, alpha, beta, central, *guarded));
}

// --------------------------------------------------------------------------
// Reflection and Lucas checks

namespace detail {

/// u_0..u_p as exact rationals; integral specs take the integer path.
inline std::vector<Rational> spec_values(const RecurrenceSpec& spec, long n) {
    std::vector<Rational> out;
    if (spec.integral()) {
        for (auto& v : recurrence_integers(spec, n)) out.emplace_back(v);
        return out;
    }
    return recurrence_terms(spec, spec.b(0), n).values;
}

inline ClaimResult finish(Outcome o, unsigned long p) {
    ClaimResult r;
    r.p = p;
    r.status = o.status;
    r.lhs = std::move(o.lhs);
    r.rhs = std::move(o.rhs);
    r.witness = std::move(o.witness);
    r.note = std::move(o.note);
    return r;
}

}  // namespace detail

/// u_n = +-(c/p) c^n u_{p-1-n} (mod p) for n < p, sign from whether p | u_{(p-1)/2},
/// plus the u_{p-1} consequence.
inline Outcome reflection_outcome(const RecurrenceSpec& spec, unsigned long p) {
    if (p < 3 || !is_prime(p)) throw invalid_argument("reflection_check: p must be an odd prime");
    Outcome out;
    if (mpz_divisible_ui_p(spec.c().get_mpz_t(), p)) {
        out.status = Status::skipped;
        out.note = "p divides c";
        return out;
    }
    const auto& ctx = *shared_ctx(p, 1);
    const Calc calc(ctx);
    const auto u = detail::spec_values(spec, static_cast<long>(p));
    for (std::size_t n = 0; n < u.size(); ++n) {
        if (valuation(u[n] == 0 ? Rational(1) : u[n], p) < 0) {
            out.status = Status::indeterminate;
            out.note = "u_" + std::to_string(n) + " is not p-integral";
            return out;
        }
    }
    const detail::Fp F{p};
    std::vector<std::uint64_t> r;
    for (long n = 0; n < static_cast<long>(p); ++n) r.push_back(F.of(u[static_cast<std::size_t>(n)]));
    const bool mid_divisible = r[(p - 1) / 2] == 0;
    const int cp = jacobi(spec.c(), Integer(p));
    long sign = cp;
    if (mid_divisible && spec.r() % 2 == 0) sign = -sign;  // (-1)^(r-1)
    const std::uint64_t c = F.of(spec.c());
    const std::uint64_t s = F.norm(sign);

    out.witness["branch"] = mid_divisible ? "p | u_(p-1)/2" : "p does not divide u_(p-1)/2";
    out.witness["sign"] = sign;
    std::uint64_t cn = 1;
    for (std::uint64_t n = 0; n < p; ++n) {
        const std::uint64_t rhs = F.mul(s, F.mul(cn, r[p - 1 - n]));
        if (r[n] != rhs) {
            out.status = Status::failed;
            out.lhs = calc.text(calc.residue(r[n], 1), 1);
            out.rhs = calc.text(calc.residue(rhs, 1), 1);
            out.witness["first_mismatch"] = n;
            return out;
        }
        cn = F.mul(cn, c);
    }
    const Value last = calc.residue(r[p - 1], 1);
    const Value want = calc.exact(sign);
    out.status = calc.compare(last, want, 1);
    out.lhs = calc.text(last, 1);
    out.rhs = calc.text(want, 1);
    return out;
}

inline ClaimResult reflection_check(const RecurrenceSpec& spec, unsigned long p) {
    return detail::finish(reflection_outcome(spec, p), p);
}

/// Digit-product congruence u_n = prod u_{n_i} (mod p) for n <= n_max, provided
/// u_{mp} = u_m (mod p) holds for every m <= n_max / p.
inline Outcome lucas_outcome(const SequenceId& id, unsigned long p, long n_max,
                             SequenceCache& cache = SequenceCache::global()) {
    if (!is_prime(p) || p < 3) throw invalid_argument("lucas_check: p must be an odd prime");
    Outcome out;
    const auto u = sequence_prefix(id, n_max, cache);
    const detail::Fp F{p};
    std::vector<std::uint64_t> r;
    for (const auto& v : u) {
        if (valuation(v == 0 ? Rational(1) : v, p) < 0) {
            out.status = Status::indeterminate;
            out.note = "sequence is not p-integral";
            return out;
        }
        r.push_back(F.of(v));
    }
    const auto& ctx = *shared_ctx(p, 1);
    const Calc calc(ctx);
    for (long m = 1; m * static_cast<long>(p) <= n_max; ++m) {
        if (r[static_cast<std::size_t>(m * static_cast<long>(p))] != r[static_cast<std::size_t>(m)]) {
            out.status = Status::skipped;
            out.note = "hypothesis u_{mp} = u_m fails at m = " + std::to_string(m);
            out.witness["hypothesis_fails_at"] = m;
            return out;
        }
    }
    for (long n = 0; n <= n_max; ++n) {
        std::uint64_t prod = 1;
        for (long t = n; t > 0; t /= static_cast<long>(p)) prod = F.mul(prod, r[static_cast<std::size_t>(t % static_cast<long>(p))]);
        if (prod != r[static_cast<std::size_t>(n)]) {
            out.status = Status::failed;
            out.lhs = calc.text(calc.residue(r[static_cast<std::size_t>(n)], 1), 1);
            out.rhs = calc.text(calc.residue(prod, 1), 1);
            out.witness["n"] = n;
            return out;
        }
    }
    out.lhs = out.rhs = calc.text(calc.residue(r[static_cast<std::size_t>(n_max)], 1), 1);
    out.witness["n_max"] = n_max;
    return out;
}

inline ClaimResult lucas_check(const SequenceId& id, unsigned long p, long n_max) {
    return detail::finish(lucas_outcome(id, p, n_max), p);
}

}  // namespace apery
