#pragma once

/**
 * @file registry.hpp
 * @brief Every congruence statement as an executable per-prime check.
 *
 * Ids follow "thm-2.2", "conj-4.26-3", ... A claim is evaluated at a single
 * prime p; sums are taken over k = 0..p-1 exactly mod p^(k+guard). Chains
 * "S1 = c2 S2 = ... = R" check each member S_i against R / c_i.
 */

#include <apery/claims.hpp>

#include <initializer_list>

namespace apery {

struct EvalCtx;

struct Claim {
    std::string id;
    std::string description;
    std::string applies;  // human summary of applicable(p)
    unsigned k = 1;       // modulus exponent
    bool heavy = false;
    bool opt_in = false;
    std::function<bool(unsigned long)> applicable;
    std::function<Outcome(EvalCtx&)> eval;
};

namespace detail {

inline Rational Q(long a, long b = 1) { return make_rational(Integer(a), Integer(b)); }

inline bool in(unsigned long v, std::initializer_list<unsigned long> s) {
    for (auto x : s) {
        if (v == x) return true;
    }
    return false;
}

/// Binomials mod a small prime: factorial table below p, Lucas digits above.
class FpBinom {
public:
    explicit FpBinom(std::uint64_t p) : F{p}, fact_(p), ifact_(p) {
        fact_[0] = 1;
        for (std::uint64_t i = 1; i < p; ++i) fact_[i] = F.mul(fact_[i - 1], i);
        ifact_[p - 1] = F.inv(fact_[p - 1]);
        for (std::uint64_t i = p - 1; i > 0; --i) ifact_[i - 1] = F.mul(ifact_[i], i);
    }

    std::uint64_t operator()(std::uint64_t n, std::uint64_t m) const {
        std::uint64_t r = 1;
        while ((n || m) && r) {
            const std::uint64_t nd = n % F.p, md = m % F.p;
            if (md > nd) return 0;
            r = F.mul(r, F.mul(fact_[nd], F.mul(ifact_[md], ifact_[nd - md])));
            n /= F.p;
            m /= F.p;
        }
        return r;
    }

    Fp F;

private:
    std::vector<std::uint64_t> fact_, ifact_;
};

/// W_0(x)..W_n(x) mod p, n < p.
inline std::vector<std::uint64_t> w_table_fp(const FpBinom& C, std::uint64_t x, std::uint64_t n) {
    const Fp& F = C.F;
    std::vector<std::uint64_t> c, xp(n + 1, 1);
    for (std::uint64_t j = 0; 3 * j <= n; ++j) c.push_back(F.mul(C(2 * j, j), C(3 * j, j)));
    for (std::uint64_t i = 1; i <= n; ++i) xp[i] = F.mul(xp[i - 1], x);
    std::vector<std::uint64_t> w(n + 1, 0);
    for (std::uint64_t k = 0; k <= n; ++k) {
        std::uint64_t acc = 0;
        for (std::uint64_t j = 0; 3 * j <= k; ++j) acc = F.add(acc, F.mul(c[j], F.mul(C(k, 3 * j), xp[k - 3 * j])));
        w[k] = acc;
    }
    return w;
}

}  // namespace detail

/// Per-(claim, prime) evaluation state.
struct EvalCtx {
    EvalCtx(unsigned long p_, unsigned k_, SequenceCache& cache_)
        : p(p_), k(k_), cache(cache_), ctxp(shared_ctx(p_, k_ + kGuardDigits)), calc(*ctxp) {}

    unsigned long p;
    unsigned k;
    SequenceCache& cache;
    std::shared_ptr<const ModCtx> ctxp;
    Calc calc;
    json witness = json::object();

    long lp() const { return static_cast<long>(p); }
    const ModCtx& ctx() const { return *ctxp; }

    Value exact(const Rational& q) const { return calc.exact(q); }
    Value exact(const Integer& a) const { return calc.exact(a); }
    Value fp(std::uint64_t r) const { return calc.residue(Integer(r), 1); }

    /// (a/p)
    int leg(long a) const { return jacobi(Integer(a), Integer(lp())); }
    /// (p/d) for odd d
    int sym(long d) const { return jacobi(Integer(lp()), Integer(d)); }
    /// (-1)^((p-1)/2)
    long sgn() const { return p % 4 == 1 ? 1 : -1; }

    QuadRep rep(const std::string& form) {
        auto r = quad_rep(p, quad_form(form));
        if (!r) throw std::logic_error("no representation of p = " + std::to_string(p) + " by " + form);
        json w;
        w["form"] = form;
        w["x"] = r->x;
        w["y"] = r->y;
        witness["rep"] = w;
        return *r;
    }

    void require_unit(const Rational& m) const {
        if (valuation(m, p) != 0) throw skip_claim("p divides " + m.get_str());
    }

    Value seq_sum(SeqTag tag, const Rational& m, long alpha = 0, long beta = 1, bool central = false) const {
        require_unit(m);
        return calc.residue(weighted_sum_residue({tag, 0}, m, alpha, beta, central, ctx(), cache), calc.width());
    }

    Value binom_sum(BinomKind kind, const Rational& m) const {
        require_unit(m);
        return calc.residue(binom_product_residue(kind, m, ctx()), calc.width());
    }

    Integer term(SeqTag tag, long n) const { return (*cache.window(tag, std::max(n, 1L)))[static_cast<std::size_t>(n)]; }

    /// X - 2p - p^2 / X
    Value near_square(const Rational& X) const {
        const Rational pp(lp());
        return exact(X - 2 * pp - pp * pp / X);
    }

    /// c p^2 / C(n, m)^2
    Value inv_binom_sq(const Rational& c, long n, long m) const {
        const Integer b = binom_exact(n, m);
        return exact(c * Rational(lp()) * lp() / Rational(b * b));
    }
};

namespace detail {

inline std::string seq_short(SeqTag t) { return seq_name({t, 0}); }

inline Outcome with_witness(Outcome o, const EvalCtx& e) {
    for (auto& [key, val] : e.witness.items()) o.witness[key] = val;
    return o;
}

/// Chain with a closed-form target; adds the evaluation witness.
inline Outcome chain(EvalCtx& e, const std::vector<Member>& members, const Value& target) {
    return with_witness(check_chain(e.calc, e.k, members, target), e);
}

inline Outcome chain_free(EvalCtx& e, const std::vector<Member>& members) {
    return with_witness(check_chain(e.calc, e.k, members), e);
}

inline std::vector<std::uint64_t> fp_window(const EvalCtx& e, SeqTag tag, long n) {
    auto w = e.cache.window(tag, std::max(n, 1L));
    std::vector<std::uint64_t> r;
    for (long i = 0; i <= n; ++i) r.push_back(mpz_fdiv_ui((*w)[static_cast<std::size_t>(i)].get_mpz_t(), e.p));
    return r;
}

/// First `count` x in 1..p-1 satisfying `ok`.
inline std::vector<std::uint64_t> sample_units(std::uint64_t p, unsigned count,
                                               const std::function<bool(std::uint64_t)>& ok) {
    std::vector<std::uint64_t> xs;
    for (std::uint64_t x = 1; x < p && xs.size() < count; ++x) {
        if (ok(x)) xs.push_back(x);
    }
    return xs;
}

inline constexpr unsigned kSamples = 10;

inline Outcome sampled(std::vector<std::pair<std::string, Outcome>> parts) {
    if (parts.empty()) {
        Outcome o;
        o.status = Status::skipped;
        o.note = "no admissible sample";
        return o;
    }
    return combine(std::move(parts));
}

}  // namespace detail

// --------------------------------------------------------------------------
// Evaluators for the W-sum claims (mod p)

namespace detail {

/// sum W_k(x+m)/m^k = W_{p-1}(x) = sum C(2k,k)C(3k,k)/(-x)^(3k) = P_[p/3](1+54/x^3)
/// = -(p/3) sum_n ((n^3 - 3x(x^3-216)n - 2x^6 - 1080x^3 + 108^2)/p).
inline Outcome eval_lem22(EvalCtx& e) {
    const std::uint64_t p = e.p;
    const FpBinom C(p);
    const Fp& F = C.F;
    std::vector<std::pair<std::string, Outcome>> parts;
    for (auto x : sample_units(p, kSamples, [](std::uint64_t) { return true; })) {
        const std::uint64_t m = x % (p - 1) + 1;
        const auto wxm = w_table_fp(C, F.add(x, m), p - 1);
        const auto wx = w_table_fp(C, x, p - 1);
        const std::uint64_t minv = F.inv(m);
        std::uint64_t s1 = 0, s3 = 0, pw = 1;
        const std::uint64_t t3 = F.inv(F.sub(0, F.pow(x, 3)));
        std::uint64_t pt = 1;
        for (std::uint64_t k = 0; k < p; ++k) {
            s1 = F.add(s1, F.mul(wxm[k], pw));
            s3 = F.add(s3, F.mul(F.mul(C(2 * k, k), C(3 * k, k)), pt));
            pw = F.mul(pw, minv);
            pt = F.mul(pt, t3);
        }
        const auto& ctx1 = *shared_ctx(p, 1);
        const Integer X(static_cast<unsigned long>(x));
        const Residue arg = ctx1.residue(Rational(X * X * X + 54, X * X * X));
        const Residue P = legendre_poly(static_cast<long>(p / 3), arg);
        const Integer A = -3 * X * (X * X * X - 216);
        const Integer B = -2 * ipow(X, 6) - 1080 * X * X * X + 108 * 108;
        const long chi = -e.sym(3) * cubic_char_sum(A, B, p);
        std::vector<Member> ms = {
            {"sum W_k(x+m)/m^k", e.fp(s1), 1},
            {"W_{p-1}(x)", e.fp(wx[p - 1]), 1},
            {"sum C(2k,k)C(3k,k)/(-x)^(3k)", e.fp(s3), 1},
            {"P_[p/3](1+54/x^3)", e.fp(F.of(P.value())), 1},
            {"-(p/3) cubic character sum", e.fp(F.norm(chi)), 1},
        };
        parts.emplace_back("x=" + std::to_string(x) + ", m=" + std::to_string(m), check_chain(e.calc, 1, ms));
    }
    return sampled(std::move(parts));
}

/// ((n+4x)/p) sum C(2k,k) W_k(x)/(n+4x)^k = (-1)^((p-1)/2) W_{(p-1)/2}(-n/4)
/// = (n/p) sum C(2k,k)C(3k,k)C(6k,3k)/n^(3k).
inline Outcome eval_lem24(EvalCtx& e) {
    const std::uint64_t p = e.p;
    const FpBinom C(p);
    const Fp& F = C.F;
    const std::uint64_t h = (p - 1) / 2;
    std::vector<std::pair<std::string, Outcome>> parts;
    for (auto x : sample_units(p, kSamples, [](std::uint64_t) { return true; })) {
        std::uint64_t n = x + 1;
        while (n % p == 0 || (n + 4 * x) % p == 0) ++n;
        const std::uint64_t q = F.add(n % p, F.mul(4, x));
        const auto wx = w_table_fp(C, x, p - 1);
        const auto wn = w_table_fp(C, F.mul(F.sub(0, n % p), F.inv(4)), h);
        std::uint64_t s1 = 0, s3 = 0, pw = 1, pn = 1;
        const std::uint64_t qinv = F.inv(q), ninv3 = F.inv(F.pow(n % p, 3));
        for (std::uint64_t k = 0; k < p; ++k) {
            s1 = F.add(s1, F.mul(F.mul(C(2 * k, k), wx[k]), pw));
            s3 = F.add(s3, F.mul(F.mul(F.mul(C(2 * k, k), C(3 * k, k)), C(6 * k, 3 * k)), pn));
            pw = F.mul(pw, qinv);
            pn = F.mul(pn, ninv3);
        }
        std::vector<Member> ms = {
            {"((n+4x)/p) sum C(2k,k) W_k(x)/(n+4x)^k", e.fp(F.mul(F.norm(e.leg(static_cast<long>(q))), s1)), 1},
            {"(-1)^((p-1)/2) W_{(p-1)/2}(-n/4)", e.fp(F.mul(F.norm(e.sgn()), wn[h])), 1},
            {"(n/p) sum C(2k,k)C(3k,k)C(6k,3k)/n^(3k)", e.fp(F.mul(F.norm(e.leg(static_cast<long>(n % p))), s3)), 1},
        };
        parts.emplace_back("x=" + std::to_string(x) + ", n=" + std::to_string(n), check_chain(e.calc, 1, ms));
    }
    return sampled(std::move(parts));
}

/// The six-way chain for W_{p-1}(x)^2.
inline Outcome eval_thm211(EvalCtx& e) {
    const std::uint64_t p = e.p;
    const FpBinom C(p);
    const Fp& F = C.F;
    const std::uint64_t h = (p - 1) / 2;
    const auto W = fp_window(e, SeqTag::W, static_cast<long>(p - 1));
    auto ok = [&](std::uint64_t x) {
        const std::uint64_t x3 = F.pow(x, 3);
        const std::uint64_t q = F.sub(F.add(F.mul(x, x), F.mul(6, x)), 18);
        return F.add(x3, 27) != 0 && F.sub(x3, 216) != 0 && q != 0;
    };
    std::vector<std::pair<std::string, Outcome>> parts;
    for (auto x : sample_units(p, kSamples, ok)) {
        const std::uint64_t x3 = F.pow(x, 3);
        const std::uint64_t a = F.add(x3, 27);               // x^3 + 27
        const std::uint64_t b = F.mul(x, F.sub(x3, 216));    // x(x^3 - 216)
        const std::uint64_t q = F.sub(F.add(F.mul(x, x), F.mul(6, x)), 18);
        const auto wx = w_table_fp(C, x, p - 1);
        const std::uint64_t m2 = F.mul(F.sub(0, a), F.inv(F.pow(x, 6)));
        const std::uint64_t t = F.mul(F.sub(0, a), F.inv(b));
        const std::uint64_t t3 = F.pow(t, 3);
        const std::uint64_t y = F.mul(b, F.inv(F.mul(4, a)));
        const std::uint64_t v = F.mul(F.sub(0, a), F.inv(F.mul(q, q)));
        const std::uint64_t r = F.inv(F.sub(0, F.add(x, 3)));
        std::uint64_t s2 = 0, s3 = 0, s4 = 0, s6 = 0, pr = 1, pm = 1, pt = 1, pv = 1;
        for (std::uint64_t k = 0; k < p; ++k) {
            const std::uint64_t c2 = C(2 * k, k), c3 = C(3 * k, k);
            s2 = F.add(s2, F.mul(W[k], pr));
            s3 = F.add(s3, F.mul(F.mul(F.mul(c2, c2), c3), pm));
            s4 = F.add(s4, F.mul(F.mul(F.mul(c2, c3), C(6 * k, 3 * k)), pt));
            s6 = F.add(s6, F.mul(F.mul(c2, W[k]), pv));
            pr = F.mul(pr, r);
            pm = F.mul(pm, m2);
            pt = F.mul(pt, t3);
            pv = F.mul(pv, v);
        }
        const auto wy = w_table_fp(C, y, h);
        std::vector<Member> ms = {
            {"W_{p-1}(x)^2", e.fp(F.mul(wx[p - 1], wx[p - 1])), 1},
            {"(sum W_k/(-x-3)^k)^2", e.fp(F.mul(s2, s2)), 1},
            {"sum C(2k,k)^2 C(3k,k) (-(x^3+27)/x^6)^k", e.fp(s3), 1},
            {"(x(x^3-216)/p) sum C(2k,k)C(3k,k)C(6k,3k) t^(3k)", e.fp(F.mul(F.norm(e.leg(static_cast<long>(b))), s4)), 1},
            {"((x^3+27)/p) W_{(p-1)/2}(x(x^3-216)/(4(x^3+27)))", e.fp(F.mul(F.norm(e.leg(static_cast<long>(a))), wy[h])), 1},
            {"sum C(2k,k) (-(x^3+27)/(x^2+6x-18)^2)^k W_k", e.fp(s6), 1},
        };
        parts.emplace_back("x=" + std::to_string(x), check_chain(e.calc, 1, ms));
    }
    return sampled(std::move(parts));
}

/// (sum W_k x^k)^2 = sum C(2k,k) (x(1+9x+27x^2)/(1-27x^2)^2)^k W_k.
inline Outcome eval_cor21(EvalCtx& e) {
    const std::uint64_t p = e.p;
    const FpBinom C(p);
    const Fp& F = C.F;
    const auto W = fp_window(e, SeqTag::W, static_cast<long>(p - 1));
    auto ok = [&](std::uint64_t x) {
        const std::uint64_t xx = F.mul(x, x);
        return F.add(x, 3) != 0 && F.add(F.add(1, F.mul(9, x)), F.mul(27, xx)) != 0 && F.add(1, F.mul(9, x)) != 0 &&
               F.add(1, F.mul(27, xx)) != 0 && F.sub(1, F.mul(27, xx)) != 0;
    };
    std::vector<std::pair<std::string, Outcome>> parts;
    for (auto x : sample_units(p, kSamples, ok)) {
        const std::uint64_t xx = F.mul(x, x);
        const std::uint64_t den = F.sub(1, F.mul(27, xx));
        const std::uint64_t z = F.mul(F.mul(x, F.add(F.add(1, F.mul(9, x)), F.mul(27, xx))), F.inv(F.mul(den, den)));
        std::uint64_t s1 = 0, s2 = 0, px = 1, pz = 1;
        for (std::uint64_t k = 0; k < p; ++k) {
            s1 = F.add(s1, F.mul(W[k], px));
            s2 = F.add(s2, F.mul(F.mul(C(2 * k, k), W[k]), pz));
            px = F.mul(px, x);
            pz = F.mul(pz, z);
        }
        std::vector<Member> ms = {
            {"(sum W_k x^k)^2", e.fp(F.mul(s1, s1)), 1},
            {"sum C(2k,k) (x(1+9x+27x^2)/(1-27x^2)^2)^k W_k", e.fp(s2), 1},
        };
        parts.emplace_back("x=" + std::to_string(x), check_chain(e.calc, 1, ms));
    }
    return sampled(std::move(parts));
}

/// P_n(x) = P_{p-1-n}(x) (mod p) for sampled x.
inline Outcome eval_cor31_legendre(EvalCtx& e) {
    const std::uint64_t p = e.p;
    const Fp F{p};
    std::vector<std::pair<std::string, Outcome>> parts;
    for (auto x : sample_units(p, kSamples, [](std::uint64_t) { return true; })) {
        std::vector<std::uint64_t> P{1, x};
        for (std::uint64_t n = 1; n + 1 < p; ++n) {
            const std::uint64_t t = F.sub(F.mul(F.mul(2 * n + 1, x), P[n]), F.mul(n, P[n - 1]));
            P.push_back(F.mul(t, F.inv(n + 1)));
        }
        Outcome o;
        o.lhs = o.rhs = e.calc.text(e.fp(P[0]), 1);
        for (std::uint64_t n = 0; n < p; ++n) {
            if (P[n] != P[p - 1 - n]) {
                o.status = Status::failed;
                o.lhs = e.calc.text(e.fp(P[n]), 1);
                o.rhs = e.calc.text(e.fp(P[p - 1 - n]), 1);
                o.witness["n"] = n;
                break;
            }
        }
        parts.emplace_back("x=" + std::to_string(x), o);
    }
    return sampled(std::move(parts));
}

/// u_n = s c^n u_{p-1-n} (mod p), 0 <= n < p.
inline Outcome eval_reflection_explicit(EvalCtx& e, SeqTag tag, long s, long c) {
    const std::uint64_t p = e.p;
    const Fp F{p};
    const auto u = fp_window(e, tag, static_cast<long>(p - 1));
    std::uint64_t cn = 1;
    const std::uint64_t sc = F.norm(s), cc = F.norm(c);
    Outcome o;
    for (std::uint64_t n = 0; n < p; ++n) {
        const std::uint64_t rhs = F.mul(sc, F.mul(cn, u[p - 1 - n]));
        if (u[n] != rhs) {
            o.status = Status::failed;
            o.lhs = e.calc.text(e.fp(u[n]), 1);
            o.rhs = e.calc.text(e.fp(rhs), 1);
            o.witness["n"] = n;
            return o;
        }
        cn = F.mul(cn, cc);
    }
    o.lhs = o.rhs = e.calc.text(e.fp(u[0]), 1);
    return o;
}

/// u_{kp+n} = u_{kp} u_n (mod p) for kp + n <= 3p^2.
inline Outcome eval_shift_product(EvalCtx& e, SeqTag tag) {
    const std::uint64_t p = e.p;
    const long n_max = 3 * e.lp() * e.lp();
    const Fp F{p};
    const auto u = fp_window(e, tag, n_max);
    Outcome o;
    for (long kp = e.lp(); kp <= n_max; kp += e.lp()) {
        for (long n = 0; n < e.lp() && kp + n <= n_max; ++n) {
            const std::uint64_t want = F.mul(u[static_cast<std::size_t>(kp)], u[static_cast<std::size_t>(n)]);
            if (u[static_cast<std::size_t>(kp + n)] != want) {
                o.status = Status::failed;
                o.lhs = e.calc.text(e.fp(u[static_cast<std::size_t>(kp + n)]), 1);
                o.rhs = e.calc.text(e.fp(want), 1);
                o.witness["index"] = kp + n;
                return o;
            }
        }
    }
    o.lhs = o.rhs = e.calc.text(e.fp(u[static_cast<std::size_t>(n_max)]), 1);
    o.witness["n_max"] = n_max;
    return o;
}

/// sum_{k<p} b(k)/(-c)^k u_k^2 = 0 (mod p^r).
inline Outcome eval_bilinear_tail(EvalCtx& e, SeqTag tag) {
    const RecurrenceSpec spec = recurrence_for(tag);
    const ModCtx& ctx = e.ctx();
    const Integer minv = ctx.residue(Rational(-1, 1) / Rational(spec.c())).value();
    auto win = e.cache.window(tag, e.lp());
    Integer acc = 0, w = 1;
    for (long k = 0; k < e.lp(); ++k) {
        const Integer u = ctx.mod((*win)[static_cast<std::size_t>(k)]);
        acc = ctx.mod(acc + ctx.residue(spec.b(k)).value() * w * u * u);
        w = ctx.mod(w * minv);
    }
    const Value s = e.calc.residue(acc, e.calc.width());
    return check_equal(e.calc, e.k, "sum b(k) u_k^2/(-c)^k", s, e.exact(Integer(0)));
}

/// W-type quadratic-form theorem: sign * sum C(2k,k) W_k/m^k = scale * x^2 or 0.
inline Outcome eval_w_form(EvalCtx& e, std::vector<std::pair<long, long>> sums, bool represented,
                           const std::string& form, long scale) {
    std::vector<Member> ms;
    for (auto [m, sign] : sums) {
        ms.push_back({"sum C(2k,k) W_k/(" + std::to_string(m) + ")^k", e.calc.scale(e.seq_sum(SeqTag::W, Q(m), 0, 1, true), Q(sign)), 1});
    }
    Value target = e.exact(Integer(0));
    e.witness["branch"] = represented ? "represented" : "not represented";
    if (represented) {
        const auto r = e.rep(form);
        target = e.exact(Q(scale * r.x * r.x));
    }
    return chain(e, ms, target);
}

}  // namespace detail

// --------------------------------------------------------------------------
// Registry

namespace detail {

inline const std::vector<SeqTag>& ten() { return recurrence_sequences(); }

inline std::vector<Claim> build_registry() {
    std::vector<Claim> R;
    auto add = [&](std::string id, std::string desc, std::string applies, unsigned k,
                   std::function<bool(unsigned long)> app, std::function<Outcome(EvalCtx&)> ev, bool heavy = false,
                   bool opt_in = false) {
        R.push_back({std::move(id), std::move(desc), std::move(applies), k, heavy, opt_in, std::move(app), std::move(ev)});
    };
    auto odd = [](unsigned long p) { return p % 2 == 1; };
    auto gt = [](unsigned long b) { return [b](unsigned long p) { return p > b && p % 2 == 1; }; };

    // ---- W-sums mod p with the cube-form 4p = L^2 + 27M^2
    auto lsum = [](long m, bool central, bool squared) {
        return [=](EvalCtx& e) {
            const Value s = e.seq_sum(SeqTag::W, Q(m), 0, 1, central);
            Value target = e.exact(Integer(0));
            e.witness["branch"] = e.p % 3 == 1 ? "p = 1 (mod 3)" : "p = 2 (mod 3)";
            if (e.p % 3 == 1) {
                const auto r = e.rep("4p:L2+27M2");
                target = e.exact(squared ? Q(r.x * r.x) : Q(-r.x));
            }
            return chain(e, {{"sum W_k/m^k", s, 1}}, target);
        };
    };
    add("thm-2.1-a", "sum W_k/(-3)^k = -L (p = 1 mod 3, 4p = L^2+27M^2, L = 1 mod 3) or 0", "p > 3", 1, gt(3),
        lsum(-3, false, false));
    add("thm-2.1-b", "sum W_k/(-9)^k = -L (p = 1 mod 3) or 0", "p > 3", 1, gt(3), lsum(-9, false, false));
    add("thm-2.1-c", "sum C(2k,k) W_k/(-12)^k = L^2 (p = 1 mod 3) or 0", "p > 3", 1, gt(3), lsum(-12, true, true));

    auto cong = [](long m, long A, long B) {
        return [=](EvalCtx& e) {
            const Value s = e.seq_sum(SeqTag::W, Q(m));
            const long chi = -e.leg(-6) * cubic_char_sum(Integer(A), Integer(B), e.p);
            e.witness["char_sum"] = cubic_char_sum(Integer(A), Integer(B), e.p);
            return chain(e, {{"sum W_k/m^k", s, 1}}, e.exact(Q(chi)));
        };
    };
    add("cong-2.1", "sum W_k = -(-6/p) sum_n ((n^3-840n+9074)/p)", "p > 3", 1, gt(3), cong(1, -840, 9074));
    add("cong-2.2", "sum (-1)^k W_k = -(-6/p) sum_n ((n^3-336n+2522)/p)", "p > 3", 1, gt(3), cong(-1, -336, 2522));

    add("lem-2.2", "five-way chain for W_{p-1}(x), sampled (x, m)", "p > 3", 1, gt(3), eval_lem22);
    add("lem-2.4", "three-way chain for W_{(p-1)/2}(-n/4), sampled (n, x)", "p odd", 1, odd, eval_lem24);

    add("thm-2.2", "W_{(p-1)/2} = 4x^2 (p = x^2+y^2, x odd) or 0 (p = 3 mod 4)", "p odd", 1, odd, [](EvalCtx& e) {
        const Value w = e.exact(e.term(SeqTag::W, (e.lp() - 1) / 2));
        Value target = e.exact(Integer(0));
        e.witness["branch"] = e.p % 4 == 1 ? "p = 1 (mod 4)" : "p = 3 (mod 4)";
        if (e.p % 4 == 1) {
            const auto r = e.rep("x2+y2");
            target = e.exact(Q(4 * r.x * r.x));
        }
        return chain(e, {{"W_{(p-1)/2}", w, 1}}, target);
    });
    add("thm-2.3", "sum C(2k,k) W_k/54^k = 4x^2 (p/3) (p = x^2+4y^2) or 0 (p = 3 mod 4)", "p != 2, 3, 11", 1,
        [](unsigned long p) { return p % 2 == 1 && p != 3 && p != 11; },
        [](EvalCtx& e) {
            return eval_w_form(e, {{54, 1}}, e.p % 4 == 1, "x2+4y2", 4 * e.sym(3));
        });
    add("thm-2.4", "sum C(2k,k) W_k/8^k = 4x^2 (p = x^2+2y^2) or 0 (p = 5, 7 mod 8)", "p > 5", 1, gt(5),
        [](EvalCtx& e) { return eval_w_form(e, {{8, 1}}, in(e.p % 8, {1, 3}), "x2+2y2", 4); });
    add("thm-2.5", "(-3/p) sum C(2k,k) W_k/m^k = 4x^2 (p = x^2+7y^2) or 0, m = -27, 243", "p > 7", 1, gt(7),
        [](EvalCtx& e) {
            const long s = e.leg(-3);
            return eval_w_form(e, {{-27, s}, {243, s}}, in(e.p % 7, {1, 2, 4}), "x2+7y2", 4);
        });
    struct Heegner {
        const char* id;
        long m, d;
        bool signed_sum;
        const char* applies;
        std::function<bool(unsigned long)> app;
    };
    const std::vector<Heegner> heegner = {
        {"thm-2.6", -44, 11, false, "p != 2, 3, 11", [](unsigned long p) { return p % 2 == 1 && p != 3 && p != 11; }},
        {"thm-2.7", -108, 19, true, "p != 2, 3, 19", [](unsigned long p) { return p % 2 == 1 && p != 3 && p != 19; }},
        {"thm-2.8", -972, 43, true, "p != 2, 3, 5, 43",
         [](unsigned long p) { return p % 2 == 1 && p != 3 && p != 5 && p != 43; }},
        {"thm-2.9", -5292, 67, true, "p > 11, p != 67", [](unsigned long p) { return p > 11 && p != 67; }},
        {"thm-2.10", -640332, 163, true, "p > 11, p != 23, 29, 163",
         [](unsigned long p) { return p > 11 && p != 23 && p != 29 && p != 163; }},
    };
    for (const auto& h : heegner) {
        const std::string form = "4p:x2+" + std::to_string(h.d) + "y2";
        std::string desc = std::string(h.signed_sum ? "(-3/p) " : "") + "sum C(2k,k) W_k/(" + std::to_string(h.m) +
                           ")^k = x^2 ((p/" + std::to_string(h.d) + ") = 1, 4p = x^2+" + std::to_string(h.d) +
                           "y^2) or 0";
        add(h.id, desc, h.applies, 1, h.app, [h, form](EvalCtx& e) {
            const long s = h.signed_sum ? e.leg(-3) : 1;
            return eval_w_form(e, {{h.m, s}}, e.sym(h.d) == 1, form, 1);
        });
    }
    // At p = 7 every unit has x^3 = 1 or 6, so x(x^3+27)(x^3-216) vanishes for all x.
    add("thm-2.11", "six-way chain for W_{p-1}(x)^2, sampled x", "p > 3, p != 7", 1,
        [](unsigned long p) { return p > 7 || p == 5; }, eval_thm211);
    add("cor-2.1", "(sum W_k x^k)^2 = sum C(2k,k) (x(1+9x+27x^2)/(1-27x^2)^2)^k W_k, sampled x", "p > 3", 1, gt(3),
        eval_cor21);
    add("rem-2.1", "sum W_k/(-9)^k = sum W_k/(-3)^k = -L + p/L (p = 1 mod 6), sum W_k/(-9)^k = 0 (p = 5 mod 6) mod p^2",
        "p > 3", 2, gt(3),
        [](EvalCtx& e) {
            const Value s9 = e.seq_sum(SeqTag::W, Q(-9));
            if (e.p % 3 == 2) return chain(e, {{"sum W_k/(-9)^k", s9, 1}}, e.exact(Integer(0)));
            const Value s3 = e.seq_sum(SeqTag::W, Q(-3));
            const auto r = e.rep("4p:L2+27M2");
            return chain(e, {{"sum W_k/(-9)^k", s9, 1}, {"sum W_k/(-3)^k", s3, 1}},
                         e.exact(Q(-r.x) + Q(e.lp(), r.x)));
        },
        false, true);

    // ---- generalized recurrences
    for (SeqTag t : ten()) {
        const std::string n = seq_short(t);
        const Integer c = recurrence_for(t).c();
        auto coprime = [c](unsigned long p) { return p % 2 == 1 && !mpz_divisible_ui_p(c.get_mpz_t(), p); };
        add("thm-3.1-" + n, "reflection u_n = +-(c/p) c^n u_{p-1-n} and u_{p-1} = +-(c/p) for " + n, "p odd, p does not divide c",
            1, coprime, [t](EvalCtx& e) { return with_witness(reflection_outcome(recurrence_for(t), e.p), e); });
    }
    add("cor-3.1-P", "P_n(x) = P_{p-1-n}(x), sampled x", "p > 3", 1, gt(3), eval_cor31_legendre);
    struct Refl {
        SeqTag t;
        long c;
        bool by3;
    };
    for (auto [t, c, by3] : std::vector<Refl>{{SeqTag::Apery, 1, false},
                                               {SeqTag::Domb, 64, false},
                                               {SeqTag::AZ, 81, false},
                                               {SeqTag::T, 16, false},
                                               {SeqTag::W, 27, true},
                                               {SeqTag::Q, 72, true}}) {
        const std::string n = seq_short(t);
        std::string desc = n + "_n = " + (by3 ? std::string("(p/3) ") : std::string()) + std::to_string(c) + "^n " + n +
                           "_{p-1-n}";
        add("cor-3.1-" + n, desc, "p > 3", 1, gt(3), [t, c, by3](EvalCtx& e) {
            return eval_reflection_explicit(e, t, by3 ? e.sym(3) : 1, c);
        });
    }
    for (SeqTag t : ten()) {
        const std::string n = seq_short(t);
        add("thm-3.2-" + n, "u_{kp+n} = u_{kp} u_n for kp+n <= 3p^2, u = " + n, "p odd", 1, odd,
            [t](EvalCtx& e) { return eval_shift_product(e, t); }, true);
    }
    for (SeqTag t : ten()) {
        const std::string n = seq_short(t);
        add("cor-3.2-" + n, "Lucas congruence for " + n + " up to 3p^2 (when u_{mp} = u_m)", "p odd", 1, odd,
            [t](EvalCtx& e) { return with_witness(lucas_outcome({t, 0}, e.p, 3 * e.lp() * e.lp(), e.cache), e); },
            true);
    }
    for (SeqTag t : ten()) {
        const std::string n = seq_short(t);
        const RecurrenceSpec spec = recurrence_for(t);
        const Integer c = spec.c();
        add("thm-3.3-" + n, "sum_{k<p} b(k) " + n + "_k^2/(-c)^k = 0 (mod p^r)", "p odd, p does not divide c", spec.r(),
            [c](unsigned long p) { return p % 2 == 1 && !mpz_divisible_ui_p(c.get_mpz_t(), p); },
            [t](EvalCtx& e) { return eval_bilinear_tail(e, t); });
    }

    // ---- u_{p-1} mod p^4 / p^3
    struct Endpoint {
        const char* id;
        SeqTag t;
        unsigned k;
        long base;      // base^(p-1)
        int sign_kind;  // 0: +1, 1: (-1)^((p-1)/2), 2: (p/3)
        Rational coef;  // coefficient of p^3 B_{p-3} (k = 4) or of p^2 E/U (k = 3)
        int special;    // 0: B, 1: E, 2: U
        const char* desc;
    };
    const std::vector<Endpoint> endpoints = {
        {"conj-4.1-1", SeqTag::Apery, 4, 1, 0, Q(2, 3), 0, "A_{p-1} = 1 + (2/3) p^3 B_{p-3}"},
        {"conj-4.1-2", SeqTag::Domb, 4, 64, 0, Q(-1, 6), 0, "D_{p-1} = 64^(p-1) - p^3 B_{p-3}/6"},
        {"conj-4.1-3", SeqTag::AZ, 4, 81, 0, Q(-2, 27), 0, "b_{p-1} = 81^(p-1) - (2/27) p^3 B_{p-3}"},
        {"conj-4.1-4", SeqTag::T, 4, 16, 0, Q(1, 4), 0, "T_{p-1} = 16^(p-1) + p^3 B_{p-3}/4"},
        {"conj-4.2-1", SeqTag::AperyPrime, 4, 1, 0, Q(5, 3), 0, "A'_{p-1} = 1 + (5/3) p^3 B_{p-3}"},
        {"conj-4.2-2", SeqTag::Franel, 4, 8, 0, Q(5, 8), 0, "f_{p-1} = 8^(p-1) + (5/8) p^3 B_{p-3}"},
        {"conj-4.2-3", SeqTag::S, 3, 32, 1, Q(1), 1, "S_{p-1} = (-1)^((p-1)/2) 32^(p-1) + p^2 E_{p-3}"},
        {"conj-4.2-4", SeqTag::LittleA, 3, 9, 2, Q(1), 2, "a_{p-1} = (p/3) 9^(p-1) + p^2 U_{p-3}"},
        {"conj-4.2-5", SeqTag::W, 3, 27, 2, Q(1), 2, "W_{p-1} = (p/3) 27^(p-1) + p^2 U_{p-3}"},
        {"conj-4.2-6", SeqTag::Q, 3, 72, 2, Q(5, 2), 2, "Q_{p-1} = (p/3) 72^(p-1) + (5/2) p^2 U_{p-3}"},
    };
    for (const auto& ep : endpoints) {
        const std::string mod = ep.k == 4 ? "p^4" : "p^3";
        add(ep.id, std::string(ep.desc) + " (mod " + mod + ")", "p > 3", ep.k, gt(3), [ep](EvalCtx& e) {
            const Value u = e.exact(e.term(ep.t, e.lp() - 1));
            long s = 1;
            if (ep.sign_kind == 1) s = e.sgn();
            if (ep.sign_kind == 2) s = e.sym(3);
            const Value main = e.exact(Rational(s * ipow(Integer(ep.base), e.p - 1)));
            std::uint64_t sp = 0;
            if (ep.special == 0) sp = bernoulli_mod(e.p);
            if (ep.special == 1) sp = euler_mod(e.p, EulerKind::E);
            if (ep.special == 2) sp = euler_mod(e.p, EulerKind::U);
            e.witness[ep.special == 0 ? "B_{p-3}" : ep.special == 1 ? "E_{p-3}" : "U_{p-3}"] = sp;
            const Value spv = e.calc.residue(Integer(sp), 1);
            const Integer pk = ipow(Integer(e.lp()), ep.k - 1);
            const Value corr = e.calc.mul(e.exact(ep.coef * Rational(pk)), spv);
            return chain(e, {{"u_{p-1}", u, 1}}, e.calc.add(main, corr));
        });
    }

    // ---- u_{(p-1)/2} mod p^2
    struct Half {
        const char* id;
        SeqTag t;
        std::function<bool(unsigned long)> app;
        const char* form;
        long base;
        long xscale;
        bool sym3;
        const char* desc;
        const char* applies;
    };
    const std::vector<Half> halves = {
        {"conj-4.3-i", SeqTag::LittleA, [](unsigned long p) { return p % 3 == 1 && p % 2 == 1; }, "x2+3y2", 9, 1, false,
         "a_{(p-1)/2} = (9^(p-1)+3) x^2 - 2p, p = x^2+3y^2 (mod p^2)", "p = 1 (mod 3)"},
        {"conj-4.3-ii", SeqTag::W, [](unsigned long p) { return p % 4 == 1; }, "x2+y2", 27, 1, false,
         "W_{(p-1)/2} = (27^(p-1)+3) x^2 - 2p, p = x^2+y^2, x odd (mod p^2)", "p = 1 (mod 4)"},
        {"conj-4.3-iii", SeqTag::Q, [](unsigned long p) { return in(p % 24, {1, 7}); }, "x2+6y2", 72, 1, true,
         "(3/p) Q_{(p-1)/2} = (72^(p-1)+3) x^2 - 2p, p = x^2+6y^2 (mod p^2)", "p = 1, 7 (mod 24)"},
        {"conj-4.3-iv", SeqTag::Q, [](unsigned long p) { return in(p % 24, {5, 11}); }, "2x2+3y2", 72, 2, true,
         "(3/p) Q_{(p-1)/2} = (72^(p-1)+3) 2x^2 - 2p, p = 2x^2+3y^2 (mod p^2)", "p = 5, 11 (mod 24)"},
    };
    for (const auto& hv : halves) {
        add(hv.id, hv.desc, hv.applies, 2, hv.app, [hv](EvalCtx& e) {
            Value u = e.exact(e.term(hv.t, (e.lp() - 1) / 2));
            if (hv.sym3) u = e.calc.scale(u, Q(e.leg(3)));
            const auto r = e.rep(hv.form);
            const Integer rhs = (ipow(Integer(hv.base), e.p - 1) + 3) * hv.xscale * r.x * r.x - 2 * e.lp();
            return chain(e, {{"u_{(p-1)/2}", u, 1}}, e.exact(rhs));
        });
    }

    // ---- heavy: u at (p^r - 1)/2
    struct Deep {
        const char* id;
        SeqTag t;
        std::function<bool(unsigned long)> app;
        const char* applies;
    };
    const std::vector<Deep> deeps = {
        {"conj-4.4-i", SeqTag::LittleA, [](unsigned long p) { return p > 3 && p % 3 == 2; }, "p > 3, p = 2 (mod 3)"},
        {"conj-4.4-ii", SeqTag::W, [](unsigned long p) { return p > 3 && p % 4 == 3; }, "p > 3, p = 3 (mod 4)"},
        {"conj-4.4-iii", SeqTag::Q, [](unsigned long p) { return p > 3 && in(p % 24, {13, 17, 19, 23}); },
         "p = 13, 17, 19, 23 (mod 24)"},
    };
    for (const auto& dp : deeps) {
        const std::string n = seq_short(dp.t);
        add(dp.id, n + "_{(p^2-1)/2} = p^2 (mod p^3) and " + n + "_{(p^r-1)/2} = 0 (mod p^r), r = 1, 2, 3", dp.applies, 3,
            dp.app,
            [dp](EvalCtx& e) {
                const long p = e.lp();
                const std::vector<long> idx = {(p - 1) / 2, (p * p - 1) / 2, (p * p * p - 1) / 2};
                const auto vals = recurrence_values_at(recurrence_for(dp.t), idx);
                std::vector<std::pair<std::string, Outcome>> parts;
                for (unsigned r = 1; r <= 3; ++r) {
                    parts.emplace_back("r=" + std::to_string(r) + " (mod p^" + std::to_string(r) + ")",
                                       check_equal(e.calc, r, "u_{(p^r-1)/2}", e.exact(vals[r - 1]), e.exact(Integer(0))));
                }
                parts.emplace_back("u_{(p^2-1)/2} = p^2 (mod p^3)",
                                   check_equal(e.calc, 3, "u_{(p^2-1)/2}", e.exact(vals[1]), e.exact(Integer(p * p))));
                return with_witness(combine(std::move(parts)), e);
            },
            true);
    }
    for (SeqTag t : {SeqTag::AperyPrime, SeqTag::Franel, SeqTag::S, SeqTag::LittleA, SeqTag::Q, SeqTag::W}) {
        const std::string n = seq_short(t);
        const Integer c = recurrence_for(t).c();
        add("conj-4.5-" + n, "4u_{(mp^2-1)/2} = (5 - c^(p-1)) u_{(p-1)/2} u_{(mp-1)/2} (mod p^2), m = 1, 3, 5, u = " + n,
            "p odd, p does not divide c", 2,
            [c](unsigned long p) { return p % 2 == 1 && !mpz_divisible_ui_p(c.get_mpz_t(), p); },
            [t, c](EvalCtx& e) {
                const long p = e.lp();
                const Integer f = 5 - ipow(c, e.p - 1);
                std::vector<std::pair<std::string, Outcome>> parts;
                for (long m : {1L, 3L, 5L}) {
                    const Value lhs = e.exact(Integer(4 * e.term(t, (m * p * p - 1) / 2)));
                    const Value rhs = e.exact(Integer(f * e.term(t, (p - 1) / 2) * e.term(t, (m * p - 1) / 2)));
                    parts.emplace_back("m=" + std::to_string(m), check_equal(e.calc, 2, "4u_{(mp^2-1)/2}", lhs, rhs));
                }
                return with_witness(combine(std::move(parts)), e);
            },
            true);
    }

    // ---- binomial-product sums mod p^3
    using BK = BinomKind;
    auto R4 = [](EvalCtx& e, const char* form) {
        const auto r = e.rep(form);
        return e.near_square(Q(4 * r.x * r.x));
    };

    add("conj-4.6-i", "sum C(2k,k)^3 = (-1)^((p-1)/2) sum C(2k,k)^3/4096^k = 4x^2-2p-p^2/(4x^2), p = x^2+7y^2 (mod p^3)",
        "p > 7, p = 1, 2, 4 (mod 7)", 3, [](unsigned long p) { return p > 7 && in(p % 7, {1, 2, 4}); },
        [R4](EvalCtx& e) {
            return chain(e,
                         {{"sum C(2k,k)^3", e.binom_sum(BK::CCC, 1), 1},
                          {"(-1)^((p-1)/2) sum C(2k,k)^3/4096^k", e.calc.scale(e.binom_sum(BK::CCC, 4096), e.sgn()), 1}},
                         R4(e, "x2+7y2"));
        });
    add("conj-4.6-ii", "sum C(2k,k)^3 = (352/9)(-1)^((p-1)/2) sum C(2k,k)^3/4096^k = c p^2 C(3[p/7],[p/7])^-2 (mod p^3)",
        "p > 7, p = 3, 5, 6 (mod 7)", 3, [](unsigned long p) { return p > 7 && in(p % 7, {3, 5, 6}); },
        [](EvalCtx& e) {
            const long q = e.lp() / 7;
            Rational c1;
            Value r2;
            if (e.p % 7 == 3) {
                c1 = Q(-11, 4);
                r2 = e.inv_binom_sq(Q(-11), 3 * e.lp() / 7, q);
            } else if (e.p % 7 == 5) {
                c1 = Q(-99, 64);
                r2 = e.inv_binom_sq(Q(-11), 6 * e.lp() / 7, 2 * e.lp() / 7);
            } else {
                c1 = Q(-25, 176);
                r2 = e.inv_binom_sq(Q(-11), 3 * e.lp() / 7, q + 1);
            }
            return chain(e,
                         {{"sum C(2k,k)^3", e.binom_sum(BK::CCC, 1), 1},
                          {"(-1)^((p-1)/2) sum C(2k,k)^3/4096^k", e.calc.scale(e.binom_sum(BK::CCC, 4096), e.sgn()), Q(352, 9)},
                          {"-11 p^2 C(.,.)^-2", r2, 1}},
                         e.inv_binom_sq(c1, 3 * q, q));
        });
    add("conj-4.7-i", "sum C(2k,k)^3/16^k = (-1)^((p-1)/2) sum C(2k,k)^3/256^k = 4x^2-2p-p^2/(4x^2), p = x^2+3y^2 (mod p^3)",
        "p > 3, p = 1 (mod 3)", 3, [](unsigned long p) { return p > 3 && p % 3 == 1; },
        [R4](EvalCtx& e) {
            return chain(e,
                         {{"sum C(2k,k)^3/16^k", e.binom_sum(BK::CCC, 16), 1},
                          {"(-1)^((p-1)/2) sum C(2k,k)^3/256^k", e.calc.scale(e.binom_sum(BK::CCC, 256), e.sgn()), 1}},
                         R4(e, "x2+3y2"));
        });
    add("conj-4.7-ii", "sum C(2k,k)^3/16^k = -8 (-1)^((p-1)/2) sum C(2k,k)^3/256^k = -p^2 C((p-1)/2,(p-5)/6)^-2 (mod p^3)",
        "p > 3, p = 2 (mod 3)", 3, [](unsigned long p) { return p > 3 && p % 3 == 2; },
        [](EvalCtx& e) {
            return chain(e,
                         {{"sum C(2k,k)^3/16^k", e.binom_sum(BK::CCC, 16), 1},
                          {"(-1)^((p-1)/2) sum C(2k,k)^3/256^k", e.calc.scale(e.binom_sum(BK::CCC, 256), e.sgn()), Q(-8)}},
                         e.inv_binom_sq(Q(-1), (e.lp() - 1) / 2, (e.lp() - 5) / 6));
        });
    add("conj-4.8-i",
        "sum C(2k,k)^3/(-8)^k = sum C(2k,k)^3/64^k = (-1)^((p-1)/4) sum C(2k,k)^3/(-512)^k = 4x^2-2p-p^2/(4x^2), p = x^2+y^2 (mod p^3)",
        "p = 1 (mod 4)", 3, [](unsigned long p) { return p % 4 == 1; },
        [R4](EvalCtx& e) {
            const long s = ((e.lp() - 1) / 4) % 2 == 0 ? 1 : -1;
            return chain(e,
                         {{"sum C(2k,k)^3/(-8)^k", e.binom_sum(BK::CCC, -8), 1},
                          {"sum C(2k,k)^3/64^k", e.binom_sum(BK::CCC, 64), 1},
                          {"(-1)^((p-1)/4) sum C(2k,k)^3/(-512)^k", e.calc.scale(e.binom_sum(BK::CCC, -512), s), 1}},
                         R4(e, "x2+y2"));
        });
    add("conj-4.8-ii",
        "sum C(2k,k)^3/(-8)^k = -3 sum C(2k,k)^3/64^k = 6(-1)^((p+1)/4) sum C(2k,k)^3/(-512)^k = (3/4)p^2 C((p-3)/2,(p-3)/4)^-2 (mod p^3)",
        "p > 3, p = 3 (mod 4)", 3, [](unsigned long p) { return p > 3 && p % 4 == 3; },
        [](EvalCtx& e) {
            const long s = ((e.lp() + 1) / 4) % 2 == 0 ? 1 : -1;
            return chain(e,
                         {{"sum C(2k,k)^3/(-8)^k", e.binom_sum(BK::CCC, -8), 1},
                          {"sum C(2k,k)^3/64^k", e.binom_sum(BK::CCC, 64), Q(-3)},
                          {"sum C(2k,k)^3/(-512)^k", e.binom_sum(BK::CCC, -512), Q(6 * s)}},
                         e.inv_binom_sq(Q(3, 4), (e.lp() - 3) / 2, (e.lp() - 3) / 4));
        });
    add("conj-4.9", "sum C(2k,k)^3/(-64)^k = (-1)^((p-1)/2)(4x^2-2p-p^2/(4x^2)) or c p^2 C([p/4],[p/8])^-2 (mod p^3)",
        "p odd", 3, odd, [R4](EvalCtx& e) {
            const Value s = e.binom_sum(BK::CCC, -64);
            Value target;
            if (in(e.p % 8, {1, 3})) target = e.calc.scale(R4(e, "x2+2y2"), e.sgn());
            else target = e.inv_binom_sq(e.p % 8 == 5 ? Q(1, 3) : Q(3, 2), e.lp() / 4, e.lp() / 8);
            return chain(e, {{"sum C(2k,k)^3/(-64)^k", s, 1}}, target);
        });
    add("conj-4.10-1", "sum_{n<p} A_n = 4x^2-2p-p^2/(4x^2) (p = x^2+2y^2) or c p^2 C([p/4],[p/8])^-2 (mod p^3)", "p odd", 3,
        odd, [R4](EvalCtx& e) {
            const Value s = e.seq_sum(SeqTag::Apery, 1);
            Value target;
            if (in(e.p % 8, {1, 3})) target = R4(e, "x2+2y2");
            else target = e.inv_binom_sq(e.p % 8 == 5 ? Q(17, 27) : Q(-17, 6), e.lp() / 4, e.lp() / 8);
            return chain(e, {{"sum A_n", s, 1}}, target);
        });
    add("conj-4.10-2", "sum_{n<p} (-1)^n A_n = 4x^2-2p-p^2/(4x^2) (p = x^2+3y^2) or (5/4)p^2 C((p-1)/2,(p-5)/6)^-2 (mod p^3)",
        "p odd, p != 3", 3, [](unsigned long p) { return p % 2 == 1 && p != 3; },
        [R4](EvalCtx& e) {
            const Value s = e.seq_sum(SeqTag::Apery, -1);
            const Value target = e.p % 3 == 1 ? R4(e, "x2+3y2") : e.inv_binom_sq(Q(5, 4), (e.lp() - 1) / 2, (e.lp() - 5) / 6);
            return chain(e, {{"sum (-1)^n A_n", s, 1}}, target);
        });
    auto m411 = [](EvalCtx& e, bool second) {
        std::vector<Member> ms = {{"sum C(2k,k)^2 C(3k,k)/8^k", e.binom_sum(BK::CC3, 8), 1},
                                  {"sum b_n", e.seq_sum(SeqTag::AZ, 1), second ? Q(-33, 47) : Q(1)},
                                  {"sum b_n/81^n", e.seq_sum(SeqTag::AZ, 81), second ? Q(-11, 117) : Q(1)},
                                  {"sum D_n/8^n", e.seq_sum(SeqTag::Domb, 8), second ? Q(33) : Q(1)}};
        return ms;
    };
    add("conj-4.11-i", "sum C(2k,k)^2C(3k,k)/8^k = sum b_n = sum b_n/81^n = sum D_n/8^n = 4x^2-2p-p^2/(4x^2), p = x^2+2y^2 (mod p^3)",
        "p > 3, p = 1, 3 (mod 8)", 3, [](unsigned long p) { return p > 3 && in(p % 8, {1, 3}); },
        [R4, m411](EvalCtx& e) { return chain(e, m411(e, false), R4(e, "x2+2y2")); });
    add("conj-4.11-ii",
        "sum C(2k,k)^2C(3k,k)/8^k = -(33/47) sum b_n = -(11/117) sum b_n/81^n = 33 sum D_n/8^n = c p^2 C([p/4],[p/8])^-2 (mod p^3)",
        "p > 3, p = 5, 7 (mod 8)", 3, [](unsigned long p) { return p > 3 && in(p % 8, {5, 7}); },
        [m411](EvalCtx& e) {
            return chain(e, m411(e, true), e.inv_binom_sq(e.p % 8 == 5 ? Q(11, 9) : Q(-11, 2), e.lp() / 4, e.lp() / 8));
        });
    auto m412 = [](EvalCtx& e, bool second) {
        const Value f4 = e.calc.scale(e.seq_sum(SeqTag::FourthPower, 1), Q(e.sym(3)));
        std::vector<Member> ms = {{"sum C(2k,k)^2C(3k,k)/(-27)^k", e.binom_sum(BK::CC3, -27), 1},
                                  {"sum C(2k,k)^2C(3k,k)/15^(3k)", e.binom_sum(BK::CC3, 3375), second ? Q(28) : Q(1)},
                                  {"(p/3) sum_n sum_k C(n,k)^4", f4, 1},
                                  {"sum D_n", e.seq_sum(SeqTag::Domb, 1), second ? Q(28, 53) : Q(1)},
                                  {"sum D_n/64^n", e.seq_sum(SeqTag::Domb, 64), second ? Q(-112, 13) : Q(1)}};
        return ms;
    };
    add("conj-4.12-1",
        "sum C(2k,k)^2C(3k,k)/(-27)^k = sum .../15^(3k) = (p/3) sum sum C(n,k)^4 = sum D_n = sum D_n/64^n = form value (mod p^3)",
        "p = 1, 17, 19, 23 (mod 30)", 3, [](unsigned long p) { return p > 5 && in(p % 30, {1, 17, 19, 23}); },
        [m412](EvalCtx& e) {
            Value target;
            if (in(e.p % 30, {1, 19})) {
                const auto r = e.rep("x2+15y2");
                target = e.near_square(Q(4 * r.x * r.x));
            } else {
                const auto r = e.rep("3x2+5y2");
                target = e.calc.neg(e.near_square(Q(12 * r.x * r.x)));
            }
            return chain(e, m412(e, false), target);
        });
    add("conj-4.12-2",
        "sum C(2k,k)^2C(3k,k)/(-27)^k = 28 sum .../15^(3k) = (p/3) sum sum C(n,k)^4 = (28/53) sum D_n = -(112/13) sum D_n/64^n = c p^2 5^[p/3] C([p/3],[p/15])^-2 (mod p^3)",
        "p = 7, 11, 13, 29 (mod 30)", 3, [](unsigned long p) { return p > 5 && in(p % 30, {7, 11, 13, 29}); },
        [m412](EvalCtx& e) {
            Rational c;
            switch (e.p % 30) {
                case 7: c = Q(7, 2); break;
                case 11: c = Q(14); break;
                case 13: c = Q(7, 32); break;
                default: c = Q(7, 8); break;
            }
            const Value target = e.inv_binom_sq(c * Rational(ipow(Integer(5), e.p / 3)), e.lp() / 3, e.lp() / 15);
            return chain(e, m412(e, true), target);
        });
    auto m413 = [](EvalCtx& e, bool second) {
        auto co = [second](long a, long b = 1) { return second ? Q(a, b) : Q(1); };
        std::vector<Member> ms = {{"sum C(2k,k)^2C(3k,k)/108^k", e.binom_sum(BK::CC3, 108), 1},
                                  {"sum C(2n,n) f_n/(-4)^n", e.seq_sum(SeqTag::Franel, -4, 0, 1, true), co(-1)}};
        if (!second) ms.push_back({"sum C(2k,k)^2C(3k,k)/1458^k", e.binom_sum(BK::CC3, 1458), 1});
        ms.push_back({"sum D_n/(-2)^n", e.seq_sum(SeqTag::Domb, -2), co(-1, 4)});
        ms.push_back({"sum D_n/4^n", e.seq_sum(SeqTag::Domb, 4), co(-1)});
        ms.push_back({"sum D_n/16^n", e.seq_sum(SeqTag::Domb, 16), co(2)});
        ms.push_back({"sum D_n/(-32)^n", e.seq_sum(SeqTag::Domb, -32), co(-1)});
        ms.push_back({"sum b_n/(-9)^n", e.seq_sum(SeqTag::AZ, -9), co(-2)});
        return ms;
    };
    add("conj-4.13-i", "eight sums (C(2k,k)^2C(3k,k), f, D, b weights) = 4x^2-2p-p^2/(4x^2), p = x^2+3y^2 (mod p^3)",
        "p > 3, p = 1 (mod 3)", 3, [](unsigned long p) { return p > 3 && p % 3 == 1; },
        [R4, m413](EvalCtx& e) { return chain(e, m413(e, false), R4(e, "x2+3y2")); });
    add("conj-4.13-ii", "seven sums with coefficients -1, -1/4, -1, 2, -1, -2 = -(p^2/2) C((p-1)/2,(p-5)/6)^-2 (mod p^3)",
        "p > 3, p = 2 (mod 3)", 3, [](unsigned long p) { return p > 3 && p % 3 == 2; },
        [m413](EvalCtx& e) {
            return chain(e, m413(e, true), e.inv_binom_sq(Q(-1, 2), (e.lp() - 1) / 2, (e.lp() - 5) / 6));
        });
    add("conj-4.14-i",
        "sum b_n/(-3)^n = sum b_n/(-27)^n = (p/3) sum C(2n,n) f_n/(-16)^n = sum C(2k,k)^2C(4k,2k)/(-12288)^k = form value (mod p^3)",
        "p = 1 (mod 4)", 3, [](unsigned long p) { return p % 4 == 1; },
        [](EvalCtx& e) {
            Value target;
            if (e.p % 12 == 1) {
                const auto r = e.rep("x2+9y2");
                target = e.near_square(Q(4 * r.x * r.x));
            } else {
                const auto r = e.rep("2p:x2+9y2");
                target = e.calc.neg(e.near_square(Q(2 * r.x * r.x)));
            }
            return chain(e,
                         {{"sum b_n/(-3)^n", e.seq_sum(SeqTag::AZ, -3), 1},
                          {"sum b_n/(-27)^n", e.seq_sum(SeqTag::AZ, -27), 1},
                          {"(p/3) sum C(2n,n) f_n/(-16)^n", e.calc.scale(e.seq_sum(SeqTag::Franel, -16, 0, 1, true), Q(e.sym(3))), 1},
                          {"sum C(2k,k)^2C(4k,2k)/(-12288)^k", e.binom_sum(BK::CC4, -12288), 1}},
                         target);
        });
    add("conj-4.14-ii",
        "sum b_n/(-3)^n = -15 sum b_n/(-27)^n = 10 sum C(2k,k)^2C(4k,2k)/(-12288)^k = c p^2 C([p/3],[p/12])^-2 (mod p^3)",
        "p > 3, p = 3 (mod 4)", 3, [](unsigned long p) { return p > 3 && p % 4 == 3; },
        [](EvalCtx& e) {
            return chain(e,
                         {{"sum b_n/(-3)^n", e.seq_sum(SeqTag::AZ, -3), 1},
                          {"sum b_n/(-27)^n", e.seq_sum(SeqTag::AZ, -27), Q(-15)},
                          {"sum C(2k,k)^2C(4k,2k)/(-12288)^k", e.binom_sum(BK::CC4, -12288), Q(10)}},
                         e.inv_binom_sq(e.p % 12 == 7 ? Q(-5, 3) : Q(5, 6), e.lp() / 3, e.lp() / 12));
        });
    auto m415 = [](EvalCtx& e, bool second) {
        std::vector<Member> ms = {
            {"(p/3) sum C(2n,n) W_n/(-27)^n", e.calc.scale(e.seq_sum(SeqTag::W, -27, 0, 1, true), Q(e.sym(3))), 1},
            {"sum C(2k,k)^2C(4k,2k)/81^k", e.binom_sum(BK::CC4, 81), second ? Q(-9, 40) : Q(1)},
            {"sum C(2k,k)^2C(4k,2k)/(-3969)^k", e.binom_sum(BK::CC4, -3969), second ? Q(45, 28) : Q(1)},
            {"(-15/p) sum C(2k,k)C(3k,k)C(6k,3k)/(-15)^(3k)", e.calc.scale(e.binom_sum(BK::C36, -3375), Q(e.leg(-15))),
             second ? Q(-375, 752) : Q(1)}};
        return ms;
    };
    add("conj-4.15-i", "four sums (W, C(2k,k)^2C(4k,2k), C(2k,k)C(3k,k)C(6k,3k)) = 4x^2-2p-p^2/(4x^2), p = x^2+7y^2 (mod p^3)",
        "p > 7, p = 1, 2, 4 (mod 7)", 3, [](unsigned long p) { return p > 7 && in(p % 7, {1, 2, 4}); },
        [R4, m415](EvalCtx& e) { return chain(e, m415(e, false), R4(e, "x2+7y2")); });
    add("conj-4.15-ii", "four sums with coefficients -9/40, 45/28, -375/752 = c p^2 C(3[p/7],[p/7])^-2 (mod p^3)",
        "p > 7, p = 3, 5, 6 (mod 7)", 3, [](unsigned long p) { return p > 7 && in(p % 7, {3, 5, 6}); },
        [m415](EvalCtx& e) {
            const Rational c = e.p % 7 == 3 ? Q(5, 16) : e.p % 7 == 5 ? Q(45, 256) : Q(125, 7744);
            const long q = e.lp() / 7;
            return chain(e, m415(e, true), e.inv_binom_sq(c, 3 * q, q));
        });
    auto m416 = [](EvalCtx& e, bool second) {
        std::vector<Member> ms = {
            {"sum C(2k,k)^2C(4k,2k)/256^k", e.binom_sum(BK::CC4, 256), 1},
            {"sum C(2k,k)^2C(4k,2k)/28^(4k)", e.binom_sum(BK::CC4, 614656), second ? Q(-441, 71) : Q(1)},
            {"(-5/p) sum C(2k,k)C(3k,k)C(6k,3k)/20^(3k)", e.calc.scale(e.binom_sum(BK::C36, 8000), Q(e.leg(-5))),
             second ? Q(-25, 7) : Q(1)}};
        return ms;
    };
    add("conj-4.16-i", "three sums = 4x^2-2p-p^2/(4x^2), p = x^2+2y^2 (mod p^3)", "p = 1, 3 (mod 8)", 3,
        [](unsigned long p) { return in(p % 8, {1, 3}); },
        [R4, m416](EvalCtx& e) { return chain(e, m416(e, false), R4(e, "x2+2y2")); });
    add("conj-4.16-ii", "three sums with coefficients -441/71, -25/7 = c p^2 C([p/4],[p/8])^-2 (mod p^3)",
        "p = 5, 7 (mod 8), p != 5, 7", 3, [](unsigned long p) { return p > 7 && in(p % 8, {5, 7}); },
        [m416](EvalCtx& e) {
            return chain(e, m416(e, true), e.inv_binom_sq(e.p % 8 == 5 ? Q(1, 3) : Q(-3, 2), e.lp() / 4, e.lp() / 8));
        });
    auto m417 = [](EvalCtx& e, bool second) {
        std::vector<Member> ms = {
            {"sum C(2k,k)^2C(4k,2k)/(-144)^k", e.binom_sum(BK::CC4, -144), 1},
            {"(p/5) sum C(2k,k)C(3k,k)C(6k,3k)/54000^k", e.calc.scale(e.binom_sum(BK::C36, 54000), Q(e.sym(5))),
             second ? Q(25) : Q(1)}};
        return ms;
    };
    add("conj-4.17-i", "two sums = 4x^2-2p-p^2/(4x^2), p = x^2+3y^2 (mod p^3)", "p = 1 (mod 3)", 3,
        [](unsigned long p) { return p % 2 == 1 && p % 3 == 1; },
        [R4, m417](EvalCtx& e) { return chain(e, m417(e, false), R4(e, "x2+3y2")); });
    add("conj-4.17-ii", "sum C(2k,k)^2C(4k,2k)/(-144)^k = 25 (p/5) sum .../54000^k = p^2 C((p-1)/2,(p-5)/6)^-2 (mod p^3)",
        "p = 2 (mod 3), p != 5", 3, [](unsigned long p) { return p % 2 == 1 && p != 5 && p % 3 == 2; },
        [m417](EvalCtx& e) {
            return chain(e, m417(e, true), e.inv_binom_sq(Q(1), (e.lp() - 1) / 2, (e.lp() - 5) / 6));
        });
    auto m418 = [](EvalCtx& e, bool second) {
        std::vector<Member> ms = {
            {"(p/3) sum C(2k,k)C(3k,k)C(6k,3k)/12^(3k)", e.calc.scale(e.binom_sum(BK::C36, 1728), Q(e.sym(3))), 1},
            {"(p/33) sum C(2k,k)C(3k,k)C(6k,3k)/66^(3k)", e.calc.scale(e.binom_sum(BK::C36, 287496), Q(e.sym(33))),
             second ? Q(121, 13) : Q(1)},
            {"sum C(2k,k)^2C(4k,2k)/648^k", e.binom_sum(BK::CC4, 648), second ? Q(-3) : Q(1)}};
        return ms;
    };
    add("conj-4.18-i", "three sums = 4x^2-2p-p^2/(4x^2), p = x^2+y^2, x odd (mod p^3)", "p = 1 (mod 4)", 3,
        [](unsigned long p) { return p > 3 && p % 4 == 1; },
        [R4, m418](EvalCtx& e) { return chain(e, m418(e, false), R4(e, "x2+y2")); });
    add("conj-4.18-ii", "three sums with coefficients 121/13, -3 = (5/12) p^2 C((p-3)/2,(p-3)/4)^-2 (mod p^3)",
        "p > 3, p = 3 (mod 4), p != 11", 3, [](unsigned long p) { return p > 3 && p != 11 && p % 4 == 3; },
        [m418](EvalCtx& e) {
            return chain(e, m418(e, true), e.inv_binom_sq(Q(5, 12), (e.lp() - 3) / 2, (e.lp() - 3) / 4));
        });
    auto m419 = [](EvalCtx& e, bool second) {
        std::vector<Member> ms = {
            {"sum C(2k,k)^2C(3k,k)/(-192)^k", e.binom_sum(BK::CC3, -192), 1},
            {"(10/p) sum C(2k,k)C(3k,k)C(6k,3k)/(-12288000)^k", e.calc.scale(e.binom_sum(BK::C36, -12288000), Q(e.leg(10))),
             second ? Q(800, 161) : Q(1)}};
        return ms;
    };
    add("conj-4.19-i", "two sums = L^2-2p-p^2/L^2, 4p = L^2+27M^2 (mod p^3)", "p > 5, p = 1 (mod 3)", 3,
        [](unsigned long p) { return p > 5 && p % 3 == 1; },
        [m419](EvalCtx& e) {
            const auto r = e.rep("4p:L2+27M2");
            return chain(e, m419(e, false), e.near_square(Q(r.x * r.x)));
        });
    add("conj-4.19-ii", "two sums (coefficient 800/161) = c p^2 C([2p/3],[p/12])^-2 = (3/4) p^2 C([2p/3],[p/3])^-2 (mod p^3)",
        "p > 5, p = 2 (mod 3)", 3, [](unsigned long p) { return p > 5 && p % 3 == 2; },
        [m419](EvalCtx& e) {
            auto ms = m419(e, true);
            ms.push_back({"(3/4) p^2 C([2p/3],[p/3])^-2", e.inv_binom_sq(Q(3, 4), 2 * e.lp() / 3, e.lp() / 3), 1});
            return chain(e, ms, e.inv_binom_sq(e.p % 12 == 5 ? Q(3) : Q(3, 49), 2 * e.lp() / 3, e.lp() / 12));
        });
    auto m420 = [](EvalCtx& e, bool second) {
        std::vector<Member> ms = {
            {"sum C(2k,k)^2C(3k,k)/64^k", e.binom_sum(BK::CC3, 64), 1},
            {"(-2/p) sum C(2k,k)C(3k,k)C(6k,3k)/(-32)^(3k)", e.calc.scale(e.binom_sum(BK::C36, -32768), Q(e.leg(-2))),
             second ? Q(160, 39) : Q(1)}};
        return ms;
    };
    add("conj-4.20-i", "two sums = u^2-2p-p^2/u^2, 4p = u^2+11v^2 (mod p^3)", "p != 2, 11, p = 1, 3, 4, 5, 9 (mod 11)", 3,
        [](unsigned long p) { return p % 2 == 1 && p != 11 && in(p % 11, {1, 3, 4, 5, 9}); },
        [m420](EvalCtx& e) {
            const auto r = e.rep("4p:x2+11y2");
            return chain(e, m420(e, false), e.near_square(Q(r.x * r.x)));
        });
    add("conj-4.20-ii", "two sums (coefficient 160/39) = -p^2 (c C(4f,2f)/(C(3f,f)C(6f,3f)))^2, f = [p/11] (mod p^3)",
        "p = 2, 6, 7, 8, 10 (mod 11)", 3, [](unsigned long p) { return p % 2 == 1 && in(p % 11, {2, 6, 7, 8, 10}); },
        [m420](EvalCtx& e) {
            const long f = e.lp() / 11;
            Rational c;
            switch (e.p % 11) {
                case 2: c = Q(5, 2); break;
                case 6: c = Q(13, 30); break;
                case 7: c = Q(85, 558); break;
                case 8: c = Q(7, 148); break;
                default: c = Q(29, 756); break;
            }
            const Rational g = c * Rational(binom_exact(4 * f, 2 * f)) / Rational(binom_exact(3 * f, f) * binom_exact(6 * f, 3 * f));
            return chain(e, m420(e, true), e.exact(-Rational(e.lp() * e.lp()) * g * g));
        });
    add("conj-4.21-i", "(-6/p) sum C(2k,k)C(3k,k)C(6k,3k)/(-96)^(3k) = u^2-2p-p^2/u^2, 4p = u^2+19v^2 (mod p^3)",
        "p != 2, 3, 19, (p/19) = 1", 3,
        [](unsigned long p) { return p > 3 && p != 19 && in(p % 19, {1, 4, 5, 6, 7, 9, 11, 16, 17}); },
        [](EvalCtx& e) {
            const auto r = e.rep("4p:x2+19y2");
            return chain(e,
                         {{"(-6/p) sum C(2k,k)C(3k,k)C(6k,3k)/(-96)^(3k)",
                           e.calc.scale(e.binom_sum(BK::C36, -884736), Q(e.leg(-6))), 1}},
                         e.near_square(Q(r.x * r.x)));
        });
    add("conj-4.21-ii", "sum C(2k,k)C(3k,k)C(6k,3k)/(-96)^(3k) = c p^2 (C(6f,3f)C(10f,2f)/(C(6f,f)C(10f,3f)C(10f,4f)))^2, f = [p/19] (mod p^3)",
        "p = 2, 3 (mod 19)", 3, [](unsigned long p) { return p > 3 && in(p % 19, {2, 3}); },
        [](EvalCtx& e) {
            const long f = e.lp() / 19;
            const Rational c = e.p % 19 == 2 ? Q(-985, 384) : Q(-197, 58080);
            const Rational g = Rational(binom_exact(6 * f, 3 * f) * binom_exact(10 * f, 2 * f)) /
                               Rational(binom_exact(6 * f, f) * binom_exact(10 * f, 3 * f) * binom_exact(10 * f, 4 * f));
            return chain(e, {{"sum C(2k,k)C(3k,k)C(6k,3k)/(-96)^(3k)", e.binom_sum(BK::C36, -884736), 1}},
                         e.exact(c * Rational(e.lp() * e.lp()) * g * g));
        });
    auto m422 = [](EvalCtx& e, bool second) {
        const Rational s3(e.sym(3));
        std::vector<Member> ms = {
            {"sum C(2k,k)^2C(3k,k)/216^k", e.binom_sum(BK::CC3, 216), 1},
            {"(p/3) sum C(2k,k)^2C(4k,2k)/48^(2k)", e.calc.scale(e.binom_sum(BK::CC4, 2304), s3), second ? Q(-7) : Q(1)},
            {"(p/3) sum b_n/9^n", e.calc.scale(e.seq_sum(SeqTag::AZ, 9), s3), second ? Q(7, 23) : Q(1)}};
        return ms;
    };
    add("conj-4.22-i", "three sums = 4x^2-2p-p^2/(4x^2) (p = x^2+6y^2) or 8x^2-2p-p^2/(8x^2) (p = 2x^2+3y^2) (mod p^3)",
        "p = 1, 5, 7, 11 (mod 24)", 3, [](unsigned long p) { return p > 3 && in(p % 24, {1, 5, 7, 11}); },
        [m422](EvalCtx& e) {
            Value target;
            if (in(e.p % 24, {1, 7})) {
                const auto r = e.rep("x2+6y2");
                target = e.near_square(Q(4 * r.x * r.x));
            } else {
                const auto r = e.rep("2x2+3y2");
                target = e.near_square(Q(8 * r.x * r.x));
            }
            return chain(e, m422(e, false), target);
        });
    add("conj-4.22-ii", "sum C(2k,k)^2C(3k,k)/216^k = -7 (p/3) sum .../48^(2k) = (7/23)(p/3) sum b_n/9^n (mod p^3)",
        "p = 13, 17, 19, 23 (mod 24)", 3, [](unsigned long p) { return in(p % 24, {13, 17, 19, 23}); },
        [m422](EvalCtx& e) { return chain_free(e, m422(e, true)); });
    add("conj-4.23", "sum_{k=1}^{p-1} k W_k/(-9)^k = 0 (mod p^2)", "p = 1 (mod 3)", 2,
        [](unsigned long p) { return p % 2 == 1 && p % 3 == 1; },
        [](EvalCtx& e) {
            return chain(e, {{"sum k W_k/(-9)^k", e.seq_sum(SeqTag::W, -9, 1, 0), 1}}, e.exact(Integer(0)));
        });
    add("conj-4.24", "sum C(2k,k) W_k/(-12)^k = L^2-2p (p = 1 mod 3, 4p = L^2+27M^2) or 0 (mod p^2)", "p > 3", 2, gt(3),
        [](EvalCtx& e) {
            Value target = e.exact(Integer(0));
            if (e.p % 3 == 1) {
                const auto r = e.rep("4p:L2+27M2");
                target = e.exact(Q(r.x * r.x - 2 * e.lp()));
            }
            return chain(e, {{"sum C(2k,k) W_k/(-12)^k", e.seq_sum(SeqTag::W, -12, 0, 1, true), 1}}, target);
        });
    add("conj-4.25", "sum C(2k,k) W_k/(n-12)^k = (n(n-12)/p) sum C(2k,k)C(3k,k)C(6k,3k)/n^(3k) (mod p^2), nine n",
        "p odd", 2, odd, [](EvalCtx& e) {
            std::vector<std::pair<std::string, Outcome>> parts;
            for (long n : {-640320L, -5280L, -960L, -96L, -32L, -15L, 20L, 66L, 255L}) {
                if ((n % e.lp()) == 0 || ((n - 12) % e.lp()) == 0) continue;
                const Value lhs = e.seq_sum(SeqTag::W, Q(n - 12), 0, 1, true);
                const Integer n3 = ipow(Integer(n), 3);
                const Value rhs = e.calc.scale(e.binom_sum(BK::C36, Rational(n3)), Q(e.leg(n * (n - 12))));
                parts.emplace_back("n=" + std::to_string(n), check_equal(e.calc, 2, "sum C(2k,k) W_k/(n-12)^k", lhs, rhs));
            }
            return with_witness(combine(std::move(parts)), e);
        });
    struct Series {
        const char* id;
        SeqTag t;
        long m, alpha, beta;
        unsigned k;
        const char* desc;
        std::function<Value(EvalCtx&)> rhs;
        std::function<bool(unsigned long)> app;
        const char* applies;
    };
    auto p_times = [](long c, long d, bool sym_form) {
        return [=](EvalCtx& e) { return e.exact(Q(c * (sym_form ? e.sym(d) : e.leg(d)) * e.lp())); };
    };
    const std::vector<Series> series = {
        {"conj-4.26-1", SeqTag::Franel, -16, 3, 1, 4, "sum C(2k,k)(3k+1) f_k/(-16)^k = (-1)^((p-1)/2) p + p^3 E_{p-3} (mod p^4)",
         [](EvalCtx& e) {
             const auto E = euler_mod(e.p, EulerKind::E);
             e.witness["E_{p-3}"] = E;
             return e.calc.add(e.exact(Q(e.sgn() * e.lp())),
                               e.calc.mul(e.exact(ipow(Integer(e.lp()), 3)), e.calc.residue(Integer(E), 1)));
         },
         gt(3), "p > 3"},
        {"conj-4.26-2", SeqTag::W, -27, 7, 2, 4, "sum C(2k,k)(7k+2) W_k/(-27)^k = 2(p/3) p - 4p^3 U_{p-3} (mod p^4)",
         [](EvalCtx& e) {
             const auto U = euler_mod(e.p, EulerKind::U);
             e.witness["U_{p-3}"] = U;
             return e.calc.add(e.exact(Q(2 * e.sym(3) * e.lp())),
                               e.calc.mul(e.exact(Integer(-4 * ipow(Integer(e.lp()), 3))), e.calc.residue(Integer(U), 1)));
         },
         gt(3), "p > 3"},
        {"conj-4.26-3", SeqTag::W, 8, 7, 3, 2, "sum C(2k,k)(7k+3) W_k/8^k = 3(-2/p) p (mod p^2)", p_times(3, -2, false), gt(3),
         "p > 3"},
        {"conj-4.26-4", SeqTag::W, 54, 7, 2, 2, "sum C(2k,k)(7k+2) W_k/54^k = 2(-3/p) p (mod p^2)", p_times(2, -3, false),
         gt(3), "p > 3"},
        {"conj-4.26-5", SeqTag::W, -44, 14, 3, 2, "sum C(2k,k)(14k+3) W_k/(-44)^k = 3(-11/p) p (mod p^2)",
         p_times(3, -11, false), [](unsigned long p) { return p > 3 && p != 11; }, "p > 3, p != 11"},
        {"conj-4.26-6", SeqTag::W, -108, 38, 7, 2, "sum C(2k,k)(38k+7) W_k/(-108)^k = 7(-3/p) p (mod p^2)",
         p_times(7, -3, false), gt(3), "p > 3"},
        {"conj-4.26-7", SeqTag::W, 243, 133, 26, 2, "sum C(2k,k)(133k+26) W_k/243^k = 26(-3/p) p (mod p^2)",
         p_times(26, -3, false), gt(3), "p > 3"},
        {"conj-4.26-8", SeqTag::W, -972, 602, 85, 2, "sum C(2k,k)(602k+85) W_k/(-972)^k = 85(-3/p) p (mod p^2)",
         p_times(85, -3, false), gt(3), "p > 3"},
        {"conj-4.26-9", SeqTag::W, -5292, 4154, 481, 2, "sum C(2k,k)(4154k+481) W_k/(-5292)^k = 481(-3/p) p (mod p^2)",
         p_times(481, -3, false), [](unsigned long p) { return p > 3 && p != 7; }, "p > 3, p != 7"},
    };
    for (const auto& s : series) {
        add(s.id, s.desc, s.applies, s.k, s.app, [s](EvalCtx& e) {
            const Value lhs = e.seq_sum(s.t, Q(s.m), s.alpha, s.beta, true);
            return chain(e, {{"weighted sum", lhs, 1}}, s.rhs(e));
        });
    }
    return R;
}

}  // namespace detail

inline const std::vector<Claim>& registry() {
    static const std::vector<Claim> R = detail::build_registry();
    return R;
}

inline const Claim& find_claim(const std::string& id) {
    for (const auto& c : registry()) {
        if (c.id == id) return c;
    }
    throw not_found("unknown claim '" + id + "'");
}

inline constexpr long kDefaultHeavyMax = 31;

/// Evaluates one claim at one prime. Heavy claims beyond heavy_max are skipped.
inline ClaimResult evaluate(const Claim& claim, unsigned long p, long heavy_max = kDefaultHeavyMax,
                            SequenceCache& cache = SequenceCache::global()) {
    const auto t0 = std::chrono::steady_clock::now();
    ClaimResult r;
    r.claim = claim.id;
    r.p = p;
    auto done = [&](ClaimResult res) {
        res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return res;
    };
    if (p < 3 || !is_prime(p) || !claim.applicable(p)) {
        r.status = Status::skipped;
        r.note = "not applicable";
        return done(r);
    }
    if (claim.heavy && static_cast<long>(p) > heavy_max) {
        r.status = Status::skipped;
        r.note = "beyond heavy bound " + std::to_string(heavy_max);
        return done(r);
    }
    try {
        EvalCtx e(p, claim.k, cache);
        Outcome o = claim.eval(e);
        r.status = o.status;
        r.lhs = std::move(o.lhs);
        r.rhs = std::move(o.rhs);
        r.witness = std::move(o.witness);
        r.note = std::move(o.note);
    } catch (const skip_claim& ex) {
        r.status = Status::skipped;
        r.note = ex.what();
    } catch (const not_invertible& ex) {
        r.status = Status::indeterminate;
        r.note = ex.what();
    } catch (const non_unit_division& ex) {
        r.status = Status::indeterminate;
        r.note = ex.what();
    }
    return done(r);
}

inline ClaimResult evaluate(const std::string& claim_id, unsigned long p, long heavy_max = kDefaultHeavyMax) {
    return evaluate(find_claim(claim_id), p, heavy_max);
}

}  // namespace apery
