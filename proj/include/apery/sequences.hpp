#pragma once

/**
 * @file sequences.hpp
 * @brief Apery-like integer sequences: closed binomial sums, the generalized
 *        three-term recurrence (n+1)^r u_{n+1} = b(n) u_n - c n^r u_{n-1},
 *        and the exact identities that involve no primes.
 */

#include <apery/arith.hpp>
#include <apery/series.hpp>

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace apery {

enum class SeqTag {
    W,            // sum C(2k,k)C(3k,k)C(n,3k)(-3)^(n-3k)
    Wx,           // W_n(x), parameterized
    Apery,        // A_n
    AperyPrime,   // A'_n
    Domb,         // D_n
    AZ,           // Almkvist-Zudilin b_n
    T,            // T_n
    Franel,       // f_n
    S,            // S_n
    LittleA,      // a_n
    Q,            // Q_n
    FourthPower,  // sum_k C(n,k)^4
};

struct SequenceId {
    SeqTag tag = SeqTag::W;
    Rational x = 0;  // only meaningful for Wx

    static SequenceId wx(const Rational& x) { return {SeqTag::Wx, x}; }

    friend bool operator==(const SequenceId& a, const SequenceId& b) {
        return a.tag == b.tag && (a.tag != SeqTag::Wx || a.x == b.x);
    }
    friend bool operator<(const SequenceId& a, const SequenceId& b) {
        if (a.tag != b.tag) return a.tag < b.tag;
        return a.tag == SeqTag::Wx && a.x < b.x;
    }
};

/// Short name used by ids and the CLI ("A", "Ap", "D", "b", ...).
inline std::string seq_name(const SequenceId& id) {
    switch (id.tag) {
        case SeqTag::W: return "W";
        case SeqTag::Wx: return "Wx(" + id.x.get_str() + ")";
        case SeqTag::Apery: return "A";
        case SeqTag::AperyPrime: return "Ap";
        case SeqTag::Domb: return "D";
        case SeqTag::AZ: return "b";
        case SeqTag::T: return "T";
        case SeqTag::Franel: return "f";
        case SeqTag::S: return "S";
        case SeqTag::LittleA: return "a";
        case SeqTag::Q: return "Q";
        case SeqTag::FourthPower: return "F4";
    }
    return "?";
}

inline SequenceId parse_seq_name(const std::string& name) {
    static const std::map<std::string, SeqTag> names = {
        {"W", SeqTag::W},      {"A", SeqTag::Apery},     {"Ap", SeqTag::AperyPrime}, {"A'", SeqTag::AperyPrime},
        {"D", SeqTag::Domb},   {"b", SeqTag::AZ},        {"T", SeqTag::T},           {"f", SeqTag::Franel},
        {"S", SeqTag::S},      {"a", SeqTag::LittleA},   {"Q", SeqTag::Q},           {"F4", SeqTag::FourthPower},
    };
    auto it = names.find(name);
    if (it == names.end()) throw not_found("unknown sequence '" + name + "'");
    return {it->second, 0};
}

// --------------------------------------------------------------------------
// Polynomials in n

/// Ascending coefficient list.
using Poly = std::vector<Rational>;

inline Rational poly_eval(const Poly& b, const Rational& n) {
    Rational acc = 0;
    for (auto it = b.rbegin(); it != b.rend(); ++it) acc = acc * n + *it;
    return acc;
}

inline Poly poly_trim(Poly b) {
    while (!b.empty() && b.back() == 0) b.pop_back();
    return b;
}

/// b(-1-n) as a coefficient list.
inline Poly poly_reflect(const Poly& b) {
    // Horner with (-1 - n) as the variable.
    Poly acc;
    for (auto it = b.rbegin(); it != b.rend(); ++it) {
        Poly next(acc.size() + 1, Rational(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i] -= acc[i];
            next[i + 1] -= acc[i];
        }
        next[0] += *it;
        acc = std::move(next);
    }
    return poly_trim(acc);
}

/// The triple (r, c, b(n)) of (n+1)^r u_{n+1} = b(n) u_n - c n^r u_{n-1}.
/// Construction enforces b(-1-n) = (-1)^r b(n).
class RecurrenceSpec {
public:
    RecurrenceSpec(unsigned r, Integer c, Poly bpoly) : r_(r), c_(std::move(c)), b_(poly_trim(std::move(bpoly))) {
        if (r_ < 1) throw invalid_argument("recurrence: r must be positive");
        if (c_ == 0) throw invalid_argument("recurrence: c must be nonzero");
        Poly expect = b_;
        if (r_ % 2) {
            for (auto& v : expect) v = -v;
        }
        if (poly_reflect(b_) != poly_trim(expect))
            throw invalid_argument("recurrence: b(-1-n) != (-1)^r b(n)");
    }

    /// (n+1)^3 u_{n+1} = (2n+1)(a n(n+1) + b) u_n - c n^3 u_{n-1}.
    static RecurrenceSpec first_kind(long a, long b, long c) {
        // (2n+1)(a n^2 + a n + b) = 2a n^3 + 3a n^2 + (a + 2b) n + b
        return {3, c, {Rational(b), Rational(a + 2 * b), Rational(3 * a), Rational(2 * a)}};
    }

    /// (n+1)^2 u_{n+1} = (a n(n+1) + b) u_n - c n^2 u_{n-1}.
    static RecurrenceSpec second_kind(long a, long b, long c) {
        return {2, c, {Rational(b), Rational(a), Rational(a)}};
    }

    /// Legendre polynomials P_n(x): r = 1, c = 1, b(n) = (2n+1) x.
    static RecurrenceSpec legendre(const Rational& x) {
        if (x == 0) throw invalid_argument("legendre spec: x must be nonzero");
        return {1, 1, {x, 2 * x}};
    }

    unsigned r() const { return r_; }
    const Integer& c() const { return c_; }
    const Poly& bpoly() const { return b_; }
    Rational b(long n) const { return poly_eval(b_, Rational(n)); }

    bool integral() const {
        for (auto& v : b_) {
            if (v.get_den() != 1) return false;
        }
        return true;
    }

private:
    unsigned r_;
    Integer c_;
    Poly b_;
};

struct SeqWindow {
    SequenceId id;
    std::vector<Rational> values;  // u_0 .. u_N
};

/// Exact iterates of the recurrence from u_0 = 1 and the given u_1.
inline SeqWindow recurrence_terms(const RecurrenceSpec& spec, const Rational& u1, long N, SequenceId id = {}) {
    if (N < 1) throw invalid_argument("recurrence_terms: N must be >= 1");
    SeqWindow w{id, {Rational(1), u1}};
    w.values.reserve(static_cast<std::size_t>(N) + 1);
    for (long n = 1; n < N; ++n) {
        const Rational nr = qpow(Rational(n), spec.r());
        const Rational n1r = qpow(Rational(n + 1), spec.r());
        const auto& u = w.values;
        w.values.push_back((spec.b(n) * u[n] - Rational(spec.c()) * nr * u[n - 1]) / n1r);
    }
    return w;
}

/// Integer-only variant: exact division at every step, throws if a step is not integral.
inline std::vector<Integer> recurrence_integers(const RecurrenceSpec& spec, long N) {
    if (!spec.integral()) throw invalid_argument("recurrence_integers: non-integral b(n)");
    std::vector<Integer> bcoef;
    for (auto& v : spec.bpoly()) bcoef.emplace_back(v.get_num());
    auto b_at = [&](long n) {
        Integer acc = 0;
        for (auto it = bcoef.rbegin(); it != bcoef.rend(); ++it) acc = acc * n + *it;
        return acc;
    };
    std::vector<Integer> u{1};
    if (N >= 1) u.push_back(b_at(0));
    u.reserve(static_cast<std::size_t>(N) + 1);
    Integer num, den;
    for (long n = 1; n < N; ++n) {
        num = b_at(n) * u[n] - spec.c() * ipow(Integer(n), spec.r()) * u[n - 1];
        den = ipow(Integer(n + 1), spec.r());
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
            throw invalid_argument("recurrence_integers: non-integral term at n = " + std::to_string(n + 1));
        Integer q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        u.push_back(std::move(q));
    }
    return u;
}

/// Exact values at the requested (ascending) indices, keeping only two terms
/// in memory. Used for indices ~ p^3/2 where full windows would be large.
inline std::vector<Integer> recurrence_values_at(const RecurrenceSpec& spec, const std::vector<long>& indices) {
    std::vector<Integer> out;
    if (indices.empty()) return out;
    std::vector<Integer> bcoef;
    for (auto& v : spec.bpoly()) bcoef.emplace_back(v.get_num());
    auto b_at = [&](long n) {
        Integer acc = 0;
        for (auto it = bcoef.rbegin(); it != bcoef.rend(); ++it) acc = acc * n + *it;
        return acc;
    };
    Integer prev = 1, cur = b_at(0), next, den;
    std::size_t want = 0;
    auto emit = [&](long n, const Integer& v) {
        while (want < indices.size() && indices[want] == n) {
            out.push_back(v);
            ++want;
        }
    };
    emit(0, prev);
    emit(1, cur);
    for (long n = 1; want < indices.size(); ++n) {
        next = b_at(n) * cur - spec.c() * ipow(Integer(n), spec.r()) * prev;
        den = ipow(Integer(n + 1), spec.r());
        mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), den.get_mpz_t());
        prev.swap(cur);
        cur.swap(next);
        emit(n + 1, cur);
    }
    return out;
}

/// The (r, c, b) of each recurrence-bearing named sequence.
inline RecurrenceSpec recurrence_for(SeqTag tag) {
    switch (tag) {
        case SeqTag::Apery: return RecurrenceSpec::first_kind(17, 5, 1);
        case SeqTag::Domb: return RecurrenceSpec::first_kind(10, 4, 64);
        case SeqTag::AZ: return RecurrenceSpec::first_kind(-7, -3, 81);
        case SeqTag::T: return RecurrenceSpec::first_kind(12, 4, 16);
        case SeqTag::AperyPrime: return RecurrenceSpec::second_kind(11, 3, -1);
        case SeqTag::Franel: return RecurrenceSpec::second_kind(7, 2, -8);
        case SeqTag::S: return RecurrenceSpec::second_kind(12, 4, 32);
        case SeqTag::LittleA: return RecurrenceSpec::second_kind(10, 3, 9);
        case SeqTag::Q: return RecurrenceSpec::second_kind(-17, -6, 72);
        case SeqTag::W: return RecurrenceSpec::second_kind(-9, -3, 27);
        default: throw invalid_argument("no recurrence for this sequence");
    }
}

/// The ten sequences carrying a three-term recurrence.
inline const std::vector<SeqTag>& recurrence_sequences() {
    static const std::vector<SeqTag> tags = {SeqTag::Apery, SeqTag::AperyPrime, SeqTag::Domb, SeqTag::AZ,
                                             SeqTag::T,     SeqTag::Franel,     SeqTag::S,    SeqTag::LittleA,
                                             SeqTag::Q,     SeqTag::W};
    return tags;
}

// --------------------------------------------------------------------------
// Closed sums

/// W_n(x) = sum_{k <= n/3} C(2k,k) C(3k,k) C(n,3k) x^(n-3k).
inline Rational w_poly(long n, const Rational& x) {
    Rational acc = 0;
    for (long k = 0; 3 * k <= n; ++k) {
        acc += Rational(binom_exact(2 * k, k) * binom_exact(3 * k, k) * binom_exact(n, 3 * k)) * qpow(x, n - 3 * k);
    }
    return acc;
}

inline Integer franel_exact(long n) {
    Integer acc = 0;
    for (long k = 0; k <= n; ++k) acc += ipow(binom_exact(n, k), 3);
    return acc;
}

/// Franel numbers by the second displayed form sum C(n,k)^2 C(2k,n).
inline Integer franel_exact_alt(long n) {
    Integer acc = 0;
    for (long k = 0; k <= n; ++k) {
        const Integer c = binom_exact(n, k);
        acc += c * c * binom_exact(2 * k, n);
    }
    return acc;
}

/// S_n by the second displayed form sum C(n,k) C(2k,k) C(2n-2k,n-k).
inline Integer s_exact_alt(long n) {
    Integer acc = 0;
    for (long k = 0; k <= n; ++k) acc += binom_exact(n, k) * binom_exact(2 * k, k) * binom_exact(2 * n - 2 * k, n - k);
    return acc;
}

/// Exact u_n from the closed binomial-sum definition.
inline Integer seq_exact(const SequenceId& id, long n) {
    if (n < 0) throw invalid_argument("seq_exact: n must be nonnegative");
    Integer acc = 0;
    switch (id.tag) {
        case SeqTag::W:
            for (long k = 0; 3 * k <= n; ++k)
                acc += binom_exact(2 * k, k) * binom_exact(3 * k, k) * binom_exact(n, 3 * k) * ipow(Integer(-3), n - 3 * k);
            return acc;
        case SeqTag::Wx: {
            const Rational v = w_poly(n, id.x);
            if (v.get_den() != 1) throw invalid_argument("seq_exact: W_n(x) is not an integer");
            return v.get_num();
        }
        case SeqTag::Apery:
            for (long k = 0; k <= n; ++k) {
                const Integer t = binom_exact(n, k) * binom_exact(n + k, k);
                acc += t * t;
            }
            return acc;
        case SeqTag::AperyPrime:
            for (long k = 0; k <= n; ++k) {
                const Integer c = binom_exact(n, k);
                acc += c * c * binom_exact(n + k, k);
            }
            return acc;
        case SeqTag::Domb:
            for (long k = 0; k <= n; ++k) {
                const Integer c = binom_exact(n, k);
                acc += c * c * binom_exact(2 * k, k) * binom_exact(2 * n - 2 * k, n - k);
            }
            return acc;
        case SeqTag::AZ:
            for (long k = 0; 3 * k <= n; ++k)
                acc += binom_exact(2 * k, k) * binom_exact(3 * k, k) * binom_exact(n, 3 * k) * binom_exact(n + k, k) *
                       ipow(Integer(-3), n - 3 * k);
            return acc;
        case SeqTag::T:
            for (long k = 0; k <= n; ++k) {
                const Integer t = binom_exact(n, k) * binom_exact(2 * k, n);
                acc += t * t;
            }
            return acc;
        case SeqTag::Franel: return franel_exact(n);
        case SeqTag::S:
            for (long k = 0; 2 * k <= n; ++k) {
                const Integer c = binom_exact(2 * k, k);
                acc += c * c * binom_exact(n, 2 * k) * ipow(Integer(4), n - 2 * k);
            }
            return acc;
        case SeqTag::LittleA:
            for (long k = 0; k <= n; ++k) {
                const Integer c = binom_exact(n, k);
                acc += c * c * binom_exact(2 * k, k);
            }
            return acc;
        case SeqTag::Q:
            for (long k = 0; k <= n; ++k) acc += binom_exact(n, k) * ipow(Integer(-8), n - k) * franel_exact(k);
            return acc;
        case SeqTag::FourthPower:
            for (long k = 0; k <= n; ++k) acc += ipow(binom_exact(n, k), 4);
            return acc;
    }
    return acc;
}

/// Q_0..Q_N through a window of Franel numbers, O(n) work per term.
inline std::vector<Integer> q_window_from_franel(const std::vector<Integer>& f) {
    std::vector<Integer> q;
    q.reserve(f.size());
    for (std::size_t n = 0; n < f.size(); ++n) {
        Integer acc = 0, c = 1;
        Integer p8 = ipow(Integer(-8), static_cast<unsigned long>(n));
        for (std::size_t k = 0; k <= n; ++k) {
            acc += c * p8 * f[k];
            // C(n,k+1) = C(n,k)(n-k)/(k+1); (-8)^(n-k-1)
            c = c * static_cast<long>(n - k);
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
            if (k < n) mpz_divexact_ui(p8.get_mpz_t(), p8.get_mpz_t(), 8), p8 = -p8;
        }
        q.push_back(acc);
    }
    return q;
}

// --------------------------------------------------------------------------
// Memoized integer windows

/// u_0..u_N for named sequences, shared across threads. Concurrent callers
/// see value-identical windows; growth replaces the stored pointer.
class SequenceCache {
public:
    using Window = std::shared_ptr<const std::vector<Integer>>;

    Window window(SeqTag tag, long N) {
        {
            std::shared_lock lock(mu_);
            auto it = windows_.find(tag);
            if (it != windows_.end() && static_cast<long>(it->second->size()) > N) return it->second;
        }
        // grow geometrically so that ascending prime loops rebuild rarely
        long target = N;
        {
            std::shared_lock lock(mu_);
            auto it = windows_.find(tag);
            if (it != windows_.end()) target = std::max(N, 2 * static_cast<long>(it->second->size()));
        }
        auto fresh = std::make_shared<const std::vector<Integer>>(compute(tag, std::max(target, 1L)));
        std::unique_lock lock(mu_);
        auto& slot = windows_[tag];
        if (!slot || slot->size() < fresh->size()) slot = fresh;
        return slot;
    }

    static SequenceCache& global() {
        static SequenceCache cache;
        return cache;
    }

private:
    static std::vector<Integer> compute(SeqTag tag, long N) {
        if (tag == SeqTag::FourthPower) {
            std::vector<Integer> out;
            out.reserve(static_cast<std::size_t>(N) + 1);
            for (long n = 0; n <= N; ++n) {
                Integer acc = 0, c = 1;
                for (long k = 0; k <= n; ++k) {
                    acc += ipow(c, 4);
                    c = c * (n - k);
                    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
                }
                out.push_back(acc);
            }
            return out;
        }
        return recurrence_integers(recurrence_for(tag), N);
    }

    std::shared_mutex mu_;
    std::map<SeqTag, Window> windows_;
};

// --------------------------------------------------------------------------
// Exact identities

/// sum_k C(n,k) W_k(x) y^(n-k) == W_n(x+y).
inline bool shift_identity_check(long n, const Rational& x, const Rational& y) {
    Rational lhs = 0;
    for (long k = 0; k <= n; ++k) lhs += Rational(binom_exact(n, k)) * w_poly(k, x) * qpow(y, n - k);
    return lhs == w_poly(n, x + y);
}

/// sum_{k<n} b(k) (-c)^(n-1-k) u_k^2 == n^r u_n u_{n-1}, exactly.
inline bool bilinear_sum_identity(const RecurrenceSpec& spec, long n) {
    if (n < 1) throw invalid_argument("bilinear_sum_identity: n must be >= 1");
    const auto w = recurrence_terms(spec, spec.b(0), std::max(n, 1L));
    const auto& u = w.values;
    Rational lhs = 0;
    const Rational mc = -Rational(spec.c());
    for (long k = 0; k < n; ++k) lhs += spec.b(k) * qpow(mc, n - 1 - k) * u[k] * u[k];
    return lhs == qpow(Rational(n), spec.r()) * u[n] * u[n - 1];
}

/// Both sides of (sum W_k x^k)^2 = 1/(1-27x^2) sum C(2k,k) (x(1+9x+27x^2)/(1-27x^2)^2)^k W_k
/// as formal series through x^N. With W_1 = -3 the inner argument carries no minus sign;
/// the signed form holds for (-1)^k W_k instead.
inline bool series_square_check(std::size_t N) {
    const auto order = N;
    std::vector<Rational> w;
    for (std::size_t k = 0; k <= order; ++k) w.emplace_back(seq_exact({SeqTag::W}, static_cast<long>(k)));

    const TruncatedSeries gen(order, w);
    const TruncatedSeries lhs = gen * gen;

    TruncatedSeries one_minus(order);
    one_minus[0] = 1;
    if (order >= 2) one_minus[2] = -27;
    const TruncatedSeries inv = one_minus.inverse();

    TruncatedSeries cubic(order);  // x(1 + 9x + 27x^2)
    if (order >= 1) cubic[1] = 1;
    if (order >= 2) cubic[2] = 9;
    if (order >= 3) cubic[3] = 27;
    const TruncatedSeries inner = cubic * inv * inv;

    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k <= order; ++k) coeffs.push_back(Rational(binom_exact(2 * static_cast<long>(k), static_cast<long>(k))) * w[k]);
    const TruncatedSeries rhs = inv * TruncatedSeries::compose(coeffs, inner);
    return lhs == rhs;
}

}  // namespace apery
