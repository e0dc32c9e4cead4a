// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails; failing criteria print their counterexamples.

#include <apery/report.hpp>

#include <chrono>
#include <iostream>
#include <random>
#include <thread>

using namespace apery;

namespace {

struct Verdict {
    bool pass = true;
    std::vector<std::string> detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail.push_back(what);
        }
    }
};

unsigned workers() {
    if (const char* env = std::getenv("APERY_JOBS")) return static_cast<unsigned>(std::max(1L, std::atol(env)));
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Every result in range must be verified, or skipped as not applicable / beyond the heavy bound.
void require_clean(Verdict& v, const Report& rep) {
    for (const auto& r : rep.results) {
        if (r.status == Status::verified) continue;
        if (r.status == Status::skipped && r.note == "not applicable") continue;
        v.require(false, r.claim + " p=" + std::to_string(r.p) + " " + to_string(r.status) + ": lhs " + r.lhs +
                             ", rhs " + r.rhs + (r.note.empty() ? "" : " (" + r.note + ")") +
                             " witness " + r.witness.dump());
    }
}

Report run_range(const std::string& selector, unsigned long lo, unsigned long hi) {
    RunOptions opt;
    opt.lo = lo;
    opt.hi = hi;
    opt.jobs = workers();
    return run(select_claims(selector), opt);
}

Verdict dual_definitions() {
    Verdict v;
    for (SeqTag t : recurrence_sequences()) {
        const auto u = recurrence_integers(recurrence_for(t), 200);
        for (long n = 0; n <= 200; ++n) {
            v.require(u[static_cast<std::size_t>(n)] == seq_exact({t}, n), seq_name({t}) + " at n=" + std::to_string(n));
        }
    }
    return v;
}

Verdict identities() {
    Verdict v;
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    for (int i = 0; i < 20; ++i) {
        const Rational x = make_rational(num(rng), den(rng)), y = make_rational(num(rng), den(rng));
        for (long n = 0; n <= 40; ++n) {
            v.require(shift_identity_check(n, x, y),
                      "shift identity n=" + std::to_string(n) + " x=" + x.get_str() + " y=" + y.get_str());
        }
    }
    // sum_k C(n,k) W_k 3^(n-k) = C(2n/3, n/3) C(n, n/3) if 3 | n, else 0
    const auto w = recurrence_integers(recurrence_for(SeqTag::W), 60);
    for (long n = 0; n <= 60; ++n) {
        Integer s = 0, p3 = 1;
        for (long k = n; k >= 0; --k) {
            s += binom_exact(n, k) * w[static_cast<std::size_t>(k)] * p3;
            p3 *= 3;
        }
        const Integer want = n % 3 ? Integer(0) : Integer(binom_exact(2 * n / 3, n / 3) * binom_exact(n, n / 3));
        v.require(s == want, "binomial transform of W at n=" + std::to_string(n));
    }
    for (SeqTag t : recurrence_sequences()) {
        for (long n = 1; n <= 100; ++n) {
            v.require(bilinear_sum_identity(recurrence_for(t), n), "bilinear sum " + seq_name({t}) + " n=" + std::to_string(n));
        }
    }
    v.require(series_square_check(30), "series square identity through x^30");
    return v;
}

Verdict theorem_suite() {
    Verdict v;
    require_clean(v, run_range("thm-2.1,thm-2.2", 5, 2000));
    require_clean(v, run_range("thm-2.3,thm-2.4,thm-2.5,thm-2.6,thm-2.7,thm-2.8,thm-2.9,thm-2.10,cong-2.1,cong-2.2", 3, 1000));
    require_clean(v, run_range("lem-2.2,lem-2.4,thm-2.11,cor-2.1", 3, 300));
    return v;
}

Verdict recurrence_suite() {
    Verdict v;
    require_clean(v, run_range("thm-3.1,cor-3.1", 3, 200));
    require_clean(v, run_range("thm-3.2,cor-3.2", 3, 13));
    require_clean(v, run_range("thm-3.3", 3, 100));
    return v;
}

Verdict conjecture_suite() {
    Verdict v;
    require_clean(v, run_range("conj-4.1,conj-4.2", 5, 500));
    require_clean(v, run_range("conj-4.3,conj-4.6,conj-4.7,conj-4.8,conj-4.9,conj-4.10,conj-4.11,conj-4.12,conj-4.13,"
                               "conj-4.14,conj-4.15,conj-4.16,conj-4.17,conj-4.18,conj-4.19,conj-4.20,conj-4.21,"
                               "conj-4.22,conj-4.23,conj-4.24,conj-4.25,conj-4.26",
                               3, 300));
    require_clean(v, run_range("conj-4.4,conj-4.5", 3, 31));
    return v;
}

Verdict anchors() {
    Verdict v;
    const auto r = evaluate("thm-2.2", 13);
    v.require(r.status == Status::verified, "thm-2.2 at 13 not verified");
    v.require(r.lhs == "0:10 (mod 13^1)" && r.rhs == r.lhs, "thm-2.2 at 13: lhs " + r.lhs + ", rhs " + r.rhs);
    v.require(r.witness.value("rep", json::object()).value("x", 0) == 3 &&
                  r.witness.value("rep", json::object()).value("y", 0) == 2,
              "thm-2.2 at 13 witness " + r.witness.dump());
    const ModCtx c7(7, 1);
    v.require(c7.to_residue(weighted_sum({SeqTag::W}, -3, 0, 1, false, c7)) == 6, "sum W_k/(-3)^k mod 7");
    const auto L = quad_rep(7, quad_form("4p:L2+27M2"));
    v.require(L && L->x == 1, "4*7 = L^2 + 27 M^2 with L = 1");
    const std::vector<long> prefix = {1, -3, 9, -21};
    auto w = SequenceCache::global().window(SeqTag::W, 3);
    for (long n = 0; n < 4; ++n) v.require((*w)[static_cast<std::size_t>(n)] == prefix[static_cast<std::size_t>(n)], "W prefix");
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Verdict (*)()>> criteria = {
        {"1 dual definitions (ten sequences, n <= 200)", dual_definitions},
        {"2 identity suite", identities},
        {"3 theorem suite", theorem_suite},
        {"4 recurrence-structure suite", recurrence_suite},
        {"5 conjecture suite", conjecture_suite},
        {"6 numeric anchors", anchors},
    };
    bool all = true;
    for (const auto& [name, fn] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = fn();
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << name << "  (" << s << " s, " << workers()
                  << " workers)\n";
        for (const auto& d : v.detail) std::cout << "      " << d << "\n";
        all = all && v.pass;
    }
    return all ? 0 : 1;
}
