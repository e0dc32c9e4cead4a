// Command-line front end: list | verify | seq | rep.

#include <apery/report.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>

namespace {

using namespace apery;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<long, long> parse_range(const std::string& s, const char* what) {
    const auto colon = s.find(':');
    try {
        std::size_t used = 0;
        if (colon == std::string::npos) {
            const long v = std::stol(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return {v, v};
        }
        const std::string a = s.substr(0, colon), b = s.substr(colon + 1);
        const long lo = std::stol(a, &used);
        if (used != a.size()) throw std::invalid_argument(a);
        const long hi = std::stol(b, &used);
        if (used != b.size()) throw std::invalid_argument(b);
        if (lo < 0 || lo > hi) throw std::invalid_argument(s);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw usage_error(std::string("bad ") + what + " range '" + s + "' (expected lo:hi with 0 <= lo <= hi)");
    }
}

unsigned default_jobs() {
    if (const char* env = std::getenv("APERY_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::logic_error&) {
        }
        std::cerr << "warning: ignoring APERY_JOBS='" << env << "'\n";
    }
    return 1;
}

int cmd_list() {
    for (const auto& c : registry()) {
        std::string flags;
        if (c.heavy) flags += " heavy";
        if (c.opt_in) flags += " opt-in";
        std::cout << std::left << std::setw(14) << c.id << " mod p^" << c.k << "  [" << c.applies << "]" << flags
                  << "\n    " << c.description << "\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string claims = "all";
    std::string primes = "3:100";
    unsigned jobs = 1;
    long heavy_max = kDefaultHeavyMax;
    std::string out;
    std::string format = "jsonl";
    bool fail_fast = false;
    bool timing = false;
};

int cmd_verify(const VerifyArgs& a) {
    std::vector<const Claim*> claims;
    try {
        claims = select_claims(a.claims);
    } catch (const not_found& e) {
        throw usage_error(e.what());
    }
    const auto [lo, hi] = parse_range(a.primes, "prime");
    if (a.jobs < 1) throw usage_error("--jobs must be >= 1");
    RunOptions opt;
    opt.lo = static_cast<unsigned long>(std::max(lo, 1L));
    opt.hi = static_cast<unsigned long>(std::max(hi, 1L));
    opt.jobs = a.jobs;
    opt.heavy_max = a.heavy_max;
    opt.fail_fast = a.fail_fast;

    const Report rep = run(claims, opt);
    const std::string body = a.format == "csv" ? to_csv(rep, a.timing) : to_jsonl(rep, a.timing);
    if (a.out.empty() || a.out == "-") {
        std::cout << body << std::flush;
    } else {
        write_atomic(a.out, body);
    }
    const auto t = rep.totals();
    std::cerr << "pairs " << rep.results.size() << ": verified " << t[0] << ", failed " << t[1] << ", skipped " << t[2]
              << ", indeterminate " << t[3] << (rep.truncated ? " (stopped at first failure)" : "") << "\n";
    for (const auto* r : rep.non_verified()) {
        if (r->status == Status::failed || r->status == Status::indeterminate)
            std::cerr << "  " << to_string(r->status) << " " << r->claim << " p=" << r->p << ": " << r->lhs << " vs "
                      << r->rhs << "\n";
    }
    return rep.any_failed() ? kExitFailed : kExitOk;
}

int cmd_seq(const std::string& id, const std::string& range, bool as_json) {
    SequenceId sid;
    try {
        sid = parse_seq_name(id);
    } catch (const not_found& e) {
        throw usage_error(e.what());
    }
    const auto [a, b] = parse_range(range, "index");
    auto w = SequenceCache::global().window(sid.tag, std::max(b, 1L));
    if (as_json) {
        json j;
        j["id"] = seq_name(sid);
        j["from"] = a;
        json vals = json::array();
        for (long n = a; n <= b; ++n) vals.push_back((*w)[static_cast<std::size_t>(n)].get_str());
        j["values"] = vals;
        std::cout << j.dump() << "\n";
    } else {
        for (long n = a; n <= b; ++n) std::cout << n << " " << (*w)[static_cast<std::size_t>(n)].get_str() << "\n";
    }
    return kExitOk;
}

int cmd_rep(unsigned long p, const std::string& form) {
    if (p < 2 || !is_prime(p)) throw usage_error("--p must be a prime");
    std::vector<const QuadForm*> forms;
    if (form.empty()) {
        for (const auto& f : quad_forms()) forms.push_back(&f);
    } else {
        try {
            forms.push_back(&quad_form(form));
        } catch (const not_found& e) {
            throw usage_error(e.what());
        }
    }
    for (const auto* f : forms) {
        std::cout << std::left << std::setw(14) << f->id;
        if (auto r = quad_rep(p, *f)) std::cout << "x = " << r->x << ", y = " << r->y << "\n";
        else std::cout << "not represented\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Congruence checker for Apery-like sequences"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "List registered claims");

    VerifyArgs va;
    va.jobs = default_jobs();
    auto* verify = app.add_subcommand("verify", "Evaluate claims over a prime range");
    verify->add_option("--claims", va.claims, "Ids, globs, prefix groups or all/theorems/conjectures (comma list)")
        ->capture_default_str();
    verify->add_option("--primes", va.primes, "Inclusive prime range lo:hi")->capture_default_str();
    verify->add_option("--jobs,-j", va.jobs, "Worker threads (default $APERY_JOBS or 1)")->capture_default_str();
    verify->add_option("--heavy-max", va.heavy_max, "Largest prime for heavy claims")->capture_default_str();
    verify->add_option("--out,-o", va.out, "Report path (default stdout)");
    verify->add_option("--format", va.format, "Report format")
        ->check(CLI::IsMember({"jsonl", "csv"}))
        ->capture_default_str();
    verify->add_flag("--fail-fast", va.fail_fast, "Stop at the first failed result");
    verify->add_flag("--timing", va.timing, "Include per-result milliseconds");

    std::string seq_id, seq_range = "0:10";
    bool seq_json = false;
    auto* seq = app.add_subcommand("seq", "Print exact sequence values");
    seq->add_option("--id", seq_id, "Sequence name (W, A, Ap, D, b, T, f, S, a, Q, F4)")->required();
    seq->add_option("--n", seq_range, "Index range a:b")->capture_default_str();
    seq->add_flag("--json", seq_json, "Emit JSON");

    unsigned long rep_p = 0;
    std::string rep_form;
    auto* rep = app.add_subcommand("rep", "Represent a prime by the catalogued quadratic forms");
    rep->add_option("--p", rep_p, "Prime")->required();
    rep->add_option("--form", rep_form, "Form id (default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*list) return cmd_list();
        if (*verify) return cmd_verify(va);
        if (*seq) return cmd_seq(seq_id, seq_range, seq_json);
        if (*rep) return cmd_rep(rep_p, rep_form);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
