#pragma once

/**
 * @file report.hpp
 * @brief Claim selection, the concurrent runner, and JSONL/CSV reports.
 *
 * Results are stored by (claim, prime) slot, so the report is the same for
 * any worker count.
 */

#include <apery/registry.hpp>

#include <fnmatch.h>

#include <array>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <unistd.h>

namespace apery {

inline constexpr const char* kVersion = "1.0.0";

/// Resolves a comma-separated selector. Each item is an exact id, a glob,
/// an id prefix group ("thm-2.1" -> "thm-2.1-a", ...), or one of the aliases
/// all / theorems / conjectures. Opt-in claims are only selected by name or glob.
inline std::vector<const Claim*> select_claims(const std::string& selector) {
    std::vector<bool> chosen(registry().size(), false);
    std::stringstream ss(selector);
    std::string item;
    bool any_item = false;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) continue;
        any_item = true;
        bool hit = false;
        for (std::size_t i = 0; i < registry().size(); ++i) {
            const Claim& c = registry()[i];
            bool m = false;
            if (item == "all") m = !c.opt_in;
            else if (item == "conjectures") m = !c.opt_in && c.id.rfind("conj-", 0) == 0;
            else if (item == "theorems") m = !c.opt_in && c.id.rfind("conj-", 0) != 0;
            else m = c.id == item || c.id.rfind(item + "-", 0) == 0 || fnmatch(item.c_str(), c.id.c_str(), 0) == 0;
            if (m) {
                chosen[i] = true;
                hit = true;
            }
        }
        if (!hit) throw not_found("selector '" + item + "' matches no claim");
    }
    if (!any_item) throw not_found("empty claim selector");
    std::vector<const Claim*> out;
    for (std::size_t i = 0; i < registry().size(); ++i) {
        if (chosen[i]) out.push_back(&registry()[i]);
    }
    return out;
}

struct RunOptions {
    unsigned long lo = 3;
    unsigned long hi = 100;
    unsigned jobs = 1;
    long heavy_max = kDefaultHeavyMax;
    bool fail_fast = false;
};

struct Report {
    RunOptions options;
    std::vector<std::string> claims;
    std::vector<ClaimResult> results;  // canonical order: claim, then p
    bool truncated = false;

    using Tally = std::array<std::size_t, 4>;  // indexed by Status

    Tally totals() const {
        Tally t{};
        for (const auto& r : results) ++t[static_cast<std::size_t>(r.status)];
        return t;
    }

    std::vector<std::pair<std::string, Tally>> per_claim() const {
        std::vector<std::pair<std::string, Tally>> out;
        for (const auto& id : claims) out.emplace_back(id, Tally{});
        for (const auto& r : results) {
            for (auto& [id, t] : out) {
                if (id == r.claim) {
                    ++t[static_cast<std::size_t>(r.status)];
                    break;
                }
            }
        }
        return out;
    }

    bool any_failed() const { return totals()[static_cast<std::size_t>(Status::failed)] > 0; }

    std::vector<const ClaimResult*> non_verified() const {
        std::vector<const ClaimResult*> out;
        for (const auto& r : results) {
            if (r.status != Status::verified) out.push_back(&r);
        }
        return out;
    }
};

inline Report run(const std::vector<const Claim*>& claims, const RunOptions& opt,
                  SequenceCache& cache = SequenceCache::global()) {
    if (opt.lo > opt.hi) throw invalid_argument("run: empty prime range");
    if (opt.jobs < 1) throw invalid_argument("run: jobs must be >= 1");
    Report rep;
    rep.options = opt;
    for (auto* c : claims) rep.claims.push_back(c->id);
    const std::vector<std::uint64_t> primes =
        opt.hi < 3 ? std::vector<std::uint64_t>{} : primes_in(PrimeRange(std::max(opt.lo, 3UL), opt.hi));

    std::vector<std::pair<const Claim*, unsigned long>> tasks;
    for (auto* c : claims) {
        for (auto p : primes) tasks.emplace_back(c, p);
    }
    std::vector<ClaimResult> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_fail{tasks.size()};

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            if (opt.fail_fast && i > first_fail.load()) continue;
            slots[i] = evaluate(*tasks[i].first, tasks[i].second, opt.heavy_max, cache);
            if (opt.fail_fast && slots[i].status == Status::failed) {
                std::size_t cur = first_fail.load();
                while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const unsigned n = std::min<std::size_t>(opt.jobs, std::max<std::size_t>(tasks.size(), 1));
        for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
        worker();
    }
    std::size_t end = tasks.size();
    if (opt.fail_fast && first_fail.load() < tasks.size()) {
        end = first_fail.load() + 1;
        rep.truncated = end < tasks.size();
    }
    slots.resize(end);
    rep.results = std::move(slots);
    return rep;
}

// --------------------------------------------------------------------------
// Serialization

inline json result_json(const ClaimResult& r, bool timing) {
    json j;
    j["claim"] = r.claim;
    j["p"] = r.p;
    j["status"] = to_string(r.status);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["witness"] = r.witness;
    if (!r.note.empty()) j["note"] = r.note;
    if (timing) j["ms"] = r.ms;
    return j;
}

inline json summary_json(const Report& rep) {
    auto tally = [](const Report::Tally& t) {
        json j;
        for (std::size_t s = 0; s < 4; ++s) j[to_string(static_cast<Status>(s))] = t[s];
        return j;
    };
    json j;
    j["summary"] = true;
    j["version"] = kVersion;
    j["primes"] = {{"lo", rep.options.lo}, {"hi", rep.options.hi}};
    j["heavy_max"] = rep.options.heavy_max;
    j["claims"] = rep.claims;
    j["pairs"] = rep.results.size();
    j["totals"] = tally(rep.totals());
    json pc = json::object();
    for (const auto& [id, t] : rep.per_claim()) pc[id] = tally(t);
    j["per_claim"] = pc;
    if (rep.truncated) j["truncated"] = true;
    return j;
}

inline std::string to_jsonl(const Report& rep, bool timing = false) {
    std::string out;
    for (const auto& r : rep.results) out += result_json(r, timing).dump() + "\n";
    out += summary_json(rep).dump() + "\n";
    return out;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

inline std::string to_csv(const Report& rep, bool timing = false) {
    std::string out = "claim,p,status,lhs,rhs,witness,note";
    if (timing) out += ",ms";
    out += "\n";
    for (const auto& r : rep.results) {
        out += csv_field(r.claim) + "," + std::to_string(r.p) + "," + to_string(r.status) + "," + csv_field(r.lhs) + "," +
               csv_field(r.rhs) + "," + csv_field(r.witness.dump()) + "," + csv_field(r.note);
        if (timing) out += "," + std::to_string(r.ms);
        out += "\n";
    }
    return out;
}

/// Writes via a sibling temporary and rename, so the target never holds a partial report.
inline void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string());
        f << content;
        f.flush();
        if (!f) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("write failed: " + tmp.string());
        }
    }
    fs::rename(tmp, target);
}

}  // namespace apery
