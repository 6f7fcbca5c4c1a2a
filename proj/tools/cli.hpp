#pragma once

// Command-line front end. Lives in a header so the test suite can drive it
// in-process through run_cli().

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "eiscong/combinatorial.hpp"
#include "eiscong/reproduce.hpp"

namespace eiscong::cli {

using nlohmann::json;

inline constexpr const char* kCacheEnv = "EISCONG_BERNOULLI_CACHE";

enum class OutputFormat { Jsonl, Json, Csv, Human };

struct RunConfig {
    std::string command;
    std::string target;  // statement, example or conjecture id
    std::string p = "5", m = "1", kstar = "auto", alpha = "0", d = "2", k, k2, n = "1", j, s, r, weight;
    std::string kind = "G";
    std::optional<std::size_t> precision;
    std::string out;
    std::string cache;
    std::string format = "jsonl";
    std::vector<std::size_t> exponents;
    std::optional<long> sharpness;
    bool miller = false;
    bool exact = false;
    std::string valuations;
    unsigned jobs = 0;
    long budget_bernoulli = 4000;
    double time_limit = 0;  // soft, seconds per record; 0 disables
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline long parse_long(const std::string& text) {
    try {
        std::size_t used = 0;
        long v = std::stol(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + text + "'");
    }
}

/// "7", "1,3,5" or "0..10" (inclusive), or a comma list of those.
inline std::vector<long> parse_int_list(const std::string& text) {
    if (text.empty()) throw UsageError("empty parameter list");
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_long(item));
            continue;
        }
        long lo = parse_long(item.substr(0, dots)), hi = parse_long(item.substr(dots + 2));
        if (hi < lo) throw UsageError("empty range '" + item + "'");
        for (long v = lo; v <= hi; ++v) out.push_back(v);
    }
    return out;
}

inline std::uint64_t as_prime(long p) {
    if (p < 5 || !is_prime(static_cast<std::uint64_t>(p))) throw UsageError("p must be a prime >= 5, got " + std::to_string(p));
    return static_cast<std::uint64_t>(p);
}

/// Smallest even k* > m with (p-1) not dividing it.
inline long auto_kstar(std::uint64_t p, long m) {
    long k = m + 1 + (m + 1) % 2;
    while (k % static_cast<long>(p - 1) == 0) k += 2;
    return k;
}

inline OutputFormat parse_format(const std::string& f) {
    if (f == "jsonl") return OutputFormat::Jsonl;
    if (f == "json") return OutputFormat::Json;
    if (f == "csv") return OutputFormat::Csv;
    if (f == "human") return OutputFormat::Human;
    throw UsageError("unknown format '" + f + "'");
}

/// A record and whether it counts as a pass for the exit status.
struct Record {
    json value;
    bool ok;
};

using Task = std::function<Record()>;

inline json error_record(const std::string& statement, const json& params, const Error& e) {
    return {{"statement-id", statement},
            {"params", params},
            {"verdict", "Error"},
            {"error", std::string(to_string(e.code()))},
            {"message", e.what()}};
}

/// Wraps a report computation: library errors raised while computing (most
/// importantly BudgetExceeded) become distinct records.
inline Task report_task(std::string statement, json params, std::function<CongruenceReport()> fn) {
    return [statement = std::move(statement), params = std::move(params), fn = std::move(fn)]() -> Record {
        try {
            auto rep = fn();
            return {to_json(rep), rep.pass};
        } catch (const Error& e) {
            return {error_record(statement, params, e), false};
        }
    };
}

/// Runs tasks on a pool, returns records in task order.
inline std::vector<Record> run_tasks(const std::vector<Task>& tasks, unsigned jobs, double time_limit,
                                     std::ostream& err) {
    std::vector<Record> out(tasks.size());
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, std::max<std::size_t>(1, tasks.size()));
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            auto t0 = std::chrono::steady_clock::now();
            out[i] = tasks[i]();
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (time_limit > 0 && secs > time_limit) {
                std::lock_guard lock(err_mutex);
                err << "warning: record " << i << " took " << secs << "s (soft limit " << time_limit << "s)\n";
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return out;
}

inline std::string human_line(const json& rec) {
    std::ostringstream os;
    os << rec.value("statement-id", std::string("record"));
    if (rec.contains("params"))
        for (auto& [key, v] : rec["params"].items()) os << " " << key << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
    if (rec.contains("verdict")) os << "  " << rec["verdict"].get<std::string>();
    if (rec.contains("error")) os << " (" << rec["error"].get<std::string>() << ")";
    if (rec.contains("failure-detail") && !rec["failure-detail"].is_null()) os << "  " << rec["failure-detail"].dump();
    return os.str();
}

inline std::string csv_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

inline void write_records(std::ostream& os, const std::vector<Record>& recs, OutputFormat fmt,
                          const std::optional<json>& summary) {
    switch (fmt) {
        case OutputFormat::Jsonl:
            for (const auto& r : recs) os << r.value.dump() << "\n";
            if (summary) os << json{{"summary", *summary}}.dump() << "\n";
            break;
        case OutputFormat::Json: {
            json arr = json::array();
            for (const auto& r : recs) arr.push_back(r.value);
            json doc = summary ? json{{"records", arr}, {"summary", *summary}} : arr;
            os << doc.dump(2) << "\n";
            break;
        }
        case OutputFormat::Csv:
            os << "statement-id,verdict,certification,params,failure-detail\n";
            for (const auto& r : recs) {
                const auto& v = r.value;
                os << csv_escape(v.value("statement-id", std::string())) << ","
                   << csv_escape(v.value("verdict", std::string())) << ","
                   << csv_escape(v.value("certification", std::string())) << ","
                   << csv_escape(v.contains("params") ? v["params"].dump() : "{}") << ","
                   << csv_escape(v.contains("failure-detail") ? v["failure-detail"].dump() : "null") << "\n";
            }
            break;
        case OutputFormat::Human:
            for (const auto& r : recs) os << human_line(r.value) << "\n";
            if (summary) os << "passed " << (*summary)["pass"] << " of " << (*summary)["total"] << "\n";
            break;
    }
}

// ---- grid construction per statement -------------------------------------

struct Grid {
    std::vector<Task> tasks;
};

inline Grid build_verify_grid(const RunConfig& cfg) {
    Grid g;
    const std::string& id = cfg.target;
    Budget budget{cfg.budget_bernoulli};
    const std::size_t prec = cfg.precision.value_or(50);
    auto ps = [&] {
        std::vector<std::uint64_t> out;
        for (long p : parse_int_list(cfg.p)) out.push_back(as_prime(p));
        return out;
    };
    auto add = [&](const std::string& wire, json params, std::function<CongruenceReport()> fn) {
        g.tasks.push_back(report_task(wire, std::move(params), std::move(fn)));
    };
    // Preconditions are checked while building, before anything is computed.
    auto precondition = [](auto&& check) {
        try {
            check();
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    };

    if (id == "thm1" || id == "prop31") {
        const bool with_e = id == "thm1";
        for (auto p : ps())
            for (long m : parse_int_list(cfg.m)) {
                long ks = cfg.kstar == "auto" ? auto_kstar(p, m) : parse_long(cfg.kstar);
                precondition([&] { detail::require_kstar(p, m, ks); });
                if (m < 1) throw UsageError("m must be >= 1");
                for (long a : parse_int_list(cfg.alpha)) {
                    if (a < 0) throw UsageError("alpha must be >= 0");
                    json params = {{"p", p}, {"m", m}, {"kstar", ks}, {"alpha", a}, {"N", prec}};
                    add(with_e ? "Thm1.1" : "Prop3.1", params, [=] {
                        return with_e ? check_thm_gk(p, m, ks, a, prec, budget)
                                      : check_prop_gk_fixed(p, m, ks, a, prec, budget);
                    });
                }
            }
    } else if (id == "thm2" || id == "prop42") {
        const bool with_e = id == "thm2";
        for (auto p : ps())
            for (long m : parse_int_list(cfg.m)) {
                precondition([&] { detail::require_small_m(p, m); });
                for (long a : parse_int_list(cfg.alpha)) {
                    if (a < 1) throw UsageError("alpha must be >= 1");
                    json params = {{"p", p}, {"m", m}, {"alpha", a}, {"N", prec}};
                    add(with_e ? "Thm1.2" : "Prop4.2", params, [=] {
                        return with_e ? check_thm_ek(p, m, a, prec, budget) : check_prop_ek_fixed(p, m, a, prec, budget);
                    });
                }
            }
    } else if (id == "prop41" || id == "eq31") {
        const bool bern = id == "prop41";
        for (auto p : ps())
            for (long m : parse_int_list(cfg.m)) {
                if (bern) precondition([&] { detail::require_small_m(p, m); });
                for (long a : parse_int_list(cfg.alpha))
                    for (long d : parse_int_list(cfg.d)) {
                        if (d < 1) throw UsageError("d must be >= 1");
                        if (static_cast<std::uint64_t>(d) % p == 0) throw UsageError("DNotCoprime: p divides d");
                        if (a < (bern ? 1 : 0)) throw UsageError("alpha out of range");
                        auto du = static_cast<std::uint64_t>(d);
                        json params = {{"p", p}, {"m", m}, {"alpha", a}, {"d", d}};
                        add(bern ? "Prop4.1" : "Eq3.1", params, [=] {
                            return bern ? check_bernoulli_prop41(p, m, a, du, budget) : check_divisor_power(p, m, a, du);
                        });
                    }
            }
    } else if (id == "identity" || id == "telescoping") {
        for (long m : parse_int_list(cfg.m))
            for (long j = 1; j <= m - 1; ++j) {
                if (!cfg.j.empty() && !std::count(parse_int_list(cfg.j).begin(), parse_int_list(cfg.j).end(), j)) continue;
                for (long s = 0; s <= m - j - 1; ++s) {
                    if (!cfg.s.empty()) {
                        auto sl = parse_int_list(cfg.s);
                        if (!std::count(sl.begin(), sl.end(), s)) continue;
                    }
                    for (long a : parse_int_list(cfg.alpha)) {
                        if (a < 0) throw UsageError("alpha must be >= 0");
                        if (id == "identity") {
                            add("Prop3.2", {{"m", m}, {"j", j}, {"s", s}, {"alpha", a}},
                                [=] { return check_combin_identity(m, j, s, a); });
                        } else {
                            for (long r = s; r <= m - 1; ++r)
                                add("Eq3.3", {{"m", m}, {"j", j}, {"s", s}, {"alpha", a}, {"r", r}},
                                    [=] { return check_telescoping(m, j, s, a, r); });
                        }
                    }
                }
            }
    } else if (id == "sun97") {
        for (auto p : ps()) {
            long n_max = 0;
            for (long n : parse_int_list(cfg.n)) n_max = std::max(n_max, n);
            if (n_max < 1) throw UsageError("n must be >= 1");
            auto wanted = parse_int_list(cfg.n);
            for (long n : wanted)
                add("Sun97", {{"p", p}, {"n", n}}, [=] { return check_sun97(p, n, budget).back(); });
        }
    } else if (id == "kummer") {
        if (cfg.k.empty() || cfg.k2.empty()) throw UsageError("kummer needs --k and --k2");
        for (auto p : ps())
            for (long k : parse_int_list(cfg.k))
                for (long k2 : parse_int_list(cfg.k2))
                    for (long r : parse_int_list(cfg.r.empty() ? "1" : cfg.r))
                        add("Kummer", {{"p", p}, {"k", k}, {"k2", k2}, {"r", r}},
                            [=] { return check_kummer(p, k, k2, r, budget); });
    } else if (id == "cvs") {
        if (cfg.k.empty()) throw UsageError("cvs needs --k");
        for (long k : parse_int_list(cfg.k))
            add("ClausenVonStaudt", {{"k", k}}, [=] { return check_clausen_von_staudt(k); });
    } else if (id == "eq14") {
        if (cfg.k.empty() || cfg.k2.empty()) throw UsageError("eq14 needs --k and --k2");
        for (auto p : ps())
            for (long k : parse_int_list(cfg.k))
                for (long k2 : parse_int_list(cfg.k2))
                    add("Eq1.4", {{"p", p}, {"k", k}, {"k2", k2}, {"N", prec}},
                        [=] { return check_gk_mod_p(p, k, k2, prec); });
    } else if (id == "eq16") {
        if (cfg.k.empty()) throw UsageError("eq16 needs --k (k0)");
        for (auto p : ps())
            for (long m : parse_int_list(cfg.m))
                for (long k0 : parse_int_list(cfg.k))
                    add("Eq1.6", {{"p", p}, {"m", m}, {"k0", k0}, {"N", prec}},
                        [=] { return check_gk_mod_pm(p, m, k0, prec, budget); });
    } else if (id == "cor13" || id == "cor14" || id == "refined") {
        if (cfg.k.empty()) throw UsageError(id + " needs --k");
        for (auto p : ps())
            for (long m : parse_int_list(cfg.m))
                for (long k : parse_int_list(cfg.k)) {
                    if (m < 1) throw UsageError("m must be >= 1");
                    auto mu = static_cast<unsigned>(m);
                    json params = {{"p", p}, {"m", m}, {"k", k}};
                    if (id == "cor13")
                        add("Cor1.3", params, [=] { return check_factor_bound_g(p, mu, k); });
                    else if (id == "cor14")
                        add("Cor1.4", params, [=] { return check_factor_bound_e(p, mu, k); });
                    else
                        add("Cor5.x", params, [=] { return verify_refined_bounds(p, mu, k); });
                }
    } else {
        throw UsageError("unknown statement '" + id +
                         "' (thm1 thm2 prop31 prop41 prop42 eq31 identity telescoping sun97 kummer cvs eq14 eq16 cor13 cor14 refined)");
    }
    return g;
}

inline Grid build_scan_grid(const RunConfig& cfg) {
    Grid g;
    Budget budget{cfg.budget_bernoulli};
    const std::string& id = cfg.target;
    if (id != "eq6.4" && id != "eq6.1") throw UsageError("unknown conjecture '" + id + "' (eq6.4 eq6.1)");
    for (long pl : parse_int_list(cfg.p)) {
        auto p = as_prime(pl);
        for (long m : parse_int_list(cfg.m)) {
            if (m < 1) throw UsageError("m must be >= 1");
            long ks = cfg.kstar == "auto" ? smallest_multiple_above(p, m) : parse_long(cfg.kstar);
            if (ks <= m || ks % static_cast<long>(p - 1) != 0)
                throw UsageError("k* must be a multiple of p-1 greater than m");
            for (long a : parse_int_list(cfg.alpha)) {
                if (a < 0) throw UsageError("alpha must be >= 0");
                json params = {{"p", p}, {"m", m}, {"kstar", ks}, {"alpha", a}};
                if (id == "eq6.4") {
                    g.tasks.push_back(report_task("ConjEq6.4", params, [=] {
                        return scan_conjecture_bernoulli(p, m, a, a, ks, budget).front();
                    }));
                } else {
                    std::size_t prec = cfg.precision.value_or(40);
                    params["N"] = prec;
                    g.tasks.push_back(report_task("ConjEq6.1", params, [=] {
                        return scan_conjecture_ek_series(p, m, ks, a, prec, budget);
                    }));
                }
            }
        }
    }
    return g;
}

// ---- commands --------------------------------------------------------------

inline int cmd_bernoulli(const RunConfig& cfg, std::ostream& out) {
    if (cfg.k.empty()) throw UsageError("bernoulli needs --k (index or range)");
    auto ks = parse_int_list(cfg.k);
    std::vector<std::uint64_t> primes;
    if (!cfg.valuations.empty())
        for (long p : parse_int_list(cfg.valuations)) {
            if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw UsageError("valuation needs primes");
            primes.push_back(static_cast<std::uint64_t>(p));
        }
    for (long k : ks) {
        if (k < 0) throw UsageError("Bernoulli index must be >= 0");
        if (k > cfg.budget_bernoulli) throw UsageError("index " + std::to_string(k) + " exceeds --budget-bernoulli");
    }
    auto fmt = parse_format(cfg.format);
    std::vector<Record> recs;
    for (long k : ks) {
        auto b = bernoulli(k);
        json rec = {{"k", k}, {"value", to_decimal(b)}};
        if (!primes.empty()) {
            json vals = json::object();
            for (auto p : primes) {
                auto v = padic_valuation(b, p);
                vals[std::to_string(p)] = v.is_infinite() ? json("inf") : json(v.value());
            }
            rec["valuations"] = vals;
        }
        recs.push_back({rec, true});
    }
    if (fmt == OutputFormat::Human) {
        for (auto& r : recs) {
            out << "B_" << r.value["k"] << " = " << r.value["value"].get<std::string>();
            if (r.value.contains("valuations"))
                for (auto& [p, v] : r.value["valuations"].items()) out << "  nu_" << p << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
            out << "\n";
        }
    } else {
        write_records(out, recs, fmt, std::nullopt);
    }
    return 0;
}

inline int cmd_series(const RunConfig& cfg, std::ostream& out) {
    std::size_t prec = cfg.precision.value_or(20);
    auto kind = cfg.kind;
    long k = cfg.weight.empty() ? 0 : parse_long(cfg.weight);
    json j;
    if (cfg.exact) {
        if (kind == "G") j = to_json(g_series_exact(k, prec));
        else if (kind == "E") j = to_json(e_series_exact(k, prec));
        else throw UsageError("--exact supports kinds G and E");
    } else {
        auto p = as_prime(parse_long(cfg.p));
        long m = parse_long(cfg.m);
        if (m < 1) throw UsageError("m must be >= 1");
        ResidueRing ring(p, static_cast<unsigned>(m));
        if (kind == "G") j = to_json(g_series(k, ring, prec));
        else if (kind == "E") j = to_json(e_series(k, ring, prec));
        else if (kind == "delta") j = to_json(delta_series(ring, prec));
        else if (kind == "efactor") j = to_json(e_factor(ring, prec).series);
        else if (kind == "monomial") {
            if (cfg.exponents.size() != 3) throw UsageError("monomial needs --exponents a,b,c");
            j = to_json(monomial_series(static_cast<unsigned>(cfg.exponents[0]), static_cast<unsigned>(cfg.exponents[1]),
                                        static_cast<unsigned>(cfg.exponents[2]), ring, prec));
        } else {
            throw UsageError("unknown series kind '" + kind + "' (G E delta efactor monomial)");
        }
    }
    j["kind"] = kind;
    if (kind == "G" || kind == "E") j["weight"] = k;
    out << j.dump() << "\n";
    return 0;
}

inline int cmd_filtration(const RunConfig& cfg, std::ostream& out) {
    if (cfg.weight.empty()) throw UsageError("filtration needs --weight");
    long k = parse_long(cfg.weight);
    auto p = as_prime(parse_long(cfg.p));
    long m = parse_long(cfg.m);
    if (m < 1) throw UsageError("m must be >= 1");
    if (cfg.kind != "G" && cfg.kind != "E") throw UsageError("filtration kind must be G or E");
    ResidueRing ring(p, static_cast<unsigned>(m));
    FiltrationOptions opts;
    opts.evidence_precision = cfg.precision;
    opts.form = cfg.miller ? BasisForm::Miller : BasisForm::Monomial;
    auto f = eisenstein_series({cfg.kind == "G" ? EisensteinKind::G : EisensteinKind::E, k}, ring,
                               cfg.precision.value_or(sturm_bound(k)));
    auto rep = factor_filtration_bound(f, k, opts, {{"kind", cfg.kind}, {"weight", k}});
    if (cfg.sharpness) {
        auto probe = sharpness_probe(f, k, *cfg.sharpness, opts);
        rep.sharpness = SharpnessVerdict{*cfg.sharpness, probe.solvable};
    }
    out << to_json(rep).dump() << "\n";
    return 0;
}

inline int cmd_reproduce(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const GoldenExample* g = find_golden(cfg.target);
    if (!g) throw UsageError("unknown example '" + cfg.target + "' (paper-7-8 paper-17-6)");
    auto res = run_reproduction(*g);
    out << to_json(res).dump() << "\n";
    for (const auto& d : res.mismatches) err << "mismatch: " << d << "\n";
    return res.matches() ? 0 : 1;
}

inline int cmd_grid(const Grid& grid, const RunConfig& cfg, std::ostream& out, std::ostream& err, bool with_summary) {
    auto fmt = parse_format(cfg.format);
    auto recs = run_tasks(grid.tasks, cfg.jobs, cfg.time_limit, err);
    std::size_t pass = 0;
    for (const auto& r : recs) pass += r.ok;
    std::optional<json> summary;
    if (with_summary) summary = json{{"pass", pass}, {"total", recs.size()}, {"kind", "evidence"}};
    write_records(out, recs, fmt, summary);
    return pass == recs.size() ? 0 : 1;
}

inline std::string cache_path(const RunConfig& cfg) {
    if (!cfg.cache.empty()) return cfg.cache;
    if (const char* env = std::getenv(kCacheEnv)) return env;
    return {};
}

inline int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.command == "bernoulli") return cmd_bernoulli(cfg, out);
    if (cfg.command == "series") return cmd_series(cfg, out);
    if (cfg.command == "filtration") return cmd_filtration(cfg, out);
    if (cfg.command == "reproduce") return cmd_reproduce(cfg, out, err);
    if (cfg.command == "verify") return cmd_grid(build_verify_grid(cfg), cfg, out, err, false);
    if (cfg.command == "scan") return cmd_grid(build_scan_grid(cfg), cfg, out, err, true);
    throw UsageError("no command given (bernoulli series verify filtration reproduce scan)");
}

/// Exit status: 0 all pass, 1 some record failed, 2 usage or parameter error.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Eisenstein series congruences modulo prime powers"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--p", cfg.p, "prime(s): 7, 5,7 or 5..13");
        sub->add_option("--m", cfg.m, "exponent(s) of the modulus p^m");
        sub->add_option("--prec", cfg.precision, "highest q-power compared");
        sub->add_option("--out", cfg.out, "write output to a file");
        sub->add_option("--cache", cfg.cache, std::string("Bernoulli cache file (default $") + kCacheEnv + ")");
        sub->add_option("--jobs", cfg.jobs, "worker threads (default: processors)");
        sub->add_option("--budget-bernoulli", cfg.budget_bernoulli, "largest Bernoulli index allowed");
        sub->add_option("--format", cfg.format, "jsonl | json | csv | human");
        sub->add_option("--time-limit", cfg.time_limit, "soft per-record wall-time warning, seconds");
    };

    auto* bern = app.add_subcommand("bernoulli", "exact Bernoulli numbers");
    common(bern);
    bern->add_option("k,--k", cfg.k, "index or range")->required();
    bern->add_option("--valuations", cfg.valuations, "primes for valuation columns");

    auto* series = app.add_subcommand("series", "q-expansions as JSON");
    common(series);
    series->add_option("--kind", cfg.kind, "G | E | delta | efactor | monomial");
    series->add_option("--weight", cfg.weight, "weight k");
    series->add_option("--exponents", cfg.exponents, "a,b,c for E4^a E6^b Delta^c")->delimiter(',');
    series->add_flag("--exact", cfg.exact, "exact rational coefficients");

    auto* verify = app.add_subcommand("verify", "check a congruence over a parameter grid");
    common(verify);
    verify->add_option("statement", cfg.target, "statement id")->required();
    verify->add_option("--kstar", cfg.kstar, "k* or 'auto'");
    verify->add_option("--alpha", cfg.alpha, "alpha values");
    verify->add_option("--d", cfg.d, "d values");
    verify->add_option("--k", cfg.k, "weights k");
    verify->add_option("--k2", cfg.k2, "second weights k'");
    verify->add_option("--n", cfg.n, "n values");
    verify->add_option("--j", cfg.j, "restrict j");
    verify->add_option("--s", cfg.s, "restrict s");
    verify->add_option("--r", cfg.r, "r values");

    auto* filt = app.add_subcommand("filtration", "factor filtration bound of G_k or E_k");
    common(filt);
    filt->add_option("--kind", cfg.kind, "G | E");
    filt->add_option("--weight", cfg.weight, "weight k")->required();
    filt->add_option("--sharpness", cfg.sharpness, "also probe this weight");
    filt->add_flag("--miller", cfg.miller, "report the witness in Miller form");

    auto* repro = app.add_subcommand("reproduce", "rerun a reference example and diff against stored values");
    common(repro);
    repro->add_option("example", cfg.target, "paper-7-8 | paper-17-6")->required();

    auto* scan = app.add_subcommand("scan", "evidence scans for the conjectural congruences");
    common(scan);
    scan->add_option("conjecture", cfg.target, "eq6.4 | eq6.1")->required();
    scan->add_option("--kstar", cfg.kstar, "k* or 'auto'");
    scan->add_option("--alpha", cfg.alpha, "alpha values");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

    std::string cache = cache_path(cfg);
    std::ofstream file_out;
    std::ostream* sink = &out;
    if (!cfg.out.empty()) {
        file_out.open(cfg.out);
        if (!file_out) {
            err << "cannot open " << cfg.out << "\n";
            return 2;
        }
        sink = &file_out;
    }
    try {
        if (!cache.empty()) load_bernoulli_cache(cache);
        int status = dispatch(cfg, *sink, err);
        if (!cache.empty()) append_bernoulli_cache(cache);
        return status;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace eiscong::cli
