#include "commands.hpp"

#include "report.hpp"

#include "niho/arith.hpp"
#include "niho/oracle.hpp"

#include "CLI11.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>

namespace niho::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::optional<std::uint64_t> env_u64(const char* name) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0') throw std::invalid_argument(std::string(name) + " is not a non-negative integer: " + raw);
    return v;
}

// flags > environment > defaults
struct Settings {
    std::optional<std::uint64_t> budget_flag;
    std::optional<std::uint64_t> table_limit_flag;
    unsigned threads = 0;

    std::uint64_t budget() const { return budget_flag.value_or(env_u64("NIHO_BUDGET").value_or(kDefaultBudget)); }
    OracleOptions oracle() const {
        OracleOptions o;
        o.table_limit = table_limit_flag.value_or(env_u64("NIHO_TABLE_LIMIT").value_or(kDefaultTableLimit));
        o.threads = threads;
        return o;
    }
};

struct SpecFlags {
    std::string family;
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint64_t h = 0;
    std::uint64_t delta = 0;
    std::uint32_t t = 0;

    void add_to(CLI::App* cmd, bool required) {
        auto* f = cmd->add_option("--family", family, "f1 or f2");
        auto* ps = cmd->add_option("--p", p, "characteristic");
        auto* ms = cmd->add_option("--m", m, "q = p^m");
        auto* hs = cmd->add_option("--h", h);
        auto* ds = cmd->add_option("--delta", delta);
        auto* ts = cmd->add_option("--t", t);
        if (required)
            for (auto* o : {f, ps, ms, hs, ds, ts}) o->required();
    }
    CodeSpec spec() const { return {parse_family(family), p, m, h, delta, t}; }
};

void add_settings(CLI::App* cmd, Settings& s, bool with_budget) {
    if (with_budget) cmd->add_option("--budget", s.budget_flag, "operation cap for oracle sweeps");
    cmd->add_option("--table-limit", s.table_limit_flag, "largest field the table builder accepts");
    cmd->add_option("--threads", s.threads, "worker threads (0: all cores)");
}

WeightPath default_path(const ValidatedSpec& spec) {
    return spec.dimension <= 16 ? WeightPath::Positionwise : WeightPath::WRoots;
}

// ---- analyze ------------------------------------------------------------

int cmd_analyze(const SpecFlags& flags, bool as_json, std::ostream& out) {
    const auto report = analyze(validate_spec(flags.spec()));
    if (as_json)
        out << to_json(report).dump(2) << '\n';
    else
        out << text_report(report);
    return kExitOk;
}

// ---- verify -------------------------------------------------------------

struct Verdict {
    bool mismatch = false;
    bool refused = false;
};

void check_weights(const CodeOracle& oracle, std::uint64_t budget, std::ostream& out, Verdict& v) {
    const auto& spec = oracle.spec();
    const auto theory = theoretical_weights(spec.raw.family, spec.raw.p, spec.q, spec.e, spec.raw.t);
    const BigInt count = oracle.tuple_count();
    const std::uint64_t range = count > BigInt(1UL << 62) ? (1ULL << 62) : count.get_ui();
    const std::uint64_t samples = std::min<std::uint64_t>(range, 64);
    const BigInt cost = BigInt(static_cast<unsigned long>(samples)) * static_cast<unsigned long>(spec.length) *
                        static_cast<unsigned long>(spec.exponents.size());
    if (cost > BigInt(static_cast<unsigned long>(budget))) throw BudgetExceeded("weights check", cost, budget);

    std::uint64_t bad = 0;
    for (std::uint64_t k = 0; k < samples; ++k) {
        const auto a = oracle.tuple_at(k * (range / samples));
        const std::uint64_t w = oracle.codeword_weight(a);
        const std::int64_t s = oracle.char_sum(a);
        const std::int64_t direct = oracle.char_sum_direct(a);
        const bool in_set = a.is_zero() ? w == 0 : std::find(theory.begin(), theory.end(), w) != theory.end();
        if (s != direct || oracle.weight_from_char_sum(s) != w || !in_set) {
            ++bad;
            out << "  tuple " << k * (range / samples) << ": positionwise weight " << w << ", S(a) " << s
                << " (direct " << direct << ")\n";
        }
    }
    out << "weights: " << samples << " tuples, " << (bad == 0 ? "agree" : "MISMATCH") << '\n';
    v.mismatch |= bad != 0;
}

void check_distribution(const CodeOracle& oracle, bool slow, std::uint64_t budget, std::ostream& out,
                        Verdict& v) {
    const auto& spec = oracle.spec();
    const auto path = slow ? WeightPath::Positionwise : default_path(spec);
    const auto brute = oracle.brute_distribution(path, budget);
    const auto formula = weight_distribution(spec);
    const bool same = brute.same_distribution(formula);
    out << "distribution (" << (path == WeightPath::Positionwise ? "positionwise" : "W-roots")
        << "): " << (same ? "agree" : "MISMATCH") << '\n';
    if (!same) {
        out << "  formula: " << enumerator_string(formula) << '\n';
        out << "  oracle:  " << enumerator_string(brute) << '\n';
    }
    v.mismatch |= !same;
}

void check_nr(const CodeOracle& oracle, std::uint64_t budget, std::ostream& out, Verdict& v) {
    const auto& spec = oracle.spec();
    const std::uint32_t rmax = std::min<std::uint32_t>(4, spec.moment_bound());
    MomentTable table(spec.q, spec.e);
    for (std::uint32_t r = 1; r <= rmax; ++r) {
        const BigInt brute = oracle.n_r_brute(r, budget);
        const BigInt formula = table.n_r(r);
        out << "N_" << r << ": formula " << formula.get_str() << ", brute " << brute.get_str()
            << (brute == formula ? "  agree" : "  MISMATCH") << '\n';
        v.mismatch |= brute != formula;
    }
}

void check_moments(const CodeOracle& oracle, std::uint64_t budget, std::ostream& out, Verdict& v) {
    const auto histogram = oracle.char_sum_histogram(budget);
    for (std::uint32_t r = 1; r <= oracle.spec().moment_bound(); ++r) {
        const auto rep = oracle.power_moment_check(r, histogram);
        out << "moment r=" << r << ": " << (rep.equal() ? "agree" : "MISMATCH");
        if (!rep.equal()) out << " (sum " << rep.lhs.get_str() << ", closed form " << rep.rhs.get_str() << ')';
        out << '\n';
        v.mismatch |= !rep.equal();
    }
}

int cmd_verify(const SpecFlags& flags, const Settings& settings, const std::string& checks, bool slow,
               std::ostream& out, std::ostream& err) {
    const auto spec = validate_spec(flags.spec());
    const CodeOracle oracle(spec, settings.oracle());
    const std::uint64_t budget = settings.budget();
    const bool all = checks == "all";
    Verdict v;
    auto guarded = [&](const char* name, auto&& fn) {
        if (!all && checks != name) return;
        try {
            fn();
        } catch (const BudgetExceeded& ex) {
            err << name << ": refused: " << ex.what() << '\n';
            v.refused = true;
        }
    };
    guarded("weights", [&] { check_weights(oracle, budget, out, v); });
    guarded("distribution", [&] { check_distribution(oracle, slow, budget, out, v); });
    guarded("nr", [&] { check_nr(oracle, budget, out, v); });
    guarded("moments", [&] { check_moments(oracle, budget, out, v); });
    if (v.mismatch) return kExitMismatch;
    if (v.refused) return kExitBudget;
    out << "verdict: agree\n";
    return kExitOk;
}

// ---- nr -----------------------------------------------------------------

int cmd_nr(std::uint32_t p, std::uint32_t m, std::uint64_t e, std::uint32_t rmax, bool brute,
           const SpecFlags& flags, const Settings& settings, std::ostream& out, std::ostream& err) {
    if (!is_prime(p)) throw SpecError(SpecViolation::NotPrime, "p = " + std::to_string(p) + " is not prime");
    const auto q = checked_pow(p, m);
    if (m == 0 || !q || *q > (1ULL << 31)) throw SpecError(SpecViolation::BadExtension, "q = p^m out of range");
    if (e == 0 || (*q + 1) % e != 0)
        throw std::invalid_argument("e = " + std::to_string(e) + " does not divide q+1 = " + std::to_string(*q + 1));

    std::optional<CodeOracle> oracle;
    if (brute) {
        if (flags.family.empty()) throw std::invalid_argument("--brute needs --family --h --delta --t");
        auto spec = flags.spec();
        spec.p = p;
        spec.m = m;
        const auto valid = validate_spec(spec);
        if (valid.e != e)
            throw std::invalid_argument("spec has e = " + std::to_string(valid.e) + ", not " + std::to_string(e));
        oracle.emplace(valid, settings.oracle());
    }
    MomentTable table(*q, e);
    bool mismatch = false;
    out << "r  N_r" << (brute ? "  brute  match" : "") << '\n';
    for (std::uint32_t r = 0; r <= rmax; ++r) {
        const BigInt n = table.n_r(r);
        out << r << "  " << n.get_str();
        if (oracle) {
            try {
                const BigInt b = oracle->n_r_brute(r, settings.budget());
                out << "  " << b.get_str() << "  " << (b == n ? "yes" : "NO");
                mismatch |= b != n;
            } catch (const BudgetExceeded& ex) {
                out << '\n';
                err << "refused: " << ex.what() << '\n';
                return kExitBudget;
            }
        }
        out << '\n';
    }
    return mismatch ? kExitMismatch : kExitOk;
}

// ---- sweep --------------------------------------------------------------

struct Range {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

Range parse_range(const std::string& text, const char* name) {
    auto number = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument(std::string("bad ") + name + " range '" + text + "'");
        return std::stoull(s);
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const auto v = number(text);
        return {v, v};
    }
    return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

// Holds an exclusive lock on the catalog while keys are re-read and a record appended.
class CatalogFile {
public:
    explicit CatalogFile(const std::string& path) : path_(path) {
        std::ofstream touch(path, std::ios::app);
        if (!touch) throw std::runtime_error("cannot open catalog '" + path + "' for writing");
    }

    std::set<CatalogKey> keys() const {
        std::set<CatalogKey> out;
        std::ifstream in(path_);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            try {
                out.insert(catalog_key(record_from_json(nlohmann::json::parse(line)).report.spec));
            } catch (const std::exception& ex) {
                throw std::runtime_error(path_ + ":" + std::to_string(line_no) + ": not a catalog record (" +
                                         ex.what() + ")");
            }
        }
        return out;
    }

    // false if another run recorded the key first
    bool append(const CatalogRecord& rec) {
        const int fd = ::open(path_.c_str(), O_WRONLY | O_APPEND);
        if (fd < 0) throw std::runtime_error("cannot open catalog '" + path_ + "' for writing");
        ::flock(fd, LOCK_EX);
        bool written = false;
        try {
            if (!keys().contains(catalog_key(rec.report.spec))) {
                const std::string line = to_json(rec).dump() + '\n';
                written = ::write(fd, line.data(), line.size()) == static_cast<ssize_t>(line.size());
                if (!written) throw std::runtime_error("short write to catalog '" + path_ + "'");
            }
        } catch (...) {
            ::flock(fd, LOCK_UN);
            ::close(fd);
            throw;
        }
        ::flock(fd, LOCK_UN);
        ::close(fd);
        return written;
    }

private:
    std::string path_;
};

int cmd_sweep(const std::string& family, std::uint32_t p, std::uint32_t m, const std::string& h_range,
              const std::string& delta_range, const std::string& t_range, const std::string& path,
              std::optional<std::uint64_t> verify_budget, const Settings& settings, std::ostream& out,
              std::ostream& err) {
    const Family fam = parse_family(family);
    const Range hr = parse_range(h_range, "h");
    const Range dr = parse_range(delta_range, "delta");
    const Range tr = parse_range(t_range, "t");
    CatalogFile catalog(path);
    const auto existing = catalog.keys();

    std::uint64_t added = 0, skipped = 0;
    bool mismatch = false;
    for (std::uint64_t h = hr.lo; h <= hr.hi; ++h)
        for (std::uint64_t delta = dr.lo; delta <= dr.hi; ++delta)
            for (std::uint64_t t = tr.lo; t <= tr.hi; ++t) {
                const CodeSpec raw{fam, p, m, h, delta, static_cast<std::uint32_t>(t)};
                const std::string tag = "h=" + std::to_string(h) + " delta=" + std::to_string(delta) +
                                        " t=" + std::to_string(t);
                if (existing.contains(catalog_key(raw))) {
                    err << "skip " << tag << ": already catalogued\n";
                    ++skipped;
                    continue;
                }
                std::optional<ValidatedSpec> spec;
                try {
                    spec = validate_spec(raw);
                } catch (const SpecError& ex) {
                    err << "skip " << tag << ": " << to_string(ex.kind()) << ": " << ex.what() << '\n';
                    ++skipped;
                    continue;
                }
                CatalogRecord rec;
                auto start = Clock::now();
                try {
                    rec.report = analyze(*spec);
                } catch (const ModelViolation& ex) {
                    err << "skip " << tag << ": closed form failed: " << ex.what() << '\n';
                    mismatch = true;
                    continue;
                }
                rec.analyze_seconds = seconds_since(start);
                if (verify_budget) {
                    start = Clock::now();
                    try {
                        const CodeOracle oracle(*spec, settings.oracle());
                        const auto brute = oracle.brute_distribution(default_path(*spec), *verify_budget);
                        const auto formula = weight_distribution(*spec);
                        rec.status = brute.same_distribution(formula) ? VerificationStatus::OracleVerified
                                                                      : VerificationStatus::Mismatch;
                    } catch (const BudgetExceeded&) {
                        rec.status = VerificationStatus::FormulaOnly;
                    } catch (const ResourceError& ex) {
                        err << "note " << tag << ": oracle unavailable: " << ex.what() << '\n';
                        rec.status = VerificationStatus::FormulaOnly;
                    }
                    rec.verify_seconds = seconds_since(start);
                    mismatch |= rec.status == VerificationStatus::Mismatch;
                }
                rec.recorded_at = utc_now();
                if (catalog.append(rec)) {
                    ++added;
                    out << tag << ": " << to_string(rec.status) << '\n';
                } else {
                    err << "skip " << tag << ": recorded concurrently\n";
                    ++skipped;
                }
            }
    out << added << " added, " << skipped << " skipped\n";
    return mismatch ? kExitMismatch : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized-Niho cyclic codes: weight distributions and their verification", "niho"};
    app.set_help_flag("--help", "print help");  // -h would clash with --h
    app.require_subcommand(1);

    SpecFlags spec_flags;
    Settings settings;

    auto* analyze_cmd = app.add_subcommand("analyze", "closed-form weight distribution of one code");
    bool as_json = false;
    spec_flags.add_to(analyze_cmd, true);
    analyze_cmd->add_flag("--json", as_json, "print the JSON report");
    add_settings(analyze_cmd, settings, false);

    auto* verify_cmd = app.add_subcommand("verify", "compare closed forms against brute-force oracles");
    std::string checks = "all";
    bool slow = false;
    spec_flags.add_to(verify_cmd, true);
    verify_cmd->add_option("--checks", checks)
        ->check(CLI::IsMember({"weights", "distribution", "nr", "moments", "all"}));
    verify_cmd->add_flag("--slow-path", slow, "evaluate codewords position by position");
    add_settings(verify_cmd, settings, true);

    auto* nr_cmd = app.add_subcommand("nr", "table of N_r");
    std::uint32_t nr_p = 0, nr_m = 0, rmax = 0;
    std::uint64_t nr_e = 0;
    bool brute = false;
    nr_cmd->add_option("--p", nr_p)->required();
    nr_cmd->add_option("--m", nr_m)->required();
    nr_cmd->add_option("--e", nr_e)->required();
    nr_cmd->add_option("--rmax", rmax)->required();
    nr_cmd->add_flag("--brute", brute, "add an exhaustive count (needs --family --h --delta --t)");
    nr_cmd->add_option("--family", spec_flags.family);
    nr_cmd->add_option("--h", spec_flags.h);
    nr_cmd->add_option("--delta", spec_flags.delta);
    nr_cmd->add_option("--t", spec_flags.t);
    add_settings(nr_cmd, settings, true);

    auto* sweep_cmd = app.add_subcommand("sweep", "catalog every admissible spec in a parameter box");
    std::string h_range, delta_range, t_range, out_path;
    std::optional<std::uint64_t> verify_small;
    sweep_cmd->add_option("--family", spec_flags.family)->required();
    sweep_cmd->add_option("--p", spec_flags.p)->required();
    sweep_cmd->add_option("--m", spec_flags.m)->required();
    sweep_cmd->add_option("--h", h_range, "value or lo..hi")->required();
    sweep_cmd->add_option("--delta", delta_range, "value or lo..hi")->required();
    sweep_cmd->add_option("--t", t_range, "value or lo..hi")->required();
    sweep_cmd->add_option("--out", out_path, "JSONL catalog")->required();
    sweep_cmd->add_option("--verify-small", verify_small, "oracle-verify specs whose sweep fits this budget");
    add_settings(sweep_cmd, settings, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << ex.what() << '\n';
        return kExitInvalid;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(spec_flags, as_json, out);
        if (*verify_cmd) return cmd_verify(spec_flags, settings, checks, slow, out, err);
        if (*nr_cmd) return cmd_nr(nr_p, nr_m, nr_e, rmax, brute, spec_flags, settings, out, err);
        if (*sweep_cmd)
            return cmd_sweep(spec_flags.family, spec_flags.p, spec_flags.m, h_range, delta_range, t_range, out_path,
                             verify_small, settings, out, err);
    } catch (const SpecError& ex) {
        err << "invalid spec (" << to_string(ex.kind()) << "): " << ex.what() << '\n';
        return kExitInvalid;
    } catch (const BudgetExceeded& ex) {
        err << "refused: " << ex.what() << '\n';
        return kExitBudget;
    } catch (const ModelViolation& ex) {
        err << "closed form failed: " << ex.what() << '\n';
        return kExitMismatch;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace niho::cli
