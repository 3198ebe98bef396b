// Command-line front end: next / sequence / verify / bench.
//
// Exit codes: 0 success, 1 verification failure, 2 resource refusal,
// 3 internal oracle mismatch.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gandhi/errors.hpp"
#include "gandhi/identity.hpp"
#include "gandhi/numtheory.hpp"
#include "gandhi/theta.hpp"

using json = nlohmann::ordered_json;
using namespace gandhi;

namespace {

enum class Format { json_fmt, csv, plain };

struct CliConfig {
    EvalConfig eval;
    Strategy strategy = Strategy::interval;
    Format format = Format::plain;
    std::string log_path;
};

// Streams records in the selected format; also appends every record to
// the NDJSON log when --log is given.
class Emitter {
public:
    Emitter(const CliConfig& cfg, std::vector<std::string> csv_columns)
        : cfg_(cfg), columns_(std::move(csv_columns)) {
        if (!cfg.log_path.empty()) {
            log_.open(cfg.log_path, std::ios::app);
            if (!log_) {
                throw std::runtime_error("cannot open log file " + cfg.log_path);
            }
        }
    }

    void emit(const json& rec, const std::string& plain_line) {
        if (log_.is_open()) log_ << rec.dump() << "\n";
        switch (cfg_.format) {
            case Format::json_fmt:
                std::cout << rec.dump() << "\n";
                break;
            case Format::csv: {
                if (!csv_header_done_) {
                    for (std::size_t i = 0; i < columns_.size(); ++i) {
                        std::cout << (i ? "," : "") << columns_[i];
                    }
                    std::cout << "\n";
                    csv_header_done_ = true;
                }
                for (std::size_t i = 0; i < columns_.size(); ++i) {
                    std::cout << (i ? "," : "") << cell(rec, columns_[i]);
                }
                std::cout << "\n";
                break;
            }
            case Format::plain:
                if (!plain_line.empty()) std::cout << plain_line << "\n";
                break;
        }
    }

    void plain_summary(const std::string& line) {
        if (cfg_.format == Format::plain) std::cout << line << "\n";
    }

private:
    static std::string cell(const json& rec, const std::string& key) {
        if (!rec.contains(key) || rec[key].is_null()) return "";
        const json& v = rec[key];
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    }

    const CliConfig& cfg_;
    std::vector<std::string> columns_;
    bool csv_header_done_ = false;
    std::ofstream log_;
};

json theta_fields(const ThetaEvaluation& eval) {
    json j;
    if (eval.exact) {
        j["theta_num"] = eval.exact->num().get_str();
        j["theta_den"] = eval.exact->den().get_str();
    } else {
        j["theta_num"] = nullptr;
        j["theta_den"] = nullptr;
    }
    if (eval.enclosure) {
        j["theta_lo_mantissa"] = eval.enclosure->lo().mantissa().get_str();
        j["theta_lo_exp"] = -static_cast<std::int64_t>(eval.enclosure->lo().frac_bits());
        j["theta_hi_mantissa"] = eval.enclosure->hi().mantissa().get_str();
        j["theta_hi_exp"] = -static_cast<std::int64_t>(eval.enclosure->hi().frac_bits());
    }
    return j;
}

int cmd_next(std::size_t n, const CliConfig& cfg) {
    Emitter out(cfg, {"n", "p_next", "strategy", "theta_num", "theta_den",
                      "precision_bits", "elapsed_ms"});
    PrimeTable table;
    const auto t0 = std::chrono::steady_clock::now();
    const NextPrimeResult res = next_prime_full(n, table, cfg.strategy, cfg.eval);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0).count();

    json rec;
    rec["n"] = n;
    rec["p_next"] = res.p;
    rec["strategy"] = strategy_name(cfg.strategy);
    rec.update(theta_fields(res.eval));
    if (cfg.strategy == Strategy::interval) {
        rec["precision_bits"] = res.precision_bits;
    } else {
        rec["precision_bits"] = nullptr;
    }
    rec["elapsed_ms"] = ms;

    std::string plain = "p_" + std::to_string(n + 1) + " = " +
                        std::to_string(res.p) + "  [" +
                        strategy_name(cfg.strategy);
    if (res.eval.exact) plain += ", theta = " + res.eval.exact->str();
    if (cfg.strategy == Strategy::interval) {
        plain += ", B = " + std::to_string(res.precision_bits);
    }
    plain += "]";
    out.emit(rec, plain);
    return 0;
}

int cmd_sequence(std::size_t count, const CliConfig& cfg) {
    Emitter out(cfg, {"index", "p", "seed", "strategy", "precision_bits",
                      "elapsed_ms"});
    auto sink = [&](const SequenceRow& row) {
        json rec;
        rec["index"] = row.index;
        rec["p"] = row.p;
        rec["seed"] = row.seed;
        rec["strategy"] = row.seed ? "seed" : strategy_name(cfg.strategy);
        if (!row.seed && cfg.strategy == Strategy::interval) {
            rec["precision_bits"] = row.precision_bits;
        } else {
            rec["precision_bits"] = nullptr;
        }
        rec["elapsed_ms"] = row.elapsed_ms;
        out.emit(rec, "p_" + std::to_string(row.index) + " = " +
                          std::to_string(row.p) +
                          (row.seed ? "  [seed]" : ""));
        std::cout.flush();
    };
    gandhi_sequence(count, cfg.strategy, cfg.eval, sink);
    return 0;
}

struct Range {
    std::size_t lo = 1, hi = 1;
};

Range parse_range(const std::string& s) {
    const auto pos = s.find("..");
    Range r;
    if (pos == std::string::npos) {
        r.lo = r.hi = std::stoull(s);
    } else {
        r.lo = std::stoull(s.substr(0, pos));
        r.hi = std::stoull(s.substr(pos + 2));
    }
    if (r.lo < 1 || r.hi < r.lo) {
        throw CLI::ValidationError("range", "expected LO..HI with 1 <= LO <= HI");
    }
    return r;
}

struct VerifyOptions {
    std::string suite;
    std::uint64_t mobius_max = 10000;
    std::string n_range;     // bounds / theorem53 / gaps / theorem54
    std::uint32_t a_max = 64;
    std::uint32_t k_max = 64;
};

json identity_record(const std::string& suite, const IdentityCheckResult& r) {
    json rec;
    rec["suite"] = suite;
    rec["identity"] = r.identity_name;
    rec["instance"] = r.instance;
    rec["lhs"] = r.lhs.str();
    rec["rhs"] = r.rhs.str();
    rec["residual"] = r.residual.str();
    rec["pass"] = r.pass;
    return rec;
}

int cmd_verify(const VerifyOptions& opt, const CliConfig& cfg) {
    Emitter out(cfg, {"suite", "identity", "instance", "lhs", "rhs",
                      "residual", "pass", "relation"});
    PrimeTable table;
    bool all_pass = true;
    std::size_t rows = 0;

    auto emit_identity = [&](const std::string& suite,
                             const IdentityCheckResult& r, bool chatty) {
        all_pass &= r.pass;
        ++rows;
        std::string plain;
        if (chatty || !r.pass) {
            plain = (r.pass ? "pass  " : "FAIL  ") + r.identity_name + "(" +
                    r.instance + "): lhs=" + r.lhs.str() +
                    " rhs=" + r.rhs.str() + " residual=" + r.residual.str();
        }
        out.emit(identity_record(suite, r), plain);
    };

    const bool all = opt.suite == "all";

    if (all || opt.suite == "geometric") {
        for (std::uint32_t a = 1; a <= opt.a_max; ++a) {
            for (std::uint32_t k = 1; k <= opt.k_max; ++k) {
                emit_identity("geometric", verify_geometric_identity(a, k),
                              false);
            }
        }
        out.plain_summary("geometric: " +
                          std::to_string(opt.a_max * opt.k_max) +
                          " instances checked");
    }
    if (all || opt.suite == "theorem53") {
        const Range r = opt.n_range.empty() ? Range{1, 5}
                                            : parse_range(opt.n_range);
        for (std::size_t n = r.lo; n <= r.hi; ++n) {
            emit_identity("theorem53",
                          verify_theorem_53(n, table, cfg.eval.exact_bit_budget),
                          true);
        }
    }
    if (all || opt.suite == "theorem54") {
        const Range r = opt.n_range.empty() ? Range{1, 64}
                                            : parse_range(opt.n_range);
        for (std::size_t n = r.lo; n <= r.hi; ++n) {
            emit_identity("theorem54",
                          verify_theorem_54(static_cast<std::uint32_t>(n)),
                          false);
        }
        out.plain_summary("theorem54: n=" + std::to_string(r.lo) + ".." +
                          std::to_string(r.hi) + " checked");
    }
    if (all || opt.suite == "mobius") {
        std::size_t count = 0;
        for (const auto& r : verify_mobius_sum(opt.mobius_max)) {
            emit_identity("mobius", r, false);
            ++count;
        }
        out.plain_summary("mobius: " + std::to_string(count) +
                          " instances checked");
    }
    if (all || opt.suite == "tailbound") {
        for (std::size_t pi = 1; pi <= 4; ++pi) {
            for (std::uint32_t n = 1; n <= 12; ++n) {
                emit_identity("tailbound",
                              verify_coprime_tail_bound(
                                  n, pi, table, cfg.eval.exact_bit_budget),
                              false);
            }
        }
        out.plain_summary("tailbound: 48 instances checked");
    }
    if (all || opt.suite == "bounds") {
        const Range r = opt.n_range.empty() ? Range{1, 8}
                                            : parse_range(opt.n_range);
        for (std::size_t n = r.lo; n <= r.hi; ++n) {
            const BoundReport rep =
                bounds_report(n, table, cfg.eval.exact_bit_budget);
            for (const BoundCheck& c : rep.checks) {
                all_pass &= c.pass;
                ++rows;
                json rec;
                rec["suite"] = "bounds";
                rec["identity"] = c.name;
                rec["instance"] = "n=" + std::to_string(n) +
                                  ",p_next=" + std::to_string(rep.p_next);
                rec["lhs"] = c.left.str();
                rec["rhs"] = c.right.str();
                rec["relation"] = c.relation;
                rec["pass"] = c.pass;
                out.emit(rec, (c.pass ? "pass  " : "FAIL  ") + c.name +
                                  "(n=" + std::to_string(n) + "): " +
                                  c.left.str() + " " + c.relation + " " +
                                  c.right.str());
            }
        }
    }
    if (all || opt.suite == "gaps") {
        const Range r = opt.n_range.empty() ? Range{1, 1000}
                                            : parse_range(opt.n_range);
        for (std::size_t n = r.lo; n <= r.hi; ++n) {
            const auto [lt, ge] = verify_gap_facts(n, table);
            const bool pass = lt && ge;
            all_pass &= pass;
            ++rows;
            json rec;
            rec["suite"] = "gaps";
            rec["identity"] = "gap_facts";
            rec["instance"] = "n=" + std::to_string(n);
            rec["lhs"] = std::to_string(table.prime(n + 2));
            rec["rhs"] = "2*" + std::to_string(table.prime(n + 1)) + " / " +
                         std::to_string(table.prime(n + 1)) + "+2";
            rec["pass"] = pass;
            out.emit(rec, pass ? "" : "FAIL  gap_facts(n=" + std::to_string(n) + ")");
        }
        out.plain_summary("gaps: n=" + std::to_string(r.lo) + ".." +
                          std::to_string(r.hi) + " checked");
    }

    out.plain_summary(std::string(all_pass ? "OK" : "FAILED") + " (" +
                      std::to_string(rows) + " checks)");
    return all_pass ? 0 : 1;
}

int cmd_bench(std::size_t max_n, const CliConfig& cfg) {
    Emitter out(cfg, {"n", "strategy", "status", "p_next", "terms",
                      "denominator_bits", "precision_bits", "elapsed_ms"});
    PrimeTable table;
    const Strategy strategies[] = {Strategy::exact_divisor,
                                   Strategy::exact_coprime, Strategy::interval};
    for (std::size_t n = 1; n <= max_n; ++n) {
        const Primorial P = primorial(n, table);
        for (Strategy s : strategies) {
            json rec;
            rec["n"] = n;
            rec["strategy"] = strategy_name(s);
            rec["terms"] = (std::uint64_t{1} << n);
            const bool exact = s != Strategy::interval;
            if (exact) rec["denominator_bits"] = P.value.get_str();
            else rec["denominator_bits"] = nullptr;

            if (exact && (!P.value.fits_ulong_p() ||
                          P.value.get_ui() > cfg.eval.exact_bit_budget)) {
                rec["status"] = "skipped: budget";
                rec["p_next"] = nullptr;
                rec["precision_bits"] = nullptr;
                rec["elapsed_ms"] = nullptr;
                out.emit(rec, "n=" + std::to_string(n) + " " +
                                  strategy_name(s) + ": skipped (budget)");
                continue;
            }
            const auto t0 = std::chrono::steady_clock::now();
            const NextPrimeResult res = next_prime_full(n, table, s, cfg.eval);
            const double ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - t0).count();
            rec["status"] = "ok";
            rec["p_next"] = res.p;
            if (s == Strategy::interval) rec["precision_bits"] = res.precision_bits;
            else rec["precision_bits"] = nullptr;
            rec["elapsed_ms"] = ms;
            out.emit(rec, "n=" + std::to_string(n) + " " + strategy_name(s) +
                              ": p=" + std::to_string(res.p) + " in " +
                              std::to_string(ms) + " ms");
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Successive primes via Gandhi's formula, with exact and "
                 "interval evaluation and machine-checked proof identities"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string strategy_str = "interval";
    std::string format_str = "plain";

    app.add_option("--strategy", strategy_str,
                   "exact-divisor | exact-coprime | interval")
        ->envname("GANDHI_STRATEGY");
    app.add_option("--precision", cfg.eval.initial_precision_bits,
                   "initial interval precision in bits")
        ->envname("GANDHI_PRECISION");
    app.add_option("--max-precision", cfg.eval.max_precision_bits,
                   "precision ceiling for INCONCLUSIVE escalation");
    app.add_option("--budget", cfg.eval.exact_bit_budget,
                   "exact-strategy denominator bit budget")
        ->envname("GANDHI_BUDGET");
    app.add_option("--format", format_str, "json | csv | plain")
        ->envname("GANDHI_FORMAT");
    app.add_flag_callback("--no-cross-check",
                          [&cfg] { cfg.eval.cross_check = false; },
                          "skip the sieve-oracle assertion");
    app.add_option("--log", cfg.log_path, "append NDJSON records to this file");

    std::size_t next_n = 1;
    auto* next_cmd = app.add_subcommand("next", "compute p_{n+1} from n");
    next_cmd->add_option("n", next_n, "index n >= 1")->required();

    std::size_t seq_count = 1;
    auto* seq_cmd = app.add_subcommand("sequence", "generate the first k primes");
    seq_cmd->add_option("count", seq_count, "how many primes")->required();

    VerifyOptions vopt;
    auto* verify_cmd = app.add_subcommand("verify", "run identity suites");
    verify_cmd
        ->add_option("suite", vopt.suite,
                     "geometric | theorem53 | theorem54 | mobius | tailbound "
                     "| bounds | gaps | all")
        ->required()
        ->check(CLI::IsMember({"geometric", "theorem53", "theorem54", "mobius",
                               "tailbound", "bounds", "gaps", "all"}));
    verify_cmd->add_option("--max", vopt.mobius_max, "mobius suite upper m");
    verify_cmd->add_option("--n", vopt.n_range, "instance range LO..HI");
    verify_cmd->add_option("--a-max", vopt.a_max, "geometric suite max a");
    verify_cmd->add_option("--k-max", vopt.k_max, "geometric suite max K");

    std::size_t bench_max_n = 12;
    auto* bench_cmd = app.add_subcommand("bench", "strategy timing table");
    bench_cmd->add_option("--max-n", bench_max_n, "largest index to benchmark");

    CLI11_PARSE(app, argc, argv);

    const auto strat = parse_strategy(strategy_str);
    if (!strat) {
        std::cerr << "unknown strategy: " << strategy_str << "\n";
        return 2;
    }
    cfg.strategy = *strat;
    if (format_str == "json") cfg.format = Format::json_fmt;
    else if (format_str == "csv") cfg.format = Format::csv;
    else if (format_str == "plain") cfg.format = Format::plain;
    else {
        std::cerr << "unknown format: " << format_str << "\n";
        return 2;
    }
    if (cfg.eval.initial_precision_bits > cfg.eval.max_precision_bits) {
        std::cerr << "--precision must not exceed --max-precision\n";
        return 2;
    }

    try {
        if (next_cmd->parsed()) return cmd_next(next_n, cfg);
        if (seq_cmd->parsed()) return cmd_sequence(seq_count, cfg);
        if (verify_cmd->parsed()) return cmd_verify(vopt, cfg);
        if (bench_cmd->parsed()) return cmd_bench(bench_max_n, cfg);
    } catch (const resource_error& e) {
        std::cerr << "resource refusal: " << e.what() << "\n";
        return 2;
    } catch (const oracle_mismatch& e) {
        std::cerr << "oracle mismatch (implementation bug): " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
