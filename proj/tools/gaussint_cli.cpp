// Command-line front end: factor, sigma, check, search, primes, verify.
// Data records go to stdout, diagnostics and summaries to stderr, so
// pipelines compose. Exit 0 on success, 1 on usage errors, 2 when a scan
// emitted per-item error records.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gaussint/divisor_theory.hpp"
#include "gaussint/factorization.hpp"
#include "gaussint/gaussian_int.hpp"
#include "gaussint/search.hpp"

namespace {

using gaussint::GaussianInt;
using gaussint::SearchRecord;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitItemErrors = 2;

std::string bool_name(bool b) { return b ? "true" : "false"; }

std::string unit_name(const std::optional<gaussint::Unit>& u) {
    return u.has_value() ? gaussint::to_string(u->value()) : "none";
}

std::string record_text(const SearchRecord& r) {
    std::string line = gaussint::to_string(r.subject);
    line += " norm=" + r.norm.get_str();
    line += " kind=" + gaussint::to_string(r.kind);
    line += " parity=" + gaussint::to_string(r.report.parity);
    line += " sigma=" + gaussint::to_string(r.report.sigma);
    line += " normSigma=" + r.report.norm_sigma.get_str();
    line += " twoNorm=" + r.report.two_norm.get_str();
    line += " normPerfect=" + bool_name(r.report.norm_perfect);
    line += " perfectUnit=" + unit_name(r.report.perfect_unit);
    if (r.decomposition.has_value()) {
        line += " pi=" + gaussint::to_string(r.decomposition->pi);
        line += " k=" + std::to_string(r.decomposition->k);
        line += " gamma=" + gaussint::to_string(r.decomposition->gamma);
        line += " unit=" + gaussint::to_string(r.decomposition->unit.value());
    }
    return line;
}

std::string check_text(const gaussint::PerfectionReport& report) {
    std::string out;
    out += "subject: " + gaussint::to_string(report.subject) + "\n";
    out += "parity: " + gaussint::to_string(report.parity) + "\n";
    out += "sigma: " + gaussint::to_string(report.sigma) + "\n";
    out += "normSigma: " + report.norm_sigma.get_str() + "\n";
    out += "twoNorm: " + report.two_norm.get_str() + "\n";
    out += "normPerfect: " + bool_name(report.norm_perfect) + "\n";
    out += "perfectUnit: " + unit_name(report.perfect_unit) + "\n";
    return out;
}

gaussint::ScanSink printing_sink(bool json) {
    gaussint::ScanSink sink;
    sink.on_record = [json](const SearchRecord& r) {
        std::cout << (json ? gaussint::to_json(r) : record_text(r)) << "\n";
    };
    sink.on_error = [json](const gaussint::ScanError& e) {
        if (json) {
            std::cout << gaussint::to_json(e) << "\n";
        } else {
            std::cout << "error subject=" << gaussint::to_string(e.subject)
                      << " message=" << e.message << "\n";
        }
    };
    return sink;
}

int run_factor(const std::string& value, bool json) {
    const GaussianInt g = gaussint::parse_gaussian(value);
    const gaussint::CanonicalFactorization f = gaussint::factor(g);
    if (json) {
        std::string out = "{\"subject\":\"" + gaussint::to_string(g) + "\"";
        out += ",\"unit\":\"" + gaussint::to_string(f.unit.value()) + "\"";
        out += ",\"factors\":[";
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            if (i != 0) {
                out += ",";
            }
            out += "{\"prime\":\"" + gaussint::to_string(f.factors[i].prime) +
                   "\",\"exponent\":" + std::to_string(f.factors[i].exponent) + "}";
        }
        out += "],\"rendered\":\"" + f.to_string() + "\"}";
        std::cout << out << "\n";
    } else {
        std::cout << f.to_string() << "\n";
    }
    return kExitOk;
}

int run_sigma(const std::string& value, bool json) {
    const GaussianInt g = gaussint::parse_gaussian(value);
    const GaussianInt s = gaussint::sigma(g);
    const mpz_class norm_sigma = s.norm();
    if (json) {
        std::cout << "{\"subject\":\"" << gaussint::to_string(g)
                  << "\",\"sigma\":\"" << gaussint::to_string(s)
                  << "\",\"normSigma\":" << norm_sigma.get_str() << "}\n";
    } else {
        std::cout << gaussint::to_string(s) << "\n" << norm_sigma.get_str() << "\n";
    }
    return kExitOk;
}

int run_check(const std::string& value, bool json) {
    const GaussianInt g = gaussint::parse_gaussian(value);
    const gaussint::PerfectionReport report = gaussint::classify(g);
    if (json) {
        std::cout << gaussint::to_json(report) << "\n";
    } else {
        std::cout << check_text(report);
    }
    return kExitOk;
}

int run_search(const gaussint::SearchConfig& config, bool single_shard, bool json) {
    const gaussint::ScanSink sink = printing_sink(json);
    const gaussint::ScanSummary summary = single_shard
                                              ? gaussint::scan(config, sink)
                                              : gaussint::scan_sharded(config, sink);
    if (json) {
        std::cerr << gaussint::to_json(summary) << "\n";
    } else {
        std::cerr << "examined=" << summary.examined << " matched=" << summary.matched
                  << " errors=" << summary.errors << "\n";
    }
    return summary.errors == 0 ? kExitOk : kExitItemErrors;
}

int run_primes(std::uint64_t bound, bool json) {
    const auto primes = gaussint::canonical_primes_up_to(bound);
    std::uint64_t matched = 0;
    for (const GaussianInt& pi : primes) {
        gaussint::PerfectionReport report = gaussint::classify(pi);
        if (!report.norm_perfect) {
            continue;
        }
        ++matched;
        SearchRecord record;
        record.subject = pi;
        record.norm = pi.norm();
        record.kind = gaussint::RecordKind::norm_perfect_prime;
        record.report = std::move(report);
        if (pi.is_odd()) {
            record.decomposition = gaussint::odd_form_decompose(pi);
        }
        std::cout << (json ? gaussint::to_json(record) : record_text(record)) << "\n";
    }

    // Cross-check from the other direction: the four raw solutions of
    // (a-1)^2 + b^2 = 2 and the primes among them, quadrant-blind.
    const auto solved = gaussint::norm_perfect_prime_solutions();
    if (json) {
        std::string out = "{\"primesExamined\":" + std::to_string(primes.size());
        out += ",\"matched\":" + std::to_string(matched);
        out += ",\"equationSolutions\":[";
        for (std::size_t i = 0; i < solved.solutions.size(); ++i) {
            if (i != 0) {
                out += ",";
            }
            out += "[" + std::to_string(solved.solutions[i].first) + "," +
                   std::to_string(solved.solutions[i].second) + "]";
        }
        out += "],\"equationPrimes\":[";
        for (std::size_t i = 0; i < solved.primes.size(); ++i) {
            if (i != 0) {
                out += ",";
            }
            out += "\"" + gaussint::to_string(solved.primes[i]) + "\"";
        }
        out += "]}";
        std::cerr << out << "\n";
    } else {
        std::cerr << "primesExamined=" << primes.size() << " matched=" << matched;
        std::cerr << " equationSolutions=";
        for (std::size_t i = 0; i < solved.solutions.size(); ++i) {
            std::cerr << (i != 0 ? " " : "") << "(" << solved.solutions[i].first
                      << "," << solved.solutions[i].second << ")";
        }
        std::cerr << " equationPrimes=";
        for (std::size_t i = 0; i < solved.primes.size(); ++i) {
            std::cerr << (i != 0 ? " " : "") << gaussint::to_string(solved.primes[i]);
        }
        std::cerr << "\n";
    }
    return kExitOk;
}

int run_verify(std::uint64_t bound, bool json) {
    const auto verification = gaussint::verify_theorem(bound, [json](const SearchRecord& r) {
        std::cout << (json ? gaussint::to_json(r) : record_text(r)) << "\n";
    });
    if (json) {
        std::cerr << gaussint::to_json(verification) << "\n";
    } else {
        std::cerr << "checked=" << verification.checked
                  << " passed=" << verification.passed
                  << " failed=" << verification.failed
                  << " kMod4One=" << verification.k_mod4_one
                  << " kMod4Three=" << verification.k_mod4_three << "\n";
    }
    return verification.failed == 0 ? kExitOk : kExitItemErrors;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic, factorization, and perfection scans on Gaussian integers"};
    app.require_subcommand(1);

    std::string format = "text";
    const auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    std::string value;
    CLI::App* factor_cmd =
        app.add_subcommand("factor", "Canonical prime factorization of a value");
    factor_cmd->add_option("value", value, "Gaussian integer literal, e.g. 2+i")
        ->required();
    add_format(factor_cmd);

    CLI::App* sigma_cmd =
        app.add_subcommand("sigma", "Sum of divisors and its norm");
    sigma_cmd->add_option("value", value, "Gaussian integer literal")->required();
    add_format(sigma_cmd);

    CLI::App* check_cmd =
        app.add_subcommand("check", "Perfection report for a value");
    check_cmd->add_option("value", value, "Gaussian integer literal")->required();
    add_format(check_cmd);

    std::uint64_t bound = 0;
    std::string parity = "all";
    std::string kind = "norm-perfect";
    unsigned shards = 1;
    unsigned shard = 0;
    CLI::App* search_cmd =
        app.add_subcommand("search", "Scan canonical values by norm bound");
    search_cmd->add_option("--bound", bound, "Largest norm to examine")->required();
    search_cmd->add_option("--parity", parity, "Parity filter")
        ->check(CLI::IsMember({"all", "odd", "even"}))
        ->capture_default_str();
    search_cmd->add_option("--kind", kind, "Record kinds to emit")
        ->check(CLI::IsMember({"norm-perfect", "perfect", "both"}))
        ->capture_default_str();
    search_cmd->add_option("--shards", shards, "Number of contiguous norm slices")
        ->capture_default_str();
    CLI::Option* shard_opt = search_cmd->add_option(
        "--shard", shard, "Run only this slice (default: all slices, merged)");
    add_format(search_cmd);

    CLI::App* primes_cmd =
        app.add_subcommand("primes", "Scan canonical primes for norm-perfection");
    primes_cmd->add_option("--bound", bound, "Largest norm to examine")->required();
    add_format(primes_cmd);

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Check the odd norm-perfect decomposition up to a bound");
    verify_cmd->add_option("--bound", bound, "Largest norm to examine")->required();
    add_format(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const bool json = (format == "json");
    try {
        if (app.got_subcommand(factor_cmd)) {
            return run_factor(value, json);
        }
        if (app.got_subcommand(sigma_cmd)) {
            return run_sigma(value, json);
        }
        if (app.got_subcommand(check_cmd)) {
            return run_check(value, json);
        }
        if (app.got_subcommand(search_cmd)) {
            gaussint::SearchConfig config;
            config.norm_bound = bound;
            config.parity = parity == "odd"    ? gaussint::ParityFilter::odd
                            : parity == "even" ? gaussint::ParityFilter::even
                                               : gaussint::ParityFilter::all;
            config.want_norm_perfect = (kind != "perfect");
            config.want_perfect = (kind != "norm-perfect");
            config.shard_count = shards;
            config.shard_index = shard;
            config.validate();
            return run_search(config, shard_opt->count() > 0, json);
        }
        if (app.got_subcommand(primes_cmd)) {
            if (bound < 1) {
                throw std::invalid_argument("norm bound must be at least 1");
            }
            return run_primes(bound, json);
        }
        if (app.got_subcommand(verify_cmd)) {
            if (bound < 1) {
                throw std::invalid_argument("norm bound must be at least 1");
            }
            return run_verify(bound, json);
        }
    } catch (const gaussint::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitItemErrors;
    }
    return kExitOk;
}
