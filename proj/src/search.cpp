#include "gaussint/search.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <future>
#include <stdexcept>
#include <tuple>

#include "gaussint/factorization.hpp"

namespace gaussint {

namespace {

std::uint64_t isqrt_u64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n) {
        --r;
    }
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

bool cell_after(std::uint64_t n1, std::uint64_t a1, std::uint64_t b1,
                std::uint64_t n2, std::uint64_t a2, std::uint64_t b2) {
    return std::tie(n1, a1, b1) > std::tie(n2, a2, b2);
}

}  // namespace

NormOrderedEnumerator::NormOrderedEnumerator(std::uint64_t norm_bound)
    : NormOrderedEnumerator(0, norm_bound) {}

NormOrderedEnumerator::NormOrderedEnumerator(std::uint64_t lo, std::uint64_t hi)
    : hi_(hi) {
    const std::uint64_t a_max = isqrt_u64(hi);
    for (std::uint64_t a = 1; a <= a_max; ++a) {
        const unsigned __int128 a2 = static_cast<unsigned __int128>(a) * a;
        std::uint64_t b = 0;
        if (a2 <= lo) {
            // Smallest b in this column with a^2 + b^2 > lo.
            b = isqrt_u64(static_cast<std::uint64_t>(lo - a2)) + 1;
        }
        push_cell(a, b);
    }
}

void NormOrderedEnumerator::push_cell(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 n = static_cast<unsigned __int128>(a) * a +
                                static_cast<unsigned __int128>(b) * b;
    if (n > hi_) {
        return;
    }
    heap_.push_back({static_cast<std::uint64_t>(n), a, b});
    std::push_heap(heap_.begin(), heap_.end(), [](const Cell& x, const Cell& y) {
        return cell_after(x.norm, x.a, x.b, y.norm, y.a, y.b);
    });
}

std::optional<GaussianInt> NormOrderedEnumerator::next() {
    if (heap_.empty()) {
        return std::nullopt;
    }
    std::pop_heap(heap_.begin(), heap_.end(), [](const Cell& x, const Cell& y) {
        return cell_after(x.norm, x.a, x.b, y.norm, y.a, y.b);
    });
    const Cell cell = heap_.back();
    heap_.pop_back();
    push_cell(cell.a, cell.b + 1);
    return GaussianInt(mpz_class(cell.a), mpz_class(cell.b));
}

void SearchConfig::validate() const {
    if (norm_bound < 1) {
        throw std::invalid_argument("norm bound must be at least 1");
    }
    if (shard_count < 1) {
        throw std::invalid_argument("shard count must be at least 1");
    }
    if (shard_index >= shard_count) {
        throw std::invalid_argument("shard index must be below the shard count");
    }
    if (!want_norm_perfect && !want_perfect) {
        throw std::invalid_argument("at least one record kind must be requested");
    }
}

std::string to_string(RecordKind kind) {
    switch (kind) {
        case RecordKind::norm_perfect:
            return "norm_perfect";
        case RecordKind::perfect:
            return "perfect";
        case RecordKind::norm_perfect_prime:
            return "norm_perfect_prime";
    }
    return "unknown";
}

std::pair<std::uint64_t, std::uint64_t> shard_norm_range(const SearchConfig& config) {
    const unsigned __int128 bound = config.norm_bound;
    const unsigned __int128 lo = bound * config.shard_index / config.shard_count;
    const unsigned __int128 hi =
        bound * (config.shard_index + 1) / config.shard_count;
    return {static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi)};
}

ScanSummary scan(const SearchConfig& config, const ScanSink& sink) {
    config.validate();
    const auto [lo, hi] = shard_norm_range(config);
    NormOrderedEnumerator stream(lo, hi);

    ScanSummary summary;
    while (auto subject = stream.next()) {
        ++summary.examined;
        if (config.parity == ParityFilter::odd && !subject->is_odd()) {
            continue;
        }
        if (config.parity == ParityFilter::even && !subject->is_even()) {
            continue;
        }
        try {
            PerfectionReport report = classify(*subject);
            if (!report.norm_perfect) {
                continue;
            }
            const bool perfect = report.perfect_unit.has_value();
            const bool wanted = (config.want_norm_perfect && report.norm_perfect) ||
                                (config.want_perfect && perfect);
            if (!wanted) {
                continue;
            }

            SearchRecord record;
            record.subject = *subject;
            record.norm = subject->norm();
            record.kind = perfect ? RecordKind::perfect : RecordKind::norm_perfect;
            record.report = std::move(report);
            if (subject->is_odd()) {
                OddFormDecomposition d = odd_form_decompose(*subject);
                if (d.k % 2 != 1) {
                    throw std::logic_error("theorem violation: even exponent k");
                }
                record.decomposition = std::move(d);
            }
            ++summary.matched;
            if (sink.on_record) {
                sink.on_record(record);
            }
        } catch (const std::exception& e) {
            ++summary.errors;
            if (sink.on_error) {
                sink.on_error({*subject, e.what()});
            }
        }
    }
    return summary;
}

ScanSummary scan_sharded(const SearchConfig& config, const ScanSink& sink) {
    config.validate();
    if (config.shard_count == 1) {
        SearchConfig single = config;
        single.shard_index = 0;
        return scan(single, sink);
    }

    struct ShardOutput {
        std::vector<SearchRecord> records;
        std::vector<ScanError> errors;
        ScanSummary summary;
    };

    std::vector<std::future<ShardOutput>> futures;
    futures.reserve(config.shard_count);
    for (unsigned j = 0; j < config.shard_count; ++j) {
        SearchConfig shard = config;
        shard.shard_index = j;
        futures.push_back(std::async(std::launch::async, [shard] {
            ShardOutput out;
            ScanSink collector{
                [&out](const SearchRecord& r) { out.records.push_back(r); },
                [&out](const ScanError& e) { out.errors.push_back(e); },
            };
            out.summary = scan(shard, collector);
            return out;
        }));
    }

    // Shard j's norms all precede shard j+1's, so replaying in shard order
    // is the (norm, Re, Im) merge.
    ScanSummary total;
    for (auto& future : futures) {
        ShardOutput out = future.get();
        total.examined += out.summary.examined;
        total.matched += out.summary.matched;
        total.errors += out.summary.errors;
        for (const SearchRecord& r : out.records) {
            if (sink.on_record) {
                sink.on_record(r);
            }
        }
        for (const ScanError& e : out.errors) {
            if (sink.on_error) {
                sink.on_error(e);
            }
        }
    }
    return total;
}

std::vector<GaussianInt> canonical_primes_up_to(std::uint64_t norm_bound) {
    if (norm_bound > 4'000'000'000ULL) {
        throw std::invalid_argument("prime scan bound too large for the sieve");
    }
    std::vector<GaussianInt> primes;
    if (norm_bound < 2) {
        return primes;
    }

    std::vector<bool> composite(norm_bound + 1, false);
    for (std::uint64_t p = 2; p * p <= norm_bound; ++p) {
        if (composite[p]) {
            continue;
        }
        for (std::uint64_t m = p * p; m <= norm_bound; m += p) {
            composite[m] = true;
        }
    }

    for (std::uint64_t p = 2; p <= norm_bound; ++p) {
        if (composite[p]) {
            continue;
        }
        if (p == 2) {
            primes.emplace_back(mpz_class(1), mpz_class(1));
        } else if (p % 4 == 1) {
            for (const GaussianInt& pi : split_prime(mpz_class(p))) {
                primes.push_back(pi);
            }
        } else if (p * p <= norm_bound) {
            primes.emplace_back(mpz_class(p), mpz_class(0));
        }
    }
    std::sort(primes.begin(), primes.end(), NormLexLess{});
    return primes;
}

std::vector<GaussianInt> scan_norm_perfect_primes(std::uint64_t norm_bound) {
    std::vector<GaussianInt> hits;
    for (const GaussianInt& pi : canonical_primes_up_to(norm_bound)) {
        PerfectionReport report = classify(pi);
        assert(report.sigma == pi + GaussianInt(1, 0));
        if (report.norm_perfect) {
            hits.push_back(pi);
        }
    }
    return hits;
}

TheoremVerification verify_theorem(
    std::uint64_t norm_bound,
    const std::function<void(const SearchRecord&)>& on_hit) {
    TheoremVerification result;
    NormOrderedEnumerator stream(norm_bound);
    while (auto subject = stream.next()) {
        if (!subject->is_odd()) {
            continue;
        }
        PerfectionReport report = classify(*subject);
        if (!report.norm_perfect) {
            continue;
        }
        ++result.checked;
        try {
            OddFormDecomposition d = odd_form_decompose(*subject);
            const bool reconstructs =
                d.unit.value() * pow(d.pi, d.k) * (d.gamma * d.gamma) == *subject;
            const bool coprime = gcd(d.pi, d.gamma) == GaussianInt(1, 0);
            if (d.k % 2 != 1 || !reconstructs || !coprime || !d.pi.is_odd()) {
                throw std::logic_error("decomposition fails the theorem's shape");
            }
            ++result.passed;
            if (d.k % 4 == 1) {
                ++result.k_mod4_one;
            } else {
                ++result.k_mod4_three;
            }
            if (on_hit) {
                SearchRecord record;
                record.subject = *subject;
                record.norm = subject->norm();
                record.kind = report.perfect_unit.has_value()
                                  ? RecordKind::perfect
                                  : RecordKind::norm_perfect;
                record.report = std::move(report);
                record.decomposition = std::move(d);
                on_hit(record);
            }
        } catch (const std::exception&) {
            ++result.failed;
            result.failures.push_back(*subject);
        }
    }
    return result;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (const char c : s) {
        switch (c) {
            case '"':
                out += "\\\"";
                break;
            case '\\':
                out += "\\\\";
                break;
            case '\n':
                out += "\\n";
                break;
            case '\r':
                out += "\\r";
                break;
            case '\t':
                out += "\\t";
                break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

}  // namespace

std::string to_json(const SearchRecord& record) {
    std::string out = "{\"subject\":\"";
    out += to_string(record.subject);
    out += "\",\"norm\":";
    out += record.norm.get_str();
    out += ",\"kind\":\"";
    out += to_string(record.kind);
    out += "\",\"report\":";
    out += to_json(record.report);
    out += ",\"decomposition\":";
    out += record.decomposition ? to_json(*record.decomposition) : "null";
    out += "}";
    return out;
}

std::string to_json(const ScanError& error) {
    return "{\"subject\":\"" + to_string(error.subject) + "\",\"error\":\"" +
           json_escape(error.message) + "\"}";
}

std::string to_json(const ScanSummary& summary) {
    return "{\"examined\":" + std::to_string(summary.examined) +
           ",\"matched\":" + std::to_string(summary.matched) +
           ",\"errors\":" + std::to_string(summary.errors) + "}";
}

std::string to_json(const TheoremVerification& verification) {
    std::string out = "{\"checked\":" + std::to_string(verification.checked) +
                      ",\"passed\":" + std::to_string(verification.passed) +
                      ",\"failed\":" + std::to_string(verification.failed) +
                      ",\"kMod4One\":" + std::to_string(verification.k_mod4_one) +
                      ",\"kMod4Three\":" + std::to_string(verification.k_mod4_three) +
                      ",\"failures\":[";
    for (std::size_t i = 0; i < verification.failures.size(); ++i) {
        if (i != 0) {
            out += ",";
        }
        out += "\"" + to_string(verification.failures[i]) + "\"";
    }
    out += "]}";
    return out;
}

}  // namespace gaussint
