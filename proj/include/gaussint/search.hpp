#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaussint/divisor_theory.hpp"
#include "gaussint/gaussian_int.hpp"

namespace gaussint {

// Streams every canonical value (Re > 0, Im >= 0) with lo < norm <= hi in
// (norm, Re, Im) ascending order. One frontier cell per lattice column lives
// in a min-heap, so memory stays O(sqrt(hi)) and nothing is materialized.
class NormOrderedEnumerator {
public:
    explicit NormOrderedEnumerator(std::uint64_t norm_bound);  // norms in [1, bound]
    NormOrderedEnumerator(std::uint64_t lo, std::uint64_t hi);  // norms in (lo, hi]

    std::optional<GaussianInt> next();

private:
    struct Cell {
        std::uint64_t norm;
        std::uint64_t a;
        std::uint64_t b;
    };
    void push_cell(std::uint64_t a, std::uint64_t b);

    std::uint64_t hi_;
    std::vector<Cell> heap_;
};

enum class ParityFilter { all, odd, even };

struct SearchConfig {
    std::uint64_t norm_bound = 0;
    ParityFilter parity = ParityFilter::all;
    bool want_norm_perfect = true;
    bool want_perfect = false;
    unsigned shard_count = 1;
    unsigned shard_index = 0;

    // Throws std::invalid_argument on norm_bound < 1, shard_count < 1,
    // shard_index >= shard_count, or an empty kind set.
    void validate() const;
};

enum class RecordKind { norm_perfect, perfect, norm_perfect_prime };

std::string to_string(RecordKind kind);

struct SearchRecord {
    GaussianInt subject;
    mpz_class norm;
    RecordKind kind = RecordKind::norm_perfect;
    PerfectionReport report;
    std::optional<OddFormDecomposition> decomposition;
};

struct ScanError {
    GaussianInt subject;
    std::string message;
};

struct ScanSummary {
    std::uint64_t examined = 0;
    std::uint64_t matched = 0;
    std::uint64_t errors = 0;
};

struct ScanSink {
    std::function<void(const SearchRecord&)> on_record;
    std::function<void(const ScanError&)> on_error;
};

// Norm range (lo, hi] owned by config.shard_index: contiguous slices
// j*B/S < n <= (j+1)*B/S, exact in integers, disjoint, covering [1, B].
std::pair<std::uint64_t, std::uint64_t> shard_norm_range(const SearchConfig& config);

// Classifies every canonical value in this shard's slice via the full
// factorization path. Emits a record per subject matching the filters; the
// kind is `perfect` when some associate is perfect, else `norm_perfect`.
// Odd hits carry their pi^k gamma^2 decomposition. Per-item failures become
// error records, never silent skips.
ScanSummary scan(const SearchConfig& config, const ScanSink& sink);

// Runs every shard of config.shard_count (shard_index ignored), shards in
// parallel, then replays the per-shard streams in shard order. Slices are
// contiguous in norm, so concatenation is the ordered merge.
ScanSummary scan_sharded(const SearchConfig& config, const ScanSink& sink);

// Every canonical Gaussian prime with norm <= norm_bound, (norm, Re, Im)
// ascending: 1+i, split conjugate pairs over p = 1 mod 4, and rational
// q = 3 mod 4 with q^2 <= norm_bound.
std::vector<GaussianInt> canonical_primes_up_to(std::uint64_t norm_bound);

// The canonical primes pi with norm <= norm_bound and N(sigma(pi)) = 2 N(pi).
std::vector<GaussianInt> scan_norm_perfect_primes(std::uint64_t norm_bound);

struct TheoremVerification {
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    // k mod 4 tally over the decompositions found (k is always odd).
    std::uint64_t k_mod4_one = 0;
    std::uint64_t k_mod4_three = 0;
    std::vector<GaussianInt> failures;
};

// Re-checks the forced shape of every odd canonical norm-perfect value up
// to the bound: decomposition exists, k odd, gcd(pi, gamma) = 1, and
// unit * pi^k * gamma^2 reconstructs the subject (re-checked here, not
// trusted from the decomposer). on_hit, when set, receives each hit.
TheoremVerification verify_theorem(
    std::uint64_t norm_bound,
    const std::function<void(const SearchRecord&)>& on_hit = {});

std::string to_json(const SearchRecord& record);
std::string to_json(const ScanError& error);
std::string to_json(const ScanSummary& summary);
std::string to_json(const TheoremVerification& verification);

}  // namespace gaussint
