#ifndef TRINO_SCAN_HPP
#define TRINO_SCAN_HPP

#include "trino/mahler.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trino {

/// One scanned trinomial x^n + a x^m + b.
struct ScanRecord {
    int n = 0;
    int m = 0;
    long a = 0;
    int b = 1;
    bool reducible = false;
    std::vector<int> factor_degrees;  ///< ascending, with multiplicity
    std::vector<std::string> factors; ///< reducible rows only
    std::string certificate;          ///< "threshold", "schinzel-none", "factorizer", "witness" or "error"
    double measure = 0.0;
    double house = 0.0;
    std::optional<double> elapsed;    ///< seconds; only when timing is requested
    std::optional<std::string> error;

    friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

/// Canonical scan order: (n, m, |a|, sign a, b).
bool scan_order(const ScanRecord& x, const ScanRecord& y);

/// One compact JSON object, no trailing newline.
std::string to_json_line(const ScanRecord& r);
/// Throws InvalidArgument on malformed input.
ScanRecord parse_scan_record(std::string_view line);

struct ScanOptions {
    int n_min = 3;
    int n_max = 3;
    std::vector<long> a_values;
    std::vector<int> signs{-1, 1};
    bool coprime_only = true;
    int threads = 0;         ///< 0: TRINOTOOL_THREADS, else hardware concurrency
    std::string cache_path;  ///< empty: no cache
    bool keep_all = false;   ///< return irreducible rows too
    bool timing = false;
    std::size_t item_limit = 0; ///< stop after this many new computations (0: no limit)
};

struct ScanSummary {
    std::size_t items = 0;
    std::size_t from_cache = 0;
    std::size_t computed = 0;
    std::size_t reducible = 0;
    std::size_t errored = 0;
    bool complete = true; ///< false when item_limit cut the run short
};

struct ScanResult {
    std::vector<ScanRecord> records;
    ScanSummary summary;
};

/// Runs the irreducibility test over every (n, m, a, b) in range. Returns the
/// reducible and errored rows (all rows with keep_all) in canonical order;
/// the output does not depend on the thread count. With a cache path, every
/// finished record is appended to the file and records already present are
/// reused.
ScanResult scan_conjecture(const ScanOptions& opts);

/// Evaluates a single tuple the way the scanner does.
ScanRecord scan_one(int n, int m, long a, int b, bool timing = false);

int default_thread_count();

// ---------------------------------------------------------------------------

struct ConvergenceRow {
    int n = 0;
    int m = 0;
    double measure = 0.0;
    double limit = 0.0;
    double gap = 0.0;
};

enum class MRule { Fixed, NMinusOne, HalfCoprime };

struct MChoice {
    MRule rule = MRule::Fixed;
    int m = 1; ///< used by MRule::Fixed
};

/// m for a given n under the rule. HalfCoprime picks the largest m <= n/2
/// with gcd(m, n) = 1.
int choose_m(int n, const MChoice& rule);

/// Measure by roots against the limit. When |a| - |b| >= 1 the gap is taken
/// from the exact series (|a| |expm1(sum)|) because the difference of two
/// nearly equal doubles loses it for large n. Rows are sorted by n.
std::vector<ConvergenceRow> convergence_table(Complex a, Complex b, std::vector<int> n_list, const MChoice& rule);

} // namespace trino

#endif
