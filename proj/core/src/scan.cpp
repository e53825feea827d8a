#include "trino/scan.hpp"

#include "trino/error.hpp"
#include "trino/factor.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <tuple>

namespace trino {

namespace {

using Key = std::tuple<int, int, long, int>;

Key key_of(const ScanRecord& r) {
    return {r.n, r.m, r.a, r.b};
}

std::map<Key, ScanRecord> load_cache(const std::string& path) {
    std::map<Key, ScanRecord> out;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            ScanRecord r = parse_scan_record(line);
            out.insert_or_assign(key_of(r), std::move(r));
        } catch (const Error&) {
            // A torn final line from an interrupted run.
        }
    }
    return out;
}

class CacheWriter {
public:
    explicit CacheWriter(const std::string& path) {
        if (path.empty()) return;
        bool needs_newline = false;
        {
            std::ifstream in(path, std::ios::binary | std::ios::ate);
            if (in && in.tellg() > 0) {
                in.seekg(-1, std::ios::end);
                needs_newline = in.get() != '\n';
            }
        }
        out_.open(path, std::ios::app);
        if (!out_) {
            fail(ErrorCode::InvalidArgument, "cannot open cache file " + path);
        }
        if (needs_newline) out_ << '\n';
    }

    void append(const ScanRecord& r) {
        if (!out_.is_open()) return;
        const std::string line = to_json_line(r) + '\n';
        std::lock_guard lock(mu_);
        out_ << line;
        out_.flush();
    }

private:
    std::ofstream out_;
    std::mutex mu_;
};

std::vector<Key> enumerate(const ScanOptions& opts) {
    std::vector<long> as = opts.a_values;
    std::sort(as.begin(), as.end(), [](long x, long y) {
        return std::pair(std::labs(x), x < 0 ? -1 : 1) < std::pair(std::labs(y), y < 0 ? -1 : 1);
    });
    as.erase(std::unique(as.begin(), as.end()), as.end());
    std::vector<int> bs = opts.signs;
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());

    std::vector<Key> items;
    for (int n = std::max(opts.n_min, 3); n <= opts.n_max; ++n) {
        for (int m = 1; m < n; ++m) {
            if (opts.coprime_only && std::gcd(m, n) != 1) continue;
            for (long a : as) {
                for (int b : bs) items.emplace_back(n, m, a, b);
            }
        }
    }
    return items;
}

} // namespace

int default_thread_count() {
    if (const char* env = std::getenv("TRINOTOOL_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

ScanRecord scan_one(int n, int m, long a, int b, bool timing) {
    const auto start = std::chrono::steady_clock::now();
    ScanRecord r;
    r.n = n;
    r.m = m;
    r.a = a;
    r.b = b;
    try {
        std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
        c[0] = b;
        c[static_cast<std::size_t>(m)] = a;
        c[static_cast<std::size_t>(n)] = 1;
        const IntPolynomial p(std::move(c));
        const IrreducibilityVerdict v = is_irreducible(p);
        r.reducible = v.verdict == Verdict::Reducible;
        r.certificate = std::string(to_string(v.certificate));
        if (r.reducible) {
            const FactorizationResult fr = factorize(p);
            r.factor_degrees = fr.degrees();
            for (const auto& f : fr.factors) {
                std::string s = f.factor.to_string('x');
                if (f.multiplicity > 1) s = "(" + s + ")^" + std::to_string(f.multiplicity);
                r.factors.push_back(std::move(s));
            }
        } else {
            r.factor_degrees = {n};
        }
        r.measure = measure_from_roots(p).value;
        r.house = house(p);
    } catch (const std::exception& e) {
        r.reducible = false;
        r.factor_degrees.clear();
        r.factors.clear();
        r.certificate = "error";
        r.error = e.what();
    }
    if (timing) {
        r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return r;
}

ScanResult scan_conjecture(const ScanOptions& opts) {
    if (opts.n_max < 3) {
        fail(ErrorCode::InvalidArgument, "scan requires n_max >= 3");
    }
    if (std::find(opts.a_values.begin(), opts.a_values.end(), 0L) != opts.a_values.end()) {
        fail(ErrorCode::InvalidArgument, "scan a values must be nonzero");
    }
    for (int b : opts.signs) {
        if (b != 1 && b != -1) fail(ErrorCode::InvalidArgument, "scan signs must be +1 or -1");
    }

    const std::vector<Key> items = enumerate(opts);
    std::map<Key, ScanRecord> cached;
    if (!opts.cache_path.empty()) cached = load_cache(opts.cache_path);

    std::vector<std::optional<ScanRecord>> slots(items.size());
    std::vector<std::size_t> todo;
    ScanResult result;
    result.summary.items = items.size();
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (auto it = cached.find(items[i]); it != cached.end()) {
            slots[i] = it->second;
            ++result.summary.from_cache;
        } else {
            todo.push_back(i);
        }
    }
    if (opts.item_limit > 0 && todo.size() > opts.item_limit) {
        todo.resize(opts.item_limit);
        result.summary.complete = false;
    }

    CacheWriter cache(opts.cache_path);
    const int threads = std::max(1, opts.threads > 0 ? opts.threads : default_thread_count());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < todo.size(); k = next++) {
            const auto [n, m, a, b] = items[todo[k]];
            ScanRecord r = scan_one(n, m, a, b, opts.timing);
            cache.append(r);
            slots[todo[k]] = std::move(r);
        }
    };
    std::vector<std::jthread> pool;
    const int spawn = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(threads), todo.size()));
    for (int t = 1; t < spawn; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();
    result.summary.computed = todo.size();

    for (auto& s : slots) {
        if (!s) continue;
        if (s->reducible) ++result.summary.reducible;
        if (s->error) ++result.summary.errored;
        if (opts.keep_all || s->reducible || s->error) {
            if (!opts.timing) s->elapsed.reset();
            result.records.push_back(std::move(*s));
        }
    }
    return result;
}

int choose_m(int n, const MChoice& rule) {
    switch (rule.rule) {
    case MRule::Fixed: return rule.m;
    case MRule::NMinusOne: return n - 1;
    case MRule::HalfCoprime:
        for (int m = n / 2; m >= 1; --m) {
            if (std::gcd(m, n) == 1) return m;
        }
        return 1;
    }
    return rule.m;
}

std::vector<ConvergenceRow> convergence_table(Complex a, Complex b, std::vector<int> n_list, const MChoice& rule) {
    if (a == Complex{} || b == Complex{}) {
        fail(ErrorCode::InvalidArgument, "convergence table requires nonzero a and b");
    }
    std::sort(n_list.begin(), n_list.end());
    n_list.erase(std::unique(n_list.begin(), n_list.end()), n_list.end());
    const LimitMeasure lim = limit_measure(a, b);
    std::vector<ConvergenceRow> rows;
    for (int n : n_list) {
        const int m = choose_m(n, rule);
        const TrinomialSpec spec(n, m, a, b);
        spec.require_coprime();
        ConvergenceRow row;
        row.n = n;
        row.m = m;
        row.measure = measure_from_roots(spec).value;
        row.limit = lim.measure.value;
        row.gap = std::fabs(row.measure - row.limit);
        if (lim.limit.regime == LimitRegime::DominantA) {
            const SeriesResult s = series_measure(n, m, a, b);
            row.gap = std::abs(a) * std::fabs(std::expm1(s.correction));
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace trino
