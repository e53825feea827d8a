#include "trino/mahler.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace trino {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_series_domain(int n, int m, Complex a, Complex b) {
    if (!(0 < m && m < n)) {
        fail(ErrorCode::InvalidArgument, "series requires 0 < m < n");
    }
    if (a == Complex{} || b == Complex{}) {
        fail(ErrorCode::InvalidArgument, "series requires nonzero a and b");
    }
    if (std::gcd(m, n) != 1) {
        fail(ErrorCode::CoprimalityViolated,
             "series requires gcd(m, n) = 1, got gcd = " + std::to_string(std::gcd(m, n)));
    }
    if (std::abs(a) - std::abs(b) < 1.0) {
        fail(ErrorCode::DominanceViolated,
             "series requires |a| - |b| >= 1, got " + std::to_string(std::abs(a) - std::abs(b)));
    }
}

// log C(top, bottom) via log-gamma.
double log_binomial(double top, double bottom) {
    return std::lgamma(top + 1.0) - std::lgamma(bottom + 1.0) - std::lgamma(top - bottom + 1.0);
}

/// Re(b^p * a^{-q}) / |b^p a^{-q}| for integers p, q >= 0. Exact signs for
/// real inputs; otherwise the phase is reduced before the cosine.
double phase_cosine(Complex a, Complex b, long long p, long long q) {
    if (a.imag() == 0.0 && b.imag() == 0.0) {
        const bool neg = ((b.real() < 0 && (p % 2 != 0)) != (a.real() < 0 && (q % 2 != 0)));
        return neg ? -1.0 : 1.0;
    }
    const double ph = std::fmod(static_cast<double>(p) * std::arg(b), kTwoPi) -
                      std::fmod(static_cast<double>(q) * std::arg(a), kTwoPi);
    return std::cos(ph);
}

Complex phase_unit(Complex a, Complex b, long long p, long long q) {
    if (a.imag() == 0.0 && b.imag() == 0.0) {
        return {phase_cosine(a, b, p, q), 0.0};
    }
    const double ph = std::fmod(static_cast<double>(p) * std::arg(b), kTwoPi) -
                      std::fmod(static_cast<double>(q) * std::arg(a), kTwoPi);
    return std::polar(1.0, ph);
}

} // namespace

SeriesResult series_measure(int n, int m, Complex a, Complex b, const SeriesConfig& cfg, bool keep_trace) {
    check_series_domain(n, m, a, b);
    const double log_a = std::log(std::abs(a));
    const double log_b = std::log(std::abs(b));

    SeriesResult out;
    double sum = 0.0;
    double comp = 0.0; // Kahan compensation
    double prev_mag = 0.0;
    double last_ratio = 0.0;
    int rising = 0;
    int k = 1;
    for (; k <= cfg.max_terms; ++k) {
        const double kn = static_cast<double>(k) * n;
        const double km = static_cast<double>(k) * m;
        const double log_mag =
            log_binomial(kn - 1.0, km - 1.0) + (kn - km) * log_b - kn * log_a - std::log(km);
        const double mag = std::exp(log_mag);
        const long long kk = k;
        const double sign = (kk * n) % 2 == 0 ? 1.0 : -1.0;
        const double term = -sign * mag * phase_cosine(a, b, kk * (n - m), kk * n);

        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;

        if (keep_trace) {
            out.trace.push_back({k, term, mag});
        }
        if (k > 1 && prev_mag > 0.0) {
            last_ratio = mag / prev_mag;
            rising = last_ratio >= 1.0 - cfg.ratio_slack ? rising + 1 : 0;
            if (rising >= cfg.divergence_window) {
                throw Error(ErrorCode::DivergenceDetected,
                            "series terms stopped decaying (ratio " + std::to_string(last_ratio) +
                                " over " + std::to_string(cfg.divergence_window) + " terms at k = " +
                                std::to_string(k) + ")");
            }
        }
        prev_mag = mag;
        if (mag < cfg.tolerance) {
            out.converged = true;
            break;
        }
    }
    out.terms_used = std::min(k, cfg.max_terms);
    if (!out.converged) {
        throw Error(ErrorCode::DivergenceDetected,
                    "series did not reach tolerance within " + std::to_string(cfg.max_terms) +
                        " terms (last term " + std::to_string(prev_mag) + ")");
    }

    double tail = 0.0;
    if (last_ratio > 0.0 && last_ratio < 1.0) {
        tail = prev_mag * last_ratio / (1.0 - last_ratio);
    }
    out.measure.method = MeasureMethod::Series;
    out.correction = sum;
    out.measure.log_value = log_a + sum;
    out.measure.value = std::exp(out.measure.log_value);
    out.measure.error_bound = out.measure.value * std::expm1(tail);
    return out;
}

SeriesTerm residue_term(int k, int n, int m, Complex a, Complex b, bool with_quadrature, const QuadConfig& cfg) {
    if (k < 1) {
        fail(ErrorCode::InvalidArgument, "residue index k must be >= 1");
    }
    check_series_domain(n, m, a, b);
    SeriesTerm out{k, 0.0, Complex{}, std::nullopt, 0.0};
    if (k % m == 0) {
        const long long j = k / m;
        const double jn = static_cast<double>(j) * n;
        const double log_mag = log_binomial(jn - 1.0, k - 1.0) + static_cast<double>(j) * (n - m) * std::log(std::abs(b)) -
                               jn * std::log(std::abs(a));
        const double sign = (j * n) % 2 == 0 ? 1.0 : -1.0;
        out.i_k = kTwoPi * sign * std::exp(log_mag) * phase_unit(a, b, j * (n - m), j * n);
        out.closed_form = -out.i_k.real() / (kTwoPi * k);
    }
    if (with_quadrature) {
        auto integrand = [=](double t) {
            const Complex w = -a * std::polar(1.0, static_cast<double>(m) * t) - b;
            return std::polar(1.0, static_cast<double>(n) * k * t) / std::pow(w, k);
        };
        const int panels = n * k + 4;
        const QuadResult re = integrate([&](double t) { return integrand(t).real(); }, 0.0, kTwoPi, cfg, {}, panels);
        const QuadResult im = integrate([&](double t) { return integrand(t).imag(); }, 0.0, kTwoPi, cfg, {}, panels);
        out.i_k_quadrature = Complex{re.value, im.value};
        out.quadrature_error = re.error_estimate + im.error_estimate;
    }
    return out;
}

} // namespace trino
