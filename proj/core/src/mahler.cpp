#include "trino/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace trino {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

MeasureResult from_roots(const RootSet& rs, double log_leading) {
    if (!rs.certified) {
        throw ConvergenceFailure("root set not certified (residual bound " +
                                     std::to_string(rs.residual_bound) + ")",
                                 rs);
    }
    double log_m = log_leading;
    double rel_err = 0.0;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        const double r = std::abs(rs.roots[i]);
        if (r > 1.0) {
            log_m += std::log(r);
        }
        if (r + rs.errors[i] > 1.0) {
            rel_err += rs.errors[i] / std::max(1.0, r);
        }
    }
    MeasureResult out;
    out.log_value = log_m;
    out.value = std::exp(log_m);
    out.method = MeasureMethod::Roots;
    out.error_bound = out.value * rel_err;
    return out;
}

// Local minima of |P(e^{it})| on a uniform grid, each refined by golden
// section search. Returned sorted in [0, 2pi).
std::vector<double> circle_minima(const TrinomialSpec& spec) {
    const int samples = std::max(256, 32 * (spec.n() + 1));
    const double h = kTwoPi / samples;
    auto mag = [&](double t) { return std::abs(eval(spec, std::polar(1.0, t))); };
    std::vector<double> v(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        v[static_cast<std::size_t>(i)] = mag(i * h);
    }
    std::vector<double> out;
    constexpr double invphi = 0.6180339887498949;
    for (int i = 0; i < samples; ++i) {
        const double prev = v[static_cast<std::size_t>((i + samples - 1) % samples)];
        const double next = v[static_cast<std::size_t>((i + 1) % samples)];
        const double cur = v[static_cast<std::size_t>(i)];
        if (!(cur <= prev && cur < next)) {
            continue;
        }
        double lo = (i - 1) * h;
        double hi = (i + 1) * h;
        double x1 = hi - invphi * (hi - lo);
        double x2 = lo + invphi * (hi - lo);
        double f1 = mag(x1);
        double f2 = mag(x2);
        for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - invphi * (hi - lo);
                f1 = mag(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + invphi * (hi - lo);
                f2 = mag(x2);
            }
        }
        double t = 0.5 * (lo + hi);
        t = std::fmod(t + kTwoPi, kTwoPi);
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::string_view to_string(MeasureMethod m) noexcept {
    switch (m) {
    case MeasureMethod::Roots: return "roots";
    case MeasureMethod::Jensen: return "jensen";
    case MeasureMethod::Series: return "series";
    case MeasureMethod::ClosedForm: return "closed-form";
    }
    return "?";
}

std::string_view to_string(LimitRegime r) noexcept {
    switch (r) {
    case LimitRegime::DominantA: return "dominant-a";
    case LimitRegime::DominantB: return "dominant-b";
    case LimitRegime::SubUnit: return "sub-unit";
    case LimitRegime::Oscillatory: return "oscillatory";
    }
    return "?";
}

MeasureResult measure_from_roots(const TrinomialSpec& spec, const RootConfig& cfg) {
    return from_roots(all_roots(spec, cfg), 0.0);
}

MeasureResult measure_from_roots(const IntPolynomial& p, const RootConfig& cfg) {
    if (p.degree() < 1) {
        fail(ErrorCode::InvalidArgument, "Mahler measure from roots requires degree >= 1");
    }
    BigInt lc = abs(p.leading());
    // log of an arbitrary-size integer without overflowing a double.
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, lc.get_mpz_t());
    const double log_lc = std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
    return from_roots(all_roots(p, cfg), log_lc);
}

MeasureResult measure_jensen(const TrinomialSpec& spec, const QuadConfig& cfg) {
    auto integrand = [&](double t) {
        const double v = std::abs(eval(spec, std::polar(1.0, t)));
        return std::log(std::max(v, std::numeric_limits<double>::min()));
    };
    const std::vector<double> cuts = circle_minima(spec);
    const QuadResult q = integrate(integrand, 0.0, kTwoPi, cfg, cuts, 2);
    MeasureResult out;
    out.log_value = q.value / kTwoPi;
    out.value = std::exp(out.log_value);
    out.method = MeasureMethod::Jensen;
    out.error_bound = out.value * std::expm1(q.error_estimate / kTwoPi);
    return out;
}

double house(const TrinomialSpec& spec, const RootConfig& cfg) {
    return all_roots(spec, cfg).max_modulus();
}

double house(const IntPolynomial& p, const RootConfig& cfg) {
    return all_roots(p, cfg).max_modulus();
}

LimitCase limit_case(Complex a, Complex b) {
    if (a == Complex{} || b == Complex{}) {
        fail(ErrorCode::InvalidArgument, "limit_case requires nonzero a and b");
    }
    const double aa = std::abs(a);
    const double bb = std::abs(b);
    if (aa - bb >= 1.0) {
        return {LimitRegime::DominantA, std::nullopt};
    }
    if (bb - aa >= 1.0) {
        return {LimitRegime::DominantB, std::nullopt};
    }
    if (aa + bb <= 1.0) {
        return {LimitRegime::SubUnit, std::nullopt};
    }
    const double c = std::clamp((1.0 - aa * aa - bb * bb) / (2.0 * aa * bb), -1.0, 1.0);
    return {LimitRegime::Oscillatory, std::acos(c)};
}

LimitMeasure limit_measure(Complex a, Complex b, const QuadConfig& cfg) {
    const LimitCase lc = limit_case(a, b);
    const double aa = std::abs(a);
    const double bb = std::abs(b);
    MeasureResult m;
    m.method = MeasureMethod::ClosedForm;
    switch (lc.regime) {
    case LimitRegime::DominantA:
        m.value = aa;
        break;
    case LimitRegime::DominantB:
        m.value = bb;
        break;
    case LimitRegime::SubUnit:
        m.value = 1.0;
        break;
    case LimitRegime::Oscillatory: {
        auto integrand = [&](double t) { return std::log(aa * aa + 2.0 * aa * bb * std::cos(t) + bb * bb); };
        const QuadResult q = integrate(integrand, 0.0, *lc.gamma, cfg, {}, 4);
        m.method = MeasureMethod::Jensen;
        m.log_value = q.value / kTwoPi;
        m.value = std::exp(m.log_value);
        m.error_bound = m.value * std::expm1(q.error_estimate / kTwoPi);
        return {lc, m};
    }
    }
    m.log_value = std::log(m.value);
    return {lc, m};
}

} // namespace trino
