#include "trino/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace trino {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Evaluation {
    Complex value;
    Complex derivative;
    double scale; // sum |c_i| |z|^i
};

class DenseEvaluator {
public:
    explicit DenseEvaluator(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
        abs_.reserve(c_.size());
        for (auto c : c_) {
            abs_.push_back(std::abs(c));
        }
    }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Evaluation operator()(Complex z) const {
        Complex p = c_.back();
        Complex dp = 0.0;
        double s = abs_.back();
        const double r = std::abs(z);
        for (std::size_t k = c_.size() - 1; k-- > 0;) {
            dp = dp * z + p;
            p = p * z + c_[k];
            s = s * r + abs_[k];
        }
        return {p, dp, s};
    }

    const std::vector<Complex>& coeffs() const { return c_; }

private:
    std::vector<Complex> c_;
    std::vector<double> abs_;
};

class TrinomialEvaluator {
public:
    explicit TrinomialEvaluator(const TrinomialSpec& spec) : spec_(spec) {}
    int degree() const { return spec_.n(); }
    Evaluation operator()(Complex z) const {
        auto e = eval_with_derivative(spec_, z);
        return {e.value, e.derivative, e.magnitude_bound};
    }

private:
    TrinomialSpec spec_;
};

void place_on_circle(std::vector<Complex>& out, int count, double radius, double offset) {
    for (int k = 0; k < count; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / count + offset;
        out.push_back(std::polar(radius, theta));
    }
}

// Unique positive root of x^n - sum_{k<n} w_k x^k (w_k >= 0, not all zero),
// i.e. the Cauchy radius. Found by bisection on a bracket.
double cauchy_radius(const std::vector<double>& w) {
    const std::size_t n = w.size() - 1;
    auto f = [&](double x) {
        double s = 1.0;
        for (std::size_t k = n; k-- > 0;) {
            s = s * x - w[k];
        }
        return s;
    };
    double lo = 0.0;
    double hi = 1.0;
    while (f(hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return hi;
}

// Bini's initialization: the upper convex hull of (k, log|c_k|) gives the
// radii of the annuli the roots cluster in and how many roots each holds.
std::vector<Complex> newton_polygon_start(const std::vector<Complex>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<int> idx;
    std::vector<double> lg(c.size());
    for (int k = 0; k <= n; ++k) {
        const double a = std::abs(c[static_cast<std::size_t>(k)]);
        lg[static_cast<std::size_t>(k)] = a > 0.0 ? std::log(a) : -std::numeric_limits<double>::infinity();
    }
    for (int k = 0; k <= n; ++k) {
        if (!std::isfinite(lg[static_cast<std::size_t>(k)])) {
            continue;
        }
        while (idx.size() >= 2) {
            const int i = idx[idx.size() - 2];
            const int j = idx.back();
            // Remove j if it lies on or below the segment from i to k.
            const double cross = (lg[static_cast<std::size_t>(j)] - lg[static_cast<std::size_t>(i)]) * (k - i) -
                                 (lg[static_cast<std::size_t>(k)] - lg[static_cast<std::size_t>(i)]) * (j - i);
            if (cross <= 0.0) {
                idx.pop_back();
            } else {
                break;
            }
        }
        idx.push_back(k);
    }
    std::vector<Complex> z;
    z.reserve(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e + 1 < idx.size(); ++e) {
        const int i = idx[e];
        const int j = idx[e + 1];
        const double radius =
            std::exp((lg[static_cast<std::size_t>(i)] - lg[static_cast<std::size_t>(j)]) / (j - i));
        place_on_circle(z, j - i, radius, 2.0 * std::numbers::pi * i / n + 0.4);
    }
    return z;
}

std::vector<Complex> trinomial_start(const TrinomialSpec& spec) {
    const int n = spec.n();
    const int m = spec.m();
    const double aa = std::abs(spec.a());
    const double bb = std::abs(spec.b());
    std::vector<Complex> z;
    z.reserve(static_cast<std::size_t>(n));
    if (aa > bb + 1.0) {
        place_on_circle(z, m, std::pow(bb / aa, 1.0 / m), 0.4);
        place_on_circle(z, n - m, std::pow(aa, 1.0 / (n - m)), 0.7);
        return z;
    }
    // Annulus from coefficient bounds: every root modulus lies between the
    // positive roots of x^n + |a| x^m - |b| and x^n - |a| x^m - |b|.
    std::vector<double> upper(static_cast<std::size_t>(n) + 1, 0.0);
    upper[0] = bb;
    upper[static_cast<std::size_t>(m)] = aa;
    upper[static_cast<std::size_t>(n)] = 1.0;
    const double hi = cauchy_radius(upper);
    // Lower bound: 1 / Cauchy radius of the reversed polynomial.
    std::vector<double> rev(static_cast<std::size_t>(n) + 1, 0.0);
    rev[0] = 1.0 / bb;
    rev[static_cast<std::size_t>(n - m)] = aa / bb;
    rev[static_cast<std::size_t>(n)] = 1.0;
    const double lo = 1.0 / cauchy_radius(rev);
    place_on_circle(z, n, std::sqrt(lo * hi), 0.4);
    return z;
}

template <class Eval>
RootSet aberth(const Eval& ev, std::vector<Complex> z, const RootConfig& cfg) {
    const int n = ev.degree();
    const double stop_factor = 4.0 * (n + 1) * kEps;
    std::vector<char> done(z.size(), 0);
    int it = 0;
    bool all_done = false;
    for (; it < cfg.max_iterations && !all_done; ++it) {
        all_done = true;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (done[i]) {
                continue;
            }
            const Evaluation e = ev(z[i]);
            if (std::abs(e.value) <= stop_factor * e.scale) {
                done[i] = 1;
                continue;
            }
            all_done = false;
            Complex ratio;
            if (e.derivative == Complex{}) {
                ratio = Complex{1e-3 * (1.0 + std::abs(z[i])), 0.0};
            } else {
                ratio = e.value / e.derivative;
            }
            Complex repulsion = 0.0;
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j != i) {
                    repulsion += 1.0 / (z[i] - z[j]);
                }
            }
            const Complex w = ratio / (1.0 - ratio * repulsion);
            z[i] -= w;
            if (std::abs(w) <= 2.0 * kEps * std::abs(z[i])) {
                done[i] = 1;
            }
        }
    }

    RootSet rs;
    rs.iterations = it;
    rs.errors.resize(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        // Terminal Newton pass, kept only when it lowers the residual.
        Evaluation e = ev(z[i]);
        if (e.derivative != Complex{}) {
            const Complex cand = z[i] - e.value / e.derivative;
            const Evaluation ec = ev(cand);
            if (std::abs(ec.value) < std::abs(e.value)) {
                z[i] = cand;
                e = ec;
            }
        }
        const double noise = std::abs(e.value) + 4.0 * kEps * e.scale;
        const double dp = std::abs(e.derivative);
        rs.errors[i] = dp > 0.0 ? n * noise / dp : std::numeric_limits<double>::infinity();
    }
    rs.roots = std::move(z);
    rs.residual_bound = rs.errors.empty() ? 0.0 : *std::max_element(rs.errors.begin(), rs.errors.end());
    rs.certified = all_done && rs.residual_bound <= cfg.certification_tolerance;
    if (!all_done) {
        throw ConvergenceFailure("Aberth iteration did not converge within " +
                                     std::to_string(cfg.max_iterations) + " iterations (residual bound " +
                                     std::to_string(rs.residual_bound) + ")",
                                 rs);
    }
    return rs;
}

void sort_roots(RootSet& rs) {
    std::vector<std::size_t> order(rs.roots.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const Complex a = rs.roots[x];
        const Complex b = rs.roots[y];
        if (a.real() != b.real()) {
            return a.real() > b.real();
        }
        return a.imag() > b.imag();
    });
    RootSet out;
    out.residual_bound = rs.residual_bound;
    out.certified = rs.certified;
    out.iterations = rs.iterations;
    for (auto i : order) {
        out.roots.push_back(rs.roots[i]);
        out.errors.push_back(rs.errors[i]);
    }
    rs = std::move(out);
}

RootSet roots_of_squarefree_dense(const std::vector<Complex>& coeffs, const RootConfig& cfg) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    RootSet rs;
    if (deg == 1) {
        rs.roots = {-coeffs[0] / coeffs[1]};
        rs.errors = {4.0 * kEps * std::abs(rs.roots[0])};
        rs.residual_bound = rs.errors[0];
        rs.certified = true;
        return rs;
    }
    DenseEvaluator ev(coeffs);
    return aberth(ev, newton_polygon_start(coeffs), cfg);
}

void append(RootSet& into, const RootSet& part, int multiplicity) {
    for (int k = 0; k < multiplicity; ++k) {
        into.roots.insert(into.roots.end(), part.roots.begin(), part.roots.end());
        into.errors.insert(into.errors.end(), part.errors.begin(), part.errors.end());
    }
    into.residual_bound = std::max(into.residual_bound, part.residual_bound);
    into.iterations = std::max(into.iterations, part.iterations);
}

} // namespace

double RootSet::max_modulus() const {
    double best = 0.0;
    for (auto r : roots) {
        best = std::max(best, std::abs(r));
    }
    return best;
}

RootSet all_roots(const IntPolynomial& p, const RootConfig& cfg) {
    if (p.degree() < 1) {
        fail(ErrorCode::InvalidArgument, "root finding requires degree >= 1");
    }
    RootSet rs;
    std::size_t zeros = 0;
    while (p[zeros] == 0) {
        ++zeros;
    }
    for (std::size_t k = 0; k < zeros; ++k) {
        rs.roots.emplace_back(0.0, 0.0);
        rs.errors.push_back(0.0);
    }
    std::vector<BigInt> rest(p.coeffs().begin() + static_cast<std::ptrdiff_t>(zeros), p.coeffs().end());
    IntPolynomial q(std::move(rest));
    if (q.degree() >= 1) {
        for (const auto& sf : squarefree_decomposition(q)) {
            std::vector<Complex> c;
            for (double x : sf.factor.to_doubles()) {
                c.emplace_back(x, 0.0);
            }
            append(rs, roots_of_squarefree_dense(c, cfg), sf.multiplicity);
        }
    }
    rs.certified = rs.residual_bound <= cfg.certification_tolerance;
    sort_roots(rs);
    return rs;
}

RootSet all_roots(const std::vector<Complex>& coeffs, const RootConfig& cfg) {
    std::vector<Complex> c = coeffs;
    while (!c.empty() && c.back() == Complex{}) {
        c.pop_back();
    }
    if (c.size() < 2) {
        fail(ErrorCode::InvalidArgument, "root finding requires degree >= 1");
    }
    RootSet rs;
    std::size_t zeros = 0;
    while (c[zeros] == Complex{}) {
        ++zeros;
    }
    for (std::size_t k = 0; k < zeros; ++k) {
        rs.roots.emplace_back(0.0, 0.0);
        rs.errors.push_back(0.0);
    }
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
    if (c.size() >= 2) {
        append(rs, roots_of_squarefree_dense(c, cfg), 1);
    }
    rs.certified = rs.residual_bound <= cfg.certification_tolerance;
    sort_roots(rs);
    return rs;
}

RootSet all_roots(const TrinomialSpec& spec, const RootConfig& cfg) {
    if (spec.has_integer_coefficients()) {
        const IntPolynomial dense = to_dense(spec);
        if (!is_squarefree(dense)) {
            return all_roots(dense, cfg);
        }
    }
    RootSet rs = aberth(TrinomialEvaluator(spec), trinomial_start(spec), cfg);
    sort_roots(rs);
    return rs;
}

bool is_reciprocal(const IntPolynomial& p) {
    if (p.is_zero()) {
        fail(ErrorCode::InvalidArgument, "is_reciprocal requires a nonzero polynomial");
    }
    const auto c = p.coeffs();
    for (std::size_t i = 0, j = c.size() - 1; i < j; ++i, --j) {
        if (c[i] != c[j]) {
            return false;
        }
    }
    return true;
}

} // namespace trino
