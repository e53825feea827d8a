#include "trino/quadrature.hpp"

#include "trino/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>

namespace trino {

namespace {

// Kronrod 15-point abscissae (positive half) and weights; Gauss 7-point
// weights for the shared nodes at odd indices.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double lo;
    double hi;
    double value;
    double error;
};

struct ByError {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double kronrod = fc * kWk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXk[static_cast<std::size_t>(j)];
        const double s = f(center - dx) + f(center + dx);
        kronrod += kWk[static_cast<std::size_t>(j)] * s;
        if (j % 2 == 1) {
            gauss += kWg[static_cast<std::size_t>(j / 2)] * s;
        }
    }
    return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

} // namespace

QuadResult integrate(const std::function<double(double)>& f, double lo, double hi, const QuadConfig& cfg,
                     std::span<const double> breakpoints, int initial_panels) {
    if (!(lo < hi)) {
        return {};
    }
    std::vector<double> cuts{lo};
    std::vector<double> bp(breakpoints.begin(), breakpoints.end());
    std::sort(bp.begin(), bp.end());
    for (double b : bp) {
        if (b > cuts.back() && b < hi) {
            cuts.push_back(b);
        }
    }
    cuts.push_back(hi);

    std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
    std::size_t evals = 0;
    double total_error = 0.0;
    const int splits = std::max(1, initial_panels);
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const double width = (cuts[c + 1] - cuts[c]) / splits;
        for (int s = 0; s < splits; ++s) {
            const double plo = cuts[c] + s * width;
            const double phi = s + 1 == splits ? cuts[c + 1] : plo + width;
            Panel p = gauss_kronrod(f, plo, phi);
            evals += 15;
            total_error += p.error;
            heap.push(p);
        }
    }

    while (total_error > cfg.abs_tolerance) {
        if (evals + 30 > cfg.max_evaluations) {
            throw Error(ErrorCode::QuadratureBudgetExceeded,
                        "quadrature budget of " + std::to_string(cfg.max_evaluations) +
                            " evaluations exhausted with error estimate " + std::to_string(total_error));
        }
        Panel worst = heap.top();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            // Panel cannot be split further in double precision; accept it.
            break;
        }
        heap.pop();
        Panel left = gauss_kronrod(f, worst.lo, mid);
        Panel right = gauss_kronrod(f, mid, worst.hi);
        evals += 30;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    std::vector<Panel> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
    QuadResult out;
    out.evaluations = evals;
    out.panels = panels.size();
    for (const auto& p : panels) {
        out.value += p.value;
        out.error_estimate += p.error;
    }
    return out;
}

} // namespace trino
