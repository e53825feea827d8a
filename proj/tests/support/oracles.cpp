#include "oracles.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace oracle {

std::vector<cplx> companion_roots(const std::vector<cplx>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) M(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) M(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M, false);
    std::vector<cplx> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
    return out;
}

std::vector<cplx> trinomial(int n, int m, cplx a, cplx b) {
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1, 0.0);
    c[0] = b;
    c[static_cast<std::size_t>(m)] = a;
    c[static_cast<std::size_t>(n)] = 1.0;
    return c;
}

double mahler(const std::vector<cplx>& c) {
    double v = std::abs(c.back());
    for (cplx r : companion_roots(c)) v *= std::max(1.0, std::abs(r));
    return v;
}

double house(const std::vector<cplx>& c) {
    double h = 0.0;
    for (cplx r : companion_roots(c)) h = std::max(h, std::abs(r));
    return h;
}

static long double ipow(long double x, int e) {
    long double r = 1.0L;
    for (; e > 0; e >>= 1, x *= x) {
        if (e & 1) r *= x;
    }
    return r;
}

std::vector<double> real_roots(int n, int m, double a, double b) {
    auto p = [&](long double x) { return ipow(x, n) + a * ipow(x, m) + b; };
    const double R = 1.0 + std::fabs(a) + std::fabs(b);
    const int N = 200000;
    std::vector<double> roots;
    long double prev_x = -R, prev = p(prev_x);
    for (int i = 1; i <= N; ++i) {
        const long double x = -R + 2.0L * R * i / N;
        const long double v = p(x);
        if (v == 0.0L) {
            roots.push_back(static_cast<double>(x));
        } else if (prev != 0.0L && (prev < 0) != (v < 0)) {
            long double lo = prev_x, hi = x, flo = prev;
            for (int it = 0; it < 200; ++it) {
                const long double mid = (lo + hi) / 2;
                const long double fm = p(mid);
                if ((fm < 0) == (flo < 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(static_cast<double>((lo + hi) / 2));
        }
        prev_x = x;
        prev = v;
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

bool monic_irreducible(const std::vector<long long>& coeffs) {
    const int d = static_cast<int>(coeffs.size()) - 1;
    if (d > 16) throw std::invalid_argument("oracle degree too large");
    if (coeffs.back() != 1) throw std::invalid_argument("oracle needs a monic polynomial");
    if (d <= 1) return true;
    std::vector<cplx> c(coeffs.begin(), coeffs.end());
    const std::vector<cplx> r = companion_roots(c);
    for (std::uint32_t mask = 1; mask < (1U << d) - 1; ++mask) {
        const int k = std::popcount(mask);
        if (2 * k > d) continue;
        std::vector<cplx> q{1.0};
        for (int i = 0; i < d; ++i) {
            if (!(mask & (1U << i))) continue;
            std::vector<cplx> nq(q.size() + 1, 0.0);
            for (std::size_t j = 0; j < q.size(); ++j) {
                nq[j + 1] += q[j];
                nq[j] -= r[static_cast<std::size_t>(i)] * q[j];
            }
            q = std::move(nq);
        }
        bool integral = true;
        for (cplx v : q) {
            if (std::fabs(v.imag()) > 1e-6 || std::fabs(v.real() - std::round(v.real())) > 1e-6) {
                integral = false;
                break;
            }
        }
        if (integral) return false;
    }
    return true;
}

int Gen::coprime_m(int n, int parity) {
    std::vector<int> ok;
    for (int m = 1; m < n; ++m) {
        if (std::gcd(m, n) != 1) continue;
        if (parity == 1 && m % 2 == 0) continue;
        if (parity == 2 && m % 2 != 0) continue;
        ok.push_back(m);
    }
    if (ok.empty()) throw std::invalid_argument("no admissible m");
    return ok[static_cast<std::size_t>(uniform(0, static_cast<int>(ok.size()) - 1))];
}

} // namespace oracle
