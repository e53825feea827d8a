#ifndef TRINO_TESTS_ORACLES_HPP
#define TRINO_TESTS_ORACLES_HPP

// Reference computations that share no code with the library.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

/// Eigenvalues of the companion matrix of sum c[i] z^i (ascending, c.back() != 0).
std::vector<cplx> companion_roots(const std::vector<cplx>& c);

/// Ascending coefficients of z^n + a z^m + b.
std::vector<cplx> trinomial(int n, int m, cplx a, cplx b);

/// |lc| * prod max(1, |root|) from companion_roots.
double mahler(const std::vector<cplx>& c);
double house(const std::vector<cplx>& c);

/// Real roots of z^n + a z^m + b (real a, b) found by scanning [-R, R] on a
/// fine grid and bisecting every sign change. Roots of even multiplicity are
/// invisible to it.
std::vector<double> real_roots(int n, int m, double a, double b);

/// Brute force over root subsets: a monic integer polynomial is reducible
/// iff some proper subset of its roots has integer elementary symmetric
/// functions. Degree <= 16.
bool monic_irreducible(const std::vector<long long>& coeffs);

/// Periodic trapezoid rule on [0, 2 pi): exponentially accurate for analytic
/// periodic integrands.
template <class F>
auto periodic_trapezoid(F f, int points) {
    using R = decltype(f(0.0));
    R sum{};
    const double h = 2.0 * 3.14159265358979323846 / points;
    for (int i = 0; i < points; ++i) sum += f(i * h);
    return sum * h;
}

/// Deterministic generator shared by the property tests.
struct Gen {
    explicit Gen(std::uint64_t seed) : rng(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
    bool coin() { return std::bernoulli_distribution(0.5)(rng); }
    int sign() { return coin() ? 1 : -1; }
    /// m in [1, n) with gcd(m, n) = 1 and the requested parity (0: any, 1: odd, 2: even).
    int coprime_m(int n, int parity = 0);
    std::mt19937_64 rng;
};

} // namespace oracle

#endif
