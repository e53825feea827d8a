#ifndef TRINO_MAHLER_HPP
#define TRINO_MAHLER_HPP

#include "trino/int_poly.hpp"
#include "trino/quadrature.hpp"
#include "trino/roots.hpp"
#include "trino/trinomial.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace trino {

enum class MeasureMethod { Roots, Jensen, Series, ClosedForm };

std::string_view to_string(MeasureMethod m) noexcept;

struct MeasureResult {
    double value = 1.0;     ///< M(P)
    double log_value = 0.0; ///< log M(P)
    MeasureMethod method = MeasureMethod::Roots;
    double error_bound = 0.0; ///< absolute, on `value`
};

/// |a0| * prod max(1, |root|).
MeasureResult measure_from_roots(const TrinomialSpec& spec, const RootConfig& cfg = {});
MeasureResult measure_from_roots(const IntPolynomial& p, const RootConfig& cfg = {});

/// log M = (1/2pi) int_0^{2pi} log|e^{int} + a e^{imt} + b| dt by adaptive
/// Gauss-Kronrod. Near-zeros of P on the unit circle are located on a grid,
/// refined, and used as panel breakpoints.
MeasureResult measure_jensen(const TrinomialSpec& spec, const QuadConfig& cfg = {});

/// Largest root modulus.
double house(const TrinomialSpec& spec, const RootConfig& cfg = {});
double house(const IntPolynomial& p, const RootConfig& cfg = {});

// ---------------------------------------------------------------------------
// Limits as n -> infinity

enum class LimitRegime { DominantA, DominantB, SubUnit, Oscillatory };

std::string_view to_string(LimitRegime r) noexcept;

struct LimitCase {
    LimitRegime regime;
    std::optional<double> gamma; ///< present iff Oscillatory
};

/// DominantA: |a|-|b| >= 1, DominantB: |b|-|a| >= 1, SubUnit: |a|+|b| <= 1,
/// Oscillatory otherwise (||a|-|b|| < 1 < |a|+|b|), with
/// gamma = arccos((1 - |a|^2 - |b|^2) / (2|ab|)).
LimitCase limit_case(Complex a, Complex b);

struct LimitMeasure {
    LimitCase limit;
    MeasureResult measure;
};

/// lim_{n->inf} M(z^n + a z^m + b); independent of m.
LimitMeasure limit_measure(Complex a, Complex b, const QuadConfig& cfg = {});

// ---------------------------------------------------------------------------
// Exact series for |a| - |b| >= 1

struct SeriesConfig {
    double tolerance = 1e-12;
    int max_terms = 10000;
    /// Term-ratio monitor: this many consecutive ratios >= 1 - ratio_slack
    /// means the series is not decaying.
    int divergence_window = 10;
    double ratio_slack = 1e-6;
};

struct SeriesTermTrace {
    int k;
    double term;      ///< signed contribution added to log|a|
    double magnitude; ///< |term| before the cosine factor
};

struct SeriesResult {
    MeasureResult measure;
    double correction = 0.0; ///< log M - log|a|, kept separately so it survives when tiny
    int terms_used = 0;
    bool converged = false; ///< stopped on tolerance rather than on max_terms
    std::vector<SeriesTermTrace> trace;
};

/// log M = log|a| - sum_k (1/(km)) (-1)^{kn} C(kn-1, km-1) Re(b^{-km} (b/a)^{kn}).
/// Binomials are handled in the log domain. Throws CoprimalityViolated,
/// DominanceViolated or DivergenceDetected.
SeriesResult series_measure(int n, int m, Complex a, Complex b, const SeriesConfig& cfg = {},
                            bool keep_trace = false);

/// The k-th contour integral I_k = int_0^{2pi} e^{inkt} (-a e^{imt} - b)^{-k} dt.
struct SeriesTerm {
    int k;
    double closed_form;  ///< -(1/(2 pi k)) Re(I_k): this index's contribution to log M - log|a|
    Complex i_k;         ///< I_k from the residue at infinity
    std::optional<Complex> i_k_quadrature;
    double quadrature_error = 0.0;
};

/// Closed form from the residue at infinity: zero unless m | k, in which
/// case I_k = 2 pi (-1)^{kn/m} C(kn/m - 1, k - 1) b^{k(n-m)/m} a^{-kn/m}.
/// With `with_quadrature`, I_k is also integrated numerically.
SeriesTerm residue_term(int k, int n, int m, Complex a, Complex b, bool with_quadrature = false,
                        const QuadConfig& cfg = {});

} // namespace trino

#endif
