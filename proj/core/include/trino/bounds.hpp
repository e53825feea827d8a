#ifndef TRINO_BOUNDS_HPP
#define TRINO_BOUNDS_HPP

#include "trino/roots.hpp"
#include "trino/trinomial.hpp"

#include <optional>
#include <string_view>

namespace trino {

/// Slack used when a floating-point house is compared with a closed form.
inline constexpr double kHouseSlack = 1e-10;

struct HouseBoundReport {
    FamilyForm family;
    double bound = 1.0; ///< 1 + log(a-1)/(n-m) for R, S; 1 + log(a)/(n-m) for T
    double t0 = 0.0;    ///< exp(log(.)/(n-m)) - 1, solves (1+t)^(n-m) = a-1 (or a)
    double house = 1.0;
    double labeled_root = 1.0; ///< modulus of r1, s3 or t1
    bool satisfied = false;    ///< house >= bound - kHouseSlack
};

/// Requires a >= 2, gcd(m, n) = 1 and the family parity. S with m odd has no
/// bound and raises NoBoundAvailable.
HouseBoundReport house_lower_bound(const FamilyForm& f);

struct ComparisonBounds {
    int n = 0;
    double dimitrov = 1.0;      ///< 2^(1/(4n))
    double matveev = 1.0;       ///< exp(log(n + 0.5) / n^2)
    std::optional<double> rhin_wu; ///< n >= 4 only
    double voutier = 1.0;       ///< 1 + (loglog n / log n)^3 / (2n)
    double verger_gaugry = 1.0; ///< stated for the inverse of the root of z^n + z - 1 only
    double smyth_boyd_house = 1.0; ///< theta0^(3/(2n))
    double trivial_mn = 1.0;    ///< 2^(1/n)
};

inline constexpr double kPlasticNumber = 1.324717957244746;

ComparisonBounds comparison_bounds(int n);

enum class Extremality { NotExtremal, Undetermined };

std::string_view to_string(Extremality e) noexcept;

struct ExtremalityVerdict {
    FamilyForm form;
    double house = 1.0;
    double threshold = 1.0; ///< 2^(1/n)
    double slack = kHouseSlack;
    Extremality verdict = Extremality::Undetermined;
    /// T only: 1 - a 2^(m/n) < 0, i.e. T has a real root above 2^(1/n).
    std::optional<bool> sign_certificate;
};

/// Decided from the computed house for every family: NotExtremal when
/// house > 2^(1/n) + slack, Undetermined otherwise. Requires integer a >= 2.
ExtremalityVerdict check_extremality(const FamilyForm& f);

} // namespace trino

#endif
