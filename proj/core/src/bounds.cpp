#include "trino/bounds.hpp"

#include "trino/error.hpp"
#include "trino/mahler.hpp"

#include <algorithm>
#include <cmath>

namespace trino {

namespace {

void require_bound_input(const FamilyForm& f) {
    f.validate_for_bounds();
    if (f.gcd_mn() != 1) {
        fail(ErrorCode::CoprimalityViolated, "house bounds require gcd(m, n) = 1");
    }
}

} // namespace

HouseBoundReport house_lower_bound(const FamilyForm& f) {
    require_bound_input(f);
    if (f.family == Family::S && f.m % 2 != 0) {
        fail(ErrorCode::NoBoundAvailable, "no lower bound for S with m and n both odd");
    }
    HouseBoundReport r;
    r.family = f;
    const double target = f.family == Family::T ? f.a : f.a - 1.0;
    const double x = std::log(target) / (f.n - f.m);
    r.bound = 1.0 + x;
    r.t0 = std::expm1(x);
    r.house = house(f.to_spec());
    const ClassifiedRealRoots cr = classify_real_roots(f);
    r.labeled_root = std::fabs(cr.bounded_root().value_or(0.0));
    r.satisfied = r.house >= r.bound - kHouseSlack;
    return r;
}

ComparisonBounds comparison_bounds(int n) {
    if (n < 3) {
        fail(ErrorCode::InvalidArgument, "comparison bounds require n >= 3");
    }
    const double dn = n;
    const double ln = std::log(dn);
    ComparisonBounds c;
    c.n = n;
    c.dimitrov = std::exp2(1.0 / (4.0 * dn));
    c.matveev = std::exp(std::log(dn + 0.5) / (dn * dn));
    if (n >= 4) {
        const double base = n <= 12 ? dn / 3.0 : dn / 2.0;
        c.rhin_wu = std::exp(3.0 * std::log(base) / (dn * dn));
    }
    c.voutier = 1.0 + std::pow(std::log(ln) / ln, 3) / (2.0 * dn);
    c.verger_gaugry = 1.0 + ln * (1.0 - std::log(ln) / ln) / dn;
    c.smyth_boyd_house = std::pow(kPlasticNumber, 3.0 / (2.0 * dn));
    c.trivial_mn = std::exp2(1.0 / dn);
    return c;
}

std::string_view to_string(Extremality e) noexcept {
    return e == Extremality::NotExtremal ? "not-extremal" : "undetermined";
}

ExtremalityVerdict check_extremality(const FamilyForm& f) {
    require_bound_input(f);
    if (f.a != std::floor(f.a)) {
        fail(ErrorCode::InvalidArgument, "extremality requires an integer a");
    }
    const RootSet rs = all_roots(f.to_spec());
    ExtremalityVerdict v;
    v.form = f;
    v.house = rs.max_modulus();
    v.threshold = std::exp2(1.0 / f.n);
    const double err = rs.errors.empty() ? 0.0 : *std::max_element(rs.errors.begin(), rs.errors.end());
    v.slack = kHouseSlack + err;
    v.verdict = v.house > v.threshold + v.slack ? Extremality::NotExtremal : Extremality::Undetermined;
    if (f.family == Family::T) {
        v.sign_certificate = 1.0 - f.a * std::exp2(static_cast<double>(f.m) / f.n) < 0.0;
    }
    return v;
}

} // namespace trino
