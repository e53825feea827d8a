#include "trino/trinomial.hpp"

#include "trino/error.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>

namespace trino {

namespace {

using ExtComplex = std::complex<long double>;

ExtComplex ipow(ExtComplex z, unsigned e) {
    ExtComplex result{1.0L, 0.0L};
    while (e > 0) {
        if (e & 1U) {
            result *= z;
        }
        e >>= 1U;
        if (e > 0) {
            z *= z;
        }
    }
    return result;
}

// Knuth's TwoSum.
inline void two_sum(long double a, long double b, long double& s, long double& err) {
    s = a + b;
    long double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
}

long double sum3(long double x, long double y, long double z) {
    long double s1, e1, s2, e2;
    two_sum(x, y, s1, e1);
    two_sum(s1, z, s2, e2);
    return s2 + (e1 + e2);
}

bool is_integer(Complex c) {
    return c.imag() == 0.0 && std::isfinite(c.real()) && std::nearbyint(c.real()) == c.real();
}

void format_coeff(std::ostringstream& os, Complex c) {
    if (c.imag() == 0.0) {
        os << c.real();
    } else {
        os << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    }
}

} // namespace

TrinomialSpec::TrinomialSpec(int n, int m, Complex a, Complex b) : n_(n), m_(m), a_(a), b_(b) {
    if (!(0 < m && m < n)) {
        fail(ErrorCode::InvalidArgument, "trinomial requires 0 < m < n");
    }
    if (a == Complex{} || b == Complex{}) {
        fail(ErrorCode::InvalidArgument, "trinomial coefficients a and b must be nonzero");
    }
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(b.real()) ||
        !std::isfinite(b.imag())) {
        fail(ErrorCode::InvalidArgument, "trinomial coefficients must be finite");
    }
}

int TrinomialSpec::gcd_mn() const noexcept {
    return std::gcd(m_, n_);
}

bool TrinomialSpec::has_integer_coefficients() const noexcept {
    return is_integer(a_) && is_integer(b_);
}

void TrinomialSpec::require_coprime() const {
    if (!coprime()) {
        fail(ErrorCode::CoprimalityViolated,
             "gcd(m, n) = " + std::to_string(gcd_mn()) + " but the operation requires coprime m, n");
    }
}

std::string TrinomialSpec::to_string(char var) const {
    std::ostringstream os;
    os << var << '^' << n_ << " + ";
    format_coeff(os, a_);
    os << var;
    if (m_ > 1) {
        os << '^' << m_;
    }
    os << " + ";
    format_coeff(os, b_);
    return os.str();
}

std::string_view to_string(Family f) noexcept {
    switch (f) {
    case Family::R: return "R";
    case Family::S: return "S";
    case Family::T: return "T";
    }
    return "?";
}

Family parse_family(std::string_view s) {
    if (s == "R" || s == "r") return Family::R;
    if (s == "S" || s == "s") return Family::S;
    if (s == "T" || s == "t") return Family::T;
    fail(ErrorCode::InvalidArgument, "unknown family '" + std::string(s) + "' (expected R, S or T)");
}

int FamilyForm::gcd_mn() const noexcept {
    return std::gcd(m, n);
}

void FamilyForm::validate() const {
    if (!(0 < m && m < n)) {
        fail(ErrorCode::InvalidArgument, "family form requires 0 < m < n");
    }
    if (!(a > 0.0) || !std::isfinite(a)) {
        fail(ErrorCode::InvalidArgument, "family form requires a > 0");
    }
    switch (family) {
    case Family::R:
        if (m % 2 == 0 || n % 2 != 0) {
            fail(ErrorCode::ParityViolated, "R family requires m odd and n even");
        }
        break;
    case Family::S:
        if (n % 2 == 0) {
            fail(ErrorCode::ParityViolated, "S family requires n odd");
        }
        break;
    case Family::T:
        break;
    }
}

void FamilyForm::validate_for_bounds() const {
    validate();
    if (!(a >= 2.0)) {
        fail(ErrorCode::InvalidArgument, "bound operations require a >= 2");
    }
}

TrinomialSpec FamilyForm::to_spec() const {
    switch (family) {
    case Family::R: return {n, m, -a, 1.0};
    case Family::S: return {n, m, a, -1.0};
    case Family::T: return {n, m, -a, -1.0};
    }
    fail(ErrorCode::InvalidArgument, "unknown family");
}

Complex eval(const TrinomialSpec& spec, Complex z) {
    const ExtComplex ze{z.real(), z.imag()};
    const ExtComplex zn = ipow(ze, static_cast<unsigned>(spec.n()));
    const ExtComplex azm =
        ExtComplex{spec.a().real(), spec.a().imag()} * ipow(ze, static_cast<unsigned>(spec.m()));
    const long double re = sum3(zn.real(), azm.real(), spec.b().real());
    const long double im = sum3(zn.imag(), azm.imag(), spec.b().imag());
    return {static_cast<double>(re), static_cast<double>(im)};
}

EvalWithDerivative eval_with_derivative(const TrinomialSpec& spec, Complex z) {
    const ExtComplex ze{z.real(), z.imag()};
    const ExtComplex ae{spec.a().real(), spec.a().imag()};
    const ExtComplex zm1 = ipow(ze, static_cast<unsigned>(spec.m() - 1));
    const ExtComplex zm = zm1 * ze;
    const ExtComplex zn1 = zm1 * ipow(ze, static_cast<unsigned>(spec.n() - spec.m()));
    const ExtComplex zn = zn1 * ze;
    const ExtComplex azm = ae * zm;
    const long double re = sum3(zn.real(), azm.real(), spec.b().real());
    const long double im = sum3(zn.imag(), azm.imag(), spec.b().imag());
    const ExtComplex d = static_cast<long double>(spec.n()) * zn1 +
                         ae * static_cast<long double>(spec.m()) * zm1;
    const double r = std::abs(z);
    return {
        {static_cast<double>(re), static_cast<double>(im)},
        {static_cast<double>(d.real()), static_cast<double>(d.imag())},
        std::pow(r, spec.n()) + std::abs(spec.a()) * std::pow(r, spec.m()) + std::abs(spec.b()),
    };
}

IntPolynomial to_dense(const TrinomialSpec& spec) {
    if (!spec.has_integer_coefficients()) {
        fail(ErrorCode::NonIntegerCoefficient,
             "dense integer form requires integer a and b, got " + spec.to_string());
    }
    std::vector<BigInt> v(static_cast<std::size_t>(spec.n()) + 1);
    v[0] = BigInt(spec.b().real());
    v[static_cast<std::size_t>(spec.m())] = BigInt(spec.a().real());
    v[static_cast<std::size_t>(spec.n())] = 1;
    return IntPolynomial(std::move(v));
}

NormalizedForm normalize(int n, int m, double a, int b) {
    if (!(0 < m && m < n)) {
        fail(ErrorCode::InvalidArgument, "normalize requires 0 < m < n");
    }
    if (a == 0.0 || !std::isfinite(a)) {
        fail(ErrorCode::InvalidArgument, "normalize requires a nonzero finite a");
    }
    if (b != 1 && b != -1) {
        fail(ErrorCode::InvalidArgument, "normalize requires b = +1 or -1");
    }
    const bool n_odd = n % 2 != 0;
    const bool m_odd = m % 2 != 0;
    // Under z -> -z the polynomial becomes (-1)^n z^n + (-1)^m a z^m + b;
    // for odd n it is negated again to stay monic.
    auto classify = [&](double mid, int cst) -> std::optional<Family> {
        if (cst == 1 && mid < 0 && m_odd && !n_odd) return Family::R;
        if (cst == -1 && mid > 0 && n_odd) return Family::S;
        if (cst == -1 && mid < 0) return Family::T;
        return std::nullopt;
    };
    const double abs_a = std::abs(a);
    if (auto f = classify(a, b)) {
        return {{*f, n, m, abs_a}, false};
    }
    const double flip_sign = n_odd ? -1.0 : 1.0;
    const double mid = flip_sign * (m_odd ? -a : a);
    const int cst = n_odd ? -b : b;
    if (auto f = classify(mid, cst)) {
        return {{*f, n, m, abs_a}, true};
    }
    fail(ErrorCode::NotRepresentable,
         "z^" + std::to_string(n) + " + a z^" + std::to_string(m) +
             " + b has no R/S/T form (n and m both even)");
}

NormalizedForm normalize(int n, int m, long a, int b) {
    return normalize(n, m, static_cast<double>(a), b);
}

} // namespace trino
