#ifndef TRINO_TRINOMIAL_HPP
#define TRINO_TRINOMIAL_HPP

#include "trino/int_poly.hpp"

#include <complex>
#include <string>
#include <string_view>

namespace trino {

using Complex = std::complex<double>;

/// z^n + a z^m + b with 0 < m < n and a, b nonzero.
class TrinomialSpec {
public:
    TrinomialSpec(int n, int m, Complex a, Complex b);

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    Complex a() const noexcept { return a_; }
    Complex b() const noexcept { return b_; }

    int gcd_mn() const noexcept;
    bool coprime() const noexcept { return gcd_mn() == 1; }

    /// True when both coefficients are (real) integers.
    bool has_integer_coefficients() const noexcept;

    /// Throws CoprimalityViolated unless gcd(m, n) = 1.
    void require_coprime() const;

    std::string to_string(char var = 'z') const;

    friend bool operator==(const TrinomialSpec&, const TrinomialSpec&) = default;

private:
    int n_;
    int m_;
    Complex a_;
    Complex b_;
};

/// The three normal forms reached from z^n + a z^m +- 1 by z -> -z:
///   R: z^n - a z^m + 1  (m odd, n even)
///   S: z^n + a z^m - 1  (n odd)
///   T: z^n - a z^m - 1
enum class Family { R, S, T };

std::string_view to_string(Family f) noexcept;
Family parse_family(std::string_view s);

struct FamilyForm {
    Family family;
    int n;
    int m;
    double a;

    /// Throws InvalidArgument on 0 < m < n or a > 0 violations and
    /// ParityViolated when the family's parity constraint fails.
    void validate() const;
    /// validate() plus the a >= 2 requirement of the bound operations.
    void validate_for_bounds() const;

    TrinomialSpec to_spec() const;
    int gcd_mn() const noexcept;

    friend bool operator==(const FamilyForm&, const FamilyForm&) = default;
};

struct NormalizedForm {
    FamilyForm form;
    bool flipped = false; ///< root set of the input is the negated root set of `form`
};

/// Compensated evaluation of z^n + a z^m + b: powers by squaring in extended
/// precision, the three terms summed with error-free transformations.
Complex eval(const TrinomialSpec& spec, Complex z);

/// Value and derivative in one pass.
struct EvalWithDerivative {
    Complex value;
    Complex derivative;
    double magnitude_bound; ///< |z|^n + |a||z|^m + |b|, the backward-error scale
};
EvalWithDerivative eval_with_derivative(const TrinomialSpec& spec, Complex z);

/// Dense integer form; NonIntegerCoefficient unless a and b are integers.
IntPolynomial to_dense(const TrinomialSpec& spec);

/// Reduce (n, m, a, b = +-1) to its R/S/T representative.
NormalizedForm normalize(int n, int m, long a, int b);
NormalizedForm normalize(int n, int m, double a, int b);

} // namespace trino

#endif
