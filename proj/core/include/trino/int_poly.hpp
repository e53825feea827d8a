#ifndef TRINO_INT_POLY_HPP
#define TRINO_INT_POLY_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trino {

using BigInt = mpz_class;

/// Dense univariate polynomial over the integers, coefficients stored in
/// ascending degree order. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial monomial(const BigInt& c, std::size_t degree);
    static IntPolynomial constant(const BigInt& c) { return monomial(c, 0); }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Coefficient of x^i; zero beyond the degree.
    const BigInt& operator[](std::size_t i) const;
    const BigInt& leading() const;
    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

    /// Number of nonzero coefficients.
    std::size_t term_count() const;

    BigInt content() const;
    /// Content removed and sign chosen so the leading coefficient is positive.
    IntPolynomial primitive_part() const;
    IntPolynomial derivative() const;
    IntPolynomial operator-() const;

    BigInt eval(const BigInt& x) const;
    /// Coefficients in ascending order as doubles (for numerical routines).
    std::vector<double> to_doubles() const;

    std::string to_string(char var = 'x') const;

    friend IntPolynomial operator+(const IntPolynomial& lhs, const IntPolynomial& rhs);
    friend IntPolynomial operator-(const IntPolynomial& lhs, const IntPolynomial& rhs);
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
    friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);
    friend bool operator==(const IntPolynomial& lhs, const IntPolynomial& rhs);

    /// Canonical order used for factor lists: degree first, then ascending
    /// coefficient vectors compared lexicographically.
    friend std::strong_ordering canonical_compare(const IntPolynomial& lhs,
                                                  const IntPolynomial& rhs);

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

IntPolynomial pow(const IntPolynomial& base, unsigned exponent);

/// Quotient when `den` divides `num` exactly over the integers.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& num, const IntPolynomial& den);

/// Pseudo-remainder: lc(den)^(deg num - deg den + 1) * num mod den.
IntPolynomial pseudo_remainder(const IntPolynomial& num, const IntPolynomial& den);

/// Primitive gcd with positive leading coefficient (primitive PRS).
IntPolynomial gcd(IntPolynomial lhs, IntPolynomial rhs);

struct SquarefreeFactor {
    IntPolynomial factor;
    int multiplicity = 1;
};

/// Yun's algorithm on the primitive part: returns pairwise coprime primitive
/// squarefree factors of positive degree with their multiplicities,
/// multiplicity ascending. The product of factor^multiplicity equals
/// primitive_part(p) exactly.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& p);

bool is_squarefree(const IntPolynomial& p);

/// Sum of squares of the coefficients, exactly.
BigInt norm2_squared(const IntPolynomial& p);

} // namespace trino

#endif
