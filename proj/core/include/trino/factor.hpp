#ifndef TRINO_FACTOR_HPP
#define TRINO_FACTOR_HPP

#include "trino/int_poly.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace trino {

struct FactorEntry {
    IntPolynomial factor;
    int multiplicity = 1;
};

/// content * prod factor^multiplicity. Factors are primitive, have positive
/// leading coefficient, are irreducible over Q, and are listed canonically
/// (degree, then ascending coefficients).
struct FactorizationResult {
    BigInt content;
    std::vector<FactorEntry> factors;

    IntPolynomial expand() const;
    /// Factor degrees repeated by multiplicity, ascending.
    std::vector<int> degrees() const;
    bool irreducible() const { return factors.size() == 1 && factors.front().multiplicity == 1; }
};

/// Complete factorization over Z: content split, squarefree decomposition,
/// modular factorization at a good prime, quadratic Hensel lifting past the
/// Mignotte bound, subset recombination. The result is re-expanded and
/// compared with the input before it is returned.
FactorizationResult factorize(const IntPolynomial& p);

/// Degrees of the irreducible factors of p modulo `prime`, or nullopt when
/// the prime divides the leading coefficient or p is not squarefree mod it.
std::optional<std::vector<int>> modular_degree_pattern(const IntPolynomial& p, unsigned long prime);

// ---------------------------------------------------------------------------

/// Which of the four necessary reducibility conditions hold for
/// A x^n + B x^m + C. If none holds the trinomial is irreducible.
///
/// Condition (c) ranges over the primes q | gcd(m, n) and, when
/// 4 | gcd(m, n), over q = 4 as well. Reading q = 4 into (c) is an
/// interpretation: the sign clause for q = 4 is the only hint for it.
struct SchinzelReport {
    long m1 = 0; ///< m / gcd(m, n)
    long n1 = 0; ///< n / gcd(m, n)
    bool cond_a = false;
    bool cond_b = false;
    bool cond_c = false;
    bool cond_d = false;
    std::optional<long> c_witness_q; ///< the q that satisfied (c)

    bool any() const { return cond_a || cond_b || cond_c || cond_d; }
};

SchinzelReport schinzel_conditions(const BigInt& A, const BigInt& B, const BigInt& C, int n, int m);

enum class Verdict { Irreducible, Reducible };
enum class Certificate { Threshold, SchinzelNone, Factorizer, Witness };

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Certificate c) noexcept;

struct IrreducibilityVerdict {
    Verdict verdict;
    Certificate certificate;
    std::optional<IntPolynomial> witness; ///< a proper factor, present iff Reducible
};

/// x^n + a x^m +- 1 is irreducible once |a| >= n^2/3 (n >= 3, coprime m, n).
/// Returns nullopt (inconclusive) below the threshold; never claims
/// reducibility. Throws CoprimalityViolated.
std::optional<IrreducibilityVerdict> threshold_irreducible(int n, int m, const BigInt& a);

/// Cheapest available certificate: threshold, then the four conditions for
/// trinomials, then the full factorizer. p must be primitive.
IrreducibilityVerdict is_irreducible(const IntPolynomial& p);

} // namespace trino

#endif
