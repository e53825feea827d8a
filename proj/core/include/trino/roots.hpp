#ifndef TRINO_ROOTS_HPP
#define TRINO_ROOTS_HPP

#include "trino/error.hpp"
#include "trino/int_poly.hpp"
#include "trino/trinomial.hpp"

#include <optional>
#include <vector>

namespace trino {

struct RootConfig {
    int max_iterations = 2000;
    /// A RootSet whose residual_bound exceeds this is flagged uncertified.
    double certification_tolerance = 1e-6;
};

/// All complex roots, with multiplicity. `residual_bound` is the largest
/// per-root inclusion radius deg * |P(z)| / |P'(z)| after the final Newton
/// pass: each listed root is within that distance of a true root.
struct RootSet {
    std::vector<Complex> roots;
    std::vector<double> errors; ///< per-root inclusion radius, same order as roots
    double residual_bound = 0.0;
    bool certified = false;
    int iterations = 0;

    double max_modulus() const;
};

/// Raised when simultaneous iteration hits the iteration cap; carries the
/// best iterate reached.
class ConvergenceFailure : public Error {
public:
    ConvergenceFailure(const std::string& what, RootSet best)
        : Error(ErrorCode::ConvergenceFailure, what), best_(std::move(best)) {}
    const RootSet& best_iterate() const noexcept { return best_; }

private:
    RootSet best_;
};

/// Roots of an integer polynomial. The polynomial is first split into
/// squarefree parts exactly, so repeated roots come out to full precision.
RootSet all_roots(const IntPolynomial& p, const RootConfig& cfg = {});

/// Roots of a trinomial by Aberth iteration on the sparse form. Repeated
/// roots of integer trinomials are routed through the exact squarefree path.
RootSet all_roots(const TrinomialSpec& spec, const RootConfig& cfg = {});

/// Roots of a polynomial with complex coefficients (ascending order),
/// assumed squarefree.
RootSet all_roots(const std::vector<Complex>& coeffs, const RootConfig& cfg = {});

/// Real roots of an R/S/T form, labelled by their position relative to 0, +-1.
///   R: r1 >= 1, r2 in (0, 1]
///   S: s1 in (0, 1); for m even also s2 in (-1, 0] and s3 <= -1
///   T: t1 > 1; n even: t2 in (-1, 0); n, m odd: t2 in [-1, 0), t3 <= -1
/// At a = 2 the root at +-1 is exact. When the companion root sits on the
/// other side of +-1 (2m > n) the labels follow magnitude, so the outermost
/// root is always r1 / s3 / t3.
struct ClassifiedRealRoots {
    FamilyForm form;
    std::optional<double> r1, r2;
    std::optional<double> s1, s2, s3;
    std::optional<double> t1, t2, t3;

    /// Roots in descending order.
    std::vector<double> all() const;
    std::size_t count() const { return all().size(); }
    /// The root the house lower bound speaks about: r1, |s3| or t1.
    std::optional<double> bounded_root() const;
};

struct BisectionConfig {
    double tolerance = 1e-12;
    int max_iterations = 200;
};

ClassifiedRealRoots classify_real_roots(const FamilyForm& form, const BisectionConfig& cfg = {});

/// True iff the coefficient vector is a palindrome.
bool is_reciprocal(const IntPolynomial& p);

} // namespace trino

#endif
