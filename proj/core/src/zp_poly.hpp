#ifndef TRINO_SRC_ZP_POLY_HPP
#define TRINO_SRC_ZP_POLY_HPP

// Dense polynomials over F_p for word-size primes p < 2^32, the modular
// layer of the factorizer. Internal header.

#include "trino/int_poly.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace trino::detail {

using u64 = std::uint64_t;

class ZpPoly {
public:
    ZpPoly() = default;
    ZpPoly(std::vector<u64> c, u64 p) : c_(std::move(c)), p_(p) { trim(); }
    static ZpPoly from(const IntPolynomial& f, u64 p);
    static ZpPoly constant(u64 v, u64 p) { return ZpPoly({v % p}, p); }
    static ZpPoly x(u64 p) { return ZpPoly({0, 1}, p); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    u64 prime() const noexcept { return p_; }
    u64 operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    u64 leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<u64>& coeffs() const noexcept { return c_; }

    ZpPoly monic() const;
    ZpPoly derivative() const;
    /// Coefficients lifted to [0, p).
    IntPolynomial to_int() const;

    friend ZpPoly operator+(const ZpPoly& x, const ZpPoly& y);
    friend ZpPoly operator-(const ZpPoly& x, const ZpPoly& y);
    friend ZpPoly operator*(const ZpPoly& x, const ZpPoly& y);
    friend bool operator==(const ZpPoly& x, const ZpPoly& y) { return x.c_ == y.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<u64> c_;
    u64 p_ = 2;
};

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);

std::pair<ZpPoly, ZpPoly> divrem(const ZpPoly& a, const ZpPoly& b);
ZpPoly rem(const ZpPoly& a, const ZpPoly& b);
ZpPoly gcd(ZpPoly a, ZpPoly b);

struct ExtGcd {
    ZpPoly g, s, t; // s*a + t*b = g, g monic
};
ExtGcd ext_gcd(const ZpPoly& a, const ZpPoly& b);

/// base^e mod modulus with e given as a big integer.
ZpPoly powmod(const ZpPoly& base, const BigInt& e, const ZpPoly& modulus);

bool is_squarefree(const ZpPoly& f);

/// Distinct-degree factorization of a monic squarefree f: (product of all
/// irreducible factors of degree d, d) pairs.
std::vector<std::pair<ZpPoly, int>> distinct_degree(const ZpPoly& f);

/// Cantor-Zassenhaus split of g (product of irreducibles of degree d) into
/// monic irreducibles. p must be odd.
std::vector<ZpPoly> equal_degree(const ZpPoly& g, int d, std::mt19937_64& rng);

/// Monic irreducible factors of a monic squarefree f, sorted canonically.
std::vector<ZpPoly> factor_squarefree(const ZpPoly& f, std::mt19937_64& rng);

} // namespace trino::detail

#endif
