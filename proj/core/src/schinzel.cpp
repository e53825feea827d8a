#include "trino/error.hpp"
#include "trino/factor.hpp"

#include <cmath>
#include <numeric>

namespace trino {

namespace {

bool is_perfect_power(const BigInt& x, unsigned long k) {
    BigInt r;
    return mpz_root(r.get_mpz_t(), BigInt(abs(x)).get_mpz_t(), k) != 0;
}

std::vector<long> prime_divisors(long x) {
    std::vector<long> out;
    for (long d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            out.push_back(d);
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) out.push_back(x);
    return out;
}

double log_abs(const BigInt& x) {
    long e = 0;
    const double mant = mpz_get_d_2exp(&e, x.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(e) * std::log(2.0);
}

} // namespace

SchinzelReport schinzel_conditions(const BigInt& A, const BigInt& B, const BigInt& C, int n, int m) {
    if (!(0 < m && m < n)) {
        fail(ErrorCode::InvalidArgument, "schinzel_conditions requires 0 < m < n");
    }
    if (A == 0 || B == 0 || C == 0) {
        fail(ErrorCode::InvalidArgument, "schinzel_conditions requires nonzero coefficients");
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), C.get_mpz_t());
    if (g != 1) {
        fail(ErrorCode::GcdNotOne, "schinzel_conditions requires gcd(A, B, C) = 1");
    }

    const long d = std::gcd(m, n);
    SchinzelReport r;
    r.m1 = m / d;
    r.n1 = n / d;
    const BigInt absA = abs(A), absB = abs(B), absC = abs(C);
    const bool ac_positive = (A > 0) == (C > 0);

    // (a) |B| <= |A|^m1 |C|^(n1-m1) + 1
    {
        BigInt pa, pc;
        mpz_pow_ui(pa.get_mpz_t(), absA.get_mpz_t(), static_cast<unsigned long>(r.m1));
        mpz_pow_ui(pc.get_mpz_t(), absC.get_mpz_t(), static_cast<unsigned long>(r.n1 - r.m1));
        r.cond_a = absB <= pa * pc + 1;
    }

    // (b)
    {
        const bool min_one = absA == 1 || absC == 1;
        const BigInt& mx = absA > absC ? absA : absC;
        bool root_ok = false;
        for (long p : prime_divisors(r.n1)) {
            if (is_perfect_power(mx, static_cast<unsigned long>(p))) root_ok = true;
        }
        if (min_one && root_ok) {
            const double k = 2.0 * static_cast<double>(r.m1) * static_cast<double>(r.n1 - r.m1);
            const double log_rhs = std::log(k / std::log(k)) + (static_cast<double>(m) / n) * log_abs(absA) +
                                   (static_cast<double>(n - m) / n) * log_abs(absC);
            // Margin toward "holds": float error must not certify irreducibility.
            r.cond_b = log_abs(absB) <= log_rhs + 1e-9;
        }
    }

    // (c)
    {
        std::vector<long> qs = prime_divisors(d);
        if (d % 4 == 0) qs.push_back(4);
        for (long q : qs) {
            const auto uq = static_cast<unsigned long>(q);
            if (!is_perfect_power(absA, uq) || !is_perfect_power(absC, uq)) continue;
            if (q == 2 && !(((r.n1 % 2 == 0) == ac_positive))) continue;
            if (q == 4 && !(ac_positive && r.n1 % 2 == 0)) continue;
            r.cond_c = true;
            r.c_witness_q = q;
            break;
        }
    }

    // (d)
    if (d % 4 == 0 && ac_positive && r.n1 % 2 == 1) {
        r.cond_d = (is_perfect_power(absA, 4) && is_perfect_power(4 * absC, 4)) ||
                   (is_perfect_power(4 * absA, 4) && is_perfect_power(absC, 4));
    }
    return r;
}

} // namespace trino
