#include "zp_poly.hpp"

#include "trino/error.hpp"

#include <algorithm>

namespace trino::detail {

u64 mulmod(u64 a, u64 b, u64 p) {
    return (a * b) % p;
}

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1U) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1U;
    }
    return r;
}

u64 invmod(u64 a, u64 p) {
    if (a % p == 0) {
        fail(ErrorCode::InternalVerificationFailure, "inverse of zero modulo p");
    }
    return powmod(a, p - 2, p);
}

ZpPoly ZpPoly::from(const IntPolynomial& f, u64 p) {
    std::vector<u64> c(f.size());
    const BigInt pp(static_cast<unsigned long>(p));
    BigInt r;
    for (std::size_t i = 0; i < f.size(); ++i) {
        mpz_fdiv_r(r.get_mpz_t(), f[i].get_mpz_t(), pp.get_mpz_t());
        c[i] = r.get_ui();
    }
    return ZpPoly(std::move(c), p);
}

ZpPoly ZpPoly::monic() const {
    if (is_zero()) return *this;
    const u64 inv = invmod(leading(), p_);
    std::vector<u64> c = c_;
    for (auto& x : c) x = mulmod(x, inv, p_);
    return ZpPoly(std::move(c), p_);
}

ZpPoly ZpPoly::derivative() const {
    if (c_.size() <= 1) return ZpPoly({}, p_);
    std::vector<u64> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = mulmod(c_[i], i % p_, p_);
    return ZpPoly(std::move(c), p_);
}

IntPolynomial ZpPoly::to_int() const {
    std::vector<BigInt> v;
    v.reserve(c_.size());
    for (u64 x : c_) v.emplace_back(static_cast<unsigned long>(x));
    return IntPolynomial(std::move(v));
}

ZpPoly operator+(const ZpPoly& x, const ZpPoly& y) {
    const u64 p = x.p_;
    std::vector<u64> c(std::max(x.c_.size(), y.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (x[i] + y[i]) % p;
    return ZpPoly(std::move(c), p);
}

ZpPoly operator-(const ZpPoly& x, const ZpPoly& y) {
    const u64 p = x.p_;
    std::vector<u64> c(std::max(x.c_.size(), y.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (x[i] + p - y[i]) % p;
    return ZpPoly(std::move(c), p);
}

ZpPoly operator*(const ZpPoly& x, const ZpPoly& y) {
    const u64 p = x.p_;
    if (x.is_zero() || y.is_zero()) return ZpPoly({}, p);
    std::vector<u64> c(x.c_.size() + y.c_.size() - 1, 0);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i] == 0) continue;
        for (std::size_t j = 0; j < y.c_.size(); ++j) {
            c[i + j] = (c[i + j] + mulmod(x.c_[i], y.c_[j], p)) % p;
        }
    }
    return ZpPoly(std::move(c), p);
}

std::pair<ZpPoly, ZpPoly> divrem(const ZpPoly& a, const ZpPoly& b) {
    const u64 p = a.prime();
    if (b.is_zero()) fail(ErrorCode::InternalVerificationFailure, "F_p division by zero polynomial");
    if (a.degree() < b.degree()) return {ZpPoly({}, p), a};
    std::vector<u64> r = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<u64> q(r.size() - db, 0);
    const u64 inv = invmod(b.leading(), p);
    for (std::size_t k = q.size(); k-- > 0;) {
        const u64 top = r[k + db];
        if (top == 0) continue;
        const u64 f = mulmod(top, inv, p);
        q[k] = f;
        for (std::size_t j = 0; j <= db; ++j) {
            r[k + j] = (r[k + j] + p - mulmod(f, b[j], p)) % p;
        }
    }
    r.resize(db);
    return {ZpPoly(std::move(q), p), ZpPoly(std::move(r), p)};
}

ZpPoly rem(const ZpPoly& a, const ZpPoly& b) {
    return divrem(a, b).second;
}

ZpPoly gcd(ZpPoly a, ZpPoly b) {
    while (!b.is_zero()) {
        ZpPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtGcd ext_gcd(const ZpPoly& a, const ZpPoly& b) {
    const u64 p = a.prime();
    ZpPoly r0 = a, r1 = b;
    ZpPoly s0 = ZpPoly::constant(1, p), s1({}, p);
    ZpPoly t0({}, p), t1 = ZpPoly::constant(1, p);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        ZpPoly s2 = s0 - q * s1;
        ZpPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const u64 inv = invmod(r0.leading(), p);
    const ZpPoly c = ZpPoly::constant(inv, p);
    return {r0 * c, s0 * c, t0 * c};
}

ZpPoly powmod(const ZpPoly& base, const BigInt& e, const ZpPoly& modulus) {
    const u64 p = base.prime();
    ZpPoly result = rem(ZpPoly::constant(1, p), modulus);
    ZpPoly b = rem(base, modulus);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(result * result, modulus);
        if (mpz_tstbit(e.get_mpz_t(), i)) {
            result = rem(result * b, modulus);
        }
    }
    return result;
}

bool is_squarefree(const ZpPoly& f) {
    const ZpPoly d = f.derivative();
    if (d.is_zero()) return f.degree() <= 0;
    return gcd(f, d).degree() == 0;
}

std::vector<std::pair<ZpPoly, int>> distinct_degree(const ZpPoly& f_in) {
    const u64 p = f_in.prime();
    std::vector<std::pair<ZpPoly, int>> out;
    ZpPoly f = f_in.monic();
    const ZpPoly x = ZpPoly::x(p);
    ZpPoly h = rem(x, f);
    const BigInt pe(static_cast<unsigned long>(p));
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = powmod(h, pe, f);
        ZpPoly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = divrem(f, g).first;
            h = rem(h, f);
        }
    }
    if (f.degree() > 0) {
        out.emplace_back(f.monic(), f.degree());
    }
    return out;
}

std::vector<ZpPoly> equal_degree(const ZpPoly& g, int d, std::mt19937_64& rng) {
    const u64 p = g.prime();
    if (g.degree() == d) return {g.monic()};
    BigInt e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<u64> coef(0, p - 1);
    const ZpPoly one = ZpPoly::constant(1, p);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<u64> c(static_cast<std::size_t>(g.degree()));
        for (auto& v : c) v = coef(rng);
        ZpPoly a(std::move(c), p);
        if (a.degree() <= 0) continue;
        ZpPoly b = powmod(a, e, g) - one;
        ZpPoly h = gcd(b, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            auto left = equal_degree(h, d, rng);
            auto right = equal_degree(divrem(g, h).first.monic(), d, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
    fail(ErrorCode::InternalVerificationFailure, "equal-degree splitting failed to find a split");
}

std::vector<ZpPoly> factor_squarefree(const ZpPoly& f, std::mt19937_64& rng) {
    std::vector<ZpPoly> out;
    for (const auto& [g, d] : distinct_degree(f)) {
        auto parts = equal_degree(g, d, rng);
        out.insert(out.end(), parts.begin(), parts.end());
    }
    std::sort(out.begin(), out.end(), [](const ZpPoly& x, const ZpPoly& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return x.coeffs() < y.coeffs();
    });
    return out;
}

} // namespace trino::detail
