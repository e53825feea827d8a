#include "trino/factor.hpp"

#include "trino/error.hpp"
#include "zp_poly.hpp"

#include <algorithm>
#include <numeric>

namespace trino {

namespace {

using detail::u64;
using detail::ZpPoly;

constexpr int kCandidatePrimes = 5;
constexpr int kMaxPrimeTrials = 400;
constexpr std::uint64_t kRngSeed = 0x7472696e6f6d6961ULL;

bool is_prime(u64 x) {
    if (x < 2) return false;
    for (u64 d = 2; d * d <= x; ++d) {
        if (x % d == 0) return false;
    }
    return true;
}

// Coefficients reduced into the symmetric range (-M/2, M/2].
IntPolynomial symmetric_mod(const IntPolynomial& f, const BigInt& M) {
    std::vector<BigInt> v(f.size());
    const BigInt half = M / 2;
    for (std::size_t i = 0; i < f.size(); ++i) {
        mpz_fdiv_r(v[i].get_mpz_t(), f[i].get_mpz_t(), M.get_mpz_t());
        if (v[i] > half) v[i] -= M;
    }
    return IntPolynomial(std::move(v));
}

// Division by a monic polynomial over Z: exact quotient and remainder.
std::pair<IntPolynomial, IntPolynomial> divrem_monic(const IntPolynomial& a, const IntPolynomial& h) {
    if (a.degree() < h.degree()) return {IntPolynomial{}, a};
    std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
    const std::size_t dh = static_cast<std::size_t>(h.degree());
    std::vector<BigInt> q(r.size() - dh);
    for (std::size_t k = q.size(); k-- > 0;) {
        q[k] = r[k + dh];
        if (q[k] == 0) continue;
        for (std::size_t j = 0; j <= dh; ++j) {
            mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), h[j].get_mpz_t());
        }
    }
    r.resize(dh);
    return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

struct HenselState {
    IntPolynomial g, h, s, t;
};

// One quadratic step: f = g h mod m, s g + t h = 1 mod m, h monic
// becomes the same relations mod m^2.
HenselState hensel_step(const IntPolynomial& f, const HenselState& in, const BigInt& m) {
    const BigInt M = m * m;
    const IntPolynomial one = IntPolynomial::constant(1);
    IntPolynomial e = symmetric_mod(f - in.g * in.h, M);
    auto [q, r] = divrem_monic(in.s * e, in.h);
    q = symmetric_mod(q, M);
    r = symmetric_mod(r, M);
    IntPolynomial G = symmetric_mod(in.g + in.t * e + q * in.g, M);
    IntPolynomial H = symmetric_mod(in.h + r, M);
    IntPolynomial b = symmetric_mod(in.s * G + in.t * H - one, M);
    auto [c, d] = divrem_monic(in.s * b, H);
    c = symmetric_mod(c, M);
    d = symmetric_mod(d, M);
    IntPolynomial S = symmetric_mod(in.s - d, M);
    IntPolynomial T = symmetric_mod(in.t - (in.t * b + c * G), M);
    return {std::move(G), std::move(H), std::move(S), std::move(T)};
}

ZpPoly product(std::span<const ZpPoly> fs, u64 p) {
    ZpPoly acc = ZpPoly::constant(1, p);
    for (const auto& f : fs) acc = acc * f;
    return acc;
}

// Lift f = lc(f) * prod(factors) mod p to monic factors mod p^(2^steps).
std::vector<IntPolynomial> multifactor_lift(const IntPolynomial& f, std::span<const ZpPoly> factors, u64 p,
                                            int steps, const BigInt& M) {
    if (factors.size() == 1) {
        BigInt inv;
        if (mpz_invert(inv.get_mpz_t(), f.leading().get_mpz_t(), M.get_mpz_t()) == 0) {
            fail(ErrorCode::InternalVerificationFailure, "leading coefficient not invertible during lifting");
        }
        return {symmetric_mod(inv * f, M)};
    }
    const std::size_t k = factors.size() / 2;
    const ZpPoly lc = ZpPoly::from(IntPolynomial::constant(f.leading()), p);
    const ZpPoly g0 = lc * product(factors.subspan(0, k), p);
    const ZpPoly h0 = product(factors.subspan(k), p);
    const detail::ExtGcd eg = detail::ext_gcd(g0, h0);
    if (eg.g.degree() != 0) {
        fail(ErrorCode::InternalVerificationFailure, "modular factors are not coprime");
    }
    HenselState st{g0.to_int(), h0.to_int(), eg.s.to_int(), eg.t.to_int()};
    BigInt m(static_cast<unsigned long>(p));
    for (int i = 0; i < steps; ++i) {
        st = hensel_step(f, st, m);
        m *= m;
    }
    auto left = multifactor_lift(st.g, factors.subspan(0, k), p, steps, M);
    auto right = multifactor_lift(st.h, factors.subspan(k), p, steps, M);
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

using DegreeSet = std::vector<char>; // DegreeSet[d] != 0: some factor of degree d may exist

DegreeSet subset_sums(const std::vector<ZpPoly>& fs, int n) {
    DegreeSet reach(static_cast<std::size_t>(n) + 1, 0);
    reach[0] = 1;
    for (const auto& f : fs) {
        const int d = f.degree();
        for (int s = n; s >= d; --s) {
            if (reach[static_cast<std::size_t>(s - d)]) reach[static_cast<std::size_t>(s)] = 1;
        }
    }
    return reach;
}

struct ModularChoice {
    u64 prime = 0;
    std::vector<ZpPoly> factors;
    DegreeSet allowed;
};

ModularChoice choose_prime(const IntPolynomial& F, std::mt19937_64& rng) {
    const int n = F.degree();
    ModularChoice best;
    DegreeSet allowed(static_cast<std::size_t>(n) + 1, 1);
    int found = 0;
    u64 p = 4;
    for (int trials = 0; trials < kMaxPrimeTrials && found < kCandidatePrimes; ++trials) {
        do {
            ++p;
        } while (!is_prime(p));
        if (mpz_divisible_ui_p(F.leading().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        const ZpPoly fp = ZpPoly::from(F, p);
        if (fp.degree() != n || !detail::is_squarefree(fp)) continue;
        auto facs = detail::factor_squarefree(fp.monic(), rng);
        const DegreeSet reach = subset_sums(facs, n);
        for (std::size_t d = 0; d < allowed.size(); ++d) allowed[d] = allowed[d] && reach[d];
        if (found == 0 || facs.size() < best.factors.size()) {
            best.prime = p;
            best.factors = std::move(facs);
        }
        ++found;
        if (best.factors.size() == 1) break;
    }
    if (found == 0) {
        fail(ErrorCode::InternalVerificationFailure, "no good reduction prime found");
    }
    best.allowed = std::move(allowed);
    return best;
}

bool next_combination(std::vector<std::size_t>& pick, std::size_t n) {
    const std::size_t s = pick.size();
    for (std::size_t i = s; i-- > 0;) {
        if (pick[i] < n - s + i) {
            ++pick[i];
            for (std::size_t j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
            return true;
        }
    }
    return false;
}

BigInt mignotte_bound(const IntPolynomial& F) {
    BigInt norm;
    mpz_sqrt(norm.get_mpz_t(), norm2_squared(F).get_mpz_t());
    norm += 1;
    BigInt bound = norm * abs(F.leading());
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(F.degree()));
    return bound;
}

// Irreducible factors of a primitive squarefree F with F(0) != 0, lc > 0.
std::vector<IntPolynomial> factor_squarefree_int(const IntPolynomial& F_in, std::mt19937_64& rng) {
    IntPolynomial F = F_in;
    const int n = F.degree();
    if (n <= 1) return {F};
    ModularChoice mc = choose_prime(F, rng);
    bool only_trivial = true;
    for (int d = 1; d < n; ++d) {
        if (mc.allowed[static_cast<std::size_t>(d)]) only_trivial = false;
    }
    if (only_trivial || mc.factors.size() == 1) return {F};

    const u64 p = mc.prime;
    const BigInt bound = 2 * mignotte_bound(F) + 1;
    BigInt pl(static_cast<unsigned long>(p));
    int l = 1;
    while (pl <= bound) {
        pl *= static_cast<unsigned long>(p);
        ++l;
    }
    int steps = 0;
    while ((1 << steps) < l) ++steps;
    BigInt M;
    mpz_ui_pow_ui(M.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(1UL << steps));

    std::vector<IntPolynomial> lifted = multifactor_lift(F, mc.factors, p, steps, M);

    std::vector<IntPolynomial> out;
    std::vector<std::size_t> remaining(lifted.size());
    std::iota(remaining.begin(), remaining.end(), 0);
    std::size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool found = false;
        std::vector<std::size_t> pick(s);
        std::iota(pick.begin(), pick.end(), 0);
        const BigInt lc = F.leading();
        const BigInt target_tc = lc * F[0];
        while (true) {
            int deg = 0;
            for (auto i : pick) deg += lifted[remaining[i]].degree();
            if (deg < F.degree() && mc.allowed[static_cast<std::size_t>(deg)]) {
                BigInt tc = lc;
                for (auto i : pick) {
                    tc *= lifted[remaining[i]][0];
                    mpz_fdiv_r(tc.get_mpz_t(), tc.get_mpz_t(), M.get_mpz_t());
                }
                if (tc > M / 2) tc -= M;
                if (tc != 0 && mpz_divisible_p(target_tc.get_mpz_t(), tc.get_mpz_t())) {
                    IntPolynomial G = IntPolynomial::constant(lc);
                    for (auto i : pick) G = symmetric_mod(G * lifted[remaining[i]], M);
                    G = G.primitive_part();
                    if (auto quot = divide_exact(F, G)) {
                        out.push_back(G);
                        F = quot->primitive_part();
                        std::vector<std::size_t> rest;
                        for (std::size_t j = 0; j < remaining.size(); ++j) {
                            if (std::find(pick.begin(), pick.end(), j) == pick.end()) rest.push_back(remaining[j]);
                        }
                        remaining = std::move(rest);
                        found = true;
                        break;
                    }
                }
            }
            if (!next_combination(pick, remaining.size())) break;
        }
        if (!found) ++s;
    }
    if (F.degree() >= 1) out.push_back(F);
    return out;
}

} // namespace

IntPolynomial FactorizationResult::expand() const {
    IntPolynomial acc = IntPolynomial::constant(content);
    for (const auto& f : factors) acc = acc * pow(f.factor, static_cast<unsigned>(f.multiplicity));
    return acc;
}

std::vector<int> FactorizationResult::degrees() const {
    std::vector<int> d;
    for (const auto& f : factors) {
        for (int k = 0; k < f.multiplicity; ++k) d.push_back(f.factor.degree());
    }
    std::sort(d.begin(), d.end());
    return d;
}

FactorizationResult factorize(const IntPolynomial& p) {
    if (p.degree() < 1) {
        fail(ErrorCode::InvalidArgument, "factorize requires degree >= 1");
    }
    std::mt19937_64 rng(kRngSeed);
    FactorizationResult out;
    out.content = p.content();
    if (p.leading() < 0) out.content = -out.content;
    const IntPolynomial prim = p.primitive_part();

    std::size_t zeros = 0;
    while (prim[zeros] == 0) ++zeros;
    if (zeros > 0) out.factors.push_back({IntPolynomial{0, 1}, static_cast<int>(zeros)});
    IntPolynomial rest(std::vector<BigInt>(prim.coeffs().begin() + static_cast<std::ptrdiff_t>(zeros),
                                           prim.coeffs().end()));
    if (rest.degree() >= 1) {
        for (const auto& sf : squarefree_decomposition(rest)) {
            for (auto& g : factor_squarefree_int(sf.factor, rng)) {
                out.factors.push_back({std::move(g), sf.multiplicity});
            }
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const FactorEntry& x, const FactorEntry& y) {
        return canonical_compare(x.factor, y.factor) < 0;
    });
    if (!(out.expand() == p)) {
        fail(ErrorCode::InternalVerificationFailure, "factorization of " + p.to_string() + " does not re-expand");
    }
    return out;
}

std::optional<std::vector<int>> modular_degree_pattern(const IntPolynomial& p, unsigned long prime) {
    if (!is_prime(prime) || prime < 3) {
        fail(ErrorCode::InvalidArgument, "modular_degree_pattern needs an odd prime");
    }
    if (p.degree() < 1 || mpz_divisible_ui_p(p.leading().get_mpz_t(), prime)) return std::nullopt;
    const ZpPoly fp = ZpPoly::from(p, prime);
    if (!detail::is_squarefree(fp)) return std::nullopt;
    std::mt19937_64 rng(kRngSeed);
    std::vector<int> degs;
    for (const auto& f : detail::factor_squarefree(fp.monic(), rng)) degs.push_back(f.degree());
    return degs;
}

std::string_view to_string(Verdict v) noexcept {
    return v == Verdict::Irreducible ? "irreducible" : "reducible";
}

std::string_view to_string(Certificate c) noexcept {
    switch (c) {
    case Certificate::Threshold: return "threshold";
    case Certificate::SchinzelNone: return "schinzel-none";
    case Certificate::Factorizer: return "factorizer";
    case Certificate::Witness: return "witness";
    }
    return "?";
}

std::optional<IrreducibilityVerdict> threshold_irreducible(int n, int m, const BigInt& a) {
    if (n < 3 || !(0 < m && m < n)) {
        fail(ErrorCode::InvalidArgument, "threshold test requires n >= 3 and 0 < m < n");
    }
    if (a == 0) {
        fail(ErrorCode::InvalidArgument, "threshold test requires a != 0");
    }
    if (std::gcd(m, n) != 1) {
        fail(ErrorCode::CoprimalityViolated, "threshold test requires gcd(m, n) = 1");
    }
    // |a| >= n^2 / 3  <=>  3|a| >= n^2, exactly.
    if (3 * abs(a) >= BigInt(n) * n) {
        return IrreducibilityVerdict{Verdict::Irreducible, Certificate::Threshold, std::nullopt};
    }
    return std::nullopt;
}

IrreducibilityVerdict is_irreducible(const IntPolynomial& p) {
    if (p.degree() < 1) {
        fail(ErrorCode::InvalidArgument, "irreducibility requires degree >= 1");
    }
    if (p.content() != 1) {
        fail(ErrorCode::InvalidArgument, "irreducibility test requires a primitive polynomial");
    }
    if (p.degree() == 1) {
        return {Verdict::Irreducible, Certificate::Factorizer, std::nullopt};
    }
    const int n = p.degree();
    if (p.term_count() == 3 && p[0] != 0) {
        int m = 0;
        for (int i = 1; i < n; ++i) {
            if (p[static_cast<std::size_t>(i)] != 0) m = i;
        }
        const BigInt& A = p.leading();
        const BigInt& B = p[static_cast<std::size_t>(m)];
        const BigInt& C = p[0];
        if (abs(A) == 1 && abs(C) == 1 && n >= 3 && std::gcd(m, n) == 1) {
            // x^n + a x^m +- 1 up to an overall sign.
            if (auto v = threshold_irreducible(n, m, B)) return *v;
        }
        if (!schinzel_conditions(A, B, C, n, m).any()) {
            return {Verdict::Irreducible, Certificate::SchinzelNone, std::nullopt};
        }
    }
    const FactorizationResult fr = factorize(p);
    if (fr.irreducible()) {
        return {Verdict::Irreducible, Certificate::Factorizer, std::nullopt};
    }
    const IntPolynomial& w = fr.factors.front().factor;
    if (!divide_exact(p, w)) {
        fail(ErrorCode::InternalVerificationFailure, "witness factor does not divide the input");
    }
    return {Verdict::Reducible, Certificate::Witness, w};
}

} // namespace trino
