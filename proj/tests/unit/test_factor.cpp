#include "oracles.hpp"

#include "trino/error.hpp"
#include "trino/factor.hpp"
#include "trino/trinomial.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace trino;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no trino::Error thrown";
    return ErrorCode::InvalidArgument;
}

IntPolynomial tri(int n, int m, long a, long b) {
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    c[0] = b;
    c[static_cast<std::size_t>(m)] = a;
    c[static_cast<std::size_t>(n)] = 1;
    return IntPolynomial(std::move(c));
}

std::vector<long long> small_coeffs(const IntPolynomial& p) {
    std::vector<long long> out;
    for (const auto& c : p.coeffs()) out.push_back(c.get_si());
    return out;
}

bool has_factor(const FactorizationResult& fr, const IntPolynomial& f) {
    for (const auto& e : fr.factors) {
        if (e.factor == f) return true;
    }
    return false;
}

int ceil_third_square(int n) {
    return (n * n + 2) / 3;
}

} // namespace

TEST(Factorize, ConjectureExample) {
    const FactorizationResult fr = factorize(tri(8, 3, 3, -1));
    EXPECT_EQ(fr.factors.size(), 2U);
    EXPECT_EQ(fr.degrees(), (std::vector<int>{3, 5}));
    EXPECT_EQ(fr.expand(), tri(8, 3, 3, -1));
}

TEST(Factorize, DegreeThirtyThree) {
    const FactorizationResult fr = factorize(tri(33, 11, 67, 1));
    EXPECT_TRUE(has_factor(fr, IntPolynomial{1, 1, 0, 1}));
    EXPECT_EQ(fr.expand(), tri(33, 11, 67, 1));
}

TEST(Factorize, SexticIdentity) {
    const FactorizationResult fr = factorize(tri(6, 2, 56, -1));
    ASSERT_EQ(fr.factors.size(), 2U);
    EXPECT_EQ(fr.factors[0].factor, (IntPolynomial{-1, 8, -4, 1}));
    EXPECT_EQ(fr.factors[1].factor, (IntPolynomial{1, 8, 4, 1}));
}

TEST(Factorize, ContentRepeatedFactorsAndZeroRoots) {
    // -6 x^2 (x + 1)^2 (x^2 + 1)
    const IntPolynomial p = IntPolynomial::constant(-6) * IntPolynomial{0, 0, 1} * pow(IntPolynomial{1, 1}, 2) *
                            IntPolynomial{1, 0, 1};
    const FactorizationResult fr = factorize(p);
    EXPECT_EQ(fr.content, -6);
    ASSERT_EQ(fr.factors.size(), 3U);
    EXPECT_EQ(fr.factors[0].factor, (IntPolynomial{0, 1}));
    EXPECT_EQ(fr.factors[0].multiplicity, 2);
    EXPECT_EQ(fr.factors[1].factor, (IntPolynomial{1, 1}));
    EXPECT_EQ(fr.factors[1].multiplicity, 2);
    EXPECT_EQ(fr.expand(), p);
}

TEST(Factorize, SwinnertonDyerStyleManyModularFactors) {
    // (x^2 - 2)(x^2 - 3)... has only quadratic factors mod every prime.
    const IntPolynomial p = IntPolynomial{1, 0, -10, 0, 1} * IntPolynomial{-7, 0, 1};
    const FactorizationResult fr = factorize(p);
    EXPECT_EQ(fr.degrees(), (std::vector<int>{2, 4}));
}

TEST(Factorize, RejectsConstants) {
    EXPECT_EQ(code_of([] { factorize(IntPolynomial::constant(5)); }), ErrorCode::InvalidArgument);
}

// Soundness and irreducibility of each factor, against the root-subset oracle.
TEST(Factorize, RandomProductsAgainstOracle) {
    oracle::Gen g(31);
    for (int i = 0; i < 120; ++i) {
        IntPolynomial p = IntPolynomial::constant(1);
        const int parts = g.uniform(1, 3);
        for (int k = 0; k < parts; ++k) {
            const int d = g.uniform(1, 4);
            std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
            for (int j = 0; j < d; ++j) c[static_cast<std::size_t>(j)] = g.uniform(-4, 4);
            c[static_cast<std::size_t>(d)] = 1;
            p = p * IntPolynomial(c);
        }
        if (p.degree() > 12) continue;
        const FactorizationResult fr = factorize(p);
        EXPECT_EQ(fr.expand(), p);
        for (const auto& f : fr.factors) {
            EXPECT_GT(f.factor.leading(), 0);
            EXPECT_EQ(f.factor.content(), 1);
            EXPECT_TRUE(oracle::monic_irreducible(small_coeffs(f.factor))) << f.factor.to_string();
        }
    }
}

TEST(Factorize, TrinomialsAgainstOracle) {
    for (int n = 2; n <= 12; ++n) {
        for (int m = 1; m < n; ++m) {
            for (long a : {-3L, -2L, -1L, 1L, 2L, 3L}) {
                for (long b : {-1L, 1L}) {
                    const IntPolynomial p = tri(n, m, a, b);
                    const FactorizationResult fr = factorize(p);
                    const bool irr = fr.irreducible();
                    ASSERT_EQ(irr, oracle::monic_irreducible(small_coeffs(p))) << p.to_string();
                }
            }
        }
    }
}

TEST(Factorize, Deterministic) {
    const IntPolynomial p = tri(13, 6, -3, -1);
    const FactorizationResult a = factorize(p);
    const FactorizationResult b = factorize(p);
    ASSERT_EQ(a.factors.size(), b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) EXPECT_EQ(a.factors[i].factor, b.factors[i].factor);
}

TEST(ModularPattern, SumsToDegreeAndDetectsIrreducibility) {
    const IntPolynomial p{-1, -1, 0, 1};
    for (unsigned long q : {5UL, 7UL, 11UL, 13UL}) {
        const auto pat = modular_degree_pattern(p, q);
        ASSERT_TRUE(pat);
        EXPECT_EQ(std::accumulate(pat->begin(), pat->end(), 0), 3);
        if (pat->size() == 1) {
            EXPECT_EQ(is_irreducible(p).verdict, Verdict::Irreducible);
        }
    }
    EXPECT_FALSE(modular_degree_pattern(IntPolynomial{1, 0, 5}, 5));
}

// Property: irreducible modulo some prime implies an Irreducible verdict.
TEST(ModularPattern, ConsistentWithVerdict) {
    oracle::Gen g(32);
    for (int i = 0; i < 150; ++i) {
        const int n = g.uniform(3, 16);
        const int m = g.uniform(1, n - 1);
        const IntPolynomial p = tri(n, m, g.sign() * g.uniform(1, 9), g.sign());
        for (unsigned long q : {5UL, 7UL, 11UL, 13UL, 17UL}) {
            const auto pat = modular_degree_pattern(p, q);
            if (pat && pat->size() == 1) {
                EXPECT_EQ(is_irreducible(p).verdict, Verdict::Irreducible) << p.to_string();
            }
        }
    }
}

// --- Conditions for reducibility of A x^n + B x^m + C ------------------------------------

TEST(Conditions, AllFalse) {
    const SchinzelReport r = schinzel_conditions(1, 5, 1, 3, 1);
    EXPECT_FALSE(r.cond_a);
    EXPECT_FALSE(r.cond_b);
    EXPECT_FALSE(r.cond_c);
    EXPECT_FALSE(r.cond_d);
    EXPECT_EQ(r.m1, 1);
    EXPECT_EQ(r.n1, 3);
}

TEST(Conditions, EqualityInA) {
    EXPECT_TRUE(schinzel_conditions(1, 2, -1, 5, 2).cond_a);
}

TEST(Conditions, PrimeDividingGcd) {
    const SchinzelReport r = schinzel_conditions(1, 67, 1, 33, 11);
    EXPECT_TRUE(r.cond_c);
    EXPECT_EQ(r.c_witness_q, 11);
    EXPECT_EQ(r.m1, 1);
    EXPECT_EQ(r.n1, 3);
}

TEST(Conditions, FourthPowerClauses) {
    // gcd(8, 4) = 4, n1 = 2.
    EXPECT_TRUE(schinzel_conditions(1, 100, 16, 8, 4).cond_c);
    EXPECT_FALSE(schinzel_conditions(1, 100, -16, 8, 4).cond_c);
    EXPECT_FALSE(schinzel_conditions(1, 100, 3, 8, 4).cond_c);
    // (d): 4 | gcd(12, 4), n1 = 3 odd, A C > 0, |A| = 1 and 4|C| = 256 = 4^4.
    EXPECT_TRUE(schinzel_conditions(1, 1000, 64, 12, 4).cond_d);
    EXPECT_FALSE(schinzel_conditions(1, 1000, -64, 12, 4).cond_d);
}

TEST(Conditions, GcdNotOne) {
    EXPECT_EQ(code_of([] { schinzel_conditions(2, 4, 6, 5, 2); }), ErrorCode::GcdNotOne);
}

// Property: when no condition holds the factorizer finds a single factor.
TEST(Conditions, NoneImpliesIrreducible) {
    oracle::Gen g(33);
    int none = 0;
    for (int i = 0; i < 400; ++i) {
        const int n = g.uniform(3, 18);
        const int m = g.uniform(1, n - 1);
        const long a = g.sign() * g.uniform(1, 60);
        const long c = g.sign() * g.uniform(1, 3);
        if (std::gcd(a, c) != 1) continue;
        if (schinzel_conditions(1, a, c, n, m).any()) continue;
        ++none;
        EXPECT_TRUE(factorize(tri(n, m, a, c)).irreducible()) << tri(n, m, a, c).to_string();
    }
    EXPECT_GT(none, 20);
}

// --- Threshold and verdicts ------------------------------------------------------------

TEST(Threshold, Examples) {
    auto v = threshold_irreducible(5, 2, 9);
    ASSERT_TRUE(v);
    EXPECT_EQ(v->certificate, Certificate::Threshold);
    EXPECT_FALSE(threshold_irreducible(8, 3, 3));
    EXPECT_TRUE(threshold_irreducible(3, 1, 3));
    EXPECT_TRUE(threshold_irreducible(3, 1, -3));
    EXPECT_EQ(code_of([] { threshold_irreducible(6, 2, 20); }), ErrorCode::CoprimalityViolated);
}

TEST(Threshold, AgreesWithFactorizer) {
    for (int n = 3; n <= 10; ++n) {
        const int lo = ceil_third_square(n);
        for (int m = 1; m < n; ++m) {
            if (std::gcd(m, n) != 1) continue;
            for (int a = lo; a <= lo + 5; ++a) {
                for (int sa : {-1, 1}) {
                    ASSERT_TRUE(threshold_irreducible(n, m, sa * a));
                    for (int b : {-1, 1}) {
                        EXPECT_TRUE(factorize(tri(n, m, sa * a, b)).irreducible()) << n << " " << m << " " << a;
                    }
                }
            }
        }
    }
}

TEST(Verdict, Examples) {
    EXPECT_EQ(is_irreducible(IntPolynomial{-1, -1, 0, 1}).verdict, Verdict::Irreducible);
    const IrreducibilityVerdict r = is_irreducible(tri(14, 5, 4, -1));
    EXPECT_EQ(r.verdict, Verdict::Reducible);
    EXPECT_EQ(r.certificate, Certificate::Witness);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(divide_exact(tri(14, 5, 4, -1), *r.witness));
    const IrreducibilityVerdict t = is_irreducible(tri(5, 2, 9, 1));
    EXPECT_EQ(t.verdict, Verdict::Irreducible);
    EXPECT_EQ(t.certificate, Certificate::Threshold);
    EXPECT_EQ(is_irreducible(tri(3, 1, 5, 1)).certificate, Certificate::Threshold);
    EXPECT_EQ(is_irreducible(IntPolynomial{2, 50, 0, 3}).certificate, Certificate::SchinzelNone);
    EXPECT_EQ(code_of([] { is_irreducible(IntPolynomial{2, 4}); }), ErrorCode::InvalidArgument);
}

TEST(Verdict, WitnessSoundness) {
    oracle::Gen g(34);
    for (int i = 0; i < 200; ++i) {
        const int n = g.uniform(2, 14);
        const int m = g.uniform(1, n - 1);
        const IntPolynomial p = tri(n, m, g.sign() * g.uniform(1, 5), g.sign());
        const IrreducibilityVerdict v = is_irreducible(p);
        if (v.verdict == Verdict::Reducible) {
            ASSERT_TRUE(v.witness);
            const auto q = divide_exact(p, *v.witness);
            ASSERT_TRUE(q);
            EXPECT_EQ(*v.witness * *q, p);
            EXPECT_GE(v.witness->degree(), 1);
            EXPECT_LT(v.witness->degree(), p.degree());
        }
    }
}
