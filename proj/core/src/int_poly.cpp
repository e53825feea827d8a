#include "trino/int_poly.hpp"

#include "trino/error.hpp"

#include <algorithm>
#include <sstream>

namespace trino {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    trim();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

const BigInt& IntPolynomial::operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const BigInt& IntPolynomial::leading() const {
    return coeffs_.empty() ? kZero : coeffs_.back();
}

std::size_t IntPolynomial::term_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
}

BigInt IntPolynomial::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) {
        return {};
    }
    BigInt g = content();
    if (leading() < 0) {
        g = -g;
    }
    std::vector<BigInt> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<BigInt> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> v = coeffs_;
    for (auto& c : v) {
        c = -c;
    }
    return IntPolynomial(std::move(v));
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::vector<double> IntPolynomial::to_doubles() const {
    std::vector<double> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        v.push_back(c.get_d());
    }
    return v;
}

std::string IntPolynomial::to_string(char var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0) {
            continue;
        }
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) {
                os << '-';
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) {
            os << mag.get_str();
        }
        if (k >= 1) {
            os << var;
            if (k > 1) {
                os << '^' << k;
            }
        }
        first = false;
    }
    return os.str();
}

IntPolynomial operator+(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    std::vector<BigInt> v(std::max(lhs.size(), rhs.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = lhs[i] + rhs[i];
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    std::vector<BigInt> v(std::max(lhs.size(), rhs.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = lhs[i] - rhs[i];
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    std::vector<BigInt> v(lhs.size() + rhs.size() - 1);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.size(); ++j) {
            mpz_addmul(v[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
        }
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) {
    std::vector<BigInt> v = p.coeffs_;
    for (auto& x : v) {
        x *= c;
    }
    return IntPolynomial(std::move(v));
}

bool operator==(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
}

std::strong_ordering canonical_compare(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (auto c = lhs.degree() <=> rhs.degree(); c != 0) {
        return c;
    }
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        int s = cmp(lhs.coeffs_[i], rhs.coeffs_[i]);
        if (s != 0) {
            return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

IntPolynomial pow(const IntPolynomial& base, unsigned exponent) {
    IntPolynomial result = IntPolynomial::constant(1);
    IntPolynomial sq = base;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = result * sq;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            sq = sq * sq;
        }
    }
    return result;
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) {
        fail(ErrorCode::InvalidArgument, "division by the zero polynomial");
    }
    if (num.is_zero()) {
        return IntPolynomial{};
    }
    if (num.degree() < den.degree()) {
        return std::nullopt;
    }
    std::vector<BigInt> rem(num.coeffs().begin(), num.coeffs().end());
    const std::size_t dd = static_cast<std::size_t>(den.degree());
    std::vector<BigInt> quot(rem.size() - dd);
    const BigInt& lc = den.leading();
    BigInt q;
    for (std::size_t k = quot.size(); k-- > 0;) {
        const BigInt& top = rem[k + dd];
        if (top == 0) {
            continue;
        }
        if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) {
            return std::nullopt;
        }
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        for (std::size_t j = 0; j <= dd; ++j) {
            mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), den[j].get_mpz_t());
        }
        quot[k] = q;
    }
    for (std::size_t j = 0; j < dd; ++j) {
        if (rem[j] != 0) {
            return std::nullopt;
        }
    }
    return IntPolynomial(std::move(quot));
}

IntPolynomial pseudo_remainder(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) {
        fail(ErrorCode::InvalidArgument, "pseudo-division by the zero polynomial");
    }
    std::vector<BigInt> rem(num.coeffs().begin(), num.coeffs().end());
    const int dd = den.degree();
    const BigInt& lc = den.leading();
    int dr = num.degree();
    int steps = dr - dd + 1;
    while (dr >= dd && dr >= 0) {
        BigInt top = rem[static_cast<std::size_t>(dr)];
        for (auto& c : rem) {
            c *= lc;
        }
        for (int j = 0; j <= dd; ++j) {
            mpz_submul(rem[static_cast<std::size_t>(dr - dd + j)].get_mpz_t(), top.get_mpz_t(),
                       den[static_cast<std::size_t>(j)].get_mpz_t());
        }
        --steps;
        while (dr >= 0 && rem[static_cast<std::size_t>(dr)] == 0) {
            --dr;
        }
    }
    if (steps > 0) {
        BigInt scale;
        mpz_pow_ui(scale.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(steps));
        for (auto& c : rem) {
            c *= scale;
        }
    }
    return IntPolynomial(std::move(rem));
}

IntPolynomial gcd(IntPolynomial lhs, IntPolynomial rhs) {
    if (lhs.is_zero()) {
        return rhs.primitive_part();
    }
    if (rhs.is_zero()) {
        return lhs.primitive_part();
    }
    lhs = lhs.primitive_part();
    rhs = rhs.primitive_part();
    if (lhs.degree() < rhs.degree()) {
        std::swap(lhs, rhs);
    }
    while (!rhs.is_zero()) {
        IntPolynomial r = pseudo_remainder(lhs, rhs);
        lhs = std::move(rhs);
        rhs = r.primitive_part();
    }
    return lhs.primitive_part();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& p) {
    std::vector<SquarefreeFactor> out;
    IntPolynomial f = p.primitive_part();
    if (f.degree() < 1) {
        return out;
    }
    // Yun: a_0 = gcd(f, f'), b = f / a_0, c = f' / a_0, d = c - b'.
    IntPolynomial df = f.derivative();
    IntPolynomial a = gcd(f, df);
    IntPolynomial b = *divide_exact(f, a);
    IntPolynomial c = *divide_exact(df, a);
    // Divisions by a primitive gcd may leave a content factor in c; Yun's
    // recurrence is insensitive to it because each step takes a gcd.
    IntPolynomial d = c - b.derivative();
    int mult = 1;
    while (b.degree() >= 1) {
        IntPolynomial g = gcd(b, d);
        if (g.degree() >= 1) {
            out.push_back({g, mult});
        }
        IntPolynomial nb = *divide_exact(b, g);
        auto nc = divide_exact(d, g);
        b = std::move(nb);
        d = *nc - b.derivative();
        ++mult;
    }
    return out;
}

bool is_squarefree(const IntPolynomial& p) {
    if (p.degree() < 1) {
        return true;
    }
    return gcd(p, p.derivative()).degree() == 0;
}

BigInt norm2_squared(const IntPolynomial& p) {
    BigInt s = 0;
    for (const auto& c : p.coeffs()) {
        mpz_addmul(s.get_mpz_t(), c.get_mpz_t(), c.get_mpz_t());
    }
    return s;
}

} // namespace trino
