#include "trino/roots.hpp"

#include <algorithm>
#include <cmath>

namespace trino {

namespace {

class RealTrinomial {
public:
    RealTrinomial(int n, int m, long double mid, long double cst) : n_(n), m_(m), mid_(mid), cst_(cst) {}

    long double operator()(long double x) const {
        return std::pow(x, n_) + mid_ * std::pow(x, m_) + cst_;
    }

    /// Sign changes of the coefficient sequence of P(z) (positive roots) or
    /// P(-z) (negative roots), the Descartes bound.
    int descartes(bool negative) const {
        const long double top = negative && (n_ % 2 != 0) ? -1.0L : 1.0L;
        const long double mid = negative && (m_ % 2 != 0) ? -mid_ : mid_;
        const long double seq[] = {top, mid, cst_};
        int changes = 0;
        for (int i = 0; i < 2; ++i) {
            if ((seq[i] < 0) != (seq[i + 1] < 0)) {
                ++changes;
            }
        }
        return changes;
    }

private:
    int n_;
    int m_;
    long double mid_;
    long double cst_;
};

class Classifier {
public:
    Classifier(const FamilyForm& f, const BisectionConfig& cfg)
        : f_(f), cfg_(cfg), poly_(make_poly(f)), bound_(1.0 + f.a) {
        integral_a_ = std::nearbyint(f.a) == f.a;
    }

    ClassifiedRealRoots run() {
        ClassifiedRealRoots out{f_, {}, {}, {}, {}, {}, {}, {}, {}};
        switch (f_.family) {
        case Family::R: classify_r(out); break;
        case Family::S: classify_s(out); break;
        case Family::T: classify_t(out); break;
        }
        const int expected = poly_.descartes(false) + poly_.descartes(true);
        if (static_cast<int>(out.count()) != expected) {
            fail(ErrorCode::ClassificationMismatch,
                 "located " + std::to_string(out.count()) + " real roots but the sign rule allows " +
                     std::to_string(expected));
        }
        return out;
    }

private:
    static RealTrinomial make_poly(const FamilyForm& f) {
        const long double a = f.a;
        switch (f.family) {
        case Family::R: return {f.n, f.m, -a, 1.0L};
        case Family::S: return {f.n, f.m, a, -1.0L};
        case Family::T: return {f.n, f.m, -a, -1.0L};
        }
        fail(ErrorCode::InvalidArgument, "unknown family");
    }

    /// P(x) at x = +-1 computed in integers when a is an integer; nullopt otherwise.
    std::optional<long long> exact_at(int x) const {
        if (!integral_a_) {
            return std::nullopt;
        }
        const long long a = static_cast<long long>(f_.a);
        const long long xn = (x < 0 && f_.n % 2 != 0) ? -1 : 1;
        const long long xm = (x < 0 && f_.m % 2 != 0) ? -1 : 1;
        switch (f_.family) {
        case Family::R: return xn - a * xm + 1;
        case Family::S: return xn + a * xm - 1;
        case Family::T: return xn - a * xm - 1;
        }
        return std::nullopt;
    }

    bool exact_root_at(int x) const {
        auto v = exact_at(x);
        return v && *v == 0;
    }

    double bisect(long double lo, long double hi) const {
        // A zero endpoint is a root already accounted for; look for the one strictly inside.
        long double flo = poly_(lo);
        long double fhi = poly_(hi);
        if (flo == 0.0L) flo = -fhi;
        if (fhi == 0.0L) fhi = -flo;
        if ((flo < 0) == (fhi < 0)) {
            fail(ErrorCode::ClassificationMismatch,
                 "no sign change on [" + std::to_string(static_cast<double>(lo)) + ", " +
                     std::to_string(static_cast<double>(hi)) + "]");
        }
        for (int it = 0; it < cfg_.max_iterations && hi - lo > cfg_.tolerance; ++it) {
            const long double mid = 0.5L * (lo + hi);
            const long double fm = poly_(mid);
            if (fm == 0.0L) {
                return static_cast<double>(mid);
            }
            if ((fm < 0) == (flo < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        return static_cast<double>(0.5L * (lo + hi));
    }

    // Slope sign n - 2m at the boundary root when a = 2.
    int boundary_slope() const { return f_.n - 2 * f_.m; }

    void classify_r(ClassifiedRealRoots& out) const {
        if (exact_root_at(1)) {
            const int d = boundary_slope();
            if (d > 0) {
                out.r1 = 1.0;
                out.r2 = bisect(0.0L, 1.0L);
            } else if (d < 0) {
                out.r1 = bisect(1.0L, bound_);
                out.r2 = 1.0;
            } else {
                out.r1 = 1.0;
                out.r2 = 1.0;
            }
            return;
        }
        out.r2 = bisect(0.0L, 1.0L);
        out.r1 = bisect(1.0L, bound_);
    }

    void classify_s(ClassifiedRealRoots& out) const {
        out.s1 = bisect(0.0L, 1.0L);
        if (f_.m % 2 != 0) {
            return;
        }
        if (exact_root_at(-1)) {
            if (boundary_slope() > 0) {
                out.s2 = bisect(-1.0L, 0.0L);
                out.s3 = -1.0;
            } else {
                out.s3 = bisect(-bound_, -1.0L);
                out.s2 = -1.0;
            }
            return;
        }
        out.s2 = bisect(-1.0L, 0.0L);
        out.s3 = bisect(-bound_, -1.0L);
    }

    void classify_t(ClassifiedRealRoots& out) const {
        out.t1 = bisect(1.0L, bound_);
        if (f_.n % 2 == 0) {
            out.t2 = bisect(-1.0L, 0.0L);
            return;
        }
        if (f_.m % 2 == 0) {
            return;
        }
        if (exact_root_at(-1)) {
            if (boundary_slope() > 0) {
                out.t2 = bisect(-1.0L, 0.0L);
                out.t3 = -1.0;
            } else {
                out.t3 = bisect(-bound_, -1.0L);
                out.t2 = -1.0;
            }
            return;
        }
        out.t2 = bisect(-1.0L, 0.0L);
        out.t3 = bisect(-bound_, -1.0L);
    }

    FamilyForm f_;
    BisectionConfig cfg_;
    RealTrinomial poly_;
    long double bound_;
    bool integral_a_ = false;
};

} // namespace

std::vector<double> ClassifiedRealRoots::all() const {
    std::vector<double> v;
    for (const auto* r : {&r1, &r2, &s1, &s2, &s3, &t1, &t2, &t3}) {
        if (*r) {
            v.push_back(**r);
        }
    }
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

std::optional<double> ClassifiedRealRoots::bounded_root() const {
    switch (form.family) {
    case Family::R: return r1;
    case Family::S: return s3 ? std::optional<double>(std::abs(*s3)) : std::nullopt;
    case Family::T: return t1;
    }
    return std::nullopt;
}

ClassifiedRealRoots classify_real_roots(const FamilyForm& form, const BisectionConfig& cfg) {
    form.validate();
    if (!(form.a >= 2.0)) {
        fail(ErrorCode::InvalidArgument, "real-root classification requires a >= 2");
    }
    if (form.gcd_mn() != 1) {
        fail(ErrorCode::CoprimalityViolated, "real-root classification requires gcd(m, n) = 1");
    }
    return Classifier(form, cfg).run();
}

} // namespace trino
