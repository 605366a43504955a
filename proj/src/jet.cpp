#include "terza/jet.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "terza/error.hpp"

namespace terza {
namespace {

constexpr double kBinomial[4][4] = {
    {1, 0, 0, 0},
    {1, 1, 0, 0},
    {1, 2, 1, 0},
    {1, 3, 3, 1},
};

std::string describe(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

}  // namespace

Jet3 Jet3::constant(double value) {
    Jet3 j;
    j.c_[0] = value;
    return j;
}

Jet3 Jet3::seed_u(double value) {
    Jet3 j;
    j.c_[0] = value;
    j.c_[1] = 1.0;
    return j;
}

Jet3 Jet3::seed_v(double value) {
    Jet3 j;
    j.c_[0] = value;
    j.c_[2] = 1.0;
    return j;
}

Jet3 Jet3::diff_u() const {
    Jet3 r;
    for (int n = 0; n < kOrder; ++n)
        for (int j = 0; j <= n; ++j) r(n - j, j) = (*this)(n - j + 1, j);
    return r;
}

Jet3 Jet3::diff_v() const {
    Jet3 r;
    for (int n = 0; n < kOrder; ++n)
        for (int j = 0; j <= n; ++j) r(n - j, j) = (*this)(n - j, j + 1);
    return r;
}

Jet3& Jet3::operator+=(const Jet3& o) {
    for (std::size_t k = 0; k < kSize; ++k) c_[k] += o.c_[k];
    return *this;
}

Jet3& Jet3::operator-=(const Jet3& o) {
    for (std::size_t k = 0; k < kSize; ++k) c_[k] -= o.c_[k];
    return *this;
}

Jet3& Jet3::operator*=(double s) {
    for (auto& x : c_) x *= s;
    return *this;
}

Jet3 operator+(Jet3 a, const Jet3& b) { return a += b; }
Jet3 operator-(Jet3 a, const Jet3& b) { return a -= b; }
Jet3 operator-(const Jet3& a) { return a * -1.0; }
Jet3 operator*(Jet3 a, double s) { return a *= s; }
Jet3 operator*(double s, Jet3 a) { return a *= s; }

Jet3 operator+(Jet3 a, double s) {
    a(0, 0) += s;
    return a;
}
Jet3 operator+(double s, Jet3 a) { return std::move(a) + s; }
Jet3 operator-(Jet3 a, double s) {
    a(0, 0) -= s;
    return a;
}
Jet3 operator-(double s, const Jet3& a) { return -a + s; }

// Leibniz rule: (ab)_{ij} = sum_{k<=i, l<=j} C(i,k) C(j,l) a_{kl} b_{i-k, j-l}.
Jet3 operator*(const Jet3& a, const Jet3& b) {
    Jet3 r;
    for (int n = 0; n <= Jet3::kOrder; ++n) {
        for (int j = 0; j <= n; ++j) {
            const int i = n - j;
            double acc = 0.0;
            for (int k = 0; k <= i; ++k)
                for (int l = 0; l <= j; ++l)
                    acc += kBinomial[i][k] * kBinomial[j][l] * a(k, l) * b(i - k, j - l);
            r(i, j) = acc;
        }
    }
    return r;
}

Jet3 compose(const Jet3& a, double g0, double g1, double g2, double g3) {
    // Truncated Taylor series of g around a.value(), evaluated on the
    // zero-valued increment by Horner's rule.
    Jet3 d = a;
    d(0, 0) = 0.0;
    Jet3 r = Jet3::constant(g3 / 6.0);
    r = d * r + g2 / 2.0;
    r = d * r + g1;
    r = d * r + g0;
    return r;
}

Jet3 reciprocal(const Jet3& a) {
    const double x = a.value();
    if (x == 0.0) throw DomainError("division by a jet with zero value");
    const double r = 1.0 / x;
    return compose(a, r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r);
}

Jet3 operator/(const Jet3& a, const Jet3& b) {
    if (b.value() == 0.0) throw DomainError("division by a jet with zero value (divisor)");
    Jet3 r = a * reciprocal(b);
    r(0, 0) = a.value() / b.value();  // match plain real division bit for bit
    return r;
}

Jet3 sin(const Jet3& a) {
    const double s = std::sin(a.value()), c = std::cos(a.value());
    return compose(a, s, c, -s, -c);
}

Jet3 cos(const Jet3& a) {
    const double s = std::sin(a.value()), c = std::cos(a.value());
    return compose(a, c, -s, -c, s);
}

Jet3 tan(const Jet3& a, double pole_margin) {
    const double x = a.value();
    if (std::abs(std::cos(x)) < pole_margin)
        throw PoleError("tan argument " + describe(x) + " is within the pole margin");
    const double t = std::tan(x);
    const double s = 1.0 + t * t;
    return compose(a, t, s, 2.0 * t * s, s * (2.0 + 6.0 * t * t));
}

Jet3 exp(const Jet3& a) {
    const double e = std::exp(a.value());
    return compose(a, e, e, e, e);
}

Jet3 log(const Jet3& a, double pole_margin) {
    const double x = a.value();
    if (!(x > 0.0)) throw DomainError("ln of non-positive value " + describe(x));
    if (x < pole_margin)
        throw PoleError("ln argument " + describe(x) + " is within the pole margin of 0");
    const double r = 1.0 / x;
    return compose(a, std::log(x), r, -r * r, 2.0 * r * r * r);
}

Jet3 sqrt(const Jet3& a) {
    const double x = a.value();
    if (!(x > 0.0)) throw DomainError("sqrt of non-positive value " + describe(x));
    const double s = std::sqrt(x);
    return compose(a, s, 0.5 / s, -0.25 / (s * x), 0.375 / (s * x * x));
}

Jet3 pow(const Jet3& a, double exponent) {
    const double x = a.value();
    const bool integral = std::trunc(exponent) == exponent;
    if (!integral && !(x > 0.0))
        throw DomainError("non-integer power of non-positive value " + describe(x));
    if (x == 0.0 && exponent < 0.0) throw DomainError("negative power of zero");

    // g^(k)(x) = r (r-1) ... (r-k+1) x^(r-k); falling factorials that hit
    // zero stay zero so that polynomial powers are exact at x = 0.
    double g[4];
    double falling = 1.0;
    for (int k = 0; k < 4; ++k) {
        g[k] = falling == 0.0 ? 0.0 : falling * std::pow(x, exponent - k);
        falling *= exponent - k;
    }
    return compose(a, g[0], g[1], g[2], g[3]);
}

}  // namespace terza
