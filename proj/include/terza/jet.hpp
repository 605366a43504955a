#pragma once

#include <array>
#include <cstddef>

namespace terza {

// Bivariate jet truncated at total order 3.
//
// Coefficients are stored as true partial derivative values (not divided by
// factorials), one slot per multi-index (i, j) with i + j <= 3, in the order
//
//   f, f_u, f_v, f_uu, f_uv, f_vv, f_uuu, f_uuv, f_uvv, f_vvv.
//
// Factorial scaling only appears inside the univariate composition.
class Jet3 {
public:
    static constexpr std::size_t kSize = 10;
    static constexpr int kOrder = 3;

    Jet3() = default;
    explicit Jet3(const std::array<double, kSize>& coeffs) : c_(coeffs) {}

    static Jet3 constant(double value);
    static Jet3 seed_u(double value);
    static Jet3 seed_v(double value);

    // Slot of the partial d^(i+j) / du^i dv^j.
    static constexpr std::size_t index(int i, int j) {
        const int n = i + j;
        return static_cast<std::size_t>(n * (n + 1) / 2 + j);
    }

    double operator()(int i, int j) const { return c_[index(i, j)]; }
    double& operator()(int i, int j) { return c_[index(i, j)]; }

    double value() const { return c_[0]; }
    double du() const { return c_[1]; }
    double dv() const { return c_[2]; }
    double duu() const { return c_[3]; }
    double duv() const { return c_[4]; }
    double dvv() const { return c_[5]; }
    double duuu() const { return c_[6]; }
    double duuv() const { return c_[7]; }
    double duvv() const { return c_[8]; }
    double dvvv() const { return c_[9]; }

    const std::array<double, kSize>& coeffs() const { return c_; }

    // Jet of the partial along u (resp. v). The result is exact through
    // order 2; its order-3 slots are zero and must not be trusted. Applying
    // these k times leaves a jet that is exact through order 3 - k, and
    // every arithmetic operation preserves that bound.
    Jet3 diff_u() const;
    Jet3 diff_v() const;

    Jet3& operator+=(const Jet3& o);
    Jet3& operator-=(const Jet3& o);
    Jet3& operator*=(double s);

    friend bool operator==(const Jet3&, const Jet3&) = default;

private:
    std::array<double, kSize> c_{};
};

Jet3 operator+(Jet3 a, const Jet3& b);
Jet3 operator-(Jet3 a, const Jet3& b);
Jet3 operator-(const Jet3& a);
Jet3 operator*(const Jet3& a, const Jet3& b);
Jet3 operator*(Jet3 a, double s);
Jet3 operator*(double s, Jet3 a);
// Throws DomainError when b.value() == 0.
Jet3 operator/(const Jet3& a, const Jet3& b);

Jet3 operator+(Jet3 a, double s);
Jet3 operator+(double s, Jet3 a);
Jet3 operator-(Jet3 a, double s);
Jet3 operator-(double s, const Jet3& a);

// Default distance (measured as |cos x|) from a pole of tan, and minimum
// argument of ln, below which the jet is refused.
inline constexpr double kDefaultPoleMargin = 1e-6;

Jet3 reciprocal(const Jet3& a);
Jet3 sin(const Jet3& a);
Jet3 cos(const Jet3& a);
Jet3 tan(const Jet3& a, double pole_margin = kDefaultPoleMargin);
Jet3 exp(const Jet3& a);
Jet3 log(const Jet3& a, double pole_margin = kDefaultPoleMargin);
Jet3 sqrt(const Jet3& a);
Jet3 pow(const Jet3& a, double exponent);

// g(a) given g and its first three derivatives at a.value().
Jet3 compose(const Jet3& a, double g0, double g1, double g2, double g3);

}  // namespace terza
