#include <cmath>

#include "doctest.h"
#include "terza/error.hpp"
#include "terza/finite_diff.hpp"
#include "terza/jet.hpp"
#include "terza/surface.hpp"
#include "test_support.hpp"

using namespace terza;

namespace {

void check_coeffs(const Jet3& j, std::initializer_list<double> expected, double tol = 1e-14) {
    std::size_t k = 0;
    for (double e : expected) {
        CAPTURE(k);
        CHECK(j.coeffs()[k] == doctest::Approx(e).epsilon(tol).scale(1.0));
        ++k;
    }
}

// Independent Leibniz convolution, same summation order as the library.
Jet3 leibniz(const Jet3& a, const Jet3& b) {
    static const double C[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
    Jet3 r;
    for (int n = 0; n <= 3; ++n)
        for (int j = 0; j <= n; ++j) {
            const int i = n - j;
            double acc = 0.0;
            for (int k = 0; k <= i; ++k)
                for (int l = 0; l <= j; ++l) acc += C[i][k] * C[j][l] * a(k, l) * b(i - k, j - l);
            r(i, j) = acc;
        }
    return r;
}

Jet3 random_jet(test::Rng& rng) {
    std::array<double, Jet3::kSize> c{};
    for (auto& x : c) x = test::uniform(rng, -2.0, 2.0);
    return Jet3(c);
}

}  // namespace

TEST_CASE("seeds") {
    check_coeffs(Jet3::seed_u(2.0), {2, 1, 0, 0, 0, 0, 0, 0, 0, 0});
    check_coeffs(Jet3::seed_v(-1.0), {-1, 0, 1, 0, 0, 0, 0, 0, 0, 0});
    check_coeffs(Jet3::constant(5.0), {5, 0, 0, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("slot layout") {
    CHECK(Jet3::index(0, 0) == 0);
    CHECK(Jet3::index(1, 0) == 1);
    CHECK(Jet3::index(0, 1) == 2);
    CHECK(Jet3::index(1, 1) == 4);
    CHECK(Jet3::index(2, 1) == 7);
    CHECK(Jet3::index(0, 3) == 9);
}

TEST_CASE("arithmetic examples") {
    const Jet3 u = Jet3::seed_u(2.0);
    const Jet3 sq = u * u;
    CHECK(sq.value() == 4.0);
    CHECK(sq.du() == 4.0);
    CHECK(sq.duu() == 2.0);
    CHECK(sq.duuu() == 0.0);

    // d^k/du^k (1/u) at 2: 1/2, -1/4, 2/8, -6/16
    check_coeffs(Jet3::constant(1.0) / u, {0.5, -0.25, 0, 0.25, 0, 0, -0.375, 0, 0, 0});

    const Jet3 s = Jet3::seed_u(1.0) + Jet3::seed_v(1.0);
    CHECK(s.value() == 2.0);
    CHECK(s.du() == 1.0);
    CHECK(s.dv() == 1.0);
    CHECK(s.duv() == 0.0);

    const Jet3 d = Jet3::seed_u(3.0) - Jet3::seed_v(1.0);
    check_coeffs(d, {2, 1, -1, 0, 0, 0, 0, 0, 0, 0});
    check_coeffs(-d, {-2, -1, 1, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("univariate examples") {
    check_coeffs(sin(Jet3::seed_u(0.0)), {0, 1, 0, 0, 0, 0, -1, 0, 0, 0});
    // tan' = 1 + tan^2, tan'' = 2 tan (1 + tan^2), tan''' = (1 + tan^2)(2 + 6 tan^2): 0, 1, 0, 2 at 0.
    check_coeffs(tan(Jet3::seed_u(0.0)), {0, 1, 0, 0, 0, 0, 2, 0, 0, 0});
    // ln at 1: 0, 1, -1, 2.
    check_coeffs(log(Jet3::seed_u(1.0)), {0, 1, 0, -1, 0, 0, 2, 0, 0, 0});
    check_coeffs(cos(Jet3::seed_v(0.0)), {1, 0, 0, 0, 0, -1, 0, 0, 0, 0});
    check_coeffs(exp(Jet3::seed_v(0.0)), {1, 0, 1, 0, 0, 1, 0, 0, 0, 1});
    // sqrt at 4: 2, 1/4, -1/32, 3/256.
    check_coeffs(sqrt(Jet3::seed_u(4.0)), {2, 0.25, 0, -1.0 / 32, 0, 0, 3.0 / 256, 0, 0, 0});
    // u^-2 at 1: 1, -2, 6, -24.
    check_coeffs(pow(Jet3::seed_u(1.0), -2.0), {1, -2, 0, 6, 0, 0, -24, 0, 0, 0});
    // polynomial powers stay exact at 0.
    check_coeffs(pow(Jet3::seed_u(0.0), 2.0), {0, 0, 0, 2, 0, 0, 0, 0, 0, 0});
    check_coeffs(pow(Jet3::seed_u(0.0), 3.0), {0, 0, 0, 0, 0, 0, 6, 0, 0, 0});
}

TEST_CASE("polynomials of degree <= 3 are exact") {
    test::Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const double u0 = test::uniform(rng, -3, 3), v0 = test::uniform(rng, -3, 3);
        const Jet3 u = Jet3::seed_u(u0), v = Jet3::seed_v(v0);
        // p = 1 + 2u - v + 3u^2 - uv + v^2/2 + u^3 - 2u^2 v + u v^2 + 4 v^3
        const Jet3 p = 1.0 + 2.0 * u - v + 3.0 * u * u - u * v + 0.5 * v * v + u * u * u - 2.0 * u * u * v +
                       u * v * v + 4.0 * v * v * v;
        const double pu = 2 + 6 * u0 - v0 + 3 * u0 * u0 - 4 * u0 * v0 + v0 * v0;
        const double pv = -1 - u0 + v0 - 2 * u0 * u0 + 2 * u0 * v0 + 12 * v0 * v0;
        const double puu = 6 + 6 * u0 - 4 * v0;
        const double puv = -1 - 4 * u0 + 2 * v0;
        const double pvv = 1 + 2 * u0 + 24 * v0;
        auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * (1 + std::abs(b)); };
        CHECK(close(p.du(), pu));
        CHECK(close(p.dv(), pv));
        CHECK(close(p.duu(), puu));
        CHECK(close(p.duv(), puv));
        CHECK(close(p.dvv(), pvv));
        CHECK(close(p.duuu(), 6));
        CHECK(close(p.duuv(), -4));
        CHECK(close(p.duvv(), 2));
        CHECK(close(p.dvvv(), 24));
    }
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(Jet3::constant(1.0) / Jet3::constant(0.0), DomainError);
    CHECK_THROWS_AS(log(Jet3::seed_u(-1.0)), DomainError);
    CHECK_THROWS_AS(log(Jet3::seed_u(0.0)), DomainError);
    CHECK_THROWS_AS(log(Jet3::seed_u(1e-9)), PoleError);
    CHECK_THROWS_AS(sqrt(Jet3::seed_u(0.0)), DomainError);
    CHECK_THROWS_AS(tan(Jet3::seed_u(std::acos(0.0) - 1e-9)), PoleError);
    CHECK_NOTHROW(tan(Jet3::seed_u(std::acos(0.0) - 1e-3)));
    CHECK_NOTHROW(tan(Jet3::seed_u(1.5), 1e-3));
    CHECK_THROWS_AS(tan(Jet3::seed_u(1.5), 0.1), PoleError);
    CHECK_THROWS_AS(pow(Jet3::seed_u(-1.0), 0.5), DomainError);
    CHECK_THROWS_AS(pow(Jet3::seed_u(0.0), -1.0), DomainError);
}

TEST_CASE("diff_u and diff_v shift the jet") {
    // f = sin(u) exp(v): every partial is +-sin/cos(u) exp(v).
    const double u0 = 0.4, v0 = -0.3;
    const Jet3 f = sin(Jet3::seed_u(u0)) * exp(Jet3::seed_v(v0));
    const Jet3 fu = f.diff_u(), fv = f.diff_v();
    const double s = std::sin(u0), c = std::cos(u0), e = std::exp(v0);
    CHECK(fu.value() == doctest::Approx(c * e));
    CHECK(fu.du() == doctest::Approx(-s * e));
    CHECK(fu.dv() == doctest::Approx(c * e));
    CHECK(fu.duu() == doctest::Approx(-c * e));
    CHECK(fu.duv() == doctest::Approx(-s * e));
    CHECK(fu.dvv() == doctest::Approx(c * e));
    CHECK(fu.duuu() == 0.0);
    CHECK(fv.value() == doctest::Approx(s * e));
    CHECK(fv.dvv() == doctest::Approx(s * e));
    CHECK(fv.duv() == doctest::Approx(c * e));
}

TEST_CASE("product rule matches the Leibniz convolution bit for bit") {
    test::Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Jet3 a = random_jet(rng), b = random_jet(rng);
        CHECK(a * b == leibniz(a, b));
    }
}

TEST_CASE("mixed partials of symmetric expressions agree") {
    // One slot per multi-index: for f = g(u) h(v) + u v^2 the v-then-u and
    // u-then-v routes through diff_* land in the same slot.
    const Jet3 u = Jet3::seed_u(0.7), v = Jet3::seed_v(1.3);
    const Jet3 f = sin(u * v) + u * v * v;
    CHECK(f.diff_u().dv() == f.diff_v().du());
    CHECK(f.diff_u().duv() == f.diff_v().duu());
}

TEST_CASE("fd_partials examples") {
    auto uv = [](double u, double v) { return u * v; };
    const auto d1 = fd_partials(uv, 1.0, 2.0, 1e-3);
    CHECK(std::abs(d1[Jet3::index(1, 1)] - 1.0) < 1e-8);

    auto s = [](double u, double) { return std::sin(u); };
    const auto d2 = fd_partials(s, 0.3, 0.0, 1e-3);
    CHECK(std::abs(d2[Jet3::index(3, 0)] + std::cos(0.3)) < 1e-4);

    auto e = [](double u, double v) { return std::exp(u + v); };
    const auto d3 = fd_partials(e, 0.0, 0.0, 1e-3);
    for (double x : d3) CHECK(std::abs(x - 1.0) < 1e-4);
}

TEST_CASE("fd_partials stencil errors") {
    auto f = [](double u, double v) { return u + v; };
    const Domain d{0.0, 1.0, 0.0, 1.0};
    CHECK_NOTHROW(fd_partials(f, 0.5, 0.5, 1e-3, d));
    CHECK_THROWS_AS(fd_partials(f, 0.001, 0.5, 1e-3, d), StencilError);
    CHECK_THROWS_AS(fd_partials(f, 0.5, 0.5, 0.0), StencilError);
    auto bad = [](double u, double) {
        if (u > 0.5) throw DomainError("out");
        return u;
    };
    CHECK_THROWS_AS(fd_partials(bad, 0.5, 0.5, 1e-3), StencilError);
}

TEST_CASE("jets agree with finite differences on random expressions") {
    test::Rng rng(2024);
    int compared = 0;
    while (compared < 100) {
        const Expr e = test::random_smooth_expr(rng, 3);
        const double u = test::uniform(rng, -1, 1), v = test::uniform(rng, -1, 1);
        const Jet3 j = eval_expr(e, Jet3::seed_u(u), Jet3::seed_v(v));
        const auto fd = fd_partials([&](double a, double b) { return eval_real(e, a, b); }, u, v, 1e-3);
        for (int n = 0; n <= 3; ++n)
            for (int k = 0; k <= n; ++k) {
                const std::size_t idx = Jet3::index(n - k, k);
                const double tol = n <= 2 ? 1e-4 : 1e-3;
                CAPTURE(print_expr(e));
                CAPTURE(idx);
                CHECK(std::abs(j.coeffs()[idx] - fd[idx]) <= tol * (1.0 + std::abs(j.coeffs()[idx])));
            }
        ++compared;
    }
}

TEST_CASE("jet values equal plain real evaluation") {
    test::Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const Expr e = test::random_smooth_expr(rng, 3);
        const double u = test::uniform(rng, -1, 1), v = test::uniform(rng, -1, 1);
        CAPTURE(print_expr(e));
        CHECK(eval_expr(e, Jet3::seed_u(u), Jet3::seed_v(v)).value() == eval_real(e, u, v));
    }
}
