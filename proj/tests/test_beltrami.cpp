#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "terza/beltrami.hpp"
#include "terza/checks.hpp"
#include "terza/error.hpp"
#include "test_support.hpp"

using namespace terza;

namespace {

MetricJet flat() {
    MetricJet g;
    g.value = {1.0, 0.0, 1.0};
    return g;
}

double vrel(const Vec3& a, const Vec3& b) { return (a - b).norm() / (1.0 + std::max(a.norm(), b.norm())); }

std::vector<SurfaceDef> translation_set() {
    std::vector<SurfaceDef> defs = test::nonminimal_translations();
    for (const auto& p : test::scherk_sets()) defs.push_back(scherk(p));
    return defs;
}

}  // namespace

TEST_CASE("flat metric laplacian") {
    const Jet3 u = Jet3::seed_u(0.3), v = Jet3::seed_v(-0.8);
    CHECK(metric_laplacian(flat(), u * u + v * v) == doctest::Approx(-4.0).epsilon(1e-15));
    CHECK(metric_laplacian(flat(), u * v) == 0.0);
    CHECK(metric_laplacian(flat(), 3.0 * u - v + 2.0) == 0.0);
}

TEST_CASE("metric laplacian in polar coordinates") {
    // g = diag(1, r^2) with r = u; Delta(r^2) = -(1/r) d/dr (r * 2r) = -4.
    const double r = 1.7;
    MetricJet g;
    g.value = {1.0, 0.0, r * r};
    g.du = {0.0, 0.0, 2 * r};
    const Jet3 ru = Jet3::seed_u(r);
    CHECK(metric_laplacian(g, ru * ru) == doctest::Approx(-4.0).epsilon(1e-14));
    // ln r is harmonic in the plane.
    CHECK(std::abs(metric_laplacian(g, log(ru))) < 1e-15);
    // cos(theta) / r is harmonic too.
    CHECK(std::abs(metric_laplacian(g, cos(Jet3::seed_v(0.4)) / ru)) < 1e-15);
}

TEST_CASE("non positive definite metric") {
    MetricJet g;
    g.value = {1.0, 2.0, 1.0};
    CHECK_THROWS_AS(metric_laplacian(g, Jet3::seed_u(0.0)), MetricError);
    g.value = {-1.0, 0.0, -1.0};
    CHECK_THROWS_AS(metric_laplacian(g, Jet3::seed_u(0.0)), MetricError);
}

TEST_CASE("sphere operators") {
    for (double r : {0.5, 1.0, 2.0}) {
        const SurfaceDef s = builtin("sphere", std::vector<double>{r});
        const GeoFrame fr = frame_at(s, 0.3, 0.2);
        // With n = x / r the sphere has H = -1/r.
        CHECK((delta_I_x(fr) - 2.0 * fr.n / r).norm() < 1e-9);
        CHECK((delta_I_x(fr) + 2 * fr.H * fr.n).norm() < 1e-9);
        CHECK((delta_III_x(fr) - 2.0 * fr.x).norm() < 1e-8);
        CHECK((delta_III_x_closed(fr) - 2.0 * fr.x).norm() < 1e-8);
        CHECK((delta_III_gauss(fr) - 2.0 * fr.n).norm() < 1e-8);
    }
    const GeoFrame fr = frame_at(builtin("sphere", std::vector<double>{1.0}), 0.3, 0.2);
    Vec3 lap;
    const MetricJet g = metric_of_form1(fr);
    for (int i = 0; i < 3; ++i) lap(i) = metric_laplacian(g, position_component(fr, i));
    CHECK((lap - 2.0 * fr.n).norm() < 1e-9);
}

TEST_CASE("minimal surfaces") {
    test::Rng rng(17);
    std::vector<SurfaceDef> defs = {builtin("catenoid"), builtin("helicoid", std::vector<double>{1.0})};
    for (const auto& p : test::scherk_sets()) defs.push_back(scherk(p));
    for (const auto& def : defs)
        for (const auto& [u, v] : test::admissible_points(def, 50, rng)) {
            const GeoFrame fr = frame_at(def, u, v);
            CAPTURE(def.name);
            CHECK(delta_I_x(fr).norm() < 1e-8);
            CHECK(delta_III_x(fr).norm() < 1e-7);
            CHECK(delta_III_x_closed(fr).norm() < 1e-12);
        }
}

TEST_CASE("gauss map eigenrelation on single points") {
    const GeoFrame c = frame_at(builtin("catenoid"), 0.7, -0.3);
    CHECK((delta_III_gauss(c) - 2.0 * c.n).norm() < 1e-7);
    const GeoFrame p = frame_at(builtin("elliptic-paraboloid"), 0.5, 0.5);
    CHECK((delta_III_gauss(p) - 2.0 * p.n).norm() < 1e-7);
}

TEST_CASE("paraboloid cross-oracle at the origin") {
    const GeoFrame fr = frame_at(builtin("elliptic-paraboloid"), 0.0, 0.0);
    const Vec3 d = delta_III_x(fr);
    CHECK(d.norm() > 0.1);
    CHECK((d - delta_III_x_closed(fr)).norm() < 1e-7);
}

TEST_CASE("cross agreement over the catalog") {
    test::Rng rng(555);
    for (const auto& def : test::full_catalog()) {
        double worst = 0, worst_gauss = 0, worst_anchor = 0, worst_trans = 0;
        for (const auto& [u, v] : test::admissible_points(def, 100, rng)) {
            const GeoFrame fr = frame_at(def, u, v);
            const Vec3 d = delta_III_x(fr);
            worst = std::max(worst, vrel(d, delta_III_x_closed(fr)));
            worst_gauss = std::max(worst_gauss, (delta_III_gauss(fr) - 2.0 * fr.n).norm() / 3.0);
            const Vec3 two_hn = 2 * fr.H * fr.n;
            worst_anchor = std::max(worst_anchor, (delta_I_x(fr) + two_hn).norm() / (1 + two_hn.norm()));
            if (def.kind == SurfaceKind::Translation)
                worst_trans = std::max(worst_trans, vrel(d, delta_III_translation(def, u, v)));
        }
        CAPTURE(def.name);
        CHECK(worst <= 1e-6);
        CHECK(worst_gauss <= 1e-6);
        CHECK(worst_anchor <= 1e-9);
        CHECK(worst_trans <= 1e-6);
    }
}

TEST_CASE("translation data") {
    const SurfaceDef s = scherk({1.0, 0.0, 0.0, 0.0});
    test::Rng rng(8);
    for (const auto& [u, v] : test::admissible_points(s, 30, rng)) {
        const auto d = translation_MN(s, u, v);
        CHECK(std::abs(d.M) < 1e-12 * (1 + std::abs(d.f) / std::abs(d.f_s) * 2));
        CHECK(std::abs(d.N) < 1e-12 * (1 + std::abs(d.h) / std::abs(d.h_t) * 2));
        CHECK(delta_III_translation(s, u, v).norm() < 1e-9 * d.mu);
    }

    const SurfaceDef p = builtin("elliptic-paraboloid");
    const auto d1 = translation_MN(p, 1.0, 0.3);
    CHECK(d1.M == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(d1.f == 2.0);
    CHECK(d1.f_s == 2.0);
    CHECK(d1.f_ss == 0.0);
    CHECK(d1.mu == doctest::Approx(1 + 4 + 0.36).epsilon(1e-15));

    const Vec3 origin = delta_III_translation(p, 0.0, 0.0);
    CHECK(origin(0) == 0.0);
    CHECK(origin(1) == 0.0);
    CHECK(origin(2) == doctest::Approx(-1.0).epsilon(1e-15));

    const Vec3 at11 = delta_III_translation(p, 1.0, 1.0);
    CHECK(vrel(at11, delta_III_x(frame_at(p, 1.0, 1.0))) <= 1e-6);

    // Profiles with a flat second derivative are parabolic.
    const SurfaceDef cyl = test::translation_from_text("cylinder", "u", "v^2", Domain{-1, 1, -1, 1});
    CHECK_THROWS_AS(translation_MN(cyl, 0.0, 0.0), ParabolicPointError);
    CHECK_THROWS_AS(translation_MN(builtin("catenoid"), 0.5, 0.0), InvalidParameter);
}

TEST_CASE("M and N match their defining formulas") {
    test::Rng rng(41);
    for (const auto& def : translation_set())
        for (const auto& [u, v] : test::admissible_points(def, 100, rng)) {
            const auto d = translation_MN(def, u, v);
            const Jet3 F = profile_f(def, u), G = profile_h(def, v);
            const double f = F.du(), fs = F.duu(), fss = F.duuu();
            const double h = G.dv(), ht = G.dvv(), htt = G.dvvv();
            const double M = (1 + f * f) * fss / (fs * fs * fs) - 2 * f / fs;
            const double N = (1 + h * h) * htt / (ht * ht * ht) - 2 * h / ht;
            CAPTURE(def.name);
            CHECK(std::abs(d.M - M) <= 1e-12 * (1 + std::abs(M)));
            CHECK(std::abs(d.N - N) <= 1e-12 * (1 + std::abs(N)));
            CHECK(std::abs(d.r_M) <= 1e-10);
            CHECK(std::abs(d.r_N) <= 1e-10);
        }
}

TEST_CASE("translation specialization equals the ground truth") {
    test::Rng rng(64);
    for (const auto& def : test::nonminimal_translations()) {
        double worst = 0;
        for (const auto& [u, v] : test::admissible_points(def, 100, rng))
            worst = std::max(worst, vrel(delta_III_translation(def, u, v), delta_III_x(frame_at(def, u, v))));
        CAPTURE(def.name);
        CHECK(worst <= 1e-6);
    }
}

TEST_CASE("check suites") {
    CHECK(parse_suites("all").size() == 5);
    CHECK(parse_suites("r11") == std::vector<Suite>{Suite::R11});
    CHECK_THROWS_AS(parse_suites("nope"), InvalidParameter);

    const CheckReport rep = run_checks(builtin("elliptic-paraboloid"), 9, 9, parse_suites("all"));
    CHECK(rep.pass);
    CHECK(rep.points == 81);
    REQUIRE(rep.gauss_eigenvalue.has_value());
    CHECK(*rep.gauss_eigenvalue == doctest::Approx(2.0).epsilon(1e-9));
    for (const auto& l : rep.lines) CHECK(l.max_error <= l.tolerance);

    CHECK_THROWS_AS(run_checks(builtin("catenoid"), 9, 9, {Suite::Eq4}), InvalidParameter);

    CheckOptions strict;
    strict.tol_rel = 0.0;
    CHECK_FALSE(run_checks(builtin("ellipsoid", std::vector<double>{1.0, 1.2, 0.9}), 6, 6, {Suite::R11}, strict).pass);
    strict.tol_abs = 1e-3;
    CHECK(run_checks(builtin("ellipsoid", std::vector<double>{1.0, 1.2, 0.9}), 6, 6, {Suite::R11}, strict).pass);
}
