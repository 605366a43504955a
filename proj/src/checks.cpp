#include "terza/checks.hpp"

#include <algorithm>
#include <cmath>

#include "terza/beltrami.hpp"
#include "terza/error.hpp"
#include "terza/spectra.hpp"

namespace terza {
namespace {

double max_abs(const SymForm& f) { return std::max({std::abs(f.e11), std::abs(f.e12), std::abs(f.e22)}); }

SymForm combine(double a, const SymForm& f, double b, const SymForm& g) {
    return {a * f.e11 + b * g.e11, a * f.e12 + b * g.e12, a * f.e22 + b * g.e22};
}

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

struct Metric {
    std::string suite, metric;
    double bound;
    double worst = 0.0;

    void add(double e) { worst = std::isnan(e) ? e : std::max(worst, e); }
};

}  // namespace

std::string_view suite_name(Suite s) {
    switch (s) {
        case Suite::Forms: return "forms";
        case Suite::DeltaI: return "deltaI";
        case Suite::R11: return "r11";
        case Suite::Eq4: return "eq4";
        case Suite::GaussMap: return "gaussmap";
    }
    return "?";
}

std::vector<Suite> parse_suites(std::string_view name) {
    static constexpr Suite all[] = {Suite::Forms, Suite::DeltaI, Suite::R11, Suite::Eq4, Suite::GaussMap};
    if (name == "all") return {std::begin(all), std::end(all)};
    for (Suite s : all)
        if (name == suite_name(s)) return {s};
    throw InvalidParameter("unknown suite '" + std::string(name) + "' (forms|deltaI|r11|eq4|gaussmap|all)");
}

double mixed_error(const Vec3& a, const Vec3& b) { return (a - b).norm() / (1.0 + std::max(a.norm(), b.norm())); }

double form_identity_error(const GeoFrame& fr) {
    const SymForm h2 = combine(2.0 * fr.H, fr.form2, 0.0, fr.form1);
    const SymForm k1 = combine(fr.K, fr.form1, 0.0, fr.form1);
    const SymForm rhs = combine(1.0, h2, -1.0, k1);
    const SymForm diff = combine(1.0, fr.form3, -1.0, rhs);
    const double scale = std::max({max_abs(fr.form3), max_abs(h2), max_abs(k1)});
    return max_abs(diff) / scale;
}

CheckReport run_checks(const SurfaceDef& def, int nu, int nv, const std::vector<Suite>& suites, const CheckOptions& opt) {
    const bool translation = def.kind == SurfaceKind::Translation;
    auto wants = [&](Suite s) { return std::find(suites.begin(), suites.end(), s) != suites.end(); };
    if (wants(Suite::Eq4) && !translation && suites.size() == 1)
        throw InvalidParameter("suite eq4 requires a translation surface");

    auto bound = [&](double def_bound) { return opt.tol_rel.value_or(def_bound) + opt.tol_abs; };
    // The Gauss-map bound scales with 1 + |2n| = 3.
    auto gauss_bound = [&] { return 3.0 * opt.tol_rel.value_or(1e-6) + opt.tol_abs; };

    std::vector<Metric> m;
    enum Slot { Form3, KFormula, Principal, UnitNormal, Orthogonal, SignAnchor, Closed, TranslationCross, ProfileIdentity, Gauss, Eigen, Count };
    std::vector<int> slot(Count, -1);
    auto add = [&](Slot s, const char* suite, const char* metric, double b) {
        slot[s] = static_cast<int>(m.size());
        m.push_back({suite, metric, b});
    };
    if (wants(Suite::Forms)) {
        add(Form3, "forms", "III - (2H II - K I), relative", bound(1e-9));
        add(KFormula, "forms", "K - det II / det I, relative", bound(1e-10));
        add(Principal, "forms", "a c - K and (a + c)/2 - H, relative", bound(1e-9));
        add(UnitNormal, "forms", "| |n| - 1 |", bound(1e-12));
        add(Orthogonal, "forms", "|n . x_u| / |x_u|, |n . x_v| / |x_v|", bound(1e-10));
    }
    if (wants(Suite::DeltaI)) add(SignAnchor, "deltaI", "|Delta^I x + 2H n| / (1 + |2H n|)", bound(1e-9));
    if (wants(Suite::R11)) add(Closed, "r11", "Delta^III x vs grad^III(2H/K) - (2H/K) n", bound(1e-6));
    if (wants(Suite::Eq4) && translation) {
        add(TranslationCross, "eq4", "specialized operator vs Delta^III x", bound(1e-6));
        add(ProfileIdentity, "eq4", "max(|r_M|, |r_N|)", bound(1e-10));
    }
    if (wants(Suite::GaussMap)) {
        add(Gauss, "gaussmap", "|Delta^III n - 2n|", gauss_bound());
        add(Eigen, "gaussmap", "|fitted eigenvalue - 2|", bound(1e-6));
    }
    auto record = [&](Slot s, double e) {
        if (slot[s] >= 0) m[static_cast<std::size_t>(slot[s])].add(e);
    };

    CheckReport rep;
    rep.surface = def.name;
    rep.nu = nu;
    rep.nv = nv;
    std::vector<Vec3> normals, images;
    for (const auto& [u, v] : grid_points(def.domain, nu, nv)) {
        GeoFrame fr;
        try {
            fr = frame_at(def, u, v, opt.kappa_min);
            if (regularity_guard(fr, opt.kappa_min)) {
                ++rep.rejected;
                continue;
            }
        } catch (const Error&) {
            ++rep.rejected;
            continue;
        }
        ++rep.points;

        record(Form3, form_identity_error(fr));
        record(KFormula, rel(fr.K, fr.form2.det() / fr.form1.det()));
        record(Principal, std::max(rel(fr.a * fr.c, fr.K), std::abs(0.5 * (fr.a + fr.c) - fr.H) / std::max(1.0, std::abs(fr.H))));
        record(UnitNormal, std::abs(fr.n.norm() - 1.0));
        record(Orthogonal, std::max(std::abs(fr.n.dot(fr.x_u)) / fr.x_u.norm(), std::abs(fr.n.dot(fr.x_v)) / fr.x_v.norm()));
        if (slot[SignAnchor] >= 0) {
            const Vec3 two_hn = 2.0 * fr.H * fr.n;
            record(SignAnchor, (delta_I_x(fr) + two_hn).norm() / (1.0 + two_hn.norm()));
        }
        if (slot[Closed] >= 0) record(Closed, mixed_error(delta_III_x(fr), delta_III_x_closed(fr)));
        if (slot[TranslationCross] >= 0) {
            record(TranslationCross, mixed_error(delta_III_x(fr), delta_III_translation(def, u, v, opt.kappa_min)));
            const auto d = translation_MN(def, u, v);
            record(ProfileIdentity, std::max(std::abs(d.r_M), std::abs(d.r_N)));
        }
        if (slot[Gauss] >= 0) {
            const Vec3 g = delta_III_gauss(fr);
            record(Gauss, (g - 2.0 * fr.n).norm());
            normals.push_back(fr.n);
            images.push_back(g);
        }
    }
    if (rep.points == 0) throw InsufficientSamplesError("no admissible points on " + def.name);
    if (slot[Eigen] >= 0) {
        rep.gauss_eigenvalue = fit_scalar_eigenvalue(normals, images);
        record(Eigen, std::abs(*rep.gauss_eigenvalue - 2.0));
    }

    for (const auto& x : m) {
        const bool ok = x.worst <= x.bound;
        rep.lines.push_back({x.suite, x.metric, x.worst, x.bound, ok});
        rep.pass = rep.pass && ok;
    }
    return rep;
}

}  // namespace terza
