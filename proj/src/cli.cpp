#include "terza/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "terza/beltrami.hpp"
#include "terza/checks.hpp"
#include "terza/error.hpp"
#include "terza/mesh.hpp"
#include "terza/report.hpp"
#include "terza/spectra.hpp"

namespace terza::cli {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : Error {
    using Error::Error;
};

struct Options {
    std::string surface;
    std::string file;
    std::string grid;
    std::string domain;
    std::string at;
    std::string suite = "all";
    std::string format = "text";
    std::string out;
    std::optional<double> tol_rel;
    std::optional<double> tol_abs;
    double kappa_min = kDefaultKappaMin;
    double a1 = 1.0, a2 = 0.0, b2 = 0.0, c = 0.0;
};

double to_double(std::string_view s, const std::string& what) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double x = 0.0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size()) throw UsageError("bad number in " + what);
    return x;
}

std::pair<int, int> parse_grid(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos) throw UsageError("grid must look like NxM");
    int n = 0, m = 0;
    const auto a = std::from_chars(text.data(), text.data() + x, n);
    const auto b = std::from_chars(text.data() + x + 1, text.data() + text.size(), m);
    if (a.ec != std::errc() || a.ptr != text.data() + x || b.ec != std::errc() || b.ptr != text.data() + text.size())
        throw UsageError("grid must look like NxM");
    if (n < 2 || m < 2) throw UsageError("grid needs N, M >= 2");
    return {n, m};
}

Domain parse_domain(const std::string& text) {
    // u0:u1,v0:v1
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("domain must look like u0:u1,v0:v1");
    auto range = [&](std::string_view r) {
        const auto colon = r.find(':');
        if (colon == std::string_view::npos) throw UsageError("domain must look like u0:u1,v0:v1");
        return std::pair{to_double(r.substr(0, colon), "--domain"), to_double(r.substr(colon + 1), "--domain")};
    };
    const auto [u0, u1] = range(std::string_view(text).substr(0, comma));
    const auto [v0, v1] = range(std::string_view(text).substr(comma + 1));
    Domain d{u0, u1, v0, v1};
    if (!d.nondegenerate()) throw UsageError("domain must satisfy u0 < u1 and v0 < v1");
    return d;
}

SurfaceDef resolve_surface(const Options& o) {
    if (o.surface.empty() == o.file.empty()) throw UsageError("exactly one of --surface or --file is required");
    SurfaceDef def;
    if (!o.surface.empty()) {
        def = builtin_from_spec(o.surface);
    } else {
        std::ifstream in(o.file);
        if (!in) throw UsageError("cannot read " + o.file);
        std::ostringstream text;
        text << in.rdbuf();
        def = load_surface(text.str());
    }
    if (!o.domain.empty()) def.domain = parse_domain(o.domain);
    return def;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write " + o.out);
    f << text;
}

std::string num(double x) { return format_number(x); }

Json vec_json(const Vec3& a) { return Json::array({a(0), a(1), a(2)}); }
Json form_json(const SymForm& f) { return Json::array({f.e11, f.e12, f.e22}); }

int cmd_list(std::ostream& out) {
    std::ostringstream os;
    for (const auto& e : catalog())
        os << std::left << std::setw(21) << e.name << std::setw(20) << e.parameters << e.description << '\n';
    out << os.str();
    return kSuccess;
}

int cmd_frame(const Options& o, std::ostream& out) {
    const SurfaceDef def = resolve_surface(o);
    if (o.at.empty()) throw UsageError("--at u,v is required");
    const auto comma = o.at.find(',');
    if (comma == std::string::npos) throw UsageError("--at must look like u,v");
    const double u = to_double(std::string_view(o.at).substr(0, comma), "--at");
    const double v = to_double(std::string_view(o.at).substr(comma + 1), "--at");
    const GeoFrame fr = frame_at(def, u, v, o.kappa_min);
    const Vec3 dI = delta_I_x(fr), dIII = delta_III_x(fr), closed = delta_III_x_closed(fr), gauss = delta_III_gauss(fr);

    if (o.format == "json") {
        Json j;
        j["surface"] = def.name;
        j["at"] = {u, v};
        j["x"] = vec_json(fr.x);
        j["x_u"] = vec_json(fr.x_u);
        j["x_v"] = vec_json(fr.x_v);
        j["n"] = vec_json(fr.n);
        j["formI"] = form_json(fr.form1);
        j["formII"] = form_json(fr.form2);
        j["formIII"] = form_json(fr.form3);
        j["K"] = fr.K;
        j["H"] = fr.H;
        j["principal"] = {fr.a, fr.c};
        j["w"] = fr.w;
        j["w_grad"] = {fr.w_u, fr.w_v};
        j["delta_I_x"] = vec_json(dI);
        j["delta_III_x"] = vec_json(dIII);
        j["delta_III_x_closed"] = vec_json(closed);
        j["delta_III_n"] = vec_json(gauss);
        if (def.kind == SurfaceKind::Translation) {
            const auto d = translation_MN(def, u, v);
            j["M"] = d.M;
            j["N"] = d.N;
            j["delta_III_translation"] = vec_json(delta_III_translation(def, u, v, o.kappa_min));
        }
        j["tolerances"] = {{"kappa_min", o.kappa_min}};
        emit(o, j.dump(2) + "\n", out);
        return kSuccess;
    }

    std::ostringstream os;
    os << std::setprecision(12);
    auto row = [&](const char* label, const auto& value) { os << std::left << std::setw(22) << label << value << '\n'; };
    auto vec = [](const Vec3& a) { return num(a(0)) + "  " + num(a(1)) + "  " + num(a(2)); };
    auto form = [](const SymForm& f) { return num(f.e11) + "  " + num(f.e12) + "  " + num(f.e22); };
    row("surface", def.name);
    row("at", num(u) + ", " + num(v));
    row("x", vec(fr.x));
    row("n", vec(fr.n));
    row("I (11 12 22)", form(fr.form1));
    row("II (11 12 22)", form(fr.form2));
    row("III (11 12 22)", form(fr.form3));
    row("K", num(fr.K));
    row("H", num(fr.H));
    row("principal a, c", num(fr.a) + ", " + num(fr.c));
    row("w = 2H/K", num(fr.w));
    row("Delta^I x", vec(dI));
    row("Delta^III x", vec(dIII));
    row("grad^III w - w n", vec(closed));
    row("Delta^III n", vec(gauss));
    if (def.kind == SurfaceKind::Translation) {
        const auto d = translation_MN(def, u, v);
        row("M, N", num(d.M) + ", " + num(d.N));
        row("specialized Delta^III x", vec(delta_III_translation(def, u, v, o.kappa_min)));
    }
    row("kappa_min", num(o.kappa_min));
    emit(o, os.str(), out);
    return kSuccess;
}

int cmd_check(const Options& o, std::ostream& out) {
    const SurfaceDef def = resolve_surface(o);
    const auto [nu, nv] = parse_grid(o.grid.empty() ? "15x15" : o.grid);
    std::vector<Suite> suites = parse_suites(o.suite);
    if (o.suite == "all" && def.kind != SurfaceKind::Translation)
        suites.erase(std::remove(suites.begin(), suites.end(), Suite::Eq4), suites.end());
    CheckOptions opt;
    opt.tol_rel = o.tol_rel;
    opt.tol_abs = o.tol_abs.value_or(0.0);
    opt.kappa_min = o.kappa_min;
    const CheckReport rep = run_checks(def, nu, nv, suites, opt);

    if (o.format == "json") {
        Json j;
        j["surface"] = rep.surface;
        j["grid"] = {{"nu", rep.nu}, {"nv", rep.nv}, {"included", rep.points}, {"excluded", rep.rejected}};
        Json lines = Json::array();
        for (const auto& l : rep.lines)
            lines.push_back({{"suite", l.suite}, {"metric", l.metric}, {"max_error", l.max_error},
                             {"tolerance", l.tolerance}, {"pass", l.pass}});
        j["checks"] = lines;
        j["gauss_eigenvalue"] = rep.gauss_eigenvalue ? Json(*rep.gauss_eigenvalue) : Json(nullptr);
        j["pass"] = rep.pass;
        j["tolerances"] = {{"tol_rel", o.tol_rel ? Json(*o.tol_rel) : Json(nullptr)},
                           {"tol_abs", opt.tol_abs},
                           {"kappa_min", opt.kappa_min}};
        emit(o, j.dump(2) + "\n", out);
    } else {
        std::ostringstream os;
        os << "surface " << rep.surface << ", grid " << rep.nu << 'x' << rep.nv << ", " << rep.points
           << " admissible points, " << rep.rejected << " rejected\n";
        for (const auto& l : rep.lines)
            os << (l.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(10) << l.suite << std::setw(44) << l.metric
               << std::scientific << std::setprecision(3) << l.max_error << "  <= " << l.tolerance << '\n';
        if (rep.gauss_eigenvalue)
            os << "fitted Gauss-map eigenvalue " << std::defaultfloat << std::setprecision(15) << *rep.gauss_eigenvalue
               << '\n';
        os << "tolerances: tol_rel=" << (o.tol_rel ? num(*o.tol_rel) : std::string("default"))
           << " tol_abs=" << num(opt.tol_abs) << " kappa_min=" << num(opt.kappa_min) << '\n';
        emit(o, os.str(), out);
    }
    return rep.pass ? kSuccess : kVerificationFailed;
}

FitTolerances fit_tolerances(const Options& o) {
    FitTolerances tol;
    if (o.tol_rel) tol.rel = *o.tol_rel;
    if (o.tol_abs) tol.abs_coeff = *o.tol_abs;
    tol.kappa_min = o.kappa_min;
    return tol;
}

int cmd_fit(const Options& o, std::ostream& out) {
    const SurfaceDef def = resolve_surface(o);
    const auto [nu, nv] = parse_grid(o.grid.empty() ? "20x20" : o.grid);
    const ClassifyReport rep = classify(def, nu, nv, fit_tolerances(o));
    emit(o, o.format == "json" ? report_json(rep) : report_text(rep), out);
    if (rep.fit.ill_conditioned) return kNumericalDegeneracy;
    return rep.fit.verdict == Verdict::Fails ? kVerificationFailed : kSuccess;
}

int cmd_scherk(const Options& o, std::ostream& out) {
    const SurfaceDef def = scherk(ScherkParams{o.a1, o.a2, o.b2, o.c});
    const auto [nu, nv] = parse_grid(o.grid.empty() ? "15x15" : o.grid);
    const auto pts = grid_points(def.domain, nu, nv);
    const double residual = minimality_residual(def, pts);
    const double bound = o.tol_rel.value_or(1e-10) + o.tol_abs.value_or(0.0);
    if (o.format == "json") {
        Json j;
        j["definition"] = surface_to_text(def);
        j["grid"] = {{"nu", nu}, {"nv", nv}};
        j["minimality_residual"] = residual;
        j["tolerances"] = {{"minimality", bound}};
        emit(o, j.dump(2) + "\n", out);
    } else {
        std::ostringstream os;
        os << surface_to_text(def);
        os << "# minimality residual on " << nu << 'x' << nv << " grid: " << num(residual) << " (tolerance " << num(bound)
           << ")\n";
        emit(o, os.str(), out);
    }
    return residual <= bound ? kSuccess : kVerificationFailed;
}

int cmd_mesh(const Options& o, std::ostream& out) {
    const SurfaceDef def = resolve_surface(o);
    if (o.out.empty()) throw UsageError("mesh requires --out file.obj");
    const auto [nu, nv] = parse_grid(o.grid.empty() ? "40x40" : o.grid);
    std::ostringstream obj;
    const MeshStats stats = write_obj(def, nu, nv, obj, o.kappa_min);
    emit(o, obj.str(), out);
    out << "wrote " << o.out << ": " << stats.vertices << " vertices, " << stats.triangles << " triangles";
    if (stats.vertices_without_curvature) out << ", " << stats.vertices_without_curvature << " without curvature";
    out << " (kappa_min=" << num(o.kappa_min) << ")\n";
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Third-fundamental-form Beltrami operator toolkit for parametric surfaces", "terza"};
    app.require_subcommand(1);
    Options o;

    auto surface_opts = [&](CLI::App* sub) {
        sub->add_option("--surface", o.surface, "builtin surface name[:p1,p2,...]");
        sub->add_option("--file", o.file, "surface-definition file");
        sub->add_option("--domain", o.domain, "domain override u0:u1,v0:v1");
        sub->add_option("--kappa-min", o.kappa_min, "minimum |K| of admissible points");
    };
    auto output_opts = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", o.out, "write output to this file");
    };
    auto tol_opts = [&](CLI::App* sub) {
        sub->add_option("--tol-rel", o.tol_rel, "relative tolerance override");
        sub->add_option("--tol-abs", o.tol_abs, "absolute tolerance override");
    };

    auto* list = app.add_subcommand("list", "list builtin surfaces");
    auto* frame = app.add_subcommand("frame", "pointwise geometry at a parameter point");
    surface_opts(frame);
    output_opts(frame);
    tol_opts(frame);
    frame->add_option("--at", o.at, "parameter point u,v")->required();

    auto* check = app.add_subcommand("check", "run identity checks over a grid");
    surface_opts(check);
    output_opts(check);
    tol_opts(check);
    check->add_option("--suite", o.suite, "forms|deltaI|r11|eq4|gaussmap|all");
    check->add_option("--grid", o.grid, "grid NxM (default 15x15)");

    auto* fit = app.add_subcommand("fit", "fit Delta^III x = Lambda x and classify");
    surface_opts(fit);
    output_opts(fit);
    tol_opts(fit);
    fit->add_option("--grid", o.grid, "grid NxM (default 20x20)");

    auto* sch = app.add_subcommand("scherk", "emit a Scherk surface definition and its minimality residual");
    output_opts(sch);
    tol_opts(sch);
    sch->add_option("--a1", o.a1, "a1 (nonzero)");
    sch->add_option("--a2", o.a2, "a2");
    sch->add_option("--b2", o.b2, "b2");
    sch->add_option("--c", o.c, "c");
    sch->add_option("--grid", o.grid, "grid NxM (default 15x15)");

    auto* mesh = app.add_subcommand("mesh", "export the sampling grid as ASCII OBJ");
    surface_opts(mesh);
    tol_opts(mesh);
    mesh->add_option("--grid", o.grid, "grid NxM (default 40x40)");
    mesh->add_option("--out", o.out, "output .obj path")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "terza: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (list->parsed()) return cmd_list(out);
        if (frame->parsed()) return cmd_frame(o, out);
        if (check->parsed()) return cmd_check(o, out);
        if (fit->parsed()) return cmd_fit(o, out);
        if (sch->parsed()) return cmd_scherk(o, out);
        if (mesh->parsed()) return cmd_mesh(o, out);
    } catch (const UsageError& e) {
        err << "terza: " << e.what() << '\n';
        return kUsageError;
    } catch (const InvalidParameter& e) {
        err << "terza: " << e.what() << '\n';
        return kUsageError;
    } catch (const FormatError& e) {
        err << "terza: " << e.what() << '\n';
        return kUsageError;
    } catch (const ParseError& e) {
        err << "terza: " << e.what() << '\n';
        return kUsageError;
    } catch (const OutOfDomainError& e) {
        err << "terza: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "terza: " << e.what() << '\n';
        return kNumericalDegeneracy;
    }
    return kUsageError;
}

}  // namespace terza::cli
