#include "terza/surface.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <utility>

#include "terza/error.hpp"

namespace terza {
namespace {

std::string num(double x) { return format_number(x); }

Expr parse_or_throw(const std::string& text) { return parse_expr(text); }

double param(std::span<const double> p, std::size_t i, double fallback) {
    return i < p.size() ? p[i] : fallback;
}

void expect_at_most(std::string_view name, std::span<const double> p, std::size_t n) {
    if (p.size() > n)
        throw InvalidParameter(std::string(name) + " takes at most " + std::to_string(n) + " parameter(s), got " +
                               std::to_string(p.size()));
}

void require_positive(std::string_view what, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw InvalidParameter(std::string(what) + " must be positive");
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::optional<double> parse_double(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double x = 0.0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || end != s.data() + s.size() || s.empty()) return std::nullopt;
    return x;
}

}  // namespace

SurfaceDef make_parametric(std::string name, Expr x, Expr y, Expr z, Domain domain) {
    if (!domain.nondegenerate()) throw InvalidParameter("domain must satisfy u0 < u1 and v0 < v1");
    SurfaceDef def;
    def.kind = SurfaceKind::Parametric;
    def.name = std::move(name);
    def.xyz = {std::move(x), std::move(y), std::move(z)};
    def.domain = domain;
    return def;
}

SurfaceDef make_translation(std::string name, Expr f, Expr h, Domain domain) {
    if (!domain.nondegenerate()) throw InvalidParameter("domain must satisfy u0 < u1 and v0 < v1");
    if (uses_variable(f, Var::V)) throw InvalidParameter("translation profile f must depend on u only");
    if (uses_variable(h, Var::U)) throw InvalidParameter("translation profile h must depend on v only");
    SurfaceDef def;
    def.kind = SurfaceKind::Translation;
    def.name = std::move(name);
    def.f = std::move(f);
    def.h = std::move(h);
    def.domain = domain;
    return def;
}

SurfaceDef scherk(const ScherkParams& p) {
    if (p.a1 == 0.0) throw InvalidParameter("a1 must be nonzero");
    const double reach = std::acos(kScherkCosMargin);
    auto interval = [](double lo, double hi) { return lo < hi ? std::pair{lo, hi} : std::pair{hi, lo}; };
    // a1 u + a2 in [-reach, reach] and -a1 v + b2 in [-reach, reach].
    const auto [u0, u1] = interval((-reach - p.a2) / p.a1, (reach - p.a2) / p.a1);
    const auto [v0, v1] = interval((p.b2 - reach) / p.a1, (p.b2 + reach) / p.a1);

    const std::string a1 = num(p.a1);
    const std::string f = num(p.c) + " - ln(cos(" + a1 + "*u + " + num(p.a2) + "))/" + a1;
    const std::string h = "ln(cos(" + num(-p.a1) + "*v + " + num(p.b2) + "))/" + a1;
    std::ostringstream name;
    name << "scherk:" << num(p.a1) << ',' << num(p.a2) << ',' << num(p.b2) << ',' << num(p.c);
    return make_translation(name.str(), parse_or_throw(f), parse_or_throw(h), Domain{u0, u1, v0, v1});
}

std::vector<CatalogEntry> catalog() {
    return {
        {"sphere", "r=1", "origin-centred sphere, chart kept off the poles"},
        {"catenoid", "", "(cosh v cos u, cosh v sin u, v)"},
        {"helicoid", "pitch=1", "(v cos u, v sin u, pitch u)"},
        {"ellipsoid", "p=1,q=1.2,r=0.9", "(p cos u cos v, q sin u cos v, r sin v)"},
        {"elliptic-paraboloid", "", "translation surface z = u^2 + v^2 (alias: paraboloid)"},
        {"torus", "R=2,r=1", "outer (K > 0) part, 0.2 band kept off the parabolic circles"},
        {"monkey-saddle", "", "z = u^3 - 3 u v^2 on a patch away from the flat point"},
        {"scherk", "a1=1,a2=0,b2=0,c=0", "minimal translation surface"},
    };
}

SurfaceDef builtin(std::string_view name, std::span<const double> p) {
    const auto P = [&](const std::string& s) { return parse_or_throw(s); };

    if (name == "sphere") {
        expect_at_most(name, p, 1);
        const double r = param(p, 0, 1.0);
        require_positive("sphere radius", r);
        const std::string R = num(r);
        return make_parametric("sphere:" + R, P(R + "*cos(u)*cos(v)"), P(R + "*sin(u)*cos(v)"), P(R + "*sin(v)"),
                               Domain{0.0, 3.0, -1.2, 1.2});
    }
    if (name == "catenoid") {
        expect_at_most(name, p, 0);
        const std::string ch = "(exp(v) + exp(-v))/2";
        return make_parametric("catenoid", P(ch + "*cos(u)"), P(ch + "*sin(u)"), P("v"), Domain{0.0, 3.0, -1.0, 1.0});
    }
    if (name == "helicoid") {
        expect_at_most(name, p, 1);
        const double pitch = param(p, 0, 1.0);
        require_positive("helicoid pitch", pitch);
        return make_parametric("helicoid:" + num(pitch), P("v*cos(u)"), P("v*sin(u)"), P(num(pitch) + "*u"),
                               Domain{0.0, 3.0, -1.0, 1.0});
    }
    if (name == "ellipsoid") {
        expect_at_most(name, p, 3);
        const double a = param(p, 0, 1.0), b = param(p, 1, 1.2), c = param(p, 2, 0.9);
        require_positive("ellipsoid semi-axis", a);
        require_positive("ellipsoid semi-axis", b);
        require_positive("ellipsoid semi-axis", c);
        return make_parametric("ellipsoid:" + num(a) + "," + num(b) + "," + num(c),
                               P(num(a) + "*cos(u)*cos(v)"), P(num(b) + "*sin(u)*cos(v)"), P(num(c) + "*sin(v)"),
                               Domain{0.0, 3.0, -1.2, 1.2});
    }
    if (name == "elliptic-paraboloid" || name == "paraboloid") {
        expect_at_most(name, p, 0);
        return make_translation("elliptic-paraboloid", P("u^2"), P("v^2"), Domain{-1.0, 1.0, -1.0, 1.0});
    }
    if (name == "torus") {
        expect_at_most(name, p, 2);
        const double R = param(p, 0, 2.0), r = param(p, 1, 1.0);
        require_positive("torus tube radius", r);
        if (!(R > r)) throw InvalidParameter("torus requires R > r");
        const std::string ring = "(" + num(R) + " + " + num(r) + "*cos(v))";
        // K = cos v / (r (R + r cos v)) vanishes on v = +-pi/2.
        const double edge = std::numbers::pi / 2 - 0.2;
        return make_parametric("torus:" + num(R) + "," + num(r), P(ring + "*cos(u)"), P(ring + "*sin(u)"),
                               P(num(r) + "*sin(v)"), Domain{0.0, 3.0, -edge, edge});
    }
    if (name == "monkey-saddle") {
        expect_at_most(name, p, 0);
        return make_parametric("monkey-saddle", P("u"), P("v"), P("u^3 - 3*u*v^2"), Domain{0.2, 1.0, -1.0, 1.0});
    }
    if (name == "scherk") {
        expect_at_most(name, p, 4);
        return scherk(ScherkParams{param(p, 0, 1.0), param(p, 1, 0.0), param(p, 2, 0.0), param(p, 3, 0.0)});
    }
    throw InvalidParameter("unknown surface '" + std::string(name) + "'");
}

SurfaceDef builtin_from_spec(std::string_view spec) {
    const auto colon = spec.find(':');
    const std::string_view name = spec.substr(0, colon);
    std::vector<double> params;
    if (colon != std::string_view::npos) {
        std::string_view rest = spec.substr(colon + 1);
        while (true) {
            const auto comma = rest.find(',');
            const auto item = rest.substr(0, comma);
            const auto x = parse_double(item);
            if (!x) throw InvalidParameter("bad surface parameter '" + std::string(item) + "'");
            params.push_back(*x);
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }
    return builtin(name, params);
}

SurfaceDef load_surface(std::string_view text) {
    static const char* const kKeys[] = {"kind", "name", "f", "h", "x", "y", "z", "domain"};
    std::map<std::string, std::pair<std::string, std::size_t>> values;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find('\n', start);
        const std::string_view raw = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw FormatError("expected 'key = value'", line_no);
        const std::string key(trim(line.substr(0, eq)));
        std::string_view value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);

        bool known = false;
        for (const char* k : kKeys) known = known || key == k;
        if (!known) throw FormatError("unknown key: " + key, line_no);
        if (values.count(key)) throw FormatError("duplicate key: " + key, line_no);
        values[key] = {std::string(value), line_no};
    }

    auto get = [&](const std::string& key) -> const std::pair<std::string, std::size_t>& {
        auto it = values.find(key);
        if (it == values.end()) throw FormatError("missing key: " + key, 0);
        return it->second;
    };
    auto expr = [&](const std::string& key) {
        const auto& [src, line] = get(key);
        try {
            return parse_expr(src);
        } catch (const ParseError& e) {
            throw FormatError("key " + key + ": " + e.what(), line);
        }
    };

    const auto& [kind, kind_line] = get("kind");
    const auto& [dom_text, dom_line] = get("domain");
    Domain domain;
    {
        std::istringstream is(dom_text);
        std::string tok;
        std::vector<double> d;
        while (is >> tok) {
            const auto x = parse_double(tok);
            if (!x) throw FormatError("domain: bad number '" + tok + "'", dom_line);
            d.push_back(*x);
        }
        if (d.size() != 4) throw FormatError("domain requires four numbers: u0 u1 v0 v1", dom_line);
        domain = Domain{d[0], d[1], d[2], d[3]};
        if (!domain.nondegenerate()) throw FormatError("domain must satisfy u0 < u1 and v0 < v1", dom_line);
    }
    const std::string name = values.count("name") ? values["name"].first : std::string("surface");

    if (kind == "translation") {
        for (const char* k : {"x", "y", "z"})
            if (values.count(k)) throw FormatError(std::string("key ") + k + " is not allowed for translation kind", values[k].second);
        if (!values.count("f") || !values.count("h")) throw FormatError("translation kind requires f,h", kind_line);
        try {
            return make_translation(name, expr("f"), expr("h"), domain);
        } catch (const InvalidParameter& e) {
            throw FormatError(e.what(), kind_line);
        }
    }
    if (kind == "parametric") {
        for (const char* k : {"f", "h"})
            if (values.count(k)) throw FormatError(std::string("key ") + k + " is not allowed for parametric kind", values[k].second);
        if (!values.count("x") || !values.count("y") || !values.count("z"))
            throw FormatError("parametric kind requires x,y,z", kind_line);
        return make_parametric(name, expr("x"), expr("y"), expr("z"), domain);
    }
    throw FormatError("kind must be 'translation' or 'parametric'", kind_line);
}

std::string surface_to_text(const SurfaceDef& def) {
    std::ostringstream os;
    os << "kind = " << (def.kind == SurfaceKind::Translation ? "translation" : "parametric") << '\n';
    os << "name = " << def.name << '\n';
    if (def.kind == SurfaceKind::Translation) {
        os << "f = \"" << print_expr(def.f) << "\"\n";
        os << "h = \"" << print_expr(def.h) << "\"\n";
    } else {
        os << "x = \"" << print_expr(def.xyz[0]) << "\"\n";
        os << "y = \"" << print_expr(def.xyz[1]) << "\"\n";
        os << "z = \"" << print_expr(def.xyz[2]) << "\"\n";
    }
    os << "domain = " << num(def.domain.u0) << ' ' << num(def.domain.u1) << ' ' << num(def.domain.v0) << ' '
       << num(def.domain.v1) << '\n';
    return os.str();
}

Jet3 profile_f(const SurfaceDef& def, double u) {
    if (def.kind != SurfaceKind::Translation) throw InvalidParameter("profile_f requires a translation surface");
    return eval_expr(def.f, Jet3::seed_u(u), Jet3::constant(0.0));
}

Jet3 profile_h(const SurfaceDef& def, double v) {
    if (def.kind != SurfaceKind::Translation) throw InvalidParameter("profile_h requires a translation surface");
    return eval_expr(def.h, Jet3::constant(0.0), Jet3::seed_v(v));
}

std::array<Jet3, 3> surface_jet(const SurfaceDef& def, double u, double v) {
    if (!def.domain.contains(u, v))
        throw OutOfDomainError("point (" + num(u) + ", " + num(v) + ") lies outside the domain of " + def.name);
    const Jet3 ju = Jet3::seed_u(u), jv = Jet3::seed_v(v);
    if (def.kind == SurfaceKind::Translation)
        return {ju, jv, eval_expr(def.f, ju, jv) + eval_expr(def.h, ju, jv)};
    return {eval_expr(def.xyz[0], ju, jv), eval_expr(def.xyz[1], ju, jv), eval_expr(def.xyz[2], ju, jv)};
}

}  // namespace terza
