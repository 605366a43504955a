#include "terza/report.hpp"

#include <sstream>

#include "json.hpp"

namespace terza {
namespace {

using Json = nlohmann::ordered_json;

Json tolerances_json(const ClassifyReport& rep) {
    const FitTolerances& t = rep.tolerances;
    Json j;
    j["eps_abs_coeff"] = t.abs_coeff;
    j["eps_abs"] = t.abs_coeff * (1.0 + rep.fit.rms_x);
    j["eps_rel"] = t.rel;
    j["tau_iso"] = t.tau_iso;
    j["eps_floor"] = t.floor;
    j["kappa_min"] = t.kappa_min;
    j["max_condition"] = t.max_condition;
    j["minimal"] = t.minimal;
    return j;
}

}  // namespace

std::string report_json(const ClassifyReport& rep, int indent) {
    Json j;
    j["surface"] = rep.surface;
    j["grid"] = {{"nu", rep.nu}, {"nv", rep.nv}, {"included", rep.included}, {"excluded", rep.excluded}};
    Json lambda = Json::array();
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) lambda.push_back(rep.fit.lambda(r, c));
    j["lambda"] = lambda;
    j["residual_abs_rms"] = rep.fit.residual_abs_rms;
    j["residual_rel"] = rep.fit.residual_rel;
    j["design_condition"] = rep.fit.design_condition;
    j["ill_conditioned"] = rep.fit.ill_conditioned;
    j["minimality_residual"] = rep.minimality_residual ? Json(*rep.minimality_residual) : Json(nullptr);
    j["mean_curvature_rms"] = rep.mean_curvature_rms;
    j["minimal"] = rep.minimal;
    j["verdict"] = std::string(verdict_name(rep.fit.verdict));
    j["eigenvalue"] = rep.fit.eigenvalue ? Json(*rep.fit.eigenvalue) : Json(nullptr);
    j["tolerances"] = tolerances_json(rep);
    return j.dump(indent) + "\n";
}

std::string report_text(const ClassifyReport& rep) {
    std::ostringstream os;
    os.precision(6);
    os << "surface            " << rep.surface << '\n';
    os << "grid               " << rep.nu << 'x' << rep.nv << " (" << rep.included << " included, " << rep.excluded
       << " excluded)\n";
    os << "lambda\n";
    for (int r = 0; r < 3; ++r) {
        os << "  ";
        for (int c = 0; c < 3; ++c) os << ' ' << std::scientific << rep.fit.lambda(r, c);
        os << '\n';
    }
    os << std::scientific;
    os << "residual_abs_rms   " << rep.fit.residual_abs_rms << "  (threshold " << rep.fit.threshold << ")\n";
    os << "residual_rel       " << rep.fit.residual_rel << '\n';
    os << "design_condition   " << rep.fit.design_condition << (rep.fit.ill_conditioned ? "  ill-conditioned" : "")
       << '\n';
    if (rep.minimality_residual) os << "minimality         " << *rep.minimality_residual << '\n';
    os << "mean_curvature_rms " << rep.mean_curvature_rms << (rep.minimal ? "  minimal" : "") << '\n';
    os << "verdict            " << verdict_name(rep.fit.verdict);
    if (rep.fit.eigenvalue) os << " (lambda = " << *rep.fit.eigenvalue << ')';
    os << '\n';
    const FitTolerances& t = rep.tolerances;
    os << "tolerances         eps_abs=" << t.abs_coeff << "*(1+rms|x|) eps_rel=" << t.rel << " tau_iso=" << t.tau_iso
       << " kappa_min=" << t.kappa_min << '\n';
    return os.str();
}

}  // namespace terza
