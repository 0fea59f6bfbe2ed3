#include "riesz/reports.hpp"

namespace riesz {

namespace {

template <typename T>
nlohmann::json opt(const std::optional<T>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

void to_json(nlohmann::json& j, const EnergyReport& r) {
    j = {{"s", r.s},
         {"d", r.d},
         {"N", r.N},
         {"energy", r.energy},
         {"continuous_prediction", opt(r.continuous_prediction)},
         {"residual_normalized", opt(r.residual_normalized)}};
}

void to_json(nlohmann::json& j, const DiscrepancyReport& r) {
    j = {{"kind", std::string(to_string(r.kind))},
         {"d", r.d},
         {"N", r.N},
         {"value", r.value},
         {"squared", opt(r.squared)},
         {"clamped", r.clamped},
         {"centers", opt(r.centers)},
         {"seed", opt(r.seed)},
         {"standard_error", opt(r.standard_error)},
         {"degree", opt(r.degree)},
         {"lower_functional", opt(r.lower_functional)},
         {"upper_functional", opt(r.upper_functional)}};
}

void to_json(nlohmann::json& j, const LeVequeFunctionals& r) {
    j = {{"lower", r.lower}, {"upper", r.upper}, {"degree", r.degree}};
}

void to_json(nlohmann::json& j, const OptimizerConfig& c) {
    j = {{"s", c.s},
         {"maximize", c.maximize},
         {"max_iters", c.max_iters},
         {"grad_tol", c.grad_tol},
         {"restarts", c.restarts},
         {"seed", c.seed},
         {"step_init", c.step_init},
         {"backtrack_factor", c.backtrack_factor},
         {"armijo_c", c.armijo_c},
         {"threads", c.threads}};
}

void to_json(nlohmann::json& j, const OptimizerResult& r) {
    nlohmann::json restarts = nlohmann::json::array();
    for (const auto& s : r.restarts)
        restarts.push_back(
            {{"energy", s.energy}, {"grad_norm", s.grad_norm}, {"iterations", s.iterations}, {"converged", s.converged}});
    j = {{"d", r.best.dim()},
         {"N", r.best.size()},
         {"energy", r.energy},
         {"grad_norm", r.grad_norm},
         {"iterations", r.iterations},
         {"restarts_used", r.restarts_used},
         {"converged", r.converged},
         {"best_restart", r.best_restart},
         {"restarts", restarts}};
}

namespace asymptotics {

void to_json(nlohmann::json& j, const FitResult& r) {
    j = {{"slope", r.slope},
         {"intercept_constant", r.intercept_constant},
         {"r_squared", r.r_squared},
         {"points_used", r.points_used}};
}

void to_json(nlohmann::json& j, const AsymptoticPrediction& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [c, e] : p.terms) terms.push_back({{"coefficient", c}, {"exponent", e}});
    j = {{"d", p.d}, {"constant", p.constant}, {"exponent", p.exponent}, {"terms", terms}};
}

}  // namespace asymptotics

namespace special {

void to_json(nlohmann::json& j, const LatticeSum& r) {
    j = {{"truncated", r.truncated},
         {"tail_estimate", r.tail_estimate},
         {"value", r.value},
         {"error_bound", r.error_bound},
         {"terms", r.terms}};
}

}  // namespace special

}  // namespace riesz
