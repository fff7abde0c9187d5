#include "micromaser/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace micromaser {

void ModelParams::validate() const {
    if (!std::isfinite(chi_over_kappa) || chi_over_kappa < 0.0)
        throw std::invalid_argument("chi/kappa must be finite and >= 0, got " +
                                    std::to_string(chi_over_kappa));
    if (stark_enabled && !(std::isfinite(r) && r > 0.0))
        throw std::invalid_argument("r must be finite and > 0 when the Stark shift is on, got " +
                                    std::to_string(r));
}

double stark_bracket(int n, const ModelParams& p) {
    const double kerr = p.chi_over_kappa * (2.0 * n + 1.0);
    if (!p.stark_enabled) return kerr;
    const double r2 = p.r * p.r;
    return kerr + (n * (r2 - 1.0) + 2.0 * r2) / (2.0 * p.r);
}

double upsilon(int n, const ModelParams& p) {
    const double b = stark_bracket(n, p);
    return std::sqrt(b * b + (n + 1.0) * (n + 2.0));
}

double lambda_phase(int n, const ModelParams& p) {
    const double kerr = p.chi_over_kappa * n * (n + 1.0);
    if (!p.stark_enabled) return kerr;
    const double r2 = p.r * p.r;
    return kerr + (n * (r2 + 1.0) + 2.0 * r2) / (2.0 * p.r);
}

double block_mean_energy(int n, const ModelParams& p) {
    return lambda_phase(n, p) + p.chi_over_kappa;
}

cplx amp_K(int n, double t, const ModelParams& p) {
    const double b = stark_bracket(n, p);
    const double u = std::sqrt(b * b + (n + 1.0) * (n + 2.0));
    const double s = std::sin(u * t) / u;
    return {std::cos(u * t), b * s};
}

cplx amp_R(int n, double t, const ModelParams& p) {
    if (n < 2) return {0.0, 0.0};
    const double u = upsilon(n - 2, p);
    return {0.0, -std::sqrt(n * (n - 1.0)) * std::sin(u * t) / u};
}

cplx ground_survival_phase(int n, double t, const ModelParams& p) {
    if (n < 0 || n > 1)
        throw std::invalid_argument("ground_survival_phase is defined for n in {0,1} only, got n=" +
                                    std::to_string(n));
    const double energy = p.chi_over_kappa * n * (n - 1.0) + n * p.beta_ground();
    return std::polar(1.0, -energy * t);
}

}  // namespace micromaser
