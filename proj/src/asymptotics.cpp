#include "matcount/asymptotics.hpp"

#include <cmath>
#include <numbers>

namespace matcount {

namespace {
constexpr double kPi = std::numbers::pi;
}

double main_term_thm1(u64 n, double x) {
    ExactRational s = sigma_minus1(factorize(n));
    return 96.0 * (double(s.num) / double(s.den)) / (kPi * kPi) * x * x;
}

double error_envelope_thm1(u64 n, double x, const ErrorEnvelope& env) {
    double s0 = double(sigma0(factorize(n)));
    return env.c * (s0 * x * std::log(x) + double(n) * std::pow(x, env.epsilon));
}

double afif_envelope(u64 n, double x, double epsilon, double c) {
    return c * std::pow(x, epsilon) *
           std::max(std::pow(x, 5.0 / 3.0), double(n));
}

double main_term_thm2(u64 p, int k) {
    if (!is_prime(p))
        throw std::invalid_argument("main_term_thm2: p must be prime");
    if (k != 1 && k != 2)
        throw std::invalid_argument("main_term_thm2: k must be 1 or 2");
    double n = k == 1 ? double(p) : double(p) * double(p);
    return 4.0 * (12.0 / (kPi * kPi) - 1.0) * n;
}

std::optional<FitResult> fit_error_exponent(
    const std::vector<std::pair<double, double>>& rows) {
    std::vector<std::pair<double, double>> pts;
    for (auto [x, err] : rows) {
        if (err > 0.0 && x > 0.0) pts.emplace_back(std::log(x), std::log(err));
    }
    if (pts.size() < 2) return std::nullopt;
    double n = double(pts.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (auto [lx, ly] : pts) {
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        syy += ly * ly;
    }
    double den = n * sxx - sx * sx;
    if (den == 0.0) return std::nullopt;  // all X identical
    FitResult fit;
    fit.slope = (n * sxy - sx * sy) / den;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss_tot = syy - sy * sy / n;
    double ss_res = 0;
    for (auto [lx, ly] : pts) {
        double r = ly - (fit.slope * lx + fit.intercept);
        ss_res += r * r;
    }
    fit.r_squared = ss_tot > 0.0 ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
    fit.points_used = pts.size();
    return fit;
}

}  // namespace matcount
