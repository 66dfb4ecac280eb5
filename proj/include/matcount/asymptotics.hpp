#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "matcount/arith.hpp"

// Floating evaluation of the asymptotic main terms and error envelopes.
// Counts stay exact integers elsewhere; only the predictions live here.

namespace matcount {

struct ErrorEnvelope {
    double c = 1.0;        // implied constant
    double epsilon = 0.5;  // 0 < epsilon <= 1
};

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t points_used = 0;
};

// 96*sigma_{-1}(n)/pi^2 * X^2; sigma_{-1} evaluated as an exact rational
// with a single final floating division.
double main_term_thm1(u64 n, double x);

// c * (sigma_0(n)*X*log X + n*X^epsilon), natural log.
double error_envelope_thm1(u64 n, double x, const ErrorEnvelope& env);

// c * X^epsilon * max(X^{5/3}, n); the o(1) exponent is caller-supplied.
double afif_envelope(u64 n, double x, double epsilon, double c);

// 4*(12/pi^2 - 1) * p^k for prime p, k in {1, 2}.
double main_term_thm2(u64 p, int k);

// Least-squares fit of log(abs_error) vs log(X); rows with abs_error == 0
// are skipped.  Absent when fewer than 2 usable rows remain.
std::optional<FitResult> fit_error_exponent(
    const std::vector<std::pair<double, double>>& rows);

}  // namespace matcount
