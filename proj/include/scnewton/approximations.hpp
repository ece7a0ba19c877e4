#pragma once

// Closed-form approximations of the worst-case decrement and of the optimal
// damping, their small-decrement expansions, and audits of the approximation
// error against the exact ODE/BVP pipeline.

#include <cstddef>
#include <string>

namespace scnewton::approximations {

enum class FormulaId { FullStepBound, OptStepBound, OptGamma };

std::string to_string(FormulaId id);

/// Largest decrement for which the full-step approximation is advertised.
inline constexpr double kFullBoundValidMax = 2.0 / 3.0;

/// 1.01 lam^2 + 1.02 lam^4. Evaluated for any lam >= 0; callers should warn
/// outside [0, kFullBoundValidMax]. Throws DomainError for lam < 0.
double approx_full_bound(double lam);

/// lam^2 - 0.556 lam^4 log(lam) (natural log), 0 at lam = 0.
/// Throws DomainError outside [0, 1].
double approx_opt_bound(double lam);

/// 1 - 0.95 lam^3 + 0.53 lam^4.
double approx_opt_gamma(double lam);

/// lam^2 - lam^4 log(lam) / 4 + (log 2 / 2 - 1/16) lam^4; meant for lam <= 0.2.
double asymptotic_opt_bound(double lam);

/// 1 - lam^3 / 2 - lam^4 / 4; meant for lam <= 0.2. The fourth-order sign is
/// fixed by the exact pipeline: the coefficient of lam^4 in gamma* is about
/// -0.27 at lam = 0.005 ... 0.02, drifting towards -1/4.
double asymptotic_opt_gamma(double lam);

struct ApproxAudit {
    FormulaId formula_id = FormulaId::FullStepBound;
    double lo = 0.0;
    double hi = 0.0;
    double grid_step = 0.0;
    std::size_t points = 0;
    /// max |approx - exact| over the grid, and where it occurs
    double max_abs_error = 0.0;
    double argmax = 0.0;
    /// extremes of approx - exact
    double min_signed_error = 0.0;
    double max_signed_error = 0.0;
    double claimed_error = 0.0;
    bool pass = false;
};

/// Interval and claimed error used by audit() for each formula:
/// FullStepBound [0.02, 2/3] 0.013, OptStepBound [0.02, 0.98] 0.007,
/// OptGamma [0.02, 0.98] 0.008.
struct AuditSpec {
    double lo;
    double hi;
    double claimed_error;
};
AuditSpec default_audit_spec(FormulaId id);

/// Max abs error of the formula on lo, lo + step, ... <= hi against the exact
/// pipeline (shooting BVP at gamma = 1 for FullStepBound, the planar
/// reduction otherwise).
ApproxAudit audit(FormulaId id, double grid_step = 0.005);
ApproxAudit audit(FormulaId id, double grid_step, double lo, double hi);

}  // namespace scnewton::approximations
