#include "scnewton/approximations.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "scnewton/errors.hpp"
#include "scnewton/hamiltonian.hpp"
#include "scnewton/optimal_damping.hpp"

namespace scnewton::approximations {

std::string to_string(FormulaId id) {
    switch (id) {
        case FormulaId::FullStepBound:
            return "FullStepBound";
        case FormulaId::OptStepBound:
            return "OptStepBound";
        case FormulaId::OptGamma:
            return "OptGamma";
    }
    return "?";
}

double approx_full_bound(double lam) {
    if (!(lam >= 0.0)) throw DomainError("approx_full_bound: lam must be >= 0");
    const double l2 = lam * lam;
    return 1.01 * l2 + 1.02 * l2 * l2;
}

double approx_opt_bound(double lam) {
    if (!(lam >= 0.0 && lam <= 1.0)) throw DomainError("approx_opt_bound: lam must lie in [0, 1]");
    if (lam == 0.0) return 0.0;
    const double l2 = lam * lam;
    return l2 - 0.556 * l2 * l2 * std::log(lam);
}

double approx_opt_gamma(double lam) {
    const double l3 = lam * lam * lam;
    return 1.0 - 0.95 * l3 + 0.53 * l3 * lam;
}

double asymptotic_opt_bound(double lam) {
    if (lam == 0.0) return 0.0;
    const double l2 = lam * lam, l4 = l2 * l2;
    return l2 - 0.25 * l4 * std::log(lam) + (0.5 * std::log(2.0) - 1.0 / 16.0) * l4;
}

double asymptotic_opt_gamma(double lam) {
    const double l3 = lam * lam * lam;
    return 1.0 - 0.5 * l3 - 0.25 * l3 * lam;
}

AuditSpec default_audit_spec(FormulaId id) {
    switch (id) {
        case FormulaId::FullStepBound:
            return {0.02, kFullBoundValidMax, 0.013};
        case FormulaId::OptStepBound:
            return {0.02, 0.98, 0.007};
        case FormulaId::OptGamma:
            return {0.02, 0.98, 0.008};
    }
    return {0.0, 0.0, 0.0};
}

ApproxAudit audit(FormulaId id, double grid_step) {
    const AuditSpec s = default_audit_spec(id);
    return audit(id, grid_step, s.lo, s.hi);
}

ApproxAudit audit(FormulaId id, double grid_step, double lo, double hi) {
    if (!(grid_step > 0.0) || !(lo > 0.0) || !(hi < 1.0) || !(lo <= hi))
        throw DomainError("audit: need grid_step > 0 and 0 < lo <= hi < 1");
    std::vector<double> grid;
    for (std::size_t i = 0;; ++i) {
        const double x = lo + grid_step * static_cast<double>(i);
        if (x > hi + 1e-12) break;
        grid.push_back(x);
    }

    std::vector<double> approx(grid.size()), exact(grid.size());
    if (id == FormulaId::FullStepBound) {
        const auto sweep = hamiltonian::solve_bvp_sweep(grid, 1.0);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!sweep[i].result) throw ConvergenceError("audit: " + sweep[i].error, NAN, NAN, NAN);
            exact[i] = sweep[i].result->lambda_out;
            approx[i] = approx_full_bound(grid[i]);
        }
    } else {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto r = optimal_damping::optimal_step(grid[i]);
            if (id == FormulaId::OptStepBound) {
                exact[i] = r.lambda_out;
                approx[i] = approx_opt_bound(grid[i]);
            } else {
                exact[i] = r.gamma_star;
                approx[i] = approx_opt_gamma(grid[i]);
            }
        }
    }

    ApproxAudit out;
    out.formula_id = id;
    out.lo = lo;
    out.hi = hi;
    out.grid_step = grid_step;
    out.points = grid.size();
    out.claimed_error = default_audit_spec(id).claimed_error;
    out.min_signed_error = INFINITY;
    out.max_signed_error = -INFINITY;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double e = approx[i] - exact[i];
        out.min_signed_error = std::min(out.min_signed_error, e);
        out.max_signed_error = std::max(out.max_signed_error, e);
        if (std::abs(e) > out.max_abs_error) {
            out.max_abs_error = std::abs(e);
            out.argmax = grid[i];
        }
    }
    out.pass = out.max_abs_error <= out.claimed_error;
    return out;
}

}  // namespace scnewton::approximations
