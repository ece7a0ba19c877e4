#pragma once

// Hamiltonian system governing the worst case of a damped Newton step in
// arbitrary dimension (reduced to the plane spanned by e1 and the adjoint).
//
// State (y1, y2) is the scaled gradient, (p1, p2) its adjoint, and t in
// [-a*gamma, 0] the rescaled position along the step. The worst-case decrement
// after the step is ||y(0)|| for the solution of
//
//     y' = dH/dp,  p' = -dH/dy,  y(-a*gamma) = (-a, 0),  p(0) = y(0) / ||y(0)||.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace scnewton {

struct PhasePoint {
    double t = 0.0;
    double y1 = 0.0;
    double y2 = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
};

/// Initial decrement a in (0, 1) and damping coefficient gamma in (0, 1].
struct StepQuery {
    double a = 0.0;
    double gamma = 1.0;
};

/// Throws DomainError unless a in (0, 1) and gamma in (0, 1].
void validate(const StepQuery& q);

enum class Regime { OneDim, FullDim };

std::string to_string(Regime r);

struct BoundResult {
    double lambda_out = 0.0;
    Regime regime = Regime::OneDim;
    /// Trajectory on [-a*gamma, 0], ascending in t.
    std::vector<PhasePoint> trajectory;
    /// Max-norm of y(-a*gamma) - (-a, 0).
    double shoot_residual = 0.0;
    /// Endpoint y(0) = r (cos theta, sin theta); theta = 0 or pi in the 1D regime.
    double r = 0.0;
    double theta = 0.0;
    std::size_t newton_iterations = 0;
};

namespace hamiltonian {

/// Partial derivatives of H at a phase point.
struct Gradient {
    double dy1 = 0.0;
    double dy2 = 0.0;
    double dp1 = 0.0;
    double dp2 = 0.0;
    double dt = 0.0;
};

/// Right-hand side of the canonical equations (dy/dt = dH/dp, dp/dt = -dH/dy).
struct FlowRhs {
    double y1 = 0.0;
    double y2 = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
};

/// (p1 y1 - p2 y2 + p1 t)^2 + 4 p2^2 y1^2 (1 - t^2).
double radicand(const PhasePoint& pt);

/// H(t, y, p). Throws DomainError for |t| >= 1.
double hamiltonian_value(const PhasePoint& pt);

/// Closed-form partial derivatives of H.
///
/// Throws DegenerateError when the radicand is below 1e-14 times its natural
/// scale, except on the invariant plane y2 = p2 = 0 where the one-sided
/// derivatives of the square root are averaged (both bang-bang velocities
/// coincide on the switching curve).
Gradient hamiltonian_gradient(const PhasePoint& pt);

FlowRhs hamiltonian_rhs(const PhasePoint& pt);

/// Slack of the two inequalities under which the maximum of the Pontryagin
/// function over the relaxed control set is attained on the circle of
/// extreme controls. Both are >= 0 when the Hamiltonian formula is valid.
struct ControlSlack {
    double first = 0.0;
    double second = 0.0;
};

ControlSlack control_slack(const PhasePoint& pt);

/// True iff both slacks are >= -tol * (1 + |p| (1 + |y|)). The second
/// inequality holds with equality at a transversal endpoint, hence the tolerance.
bool check_control_inequalities(const PhasePoint& pt, double tol = 1e-9);

struct FlowOptions {
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    /// Uniform samples on [start.t, t_end], both ends included.
    std::size_t samples = 101;
};

struct Trajectory {
    /// Ordered from start.t towards t_end.
    std::vector<PhasePoint> points;
    PhasePoint end;
    std::size_t steps = 0;
};

/// Integrates the canonical equations from `start` to `t_end`, both in (-1, 0].
Trajectory integrate_flow(const PhasePoint& start, double t_end, const FlowOptions& opt = {});

struct BvpOptions {
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    /// Required max-norm of the boundary mismatch.
    double residual_tol = 1e-9;
    std::size_t max_newton = 40;
    std::size_t samples = 101;
    /// Optional initial guess (r, theta) for the endpoint y(0), e.g. the
    /// solution of a neighbouring query.
    std::optional<std::pair<double, double>> warm_start;
    /// Disable the continuation from the optimal-step endpoint (warm start only).
    bool continuation = true;
};

/// Worst-case decrement after a damped Newton step.
///
/// In the one-dimensional regime (initial point to the right of the critical
/// curve) returns a - a*gamma + a^2*gamma. Otherwise solves the two-point
/// boundary value problem by shooting on the endpoint y(0) = r (cos theta,
/// sin theta), theta in (0, pi), seeded at the optimally damped step (where
/// the endpoint is known from the planar reduction) and continued in gamma.
/// Among converged candidates the largest ||y(0)|| is returned.
///
/// Throws ConvergenceError with the last iterate when no candidate converges.
BoundResult solve_bvp(const StepQuery& q, const BvpOptions& opt = {});

/// One entry of a sweep over decrements at fixed damping.
struct SweepEntry {
    double a = 0.0;
    std::optional<BoundResult> result;
    std::string error;
};

/// solve_bvp over ascending `a_values` at fixed gamma, warm-starting every
/// entry from its predecessor (continuation in a). Failures are recorded per
/// entry and do not stop the sweep.
std::vector<SweepEntry> solve_bvp_sweep(const std::vector<double>& a_values, double gamma,
                                        const BvpOptions& opt = {});

}  // namespace hamiltonian
}  // namespace scnewton
