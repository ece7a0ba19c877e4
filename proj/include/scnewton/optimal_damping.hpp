#pragma once

// Optimally damped Newton step.
//
// Releasing the damping coefficient forces the Hamiltonian to vanish along the
// worst-case trajectory; on H = 0 the adjoint can be eliminated and the path
// of y becomes the solution sigma of a planar ODE through (-a, 0). Its exit
// point y* through the circle (y1 + 1/2)^2 + y2^2 = 1/4 gives the bound
// sqrt(-y1*), and a linear ODE for t along sigma, started at t(y*) = 0, gives
// the optimal damping -t(-a, 0) / a.

#include <cstddef>
#include <vector>

namespace scnewton::optimal_damping {

struct PlanarPoint {
    double y1 = 0.0;
    double y2 = 0.0;
};

struct SigmaCurve {
    PlanarPoint y_star;
    /// Accepted integration points from (-a, 0) to y*, ascending in y1.
    std::vector<PlanarPoint> points;
};

struct DampingProfile {
    /// t(-a, 0), i.e. -a * gamma_star.
    double t0 = 0.0;
    double gamma_star = 0.0;
    /// y2 at y1 = -a after the backward pass; zero up to integration error.
    double y2_at_start = 0.0;
    /// (y1, y2, t) from y* back to (-a, 0), descending in y1.
    struct Sample {
        double y1;
        double y2;
        double t;
    };
    std::vector<Sample> samples;
};

struct OptimalStepResult {
    double a = 0.0;
    double gamma_star = 0.0;
    double lambda_out = 0.0;
    PlanarPoint y_star;
    std::vector<PlanarPoint> sigma;
    std::vector<DampingProfile::Sample> t_profile;
};

/// Integration tolerances; the absolute one is scaled by min(1, a^2) since y2
/// along sigma is of order a^2.
struct Tolerance {
    double abs = 1e-13;
    double rel = 1e-13;
};

/// dy2/dy1 = (sqrt(4 y1^2 (1 - y1^2) + y2^2) + y1 y2) / (1 - y1^2). Throws DomainError for |y1| >= 1.
double planar_rhs(const PlanarPoint& pt);

/// dt/dy1 along sigma (linear in t).
double damping_rhs(const PlanarPoint& pt, double t);

/// Residual of the endpoint circle, y1^2 + y1 + y2^2.
inline double circle_residual(const PlanarPoint& pt) { return pt.y1 * pt.y1 + pt.y1 + pt.y2 * pt.y2; }

/// Integrates sigma from (-a, 0) in increasing y1 until it leaves the disc
/// bounded by the endpoint circle. Throws IntegrationError if no crossing occurs.
SigmaCurve integrate_sigma(double a, const Tolerance& tol = {});

/// Integrates (y2, t) jointly in y1 from y* (t = 0) back to y1 = -a.
DampingProfile integrate_damping(double a, const SigmaCurve& sigma, const Tolerance& tol = {},
                                 std::size_t samples = 0);

/// integrate_sigma followed by integrate_damping.
OptimalStepResult optimal_step(double a, const Tolerance& tol = {}, std::size_t profile_samples = 0);

}  // namespace scnewton::optimal_damping
