#pragma once

// Focal points of the one-dimensional nominal trajectories
//
//     y(t) = (c + t) / (1 - t) e1,   p(t) = sign(c) (1 - t) e1,
//
// obtained from the linearized perturbation delta_y2 launched with
// delta_y2(0) = 1. The nominal trajectory stops being optimal at the largest
// t < 0 where delta_y2 vanishes; these points form the critical curve in the
// (t, y1)-plane.

#include <cstddef>
#include <vector>

#include "scnewton/hamiltonian.hpp"

namespace scnewton::critical_curve {

struct NominalParam {
    double c = 0.0;
};

struct CriticalPoint {
    double t_crit = 0.0;
    double y1 = 0.0;
    double c = 0.0;
};

/// Parameter of the nominal trajectory through (t, y1).
inline double nominal_param(double t, double y1) { return y1 * (1.0 - t) - t; }

/// y1 on the nominal trajectory with parameter c.
inline double nominal_y1(double t, double c) { return (c + t) / (1.0 - t); }

/// Lower end of the t-interval on which the nominal trajectory is defined:
/// -1 for c < 0, the switching-curve crossing 1 - sqrt(1 + c) for c > 0.
double nominal_lower_t(double c);

/// Closed-form delta_y2(t; c). Branches on the sign of c + 1; c = -1 has its
/// own expression. Both branches lose digits like |c + 1|^(-3/2) near c = -1,
/// so for 0 < |c + 1| < 1e-4 the value is interpolated linearly in c between
/// c = -1 and c = -1 +- 1e-4 (error below 1e-8).
///
/// Throws DomainError if t is outside (-1, 0], c == 0, or a logarithm
/// argument is nonpositive (c + 2t - t^2 must have the sign of c).
double delta_y2(double t, NominalParam c);

/// Right-hand side of the linear ODE satisfied by delta_y2.
double delta_y2_rhs(double t, double delta, NominalParam c);

/// Largest t < 0 with delta_y2(t; c) = 0, bracketed by a 400-point scan of
/// [-0.95, -1e-6] (clipped to the nominal domain) and refined by bisection down
/// to adjacent doubles.
///
/// Throws NotFoundError when there is no sign change.
double focal_time(NominalParam c);

/// Focal points for n parameters c spaced uniformly on [c_lo, c_hi]. Parameters
/// without a focal point (including c = 0) are skipped.
std::vector<CriticalPoint> critical_curve_samples(std::size_t n, double c_lo, double c_hi);

/// One-dimensional regime iff the initial point (-a gamma, -a) has not reached
/// the focal point of its nominal trajectory: delta_y2(-a gamma; c) >= 0.
Regime classify_regime(const StepQuery& q);

/// Damping at which (-a gamma, -a) crosses the critical curve, i.e. the
/// largest gamma in (0, 1] classified OneDim; 1 when every gamma is OneDim.
double critical_gamma(double a);

/// Printed implicit relations of the critical curve in (t, y1), as a
/// cross-check of the delta_y2 roots. `implicit_relation_gt` is for c > -1
/// with Y = sqrt(1 + y1), T = sqrt(1 - t); `implicit_relation_lt` for c < -1
/// with Y = sqrt(-(1 + y1)(1 - t)), T = 1 - t.
double implicit_relation_gt(double t, double y1);
double implicit_relation_lt(double t, double y1);

}  // namespace scnewton::critical_curve
