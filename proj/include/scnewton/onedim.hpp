#pragma once

// Closed-form optimal synthesis for the one-dimensional worst-case Newton step.
//
// Coordinates: t in [-1, 0] is the rescaled distance to the next iterate and
// y is the gradient scaled by the inverse square root of the Hessian. The
// adversary steers y with the bang-bang dynamics (1 - u y)(1 + u t) = const,
// u in {-1, +1}, and the objective is |y(0)|.

namespace scnewton::onedim {

struct Plane1DPoint {
    double t = 0.0;
    double y = 0.0;
};

enum class Region1D { BelowDispersion, Middle, AboveSwitching };

/// y-coordinate of the dispersion curve, 2(-1 + sqrt(1 + t^3)) / t^2 (-> t as t -> 0).
double dispersion_y(double t);

/// The t in [-1, 0] on the dispersion curve at height y (y in [-1, 0]).
double dispersion_t(double y);

/// y-coordinate of the switching curve, -t.
inline double switching_y(double t) { return -t; }

/// Boundary points are assigned to the middle branch.
Region1D classify(const Plane1DPoint& pt);

/// Bellman function B(t, y): the largest |y(0)| reachable from (t, y).
double bellman_1d(const Plane1DPoint& pt);

/// Worst-case decrement after a full step from decrement a: B(-a, -a).
double full_step_bound_1d(double a);

/// Damping coefficient minimizing B(-a*gamma, -a): 2(sqrt(1 + a^3) - 1) / a^3.
double optimal_gamma_1d(double a);

/// Worst-case decrement after the optimally damped step.
double optimal_bound_1d(double a);

}  // namespace scnewton::onedim
