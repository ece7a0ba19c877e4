#include "scnewton/optimal_damping.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "scnewton/errors.hpp"
#include "scnewton/ode.hpp"

namespace scnewton::optimal_damping {
namespace {

void require_decrement(double a) {
    if (!(a > 0.0 && a < 1.0)) throw DomainError("optimal_damping: a must lie in (0, 1), got " + std::to_string(a));
}

double require_inside(double y1) {
    const double d = 1.0 - y1 * y1;
    if (!(d > 0.0)) throw DomainError("optimal_damping: |y1| must be < 1, got " + std::to_string(y1));
    return d;
}

double q_root(const PlanarPoint& pt) {
    return std::sqrt(4.0 * pt.y1 * pt.y1 * (1.0 - pt.y1 * pt.y1) + pt.y2 * pt.y2);
}

}  // namespace

double planar_rhs(const PlanarPoint& pt) {
    const double d = require_inside(pt.y1);
    return (q_root(pt) + pt.y1 * pt.y2) / d;
}

double damping_rhs(const PlanarPoint& pt, double t) {
    const double d = require_inside(pt.y1);
    const double sq = q_root(pt);
    if (!(sq > 0.0)) throw DegenerateError("damping_rhs: singular at the origin");
    return (pt.y2 * (pt.y1 + t) + (pt.y1 * t + 1.0) * sq) / (d * sq);
}

SigmaCurve integrate_sigma(double a, const Tolerance& tol) {
    require_decrement(a);
    ode::Options o;
    o.abs_tol = tol.abs * std::min(1.0, a * a);
    o.rel_tol = tol.rel;
    o.record_steps = true;
    auto rhs = [](double y1, const ode::State<1>& x) { return ode::State<1>{planar_rhs({y1, x[0]})}; };
    auto event = [](double y1, const ode::State<1>& x) { return circle_residual({y1, x[0]}); };
    const auto sol = ode::integrate<1>(rhs, {0.0}, -a, 0.0, o, event);
    if (!sol.event_hit) throw IntegrationError("integrate_sigma: no crossing of the endpoint circle");

    SigmaCurve out;
    out.y_star = {sol.t_end, sol.x_end[0]};
    out.points.reserve(sol.step_t.size());
    for (std::size_t i = 0; i < sol.step_t.size(); ++i) out.points.push_back({sol.step_t[i], sol.step_x[i][0]});
    return out;
}

DampingProfile integrate_damping(double a, const SigmaCurve& sigma, const Tolerance& tol, std::size_t samples) {
    require_decrement(a);
    ode::Options o;
    o.abs_tol = tol.abs * std::min(1.0, a * a);
    o.rel_tol = tol.rel;
    o.samples = samples;
    auto rhs = [](double y1, const ode::State<2>& x) {
        const PlanarPoint pt{y1, x[0]};
        return ode::State<2>{planar_rhs(pt), damping_rhs(pt, x[1])};
    };
    const auto sol = ode::integrate<2>(rhs, {sigma.y_star.y2, 0.0}, sigma.y_star.y1, -a, o);

    DampingProfile prof;
    prof.t0 = sol.x_end[1];
    prof.gamma_star = -prof.t0 / a;
    prof.y2_at_start = sol.x_end[0];
    prof.samples.reserve(sol.sample_t.size());
    for (std::size_t i = 0; i < sol.sample_t.size(); ++i)
        prof.samples.push_back({sol.sample_t[i], sol.sample_x[i][0], sol.sample_x[i][1]});
    return prof;
}

OptimalStepResult optimal_step(double a, const Tolerance& tol, std::size_t profile_samples) {
    SigmaCurve sigma = integrate_sigma(a, tol);
    DampingProfile prof = integrate_damping(a, sigma, tol, profile_samples);
    OptimalStepResult res;
    res.a = a;
    res.gamma_star = prof.gamma_star;
    res.y_star = sigma.y_star;
    // equals sqrt(-y1*) on the circle, but keeps full relative accuracy for small a
    res.lambda_out = std::hypot(sigma.y_star.y1, sigma.y_star.y2);
    res.sigma = std::move(sigma.points);
    res.t_profile = std::move(prof.samples);
    return res;
}

}  // namespace scnewton::optimal_damping
