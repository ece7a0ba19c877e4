#pragma once

// Adaptive Dormand-Prince 5(4) integration with dense output and event
// location. Error control and stepping come from Boost.Odeint; this wrapper
// clamps the final step onto the endpoint (the right-hand sides used here are
// singular just outside their domains), samples the continuous extension on a
// uniform grid and refines sign changes of an event function by bisection.

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "scnewton/errors.hpp"

namespace scnewton::ode {

template <std::size_t N>
using State = std::array<double, N>;

struct Options {
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    /// Uniform samples between t0 and t1 inclusive; 0 disables sampling.
    std::size_t samples = 0;
    /// Record every accepted step (t, x).
    bool record_steps = false;
    std::size_t max_steps = 200000;
    /// Zero means |t1 - t0| / 100.
    double initial_step = 0.0;
    /// Bisection stops once the event bracket is this narrow (in t).
    double event_tol = 1e-14;
};

template <std::size_t N>
struct Solution {
    double t_end = 0.0;
    State<N> x_end{};
    std::vector<double> sample_t;
    std::vector<State<N>> sample_x;
    std::vector<double> step_t;
    std::vector<State<N>> step_x;
    std::size_t steps = 0;
    std::size_t rejected = 0;
    bool event_hit = false;
};

/// Event function g(t, x); integration stops at the first sign change.
template <std::size_t N>
using EventFn = std::function<double(double, const State<N>&)>;

/// Integrates dx/dt = rhs(t, x) from t0 to t1 (t1 < t0 allowed).
///
/// When `event` is given, integration stops at the first root of the event
/// function, located to Options::event_tol on the dense output.
template <std::size_t N, class Rhs>
Solution<N> integrate(Rhs&& rhs, const State<N>& x0, double t0, double t1, const Options& opt,
                      const EventFn<N>& event = {}) {
    namespace odeint = boost::numeric::odeint;
    using stepper_t = odeint::runge_kutta_dopri5<State<N>>;
    auto controlled = odeint::make_controlled(opt.abs_tol, opt.rel_tol, stepper_t{});

    auto system = [&rhs](const State<N>& x, State<N>& dxdt, double t) { dxdt = rhs(t, x); };

    Solution<N> sol;
    const double span = t1 - t0;
    const double dir = span >= 0.0 ? 1.0 : -1.0;

    std::vector<double> grid;
    if (opt.samples == 1) {
        grid.push_back(t1);
    } else if (opt.samples > 1) {
        grid.reserve(opt.samples);
        for (std::size_t i = 0; i < opt.samples; ++i)
            grid.push_back(i + 1 == opt.samples ? t1 : t0 + span * static_cast<double>(i) / static_cast<double>(opt.samples - 1));
    }
    std::size_t next_sample = 0;

    State<N> x = x0;
    State<N> dxdt{};
    system(x, dxdt, t0);
    double t = t0;

    if (opt.record_steps) {
        sol.step_t.push_back(t);
        sol.step_x.push_back(x);
    }
    while (next_sample < grid.size() && grid[next_sample] == t0) {
        sol.sample_t.push_back(t0);
        sol.sample_x.push_back(x);
        ++next_sample;
    }

    double g_prev = event ? event(t, x) : 0.0;

    if (span == 0.0) {
        sol.t_end = t;
        sol.x_end = x;
        return sol;
    }

    double dt = opt.initial_step > 0.0 ? dir * opt.initial_step : span / 100.0;
    const double t_scale = std::max(std::abs(t0), std::abs(t1));

    State<N> x_new{};
    State<N> dxdt_new{};
    while (dir * (t1 - t) > 0.0) {
        if (sol.steps >= opt.max_steps)
            throw IntegrationError("ode::integrate: step limit reached at t=" + std::to_string(t));
        const double remaining = t1 - t;
        bool clamped = false;
        if (dir * (dt - remaining) >= 0.0) {
            dt = remaining;
            clamped = true;
        }
        const double t_old = t;
        if (controlled.try_step(system, x, dxdt, t, x_new, dxdt_new, dt) == odeint::fail) {
            ++sol.rejected;
            if (std::abs(dt) < 1e-15 * std::max(1.0, t_scale))
                throw IntegrationError("ode::integrate: step size underflow at t=" + std::to_string(t));
            continue;
        }
        if (clamped) t = t1;  // avoid round-off drift past the endpoint
        ++sol.steps;

        auto dense = [&](double tq) {
            State<N> xq{};
            controlled.stepper().calc_state(tq, xq, x, dxdt, t_old, x_new, dxdt_new, t);
            return xq;
        };

        if (event) {
            const double g_new = event(t, x_new);
            if ((g_prev < 0.0 && g_new >= 0.0) || (g_prev > 0.0 && g_new <= 0.0)) {
                double lo = t_old;
                double hi = t;
                double g_lo = g_prev;
                State<N> x_hi = x_new;
                while (std::abs(hi - lo) > opt.event_tol) {
                    const double mid = 0.5 * (lo + hi);
                    if (mid == lo || mid == hi) break;
                    const State<N> xm = dense(mid);
                    const double gm = event(mid, xm);
                    if ((g_lo < 0.0) == (gm < 0.0) && gm != 0.0) {
                        lo = mid;
                        g_lo = gm;
                    } else {
                        hi = mid;
                        x_hi = xm;
                    }
                }
                while (next_sample < grid.size() && dir * (hi - grid[next_sample]) >= 0.0) {
                    sol.sample_t.push_back(grid[next_sample]);
                    sol.sample_x.push_back(dense(grid[next_sample]));
                    ++next_sample;
                }
                sol.event_hit = true;
                sol.t_end = hi;
                sol.x_end = x_hi;
                if (opt.record_steps) {
                    sol.step_t.push_back(hi);
                    sol.step_x.push_back(x_hi);
                }
                return sol;
            }
            g_prev = g_new;
        }

        while (next_sample < grid.size() && dir * (t - grid[next_sample]) >= 0.0) {
            sol.sample_t.push_back(grid[next_sample]);
            sol.sample_x.push_back(grid[next_sample] == t ? x_new : dense(grid[next_sample]));
            ++next_sample;
        }

        x = x_new;
        dxdt = dxdt_new;
        if (opt.record_steps) {
            sol.step_t.push_back(t);
            sol.step_x.push_back(x);
        }
    }
    sol.t_end = t;
    sol.x_end = x;
    return sol;
}

}  // namespace scnewton::ode
