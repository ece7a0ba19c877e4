#include "scnewton/hamiltonian.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "scnewton/critical_curve.hpp"
#include "scnewton/errors.hpp"
#include "scnewton/ode.hpp"
#include "scnewton/optimal_damping.hpp"

namespace scnewton {

void validate(const StepQuery& q) {
    if (!(q.a > 0.0 && q.a < 1.0))
        throw DomainError("step query: decrement a must lie in (0, 1), got " + std::to_string(q.a));
    if (!(q.gamma > 0.0 && q.gamma <= 1.0))
        throw DomainError("step query: damping gamma must lie in (0, 1], got " + std::to_string(q.gamma));
}

std::string to_string(Regime r) { return r == Regime::OneDim ? "OneDim" : "FullDim"; }

namespace hamiltonian {
namespace {

constexpr double kDegenerateRel = 1e-14;

void require_time(double t) {
    if (!(std::abs(t) < 1.0)) throw DomainError("hamiltonian: |t| must be < 1, got " + std::to_string(t));
}

double radicand_scale(const PhasePoint& pt) {
    const double np = std::hypot(pt.p1, pt.p2);
    const double ny = std::hypot(pt.y1, pt.y2);
    const double s = np * (1.0 + ny);
    return std::max(s * s, 1e-300);
}

using State4 = ode::State<4>;

PhasePoint to_point(double t, const State4& x) { return {t, x[0], x[1], x[2], x[3]}; }

}  // namespace

double radicand(const PhasePoint& pt) {
    const double a = pt.p1 * pt.y1 - pt.p2 * pt.y2 + pt.p1 * pt.t;
    return a * a + 4.0 * pt.p2 * pt.p2 * pt.y1 * pt.y1 * (1.0 - pt.t * pt.t);
}

double hamiltonian_value(const PhasePoint& pt) {
    require_time(pt.t);
    const double t = pt.t;
    const double num = pt.p1 + (pt.p1 * pt.y1 - pt.p2 * pt.y2) * t + std::sqrt(std::max(radicand(pt), 0.0));
    return num / (1.0 - t * t);
}

Gradient hamiltonian_gradient(const PhasePoint& pt) {
    require_time(pt.t);
    const double t = pt.t, y1 = pt.y1, y2 = pt.y2, p1 = pt.p1, p2 = pt.p2;
    const double d = 1.0 - t * t;
    const double a = p1 * y1 - p2 * y2 + p1 * t;
    const double r = a * a + 4.0 * p2 * p2 * y1 * y1 * d;

    double s = 0.0;
    double k = 0.0;  // 1 / (2 sqrt(R))
    if (r < kDegenerateRel * radicand_scale(pt)) {
        if (!(y2 == 0.0 && p2 == 0.0))
            throw DegenerateError("hamiltonian: radicand vanishes off the symmetry plane");
    } else {
        s = std::sqrt(r);
        k = 0.5 / s;
    }

    const double ds_p1 = k * 2.0 * a * (y1 + t);
    const double ds_p2 = k * (-2.0 * a * y2 + 8.0 * p2 * y1 * y1 * d);
    const double ds_y1 = k * (2.0 * a * p1 + 8.0 * p2 * p2 * y1 * d);
    const double ds_y2 = k * (-2.0 * a * p2);
    const double ds_t = k * (2.0 * a * p1 - 8.0 * p2 * p2 * y1 * y1 * t);

    const double num = p1 + (p1 * y1 - p2 * y2) * t + s;

    Gradient g;
    g.dp1 = (1.0 + y1 * t + ds_p1) / d;
    g.dp2 = (-y2 * t + ds_p2) / d;
    g.dy1 = (p1 * t + ds_y1) / d;
    g.dy2 = (-p2 * t + ds_y2) / d;
    g.dt = ((p1 * y1 - p2 * y2) + ds_t) / d + num * 2.0 * t / (d * d);
    return g;
}

FlowRhs hamiltonian_rhs(const PhasePoint& pt) {
    const Gradient g = hamiltonian_gradient(pt);
    return {g.dp1, g.dp2, -g.dy1, -g.dy2};
}

ControlSlack control_slack(const PhasePoint& pt) {
    require_time(pt.t);
    const double t = pt.t, y1 = pt.y1, y2 = pt.y2, p1 = pt.p1, p2 = pt.p2;
    const double s = std::sqrt(std::max(radicand(pt), 0.0));
    return {s - (-p1 * t - p1 * y1 - p2 * y2 + 2.0 * p2 * y2 * t),
            s - (p1 * t + p1 * y1 + p2 * y2 + 2.0 * p2 * y2 * t)};
}

bool check_control_inequalities(const PhasePoint& pt, double tol) {
    const ControlSlack sl = control_slack(pt);
    const double scale = 1.0 + std::hypot(pt.p1, pt.p2) * (1.0 + std::hypot(pt.y1, pt.y2));
    return sl.first >= -tol * scale && sl.second >= -tol * scale;
}

Trajectory integrate_flow(const PhasePoint& start, double t_end, const FlowOptions& opt) {
    require_time(start.t);
    require_time(t_end);
    if (start.t > 0.0 || t_end > 0.0) throw DomainError("integrate_flow: times must lie in (-1, 0]");

    auto rhs = [](double t, const State4& x) {
        const FlowRhs f = hamiltonian_rhs(to_point(t, x));
        return State4{f.y1, f.y2, f.p1, f.p2};
    };
    ode::Options o;
    o.abs_tol = opt.abs_tol;
    o.rel_tol = opt.rel_tol;
    o.samples = opt.samples;
    const auto sol = ode::integrate<4>(rhs, State4{start.y1, start.y2, start.p1, start.p2}, start.t, t_end, o);

    Trajectory traj;
    traj.points.reserve(sol.sample_t.size());
    for (std::size_t i = 0; i < sol.sample_t.size(); ++i) traj.points.push_back(to_point(sol.sample_t[i], sol.sample_x[i]));
    traj.end = to_point(sol.t_end, sol.x_end);
    traj.steps = sol.steps;
    return traj;
}

namespace {

struct Shot {
    double r = 0.0;
    double theta = 0.0;
    std::array<double, 2> residual{};
    double norm = 0.0;
};

PhasePoint endpoint(double r, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {0.0, r * c, r * s, c, s};
}

Shot shoot(const StepQuery& q, double r, double theta, const BvpOptions& opt) {
    FlowOptions fo;
    fo.abs_tol = opt.abs_tol;
    fo.rel_tol = opt.rel_tol;
    fo.samples = 0;
    const Trajectory tr = integrate_flow(endpoint(r, theta), -q.a * q.gamma, fo);
    Shot s;
    s.r = r;
    s.theta = theta;
    s.residual = {tr.end.y1 + q.a, tr.end.y2};
    s.norm = std::max(std::abs(s.residual[0]), std::abs(s.residual[1]));
    return s;
}

struct NewtonOutcome {
    bool converged = false;
    Shot best;
    std::size_t iterations = 0;
};

// Damped Newton iteration on the shooting residual with a central-difference Jacobian.
NewtonOutcome newton_shoot(const StepQuery& q, double r0, double theta0, const BvpOptions& opt) {
    NewtonOutcome out;
    Shot cur;
    try {
        cur = shoot(q, r0, theta0, opt);
    } catch (const std::runtime_error&) {
        out.best = {r0, theta0, {NAN, NAN}, INFINITY};
        return out;
    }
    const double polish = std::min(opt.residual_tol * 1e-3, 1e-13 * std::max(1.0, cur.r));

    for (std::size_t it = 0; it < opt.max_newton && cur.norm > polish; ++it) {
        out.iterations = it + 1;
        const double hr = 1e-6 * std::max(cur.r, 1e-8);
        const double ht = 1e-6;
        std::array<double, 4> jac{};  // column-major: d/dr, d/dtheta
        try {
            const Shot rp = shoot(q, cur.r + hr, cur.theta, opt);
            const Shot rm = shoot(q, cur.r - hr, cur.theta, opt);
            const Shot tp = shoot(q, cur.r, cur.theta + ht, opt);
            const Shot tm = shoot(q, cur.r, cur.theta - ht, opt);
            jac[0] = (rp.residual[0] - rm.residual[0]) / (2.0 * hr);
            jac[1] = (rp.residual[1] - rm.residual[1]) / (2.0 * hr);
            jac[2] = (tp.residual[0] - tm.residual[0]) / (2.0 * ht);
            jac[3] = (tp.residual[1] - tm.residual[1]) / (2.0 * ht);
        } catch (const std::runtime_error&) {
            break;
        }
        const double det = jac[0] * jac[3] - jac[2] * jac[1];
        if (!(std::abs(det) > 0.0) || !std::isfinite(det)) break;
        const double dr = -(jac[3] * cur.residual[0] - jac[2] * cur.residual[1]) / det;
        const double dth = -(-jac[1] * cur.residual[0] + jac[0] * cur.residual[1]) / det;

        bool accepted = false;
        double lambda = 1.0;
        for (int ls = 0; ls < 30; ++ls, lambda *= 0.5) {
            const double r_try = cur.r + lambda * dr;
            const double th_try = cur.theta + lambda * dth;
            if (!(r_try > 0.0)) continue;
            try {
                const Shot trial = shoot(q, r_try, th_try, opt);
                if (trial.norm < cur.norm) {
                    cur = trial;
                    accepted = true;
                    break;
                }
            } catch (const std::runtime_error&) {
                continue;
            }
        }
        if (!accepted) break;
    }
    out.best = cur;
    out.converged = cur.norm <= opt.residual_tol;
    return out;
}

// Maps theta into [0, pi] using the mirror symmetry y2 -> -y2, p2 -> -p2.
double fold_theta(double theta) {
    double th = std::remainder(theta, 2.0 * std::numbers::pi);
    return th < 0.0 ? -th : th;
}

bool off_plane(double theta) { return theta > 1e-10 && theta < std::numbers::pi - 1e-10; }

BoundResult one_dim_result(const StepQuery& q, std::size_t samples) {
    const double a = q.a, g = q.gamma;
    BoundResult res;
    res.regime = Regime::OneDim;
    res.lambda_out = a - a * g + a * a * g;
    const double c = critical_curve::nominal_param(-a * g, -a);
    res.r = std::abs(c);
    res.theta = c < 0.0 ? std::numbers::pi : 0.0;
    const double sgn = c < 0.0 ? -1.0 : 1.0;
    const std::size_t n = std::max<std::size_t>(samples, 2);
    res.trajectory.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = i + 1 == n ? 0.0 : -a * g + a * g * static_cast<double>(i) / static_cast<double>(n - 1);
        res.trajectory.push_back({t, critical_curve::nominal_y1(t, c), 0.0, sgn * (1.0 - t), 0.0});
    }
    return res;
}

struct Candidate {
    Shot shot;
    std::size_t iterations = 0;
};

std::optional<Candidate> continue_in_gamma(const StepQuery& q, const BvpOptions& opt, Shot& last_attempt) {
    const auto seed = optimal_damping::optimal_step(q.a);
    double g_cur = seed.gamma_star;
    const double r_seed = std::hypot(seed.y_star.y1, seed.y_star.y2);
    const double th_seed = std::atan2(seed.y_star.y2, seed.y_star.y1);

    std::size_t iters = 0;
    NewtonOutcome n0 = newton_shoot({q.a, g_cur}, r_seed, th_seed, opt);
    iters += n0.iterations;
    last_attempt = n0.best;
    if (!n0.converged) return std::nullopt;

    Shot cur = n0.best;
    std::optional<Shot> prev;
    double g_prev = g_cur;
    double step = 0.05;
    while (g_cur != q.gamma) {
        const double dir = q.gamma > g_cur ? 1.0 : -1.0;
        const double g_next = std::abs(q.gamma - g_cur) <= step ? q.gamma : g_cur + dir * step;
        double r_guess = cur.r, th_guess = cur.theta;
        if (prev && g_cur != g_prev) {
            const double w = (g_next - g_cur) / (g_cur - g_prev);
            r_guess = cur.r + w * (cur.r - prev->r);
            th_guess = cur.theta + w * (cur.theta - prev->theta);
            if (!(r_guess > 0.0)) r_guess = cur.r;
        }
        NewtonOutcome n = newton_shoot({q.a, g_next}, r_guess, th_guess, opt);
        iters += n.iterations;
        last_attempt = n.best;
        if (n.converged && off_plane(fold_theta(n.best.theta))) {
            prev = cur;
            g_prev = g_cur;
            cur = n.best;
            g_cur = g_next;
            step = std::min(step * 1.5, 0.2);
        } else {
            step *= 0.5;
            if (step < 1e-7) return std::nullopt;
        }
    }
    return Candidate{cur, iters};
}

}  // namespace

BoundResult solve_bvp(const StepQuery& q, const BvpOptions& opt) {
    validate(q);
    if (critical_curve::classify_regime(q) == Regime::OneDim) return one_dim_result(q, opt.samples);

    std::vector<Candidate> candidates;
    Shot last{};
    if (opt.warm_start) {
        NewtonOutcome n = newton_shoot(q, opt.warm_start->first, opt.warm_start->second, opt);
        last = n.best;
        if (n.converged && off_plane(fold_theta(n.best.theta))) candidates.push_back({n.best, n.iterations});
    }
    if (candidates.empty() && opt.continuation) {
        if (auto c = continue_in_gamma(q, opt, last)) candidates.push_back(*c);
    }
    if (candidates.empty()) {
        throw ConvergenceError("solve_bvp: shooting did not converge for a=" + std::to_string(q.a) +
                                   " gamma=" + std::to_string(q.gamma),
                               last.norm, last.r, last.theta);
    }

    const auto best = std::max_element(candidates.begin(), candidates.end(),
                                       [](const Candidate& x, const Candidate& y) { return x.shot.r < y.shot.r; });
    BoundResult res;
    res.regime = Regime::FullDim;
    res.r = best->shot.r;
    res.theta = fold_theta(best->shot.theta);
    res.shoot_residual = best->shot.norm;
    res.newton_iterations = best->iterations;
    // the one-dimensional adversary remains feasible
    res.lambda_out = std::max(res.r, q.a - q.a * q.gamma + q.a * q.a * q.gamma);

    FlowOptions fo;
    fo.abs_tol = opt.abs_tol;
    fo.rel_tol = opt.rel_tol;
    fo.samples = std::max<std::size_t>(opt.samples, 2);
    Trajectory tr = integrate_flow(endpoint(res.r, res.theta), -q.a * q.gamma, fo);
    res.trajectory.assign(tr.points.rbegin(), tr.points.rend());
    return res;
}

std::vector<SweepEntry> solve_bvp_sweep(const std::vector<double>& a_values, double gamma, const BvpOptions& opt) {
    std::vector<SweepEntry> out;
    out.reserve(a_values.size());
    std::optional<std::pair<double, double>> warm;
    for (double a : a_values) {
        SweepEntry e;
        e.a = a;
        BvpOptions o = opt;
        o.warm_start = warm;
        try {
            e.result = solve_bvp({a, gamma}, o);
            if (e.result->regime == Regime::FullDim)
                warm = std::make_pair(e.result->r, e.result->theta);
            else
                warm.reset();
        } catch (const std::exception& ex) {
            e.error = ex.what();
            warm.reset();
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace hamiltonian
}  // namespace scnewton
