#include "scnewton/critical_curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "scnewton/errors.hpp"

namespace scnewton::critical_curve {
namespace {

constexpr double kBlend = 1e-4;

double delta_at_minus_one(double t) {
    const double T = 1.0 - t;
    return 4.0 / (3.0 * T * T) - T / 3.0;
}

// Closed form for c != -1, no blending.
double delta_branch(double t, double c) {
    const double T = 1.0 - t;
    const double q = c + 2.0 * t - t * t;
    const double c1 = c + 1.0;
    double base = -(c * c + 5.0 * c + 16.0) * T / (3.0 * c * c1) + 4.0 * (c + 2.0) / (c * c1) - 4.0 / (c * T) +
                  4.0 * c1 / (3.0 * c * T * T) + 4.0 * T * std::log(c * T * T / q) / (c * c1);
    if (c1 > 0.0) {
        const double s = std::sqrt(c1);
        const double u = s + 1.0;
        return base + 2.0 * (c + 2.0) * T * std::log(q * u * u / (c * (u - t) * (u - t))) / (c * c1 * s);
    }
    const double s = std::sqrt(-c1);
    return base + 4.0 * (c + 2.0) * T * (std::atan(1.0 / s) - std::atan(T / s)) / (c * (-c1) * s);
}

}  // namespace

double nominal_lower_t(double c) { return c < 0.0 ? -1.0 : 1.0 - std::sqrt(1.0 + c); }

double delta_y2(double t, NominalParam p) {
    const double c = p.c;
    if (!(t > -1.0 && t <= 0.0)) throw DomainError("delta_y2: t must lie in (-1, 0], got " + std::to_string(t));
    if (c == 0.0 || !std::isfinite(c)) throw DomainError("delta_y2: c must be finite and nonzero");
    const double q = c + 2.0 * t - t * t;
    if (!(c * q > 0.0))
        throw DomainError("delta_y2: t=" + std::to_string(t) + " is outside the nominal domain for c=" +
                          std::to_string(c));

    const double dc = c + 1.0;
    if (dc == 0.0) return delta_at_minus_one(t);
    if (std::abs(dc) < kBlend) {
        const double w = std::abs(dc) / kBlend;
        const double edge = delta_branch(t, -1.0 + std::copysign(kBlend, dc));
        return (1.0 - w) * delta_at_minus_one(t) + w * edge;
    }
    return delta_branch(t, c);
}

double delta_y2_rhs(double t, double delta, NominalParam p) {
    const double c = p.c;
    const double T = 1.0 - t;
    const double q = c + 2.0 * t - t * t;
    return -delta / T + 4.0 * (c + t) * (c + t) / (c * q * T * T * T);
}

double focal_time(NominalParam p) {
    const double c = p.c;
    if (c == 0.0) throw NotFoundError("focal_time: c = 0 has no nominal trajectory");
    const double hi = -1e-6;
    const double lo = std::max(-0.95, nominal_lower_t(c) + 1e-9);
    if (!(lo < hi)) throw NotFoundError("focal_time: empty scan interval for c=" + std::to_string(c));

    constexpr int n = 400;
    double t_right = hi;
    double f_right = delta_y2(t_right, p);
    for (int i = n - 2; i >= 0; --i) {
        const double t_left = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
        const double f_left = delta_y2(t_left, p);
        if ((f_left <= 0.0) != (f_right <= 0.0)) {
            double a = t_left, b = t_right;
            double fa = f_left;
            // run to machine resolution: near the switching-curve end delta_y2 is steep
            for (;;) {
                const double m = 0.5 * (a + b);
                if (m <= a || m >= b) break;
                const double fm = delta_y2(m, p);
                if ((fm <= 0.0) == (fa <= 0.0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            return 0.5 * (a + b);
        }
        t_right = t_left;
        f_right = f_left;
    }
    throw NotFoundError("focal_time: no sign change of delta_y2 for c=" + std::to_string(c));
}

std::vector<CriticalPoint> critical_curve_samples(std::size_t n, double c_lo, double c_hi) {
    std::vector<CriticalPoint> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double c = n == 1 ? c_lo : c_lo + (c_hi - c_lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        try {
            const double t = focal_time({c});
            out.push_back({t, nominal_y1(t, c), c});
        } catch (const NotFoundError&) {
        }
    }
    return out;
}

Regime classify_regime(const StepQuery& q) {
    validate(q);
    const double t = -q.a * q.gamma;
    const double c = nominal_param(t, -q.a);
    return delta_y2(t, {c}) >= 0.0 ? Regime::OneDim : Regime::FullDim;
}

double critical_gamma(double a) {
    validate({a, 1.0});
    auto one_dim = [a](double g) { return classify_regime({a, g}) == Regime::OneDim; };
    if (one_dim(1.0)) return 1.0;
    constexpr int n = 200;
    double lo = 0.0, hi = 1.0;
    for (int i = 1; i <= n; ++i) {
        const double g = static_cast<double>(i) / n;
        if (!one_dim(g)) {
            lo = static_cast<double>(i - 1) / n;
            hi = g;
            break;
        }
    }
    if (lo == 0.0) lo = 1e-12;
    while (hi - lo > 1e-13) {
        const double m = 0.5 * (lo + hi);
        (one_dim(m) ? lo : hi) = m;
    }
    return lo;
}

double implicit_relation_gt(double t, double y1) {
    const double Y = std::sqrt(1.0 + y1);
    const double T = std::sqrt(1.0 - t);
    const double Y2 = Y * Y, Y4 = Y2 * Y2, T2 = T * T, T4 = T2 * T2, T6 = T4 * T2;
    return (-Y4 * T6 + 4.0 * Y4 - 3.0 * Y2 * T4 - 12.0 * y1 * t) * Y + 24.0 * T2 * Y * std::log(T) +
           6.0 * T * (Y * T - 1.0) * (Y * T - 1.0) * std::log((Y - T) / (Y * T - 1.0)) +
           6.0 * T * (Y * T + 1.0) * (Y * T + 1.0) * std::log((Y * T + 1.0) / (Y + T));
}

double implicit_relation_lt(double t, double y1) {
    const double Y = std::sqrt(-(1.0 + y1) * (1.0 - t));
    const double T = 1.0 - t;
    const double Y2 = Y * Y, Y4 = Y2 * Y2, T2 = T * T, T3 = T2 * T;
    return (-Y4 * T3 + 4.0 * Y4 + 3.0 * Y2 * T3 - 12.0 * T2 * y1 * t) +
           12.0 * T3 *
               (2.0 * std::log(T) + (Y2 - 1.0) * (std::atan(1.0 / Y) - std::atan(T / Y)) / Y +
                std::log((Y2 + 1.0) / (Y2 + T2)));
}

}  // namespace scnewton::critical_curve
