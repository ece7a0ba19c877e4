#include "scnewton/onedim.hpp"

#include <cassert>
#include <cmath>
#include <string>

#include "scnewton/errors.hpp"

namespace scnewton::onedim {
namespace {

void require_time(double t) {
    if (!(t >= -1.0 && t <= 0.0))
        throw DomainError("onedim: t must lie in [-1, 0], got " + std::to_string(t));
}

void require_decrement(double a) {
    if (!(a > 0.0 && a <= 1.0))
        throw DomainError("onedim: decrement must lie in (0, 1], got " + std::to_string(a));
}

// sqrt(1 + s) for s >= -1; s < -1 cannot occur on the domain.
double sqrt1p(double s) {
    assert(s >= -1.0);
    return std::sqrt(1.0 + s);
}

}  // namespace

double dispersion_y(double t) {
    require_time(t);
    // 2(-1 + sqrt(1 + t^3)) / t^2 rewritten without cancellation
    return 2.0 * t / (sqrt1p(t * t * t) + 1.0);
}

double dispersion_t(double y) {
    if (!(y >= -1.0 && y <= 0.0))
        throw DomainError("onedim::dispersion_t: y must lie in [-1, 0]");
    return 2.0 * y / (sqrt1p(-y * y * y) + 1.0);
}

Region1D classify(const Plane1DPoint& pt) {
    require_time(pt.t);
    if (pt.y < dispersion_y(pt.t)) return Region1D::BelowDispersion;
    if (pt.y > switching_y(pt.t)) return Region1D::AboveSwitching;
    return Region1D::Middle;
}

double bellman_1d(const Plane1DPoint& pt) {
    const double t = pt.t;
    const double y = pt.y;
    switch (classify(pt)) {
        case Region1D::BelowDispersion:
            return -y + t + t * y;
        case Region1D::AboveSwitching:
            return y - t - t * y;
        case Region1D::Middle:
            break;
    }
    return 4.0 - y + t - t * y - 4.0 * std::sqrt((1.0 - y) * (1.0 + t));
}

double full_step_bound_1d(double a) {
    require_decrement(a);
    // 4 - a^2 - 4 sqrt(1 - a^2)
    return 4.0 * a * a / (1.0 + std::sqrt(1.0 - a * a)) - a * a;
}

double optimal_gamma_1d(double a) {
    require_decrement(a);
    return 2.0 / (sqrt1p(a * a * a) + 1.0);
}

double optimal_bound_1d(double a) {
    require_decrement(a);
    // a + t (1 - a) at the dispersion point t = -a * gamma
    return a - a * (1.0 - a) * optimal_gamma_1d(a);
}

}  // namespace scnewton::onedim
