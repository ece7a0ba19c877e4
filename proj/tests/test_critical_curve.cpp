#include <doctest.h>

#include <cmath>

#include "scnewton/critical_curve.hpp"
#include "scnewton/errors.hpp"
#include "scnewton/hamiltonian.hpp"
#include "scnewton/ode.hpp"
#include "scnewton/onedim.hpp"
#include "scnewton/optimal_damping.hpp"

using namespace scnewton;
using namespace scnewton::critical_curve;

namespace {

const double kFocalMinusOne = 1.0 - std::cbrt(4.0);

// Largest gap between the closed form and a numerical solution of the
// linearized equation started at delta(0) = 1, over n uniform samples of [lo, 0].
double ode_gap(double c, double lo, std::size_t n = 91) {
    ode::Options o;
    o.abs_tol = 1e-14;
    o.rel_tol = 1e-13;
    o.samples = n;
    auto rhs = [c](double t, const ode::State<1>& x) { return ode::State<1>{delta_y2_rhs(t, x[0], {c})}; };
    const auto sol = ode::integrate<1>(rhs, {1.0}, 0.0, lo, o);
    double gap = 0.0;
    for (std::size_t i = 0; i < sol.sample_t.size(); ++i)
        gap = std::max(gap, std::abs(sol.sample_x[i][0] - delta_y2(sol.sample_t[i], {c})));
    return gap;
}

}  // namespace

TEST_CASE("delta_y2 initial value and the c = -1 branch") {
    for (double c : {-50.0, -3.0, -1.0 - 1e-4, -1.0, -0.99, -0.5, 0.5, 2.0})
        CHECK(delta_y2(0.0, {c}) == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(std::abs(delta_y2(kFocalMinusOne, {-1.0})) <= 1e-14);
    CHECK(delta_y2(-0.3, {-1.0}) == doctest::Approx(4.0 / (3.0 * 1.69) - 1.3 / 3.0).epsilon(1e-14));
    CHECK(delta_y2(-0.3, {-1.0}) == doctest::Approx(0.355622).epsilon(1e-6));
}

TEST_CASE("delta_y2 is continuous across c = -1") {
    const double mid = delta_y2(-0.3, {-1.0});
    for (double dc : {1e-6, -1e-6, 1e-4, -1e-4, 2e-3, -2e-3}) {
        CHECK(std::abs(delta_y2(-0.3, {-1.0 + dc}) - mid) <= 1e-4);
    }
    // inside the blending window against the linearized equation
    for (double dc : {5e-5, -5e-5, 5e-7, -5e-7, 2e-4, -2e-4}) CHECK(ode_gap(-1.0 + dc, -0.9) <= 1e-8);
}

TEST_CASE("closed form matches the linearized equation") {
    for (double c : {-3.0, -1.5, -1.0, -0.5}) CHECK(ode_gap(c, -0.9) <= 1e-8);
    // for c > 0 the nominal trajectory ends on the switching curve
    for (double c : {0.5, 2.0}) CHECK(ode_gap(c, std::max(-0.9, nominal_lower_t(c) + 0.01)) <= 1e-8);
}

TEST_CASE("delta_y2 domain") {
    CHECK_THROWS_AS(delta_y2(0.1, {-0.5}), DomainError);
    CHECK_THROWS_AS(delta_y2(-1.0, {-0.5}), DomainError);
    CHECK_THROWS_AS(delta_y2(-0.3, {0.0}), DomainError);
    CHECK_THROWS_AS(delta_y2(-0.5, {0.5}), DomainError);
    CHECK(nominal_lower_t(-2.0) == -1.0);
    CHECK(nominal_lower_t(3.0) == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("focal times") {
    CHECK(std::abs(focal_time({-1.0}) - kFocalMinusOne) <= 1e-10);
    CHECK(focal_time({-1.0}) == doctest::Approx(-0.5874).epsilon(1e-4));

    const double t = focal_time({-0.5});
    CHECK(std::abs(delta_y2(t, {-0.5})) <= 1e-10);
    CHECK(t == doctest::Approx(-0.5250240817).epsilon(1e-9));
    CHECK(std::abs(implicit_relation_gt(t, nominal_y1(t, -0.5))) <= 1e-6);

    // asymptote of the curve for c -> -infinity
    CHECK(std::abs(focal_time({-1e4}) - kFocalMinusOne) <= 1e-3);
    CHECK(std::abs(focal_time({-1e6}) - kFocalMinusOne) <= std::abs(focal_time({-1e4}) - kFocalMinusOne));
    CHECK_THROWS_AS(focal_time({0.0}), NotFoundError);
}

TEST_CASE("sampled critical curve") {
    const auto two = critical_curve_samples(2, -3.0, -0.5);
    REQUIRE(two.size() == 2);
    CHECK(two[0].c == -3.0);
    CHECK(two[1].c == -0.5);

    const auto pts = critical_curve_samples(81, -5.0, 3.0);
    // c = 0 has no nominal trajectory; for small c > 0 the focal point lies
    // beyond the switching-curve end of the nominal trajectory
    CHECK(pts.size() >= 78);
    CHECK(pts.size() < 81);
    std::size_t negative = 0;
    for (const CriticalPoint& p : pts) negative += p.c < 0.0 ? 1 : 0;
    CHECK(negative == 50);
    bool has_minus_one = false;
    for (const CriticalPoint& p : pts) {
        CHECK(p.t_crit > -1.0);
        CHECK(p.t_crit < 0.0);
        CHECK(std::abs(delta_y2(p.t_crit, {p.c})) <= 1e-10);
        CHECK(p.y1 == doctest::Approx(nominal_y1(p.t_crit, p.c)).epsilon(1e-15));
        if (p.c == -1.0) {
            has_minus_one = true;
            CHECK(std::abs(p.t_crit - kFocalMinusOne) <= 1e-10);
            CHECK(p.y1 == doctest::Approx(-1.0).epsilon(1e-10));
        } else if (p.c > -1.0) {
            CHECK(std::abs(implicit_relation_gt(p.t_crit, p.y1)) <= 1e-6);
        } else {
            CHECK(std::abs(implicit_relation_lt(p.t_crit, p.y1)) <= 1e-6);
        }
        if (p.y1 > -1.0 && p.y1 < 0.0) CHECK(onedim::dispersion_t(p.y1) < p.t_crit);
    }
    CHECK(has_minus_one);
}

TEST_CASE("regime classification") {
    CHECK(classify_regime({0.5, 0.1}) == Regime::OneDim);
    CHECK(delta_y2(-0.05, {nominal_param(-0.05, -0.5)}) > 0.0);
    CHECK(classify_regime({0.4, 1.0}) == Regime::FullDim);
    const double g = optimal_damping::optimal_step(0.394257).gamma_star;
    CHECK(classify_regime({0.394257, g}) == Regime::FullDim);
    CHECK(nominal_param(-0.4 * 0.7, -0.4) == doctest::Approx(-0.4 * (1 + 0.28) + 0.28).epsilon(1e-15));

    const double gc = critical_gamma(0.5);
    CHECK(gc > 0.0);
    CHECK(gc < 1.0);
    CHECK(classify_regime({0.5, gc}) == Regime::OneDim);
    CHECK(classify_regime({0.5, gc + 1e-9}) == Regime::FullDim);
    // even tiny decrements leave the one-dimensional regime at the full step
    CHECK(critical_gamma(0.01) < 1.0);
    CHECK(classify_regime({0.01, 1.0}) == Regime::FullDim);

    const BoundResult inside = hamiltonian::solve_bvp({0.5, gc});
    CHECK(inside.lambda_out == 0.5 - 0.5 * gc + 0.25 * gc);
    const double g2 = gc + 0.03;
    const BoundResult beyond = hamiltonian::solve_bvp({0.5, g2});
    CHECK(beyond.regime == Regime::FullDim);
    CHECK(beyond.lambda_out > 0.5 - 0.5 * g2 + 0.25 * g2);
}
