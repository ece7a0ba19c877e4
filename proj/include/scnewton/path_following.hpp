#pragma once

// Short-step primal path-following on min <c, x> over the domain of a
// self-concordant barrier F. Each iteration moves the target tau as far as
// the decrement constraint rho(tau) <= lambda_bar allows and then takes a
// (damped) Newton step on F + tau <c, .>.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace scnewton::path_following {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

struct Evaluation {
    double value = 0.0;
    Vector gradient;
    Matrix hessian;
};

/// Value, gradient and Hessian of a barrier. Implementations are immutable
/// after construction, so concurrent const calls are safe.
class BarrierOracle {
public:
    virtual ~BarrierOracle() = default;
    virtual std::size_t dim() const = 0;
    virtual bool domain_check(const Vector& x) const = 0;
    /// Throws DomainError outside the domain.
    virtual Evaluation eval(const Vector& x) const = 0;
};

/// -sum log(b_i - a_i^T x) with a_i the rows of A.
class LogBarrierLP final : public BarrierOracle {
public:
    LogBarrierLP(Matrix a, Vector b);
    std::size_t dim() const override { return static_cast<std::size_t>(a_.cols()); }
    bool domain_check(const Vector& x) const override;
    Evaluation eval(const Vector& x) const override;
    const Matrix& a() const { return a_; }
    const Vector& b() const { return b_; }

private:
    Matrix a_;
    Vector b_;
};

/// -sum log x_i on the positive orthant.
class SumLogBarrier final : public BarrierOracle {
public:
    explicit SumLogBarrier(std::size_t n) : n_(n) {}
    std::size_t dim() const override { return n_; }
    bool domain_check(const Vector& x) const override;
    Evaluation eval(const Vector& x) const override;

private:
    std::size_t n_;
};

/// Symmetric-matrix vectorization with sqrt(2) on off-diagonals, so that
/// svec(X) . svec(Y) = trace(X Y). Order: column by column, lower triangle.
Vector svec(const Matrix& x);
Matrix smat(const Vector& v, std::size_t order);
inline std::size_t svec_dim(std::size_t order) { return order * (order + 1) / 2; }

/// -log det X on the affine family X(z) = X0 + sum_j z_j N_j.
class LogDetBarrier final : public BarrierOracle {
public:
    LogDetBarrier(Matrix offset, std::vector<Matrix> directions);
    /// X = smat(z), i.e. the whole space of symmetric matrices of this order.
    static LogDetBarrier full_space(std::size_t order);

    std::size_t dim() const override { return directions_.size(); }
    bool domain_check(const Vector& z) const override;
    Evaluation eval(const Vector& z) const override;
    Matrix matrix_at(const Vector& z) const;
    std::size_t order() const { return static_cast<std::size_t>(offset_.rows()); }

private:
    Matrix offset_;
    std::vector<Matrix> directions_;
    Matrix dir_svec_;  // svec of every direction, one per column
};

/// rho(tau)^2 = alpha + 2 beta tau + kappa tau^2 at a fixed point.
struct DecrementQuadratic {
    double alpha = 0.0;  // g^T H^-1 g
    double beta = 0.0;   // g^T H^-1 c
    double kappa = 0.0;  // c^T H^-1 c
    double at(double tau) const;
};

DecrementQuadratic decrement_quadratic(const BarrierOracle& f, const Vector& x, const Vector& c);

/// sqrt(d^T H^-1 d) with d = F'(x) + tau c, via a Cholesky factorization.
/// Throws DomainError when x is outside the domain or H is not positive definite.
double decrement(const BarrierOracle& f, const Vector& x, double tau, const Vector& c);

/// Largest tau with rho(tau) = lambda_bar. Requires rho(tau_prev) <= lambda_bar
/// and c != 0; throws DomainError otherwise.
double next_tau(const BarrierOracle& f, const Vector& x, double tau_prev, const Vector& c, double lambda_bar);

/// x - gamma H^-1 (F'(x) + tau c). Throws DomainError if the result leaves the domain.
Vector newton_step(const BarrierOracle& f, const Vector& x, double tau, const Vector& c, double gamma);

enum class StepPolicy { FullStep, FixedDamping, OptimalDamping, TraditionalDamping };

std::string to_string(StepPolicy p);

struct PathFollowConfig {
    double lambda_bar = 0.2291;
    StepPolicy policy = StepPolicy::FullStep;
    /// Used by FixedDamping only.
    double gamma = 1.0;
    double tau0 = 1.0;
    double tau_max = 1e4;
    std::size_t max_iters = 100000;
    /// OptimalDamping: use approx_opt_gamma instead of the exact gamma*(rho).
    bool approx_gamma = false;
    /// Record the exact worst-case bound for every step (one BVP solve per step).
    bool compute_bounds = true;
};

/// Throws DomainError for lambda_bar outside (0, 1), tau0 >= tau_max, etc.
void validate(const PathFollowConfig& cfg);

/// Damping used by a policy at decrement rho.
double policy_gamma(const PathFollowConfig& cfg, double rho);

struct IterationRecord {
    std::size_t k = 0;
    double tau = 0.0;
    /// decrement at the new target before the step
    double rho_before = 0.0;
    /// decrement at the same target after the step
    double rho_after = 0.0;
    double gamma_used = 0.0;
    /// exact worst case for (rho_before, gamma_used); NaN when not computed
    double bound_after = 0.0;
    /// sqrt(c^T H^-1 c) at the iterate the step started from
    double c_norm = 0.0;
};

struct PathFollowRun {
    PathFollowConfig config;
    std::vector<IterationRecord> log;
    Vector x_final;
    bool reached_tau_max = false;
};

/// Path-following from x0, which should satisfy rho(tau0) <= lambda_bar.
/// Throws DivergenceError if a step ends with rho_after > 1.
PathFollowRun run(const BarrierOracle& f, const Vector& c, const Vector& x0, const PathFollowConfig& cfg);

/// The four named setups: traditional-full, tight-full, traditional-damped,
/// tight-optimal. Throws DomainError for other names.
PathFollowConfig setup(const std::string& name);
std::vector<std::string> setup_names();

enum class ClassicalVariant { Full, Damped };

/// (lam / (1 - lam))^2 for Full (lam < 1), lam^2 (1 + lam + lam / (1 + lam + lam^2))
/// for Damped.
double classical_bound(double lam, ClassicalVariant v);
/// (1 + rho) / (1 + rho + rho^2)
double classical_gamma(double rho);

struct TunerResult {
    std::string policy;
    double lambda_star = 0.0;
    double lambda_low = 0.0;
    double gap = 0.0;
    double gamma_at_star = 1.0;
};

/// Monotone cubic interpolant of the exact bound (and gamma* for
/// OptimalDamping) on a uniform grid.
class BoundInterpolant {
public:
    /// policy: FullStep or OptimalDamping.
    BoundInterpolant(StepPolicy policy, double lo = 0.05, double hi = 0.8, double step = 1e-3);
    ~BoundInterpolant();
    BoundInterpolant(BoundInterpolant&&) noexcept;
    BoundInterpolant& operator=(BoundInterpolant&&) noexcept;

    double bound(double lam) const;
    double gamma(double lam) const;
    double lo() const;
    double hi() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Maximizes lam - lower(lam) by golden-section search on [lo, hi] to tol.
template <class F>
double golden_section_max(F&& f, double lo, double hi, double tol);

/// Maximizes lambda_bar - bound(lambda_bar) on [0.05, 0.8] (tolerance 1e-6)
/// with the bound from the exact pipeline via BoundInterpolant.
/// policy: FullStep or OptimalDamping.
TunerResult tune(StepPolicy policy);

/// Same maximization for the classical closed-form bounds.
TunerResult tune_classical(ClassicalVariant v);

/// lam - lower(lam) on a uniform grid, for unimodality checks.
std::vector<std::pair<double, double>> gap_scan(StepPolicy policy, double step, double lo = 0.05, double hi = 0.8);

enum class ProblemKind { LogBarrierLP, LogDetSDP };

std::string to_string(ProblemKind k);

/// LP: n variables and m constraints. SDP: matrix order n and m equality constraints.
struct ProblemSize {
    std::size_t n = 0;
    std::size_t m = 0;
};

struct Problem {
    ProblemKind kind = ProblemKind::LogBarrierLP;
    std::uint64_t seed = 0;
    ProblemSize size;
    std::shared_ptr<const BarrierOracle> barrier;
    Vector c;
    Vector x0;
    double tau0 = 1.0;
    /// generator attempts used (1 unless phase 0 had to be retried)
    std::size_t attempts = 1;
    /// LP data: constraints A x <= b, objective c
    Matrix lp_a;
    Vector lp_b;
    /// SDP data: <A_i, X> = b_i, X psd, objective <C, X>; X = I is feasible
    std::vector<Matrix> sdp_a;
    Vector sdp_b;
    Matrix sdp_c;
};

/// Deterministic random instance. x0 is brought to decrement <= 0.05 at tau0
/// by damped Newton steps with gamma = 1 / (1 + rho).
Problem make_problem(ProblemKind kind, std::uint64_t seed, ProblemSize size, double tau0 = 1.0);

}  // namespace scnewton::path_following

#include "scnewton/detail/golden_section.hpp"
