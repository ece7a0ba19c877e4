#include "scnewton/path_following.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

// this Boost release calls isnan unqualified inside pchip.hpp
using std::isnan;
#include <boost/math/interpolators/pchip.hpp>

#include "scnewton/approximations.hpp"
#include "scnewton/errors.hpp"
#include "scnewton/hamiltonian.hpp"
#include "scnewton/optimal_damping.hpp"

namespace scnewton::path_following {

// ---------------------------------------------------------------- barriers

LogBarrierLP::LogBarrierLP(Matrix a, Vector b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.rows() != b_.size()) throw DomainError("LogBarrierLP: A and b sizes differ");
}

bool LogBarrierLP::domain_check(const Vector& x) const {
    if (x.size() != a_.cols()) return false;
    return ((b_ - a_ * x).array() > 0.0).all();
}

Evaluation LogBarrierLP::eval(const Vector& x) const {
    if (!domain_check(x)) throw DomainError("LogBarrierLP: point outside the domain");
    const Vector s = b_ - a_ * x;
    const Vector inv = s.cwiseInverse();
    Evaluation e;
    e.value = -s.array().log().sum();
    e.gradient = a_.transpose() * inv;
    e.hessian = a_.transpose() * inv.cwiseAbs2().asDiagonal() * a_;
    return e;
}

bool SumLogBarrier::domain_check(const Vector& x) const {
    return static_cast<std::size_t>(x.size()) == n_ && (x.array() > 0.0).all();
}

Evaluation SumLogBarrier::eval(const Vector& x) const {
    if (!domain_check(x)) throw DomainError("SumLogBarrier: point outside the domain");
    Evaluation e;
    e.value = -x.array().log().sum();
    e.gradient = -x.cwiseInverse();
    e.hessian = x.cwiseAbs2().cwiseInverse().asDiagonal();
    return e;
}

Vector svec(const Matrix& x) {
    const auto k = x.rows();
    Vector v(k * (k + 1) / 2);
    Eigen::Index idx = 0;
    for (Eigen::Index j = 0; j < k; ++j)
        for (Eigen::Index i = j; i < k; ++i) v(idx++) = i == j ? x(i, j) : std::sqrt(2.0) * x(i, j);
    return v;
}

Matrix smat(const Vector& v, std::size_t order) {
    const auto k = static_cast<Eigen::Index>(order);
    if (v.size() != k * (k + 1) / 2) throw DomainError("smat: length does not match the order");
    Matrix x(k, k);
    Eigen::Index idx = 0;
    for (Eigen::Index j = 0; j < k; ++j) {
        for (Eigen::Index i = j; i < k; ++i) {
            const double val = i == j ? v(idx) : v(idx) / std::sqrt(2.0);
            x(i, j) = val;
            x(j, i) = val;
            ++idx;
        }
    }
    return x;
}

LogDetBarrier::LogDetBarrier(Matrix offset, std::vector<Matrix> directions)
    : offset_(std::move(offset)), directions_(std::move(directions)) {
    const auto k = offset_.rows();
    if (offset_.cols() != k) throw DomainError("LogDetBarrier: offset must be square");
    dir_svec_.resize(k * (k + 1) / 2, static_cast<Eigen::Index>(directions_.size()));
    for (std::size_t j = 0; j < directions_.size(); ++j) {
        if (directions_[j].rows() != k || directions_[j].cols() != k)
            throw DomainError("LogDetBarrier: direction has the wrong shape");
        dir_svec_.col(static_cast<Eigen::Index>(j)) = svec(directions_[j]);
    }
}

LogDetBarrier LogDetBarrier::full_space(std::size_t order) {
    const std::size_t d = svec_dim(order);
    std::vector<Matrix> dirs;
    dirs.reserve(d);
    for (std::size_t j = 0; j < d; ++j) dirs.push_back(smat(Vector::Unit(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(j)), order));
    return LogDetBarrier(Matrix::Zero(static_cast<Eigen::Index>(order), static_cast<Eigen::Index>(order)), std::move(dirs));
}

Matrix LogDetBarrier::matrix_at(const Vector& z) const {
    if (static_cast<std::size_t>(z.size()) != directions_.size()) throw DomainError("LogDetBarrier: wrong dimension");
    Matrix x = offset_;
    for (std::size_t j = 0; j < directions_.size(); ++j) x += z(static_cast<Eigen::Index>(j)) * directions_[j];
    return x;
}

bool LogDetBarrier::domain_check(const Vector& z) const {
    if (static_cast<std::size_t>(z.size()) != directions_.size()) return false;
    Eigen::LLT<Matrix> llt(matrix_at(z));
    return llt.info() == Eigen::Success;
}

Evaluation LogDetBarrier::eval(const Vector& z) const {
    const Matrix x = matrix_at(z);
    Eigen::LLT<Matrix> llt(x);
    if (llt.info() != Eigen::Success) throw DomainError("LogDetBarrier: matrix is not positive definite");
    const auto l = llt.matrixL();
    const Matrix lmat = l;
    const auto k = x.rows();

    Evaluation e;
    e.value = -2.0 * lmat.diagonal().array().log().sum();
    const Matrix xinv = llt.solve(Matrix::Identity(k, k));
    e.gradient = -dir_svec_.transpose() * svec(xinv);

    // H_ij = trace(X^-1 N_i X^-1 N_j) = <W_i, W_j> with W = L^-1 N L^-T
    Matrix w(k * (k + 1) / 2, static_cast<Eigen::Index>(directions_.size()));
    for (std::size_t j = 0; j < directions_.size(); ++j) {
        const Matrix t = l.solve(directions_[j]);
        w.col(static_cast<Eigen::Index>(j)) = svec(l.solve(t.transpose()));
    }
    e.hessian = w.transpose() * w;
    return e;
}

// ---------------------------------------------------------------- decrement

namespace {

struct Factored {
    Evaluation ev;
    Vector hg;  // H^-1 g
    Vector hc;  // H^-1 c
    DecrementQuadratic q;
};

Factored factor(const BarrierOracle& f, const Vector& x, const Vector& c) {
    if (static_cast<std::size_t>(c.size()) != f.dim() || static_cast<std::size_t>(x.size()) != f.dim())
        throw DomainError("path_following: dimension mismatch");
    Factored out;
    out.ev = f.eval(x);
    Eigen::LLT<Matrix> llt(out.ev.hessian);
    if (llt.info() != Eigen::Success) throw DomainError("path_following: Hessian is not positive definite");
    out.hg = llt.solve(out.ev.gradient);
    out.hc = llt.solve(c);
    out.q.alpha = out.ev.gradient.dot(out.hg);
    out.q.beta = out.ev.gradient.dot(out.hc);
    out.q.kappa = c.dot(out.hc);
    return out;
}

double largest_root(const DecrementQuadratic& q, double tau_prev, double lambda_bar) {
    if (!(q.kappa > 0.0)) throw DomainError("next_tau: objective vanishes in the local norm");
    const double lb2 = lambda_bar * lambda_bar;
    const double at_prev = q.at(tau_prev);
    if (at_prev > lb2 * (1.0 + 1e-9) + 1e-15)
        throw DomainError("next_tau: decrement at tau_prev exceeds lambda_bar");
    const double disc = std::max(0.0, q.beta * q.beta - q.kappa * (q.alpha - lb2));
    const double s = std::sqrt(disc);
    // cancellation-free larger root
    const double root = q.beta <= 0.0 ? (-q.beta + s) / q.kappa : (lb2 - q.alpha) / (q.beta + s);
    if (root < tau_prev - 1e-9 * std::max(1.0, std::abs(tau_prev)))
        throw DomainError("next_tau: no root beyond tau_prev");
    return std::max(root, tau_prev);
}

}  // namespace

double DecrementQuadratic::at(double tau) const { return alpha + 2.0 * beta * tau + kappa * tau * tau; }

DecrementQuadratic decrement_quadratic(const BarrierOracle& f, const Vector& x, const Vector& c) {
    return factor(f, x, c).q;
}

double decrement(const BarrierOracle& f, const Vector& x, double tau, const Vector& c) {
    if (static_cast<std::size_t>(c.size()) != f.dim()) throw DomainError("decrement: dimension mismatch");
    const Evaluation ev = f.eval(x);
    Eigen::LLT<Matrix> llt(ev.hessian);
    if (llt.info() != Eigen::Success) throw DomainError("decrement: Hessian is not positive definite");
    const Vector d = ev.gradient + tau * c;
    return std::sqrt(std::max(0.0, d.dot(llt.solve(d))));
}

double next_tau(const BarrierOracle& f, const Vector& x, double tau_prev, const Vector& c, double lambda_bar) {
    return largest_root(factor(f, x, c).q, tau_prev, lambda_bar);
}

Vector newton_step(const BarrierOracle& f, const Vector& x, double tau, const Vector& c, double gamma) {
    if (!(gamma > 0.0 && gamma <= 1.0)) throw DomainError("newton_step: gamma must lie in (0, 1]");
    const Factored fx = factor(f, x, c);
    Vector out = x - gamma * (fx.hg + tau * fx.hc);
    if (!f.domain_check(out)) throw DomainError("newton_step: step leaves the domain");
    return out;
}

// ---------------------------------------------------------------- policies and run

std::string to_string(StepPolicy p) {
    switch (p) {
        case StepPolicy::FullStep:
            return "full";
        case StepPolicy::FixedDamping:
            return "fixed";
        case StepPolicy::OptimalDamping:
            return "optimal";
        case StepPolicy::TraditionalDamping:
            return "traditional";
    }
    return "?";
}

void validate(const PathFollowConfig& cfg) {
    if (!(cfg.lambda_bar > 0.0 && cfg.lambda_bar < 1.0)) throw DomainError("config: lambda_bar must lie in (0, 1)");
    if (!(cfg.tau0 > 0.0 && cfg.tau0 < cfg.tau_max)) throw DomainError("config: need 0 < tau0 < tau_max");
    if (cfg.policy == StepPolicy::FixedDamping && !(cfg.gamma > 0.0 && cfg.gamma <= 1.0))
        throw DomainError("config: gamma must lie in (0, 1]");
    if (cfg.max_iters == 0) throw DomainError("config: max_iters must be positive");
}

double policy_gamma(const PathFollowConfig& cfg, double rho) {
    switch (cfg.policy) {
        case StepPolicy::FullStep:
            return 1.0;
        case StepPolicy::FixedDamping:
            return cfg.gamma;
        case StepPolicy::OptimalDamping:
            if (!(rho > 0.0)) return 1.0;
            return cfg.approx_gamma ? approximations::approx_opt_gamma(rho)
                                    : optimal_damping::optimal_step(rho).gamma_star;
        case StepPolicy::TraditionalDamping:
            return classical_gamma(rho);
    }
    return 1.0;
}

PathFollowRun run(const BarrierOracle& f, const Vector& c, const Vector& x0, const PathFollowConfig& cfg) {
    validate(cfg);
    PathFollowRun out;
    out.config = cfg;

    Vector x = x0;
    double tau = cfg.tau0;
    Factored fx = factor(f, x, c);
    if (std::sqrt(std::max(0.0, fx.q.at(tau))) > cfg.lambda_bar)
        throw DomainError("run: starting decrement exceeds lambda_bar");

    double cached_rho = -1.0, cached_gamma = -1.0, cached_bound = NAN;
    std::optional<std::pair<double, double>> warm;

    for (std::size_t k = 1; k <= cfg.max_iters; ++k) {
        const double tau_new = largest_root(fx.q, tau, cfg.lambda_bar);
        const double rho_before = std::sqrt(std::max(0.0, fx.q.at(tau_new)));
        const double gamma = policy_gamma(cfg, rho_before);

        Vector x_new = x - gamma * (fx.hg + tau_new * fx.hc);
        if (!f.domain_check(x_new)) throw DivergenceError("run: Newton step left the domain");
        Factored fn = factor(f, x_new, c);
        const double rho_after = std::sqrt(std::max(0.0, fn.q.at(tau_new)));

        IterationRecord rec;
        rec.k = k;
        rec.tau = tau_new;
        rec.rho_before = rho_before;
        rec.rho_after = rho_after;
        rec.gamma_used = gamma;
        rec.c_norm = std::sqrt(fx.q.kappa);
        rec.bound_after = NAN;
        if (cfg.compute_bounds && rho_before > 0.0) {
            if (!(std::abs(rho_before - cached_rho) <= 1e-12 && gamma == cached_gamma)) {
                hamiltonian::BvpOptions opt;
                opt.samples = 2;
                opt.warm_start = warm;
                const BoundResult b = hamiltonian::solve_bvp({rho_before, gamma}, opt);
                if (b.regime == Regime::FullDim) warm = std::make_pair(b.r, b.theta);
                cached_rho = rho_before;
                cached_gamma = gamma;
                cached_bound = b.lambda_out;
            }
            rec.bound_after = cached_bound;
        }
        out.log.push_back(rec);
        if (rho_after > 1.0) throw DivergenceError("run: decrement after the step exceeds 1");

        x = std::move(x_new);
        fx = std::move(fn);
        tau = tau_new;
        if (tau >= cfg.tau_max) {
            out.reached_tau_max = true;
            break;
        }
    }
    out.x_final = x;
    return out;
}

PathFollowConfig setup(const std::string& name) {
    PathFollowConfig cfg;
    if (name == "traditional-full") {
        cfg.lambda_bar = 0.2291;
        cfg.policy = StepPolicy::FullStep;
    } else if (name == "tight-full") {
        cfg.lambda_bar = 0.394257;
        cfg.policy = StepPolicy::FullStep;
    } else if (name == "traditional-damped") {
        cfg.lambda_bar = 0.2910;
        cfg.policy = StepPolicy::TraditionalDamping;
    } else if (name == "tight-optimal") {
        cfg.lambda_bar = 0.442946;
        cfg.policy = StepPolicy::OptimalDamping;
    } else {
        throw DomainError("unknown setup '" + name + "'");
    }
    return cfg;
}

std::vector<std::string> setup_names() { return {"traditional-full", "tight-full", "traditional-damped", "tight-optimal"}; }

// ---------------------------------------------------------------- bounds and tuning

double classical_bound(double lam, ClassicalVariant v) {
    if (!(lam >= 0.0)) throw DomainError("classical_bound: lam must be >= 0");
    if (v == ClassicalVariant::Full) {
        if (!(lam < 1.0)) throw DomainError("classical_bound: full-step bound needs lam < 1");
        const double r = lam / (1.0 - lam);
        return r * r;
    }
    return lam * lam * (1.0 + lam + lam / (1.0 + lam + lam * lam));
}

double classical_gamma(double rho) { return (1.0 + rho) / (1.0 + rho + rho * rho); }

namespace {

std::vector<double> uniform_grid(double lo, double hi, double step) {
    const auto n = static_cast<std::size_t>(std::llround((hi - lo) / step)) + 1;
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = i + 1 == n ? hi : lo + step * static_cast<double>(i);
    return g;
}

void require_tunable(StepPolicy p) {
    if (p != StepPolicy::FullStep && p != StepPolicy::OptimalDamping)
        throw DomainError("tuning is defined for the full and the optimal step only");
}

// exact pipeline values on a grid: (bound, gamma)
std::pair<std::vector<double>, std::vector<double>> exact_on_grid(StepPolicy p, const std::vector<double>& grid) {
    std::vector<double> bound(grid.size()), gamma(grid.size(), 1.0);
    if (p == StepPolicy::FullStep) {
        const auto sweep = hamiltonian::solve_bvp_sweep(grid, 1.0);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!sweep[i].result) throw ConvergenceError("tuner: " + sweep[i].error, NAN, NAN, NAN);
            bound[i] = sweep[i].result->lambda_out;
        }
    } else {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto r = optimal_damping::optimal_step(grid[i]);
            bound[i] = r.lambda_out;
            gamma[i] = r.gamma_star;
        }
    }
    return {std::move(bound), std::move(gamma)};
}

}  // namespace

struct BoundInterpolant::Impl {
    using Pchip = boost::math::interpolators::pchip<std::vector<double>>;
    double lo;
    double hi;
    std::optional<Pchip> bound;
    std::optional<Pchip> gamma;
};

BoundInterpolant::BoundInterpolant(StepPolicy policy, double lo, double hi, double step) : impl_(std::make_unique<Impl>()) {
    require_tunable(policy);
    if (!(lo > 0.0 && hi < 1.0 && lo < hi && step > 0.0)) throw DomainError("BoundInterpolant: bad grid");
    const std::vector<double> grid = uniform_grid(lo, hi, step);
    auto [b, g] = exact_on_grid(policy, grid);
    impl_->lo = grid.front();
    impl_->hi = grid.back();
    impl_->bound.emplace(std::vector<double>(grid), std::move(b));
    impl_->gamma.emplace(std::vector<double>(grid), std::move(g));
}

BoundInterpolant::~BoundInterpolant() = default;
BoundInterpolant::BoundInterpolant(BoundInterpolant&&) noexcept = default;
BoundInterpolant& BoundInterpolant::operator=(BoundInterpolant&&) noexcept = default;

double BoundInterpolant::bound(double lam) const {
    if (!(lam >= impl_->lo && lam <= impl_->hi)) throw DomainError("BoundInterpolant: outside the grid");
    return (*impl_->bound)(lam);
}

double BoundInterpolant::gamma(double lam) const {
    if (!(lam >= impl_->lo && lam <= impl_->hi)) throw DomainError("BoundInterpolant: outside the grid");
    return (*impl_->gamma)(lam);
}

double BoundInterpolant::lo() const { return impl_->lo; }
double BoundInterpolant::hi() const { return impl_->hi; }

TunerResult tune(StepPolicy policy) {
    require_tunable(policy);
    const BoundInterpolant interp(policy);
    TunerResult res;
    res.policy = to_string(policy);
    res.lambda_star = golden_section_max([&](double l) { return l - interp.bound(l); }, interp.lo(), interp.hi(), 1e-6);
    if (policy == StepPolicy::FullStep) {
        res.lambda_low = hamiltonian::solve_bvp({res.lambda_star, 1.0}).lambda_out;
        res.gamma_at_star = 1.0;
    } else {
        const auto r = optimal_damping::optimal_step(res.lambda_star);
        res.lambda_low = r.lambda_out;
        res.gamma_at_star = r.gamma_star;
    }
    res.gap = res.lambda_star - res.lambda_low;
    return res;
}

TunerResult tune_classical(ClassicalVariant v) {
    TunerResult res;
    res.policy = v == ClassicalVariant::Full ? "classical-full" : "classical-damped";
    res.lambda_star = golden_section_max([v](double l) { return l - classical_bound(l, v); }, 0.05, 0.8, 1e-9);
    res.lambda_low = classical_bound(res.lambda_star, v);
    res.gap = res.lambda_star - res.lambda_low;
    res.gamma_at_star = v == ClassicalVariant::Full ? 1.0 : classical_gamma(res.lambda_star);
    return res;
}

std::vector<std::pair<double, double>> gap_scan(StepPolicy policy, double step, double lo, double hi) {
    require_tunable(policy);
    const std::vector<double> grid = uniform_grid(lo, hi, step);
    const auto bounds = exact_on_grid(policy, grid).first;
    std::vector<std::pair<double, double>> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = {grid[i], grid[i] - bounds[i]};
    return out;
}

// ---------------------------------------------------------------- problem generation

std::string to_string(ProblemKind k) { return k == ProblemKind::LogBarrierLP ? "lp" : "sdp"; }

namespace {

constexpr std::size_t kMaxAttempts = 5;
constexpr std::size_t kPhase0Iters = 2000;

Matrix gaussian(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c) {
    std::normal_distribution<double> nd;
    Matrix m(r, c);
    // fill row by row so the stream order is independent of storage order
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j) m(i, j) = nd(rng);
    return m;
}

// Damped Newton with gamma = 1 / (1 + rho) until rho <= 0.05; false if it stalls.
bool phase0(const BarrierOracle& f, const Vector& c, double tau0, Vector& x) {
    for (std::size_t it = 0; it < kPhase0Iters; ++it) {
        const Factored fx = factor(f, x, c);
        const double rho = std::sqrt(std::max(0.0, fx.q.at(tau0)));
        if (rho <= 0.05) return true;
        x -= (fx.hg + tau0 * fx.hc) / (1.0 + rho);
    }
    return false;
}

void fill_lp(Problem& p, std::mt19937_64& rng) {
    const auto n = static_cast<Eigen::Index>(p.size.n), m = static_cast<Eigen::Index>(p.size.m);
    std::uniform_real_distribution<double> ub(1.0, 2.0), uy(0.5, 1.5);
    p.lp_a = gaussian(rng, m, n);
    p.lp_b.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) p.lp_b(i) = ub(rng);
    Vector y(m);
    for (Eigen::Index i = 0; i < m; ++i) y(i) = uy(rng);
    // dual feasible objective: bounded below on the polyhedron
    p.c = -p.lp_a.transpose() * y;
    p.barrier = std::make_shared<LogBarrierLP>(p.lp_a, p.lp_b);
    p.x0 = Vector::Zero(n);
}

void fill_sdp(Problem& p, std::mt19937_64& rng) {
    const auto k = static_cast<Eigen::Index>(p.size.n), m = static_cast<Eigen::Index>(p.size.m);
    const Eigen::Index d = k * (k + 1) / 2;
    p.sdp_a.clear();
    p.sdp_b.resize(m);
    Matrix rows(m, d);
    for (Eigen::Index i = 0; i < m; ++i) {
        const Matrix g = gaussian(rng, k, k);
        Matrix a = 0.5 * (g + g.transpose());
        p.sdp_b(i) = a.trace();  // X = I is feasible
        rows.row(i) = svec(a).transpose();
        p.sdp_a.push_back(std::move(a));
    }
    const Matrix yv = gaussian(rng, m, 1);
    const Matrix g = gaussian(rng, k, k);
    // C = sum y_i A_i + S with S positive definite: dual feasible
    p.sdp_c = g * g.transpose() / static_cast<double>(k) + 0.1 * Matrix::Identity(k, k);
    for (Eigen::Index i = 0; i < m; ++i) p.sdp_c += yv(i, 0) * p.sdp_a[static_cast<std::size_t>(i)];

    // orthonormal basis of {X : <A_i, X> = 0} in svec coordinates
    Eigen::HouseholderQR<Matrix> qr(rows.transpose());
    const Matrix q = qr.householderQ() * Matrix::Identity(d, d);
    const Eigen::Index dim = d - m;
    std::vector<Matrix> dirs;
    dirs.reserve(static_cast<std::size_t>(dim));
    const Vector csv = svec(p.sdp_c);
    p.c.resize(dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        const Vector col = q.col(m + j);
        dirs.push_back(smat(col, p.size.n));
        p.c(j) = csv.dot(col);
    }
    p.barrier = std::make_shared<LogDetBarrier>(Matrix::Identity(k, k), std::move(dirs));
    p.x0 = Vector::Zero(dim);
}

}  // namespace

Problem make_problem(ProblemKind kind, std::uint64_t seed, ProblemSize size, double tau0) {
    if (!(tau0 > 0.0)) throw DomainError("make_problem: tau0 must be positive");
    if (kind == ProblemKind::LogBarrierLP) {
        if (size.n < 1 || size.m <= size.n || size.m > 100)
            throw DomainError("make_problem: LP needs 1 <= n < m <= 100");
    } else {
        if (size.n < 2 || size.n > 25 || size.m < 1 || size.m >= svec_dim(size.n))
            throw DomainError("make_problem: SDP needs order 2..25 and 1 <= m < order (order + 1) / 2");
    }

    for (std::size_t attempt = 1; attempt <= kMaxAttempts; ++attempt) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(attempt)};
        std::mt19937_64 rng(seq);
        Problem p;
        p.kind = kind;
        p.seed = seed;
        p.size = size;
        p.tau0 = tau0;
        p.attempts = attempt;
        if (kind == ProblemKind::LogBarrierLP)
            fill_lp(p, rng);
        else
            fill_sdp(p, rng);
        try {
            if (phase0(*p.barrier, p.c, tau0, p.x0)) return p;
        } catch (const DomainError&) {
        }
    }
    throw ConvergenceError("make_problem: phase 0 did not reach the central path", NAN, NAN, NAN);
}

}  // namespace scnewton::path_following
