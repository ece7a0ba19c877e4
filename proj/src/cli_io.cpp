#include "scnewton/cli_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "scnewton/critical_curve.hpp"
#include "scnewton/errors.hpp"
#include "scnewton/onedim.hpp"
#include "scnewton/optimal_damping.hpp"

namespace scnewton::cli_io {

namespace pf = path_following;
using nlohmann::json;

std::string format_number(double v) {
    if (std::isnan(v)) return "";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + '"';
}

std::string to_string(const Csv& csv) {
    std::string out;
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += csv_field(cells[i]);
        }
        out += '\n';
    };
    line(csv.header);
    for (const auto& r : csv.rows) line(r);
    return out;
}

namespace {

json number(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

json vector_json(const pf::Vector& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

json matrix_json(const pf::Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i).transpose()));
    return rows;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return g;
}

}  // namespace

std::vector<double> default_table_grid() {
    std::vector<double> g;
    for (int i = 2; i <= 98; ++i)
        if (i % 2 == 0 || i % 5 == 0) g.push_back(i / 100.0);
    return g;
}

std::vector<TableRow> make_table(const std::vector<double>& grid, double full_step_max) {
    for (double a : grid)
        if (!(a > 0.0 && a < 1.0)) throw DomainError("table: grid values must lie in (0, 1), got " + format_number(a));

    std::vector<TableRow> rows(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        rows[i].lambda_bar = grid[i];
        try {
            const auto r = optimal_damping::optimal_step(grid[i]);
            rows[i].bound_opt = r.lambda_out;
            rows[i].gamma_star = r.gamma_star;
        } catch (const std::exception& e) {
            rows[i].bound_opt = rows[i].gamma_star = NAN;
            rows[i].error = e.what();
        }
    }

    // full-step column: ascending sweep so each value warm-starts the next
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (grid[i] <= full_step_max) idx.push_back(i);
    std::stable_sort(idx.begin(), idx.end(), [&grid](std::size_t l, std::size_t r) { return grid[l] < grid[r]; });
    std::vector<double> as;
    for (std::size_t i : idx) as.push_back(grid[i]);
    const auto sweep = hamiltonian::solve_bvp_sweep(as, 1.0);
    for (std::size_t k = 0; k < idx.size(); ++k) {
        TableRow& row = rows[idx[k]];
        if (sweep[k].result)
            row.bound_full = sweep[k].result->lambda_out;
        else
            row.error += (row.error.empty() ? "" : "; ") + sweep[k].error;
    }
    return rows;
}

Csv table_csv(const std::vector<TableRow>& rows) {
    Csv csv{{"lambda_bar", "bound_full", "bound_opt", "gamma_star", "error"}, {}};
    for (const TableRow& r : rows)
        csv.rows.push_back({format_number(r.lambda_bar), r.bound_full ? format_number(*r.bound_full) : "",
                            format_number(r.bound_opt), format_number(r.gamma_star), r.error});
    return csv;
}

Csv critical_curve_csv(std::size_t n, double c_lo, double c_hi) {
    Csv csv{{"c", "t_crit", "y1"}, {}};
    for (const auto& p : critical_curve::critical_curve_samples(n, c_lo, c_hi))
        csv.rows.push_back({format_number(p.c), format_number(p.t_crit), format_number(p.y1)});
    return csv;
}

Csv sigma_csv(double a) {
    const auto r = optimal_damping::optimal_step(a);
    Csv csv{{"y1", "y2"}, {}};
    for (const auto& p : r.sigma) csv.rows.push_back({format_number(p.y1), format_number(p.y2)});
    if (r.sigma.empty() || r.sigma.back().y1 != r.y_star.y1)
        csv.rows.push_back({format_number(r.y_star.y1), format_number(r.y_star.y2)});
    return csv;
}

Csv synthesis1d_csv(std::size_t n) {
    Csv csv{{"t", "dispersion_y", "switching_y"}, {}};
    for (double t : linspace(-1.0, 0.0, n))
        csv.rows.push_back({format_number(t), format_number(onedim::dispersion_y(t)), format_number(onedim::switching_y(t))});
    return csv;
}

json to_json(const StepQuery& q, const BoundResult& r, bool trajectory) {
    json j{{"a", q.a},
           {"gamma", q.gamma},
           {"lambda_out", r.lambda_out},
           {"regime", to_string(r.regime)},
           {"shoot_residual", number(r.shoot_residual)},
           {"r", number(r.r)},
           {"theta", number(r.theta)},
           {"newton_iterations", r.newton_iterations}};
    if (trajectory) {
        json pts = json::array();
        for (const PhasePoint& p : r.trajectory)
            pts.push_back({{"t", p.t}, {"y1", p.y1}, {"y2", p.y2}, {"p1", p.p1}, {"p2", p.p2}});
        j["trajectory"] = std::move(pts);
    }
    return j;
}

json to_json(const pf::TunerResult& r) {
    return {{"policy", r.policy},
            {"lambda_star", r.lambda_star},
            {"lambda_low", r.lambda_low},
            {"gap", r.gap},
            {"gamma_at_star", r.gamma_at_star}};
}

json to_json(const pf::PathFollowRun& run) {
    const pf::PathFollowConfig& c = run.config;
    json log = json::array();
    for (const pf::IterationRecord& r : run.log)
        log.push_back({{"k", r.k},
                       {"tau", r.tau},
                       {"rho_before", r.rho_before},
                       {"rho_after", r.rho_after},
                       {"gamma_used", r.gamma_used},
                       {"bound_after", number(r.bound_after)},
                       {"c_norm", r.c_norm}});
    return {{"config",
             {{"lambda_bar", c.lambda_bar},
              {"policy", pf::to_string(c.policy)},
              {"gamma", c.gamma},
              {"tau0", c.tau0},
              {"tau_max", c.tau_max},
              {"max_iters", c.max_iters},
              {"approx_gamma", c.approx_gamma}}},
            {"iterations", run.log.size()},
            {"reached_tau_max", run.reached_tau_max},
            {"log", std::move(log)}};
}

json to_json(const pf::Problem& p) {
    json j{{"kind", pf::to_string(p.kind)},
           {"seed", p.seed},
           {"size", {{"n", p.size.n}, {"m", p.size.m}}},
           {"tau0", p.tau0},
           {"attempts", p.attempts},
           {"c", vector_json(p.c)},
           {"x0", vector_json(p.x0)}};
    if (p.kind == pf::ProblemKind::LogBarrierLP) {
        j["A"] = matrix_json(p.lp_a);
        j["b"] = vector_json(p.lp_b);
    } else {
        json as = json::array();
        for (const pf::Matrix& a : p.sdp_a) as.push_back(matrix_json(a));
        j["A"] = std::move(as);
        j["b"] = vector_json(p.sdp_b);
        j["C"] = matrix_json(p.sdp_c);
    }
    return j;
}

Csv log_csv(const pf::PathFollowRun& run) {
    Csv csv{{"k", "tau", "rho_before", "rho_after", "gamma_used"}, {}};
    for (const pf::IterationRecord& r : run.log)
        csv.rows.push_back({std::to_string(r.k), format_number(r.tau), format_number(r.rho_before),
                            format_number(r.rho_after), format_number(r.gamma_used)});
    return csv;
}

namespace {

std::vector<double> parse_grid(const std::string& s) {
    std::vector<double> g;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        const std::string tok = s.substr(pos, end - pos);
        double v = 0.0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size())
            throw DomainError("table: cannot parse grid value '" + tok + "'");
        g.push_back(v);
        pos = end + 1;
    }
    return g;
}

json table_json(const std::vector<TableRow>& rows) {
    json a = json::array();
    for (const TableRow& r : rows)
        a.push_back({{"lambda_bar", r.lambda_bar},
                     {"bound_full", r.bound_full ? json(*r.bound_full) : json(nullptr)},
                     {"bound_opt", number(r.bound_opt)},
                     {"gamma_star", number(r.gamma_star)},
                     {"error", r.error}});
    return a;
}

void report(std::ostream& err, const std::string& kind, const std::string& msg) {
    err << json{{"error", kind}, {"message", msg}}.dump() << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Worst-case decrement bounds for damped Newton steps and short-step path-following"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "csv";
    auto add_out = [&out_path](CLI::App* sub) { sub->add_option("--out", out_path, "Write data to this file"); };
    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    };

    StepQuery query;
    bool with_trajectory = false;
    CLI::App* bound = app.add_subcommand("bound", "Worst-case decrement after a damped Newton step (JSON)");
    bound->add_option("--a", query.a, "Decrement before the step, in (0, 1)")->required();
    bound->add_option("--gamma", query.gamma, "Damping coefficient, in (0, 1]");
    bound->add_flag("--trajectory", with_trajectory, "Include the worst-case trajectory");
    add_out(bound);

    std::optional<std::string> grid_text;
    double full_step_max = 0.95;
    CLI::App* table = app.add_subcommand("table", "Full-step and optimal-step bounds with optimal damping");
    table->add_option("--grid", grid_text, "Comma-separated decrements (default: multiples of 0.02 and 0.05 up to 0.98)");
    table->add_option("--full-step-max", full_step_max, "Leave the full-step column empty above this decrement");
    add_format(table);
    add_out(table);

    std::string which;
    double curve_a = 0.4, c_lo = -5.0, c_hi = 3.0, step = 0.01;
    std::size_t n_points = 161;
    CLI::App* curves = app.add_subcommand("curves", "Sampled curves (CSV)");
    curves->add_option("which", which, "critical | sigma | bounds | synthesis1d")
        ->required()
        ->check(CLI::IsMember({"critical", "sigma", "bounds", "synthesis1d"}));
    curves->add_option("--a", curve_a, "Decrement for the sigma curve");
    curves->add_option("--n", n_points, "Number of samples (critical, synthesis1d)");
    curves->add_option("--c-lo", c_lo, "Smallest nominal parameter (critical)");
    curves->add_option("--c-hi", c_hi, "Largest nominal parameter (critical)");
    curves->add_option("--step", step, "Grid step (bounds)");
    curves->add_option("--full-step-max", full_step_max, "Full-step cutoff (bounds)");
    add_out(curves);

    std::string policy;
    CLI::App* tune = app.add_subcommand("tune", "Maximize lambda_bar - lambda_low (JSON)");
    tune->add_option("--policy", policy, "full | optimal | classical-full | classical-damped")
        ->required()
        ->check(CLI::IsMember({"full", "optimal", "classical-full", "classical-damped"}));
    add_out(tune);

    std::string kind = "sdp", setup_name = "tight-optimal", problem_out;
    std::uint64_t seed = 7;
    std::optional<std::size_t> size_n, size_m;
    double tau0 = 1.0, tau_ratio = 1e4;
    std::size_t max_iters = 100000;
    bool approx_gamma = false, no_bounds = false;
    CLI::App* solve = app.add_subcommand("solve", "Short-step path-following on a generated problem");
    solve->add_option("--kind", kind, "lp | sdp")->check(CLI::IsMember({"lp", "sdp"}));
    solve->add_option("--seed", seed, "Generator seed");
    solve->add_option("--n", size_n, "LP variables or SDP matrix order (default 20)");
    solve->add_option("--m", size_m, "LP constraints or SDP equality constraints (default 40)");
    solve->add_option("--setup", setup_name, "Parameter setup")->check(CLI::IsMember(pf::setup_names()));
    solve->add_option("--tau0", tau0, "Initial path parameter");
    solve->add_option("--tau-ratio", tau_ratio, "Stop once tau / tau0 reaches this ratio");
    solve->add_option("--max-iters", max_iters, "Iteration cap");
    solve->add_flag("--approx-gamma", approx_gamma, "Use the closed-form approximation of the optimal damping");
    solve->add_flag("--no-bounds", no_bounds, "Skip the per-iteration bound evaluation");
    solve->add_option("--problem-out", problem_out, "Write the generated problem as JSON to this file");
    add_format(solve);
    add_out(solve);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    auto emit = [&](const std::string& text) -> int {
        if (out_path.empty()) {
            out << text;
            return kOk;
        }
        std::ofstream f(out_path, std::ios::binary);
        f << text;
        if (!f) {
            report(err, "io", "cannot write " + out_path);
            return kUsage;
        }
        return kOk;
    };

    try {
        if (*bound) {
            validate(query);
            return emit(to_json(query, hamiltonian::solve_bvp(query), with_trajectory).dump(2) + "\n");
        }
        if (*table) {
            const std::vector<double> grid = grid_text ? parse_grid(*grid_text) : default_table_grid();
            const auto rows = make_table(grid, full_step_max);
            return emit(format == "json" ? table_json(rows).dump(2) + "\n" : to_string(table_csv(rows)));
        }
        if (*curves) {
            if (which == "critical") return emit(to_string(critical_curve_csv(n_points, c_lo, c_hi)));
            if (which == "sigma") return emit(to_string(sigma_csv(curve_a)));
            if (which == "synthesis1d") return emit(to_string(synthesis1d_csv(n_points)));
            if (!(step > 0.0 && step < 0.5)) throw DomainError("curves: step must lie in (0, 0.5)");
            // i / (1 / step) keeps decimal steps on their exact doubles (19 / 20 == 0.95)
            const double inv = 1.0 / step;
            const double div = std::abs(inv - std::round(inv)) < 1e-9 ? std::round(inv) : inv;
            std::vector<double> grid;
            for (int i = 1; i / div < 1.0 - 1e-12; ++i) grid.push_back(i / div);
            return emit(to_string(table_csv(make_table(grid, full_step_max))));
        }
        if (*tune) {
            pf::TunerResult r;
            if (policy == "full")
                r = pf::tune(pf::StepPolicy::FullStep);
            else if (policy == "optimal")
                r = pf::tune(pf::StepPolicy::OptimalDamping);
            else
                r = pf::tune_classical(policy == "classical-full" ? pf::ClassicalVariant::Full : pf::ClassicalVariant::Damped);
            return emit(to_json(r).dump(2) + "\n");
        }
        if (*solve) {
            const pf::ProblemKind pk = kind == "lp" ? pf::ProblemKind::LogBarrierLP : pf::ProblemKind::LogDetSDP;
            const pf::Problem p = pf::make_problem(pk, seed, {size_n.value_or(20), size_m.value_or(40)}, tau0);
            if (!problem_out.empty()) {
                std::ofstream f(problem_out, std::ios::binary);
                f << to_json(p).dump() << '\n';
                if (!f) {
                    report(err, "io", "cannot write " + problem_out);
                    return kUsage;
                }
            }
            pf::PathFollowConfig cfg = pf::setup(setup_name);
            cfg.tau0 = p.tau0;
            cfg.tau_max = tau_ratio * p.tau0;
            cfg.max_iters = max_iters;
            cfg.approx_gamma = approx_gamma;
            cfg.compute_bounds = !no_bounds;
            const pf::PathFollowRun run = pf::run(*p.barrier, p.c, p.x0, cfg);
            if (format == "json") {
                json j = to_json(run);
                j["setup"] = setup_name;
                j["problem"] = {{"kind", kind}, {"seed", seed}, {"n", p.size.n}, {"m", p.size.m}, {"attempts", p.attempts}};
                return emit(j.dump(2) + "\n");
            }
            return emit(to_string(log_csv(run)));
        }
    } catch (const DomainError& e) {
        report(err, "domain", e.what());
        return kUsage;
    } catch (const ConvergenceError& e) {
        err << json{{"error", "convergence"},
                    {"message", e.what()},
                    {"residual", number(e.residual())},
                    {"last_r", number(e.last_r())},
                    {"last_theta", number(e.last_theta())}}
                   .dump()
            << '\n';
        return kNumeric;
    } catch (const std::exception& e) {
        report(err, "numeric", e.what());
        return kNumeric;
    }
    return kUsage;
}

}  // namespace scnewton::cli_io
