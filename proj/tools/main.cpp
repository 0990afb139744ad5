// Command-line front end: evaluate the operator, dump moment tables, and run
// the named experiments with reproducible configuration.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hybridop/analysis.hpp"
#include "hybridop/moments.hpp"
#include "hybridop/operator_eval.hpp"
#include "hybridop/parallel.hpp"
#include "hybridop/smoothing.hpp"

using namespace hybridop;

namespace {

struct CommonOpts {
    double n = 10.0;
    double c = 1.0;
    std::string fn = "expneg";
    std::string out;
    std::string format = "csv";
    int threads = 0;  // 0 = logical cores
    unsigned seed = 1;
    std::vector<double> sweep{25, 50, 100, 200, 400, 800};
};

void add_common(CLI::App* cmd, CommonOpts& o, bool wants_fn = true) {
    cmd->add_option("--n", o.n, "parameter n (>= 1)");
    cmd->add_option("--c", o.c, "parameter c in (0, 1]");
    if (wants_fn)
        cmd->add_option("--fn", o.fn,
                        "bundled function name (t0..t6, expneg, expnegsin, kink32, inv1p, "
                        "exp:<theta>, poly:c0,c1,...)");
    cmd->add_option("--out", o.out, "report file path (stdout summary either way)");
    cmd->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--threads", o.threads, "worker threads (0 = logical cores)");
    cmd->add_option("--seed", o.seed, "seed for randomized sampling");
    cmd->add_option("--sweep", o.sweep, "n sweep for experiments")->delimiter(',');
}

// Experiments record their own substantive parameters; only add what is
// missing so the echoed configuration stays duplicate-free.
void put_meta(ExperimentReport& rep, const std::string& key, const std::string& value) {
    if (!rep.find_meta(key)) rep.add_meta(key, value);
}

// Records the effective configuration so a written report can be re-run.
void echo_config(ExperimentReport& rep, const CLI::App* cmd, const CommonOpts& o) {
    put_meta(rep, "command", cmd->get_name());
    put_meta(rep, "n", format_double(o.n));
    put_meta(rep, "c", format_double(o.c));
    put_meta(rep, "fn", o.fn);
    put_meta(rep, "seed", std::to_string(o.seed));
    std::ostringstream sw;
    for (size_t i = 0; i < o.sweep.size(); ++i) sw << (i ? "," : "") << format_double(o.sweep[i]);
    put_meta(rep, "sweep", sw.str());
}

int emit(const ExperimentReport& rep, const CommonOpts& o) {
    std::cout << rep.summary() << "\n";
    if (!o.out.empty()) {
        std::ofstream os(o.out, std::ios::binary);
        if (!os) {
            std::cerr << "error: cannot open " << o.out << "\n";
            return 1;
        }
        if (o.format == "json")
            rep.write_json(os);
        else
            rep.write_csv(os);
    } else if (o.format == "json") {
        rep.write_json(std::cout);
    }
    return rep.verdict == Verdict::fail ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hybrid Baskakov-Szasz operator toolbox"};
    app.require_subcommand(1);
    // key=value file with one [subcommand] section per command; explicit
    // command-line flags win on conflict
    app.set_config("--config", "", "config file (give before the subcommand)");
    app.allow_config_extras(CLI::config_extras_mode::ignore_all);

    CommonOpts o;
    double x = 1.0;
    int r = 0, s = 0, max_order = 4;
    bool central = false;
    double delta = 0.5, gamma = 0.0;
    double a = 0.05, b = 3.0, a1 = 0.5, b1 = 2.5;
    std::vector<double> h_grid{0.2, 0.1, 0.05, 0.025};
    std::vector<double> x_grid{0.5, 1.0, 2.0};

    auto* eval = app.add_subcommand("eval", "evaluate L or its x-derivative at one point");
    add_common(eval, o);
    eval->add_option("--x", x, "evaluation point");
    eval->add_option("--r", r, "x-derivative order (0 = plain operator)");

    auto* moments = app.add_subcommand("moments", "moment table at sampled x");
    add_common(moments, o, false);
    moments->add_option("--max", max_order, "highest moment order");
    moments->add_flag("--central", central, "central moments instead of raw");

    auto* vor = app.add_subcommand("voronovskaja", "asymptotic-expansion experiment");
    add_common(vor, o);
    vor->add_option("--x", x, "evaluation point");
    vor->add_option("--s", s, "derivative order of the expansion");

    auto* conv = app.add_subcommand("converge", "simultaneous convergence over an x grid");
    add_common(conv, o);
    conv->add_option("--s", s, "derivative order");
    conv->add_option("--x-grid", x_grid, "x grid")->delimiter(',');

    auto* bound = app.add_subcommand("bound-check", "pointwise modulus bound over an (n,x) grid");
    add_common(bound, o);
    bound->add_option("--r", r, "derivative order");
    bound->add_option("--x-grid", x_grid, "x grid")->delimiter(',');

    auto* rate = app.add_subcommand("global-rate", "sup-norm decay on the inner interval");
    add_common(rate, o);
    rate->add_option("--r", r, "derivative order");
    rate->add_option("--a", a, "outer interval left end");
    rate->add_option("--b", b, "outer interval right end");
    rate->add_option("--a1", a1, "inner interval left end");
    rate->add_option("--b1", b1, "inner interval right end");

    auto* stek = app.add_subcommand("steklov", "smoothing-mean property table over an h grid");
    add_common(stek, o);
    stek->add_option("--s", s, "mean order (1..3)")->default_val(2);
    stek->add_option("--h-grid", h_grid, "h grid")->delimiter(',');
    stek->add_option("--a", a, "outer interval left end");
    stek->add_option("--b", b, "outer interval right end");
    stek->add_option("--a1", a1, "inner interval left end");
    stek->add_option("--b1", b1, "inner interval right end");

    auto* tails = app.add_subcommand("tails", "off-diagonal mass decay sweep");
    add_common(tails, o, false);
    tails->add_option("--x", x, "center point");
    tails->add_option("--delta", delta, "exclusion radius");
    tails->add_option("--gamma", gamma, "exponential weight rate");

    CLI11_PARSE(app, argc, argv);

    try {
        set_worker_count(o.threads);
        OperatorParams params(o.n, o.c);

        if (eval->parsed()) {
            FunctionSpec f = functions::by_name(o.fn);
            OperatorValue v = r == 0 ? apply(f, x, params) : derivative_of_operator(f, r, x, params);
            std::printf("%.17g +- %.3g (truncation %.3g)\n", v.value, v.quadrature_error,
                        v.truncation_mass_dropped);
            if (!o.out.empty()) {
                ExperimentReport rep;
                rep.name = "eval";
                echo_config(rep, eval, o);
                put_meta(rep, "x", format_double(x));
                put_meta(rep, "r", std::to_string(r));
                rep.rows.push_back({"value", o.n, v.value, v.value, v.quadrature_error, 0.0});
                return emit(rep, o);
            }
            return 0;
        }

        if (moments->parsed()) {
            ExperimentReport rep;
            rep.name = central ? "central-moments" : "raw-moments";
            echo_config(rep, moments, o);
            put_meta(rep, "max", std::to_string(max_order));
            put_meta(rep, "central", central ? "1" : "0");
            std::mt19937 rng(o.seed);
            std::uniform_real_distribution<double> ux(0.0, 3.0);
            std::vector<double> xs{0.0, 0.5, 1.0, 2.0};
            for (int i = 0; i < 4; ++i) xs.push_back(ux(rng));
            auto mus = central ? central_moment_recurrence(params, max_order)
                               : std::vector<MomentPolynomial>{};
            for (int m = 0; m <= max_order; ++m) {
                const MomentPolynomial poly =
                    central ? mus[static_cast<size_t>(m)] : raw_moment_closed(params, m);
                // cross-reference: the independently assembled binomial route
                const MomentPolynomial check =
                    central ? central_from_raw(params, m) : raw_moment_closed(params, m);
                for (double xv : xs) {
                    const double obs = poly.poly(xv);
                    const double ref = check.poly(xv);
                    const double ae = std::fabs(obs - ref);
                    rep.rows.push_back({"m=" + std::to_string(m), o.n, obs, ref, ae,
                                        ae / std::max(std::fabs(ref), 1e-300)});
                }
            }
            return emit(rep, o);
        }

        if (vor->parsed()) {
            FunctionSpec f = functions::by_name(o.fn);
            auto rep = s == 0 ? voronovskaja_s0_remark(f, x, o.c, o.sweep)
                              : voronovskaja_experiment(f, s, x, o.c, o.sweep);
            echo_config(rep, vor, o);
            put_meta(rep, "x", format_double(x));
            put_meta(rep, "s", std::to_string(s));
            if (const std::string* v = rep.find_meta("supported_variant"))
                std::cout << "supports " << *v << " coefficient\n";
            return emit(rep, o);
        }

        if (conv->parsed()) {
            FunctionSpec f = functions::by_name(o.fn);
            auto rep = simultaneous_convergence_experiment(f, s, x_grid, o.sweep, o.c);
            echo_config(rep, conv, o);
            put_meta(rep, "s", std::to_string(s));
            return emit(rep, o);
        }

        if (bound->parsed()) {
            FunctionSpec f = functions::by_name(o.fn);
            auto rep = pointwise_bound_check(f, r, o.sweep, x_grid, o.c);
            echo_config(rep, bound, o);
            put_meta(rep, "r", std::to_string(r));
            return emit(rep, o);
        }

        if (rate->parsed()) {
            FunctionSpec f = functions::by_name(o.fn);
            auto rep = global_rate_experiment(f, r, IntervalPair(a, b, a1, b1), o.c, o.sweep);
            echo_config(rep, rate, o);
            put_meta(rep, "r", std::to_string(r));
            return emit(rep, o);
        }

        if (stek->parsed()) {
            FunctionSpec f = functions::by_name(o.fn);
            auto rep = steklov_property_report(f, s, IntervalPair(a, b, a1, b1), h_grid);
            echo_config(rep, stek, o);
            put_meta(rep, "s", std::to_string(s));
            return emit(rep, o);
        }

        if (tails->parsed()) {
            auto rep = tail_decay_experiment(x, delta, gamma, o.sweep, o.c);
            echo_config(rep, tails, o);
            put_meta(rep, "x", format_double(x));
            put_meta(rep, "delta", format_double(delta));
            put_meta(rep, "gamma", format_double(gamma));
            return emit(rep, o);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
