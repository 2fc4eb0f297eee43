#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "maxbv/constructions.hpp"
#include "maxbv/io.hpp"
#include "maxbv/suites.hpp"
#include "maxbv/variation.hpp"
#include "maxbv/weak_type.hpp"

namespace maxbv::cli {

namespace {

struct Options {
    std::string op = "cone";
    std::string alpha = "1";
    std::string truncation;
    std::string lipschitz;
    std::string side = "right";
    std::string x;
    std::string input;
    std::string window;
    std::string tol;
    std::string seed;
    std::string out;
    std::string format = "table";
    std::string suite = "all";
    bool quick = false;
    bool inject_fault = false;
    long long n = 0;
    std::string beta = "3/4";
    int bumps = 200;
    std::string alphas = "1/5,1/4,1/3,2/5,1/2,3/4,1,2";
    std::string lambda;
    std::string grid_step;
    int level = 10;
};

Rational rational_flag(const std::string& text, const char* flag) {
    try {
        return Rational::parse(text);
    } catch (const ParseError& e) {
        throw InputError(std::string(flag) + ": " + e.what());
    }
}

// P/Q, a plain decimal, or a decimal with an exponent such as 1e-6.
Rational tolerance_flag(const std::string& text) {
    const auto e = text.find_first_of("eE");
    if (e == std::string::npos) return rational_flag(text, "--tol");
    Rational value = rational_flag(text.substr(0, e), "--tol");
    int exponent = 0;
    try {
        std::size_t used = 0;
        exponent = std::stoi(text.substr(e + 1), &used);
        if (used != text.size() - e - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw InputError("--tol: malformed exponent in '" + text + "'");
    }
    for (int i = 0; i < std::abs(exponent); ++i) value = exponent > 0 ? value * 10 : value / 10;
    if (value.sign() <= 0) throw InputError("--tol: must be positive");
    return value;
}

std::uint64_t seed_of(const Options& o) {
    std::string text = o.seed;
    if (text.empty()) {
        if (const char* env = std::getenv("MAXBV_SEED")) text = env;
    }
    if (text.empty()) return 42;
    try {
        if (text.front() == '-' || text.front() == '+') throw std::invalid_argument("sign");
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw InputError("--seed: expected a nonnegative integer, got '" + text + "'");
    }
}

StepFunction input_function(const Options& o) {
    if (o.input.empty()) throw InputError("missing --input FILE");
    return load_step_function(o.input);
}

PiecewiseLinearFunction radius_function(const Options& o, std::ostream& err) {
    if (o.lipschitz.empty()) throw InputError("--operator " + o.op + " needs --lipschitz FILE");
    PiecewiseLinearFunction n = load_radius(o.lipschitz);
    err << "# Lipschitz constant of N: " << n.lipschitz_constant() << "\n";
    return n;
}

RegionShape operator_shape(const Options& o, std::ostream& err) {
    const Rational alpha = rational_flag(o.alpha, "--alpha");
    if (alpha.sign() < 0) throw InputError("--alpha: must be nonnegative");
    const auto radius = [&o] {
        if (o.truncation.empty()) throw InputError("--operator " + o.op + " needs --truncation P/Q");
        const Rational r = rational_flag(o.truncation, "--truncation");
        if (r.sign() <= 0) throw InputError("--truncation: must be positive");
        return r;
    };
    if (o.op == "cone") return Cone{alpha};
    if (o.op == "truncated") return TruncatedCone{alpha, radius()};
    if (o.op == "diamond") return Diamond{radius()};
    if (o.op == "one-sided") {
        if (o.side != "left" && o.side != "right") throw InputError("--side: expected left or right");
        return OneSided{radius(), o.side == "left" ? Side::Left : Side::Right};
    }
    if (o.op == "lipschitz") return LipschitzCone{Rational(1), radius_function(o, err)};
    if (o.op == "mixed") {
        if (alpha > 1) throw InputError("--alpha: the mixed operator needs alpha in [0, 1]");
        return LipschitzCone{alpha, radius_function(o, err)};
    }
    throw InputError("--operator: unknown operator '" + o.op + "'");
}

Window window_of(const Options& o, const Window& fallback) {
    if (o.window.empty()) return fallback;
    const auto colon = o.window.find(':');
    if (colon == std::string::npos) throw InputError("--window: expected LO:HI");
    const Window w{rational_flag(o.window.substr(0, colon), "--window"),
                   rational_flag(o.window.substr(colon + 1), "--window")};
    if (!(w.lo < w.hi)) throw InputError("--window: need LO < HI");
    return w;
}

void emit(const Options& o, std::ostream& out, const std::vector<Column>& schema, const std::vector<Row>& rows) {
    if (o.format == "csv") emit_csv(out, schema, rows);
    else emit_table(out, schema, rows);
}

std::string witness_text(const Witness& w) {
    if (const auto* iv = std::get_if<IntervalWitness>(&w)) return "(" + iv->a.str() + ", " + iv->b.str() + ")";
    if (std::holds_alternative<NormalizationFloor>(w)) return "floor";
    return "asymptotic";
}

Cell optional_cell(const std::optional<Rational>& r) {
    if (r) return *r;
    return std::monostate{};
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
    const StepFunction f = input_function(o);
    if (o.x.empty()) throw InputError("missing --x P/Q");
    const Rational x = rational_flag(o.x, "--x");
    const MaximalOperator op(f, operator_shape(o, err));
    const EvalResult r = op.evaluate(x);
    emit(o, out, {{"x", ColumnKind::Exact}, {"value", ColumnKind::Exact}, {"witness", ColumnKind::Text}},
         {{x, r.value, witness_text(r.witness)}});
    return kSuccess;
}

int cmd_variation(const Options& o, std::ostream& out, std::ostream& err) {
    const StepFunction f = input_function(o);
    const MaximalOperator op(f, operator_shape(o, err));
    const Window w = window_of(o, default_window(f));
    const Rational tol = o.tol.empty() ? dyadic(30) : tolerance_flag(o.tol);
    const auto comps = detachment_set(op, w, tol);
    const auto partition = variation_partition(op, w, comps, o.level);
    const Rational lower = variation_lower_bound([&op](const Rational& x) { return op(x); }, partition);
    emit(o, out,
         {{"variation_f", ColumnKind::Exact}, {"variation_Mf_partition", ColumnKind::Exact},
          {"partition_size", ColumnKind::Integer}},
         {{f.total_variation(), lower, static_cast<long long>(partition.size())}});
    return kSuccess;
}

VariationOptions variation_options(const Options& o) {
    VariationOptions v;
    if (!o.tol.empty()) v.tol = tolerance_flag(o.tol);
    return v;
}

int cmd_maximal_variation(const Options& o, std::ostream& out, std::ostream& err) {
    const StepFunction f = input_function(o);
    const MaximalOperator op(f, operator_shape(o, err));
    const VariationReport r = maximal_variation(op, window_of(o, default_window(f)), variation_options(o));
    emit(o, out,
         {{"variation_f", ColumnKind::Exact},
          {"lower_bound", ColumnKind::Exact},
          {"structural_value", ColumnKind::Exact},
          {"tolerance", ColumnKind::Exact},
          {"partition_size", ColumnKind::Integer},
          {"converged", ColumnKind::Text},
          {"components", ColumnKind::Integer}},
         {{f.total_variation(), r.lower_bound, optional_cell(r.structural_value), r.tolerance,
           static_cast<long long>(r.partition_size), std::string(r.converged ? "yes" : "no"),
           static_cast<long long>(r.components.size())}});
    return kSuccess;
}

int cmd_detachment(const Options& o, std::ostream& out, std::ostream& err) {
    const StepFunction f = input_function(o);
    const MaximalOperator op(f, operator_shape(o, err));
    const Rational tol = o.tol.empty() ? kDefaultLocationTol : tolerance_flag(o.tol);
    std::vector<Row> rows;
    for (auto c : detachment_set(op, window_of(o, default_window(f)), tol)) {
        c = classify_shape(op, std::move(c));
        rows.push_back({c.lo, c.hi, std::string(c.lo_clipped ? "yes" : "no"), std::string(c.hi_clipped ? "yes" : "no"),
                        std::string(shape_name(*c.shape)), optional_cell(c.vertex), c.lo_value, c.hi_value});
    }
    emit(o, out,
         {{"lo", ColumnKind::Exact},
          {"hi", ColumnKind::Exact},
          {"lo_clipped", ColumnKind::Text},
          {"hi_clipped", ColumnKind::Text},
          {"shape", ColumnKind::Text},
          {"vertex", ColumnKind::Exact},
          {"value_lo", ColumnKind::Exact},
          {"value_hi", ColumnKind::Exact}},
         rows);
    return kSuccess;
}

int cmd_cone_spike(const Options& o, std::ostream& out) {
    const Rational alpha = rational_flag(o.alpha, "--alpha");
    if (alpha.sign() < 0) throw InputError("--alpha: must be nonnegative");
    std::vector<long long> ns{10, 100, 1000};
    if (o.n != 0) {
        if (o.n < 2) throw InputError("--n: need n >= 2");
        ns = {o.n};
    }
    std::vector<Row> rows;
    for (const long long n : ns) {
        const SpikeProfile p = spike_profile(alpha, n);
        rows.push_back({n, p.at_third, p.at_half, p.at_two_thirds, std::string(p.local_max() ? "yes" : "no")});
    }
    emit(o, out,
         {{"n", ColumnKind::Integer},
          {"value_third", ColumnKind::Exact},
          {"value_half", ColumnKind::Exact},
          {"value_two_thirds", ColumnKind::Exact},
          {"local_max", ColumnKind::Text}},
         rows);
    return kSuccess;
}

int cmd_lipschitz_counterexample(const Options& o, std::ostream& out) {
    const Rational beta = rational_flag(o.beta, "--beta");
    if (!(beta > Rational(1, 2))) throw InputError("--beta: must exceed 1/2");
    if (o.bumps < 1) throw InputError("--bumps: need at least one bump");
    std::vector<Row> rows;
    for (const auto& r : divergence_certificate(beta, o.bumps)) {
        rows.push_back({static_cast<long long>(r.k), r.x_prime, r.value, r.partial_sum});
    }
    emit(o, out,
         {{"K", ColumnKind::Integer},
          {"x_prime", ColumnKind::Exact},
          {"value", ColumnKind::Exact},
          {"S", ColumnKind::Exact}},
         rows);
    return kSuccess;
}

std::vector<Rational> alpha_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        const Rational a = rational_flag(item, "--alphas");
        if (a.sign() < 0) throw InputError("--alphas: entries must be nonnegative");
        out.push_back(a);
    }
    if (out.empty()) throw InputError("--alphas: empty list");
    return out;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    const StepFunction f = input_function(o);
    const Rational tv = f.total_variation();
    if (tv.is_zero()) throw InputError("sweep: f must not be constant");
    const Window w = window_of(o, default_window(f));
    std::vector<Row> rows;
    for (const auto& alpha : alpha_list(o.alphas)) {
        const VariationReport r = maximal_variation(f, Cone{alpha}, w, variation_options(o));
        rows.push_back({alpha, tv, r.lower_bound, optional_cell(r.structural_value), r.lower_bound / tv});
    }
    emit(o, out,
         {{"alpha", ColumnKind::Exact},
          {"variation_f", ColumnKind::Exact},
          {"variation_Mf_lower", ColumnKind::Exact},
          {"variation_Mf_struct", ColumnKind::Exact},
          {"ratio", ColumnKind::Exact}},
         rows);
    return kSuccess;
}

int cmd_weaktype(const Options& o, std::ostream& out) {
    const StepFunction f = input_function(o);
    const Rational alpha = rational_flag(o.alpha, "--alpha");
    if (alpha.sign() < 0) throw InputError("--alpha: must be nonnegative");
    if (o.lambda.empty()) throw InputError("missing --lambda P/Q");
    const Rational lambda = rational_flag(o.lambda, "--lambda");
    if (lambda.sign() <= 0) throw InputError("--lambda: must be positive");
    if (!f.l1_norm().is_finite() || f.l1_norm().value().is_zero()) {
        throw InputError("weaktype: f needs a finite nonzero L1 norm");
    }
    const Window w = window_of(o, superlevel_window(f, alpha, lambda));
    const Rational step = o.grid_step.empty() ? (w.hi - w.lo) / 512 : rational_flag(o.grid_step, "--grid-step");
    const Rational tol = o.tol.empty() ? dyadic(30) : tolerance_flag(o.tol);
    const MaximalOperator op(f, Cone{alpha});
    const Rational measure = superlevel_measure_estimate(op, lambda, w, step, tol);
    emit(o, out,
         {{"alpha", ColumnKind::Exact},
          {"lambda", ColumnKind::Exact},
          {"measure", ColumnKind::Exact},
          {"ratio", ColumnKind::Exact}},
         {{alpha, lambda, measure, lambda * measure / f.l1_norm().value()}});
    return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
    SuiteConfig config;
    config.seed = seed_of(o);
    config.quick = o.quick;
    config.inject_fault = o.inject_fault;
    std::vector<std::string> ids;
    if (o.suite == "all") {
        for (const auto& s : suite_list()) ids.push_back(s.id);
    } else {
        std::stringstream ss(o.suite);
        for (std::string id; std::getline(ss, id, ',');) {
            bool known = false;
            for (const auto& s : suite_list()) known = known || s.id == id;
            if (!known) throw InputError("--suite: unknown suite '" + id + "'");
            ids.push_back(id);
        }
    }
    std::vector<Row> rows;
    bool all = true;
    for (const auto& id : ids) {
        const SuiteResult r = run_suite(id, config);
        all = all && r.passed;
        rows.push_back({r.id, std::string(r.passed ? "pass" : "fail"), r.detail});
    }
    emit(o, out, {{"suite", ColumnKind::Text}, {"result", ColumnKind::Text}, {"detail", ColumnKind::Text}}, rows);
    return all ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact evaluation of maximal operators on step functions", "maxbv"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--operator", o.op, "cone|truncated|diamond|one-sided|lipschitz|mixed")
        ->check(CLI::IsMember({"cone", "truncated", "diamond", "one-sided", "lipschitz", "mixed"}));
    app.add_option("--alpha", o.alpha, "aperture P/Q");
    app.add_option("--truncation", o.truncation, "radius R (or reach A for one-sided)");
    app.add_option("--lipschitz", o.lipschitz, "truncation radius file N");
    app.add_option("--side", o.side, "left|right for one-sided");
    app.add_option("--x", o.x, "evaluation point");
    app.add_option("--input", o.input, "step function file");
    app.add_option("--window", o.window, "LO:HI");
    app.add_option("--tol", o.tol, "tolerance, P/Q or decimal");
    app.add_option("--seed", o.seed, "seed (overrides MAXBV_SEED)");
    app.add_option("--out", o.out, "write output to FILE");
    app.add_option("--format", o.format, "table|csv")->check(CLI::IsMember({"table", "csv"}));

    CLI::App* eval = app.add_subcommand("eval", "evaluate the operator at --x");
    CLI::App* variation = app.add_subcommand("variation", "partition lower bound for V(M f)");
    variation->add_option("--level", o.level, "uniform grid of 2^level parts")->check(CLI::Range(0, 20));
    CLI::App* maxvar = app.add_subcommand("maximal-variation", "structural and certified variation of M f");
    CLI::App* detach = app.add_subcommand("detachment", "detachment components and their shapes");
    CLI::App* counter = app.add_subcommand("counterexample", "explicit constructions");
    counter->require_subcommand(1);
    CLI::App* spike = counter->add_subcommand("cone-spike", "spike pair profile at 1/3, 1/2, 2/3");
    spike->add_option("--n", o.n, "spike height (default: search 10, 100, 1000)");
    CLI::App* lip = counter->add_subcommand("lipschitz", "divergence certificate for a Lipschitz radius");
    lip->add_option("--beta", o.beta, "Lipschitz constant of N, > 1/2");
    lip->add_option("--bumps", o.bumps, "number of bumps");
    CLI::App* sweep = app.add_subcommand("sweep", "variation ratio across apertures");
    sweep->add_option("--alphas", o.alphas, "comma-separated apertures");
    CLI::App* weak = app.add_subcommand("weaktype", "weak-type ratio at --lambda");
    weak->add_option("--lambda", o.lambda, "level");
    weak->add_option("--grid-step", o.grid_step, "scan step");
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", o.suite, "all or a comma-separated list of suite ids");
    verify->add_flag("--quick", o.quick, "a tenth of the cases");
    verify->add_flag("--inject-fault", o.inject_fault, "corrupt compared values to exercise the failure path");
    for (CLI::App* sub : {eval, variation, maxvar, detach, counter, spike, lip, sweep, weak, verify}) sub->fallthrough();

    std::vector<const char*> argv{"maxbv"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "maxbv: " << e.what() << "\n";
        return kInputError;
    }

    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out, std::ios::binary);
        if (!file) {
            err << "maxbv: cannot open " << o.out << " for writing\n";
            return kInputError;
        }
    }
    std::ostream& sink = o.out.empty() ? out : file;

    try {
        if (*eval) return cmd_eval(o, sink, err);
        if (*variation) return cmd_variation(o, sink, err);
        if (*maxvar) return cmd_maximal_variation(o, sink, err);
        if (*detach) return cmd_detachment(o, sink, err);
        if (*spike) return cmd_cone_spike(o, sink);
        if (*lip) return cmd_lipschitz_counterexample(o, sink);
        if (*sweep) return cmd_sweep(o, sink);
        if (*weak) return cmd_weaktype(o, sink);
        if (*verify) return cmd_verify(o, sink);
    } catch (const InputError& e) {
        err << "maxbv: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "maxbv: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "maxbv: " << e.what() << "\n";
        return kVerificationFailure;
    }
    return kInputError;
}

}  // namespace maxbv::cli
