// Command-line surface for the ladder-Hamiltonian strength toolkit. Every
// subcommand writes exactly one machine-readable table (CSV or JSON) with
// deterministic bytes. Exit codes: 0 success, 2 invalid arguments, 3
// numerical failure.

#include "ladder/io.hpp"
#include "ladder/model.hpp"
#include "ladder/rspt.hpp"
#include "ladder/spectral.hpp"
#include "ladder/strength.hpp"
#include "ladder/useries.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace ladder;

struct common_opts {
    std::string model = "tri";
    std::vector<int> offsets;  // custom model only
    int dim = 11;
    double E = 1.0;
    double v = 0.1;
    std::string output;        // empty: stdout
    std::string format = "csv";
};

void add_model_flags(CLI::App* cmd, common_opts& o) {
    cmd->add_option("--model", o.model, "tri|penta|allv|custom")
        ->check(CLI::IsMember({"tri", "penta", "allv", "custom"}));
    cmd->add_option("--offsets", o.offsets, "band offsets, custom model only (e.g. 1,2)")
        ->delimiter(',');
    cmd->add_option("--dim", o.dim, "number of levels");
    cmd->add_option("--E", o.E, "level spacing in MeV");
    cmd->add_option("--v", o.v, "band coupling in MeV");
}

void add_output_flags(CLI::App* cmd, common_opts& o) {
    cmd->add_option("--output", o.output, "output path (default: stdout)");
    cmd->add_option("--format", o.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
}

model_spec make_spec(const common_opts& o) {
    model_spec spec;
    if (o.model == "custom") {
        if (o.offsets.empty())
            throw std::invalid_argument("--model custom requires --offsets");
        spec = model_spec::custom(o.offsets, o.dim, o.E, o.v);
    } else {
        if (!o.offsets.empty())
            throw std::invalid_argument("--offsets is only valid with --model custom");
        if (o.model == "tri") spec = model_spec::tri(o.dim, o.E, o.v);
        else if (o.model == "penta") spec = model_spec::penta(o.dim, o.E, o.v);
        else spec = model_spec::allv(o.dim, o.E, o.v);
    }
    spec.validate();
    return spec;
}

transition_kind parse_operator(const std::string& s) {
    if (s == "t1" || s == "T1") return transition_kind::T1;
    if (s == "t2" || s == "T2") return transition_kind::T2;
    throw std::invalid_argument("operator must be t1 or t2");
}

void write_output(const common_opts& o, const std::string& bytes) {
    if (o.output.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + o.output);
    f << bytes;
}

void emit_table(const common_opts& o, const table& t) {
    write_output(o, o.format == "json" ? emit_json(t) : emit_csv(t));
}

cell m_cell(const std::optional<int>& power) {
    if (power) return static_cast<long long>(*power);
    return std::string("none");
}

table strength_table(const model_spec& spec, const std::string& model_name,
                     transition_kind kind, int from, const std::vector<int>& targets) {
    table t;
    t.columns = {"model", "operator", "dim", "E", "v", "from", "to",
                 "e_star", "O", "O2", "lnO2"};
    for (int to : targets) {
        strength_record rec = strength_numeric(spec, kind, from, to);
        t.rows.push_back({model_name, std::string(to_string(kind)),
                          static_cast<long long>(spec.dim), spec.spacing_E,
                          spec.coupling_v, static_cast<long long>(from),
                          static_cast<long long>(to), rec.e_star, rec.amplitude_O,
                          rec.strength, rec.ln_strength});
    }
    return t;
}

std::vector<int> all_targets(int dim, int from) {
    std::vector<int> out;
    for (int k = 0; k < dim; ++k)
        if (k != from) out.push_back(k);
    return out;
}

// --- subcommands ---

void run_spectrum(const common_opts& o) {
    model_spec spec = make_spec(o);
    eigen_system es = decompose(build_hamiltonian(spec));
    table t;
    t.columns = {"model", "dim", "E", "v", "index", "eigenvalue"};
    for (int k = 0; k < spec.dim; ++k)
        t.rows.push_back({o.model, static_cast<long long>(spec.dim), spec.spacing_E,
                          spec.coupling_v, static_cast<long long>(k),
                          es.eigenvalues[static_cast<size_t>(k)]});
    emit_table(o, t);
}

void run_ground(const common_opts& o, const std::string& method, int order) {
    model_spec spec = make_spec(o);
    table t;
    t.columns = {"model", "dim", "E", "v", "method", "order", "energy", "index",
                 "amplitude"};
    double energy = 0.0;
    std::vector<double> amps;
    long long order_cell = 0;
    if (method == "numeric") {
        auto [e, a] = ground_state(build_hamiltonian(spec));
        energy = e;
        amps = a;
    } else {  // series: intermediate normalization, reference component 1
        series_state st = rs_series(spec, 0, order);
        const double u = spec.u();
        energy = spec.spacing_E * st.energy.eval(u);
        for (const auto& a : st.amplitudes) amps.push_back(a.eval(u));
        order_cell = order;
    }
    for (int i = 0; i < spec.dim; ++i)
        t.rows.push_back({o.model, static_cast<long long>(spec.dim), spec.spacing_E,
                          spec.coupling_v, method, order_cell, energy,
                          static_cast<long long>(i), amps[static_cast<size_t>(i)]});
    emit_table(o, t);
}

void run_series(const common_opts& o, int ref, int order) {
    model_spec spec = make_spec(o);
    series_state st = rs_series(spec, ref, order);
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["ref"] = st.ref;
        nlohmann::ordered_json energy = nlohmann::ordered_json::array();
        for (int k = 0; k <= order; ++k) energy.push_back(st.energy[k].to_string());
        j["energy"] = std::move(energy);
        nlohmann::ordered_json amps = nlohmann::ordered_json::array();
        for (const auto& a : st.amplitudes) {
            nlohmann::ordered_json one = nlohmann::ordered_json::array();
            for (int k = 0; k <= order; ++k) one.push_back(a[k].to_string());
            amps.push_back(std::move(one));
        }
        j["amplitudes"] = std::move(amps);
        write_output(o, j.dump(2) + "\n");
        return;
    }
    table t;
    t.columns = {"ref", "component", "order", "coeff"};  // component -1: energy series
    for (int k = 0; k <= order; ++k)
        t.rows.push_back({static_cast<long long>(ref), static_cast<long long>(-1),
                          static_cast<long long>(k), st.energy[k].to_string()});
    for (int i = 0; i < spec.dim; ++i)
        for (int k = 0; k <= order; ++k)
            t.rows.push_back({static_cast<long long>(ref), static_cast<long long>(i),
                              static_cast<long long>(k),
                              st.amplitudes[static_cast<size_t>(i)][k].to_string()});
    emit_table(o, t);
}

void run_leading(const common_opts& o, const std::string& op, int to,
                 const std::string& mode_name, int order) {
    model_spec spec = make_spec(o);
    transition_kind kind = parse_operator(op);
    series_mode mode =
        mode_name == "table4" ? series_mode::table4 : series_mode::full_rs;
    leading_strength ls = strength_series(spec, kind, to, mode, order);
    table t;
    t.columns = {"model", "operator", "mode", "order", "to", "m", "A"};
    cell a_cell = kind == transition_kind::T1 ? cell(ls.coeff_exact.to_string())
                                              : cell(ls.coeff);
    t.rows.push_back({o.model, std::string(to_string(kind)), mode_name,
                      static_cast<long long>(order), static_cast<long long>(to),
                      m_cell(ls.power), a_cell});
    emit_table(o, t);
}

void run_strength(const common_opts& o, const std::string& op, int from,
                  std::optional<int> to) {
    model_spec spec = make_spec(o);
    transition_kind kind = parse_operator(op);
    std::vector<int> targets =
        to ? std::vector<int>{*to} : all_targets(spec.dim, from);
    emit_table(o, strength_table(spec, o.model, kind, from, targets));
}

void run_table3(const common_opts& o) {
    table t;
    t.columns = {"n", "m", "A_exact", "A_expression", "lnO2_at_1e-4"};
    for (const table3_row& row : table3())
        t.rows.push_back({static_cast<long long>(row.n), m_cell(row.power),
                          row.A_exact.to_string(), row.A_expression, row.ln_O2});
    emit_table(o, t);
}

void run_table4(const common_opts& o, std::optional<int> k) {
    table t;
    t.columns = {"k", "component", "m", "coeff"};
    std::vector<int> rows_wanted;
    if (k) rows_wanted.push_back(*k);
    else
        for (int r = 0; r < o.dim; ++r) rows_wanted.push_back(r);
    for (int r : rows_wanted) {
        auto row = table4_row(o.dim, r);
        for (int j = 0; j < o.dim; ++j)
            t.rows.push_back({static_cast<long long>(r), static_cast<long long>(j),
                              m_cell(row[static_cast<size_t>(j)].power),
                              row[static_cast<size_t>(j)].coeff.to_string()});
    }
    emit_table(o, t);
}

void run_figures(const common_opts& o, const std::string& which, bool gnuplot) {
    common_opts eff = o;
    transition_kind kind = transition_kind::T1;
    if (which == "fig1") { eff.model = "tri"; kind = transition_kind::T1; }
    else if (which == "fig2") { eff.model = "penta"; kind = transition_kind::T1; }
    else if (which == "fig3") { eff.model = "tri"; kind = transition_kind::T2; }
    else { eff.model = "penta"; kind = transition_kind::T2; }
    eff.offsets.clear();
    if (gnuplot && eff.output.empty())
        throw std::invalid_argument("--gnuplot requires --output");
    model_spec spec = make_spec(eff);
    std::vector<int> targets;
    for (int n = 1; n < spec.dim; ++n) targets.push_back(n);
    emit_table(eff, strength_table(spec, eff.model, kind, 0, targets));
    if (gnuplot) {
        std::string script;
        script += "# data companion for " + which + "; no computation here\n";
        script += "set datafile separator ','\n";
        script += "set key autotitle columnhead\n";
        script += "set xlabel 'E* (MeV)'\n";
        script += "set ylabel 'ln(O^2)'\n";
        script += "plot '" + eff.output + "' using 'e_star':'lnO2' with linespoints\n";
        std::ofstream f(eff.output + ".gp", std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output file: " + eff.output + ".gp");
        f << script;
    }
}

void run_sweep(const common_opts& o, const std::string& op, std::vector<double> v_list,
               std::optional<int> to) {
    if (v_list.empty()) throw std::invalid_argument("sweep: empty v list");
    for (double v : v_list)
        if (!(v > 0.0)) throw std::invalid_argument("sweep: v values must be positive");
    std::sort(v_list.begin(), v_list.end());
    transition_kind kind = parse_operator(op);
    table t;
    bool first = true;
    for (double v : v_list) {
        common_opts eff = o;
        eff.v = v;
        model_spec spec = make_spec(eff);
        std::vector<int> targets = to ? std::vector<int>{*to} : all_targets(spec.dim, 0);
        table part = strength_table(spec, o.model, kind, 0, targets);
        if (first) {
            t.columns = part.columns;
            first = false;
        }
        for (auto& row : part.rows) t.rows.push_back(std::move(row));
    }
    emit_table(o, t);
}

void run_fitpower(const common_opts& o, const std::string& op, int to,
                  const std::vector<double>& u_list) {
    model_spec spec = make_spec(o);
    transition_kind kind = parse_operator(op);
    double slope = fit_power(spec, kind, to, u_list);
    table t;
    t.columns = {"model", "operator", "dim", "E", "from", "to", "n_points", "slope"};
    t.rows.push_back({o.model, std::string(to_string(kind)),
                      static_cast<long long>(spec.dim), spec.spacing_E,
                      static_cast<long long>(0), static_cast<long long>(to),
                      static_cast<long long>(u_list.size()), slope});
    emit_table(o, t);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"banded ladder Hamiltonians: spectra, exact perturbation series, "
                 "and transition-strength tables"};
    app.require_subcommand(1);

    common_opts opts;

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the model");
    add_model_flags(spectrum, opts);
    add_output_flags(spectrum, opts);
    spectrum->callback([&] { run_spectrum(opts); });

    auto* ground = app.add_subcommand("ground", "ground-state energy and amplitudes");
    std::string ground_method = "numeric";
    int ground_order = 8;
    add_model_flags(ground, opts);
    add_output_flags(ground, opts);
    ground->add_option("--method", ground_method, "numeric|series")
        ->check(CLI::IsMember({"numeric", "series"}));
    ground->add_option("--order", ground_order, "series truncation order");
    ground->callback([&] { run_ground(opts, ground_method, ground_order); });

    auto* series = app.add_subcommand(
        "series", "exact perturbation series of one eigenvector");
    int series_ref = 0, series_order = 8;
    add_model_flags(series, opts);
    add_output_flags(series, opts);
    series->add_option("--ref", series_ref, "reference level");
    series->add_option("--order", series_order, "truncation order");
    series->callback([&] { run_series(opts, series_ref, series_order); });

    auto* leading = app.add_subcommand(
        "leading", "leading power and coefficient of a strength matrix element");
    std::string leading_op = "t1", leading_mode = "table4";
    int leading_to = 2, leading_order = default_order_cap;
    add_model_flags(leading, opts);
    add_output_flags(leading, opts);
    leading->add_option("--operator", leading_op, "t1|t2");
    leading->add_option("--to", leading_to, "target state (from ground)");
    leading->add_option("--mode", leading_mode, "table4|full_rs")
        ->check(CLI::IsMember({"table4", "full_rs"}));
    leading->add_option("--order", leading_order, "series order cap");
    leading->callback(
        [&] { run_leading(opts, leading_op, leading_to, leading_mode, leading_order); });

    auto* strength = app.add_subcommand("strength", "numeric strength records");
    std::string strength_op = "t1";
    int strength_from = 0;
    std::optional<int> strength_to;
    add_model_flags(strength, opts);
    add_output_flags(strength, opts);
    strength->add_option("--operator", strength_op, "t1|t2");
    strength->add_option("--from", strength_from, "initial state");
    strength->add_option("--to", strength_to, "target state (default: all others)");
    strength->callback([&] { run_strength(opts, strength_op, strength_from, strength_to); });

    auto* table3_cmd = app.add_subcommand(
        "table3", "weak-coupling T1 leading powers, coefficients, and ln(O^2)");
    add_output_flags(table3_cmd, opts);
    table3_cmd->callback([&] { run_table3(opts); });

    auto* table4_cmd = app.add_subcommand(
        "table4", "closed-form leading wave-function terms (tridiagonal)");
    std::optional<int> table4_k;
    add_output_flags(table4_cmd, opts);
    table4_cmd->add_option("--dim", opts.dim, "number of levels");
    table4_cmd->add_option("--k", table4_k, "single reference row (default: all)");
    table4_cmd->callback([&] { run_table4(opts, table4_k); });

    auto* figures = app.add_subcommand("figures", "strength-versus-E* figure datasets");
    std::string figures_which = "fig1";
    bool figures_gnuplot = false;
    add_model_flags(figures, opts);
    add_output_flags(figures, opts);
    figures->add_option("--which", figures_which, "fig1|fig2|fig3|fig4")
        ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4"}));
    figures->add_flag("--gnuplot", figures_gnuplot,
                      "also write a plot script next to --output");
    figures->callback([&] { run_figures(opts, figures_which, figures_gnuplot); });

    auto* sweep = app.add_subcommand("sweep", "strength records across coupling values");
    std::string sweep_op = "t1";
    std::vector<double> sweep_vlist;
    std::optional<int> sweep_to;
    add_model_flags(sweep, opts);
    add_output_flags(sweep, opts);
    sweep->add_option("--v-list", sweep_vlist, "coupling values (e.g. 100,1000,10000)")
        ->delimiter(',')
        ->required();
    sweep->add_option("--operator", sweep_op, "t1|t2");
    sweep->add_option("--to", sweep_to, "target state (default: all others)");
    sweep->callback([&] { run_sweep(opts, sweep_op, sweep_vlist, sweep_to); });

    auto* fitpower = app.add_subcommand(
        "fitpower", "least-squares leading-power estimate from numeric strengths");
    std::string fitpower_op = "t1";
    int fitpower_to = 2;
    std::vector<double> fitpower_ulist;
    add_model_flags(fitpower, opts);
    add_output_flags(fitpower, opts);
    fitpower->add_option("--operator", fitpower_op, "t1|t2");
    fitpower->add_option("--to", fitpower_to, "target state")->required();
    fitpower->add_option("--u-list", fitpower_ulist, "geometric v/E list, all <= 1e-2")
        ->delimiter(',')
        ->required();
    fitpower->callback([&] { run_fitpower(opts, fitpower_op, fitpower_to, fitpower_ulist); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ladder::numerical_failure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
