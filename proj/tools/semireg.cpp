// Command-line front door: generators, exact spectra, asymptotic predictions,
// series expansions, and the Monte Carlo experiment harness.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "semireg/asymptotics.hpp"
#include "semireg/experiments.hpp"
#include "semireg/generators.hpp"
#include "semireg/multigraph.hpp"
#include "semireg/series.hpp"
#include "semireg/spectra.hpp"

namespace {

using namespace semireg;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct ModelOptions {
    std::string model;
    int d1 = 2, d2 = 3;
    int n1 = -1;
    int n = 1000;
    double p = 0.5;
    int d = 3;
    int b = 1;
    bool nearest = false;

    void attach(CLI::App* cmd, bool with_n = true) {
        cmd->add_option("--model", model,
                        "rsrb | rsr | small-world | regular | complete-bipartite")
            ->required();
        cmd->add_option("--d1", d1, "degree of the first class");
        cmd->add_option("--d2", d2, "degree of the second class");
        cmd->add_option("--n1", n1, "rsrb: size of the degree-d1 part");
        if (with_n) cmd->add_option("--n", n, "vertex count");
        cmd->add_option("--p", p, "rsr: fraction of degree-d2 vertices");
        cmd->add_option("--d", d, "regular: degree");
        cmd->add_option("--b", b, "complete-bipartite: small part size");
        cmd->add_flag("--nearest", nearest,
                      "rsrb: round n to the nearest feasible part sizes");
    }

    ModelParams build() const {
        if (model == "rsrb") {
            if (n1 > 0) return RsrbParams{d1, d2, n1};
            return nearest ? RsrbParams::from_n_nearest(d1, d2, n)
                           : RsrbParams::from_n_exact(d1, d2, n);
        }
        if (model == "rsr") return RsrParams{p, d1, d2, n};
        if (model == "small-world") return SmallWorldParams{n};
        if (model == "regular") return RegularParams{d, n};
        if (model == "complete-bipartite") return CompleteBipartiteParams{b, n};
        throw CLI::ValidationError("--model", "unknown model kind: " + model);
    }
};

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << text;
}

int run(int argc, char** argv) {
    CLI::App app{"semi-regular random graph spectra: generators, asymptotics, experiments"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    int trials = 200;
    int jobs = default_jobs();
    int bins = 80;
    app.add_option("--seed", seed, "base seed")->capture_default_str();
    app.add_option("--trials", trials, "Monte Carlo trials")->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for ensembles")->capture_default_str();
    app.add_option("--bins", bins, "histogram bins")->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph and write its edge CSV");
    ModelOptions gen_model;
    gen_model.attach(gen);
    std::string gen_out = "-";
    bool keep_multi = false;
    gen->add_option("--out", gen_out, "output path (- for stdout)");
    gen->add_flag("--keep-multi", keep_multi, "skip the rewiring-to-simple step");

    // ac
    auto* ac = app.add_subcommand("ac", "algebraic connectivity of a graph");
    std::string ac_in;
    ModelOptions ac_model;
    ac->add_option("--in", ac_in, "edge CSV path");
    ac_model.attach(ac);
    ac->get_option("--model")->required(false);
    bool ac_keep_multi = false;
    ac->add_flag("--keep-multi", ac_keep_multi, "skip the rewiring-to-simple step");

    // spectrum
    auto* spec = app.add_subcommand("spectrum", "full eigenvalue list of a graph matrix");
    std::string spec_in, spec_out = "-", spec_matrix = "laplacian";
    ModelOptions spec_model;
    spec->add_option("--in", spec_in, "edge CSV path");
    spec_model.attach(spec);
    spec->get_option("--model")->required(false);
    spec->add_option("--matrix", spec_matrix, "laplacian | adjacency");
    spec->add_option("--out", spec_out, "output path (- for stdout)");
    bool spec_keep_multi = false;
    spec->add_flag("--keep-multi", spec_keep_multi, "skip the rewiring-to-simple step");

    // predict
    auto* predict = app.add_subcommand("predict", "asymptotic prediction for a model");
    ModelOptions pred_model;
    pred_model.attach(predict);

    // mc
    auto* mc = app.add_subcommand("mc", "Monte Carlo ensemble of algebraic connectivity");
    ModelOptions mc_model;
    mc_model.attach(mc);
    std::string mc_out = "-", mc_csv;
    bool mc_keep_multi = false;
    mc->add_option("--out", mc_out, "JSON report path (- for stdout)");
    mc->add_option("--csv", mc_csv, "optional CSV twin path");
    mc->add_flag("--keep-multi", mc_keep_multi, "skip the rewiring-to-simple step");

    // table
    auto* table = app.add_subcommand("table", "reproduce a whole comparison table");
    std::string table_name, table_out = "-", table_json;
    int table_n = 1000;
    table->add_option("--name", table_name, "rsrb | rsr")->required();
    table->add_option("--n", table_n, "target vertex count")->capture_default_str();
    table->add_option("--out", table_out, "CSV path (- for stdout)");
    table->add_option("--json", table_json, "optional JSON path");

    // density
    auto* density = app.add_subcommand("density", "pooled spectra vs limiting density");
    int den_d1 = 2, den_d2 = 3, den_n = 1000;
    std::string den_out = "-";
    density->add_option("--d1", den_d1)->capture_default_str();
    density->add_option("--d2", den_d2)->capture_default_str();
    density->add_option("--n", den_n)->capture_default_str();
    density->add_option("--out", den_out, "JSON path (- for stdout)");

    // ramanujan
    auto* rama = app.add_subcommand("ramanujan", "fraction of samples above the regular bound");
    int rama_d1 = 2, rama_d2 = 6, rama_n = 2000;
    std::string rama_out = "-";
    rama->add_option("--d1", rama_d1)->capture_default_str();
    rama->add_option("--d2", rama_d2)->capture_default_str();
    rama->add_option("--n", rama_n)->capture_default_str();
    rama->add_option("--out", rama_out, "JSON path (- for stdout)");

    // reliability
    auto* rel = app.add_subcommand("reliability", "random edge deletions until disconnect");
    ModelOptions rel_model;
    rel_model.attach(rel);
    bool rel_fast = false;
    std::string rel_out = "-";
    rel->add_flag("--fast", rel_fast, "union-find reverse-insertion path");
    rel->add_option("--out", rel_out, "JSON path (- for stdout)");

    // series
    auto* series = app.add_subcommand("series", "generating-function coefficients and growth");
    std::string ser_system = "catalan", ser_out = "-";
    int ser_order = 4000, ser_step = 0, ser_d1 = 2, ser_d2 = 3;
    double ser_p = 0.5;
    int ser_dump = 64;
    series->add_option("--system", ser_system,
                       "catalan | rsrb | rsrb-looped | rsr | small-world")
        ->capture_default_str();
    series->add_option("--order", ser_order, "truncation order")->capture_default_str();
    series->add_option("--step", ser_step, "ratio step (0 = system default)");
    series->add_option("--d1", ser_d1)->capture_default_str();
    series->add_option("--d2", ser_d2)->capture_default_str();
    series->add_option("--p", ser_p)->capture_default_str();
    series->add_option("--dump", ser_dump, "coefficients to print")->capture_default_str();
    series->add_option("--out", ser_out, "CSV path (- for stdout)");

    // pairs
    auto* pairs = app.add_subcommand("pairs", "integer (d1,d2) pairs with average degree d");
    int pairs_d = 3;
    pairs->add_option("--d", pairs_d, "average degree")->required();

    // global options (--seed, --trials, ...) are accepted after the subcommand
    for (CLI::App* sub : {gen, ac, spec, predict, mc, table, density, rama, rel, series, pairs})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the usage error
        return code == 0 ? 0 : 2;
    }

    if (gen->parsed()) {
        RngStream rng(seed);
        Multigraph g = generate(gen_model.build(), rng);
        if (!keep_multi) g = rewire_to_simple(g, rng);
        std::ostringstream buf;
        write_edge_csv(g, buf);
        write_text(gen_out, buf.str());
        return 0;
    }
    if (ac->parsed()) {
        Multigraph g;
        if (!ac_in.empty()) {
            g = read_edge_csv_file(ac_in);
        } else {
            RngStream rng(seed);
            g = generate(ac_model.build(), rng);
            if (!ac_keep_multi) g = rewire_to_simple(g, rng);
        }
        std::cout << fmt17(algebraic_connectivity(g)) << "\n";
        return 0;
    }
    if (spec->parsed()) {
        Multigraph g;
        if (!spec_in.empty()) {
            g = read_edge_csv_file(spec_in);
        } else {
            RngStream rng(seed);
            g = generate(spec_model.build(), rng);
            if (!spec_keep_multi) g = rewire_to_simple(g, rng);
        }
        DenseMatrix m;
        if (spec_matrix == "laplacian")
            m = laplacian(g);
        else if (spec_matrix == "adjacency")
            m = adjacency(g);
        else
            throw CLI::ValidationError("--matrix", "expected laplacian or adjacency");
        Spectrum s = eigenvalues_sym(m);
        std::ostringstream buf;
        for (double v : s.values) buf << fmt17(v) << "\n";
        write_text(spec_out, buf.str());
        return 0;
    }
    if (predict->parsed()) {
        ModelParams m = pred_model.build();
        std::ostringstream out;
        out << "{\"model\":\"" << model_name(m) << "\"";
        if (auto* rb = std::get_if<RsrbParams>(&m)) {
            DensityModel dm = make_density_model(rb->d1, rb->d2);
            out << ",\"params\":{\"d1\":" << rb->d1 << ",\"d2\":" << rb->d2 << "}"
                << ",\"mu_asymptotic\":" << fmt17(mu_rsrb(rb->d1, rb->d2))
                << ",\"edge_radii\":[" << fmt17(dm.radii.r_minus) << ","
                << fmt17(dm.radii.r_plus) << "]"
                << ",\"delta_weight\":" << fmt17(dm.delta_weight);
        } else if (auto* rr = std::get_if<RsrParams>(&m)) {
            out << ",\"params\":{\"p\":" << fmt17(rr->p) << ",\"d1\":" << rr->d1
                << ",\"d2\":" << rr->d2 << "}"
                << ",\"mu_asymptotic\":" << fmt17(mu_rsr(rr->p, rr->d1, rr->d2));
        } else if (auto* rg = std::get_if<RegularParams>(&m)) {
            DensityModel dm = make_density_model(rg->d, rg->d);
            out << ",\"params\":{\"d\":" << rg->d << "}"
                << ",\"mu_asymptotic\":" << fmt17(mu_regular(rg->d))
                << ",\"edge_radii\":[" << fmt17(dm.radii.r_minus) << ","
                << fmt17(dm.radii.r_plus) << "]"
                << ",\"delta_weight\":0";
        } else if (std::get_if<SmallWorldParams>(&m)) {
            out << ",\"params\":{}"
                << ",\"mu_asymptotic\":" << fmt17(mu_small_world());
        } else if (auto* cb = std::get_if<CompleteBipartiteParams>(&m)) {
            out << ",\"params\":{\"b\":" << cb->b << ",\"n\":" << cb->n << "}"
                << ",\"mu_asymptotic\":" << fmt17(std::min(cb->b, cb->n - cb->b));
        }
        out << "}\n";
        std::cout << out.str();
        return 0;
    }
    if (mc->parsed()) {
        EnsembleReport r = run_ensemble(mc_model.build(), trials, seed, !mc_keep_multi,
                                        jobs, bins);
        write_text(mc_out, to_json(r));
        if (!mc_csv.empty()) write_text(mc_csv, to_csv(r));
        return 0;
    }
    if (table->parsed()) {
        TableReport t;
        if (table_name == "rsrb")
            t = reproduce_rsrb_table(table_n, trials, seed, jobs);
        else if (table_name == "rsr")
            t = reproduce_rsr_table(table_n, trials, seed, jobs);
        else
            throw CLI::ValidationError("--name", "expected rsrb or rsr");
        write_text(table_out, to_csv(t));
        if (!table_json.empty()) write_text(table_json, to_json(t));
        return 0;
    }
    if (density->parsed()) {
        DensityReport r = density_check(den_d1, den_d2, den_n, trials, seed, jobs, bins);
        write_text(den_out, to_json(r));
        return 0;
    }
    if (rama->parsed()) {
        RamanujanReport r = ramanujan_fraction(rama_d1, rama_d2, rama_n, trials, seed, jobs);
        write_text(rama_out, to_json(r));
        return 0;
    }
    if (rel->parsed()) {
        ReliabilityReport r =
            reliability_deletions(rel_model.build(), trials, seed, jobs, rel_fast);
        write_text(rel_out, to_json(r));
        return 0;
    }
    if (series->parsed()) {
        GfKind kind = gf_kind_from_name(ser_system);
        GfParams params{ser_d1, ser_d2, rational_from_double(ser_p)};
        GfSystem sys = builtin_system(kind, params);
        auto solved = solve_gf_system(sys, ser_order);
        const TruncatedSeries& phi = solved.at(sys.names[sys.output]);
        int step = ser_step > 0 ? ser_step : sys.default_step;
        double lambda = growth_rate(phi, step);
        std::ostringstream buf;
        buf << "s,value\n";
        for (int s = 0; s <= std::min(ser_dump, ser_order); ++s)
            buf << s << "," << phi.coeffs[s].to_decimal_string() << "\n";
        write_text(ser_out, buf.str());
        std::cout << "{\"system\":\"" << ser_system << "\",\"order\":" << ser_order
                  << ",\"step\":" << step << ",\"growth_rate\":" << fmt17(lambda)
                  << ",\"growth_rate_extrapolated\":"
                  << fmt17(growth_rate_extrapolated(phi, step)) << "}\n";
        return 0;
    }
    if (pairs->parsed()) {
        for (auto [d1, d2] : integer_pairs(pairs_d))
            std::cout << d1 << "," << d2 << "," << fmt17(mu_rsrb(d1, d2)) << "\n";
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
