// qthermo: two-level quantum thermostatistics toolkit.
//
// Subcommands expose the library surface: qfi (information matrices and
// determinants), prior (ball priors, structure functions, sampling), gibbs
// (thermodynamic quantities over beta) and figures (CSV curve bundles).
// Exit codes: 0 ok, 2 usage/domain error, 3 numerical failure, 4 I/O.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qthermo/bloch.hpp"
#include "qthermo/figures.hpp"
#include "qthermo/format.hpp"
#include "qthermo/gibbs.hpp"
#include "qthermo/priors.hpp"
#include "qthermo/qfi.hpp"

using nlohmann::json;
using namespace qthermo;

namespace {

struct OutputOptions {
    std::string path;  // empty: stdout
    std::string format = "csv";
};

void write_text(const OutputOptions& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out.path, std::ios::binary);
    if (!os) throw Error(errc::io_failure, "cannot open " + out.path + " for writing");
    os << text;
    if (!os) throw Error(errc::io_failure, "write failed: " + out.path);
}

void emit(const OutputOptions& out, const std::string& csv, const json& j) {
    if (out.format == "csv")
        write_text(out, csv);
    else if (out.format == "json")
        write_text(out, j.dump(2) + "\n");
    else
        throw Error(errc::bad_config, "format must be csv or json");
}

std::string scalar_csv(const std::string& name, double value) {
    return "quantity,value\n" + name + "," + format_double(value) + "\n";
}

BlochPoint parse_point(const std::vector<double>& coords, int n) {
    const int want = 2 * n + 1;
    if (static_cast<int>(coords.size()) != want)
        throw Error(errc::bad_config,
                    "expected " + std::to_string(want) + " coordinates for n=" + std::to_string(n));
    return BlochPoint::from_coords(coords.data(), want);
}

std::vector<double> parse_coords(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(errc::bad_config, "bad coordinate: " + item);
        }
    }
    return out;
}

void apply_env_tolerance(QuadratureSpec& spec) {
    if (const char* env = std::getenv("QTHERMO_TOLERANCE")) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(env, &pos);
            if (pos != std::string(env).size() || !(v > 0.0)) throw std::invalid_argument(env);
            spec.abs_tol = v;
        } catch (const std::exception&) {
            throw Error(errc::bad_config, "QTHERMO_TOLERANCE is not a positive number");
        }
    }
}

// ---- command bodies -------------------------------------------------------

void run_qfi(int n, const std::vector<double>& coords, const OutputOptions& out,
             const QuadratureSpec&) {
    const BlochPoint p = parse_point(coords, n);
    const QFIMatrix closed = qfi_closed_form(p);
    const QFIMatrix numeric = qfi_numeric(p);
    const double dev = max_abs_diff(closed, numeric);
    const double det_formula = qfi_determinant(p);
    const double det_numeric = determinant_lu(numeric);

    std::ostringstream csv;
    csv << "record,i,j,value\n";
    json jm;
    const int d = p.dim();
    json jc = json::array(), jn = json::array();
    for (int r = 0; r < d; ++r) {
        json rowc = json::array(), rown = json::array();
        for (int c = 0; c < d; ++c) {
            csv << "closed_form," << r << "," << c << "," << format_double(closed(r, c)) << "\n";
            rowc.push_back(closed(r, c));
            rown.push_back(numeric(r, c));
        }
        jc.push_back(rowc);
        jn.push_back(rown);
    }
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            csv << "numeric," << r << "," << c << "," << format_double(numeric(r, c)) << "\n";
    csv << "max_abs_deviation,,," << format_double(dev) << "\n";
    csv << "det_formula,,," << format_double(det_formula) << "\n";
    csv << "det_numeric,,," << format_double(det_numeric) << "\n";

    jm["n"] = n;
    jm["point"] = coords;
    jm["closed_form"] = jc;
    jm["numeric"] = jn;
    jm["max_abs_deviation"] = dev;
    jm["det_formula"] = det_formula;
    jm["det_numeric"] = det_numeric;
    emit(out, csv.str(), jm);

    if (dev >= 1e-8)
        throw Error(errc::tolerance_not_reached, "SLD route deviates from the closed form");
    if (std::abs(det_numeric - det_formula) > 1e-8 * std::abs(det_formula))
        throw Error(errc::tolerance_not_reached, "determinant mismatch");
    if (!is_positive_definite(closed) || !is_positive_definite(numeric))
        throw Error(errc::tolerance_not_reached, "information matrix not positive definite");
}

void run_prior_pdf(int n, const std::vector<double>& coords, const OutputOptions& out) {
    const StructureFamily fam = StructureFamily::of(n);
    const BlochPoint p = parse_point(coords, n);
    const double v = prior_pdf(fam, p);
    emit(out, scalar_csv("prior_pdf", v),
         json{{"quantity", "prior_pdf"}, {"n", n}, {"point", coords}, {"value", v}});
}

void run_prior_structure(int n, double z, const OutputOptions& out) {
    const double v = structure_function(StructureFamily::of(n), z);
    emit(out, scalar_csv("structure_function", v),
         json{{"quantity", "structure_function"}, {"n", n}, {"z", z}, {"value", v}});
}

void run_prior_normcheck(int n, const OutputOptions& out, const QuadratureSpec& spec) {
    const StructureFamily fam = StructureFamily::of(n);
    const double mass = prior_normalization_check(fam, spec);
    const double unnorm = prior_unnormalized_mass(fam, spec);
    const double pi = 3.14159265358979323846;
    const double expected_unnorm = n == 1 ? pi * pi : pi * pi * pi / 2.0;

    std::ostringstream csv;
    csv << "quantity,value\n";
    csv << "total_mass," << format_double(mass) << "\n";
    csv << "unnormalized_mass," << format_double(unnorm) << "\n";
    csv << "expected_unnormalized_mass," << format_double(expected_unnorm) << "\n";
    csv << "abs_deviation," << format_double(std::abs(mass - 1.0)) << "\n";
    emit(out, csv.str(),
         json{{"quantity", "prior_normalization"},
              {"n", n},
              {"total_mass", mass},
              {"unnormalized_mass", unnorm},
              {"expected_unnormalized_mass", expected_unnorm}});
    if (std::abs(mass - 1.0) > 1e-10)
        throw Error(errc::tolerance_not_reached, "prior mass deviates from 1");
}

void run_prior_marginalcheck(int n, const OutputOptions& out, const QuadratureSpec& spec) {
    const MarginalReport rep = marginal_check(StructureFamily::of(n), spec);
    std::ostringstream csv;
    csv << "index,sub_radius,marginal,expected,abs_deviation\n";
    json evals = json::array();
    for (std::size_t i = 0; i < rep.evaluations.size(); ++i) {
        const auto& ev = rep.evaluations[i];
        csv << i << "," << format_double(ev.sub_radius) << "," << format_double(ev.marginal)
            << "," << format_double(rep.expected_constant) << ","
            << format_double(ev.abs_deviation) << "\n";
        evals.push_back({{"sub_radius", ev.sub_radius},
                         {"marginal", ev.marginal},
                         {"abs_deviation", ev.abs_deviation}});
    }
    emit(out, csv.str(),
         json{{"quantity", "marginal_uniformity"},
              {"n", n},
              {"expected_constant", rep.expected_constant},
              {"max_abs_deviation", rep.max_abs_deviation},
              {"evaluations", evals}});
    if (rep.max_abs_deviation > 1e-8)
        throw Error(errc::tolerance_not_reached, "marginal is not uniform within 1e-8");
}

void run_prior_sample(int n, int count, std::uint64_t seed, const OutputOptions& out) {
    const SampleBatch batch = sample_prior(StructureFamily::of(n), count, seed);
    std::ostringstream csv;
    write_samples_csv(batch, csv);
    json pts = json::array();
    for (const auto& p : batch.points) {
        json row = json::array();
        for (int k = 0; k < batch.dim; ++k) row.push_back(p[k]);
        pts.push_back(row);
    }
    emit(out, csv.str(),
         json{{"quantity", "prior_samples"},
              {"n", n},
              {"seed", seed},
              {"count", count},
              {"points", pts}});
}

void run_gibbs_scalar(const std::string& which, int n, double beta, double z,
                      const OutputOptions& out, const QuadratureSpec& spec) {
    const GibbsParams gp{n, beta};
    double v = 0.0;
    if (which == "pdf") {
        v = gibbs_pdf(gp, z);
    } else if (which == "mean") {
        v = mean_z(gp);
        const double vq = mean_z_quadrature(gp, spec);
        if (std::abs(v - vq) > 1e-9 * std::max(1.0, std::abs(v)))
            throw Error(errc::tolerance_not_reached, "mean identity check failed");
    } else if (which == "var") {
        v = variance_z(gp, spec);
        if (std::abs(fisher_beta(gp) - v) > 1e-6)
            throw Error(errc::tolerance_not_reached, "variance/Fisher identity check failed");
    } else if (which == "entropy") {
        v = relative_entropy(gp, spec);
        if (v < -1e-12)
            throw Error(errc::tolerance_not_reached, "relative entropy came out negative");
    } else if (which == "fisher" || which == "jeffreys") {
        const double fisher = fisher_beta(gp);
        if (std::abs(fisher - variance_z(gp, spec)) > 1e-6)
            throw Error(errc::tolerance_not_reached, "variance/Fisher identity check failed");
        v = which == "fisher" ? fisher : std::sqrt(fisher);
    }
    const std::string name = "gibbs_" + which;
    json j{{"quantity", name}, {"n", n}, {"beta", beta}, {"value", v}};
    if (which == "pdf") j["z"] = z;
    emit(out, scalar_csv(name, v), j);
}

void run_gibbs_sweep(const std::string& quantity, int n, double bmin, double bmax, double bstep,
                     const OutputOptions& out, const QuadratureSpec& spec) {
    const ThermoCurve curve =
        sweep(thermo_quantity_from_string(quantity), n, make_grid(bmin, bmax, bstep), spec);
    std::ostringstream csv;
    csv << "beta,value\n";
    for (std::size_t i = 0; i < curve.beta_grid.size(); ++i)
        csv << format_double(curve.beta_grid[i]) << "," << format_double(curve.values[i]) << "\n";
    emit(out, csv.str(),
         json{{"quantity", std::string("gibbs_sweep_") + to_string(curve.quantity)},
              {"n", n},
              {"beta", curve.beta_grid},
              {"values", curve.values}});
}

void run_figures(const std::string& out_dir, bool svg, const QuadratureSpec& spec) {
    FigureOptions opt;
    opt.out_dir = out_dir;
    opt.svg = svg;
    opt.spec = spec;
    const FiguresResult res = write_figures(opt);
    for (const auto& f : res.files)
        std::cout << "wrote " << f.path << " (" << f.rows << " rows)\n";
    for (const auto& a : res.assertions)
        std::cout << (a.pass ? "[PASS] " : "[FAIL] ") << a.name << "\n";
    if (!res.all_pass())
        throw Error(errc::tolerance_not_reached, "figure caption assertion failed");
}

// ---- config-file mode ------------------------------------------------------

void run_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error(errc::io_failure, "cannot read config " + path);
    json cfg;
    try {
        is >> cfg;
    } catch (const json::exception& e) {
        throw Error(errc::bad_config, std::string("config parse error: ") + e.what());
    }

    const auto str = [&](const char* key, std::string dflt) {
        return cfg.contains(key) ? cfg.at(key).get<std::string>() : dflt;
    };
    const std::string command = str("command", "");
    OutputOptions out;
    out.path = str("output", "");
    out.format = str("format", "csv");

    QuadratureSpec spec;
    if (cfg.contains("tolerances")) {
        const json& t = cfg["tolerances"];
        if (t.contains("abs_tol")) spec.abs_tol = t["abs_tol"].get<double>();
        if (t.contains("rel_tol")) spec.rel_tol = t["rel_tol"].get<double>();
        if (t.contains("max_subdivisions")) spec.max_subdivisions = t["max_subdivisions"].get<int>();
        if (t.contains("base_rule_order")) spec.base_rule_order = t["base_rule_order"].get<int>();
    }
    apply_env_tolerance(spec);
    spec.validate();

    const int n = cfg.contains("n") ? cfg.at("n").get<int>() : 1;
    std::vector<double> point;
    if (cfg.contains("point")) point = cfg.at("point").get<std::vector<double>>();
    const double z = cfg.contains("z") ? cfg.at("z").get<double>() : 0.0;

    double beta = 0.0, bmin = -10.0, bmax = 10.0, bstep = 0.1;
    bool beta_is_grid = false;
    if (cfg.contains("beta")) {
        if (cfg["beta"].is_object()) {
            beta_is_grid = true;
            bmin = cfg["beta"].at("min").get<double>();
            bmax = cfg["beta"].at("max").get<double>();
            bstep = cfg["beta"].at("step").get<double>();
        } else {
            beta = cfg["beta"].get<double>();
        }
    }

    try {
        if (command == "qfi") {
            run_qfi(n, point, out, spec);
        } else if (command == "prior.pdf") {
            run_prior_pdf(n, point, out);
        } else if (command == "prior.structure") {
            run_prior_structure(n, z, out);
        } else if (command == "prior.normcheck") {
            run_prior_normcheck(n, out, spec);
        } else if (command == "prior.marginalcheck") {
            run_prior_marginalcheck(n, out, spec);
        } else if (command == "prior.sample") {
            run_prior_sample(n, cfg.contains("count") ? cfg.at("count").get<int>() : 1,
                             cfg.contains("seed") ? cfg.at("seed").get<std::uint64_t>() : 0, out);
        } else if (command.rfind("gibbs.", 0) == 0) {
            const std::string which = command.substr(6);
            if (which == "sweep") {
                if (!beta_is_grid)
                    throw Error(errc::bad_config, "gibbs.sweep needs a beta grid object");
                run_gibbs_sweep(str("quantity", "mean"), n, bmin, bmax, bstep, out, spec);
            } else {
                run_gibbs_scalar(which, n, beta, z, out, spec);
            }
        } else if (command == "figures") {
            run_figures(out.path.empty() ? "figures" : out.path,
                        cfg.contains("svg") && cfg.at("svg").get<bool>(), spec);
        } else {
            throw Error(errc::bad_config, "unknown command in config: " + command);
        }
    } catch (const json::exception& e) {
        throw Error(errc::bad_config, std::string("config field error: ") + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bayesian thermostatistics of two-level complex and quaternionic systems"};
    app.require_subcommand(0, 1);

    std::string config_path;
    app.add_option("--config", config_path, "run a command described by a JSON config file");

    // shared state filled by whichever subcommand runs
    int n = 1;
    std::string point_text;
    double zval = 0.0, beta = 0.0;
    double bmin = -10.0, bmax = 10.0, bstep = 0.1;
    int count = 1000;
    std::uint64_t seed = 0;
    std::string quantity = "mean";
    bool svg = false;
    OutputOptions out;
    QuadratureSpec spec;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--output", out.path, "write to this path instead of stdout");
        cmd->add_option("--format", out.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--abs-tol", spec.abs_tol, "quadrature absolute tolerance");
        cmd->add_option("--rel-tol", spec.rel_tol, "quadrature relative tolerance");
        cmd->add_option("--max-subdivisions", spec.max_subdivisions, "adaptive refinement cap");
    };

    CLI::App* qfi = app.add_subcommand("qfi", "quantum Fisher information at a Bloch point");
    qfi->add_option("--n", n, "family: 1 complex, 2 quaternionic")->required();
    qfi->add_option("--point", point_text, "comma separated coordinates")->required();
    add_common(qfi);

    CLI::App* prior = app.add_subcommand("prior", "ball priors and structure functions");
    prior->require_subcommand(1);
    CLI::App* ppdf = prior->add_subcommand("pdf", "prior density at a point");
    ppdf->add_option("--n", n)->required();
    ppdf->add_option("--point", point_text)->required();
    add_common(ppdf);
    CLI::App* pstruct = prior->add_subcommand("structure", "univariate structure function");
    pstruct->add_option("--n", n)->required();
    pstruct->add_option("--z", zval)->required();
    add_common(pstruct);
    CLI::App* pnorm = prior->add_subcommand("normcheck", "total prior mass check");
    pnorm->add_option("--n", n)->required();
    add_common(pnorm);
    CLI::App* pmarg = prior->add_subcommand("marginalcheck", "marginal uniformity check");
    pmarg->add_option("--n", n)->required();
    add_common(pmarg);
    CLI::App* psample = prior->add_subcommand("sample", "draw reproducible prior samples");
    psample->add_option("--n", n)->required();
    psample->add_option("--count", count)->required();
    psample->add_option("--seed", seed)->required();
    add_common(psample);

    CLI::App* gibbs = app.add_subcommand("gibbs", "Gibbs family thermostatistics");
    gibbs->require_subcommand(1);
    const char* scalar_cmds[] = {"pdf", "mean", "var", "entropy", "fisher", "jeffreys"};
    for (const char* name : scalar_cmds) {
        CLI::App* c = gibbs->add_subcommand(name, "");
        c->add_option("--n", n)->required();
        c->add_option("--beta", beta)->required();
        if (std::string(name) == "pdf") c->add_option("--z", zval)->required();
        add_common(c);
    }
    CLI::App* gsweep = gibbs->add_subcommand("sweep", "evaluate a quantity over a beta grid");
    gsweep->add_option("--quantity", quantity,
                       "mean | variance | relative_entropy | fisher | jeffreys")->required();
    gsweep->add_option("--n", n)->required();
    gsweep->add_option("--beta-min", bmin)->required();
    gsweep->add_option("--beta-max", bmax)->required();
    gsweep->add_option("--beta-step", bstep)->required();
    add_common(gsweep);

    CLI::App* figures = app.add_subcommand("figures", "write fig1..fig6 CSV data and manifest");
    figures->add_option("--output", out.path, "output directory (default: figures)");
    figures->add_flag("--svg", svg, "also write minimal SVG charts");
    figures->add_option("--abs-tol", spec.abs_tol, "quadrature absolute tolerance");
    figures->add_option("--rel-tol", spec.rel_tol, "quadrature relative tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!config_path.empty()) {
            if (app.get_subcommands().size() > 0)
                throw Error(errc::bad_config, "--config cannot be combined with a subcommand");
            run_config(config_path);
            return 0;
        }
        if (app.get_subcommands().empty()) {
            std::cerr << app.help();
            return 2;
        }

        apply_env_tolerance(spec);
        spec.validate();

        if (qfi->parsed()) {
            run_qfi(n, parse_coords(point_text), out, spec);
        } else if (prior->parsed()) {
            if (ppdf->parsed()) run_prior_pdf(n, parse_coords(point_text), out);
            else if (pstruct->parsed()) run_prior_structure(n, zval, out);
            else if (pnorm->parsed()) run_prior_normcheck(n, out, spec);
            else if (pmarg->parsed()) run_prior_marginalcheck(n, out, spec);
            else if (psample->parsed()) run_prior_sample(n, count, seed, out);
        } else if (gibbs->parsed()) {
            CLI::App* sub = gibbs->get_subcommands().at(0);
            if (sub == gsweep)
                run_gibbs_sweep(quantity, n, bmin, bmax, bstep, out, spec);
            else
                run_gibbs_scalar(sub->get_name(), n, beta, zval, out, spec);
        } else if (figures->parsed()) {
            run_figures(out.path.empty() ? "figures" : out.path, svg, spec);
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (is_domain_error(e.code())) return 2;
        if (e.code() == errc::io_failure) return 4;
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
