// Acceptance suite: one line per criterion, [PASS]/[FAIL], exit 1 on any
// failure. Tolerances are pinned here, not configurable.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qthermo/figures.hpp"
#include "qthermo/gibbs.hpp"
#include "qthermo/priors.hpp"
#include "qthermo/qfi.hpp"
#include "qthermo/special.hpp"
#include "qthermo/state_space.hpp"

using namespace qthermo;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;
int g_failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++g_failures;
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(3);
    ss << std::scientific << v;
    return ss.str();
}

std::vector<std::vector<double>> qfi_rows(const QFIMatrix& m) {
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(m.dim()),
                                          std::vector<double>(static_cast<std::size_t>(m.dim())));
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c)
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m(r, c);
    return rows;
}

// ---- criterion 1: SLD route vs closed form --------------------------------
void criterion1() {
    SplitMix64 rng(1234);
    double worst_entry = 0.0, worst_det = 0.0;
    for (int dim : {3, 5}) {
        for (int it = 0; it < 100; ++it) {
            const BlochPoint p = oracles::random_interior_point(rng, dim);
            const QFIMatrix closed = qfi_closed_form(p);
            const QFIMatrix numeric = qfi_numeric(p);
            worst_entry = std::max(worst_entry, max_abs_diff(closed, numeric));
            const double det_expected = qfi_determinant(p);
            const double det_numeric = oracles::det_lu(qfi_rows(numeric));
            worst_det = std::max(worst_det,
                                 std::abs(det_numeric - det_expected) / std::abs(det_expected));
        }
    }
    report(1, "numeric SLD information matrix matches the closed forms",
           worst_entry < 1e-8 && worst_det < 1e-8,
           "max entry dev " + fmt(worst_entry) + ", max det rel dev " + fmt(worst_det));
}

// ---- criterion 2: prior and structure normalization ------------------------
void criterion2() {
    const double mass1 = prior_normalization_check(StructureFamily::complex_family());
    const double mass2 = prior_normalization_check(StructureFamily::quaternionic_family());
    const double un1 = prior_unnormalized_mass(StructureFamily::complex_family());
    const double un2 = prior_unnormalized_mass(StructureFamily::quaternionic_family());
    double struct_dev = 0.0;
    for (int n : {1, 2}) {
        const double c = structure_constant(n);
        struct_dev = std::max(
            struct_dev, std::abs(integrate_gegenbauer([c](double) { return c; }, n) - 1.0));
    }
    const bool pass = std::abs(mass1 - 1.0) < 1e-10 && std::abs(mass2 - 1.0) < 1e-10 &&
                      std::abs(un1 - kPi * kPi) < 1e-9 &&
                      std::abs(un2 - kPi * kPi * kPi / 2.0) < 1e-9 && struct_dev < 1e-10;
    report(2, "prior masses normalize to 1 and structure functions integrate to 1", pass,
           "mass devs " + fmt(std::abs(mass1 - 1.0)) + "/" + fmt(std::abs(mass2 - 1.0)) +
               ", structure dev " + fmt(struct_dev));
}

// ---- criterion 3: marginal uniformity --------------------------------------
void criterion3() {
    bool pass = true;
    double worst = 0.0;
    for (int n : {1, 2}) {
        // confirm the expected constant with the reciprocal-volume oracle
        const int dm1 = 2 * n;
        const double vol = std::pow(kPi, 0.5 * dm1) / std::exp(std::lgamma(0.5 * dm1 + 1.0));
        const MarginalReport rep = marginal_check(StructureFamily::of(n));
        if (std::abs(rep.expected_constant - 1.0 / vol) > 1e-13) pass = false;
        if (rep.evaluations.size() < 5) pass = false;
        worst = std::max(worst, rep.max_abs_deviation);
    }
    report(3, "prior marginals are uniform at the reciprocal-volume constants",
           pass && worst < 1e-8, "max deviation " + fmt(worst));
}

// ---- criterion 4: Bessel consistency ----------------------------------------
void criterion4() {
    double worst_agree = 0.0, worst_parity = 0.0, worst_rec = 0.0;
    for (int n : {1, 2, 3}) {
        for (double mag : {0.1, 1.0, 5.0, 10.0, 20.0}) {
            for (double sign : {1.0, -1.0}) {
                const double beta = sign * mag;
                const double s = bessel_i_series(n, beta);
                const double p = bessel_i_poisson(n, beta);
                worst_agree =
                    std::max(worst_agree, std::abs(p - s) / std::max(1.0, std::abs(s)));
                const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
                worst_parity = std::max(
                    worst_parity, std::abs(bessel_i_series(n, -beta) - sgn * s) / std::abs(s));
                const double lhs = bessel_i_series(n - 1, beta) - bessel_i_series(n + 1, beta);
                const double rhs = (2.0 * n / beta) * s;
                worst_rec = std::max(worst_rec,
                                     std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
            }
        }
    }
    report(4, "Poisson-integral and series Bessel routes agree; parity and recurrence hold",
           worst_agree < 1e-10 && worst_parity < 1e-9 && worst_rec < 1e-9,
           "agree " + fmt(worst_agree) + ", parity " + fmt(worst_parity) + ", recurrence " +
               fmt(worst_rec));
}

// ---- criterion 5: Gibbs identities ------------------------------------------
void criterion5() {
    double worst_norm = 0.0, worst_reduce = 0.0, worst_mean = 0.0, worst_fisher = 0.0;
    for (int n : {1, 2}) {
        for (double beta : {0.0, 1.0, -1.0, 5.0, -5.0, 10.0, -10.0, 50.0, -50.0}) {
            const GibbsParams gp{n, beta};
            const double scale = gibbs_pdf(gp, 0.0);
            const double mass = integrate_gegenbauer(
                [&](double z) { return scale * std::exp(-beta * z); }, n);
            worst_norm = std::max(worst_norm, std::abs(mass - 1.0));
            worst_mean = std::max(worst_mean, std::abs(mean_z_quadrature(gp) - mean_z(gp)));
        }
        const StructureFamily fam = StructureFamily::of(n);
        for (double z : make_grid(-1.0, 1.0, 0.04))
            worst_reduce = std::max(
                worst_reduce, std::abs(gibbs_pdf({n, 0.0}, z) - structure_function(fam, z)));
        for (double beta : {0.0, 0.5, -0.5, 2.0, -2.0, 8.0, -8.0}) {
            const GibbsParams gp{n, beta};
            worst_fisher = std::max(worst_fisher, std::abs(fisher_beta(gp) - variance_z(gp)));
        }
    }
    const bool pass = worst_norm < 1e-10 && worst_reduce < 1e-12 && worst_mean < 1e-9 &&
                      worst_fisher < 1e-6;
    report(5, "Gibbs normalization, zero-tilt reduction, mean and Fisher identities", pass,
           "norm " + fmt(worst_norm) + ", reduce " + fmt(worst_reduce) + ", mean " +
               fmt(worst_mean) + ", fisher " + fmt(worst_fisher));
}

// ---- criterion 6: figure reproduction ---------------------------------------
void criterion6() {
    const fs::path dir = fs::temp_directory_path() / "qthermo_acceptance_figs";
    fs::remove_all(dir);
    FigureOptions opt;
    opt.out_dir = dir.string();
    const FiguresResult res = write_figures(opt);

    bool rows_ok = res.files.size() == 6;
    for (std::size_t i = 0; i < res.files.size(); ++i)
        rows_ok = rows_ok && res.files[i].rows == (i < 2 ? 401 : 201);

    bool captions_ok = res.all_pass();
    std::string failed;
    for (const auto& a : res.assertions)
        if (!a.pass) failed += " " + a.name;

    // quantitative anchors for the entropy minima and the Jeffreys peaks
    const double d1 = relative_entropy({1, 0.0});
    const double d2 = relative_entropy({2, 0.0});
    const double d1_closed = std::log(2.0) - std::log(kPi) + 0.5;
    const double d2_closed = std::log(2.0) - std::log(3.0) - std::log(kPi) + 1.75;
    const bool entropy_ok = std::abs(d1 - d1_closed) < 1e-5 && std::abs(d2 - d2_closed) < 1e-5 &&
                            d2 > d1;
    const double j1 = jeffreys_beta({1, 0.0});
    const double j2 = jeffreys_beta({2, 0.0});
    const bool jeffreys_ok =
        std::abs(j1 - 0.5) < 1e-7 && std::abs(j2 - std::sqrt(1.0 / 6.0)) < 1e-7 && j2 < j1;

    report(6, "figure data reproduces the caption-level orderings and closed-form anchors",
           rows_ok && captions_ok && entropy_ok && jeffreys_ok,
           (captions_ok ? std::string("all curve assertions hold") : "failed:" + failed) +
               ", entropy devs " + fmt(std::abs(d1 - d1_closed)) + "/" +
               fmt(std::abs(d2 - d2_closed)));
    fs::remove_all(dir);
}

// ---- criterion 7: sampler distribution --------------------------------------
void criterion7() {
    const int n_samples = 100000;
    const double crit = 1.63 / std::sqrt(static_cast<double>(n_samples));
    bool pass = true;
    std::string detail;
    for (int n : {1, 2}) {
        const StructureFamily fam = StructureFamily::of(n);
        const SampleBatch batch = sample_prior(fam, n_samples, 42);
        std::vector<double> z;
        z.reserve(batch.points.size());
        for (const auto& p : batch.points) z.push_back(p[batch.dim - 1]);
        std::sort(z.begin(), z.end());
        double ks = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            const double f = structure_cdf(fam, z[i]);
            ks = std::max(ks, std::abs(f - static_cast<double>(i) / n_samples));
            ks = std::max(ks, std::abs(static_cast<double>(i + 1) / n_samples - f));
        }
        double m1 = 0.0, m2 = 0.0, m4 = 0.0;
        for (double t : z) {
            m1 += t;
            m2 += t * t;
            m4 += t * t * t * t;
        }
        m1 /= n_samples;
        m2 /= n_samples;
        m4 /= n_samples;
        const double var = m2 - m1 * m1;
        const double var_expected = n == 1 ? 0.25 : 1.0 / 6.0;
        const double se =
            std::sqrt((m4 - var_expected * var_expected) / static_cast<double>(n_samples));
        if (ks >= crit || std::abs(var - var_expected) >= 4.0 * se) pass = false;
        detail += (n == 1 ? "n=1 KS " : "; n=2 KS ") + fmt(ks) + " var dev " +
                  fmt(std::abs(var - var_expected));
    }
    report(7, "sampled z-marginals pass KS (alpha 0.01) and variance anchors at seed 42", pass,
           detail);
}

// ---- criterion 8: byte-identical figure output ------------------------------
std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

void criterion8() {
    const fs::path base = fs::temp_directory_path() / "qthermo_acceptance_det";
    fs::remove_all(base);
    bool pass = true;
    std::string detail = "library runs";

    FigureOptions opt;
    for (int run = 1; run <= 2; ++run) {
        opt.out_dir = (base / ("lib" + std::to_string(run))).string();
        write_figures(opt);
    }
    for (int f = 1; f <= 6; ++f) {
        const std::string name = "fig" + std::to_string(f) + ".csv";
        if (slurp(base / "lib1" / name) != slurp(base / "lib2" / name)) pass = false;
        if (slurp(base / "lib1" / name).empty()) pass = false;
    }

    if (const char* cli = std::getenv("QTHERMO_CLI")) {
        detail = "library and CLI runs";
        for (int run = 1; run <= 2; ++run) {
            const std::string cmd = std::string(cli) + " figures --output " +
                                    (base / ("cli" + std::to_string(run))).string() +
                                    " > /dev/null 2>&1";
            if (std::system(cmd.c_str()) != 0) pass = false;
        }
        for (int f = 1; f <= 6; ++f) {
            const std::string name = "fig" + std::to_string(f) + ".csv";
            if (slurp(base / "cli1" / name) != slurp(base / "cli2" / name)) pass = false;
            if (slurp(base / "cli1" / name).empty()) pass = false;
        }
    }
    report(8, "repeated figure generation is byte-identical", pass, detail);
    fs::remove_all(base);
}

}  // namespace

int main() {
    try {
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
        criterion8();
    } catch (const std::exception& e) {
        std::cout << "[FAIL] unexpected exception: " << e.what() << "\n";
        return 1;
    }
    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " acceptance criteria failed\n";
    return 1;
}
