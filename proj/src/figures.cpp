#include "qthermo/figures.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "qthermo/format.hpp"
#include "qthermo/gibbs.hpp"

namespace qthermo {

namespace {

struct Series {
    std::vector<double> x;
    std::vector<double> y1;  // n = 1
    std::vector<double> y2;  // n = 2
};

std::ofstream open_out(const std::filesystem::path& p) {
    std::ofstream os(p, std::ios::binary);
    if (!os) throw Error(errc::io_failure, "cannot open " + p.string() + " for writing");
    return os;
}

void write_csv(const std::filesystem::path& p, const std::string& header, const Series& s) {
    std::ofstream os = open_out(p);
    os << header << "\n";
    for (std::size_t i = 0; i < s.x.size(); ++i)
        os << format_double(s.x[i]) << "," << format_double(s.y1[i]) << ","
           << format_double(s.y2[i]) << "\n";
    if (!os) throw Error(errc::io_failure, "write failed: " + p.string());
}

void write_svg(const std::filesystem::path& p, const std::string& title, const Series& s) {
    const int w = 640, h = 420, ml = 60, mr = 15, mt = 30, mb = 40;
    double xmin = s.x.front(), xmax = s.x.back();
    double ymin = s.y1[0], ymax = s.y1[0];
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        ymin = std::min({ymin, s.y1[i], s.y2[i]});
        ymax = std::max({ymax, s.y1[i], s.y2[i]});
    }
    if (ymax == ymin) ymax = ymin + 1.0;
    const auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
    const auto py = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };

    std::ofstream os = open_out(p);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << (w - ml - mr)
       << "\" height=\"" << (h - mt - mb) << "\" fill=\"none\" stroke=\"#888\"/>\n";
    os << "<text x=\"" << w / 2 << "\" y=\"18\" text-anchor=\"middle\" font-size=\"13\">" << title
       << "</text>\n";
    os << "<text x=\"" << ml << "\" y=\"" << h - 8 << "\" font-size=\"11\">" << format_double(xmin)
       << "</text>\n";
    os << "<text x=\"" << w - mr << "\" y=\"" << h - 8
       << "\" text-anchor=\"end\" font-size=\"11\">" << format_double(xmax) << "</text>\n";
    os << "<text x=\"5\" y=\"" << h - mb << "\" font-size=\"11\">" << format_double(ymin)
       << "</text>\n";
    os << "<text x=\"5\" y=\"" << mt + 10 << "\" font-size=\"11\">" << format_double(ymax)
       << "</text>\n";
    const char* colors[2] = {"#1f77b4", "#d62728"};
    for (int series = 0; series < 2; ++series) {
        const std::vector<double>& y = series == 0 ? s.y1 : s.y2;
        os << "<polyline fill=\"none\" stroke=\"" << colors[series]
           << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (i) os << ' ';
            os << format_double(px(s.x[i])) << ',' << format_double(py(y[i]));
        }
        os << "\"/>\n";
    }
    os << "<text x=\"" << w - mr - 5 << "\" y=\"" << mt + 14
       << "\" text-anchor=\"end\" font-size=\"11\" fill=\"#1f77b4\">n=1</text>\n";
    os << "<text x=\"" << w - mr - 5 << "\" y=\"" << mt + 28
       << "\" text-anchor=\"end\" font-size=\"11\" fill=\"#d62728\">n=2</text>\n";
    os << "</svg>\n";
    if (!os) throw Error(errc::io_failure, "write failed: " + p.string());
}

double vmax(const std::vector<double>& v) {
    double m = v[0];
    for (double x : v) m = std::max(m, x);
    return m;
}
double vmin(const std::vector<double>& v) {
    double m = v[0];
    for (double x : v) m = std::min(m, x);
    return m;
}

std::size_t arg_extreme(const std::vector<double>& v, bool want_max) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (want_max ? v[i] > v[best] : v[i] < v[best]) best = i;
    return best;
}

bool even_within(const Series& s, double tol) {
    const std::size_t n = s.x.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(s.y1[i] - s.y1[n - 1 - i]) > tol) return false;
        if (std::abs(s.y2[i] - s.y2[n - 1 - i]) > tol) return false;
    }
    return true;
}

}  // namespace

FiguresResult write_figures(const FigureOptions& opt) {
    namespace fs = std::filesystem;
    FiguresResult result;
    std::error_code ec;
    fs::create_directories(opt.out_dir, ec);
    if (!fs::is_directory(opt.out_dir))
        throw Error(errc::io_failure, "cannot create output directory " + opt.out_dir);
    const fs::path dir(opt.out_dir);

    // figs 1-2: densities over z at fixed beta
    const std::vector<double> zgrid = make_grid(-1.0, 1.0, 0.005);
    Series fig[7];
    const double betas12[2] = {-1.0, 5.0};
    for (int f = 1; f <= 2; ++f) {
        Series& s = fig[f];
        s.x = zgrid;
        for (double z : zgrid) {
            s.y1.push_back(gibbs_pdf({1, betas12[f - 1]}, z));
            s.y2.push_back(gibbs_pdf({2, betas12[f - 1]}, z));
        }
    }

    // figs 3-6: thermodynamic curves over beta
    const std::vector<double> bgrid = make_grid(-10.0, 10.0, 0.1);
    const ThermoQuantity quantities[4] = {ThermoQuantity::mean, ThermoQuantity::variance,
                                          ThermoQuantity::relative_entropy,
                                          ThermoQuantity::jeffreys};
    for (int f = 3; f <= 6; ++f) {
        Series& s = fig[f];
        s.x = bgrid;
        s.y1 = sweep(quantities[f - 3], 1, bgrid, opt.spec).values;
        s.y2 = sweep(quantities[f - 3], 2, bgrid, opt.spec).values;
    }

    const char* headers[7] = {nullptr,          "z,p_n1,p_n2",     "z,p_n1,p_n2",
                              "beta,value_n1,value_n2", "beta,value_n1,value_n2",
                              "beta,value_n1,value_n2", "beta,value_n1,value_n2"};
    const char* titles[7] = {nullptr,
                             "Gibbs densities, beta = -1",
                             "Gibbs densities, beta = 5",
                             "mean of z over beta",
                             "variance of z over beta",
                             "relative entropy vs uniform over beta",
                             "Jeffreys prior over beta"};
    for (int f = 1; f <= 6; ++f) {
        const fs::path csv = dir / ("fig" + std::to_string(f) + ".csv");
        write_csv(csv, headers[f], fig[f]);
        result.files.push_back({csv.string(), static_cast<int>(fig[f].x.size())});
        if (opt.svg) write_svg(dir / ("fig" + std::to_string(f) + ".svg"), titles[f], fig[f]);
    }

    // qualitative caption checks
    auto& as = result.assertions;
    as.push_back({"fig1_quaternionic_peak_higher", vmax(fig[1].y2) > vmax(fig[1].y1)});
    as.push_back({"fig2_complex_peak_higher", vmax(fig[2].y1) > vmax(fig[2].y2)});

    bool odd = true, decreasing = true, flatter3 = true;
    {
        const Series& s = fig[3];
        const std::size_t n = s.x.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(s.y1[i] + s.y1[n - 1 - i]) > 1e-9) odd = false;
            if (std::abs(s.y2[i] + s.y2[n - 1 - i]) > 1e-9) odd = false;
            if (i && (s.y1[i] >= s.y1[i - 1] || s.y2[i] >= s.y2[i - 1])) decreasing = false;
            if (std::abs(s.y2[i]) > std::abs(s.y1[i]) + 1e-12) flatter3 = false;
        }
    }
    as.push_back({"fig3_mean_odd", odd});
    as.push_back({"fig3_mean_strictly_decreasing", decreasing});
    as.push_back({"fig3_quaternionic_flatter", flatter3});

    as.push_back({"fig4_variance_even", even_within(fig[4], 1e-9)});
    as.push_back({"fig4_quaternionic_flatter", vmax(fig[4].y2) < vmax(fig[4].y1)});
    as.push_back({"fig4_peak_values", std::abs(vmax(fig[4].y1) - 0.25) <= 1e-9 &&
                                          std::abs(vmax(fig[4].y2) - 1.0 / 6.0) <= 1e-9});

    const std::size_t mid = fig[5].x.size() / 2;
    as.push_back({"fig5_minima_at_beta0", arg_extreme(fig[5].y1, false) == mid &&
                                              arg_extreme(fig[5].y2, false) == mid});
    as.push_back({"fig5_quaternionic_greater_minimum", vmin(fig[5].y2) > vmin(fig[5].y1)});

    as.push_back({"fig6_even", even_within(fig[6], 1e-9)});
    as.push_back({"fig6_quaternionic_lower_peak", vmax(fig[6].y2) < vmax(fig[6].y1)});
    as.push_back({"fig6_peak_values",
                  std::abs(vmax(fig[6].y1) - 0.5) <= 1e-7 &&
                      std::abs(vmax(fig[6].y2) - std::sqrt(1.0 / 6.0)) <= 1e-7});

    nlohmann::json manifest;
    manifest["tolerances"] = {{"abs_tol", opt.spec.abs_tol},
                              {"rel_tol", opt.spec.rel_tol},
                              {"max_subdivisions", opt.spec.max_subdivisions},
                              {"base_rule_order", opt.spec.base_rule_order}};
    manifest["determinism"] =
        "outputs are pure functions of this configuration; no clock, path or RNG inputs";
    for (const auto& f : result.files)
        manifest["files"][fs::path(f.path).filename().string()] = {{"rows", f.rows}};
    for (const auto& a : as) manifest["assertions"][a.name] = a.pass;

    std::ofstream ms = open_out(dir / "manifest.json");
    ms << manifest.dump(2) << "\n";
    if (!ms) throw Error(errc::io_failure, "write failed: manifest.json");

    return result;
}

}  // namespace qthermo
