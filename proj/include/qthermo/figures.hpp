#pragma once

#include <string>
#include <vector>

#include "qthermo/quadrature.hpp"

namespace qthermo {

struct FigureOptions {
    std::string out_dir = ".";
    bool svg = false;
    QuadratureSpec spec{};
};

struct FigureAssertion {
    std::string name;
    bool pass = false;
};

struct FigureFile {
    std::string path;
    int rows = 0;  // data rows, excluding the header
};

struct FiguresResult {
    std::vector<FigureFile> files;
    std::vector<FigureAssertion> assertions;

    bool all_pass() const {
        for (const auto& a : assertions)
            if (!a.pass) return false;
        return true;
    }
};

// Writes fig1.csv..fig6.csv plus manifest.json into out_dir.
//   fig1, fig2: columns z,p_n1,p_n2 on z in [-1,1] step 0.005 (401 rows),
//               densities at beta = -1 and beta = 5.
//   fig3..fig6: columns beta,value_n1,value_n2 on beta in [-10,10] step 0.1
//               (201 rows) for mean, variance, relative entropy and the
//               unnormalized Jeffreys prior over beta.
// The manifest records tolerances, per-file row counts, a determinism note
// and the qualitative curve assertions with their outcomes. With svg set,
// a minimal polyline chart is written next to each CSV.
FiguresResult write_figures(const FigureOptions& opt);

}  // namespace qthermo
