#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "fracrelax/mittag_leffler.hpp"

namespace fracrelax {

enum class FigureId { Psi, MinusPhi, SmallR, BigR };
enum class OutputFormat { Csv, Svg, Both };

struct RunConfig {
    std::vector<double> alphas = {0.25, 0.5, 0.75, 1.0};
    double t_start = 0.0;
    double t_end = 5.0;
    std::size_t num_points = 201;
    std::filesystem::path output_dir = ".";
    OutputFormat format = OutputFormat::Csv;
    SolverConfig solver;
    void validate() const;
};

/// One figure worth of columns: a shared t column plus one series per alpha,
/// carrying the config it came from and the library version as metadata.
struct FigureBundle {
    FigureId id = FigureId::Psi;
    std::vector<double> t;
    std::vector<std::vector<double>> series;
    RunConfig config_echo;
    std::string version;
};

const char* figure_stem(FigureId id); // "fig1_psi" ... "fig4_bigR"

/// Samples the figure's quantity on the run grid. The psi figure starts at
/// t_start; the others start at t_end/num_points when the grid would touch 0
/// and any alpha < 1, since phi and r diverge there.
FigureBundle compute_figure(FigureId id, const RunConfig& cfg);

/// CSV with a `t,alpha=...` header and 17-significant-digit values; byte
/// reproducible for a fixed config and version (metadata comments, no
/// timestamps).
void write_csv(const FigureBundle& fig, std::ostream& os);

/// Static SVG 1.1 line plot of the same columns; one polyline per series.
void write_svg(const FigureBundle& fig, std::ostream& os);

/// Emits all four figures in the requested format(s) under cfg.output_dir.
/// Returns the written paths. On failure removes partial outputs and throws
/// std::runtime_error.
std::vector<std::filesystem::path> write_figures(const RunConfig& cfg);

} // namespace fracrelax
