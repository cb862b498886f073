#include "fracrelax/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "fracrelax/relaxation.hpp"
#include "fracrelax/version.hpp"

namespace fracrelax {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string full(double v) { return fmt("%.17g", v); }   // lossless double
std::string label(double v) { return fmt("%g", v); }     // alpha column labels

double figure_value(FigureId id, double alpha, double t, const SolverConfig& cfg) {
    switch (id) {
        case FigureId::Psi: return psi(alpha, t, cfg).value;
        case FigureId::MinusPhi: return -phi(alpha, t, cfg).value;
        case FigureId::SmallR: return relax_coeff(alpha, t, cfg).value;
        case FigureId::BigR: return big_r(alpha, t, cfg).value;
    }
    throw std::logic_error("figure_value: bad id");
}

} // namespace

void RunConfig::validate() const {
    if (alphas.empty()) {
        throw std::invalid_argument("RunConfig: alphas must be nonempty");
    }
    for (const double a : alphas) {
        if (!(a > 0.0 && a <= 1.0)) {
            throw std::invalid_argument("RunConfig: every alpha must lie in (0, 1]");
        }
    }
    if (!(t_start >= 0.0) || !(t_end > t_start)) {
        throw std::invalid_argument("RunConfig: requires 0 <= t_start < t_end");
    }
    if (num_points < 2) {
        throw std::invalid_argument("RunConfig: num_points must be >= 2");
    }
    solver.validate();
}

const char* figure_stem(FigureId id) {
    switch (id) {
        case FigureId::Psi: return "fig1_psi";
        case FigureId::MinusPhi: return "fig2_minus_phi";
        case FigureId::SmallR: return "fig3_r";
        case FigureId::BigR: return "fig4_bigR";
    }
    return "fig";
}

FigureBundle compute_figure(FigureId id, const RunConfig& cfg) {
    cfg.validate();

    double start = cfg.t_start;
    if (id != FigureId::Psi && start == 0.0 &&
        std::any_of(cfg.alphas.begin(), cfg.alphas.end(),
                    [](double a) { return a < 1.0; })) {
        start = cfg.t_end / static_cast<double>(cfg.num_points);
    }

    FigureBundle fig;
    fig.id = id;
    fig.config_echo = cfg;
    fig.version = kLibraryVersion;
    fig.t.resize(cfg.num_points);
    const double h = (cfg.t_end - start) / static_cast<double>(cfg.num_points - 1);
    for (std::size_t j = 0; j < cfg.num_points; ++j) {
        fig.t[j] = start + h * static_cast<double>(j);
    }
    fig.t.back() = cfg.t_end;

    fig.series.reserve(cfg.alphas.size());
    for (const double alpha : cfg.alphas) {
        std::vector<double> col(cfg.num_points);
        for (std::size_t j = 0; j < cfg.num_points; ++j) {
            col[j] = figure_value(id, alpha, fig.t[j], cfg.solver);
        }
        fig.series.push_back(std::move(col));
    }
    return fig;
}

void write_csv(const FigureBundle& fig, std::ostream& os) {
    const RunConfig& cfg = fig.config_echo;
    os << "# fracrelax " << fig.version << "\n";
    os << "# figure: " << figure_stem(fig.id) << "\n";
    os << "# alphas:";
    for (std::size_t i = 0; i < cfg.alphas.size(); ++i) {
        os << (i ? "," : " ") << label(cfg.alphas[i]);
    }
    os << "\n# t_end: " << label(cfg.t_end) << " points: " << cfg.num_points << "\n";

    os << "t";
    for (const double a : cfg.alphas) {
        os << ",alpha=" << label(a);
    }
    os << "\n";
    for (std::size_t j = 0; j < fig.t.size(); ++j) {
        os << full(fig.t[j]);
        for (const auto& col : fig.series) {
            os << "," << full(col[j]);
        }
        os << "\n";
    }
}

void write_svg(const FigureBundle& fig, std::ostream& os) {
    const RunConfig& cfg = fig.config_echo;
    constexpr int kW = 640, kH = 480;
    constexpr double kL = 64, kR = 612, kT = 24, kB = 440;
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b"};

    double vmin = fig.series[0][0], vmax = vmin;
    for (const auto& col : fig.series) {
        for (const double v : col) {
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
        }
    }
    if (vmax == vmin) vmax = vmin + 1.0;
    const double pad = 0.05 * (vmax - vmin);
    vmin -= pad;
    vmax += pad;
    const double t0 = fig.t.front(), t1 = fig.t.back();

    const auto px = [&](double t) { return kL + (t - t0) / (t1 - t0) * (kR - kL); };
    const auto py = [&](double v) { return kB - (v - vmin) / (vmax - vmin) * (kB - kT); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kW
       << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n";
    os << "<rect width=\"" << kW << "\" height=\"" << kH << "\" fill=\"white\"/>\n";
    os << "<line x1=\"" << kL << "\" y1=\"" << kB << "\" x2=\"" << kR << "\" y2=\"" << kB
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << kL << "\" y1=\"" << kT << "\" x2=\"" << kL << "\" y2=\"" << kB
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << kL << "\" y=\"" << kB + 16 << "\" font-size=\"12\">"
       << label(t0) << "</text>\n";
    os << "<text x=\"" << kR - 20 << "\" y=\"" << kB + 16 << "\" font-size=\"12\">"
       << label(t1) << "</text>\n";
    os << "<text x=\"4\" y=\"" << kB << "\" font-size=\"12\">" << fmt("%.3g", vmin)
       << "</text>\n";
    os << "<text x=\"4\" y=\"" << kT + 10 << "\" font-size=\"12\">" << fmt("%.3g", vmax)
       << "</text>\n";
    os << "<text x=\"" << (kL + kR) / 2 - 30 << "\" y=\"" << kH - 6
       << "\" font-size=\"13\">" << figure_stem(fig.id) << " vs t</text>\n";

    for (std::size_t i = 0; i < fig.series.size(); ++i) {
        const char* color = kColors[i % 6];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t j = 0; j < fig.t.size(); ++j) {
            if (j) os << " ";
            os << fmt("%.2f", px(fig.t[j])) << "," << fmt("%.2f", py(fig.series[i][j]));
        }
        os << "\"/>\n";
        os << "<text x=\"" << kR - 100 << "\" y=\"" << kT + 16 + 16 * i
           << "\" font-size=\"12\" fill=\"" << color << "\">alpha=" << label(cfg.alphas[i])
           << "</text>\n";
    }
    os << "</svg>\n";
}

std::vector<std::filesystem::path> write_figures(const RunConfig& cfg) {
    cfg.validate();
    std::vector<std::filesystem::path> written;
    const auto cleanup = [&written]() {
        for (const auto& p : written) {
            std::error_code ec;
            std::filesystem::remove(p, ec);
        }
    };

    try {
        std::filesystem::create_directories(cfg.output_dir);
        const FigureId ids[] = {FigureId::Psi, FigureId::MinusPhi, FigureId::SmallR,
                                FigureId::BigR};
        for (const FigureId id : ids) {
            const FigureBundle fig = compute_figure(id, cfg);
            if (cfg.format == OutputFormat::Csv || cfg.format == OutputFormat::Both) {
                const auto path =
                    cfg.output_dir / (std::string(figure_stem(id)) + ".csv");
                std::ofstream os(path, std::ios::binary);
                write_csv(fig, os);
                os.flush();
                if (!os) {
                    throw std::runtime_error("write_figures: failed writing " +
                                             path.string());
                }
                written.push_back(path);
            }
            if (cfg.format == OutputFormat::Svg || cfg.format == OutputFormat::Both) {
                const auto path =
                    cfg.output_dir / (std::string(figure_stem(id)) + ".svg");
                std::ofstream os(path, std::ios::binary);
                write_svg(fig, os);
                os.flush();
                if (!os) {
                    throw std::runtime_error("write_figures: failed writing " +
                                             path.string());
                }
                written.push_back(path);
            }
        }
    } catch (...) {
        cleanup();
        throw;
    }
    return written;
}

} // namespace fracrelax
