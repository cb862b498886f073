// fracrelax command-line front end.
//
//   fracrelax eval --alpha 0.5 --z -1        single Mittag-Leffler evaluation
//   fracrelax figures --out-dir out          relaxation-figure CSV/SVG files
//   fracrelax verify --suite all             numeric cross-check suites
//
// Exit codes: 0 success, 1 verification failure, 2 domain/usage error,
// 3 I/O error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracrelax/figures.hpp"
#include "fracrelax/mittag_leffler.hpp"
#include "fracrelax/verify.hpp"
#include "fracrelax/version.hpp"

namespace {

const char* regime_name(fracrelax::Regime r) {
    switch (r) {
        case fracrelax::Regime::Series: return "Series";
        case fracrelax::Regime::Asymptotic: return "Asymptotic";
        case fracrelax::Regime::Contour: return "Contour";
        case fracrelax::Regime::ClosedForm: return "ClosedForm";
    }
    return "?";
}

const char* warning_name(fracrelax::EvalWarning w) {
    switch (w) {
        case fracrelax::EvalWarning::None: return "none";
        case fracrelax::EvalWarning::SeriesNotConverged: return "series-not-converged";
        case fracrelax::EvalWarning::NonDecreasingTerms: return "non-decreasing-terms";
        case fracrelax::EvalWarning::QuadratureSuspect: return "quadrature-suspect";
    }
    return "?";
}

struct CliOptions {
    fracrelax::RunConfig run;
    std::string format = "csv";
    // eval
    double alpha = 1.0;
    double beta = 1.0;
    double z = 0.0;
    // verify
    std::string suite = "all";
    std::size_t fde_steps = 16384;
};

int run_eval(const CliOptions& opt) {
    const fracrelax::EvalResult r =
        fracrelax::ml_eval({opt.alpha, opt.beta}, opt.z, opt.run.solver);
    std::printf("value = %.15g\n", r.value);
    std::printf("err_estimate = %.3g\n", r.err_estimate);
    std::printf("regime = %s\n", regime_name(r.regime));
    if (r.warning != fracrelax::EvalWarning::None) {
        std::printf("warning = %s\n", warning_name(r.warning));
    }
    return 0;
}

int run_figures(const CliOptions& opt) {
    fracrelax::RunConfig cfg = opt.run;
    if (opt.format == "svg") {
        cfg.format = fracrelax::OutputFormat::Svg;
    } else if (opt.format == "both") {
        cfg.format = fracrelax::OutputFormat::Both;
    } else {
        cfg.format = fracrelax::OutputFormat::Csv;
    }
    try {
        const auto paths = fracrelax::write_figures(cfg);
        for (const auto& p : paths) {
            std::printf("wrote %s\n", p.string().c_str());
        }
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "fracrelax figures: %s\n", e.what());
        return 3;
    }
    return 0;
}

int run_verify(const CliOptions& opt) {
    std::vector<fracrelax::SuiteReport> reports;
    if (opt.suite == "equivalence" || opt.suite == "all") {
        reports.push_back(fracrelax::verify_equivalence(opt.run));
    }
    if (opt.suite == "laplace" || opt.suite == "all") {
        reports.push_back(fracrelax::verify_laplace(opt.run));
    }
    if (opt.suite == "fde-cross-check" || opt.suite == "all") {
        reports.push_back(fracrelax::verify_fde_cross_check(opt.run, opt.fde_steps));
    }
    bool ok = true;
    for (const auto& r : reports) {
        fracrelax::print_report(r, std::cout);
        ok = ok && r.all_pass();
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractional relaxation toolkit: Mittag-Leffler evaluation, "
                 "equivalent varying-coefficient relaxation, verification suites"};
    app.set_version_flag("--version", fracrelax::kLibraryVersion);
    app.set_config("--config", "", "key=value config file mirroring the flags");
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand name

    CliOptions opt;
    std::string alphas_csv;
    app.add_option("--out-dir", opt.run.output_dir, "output directory")
        ->capture_default_str();
    app.add_option("--format", opt.format, "csv, svg, or both")
        ->check(CLI::IsMember({"csv", "svg", "both"}))
        ->capture_default_str();
    app.add_option("--alphas", opt.run.alphas, "comma-separated alpha values")
        ->delimiter(',');
    app.add_option("--t-end", opt.run.t_end, "end of the time range")
        ->capture_default_str();
    app.add_option("--points", opt.run.num_points, "samples per series")
        ->capture_default_str();

    CLI::App* eval = app.add_subcommand("eval", "evaluate E_{alpha,beta}(z), z <= 0");
    eval->add_option("--alpha", opt.alpha, "first index, in (0, 1]")->required();
    eval->add_option("--beta", opt.beta, "second index, > 0")->capture_default_str();
    eval->add_option("--z", opt.z, "argument, <= 0")->required();

    CLI::App* figures = app.add_subcommand("figures", "emit the four relaxation figures");
    (void)figures;

    CLI::App* verify = app.add_subcommand("verify", "run numeric cross-check suites");
    verify->add_option("--suite", opt.suite, "equivalence, laplace, fde-cross-check, all")
        ->check(CLI::IsMember({"equivalence", "laplace", "fde-cross-check", "all"}))
        ->capture_default_str();
    verify->add_option("--n", opt.fde_steps, "steps for the fde cross-check")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(eval)) {
            return run_eval(opt);
        }
        if (app.got_subcommand(figures)) {
            return run_figures(opt);
        }
        return run_verify(opt);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "fracrelax: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "fracrelax: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "fracrelax: %s\n", e.what());
        return 3;
    }
}
