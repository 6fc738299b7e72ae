#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "clocksim/config.hpp"
#include "clocksim/csv.hpp"
#include "clocksim/eigensolve.hpp"
#include "clocksim/errors.hpp"
#include "clocksim/observables.hpp"
#include "clocksim/selftest.hpp"
#include "clocksim/version.hpp"

namespace {

using namespace clocksim;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Constants resolve_constants(bool si, const std::string& constants_path) {
    if (si && !constants_path.empty())
        throw ValidationError("--si and --constants are mutually exclusive");
    if (si) {
        Constants k = si_neutron_constants();
        k.m = 1.0;  // calculators are mass-independent; keep a neutral SI set
        return k;
    }
    if (!constants_path.empty()) return parse_constants_text(read_file(constants_path));
    return Constants{};  // dimensionless defaults
}

int run_simulate(const std::string& config_path, const std::string& outdir, bool serial) {
    const auto started = std::chrono::steady_clock::now();
    const ScenarioConfig cfg = parse_config(read_file(config_path));
    const ScenarioResult result =
        run_scenario(cfg, serial ? Exec::serial : default_exec());
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    const auto manifest = write_result(result, cfg.clock.level_count(), config_path, outdir,
                                       config_hash(cfg), wall);
    for (const auto& check : result.checks) {
        std::printf("[%s] %s measured=%.12g expected=%.12g tol=%.3g\n",
                    check.passed ? "PASS" : "FAIL", check.name.c_str(), check.measured,
                    check.expected, check.tolerance);
    }
    std::printf("wrote %zu file(s) to %s (%.2fs)\n", manifest.files.size(),
                manifest.output_dir.c_str(), wall);
    return 0;
}

int run_eigen(const std::string& config_path, std::size_t n_states, std::size_t level,
              const std::string& outdir) {
    const auto started = std::chrono::steady_clock::now();
    const ScenarioConfig cfg = parse_config(read_file(config_path));
    if (level >= cfg.clock.level_count())
        throw ValidationError("--level exceeds the clock's level count");
    const auto blocks = build_blocks(cfg.clock, cfg.potential, cfg.constants, cfg.grid);
    const auto spectrum = eigensolve_fd(blocks[level], cfg.grid, cfg.constants, n_states);

    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(outdir, ec);
    if (ec) throw IoError("cannot create output directory " + outdir);

    {
        std::ofstream out(fs::path(outdir) / "spectrum.csv", std::ios::binary);
        if (!out) throw IoError("cannot open spectrum.csv");
        out << "n,energy\n";
        for (std::size_t i = 0; i < spectrum.energies.size(); ++i)
            out << (i + 1) << ',' << format_real(spectrum.energies[i]) << '\n';
    }
    {
        std::ofstream out(fs::path(outdir) / "eigenvectors.csv", std::ios::binary);
        if (!out) throw IoError("cannot open eigenvectors.csv");
        out << "x";
        for (std::size_t i = 0; i < spectrum.energies.size(); ++i) out << ",psi_" << (i + 1);
        out << '\n';
        for (std::size_t i = 0; i < cfg.grid.n; ++i) {
            out << format_real(cfg.grid.x(i));
            for (const auto& wf : spectrum.wavefunctions) out << ',' << format_real(wf[i]);
            out << '\n';
        }
    }
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    {
        std::ofstream out(fs::path(outdir) / "manifest.txt", std::ios::binary);
        if (!out) throw IoError("cannot open manifest.txt");
        out << "config=" << config_path << '\n'
            << "output_dir=" << outdir << '\n'
            << "version=" << kVersion << '\n';
        char buf[24];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(config_hash(cfg)));
        out << "config_hash=" << buf << '\n'
            << "wall_seconds=" << format_real(wall) << '\n'
            << "file=spectrum.csv\nfile=eigenvectors.csv\n";
    }
    std::printf("wrote spectrum of %zu state(s) to %s\n", spectrum.energies.size(),
                outdir.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"composite-particle clock dynamics in uniform gravity"};
    app.set_version_flag("--version", clocksim::kVersion);
    app.require_subcommand(1);

    std::string config_path, outdir, constants_path;
    bool serial = false, si = false;

    auto* simulate = app.add_subcommand("simulate", "run a scenario config, write CSV series");
    simulate->add_option("config", config_path, "scenario config file")->required();
    simulate->add_option("--out", outdir, "output directory")->required();
    simulate->add_flag("--serial", serial, "force the serial reference kernels");

    std::size_t eigen_n = 1, eigen_level = 0;
    auto* eigen = app.add_subcommand("eigen", "bound states of the configured potential");
    eigen->add_option("config", config_path, "scenario config file")->required();
    eigen->add_option("--n", eigen_n, "number of states")->required();
    eigen->add_option("--level", eigen_level, "internal level selecting the block");
    eigen->add_option("--out", outdir, "output directory")->required();

    auto* analytic = app.add_subcommand("analytic", "closed-form calculators");
    analytic->require_subcommand(1);
    double height = 0.0, d_energy = 0.0, separation = 0.0, time = 0.0;
    auto* redshift = analytic->add_subcommand("redshift", "fractional shift g*h/c^2");
    redshift->add_option("--height", height, "height difference")->required();
    redshift->add_flag("--si", si, "SI constants (g = 9.81, c = 299792458)");
    redshift->add_option("--constants", constants_path, "constants file ([units] section)");
    auto* vis = analytic->add_subcommand("visibility", "two-site clock visibility");
    vis->add_option("--de", d_energy, "internal level gap")->required();
    vis->add_option("--dx", separation, "height separation")->required();
    vis->add_option("--t", time, "elapsed time")->required();
    vis->add_flag("--si", si, "SI constants");
    vis->add_option("--constants", constants_path, "constants file ([units] section)");

    auto* selftest = app.add_subcommand("selftest", "run the invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (simulate->parsed()) return run_simulate(config_path, outdir, serial);
        if (eigen->parsed()) return run_eigen(config_path, eigen_n, eigen_level, outdir);
        if (redshift->parsed()) {
            const auto konst = resolve_constants(si, constants_path);
            std::printf("%.5g\n", clocksim::analytic_redshift(height, konst));
            return 0;
        }
        if (vis->parsed()) {
            const auto konst = resolve_constants(si, constants_path);
            std::printf("%.5g\n", clocksim::analytic_visibility(d_energy, separation, time, konst));
            return 0;
        }
        if (selftest->parsed()) return clocksim::run_selftest(std::cout) ? 0 : 1;
    } catch (const clocksim::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 2;
    } catch (const clocksim::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
