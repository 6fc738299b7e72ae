#include "clocksim/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "clocksim/errors.hpp"
#include "clocksim/version.hpp"

namespace clocksim {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit_series_csv(const SeriesRecord& series, std::size_t level_count, std::ostream& sink) {
    sink << "t,norm,mean_x,mean_p,purity,visibility";
    for (std::size_t j = 1; j < level_count; ++j) sink << ",phase_" << j;
    for (std::size_t k = 0; k < level_count; ++k) sink << ",level_pop_" << k;
    sink << '\n';
    for (const auto& s : series.samples) {
        sink << format_real(s.t) << ',' << format_real(s.norm) << ',' << format_real(s.mean_x)
             << ',' << format_real(s.mean_p) << ',' << format_real(s.purity) << ','
             << format_real(s.visibility);
        for (double phi : s.phases) sink << ',' << format_real(phi);
        for (double pop : s.populations) sink << ',' << format_real(pop);
        sink << '\n';
    }
    if (!sink) throw IoError("emit_series_csv: write failed");
}

void emit_summary(const ScenarioResult& result, std::ostream& sink) {
    sink << "scenario=" << scenario_kind_name(result.kind) << '\n';
    for (const auto& [key, value] : result.summary) sink << key << '=' << format_real(value) << '\n';
    for (const auto& check : result.checks) {
        sink << "check_" << check.name << '=' << (check.passed ? "pass" : "fail") << '\n';
        sink << "check_" << check.name << "_measured=" << format_real(check.measured) << '\n';
        sink << "check_" << check.name << "_expected=" << format_real(check.expected) << '\n';
        sink << "check_" << check.name << "_tolerance=" << format_real(check.tolerance) << '\n';
    }
    sink << "all_passed=" << (result.all_passed() ? "true" : "false") << '\n';
    if (!sink) throw IoError("emit_summary: write failed");
}

RunManifest write_result(const ScenarioResult& result, std::size_t level_count,
                         const std::string& config_path, const std::string& outdir,
                         std::uint64_t config_hash, double wall_seconds) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(outdir, ec);
    if (ec) throw IoError("write_result: cannot create output directory " + outdir);

    RunManifest manifest;
    manifest.config_path = config_path;
    manifest.output_dir = outdir;
    manifest.wall_seconds = wall_seconds;
    manifest.version = kVersion;
    {
        char buf[24];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(config_hash));
        manifest.config_hash_hex = buf;
    }

    for (const auto& series : result.series) {
        const std::string name = "series_" + series.label + ".csv";
        std::ofstream out(fs::path(outdir) / name, std::ios::binary);
        if (!out) throw IoError("write_result: cannot open " + name);
        emit_series_csv(series, level_count, out);
        manifest.files.push_back(name);
    }
    {
        std::ofstream out(fs::path(outdir) / "summary.txt", std::ios::binary);
        if (!out) throw IoError("write_result: cannot open summary.txt");
        emit_summary(result, out);
        manifest.files.push_back("summary.txt");
    }
    {
        std::ofstream out(fs::path(outdir) / "manifest.txt", std::ios::binary);
        if (!out) throw IoError("write_result: cannot open manifest.txt");
        out << "config=" << manifest.config_path << '\n';
        out << "output_dir=" << manifest.output_dir << '\n';
        out << "version=" << manifest.version << '\n';
        out << "config_hash=" << manifest.config_hash_hex << '\n';
        out << "wall_seconds=" << format_real(manifest.wall_seconds) << '\n';
        for (const auto& f : manifest.files) out << "file=" << f << '\n';
        if (!out) throw IoError("write_result: manifest write failed");
        manifest.files.push_back("manifest.txt");
    }
    return manifest;
}

}  // namespace clocksim
