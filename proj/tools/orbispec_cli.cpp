// Command-line pipeline around the orbifold spectral library: periodicity
// curves, the symmetric Laplace basis, low-pass smoothing of the periodicity
// field, section extraction and Moebius-strip mesh export. Every run writes a
// manifest.json recording flags and output hashes.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "orbispec/commands.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumericalRefusal = 3;
constexpr int kExitIo = 4;

void add_common_flags(CLI::App* cmd, orbispec::CommonOptions& opts) {
    cmd->add_option("--gamma", opts.gamma, "Octave period of the torus (default 12)");
    cmd->add_option("--grid", opts.grid, "Grid resolution per axis (default 144)");
    cmd->add_option("--jnd-cents", opts.jnd_cents, "Pitch JND tolerance in cents (default 20)");
    cmd->add_option("--n-cut", opts.n_cut, "Low-pass cutoff index (default 529)");
    cmd->add_option("--n-modes", opts.n_modes, "Number of enumerated basis modes (default 2048)");
    cmd->add_option("--f0", opts.f0, "Reference frequency in Hz (default 261.626)");
    cmd->add_option("--out-dir", opts.out_dir, "Output directory (default .)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral convolution on the dyad orbifold"};
    app.require_subcommand(1);

    orbispec::PeriodicityCurveOptions curve_opts;
    auto* curve = app.add_subcommand("periodicity-curve",
                                     "Tabulate P_JND and its inversion-symmetric version");
    add_common_flags(curve, curve_opts.common);
    curve->add_option("--d-min", curve_opts.d_min, "Lower interval bound in cents");
    curve->add_option("--d-max", curve_opts.d_max, "Upper interval bound in cents");
    curve->add_option("--step", curve_opts.step, "Step size in cents");

    orbispec::BasisOptions basis_opts;
    auto* basis = app.add_subcommand("basis", "Export the symmetric eigenbasis manifest");
    add_common_flags(basis, basis_opts.common);
    basis->add_option("--dump-modes", basis_opts.dump_modes,
                      "Also write sampled grids for the first N modes");

    orbispec::SmoothOptions smooth_opts;
    auto* smooth = app.add_subcommand("smooth",
                                      "Low-pass the periodicity field by spectral convolution");
    add_common_flags(smooth, smooth_opts.common);
    smooth->add_flag("--fundamental-domain-only",
                     [&](std::int64_t) { smooth_opts.full_torus = false; },
                     "Restrict field CSVs to the fundamental triangle");

    orbispec::SectionOptions section_opts;
    auto* section = app.add_subcommand("section",
                                       "Sample the field along the anti-diagonal section line");
    add_common_flags(section, section_opts.common);
    section->add_option("--n-points", section_opts.n_points, "Samples along the line");

    orbispec::MoebiusOptions moebius_opts;
    auto* moebius = app.add_subcommand("moebius", "Export a Moebius-strip mesh as ASCII PLY");
    add_common_flags(moebius, moebius_opts.common);
    moebius->add_option("--resolution", moebius_opts.resolution, "Mesh resolution (r direction)");
    std::string field_name = "periodicity";
    moebius->add_option("--field", field_name, "Vertex scalar: periodicity, smoothed or mode")
        ->check(CLI::IsMember({"periodicity", "smoothed", "mode"}));
    moebius->add_option("--mode-index", moebius_opts.mode_index,
                        "Mode index when --field mode is selected");

    std::string format; // accepted for symmetry with the file outputs; informational
    app.add_option("--format", format)->check(CLI::IsMember({"csv", "ply", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*curve) orbispec::run_periodicity_curve(curve_opts);
        if (*basis) orbispec::run_basis(basis_opts);
        if (*smooth) orbispec::run_smooth(smooth_opts);
        if (*section) orbispec::run_section(section_opts);
        if (*moebius) {
            if (field_name == "periodicity") moebius_opts.field = orbispec::MoebiusField::Periodicity;
            if (field_name == "smoothed") moebius_opts.field = orbispec::MoebiusField::Smoothed;
            if (field_name == "mode") moebius_opts.field = orbispec::MoebiusField::Mode;
            orbispec::run_moebius(moebius_opts);
        }
    } catch (const orbispec::NyquistError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumericalRefusal;
    } catch (const orbispec::IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return 0;
}
