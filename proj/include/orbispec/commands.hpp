#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbispec/basis.hpp"
#include "orbispec/field.hpp"
#include "orbispec/geometry.hpp"
#include "orbispec/io.hpp"
#include "orbispec/periodicity.hpp"
#include "orbispec/spectral.hpp"

namespace orbispec {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr double kReferenceFrequencyHz = 261.626; // C4

// Flags shared by all subcommands; defaults follow the reference pipeline
// (gamma = 12, JND = 20 cents, cutoff 529, 144 x 144 grid, 2048 modes).
struct CommonOptions {
    double gamma = 12.0;
    int grid = 144;
    double jnd_cents = 20.0;
    int n_cut = 529;
    int n_modes = 2048;
    double f0 = kReferenceFrequencyHz;
    std::string out_dir = ".";
};

namespace detail {

inline nlohmann::json manifest_base(const std::string& command, const CommonOptions& opts) {
    nlohmann::json m;
    m["command"] = command;
    m["version"] = kVersion;
    m["gamma"] = opts.gamma;
    m["grid"] = opts.grid;
    m["jnd_cents"] = opts.jnd_cents;
    m["n_cut"] = opts.n_cut;
    m["n_modes"] = opts.n_modes;
    m["f0_hz"] = opts.f0;
    m["basis_ordering"] = basis_ordering_description();
    m["outputs"] = nlohmann::json::object();
    return m;
}

inline void emit(nlohmann::json& manifest, const std::filesystem::path& dir,
                 const std::string& name, const std::string& content) {
    write_text_file(dir / name, content);
    manifest["outputs"][name] = content_hash(content);
}

inline void finish(nlohmann::json& manifest, const std::filesystem::path& dir) {
    write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

inline std::filesystem::path ensure_out_dir(const std::string& out_dir) {
    std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string());
    return dir;
}

} // namespace detail

// Pullback of the symmetric periodicity to the gamma-torus grid. The value
// at (i, j) depends only on |i - j|, so each diagonal is computed once. For
// gamma != 12 the coordinates are rescaled onto the dyad orbifold via the
// canonical isomorphism, keeping one octave per period.
inline GridField sample_p_plus_grid(double gamma, int n, const PeriodicityConfig& cfg) {
    std::vector<double> diag(n);
    for (int m = 0; m < n; ++m)
        diag[m] = p_jnd_sym(1200.0 * m / n, cfg);
    GridField out(gamma, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.at(i, j) = diag[std::abs(i - j)];
    return out;
}

struct PeriodicityCurveOptions {
    CommonOptions common;
    double d_min = 0.0;
    double d_max = 1200.0;
    double step = 1.0;
};

// Columns (d_cents, P_JND, P_plus) over the requested cent range.
inline void run_periodicity_curve(const PeriodicityCurveOptions& opts) {
    if (!(opts.step > 0.0) || opts.d_min < 0.0 || opts.d_max > 1200.0 || opts.d_min > opts.d_max)
        throw std::invalid_argument("periodicity-curve: invalid d range");
    const PeriodicityConfig cfg{opts.common.jnd_cents};
    const auto dir = detail::ensure_out_dir(opts.common.out_dir);

    std::string csv = "d_cents,p_jnd,p_plus\n";
    const int steps = static_cast<int>(std::floor((opts.d_max - opts.d_min) / opts.step + 1e-9));
    for (int s = 0; s <= steps; ++s) {
        const double d = opts.d_min + s * opts.step;
        csv += format_double(d);
        csv += ',';
        csv += format_double(p_jnd(d, cfg));
        csv += ',';
        csv += format_double(p_jnd_sym(d, cfg));
        csv += '\n';
    }

    nlohmann::json manifest = detail::manifest_base("periodicity-curve", opts.common);
    manifest["d_min"] = opts.d_min;
    manifest["d_max"] = opts.d_max;
    manifest["step"] = opts.step;
    detail::emit(manifest, dir, "periodicity_curve.csv", csv);
    detail::finish(manifest, dir);
}

struct BasisOptions {
    CommonOptions common;
    int dump_modes = 0; // write sampled grids for the first N modes
};

inline void run_basis(const BasisOptions& opts) {
    const auto basis = enumerate_basis({opts.common.gamma, opts.common.n_modes});
    require_resolvable(basis, opts.common.grid);
    const auto dir = detail::ensure_out_dir(opts.common.out_dir);

    nlohmann::json manifest = detail::manifest_base("basis", opts.common);
    detail::emit(manifest, dir, "basis_manifest.jsonl", basis_to_jsonl(basis));
    for (int k = 0; k < opts.dump_modes && k < static_cast<int>(basis.size()); ++k) {
        GridField f(opts.common.gamma, opts.common.grid);
        f.samples = sample_mode_grid(basis[k], opts.common.grid);
        detail::emit(manifest, dir, "mode_" + std::to_string(k) + ".csv", field_to_csv(f));
    }
    detail::finish(manifest, dir);
}

struct SmoothOptions {
    CommonOptions common;
    bool full_torus = true; // field CSVs over the full torus or only T_gamma
};

// Sample the symmetric periodicity field, low-pass it at n_cut, and write the
// original field, the filter coefficients and the smoothed field.
inline void run_smooth(const SmoothOptions& opts) {
    const auto basis = enumerate_basis({opts.common.gamma, opts.common.n_modes});
    require_resolvable(basis, opts.common.grid);
    const PeriodicityConfig cfg{opts.common.jnd_cents};
    const auto dir = detail::ensure_out_dir(opts.common.out_dir);

    const GridField field = sample_p_plus_grid(opts.common.gamma, opts.common.grid, cfg);
    const SpectrumCoeffs filter = lowpass_coeffs(opts.common.n_cut, basis);
    const GridField smoothed = smooth(field, opts.common.n_cut, basis);

    double min_smoothed = smoothed.samples[0];
    for (double v : smoothed.samples) min_smoothed = std::min(min_smoothed, v);
    GridField residual(field.gamma, field.n);
    for (std::size_t i = 0; i < residual.samples.size(); ++i)
        residual.samples[i] = field.samples[i] - smoothed.samples[i];

    nlohmann::json manifest = detail::manifest_base("smooth", opts.common);
    manifest["diagnostics"] = {{"min_smoothed", min_smoothed},
                               {"l2_residual", norm(residual)}};
    detail::emit(manifest, dir, "field_original.csv", field_to_csv(field, opts.full_torus));
    detail::emit(manifest, dir, "filter_coeffs.csv", coeffs_to_csv(filter, basis));
    detail::emit(manifest, dir, "field_smoothed.csv", field_to_csv(smoothed, opts.full_torus));
    detail::finish(manifest, dir);
}

struct SectionOptions {
    CommonOptions common;
    int n_points = 481; // samples along the section line
};

// Section of the periodicity field along the line (c + t, c - t), c = gamma/2,
// t in [-c, c] -- through the domain centre, orthogonal to the diagonal.
// Columns (arc_parameter, p_plus_sampled, p_plus_smoothed); arc_parameter is
// the Euclidean arc length sqrt(2) * t. The smoothed column is the low-pass
// projection of the sampled grid field, evaluated exactly at the off-grid
// section points from its coefficients.
inline void run_section(const SectionOptions& opts) {
    if (opts.n_points < 2) throw std::invalid_argument("section: need at least 2 points");
    const auto basis = enumerate_basis({opts.common.gamma, opts.common.n_modes});
    require_resolvable(basis, opts.common.grid);
    const PeriodicityConfig cfg{opts.common.jnd_cents};
    const auto dir = detail::ensure_out_dir(opts.common.out_dir);

    const GridField field = sample_p_plus_grid(opts.common.gamma, opts.common.grid, cfg);
    SpectrumCoeffs coeffs = forward_transform(field, basis);
    for (std::size_t k = opts.common.n_cut + 1; k < coeffs.values.size(); ++k)
        coeffs.values[k] = 0.0;

    const double c = opts.common.gamma / 2.0;
    std::string csv = "arc_parameter,p_plus_sampled,p_plus_smoothed\n";
    for (int s = 0; s < opts.n_points; ++s) {
        const double t = -c + 2.0 * c * s / (opts.n_points - 1);
        const DyadPoint p = canonicalize(c + t, c - t, opts.common.gamma);
        const double d = 1200.0 * (p.x - p.y) / opts.common.gamma;
        csv += format_double(std::sqrt(2.0) * t);
        csv += ',';
        csv += format_double(p_jnd_sym(d, cfg));
        csv += ',';
        csv += format_double(evaluate_spectrum(coeffs, basis, c + t, c - t));
        csv += '\n';
    }

    nlohmann::json manifest = detail::manifest_base("section", opts.common);
    manifest["n_points"] = opts.n_points;
    double min_smoothed = 0.0;
    {
        const GridField smoothed = inverse_transform(coeffs, basis, field.gamma, field.n);
        min_smoothed = *std::min_element(smoothed.samples.begin(), smoothed.samples.end());
    }
    manifest["diagnostics"] = {{"min_smoothed", min_smoothed}};
    detail::emit(manifest, dir, "section.csv", csv);
    detail::finish(manifest, dir);
}

enum class MoebiusField { Periodicity, Smoothed, Mode };

struct MoebiusOptions {
    CommonOptions common;
    int resolution = 96; // n_r; the alpha direction uses 2 * resolution
    MoebiusField field = MoebiusField::Periodicity;
    int mode_index = 1; // used when field == Mode
};

// PLY mesh of the Moebius strip with the selected field as vertex scalar.
inline void run_moebius(const MoebiusOptions& opts) {
    if (opts.resolution < 1) throw std::invalid_argument("moebius: resolution must be positive");
    const PeriodicityConfig cfg{opts.common.jnd_cents};
    const double gamma = opts.common.gamma;
    const auto dir = detail::ensure_out_dir(opts.common.out_dir);

    std::function<double(double, double)> field_t1;
    std::string field_name;
    switch (opts.field) {
        case MoebiusField::Periodicity:
            field_name = "periodicity";
            field_t1 = [&](double u, double v) {
                const DyadPoint p = canonicalize(u, v, 1.0);
                return p_jnd_sym(1200.0 * (p.x - p.y), cfg);
            };
            break;
        case MoebiusField::Smoothed: {
            field_name = "smoothed";
            const auto basis = enumerate_basis({gamma, opts.common.n_modes});
            require_resolvable(basis, opts.common.grid);
            const GridField f = sample_p_plus_grid(gamma, opts.common.grid, cfg);
            auto coeffs = forward_transform(f, basis);
            for (std::size_t k = opts.common.n_cut + 1; k < coeffs.values.size(); ++k)
                coeffs.values[k] = 0.0;
            field_t1 = [basis, coeffs, gamma](double u, double v) {
                return evaluate_spectrum(coeffs, basis, gamma * u, gamma * v);
            };
            break;
        }
        case MoebiusField::Mode: {
            field_name = "mode_" + std::to_string(opts.mode_index);
            const auto basis = enumerate_basis({gamma, opts.mode_index + 1});
            const SymmetricMode mode = basis.at(opts.mode_index);
            field_t1 = [mode, gamma](double u, double v) {
                return evaluate_mode(mode, gamma * u, gamma * v);
            };
            break;
        }
    }

    const MoebiusMesh mesh = build_moebius_mesh(2 * opts.resolution, opts.resolution, field_t1);
    nlohmann::json manifest = detail::manifest_base("moebius", opts.common);
    manifest["resolution"] = opts.resolution;
    manifest["field"] = field_name;
    manifest["vertex_count"] = mesh.vertices.size();
    manifest["face_count"] = mesh.faces.size();
    detail::emit(manifest, dir, "moebius.ply", mesh_to_ply(mesh));
    detail::finish(manifest, dir);
}

} // namespace orbispec
