#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "orbispec/basis.hpp"
#include "orbispec/field.hpp"
#include "orbispec/geometry.hpp"
#include "orbispec/spectral.hpp"

namespace orbispec {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline int significant_digits(std::string_view s) {
    int digits = 0;
    bool leading = true;
    for (char c : s) {
        if (c == 'e' || c == 'E') break;
        if (c < '0' || c > '9') continue;
        if (c == '0' && leading) continue;
        leading = false;
        ++digits;
    }
    return digits;
}

} // namespace detail

// Shortest round-trip decimal, capped at 9 significant digits. Deterministic
// across platforms, so equal runs produce byte-identical text output.
inline std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, res.ptr);
    if (detail::significant_digits(s) > 9) {
        res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 9);
        s.assign(buf, res.ptr);
    }
    return s;
}

// FNV-1a 64-bit content hash, hex-encoded; used for output manifests.
inline std::string content_hash(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    static const char* hex = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = hex[h & 0xf];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string("fnv1a64:") + buf;
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("write failed for " + path.string());
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// Field dump: columns (x, y, value), either the full torus grid or only the
// fundamental-domain nodes (y <= x).
inline std::string field_to_csv(const GridField& f, bool full_torus = true) {
    std::string out = "x,y,value\n";
    for (int i = 0; i < f.n; ++i) {
        for (int j = 0; j < f.n; ++j) {
            if (!full_torus && j > i) continue;
            out += format_double(f.x_of(i));
            out += ',';
            out += format_double(f.x_of(j));
            out += ',';
            out += format_double(f.at(i, j));
            out += '\n';
        }
    }
    return out;
}

// Coefficient dump: columns (k, c1, c2, eigenvalue, coefficient).
inline std::string coeffs_to_csv(const SpectrumCoeffs& c, std::span<const SymmetricMode> basis) {
    if (c.values.size() != basis.size())
        throw ShapeMismatchError("coeffs_to_csv: coefficient/basis length mismatch");
    std::string out = "k,c1,c2,eigenvalue,coefficient\n";
    for (std::size_t k = 0; k < basis.size(); ++k) {
        out += std::to_string(basis[k].k);
        out += ',';
        out += std::to_string(basis[k].c1);
        out += ',';
        out += std::to_string(basis[k].c2);
        out += ',';
        out += format_double(basis[k].eigenvalue);
        out += ',';
        out += format_double(c.values[k]);
        out += '\n';
    }
    return out;
}

// Basis manifest: one JSON object per line with the mode descriptors.
inline std::string basis_to_jsonl(std::span<const SymmetricMode> basis) {
    std::string out;
    for (const auto& m : basis) {
        out += "{\"k\":" + std::to_string(m.k) + ",\"kind\":\"" + to_string(m.kind) +
               "\",\"c1\":" + std::to_string(m.c1) + ",\"c2\":" + std::to_string(m.c2) +
               ",\"eigenvalue\":" + format_double(m.eigenvalue) +
               ",\"norm_const\":" + format_double(m.norm_const) + "}\n";
    }
    return out;
}

// ASCII PLY with a per-vertex scalar ("quality") property.
inline std::string mesh_to_ply(const MoebiusMesh& mesh) {
    std::string out = "ply\nformat ascii 1.0\n";
    out += "element vertex " + std::to_string(mesh.vertices.size()) + "\n";
    out += "property double x\nproperty double y\nproperty double z\nproperty double quality\n";
    out += "element face " + std::to_string(mesh.faces.size()) + "\n";
    out += "property list uchar int vertex_indices\nend_header\n";
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        const Point3& p = mesh.vertices[i];
        out += format_double(p.x);
        out += ' ';
        out += format_double(p.y);
        out += ' ';
        out += format_double(p.z);
        out += ' ';
        out += format_double(mesh.scalars[i]);
        out += '\n';
    }
    for (const auto& f : mesh.faces) {
        out += "3 " + std::to_string(f[0]) + ' ' + std::to_string(f[1]) + ' ' +
               std::to_string(f[2]) + '\n';
    }
    return out;
}

} // namespace orbispec
