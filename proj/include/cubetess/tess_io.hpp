#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cubetess/geometry.hpp"

namespace cubetess {

inline constexpr std::string_view kTessMagic = "CUBETESS v1";

/// Text format:
///
///   CUBETESS v1
///   d <int>
///   target <rational>
///   cubes <n>
///   <x_1> ... <x_d> <side>     (n lines)
///
/// Rationals are "k" or "p/q". Blank lines and lines starting with '#' are
/// ignored by parse. Errors: BadHeader, Syntax, BadRational.
Tessellation parse(std::string_view text);

/// Canonical text (reduced rationals, one cube per line, '\n' endings).
std::string serialize(const Tessellation& t);

Tessellation read_tess_file(const std::filesystem::path& path);
void write_tess_file(const std::filesystem::path& path, const Tessellation& t);

/// SVG 1.1 picture of a valid planar tessellation, one <rect> per cube,
/// shaded by side length. Coordinates are decimal approximations for
/// display only. Throws Error(UnsupportedDimension) for d != 2 and
/// Error(InvalidInput) for an invalid tessellation.
std::string render_svg(const Tessellation& t);

}  // namespace cubetess
