#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "riesz/pointset.hpp"

namespace riesz::io {

enum class Format { Csv, Json, Auto };

/// Parses "csv", "json" or "auto"; throws ValidationError otherwise.
Format parse_format(std::string_view name);

struct ReadOptions {
    Format format = Format::Auto;
    /// Sphere dimension expected by the caller; taken from the header or the
    /// column count when absent.
    std::optional<int> d;
    /// Rescale rows whose norm is off by more than 1e−9 instead of rejecting them.
    bool renormalize = false;
};

/// Rows within this distance of unit norm are accepted (and rescaled if they
/// exceed PointSet::kNormTolerance); others raise ValidationError.
inline constexpr double kReadNormTolerance = 1e-9;

/// CSV: one point per row, d+1 comma-separated floats, optional header line
/// "# d=<d> n=<N>"; other lines starting with '#' and blank lines are ignored.
/// JSON: {"d": int, "points": [[f, ...], ...]}.
/// Auto detects JSON by a leading '{'.
PointSet read_pointset(std::istream& in, const ReadOptions& opts = {});
PointSet read_pointset(const std::filesystem::path& path, const ReadOptions& opts = {});

/// Floats are written in shortest round-trip form, so read(write(X)) == X
/// bit for bit. Format::Auto writes CSV.
void write_pointset(const PointSet& ps, std::ostream& out, Format format = Format::Csv);
void write_pointset(const PointSet& ps, const std::filesystem::path& path, Format format = Format::Csv);

/// Shortest decimal string that parses back to exactly `x`.
std::string format_double(double x);

}  // namespace riesz::io
