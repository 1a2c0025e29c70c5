#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "bspline/basis_matrix.hpp"
#include "bspline/curve.hpp"

namespace bspline::cli {

/// File could not be opened, read, or written.
class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed JSON with the wrong shape or values.
class FormatError : public InvalidArgument
{
public:
    using InvalidArgument::InvalidArgument;
};

// Spline file layout:
//
//   {
//     "degree": 3,
//     "knots": [0, 1, "3/2", 2.5, ...]          explicit list, or
//     "knots": {"start": 0, "delta": "1/2", "count": 8},
//     "control_points": [[x0, y0], [x1, y1], ...]
//   }
//
// Knots may be JSON numbers or exact "p/q" / decimal strings; a JSON float is
// read as the shortest decimal that round-trips to it. "count" is optional.

ExactKnotVector knots_from_json(const nlohmann::json& knots, int degree, std::size_t control_points);
ExactKnotVector knots_from_json(const nlohmann::json& knots);

SplineCurve spline_from_json(const nlohmann::json& doc);
nlohmann::json spline_to_json(const SplineCurve& curve);

/// Throws IoError when the file cannot be read, FormatError for bad content.
nlohmann::json read_json_file(const std::filesystem::path& path);
SplineCurve load_spline(const std::filesystem::path& path);
void save_spline(const std::filesystem::path& path, const SplineCurve& curve);

/// {"degree", "span", "cumulative", "orientation": "rows=powers", "entries": [["p/q", ...], ...]}
nlohmann::json matrix_to_json(const Matrix<Rational>& entries, int degree, std::optional<SpanIndex> span,
                              bool cumulative);
Matrix<Rational> matrix_from_json(const nlohmann::json& doc);

/// One row per power of u, decimal entries with 17 significant digits.
void write_matrix_csv(std::ostream& out, const Matrix<Rational>& entries);

/// Header "tau,x0,...,x{d-1}" followed by one row per sample.
void write_samples_csv(std::ostream& out, const std::vector<Sample>& samples);

/// %.17g formatting.
std::string format_double(double value);

} // namespace bspline::cli
