#include "bspline_cli/spline_file.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

namespace bspline::cli {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& value, const char* what)
{
    if (value.is_number_integer())
        return value.is_number_unsigned() ? Rational(value.get<std::uint64_t>()) : Rational(value.get<std::int64_t>());
    if (value.is_number_float())
        return rational_from_double(value.get<double>());
    if (value.is_string())
        return parse_rational(value.get<std::string>());
    throw FormatError(std::string(what) + " must be a number or a rational string");
}

double double_from_json(const json& value, const char* what)
{
    double out = 0.0;
    if (value.is_number())
        out = value.get<double>();
    else if (value.is_string())
        out = to_double(parse_rational(value.get<std::string>()));
    else
        throw FormatError(std::string(what) + " must be a number");
    if (!std::isfinite(out))
        throw FormatError(std::string(what) + " must be finite");
    return out;
}

int degree_from_json(const json& doc)
{
    if (!doc.contains("degree") || !doc["degree"].is_number_integer())
        throw FormatError("spline file needs an integer \"degree\"");
    const int degree = doc["degree"].get<int>();
    validate_degree(degree);
    return degree;
}

ExactKnotVector parse_knots(const json& knots, std::optional<std::size_t> expected)
{
    if (knots.is_array()) {
        std::vector<Rational> values;
        values.reserve(knots.size());
        for (const auto& v : knots)
            values.push_back(rational_from_json(v, "knot"));
        if (expected && values.size() != *expected)
            throw FormatError("expected " + std::to_string(*expected) + " knots, got " + std::to_string(values.size()));
        return ExactKnotVector(std::move(values));
    }
    if (knots.is_object()) {
        const json& layout = knots.contains("uniform") ? knots["uniform"] : knots;
        if (!layout.contains("start") || !layout.contains("delta"))
            throw FormatError("uniform knots need \"start\" and \"delta\"");
        std::size_t count = 0;
        if (layout.contains("count")) {
            if (!layout["count"].is_number_unsigned())
                throw FormatError("knot \"count\" must be a non-negative integer");
            count = layout["count"].get<std::size_t>();
            if (expected && count != *expected)
                throw FormatError("knot count " + std::to_string(count) + " does not match the expected " +
                                  std::to_string(*expected));
        } else if (expected) {
            count = *expected;
        } else {
            throw FormatError("uniform knots need \"count\"");
        }
        return ExactKnotVector::uniform(rational_from_json(layout["start"], "knot start"),
                                        rational_from_json(layout["delta"], "knot delta"), count);
    }
    throw FormatError("\"knots\" must be a list or a {start, delta, count} object");
}

} // namespace

ExactKnotVector knots_from_json(const json& knots, int degree, std::size_t control_points)
{
    return parse_knots(knots, control_points + static_cast<std::size_t>(degree) + 1);
}

ExactKnotVector knots_from_json(const json& knots)
{
    return parse_knots(knots, std::nullopt);
}

SplineCurve spline_from_json(const json& doc)
{
    if (!doc.is_object())
        throw FormatError("spline file must be a JSON object");
    const int degree = degree_from_json(doc);

    if (!doc.contains("control_points") || !doc["control_points"].is_array() || doc["control_points"].empty())
        throw FormatError("spline file needs a non-empty \"control_points\" list");
    const json& pts = doc["control_points"];
    const std::size_t dim = pts[0].is_array() ? pts[0].size() : 1;
    if (dim == 0)
        throw FormatError("control points need at least one coordinate");

    Eigen::MatrixXd points(static_cast<Eigen::Index>(pts.size()), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const json& p = pts[i];
        if (p.is_array()) {
            if (p.size() != dim)
                throw FormatError("control point " + std::to_string(i) + " has dimension " + std::to_string(p.size()) +
                                  ", expected " + std::to_string(dim));
            for (std::size_t c = 0; c < dim; ++c)
                points(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
                    double_from_json(p[c], "control point coordinate");
        } else {
            if (dim != 1)
                throw FormatError("control point " + std::to_string(i) + " is a scalar in a " + std::to_string(dim) +
                                  "-D spline");
            points(static_cast<Eigen::Index>(i), 0) = double_from_json(p, "control point coordinate");
        }
    }

    if (!doc.contains("knots"))
        throw FormatError("spline file needs \"knots\"");
    auto knots = knots_from_json(doc["knots"], degree, pts.size());
    return SplineCurve(degree, std::move(knots), std::move(points));
}

json spline_to_json(const SplineCurve& curve)
{
    json knots = json::array();
    for (const auto& k : curve.knots().values())
        knots.push_back(to_string(k));
    json points = json::array();
    const auto& p = curve.control_points();
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index c = 0; c < p.cols(); ++c)
            row.push_back(p(i, c));
        points.push_back(std::move(row));
    }
    return json{{"degree", curve.degree()}, {"knots", std::move(knots)}, {"control_points", std::move(points)}};
}

json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

SplineCurve load_spline(const std::filesystem::path& path)
{
    return spline_from_json(read_json_file(path));
}

void save_spline(const std::filesystem::path& path, const SplineCurve& curve)
{
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out << spline_to_json(curve).dump(2) << '\n';
    if (!out)
        throw IoError("failed writing '" + path.string() + "'");
}

json matrix_to_json(const Matrix<Rational>& entries, int degree, std::optional<SpanIndex> span, bool cumulative)
{
    json rows = json::array();
    for (std::size_t r = 0; r < entries.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < entries.cols(); ++c)
            row.push_back(to_string(entries(r, c)));
        rows.push_back(std::move(row));
    }
    return json{
        {"degree", degree},
        {"span", span ? json(span->value) : json(nullptr)},
        {"cumulative", cumulative},
        {"orientation", "rows=powers"},
        {"entries", std::move(rows)},
    };
}

Matrix<Rational> matrix_from_json(const json& doc)
{
    if (doc.is_object() && !doc.contains("entries"))
        throw FormatError("matrix document needs \"entries\"");
    const json& rows = doc.is_object() ? doc["entries"] : doc;
    if (!rows.is_array() || rows.empty())
        throw FormatError("matrix entries must be a non-empty list of rows");
    const std::size_t cols = rows[0].size();
    Matrix<Rational> out(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array() || rows[r].size() != cols)
            throw FormatError("matrix rows must all have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            out(r, c) = rational_from_json(rows[r][c], "matrix entry");
    }
    return out;
}

std::string format_double(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_matrix_csv(std::ostream& out, const Matrix<Rational>& entries)
{
    for (std::size_t r = 0; r < entries.rows(); ++r) {
        for (std::size_t c = 0; c < entries.cols(); ++c) {
            if (c > 0)
                out << ',';
            out << format_double(to_double(entries(r, c)));
        }
        out << '\n';
    }
}

void write_samples_csv(std::ostream& out, const std::vector<Sample>& samples)
{
    const Eigen::Index dim = samples.empty() ? 0 : samples.front().point.size();
    out << "tau";
    for (Eigen::Index c = 0; c < dim; ++c)
        out << ",x" << c;
    out << '\n';
    for (const auto& s : samples) {
        out << format_double(s.tau);
        for (Eigen::Index c = 0; c < dim; ++c)
            out << ',' << format_double(s.point(c));
        out << '\n';
    }
}

} // namespace bspline::cli
