#include "bspline/curve.hpp"

#include <cmath>
#include <string>

#include "bspline/coxdeboor.hpp"

namespace bspline {

SplineCurve::SplineCurve(int degree, ExactKnotVector knots, Eigen::MatrixXd control_points)
    : degree_(degree), knots_(std::move(knots)), float_knots_(to_float(knots_)), points_(std::move(control_points))
{
    const int n = knots_.control_point_count(degree_);
    if (points_.rows() != n)
        throw InvalidKnots("degree " + std::to_string(degree_) + " with " + std::to_string(knots_.size()) +
                           " knots needs " + std::to_string(n) + " control points, got " +
                           std::to_string(points_.rows()));
    if (points_.cols() < 1)
        throw InvalidArgument("control points must have at least one coordinate");
    if (!points_.allFinite())
        throw InvalidArgument("control points must be finite");

    const auto [lo, hi] = knots_.domain(degree_);
    if (!(lo < hi))
        throw InvalidKnots("evaluable domain has zero width");
    domain_ = {to_double(lo), to_double(hi)};

    span_matrices_.resize(static_cast<std::size_t>(n - degree_));
    cumulative_matrices_.resize(span_matrices_.size());
    for (int j = degree_; j < n; ++j) {
        const SpanIndex span(j);
        if (knots_[static_cast<std::size_t>(j)] == knots_[static_cast<std::size_t>(j) + 1])
            continue;
        const BasisMatrix m = knots_.is_uniform() ? uniform_basis_matrix(degree_)
                                                  : general_basis_matrix(knots_, degree_, span);
        span_matrices_[static_cast<std::size_t>(j - degree_)] = m.to_double();
        cumulative_matrices_[static_cast<std::size_t>(j - degree_)] = cumulative_matrix(m).to_double();
    }
}

const Matrix<double>& SplineCurve::span_matrix(SpanIndex span) const
{
    validate_span(knots_, degree_, span);
    return span_matrices_[static_cast<std::size_t>(span.value - degree_)];
}

const Matrix<double>& SplineCurve::span_cumulative_matrix(SpanIndex span) const
{
    validate_span(knots_, degree_, span);
    return cumulative_matrices_[static_cast<std::size_t>(span.value - degree_)];
}

SplineCurve::SpanLocal SplineCurve::locate(double tau) const
{
    const SpanIndex span = find_span(float_knots_, degree_, tau);
    const auto j = static_cast<std::size_t>(span.value);
    return {span, normalize(float_knots_, span, tau), float_knots_[j + 1] - float_knots_[j]};
}

Eigen::MatrixXd SplineCurve::local_points(SpanIndex span) const
{
    return points_.middleRows(span.value - degree_, degree_ + 1);
}

Point SplineCurve::eval_coxdeboor(double tau) const
{
    locate(tau);
    const auto weights = coxdeboor::basis_functions(float_knots_, degree_, tau);
    Point out = Point::Zero(points_.cols());
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights[i] != 0.0)
            out += weights[i] * points_.row(static_cast<Eigen::Index>(i)).transpose();
    return out;
}

Point SplineCurve::eval_matrix(double tau) const
{
    const auto local = locate(tau);
    const auto row = basis_row(span_matrix(local.span), local.u);
    const Eigen::MatrixXd p = local_points(local.span);
    Point out = Point::Zero(points_.cols());
    for (std::size_t c = 0; c < row.size(); ++c)
        out += row[c] * p.row(static_cast<Eigen::Index>(c)).transpose();
    return out;
}

Point SplineCurve::eval_cumulative(double tau) const
{
    const auto local = locate(tau);
    const auto lambda = basis_row(span_cumulative_matrix(local.span), local.u);
    const Eigen::MatrixXd p = local_points(local.span);
    Point out = p.row(0).transpose();
    for (Eigen::Index c = 1; c < p.rows(); ++c)
        out += lambda[static_cast<std::size_t>(c)] * (p.row(c) - p.row(c - 1)).transpose();
    return out;
}

Point SplineCurve::eval_derivative(double tau, int order) const
{
    if (order < 1)
        throw InvalidArgument("derivative order must be at least 1");
    const auto local = locate(tau);
    Point out = Point::Zero(points_.cols());
    if (order > degree_)
        return out;

    const Matrix<double>& m = span_matrix(local.span);
    const auto pr = power_row(m.rows(), local.u, order);
    const Eigen::MatrixXd p = local_points(local.span);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        double w = 0.0;
        for (std::size_t r = 0; r < m.rows(); ++r)
            w += pr[r] * m(r, c);
        out += w * p.row(static_cast<Eigen::Index>(c)).transpose();
    }
    return out * std::pow(1.0 / local.width, order);
}

std::vector<Sample> SplineCurve::sample(int n) const
{
    if (n < 2)
        throw InvalidArgument("sampling needs at least two points");
    const auto [lo, hi] = domain_;
    std::vector<Sample> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double tau = (i == n - 1) ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        out.push_back({tau, eval_matrix(tau)});
    }
    return out;
}

} // namespace bspline
