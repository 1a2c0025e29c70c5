#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "bspline/basis_matrix.hpp"
#include "bspline/knots.hpp"

namespace bspline {

using Point = Eigen::VectorXd;

struct Sample
{
    double tau;
    Point point;
};

/**
 * Degree-k B-spline curve in R^d over exact knots.
 *
 * Knots are kept as rationals so per-span basis matrices are exact; they are
 * converted to double once, at construction. Control points are doubles and
 * are stored one per row.
 *
 * Evaluation is const and touches no mutable state, so one curve may be
 * evaluated from many threads.
 */
class SplineCurve
{
public:
    /// Throws InvalidKnots unless M = N + k + 1 and the domain [t_k, t_N] has
    /// positive width, InvalidArgument for empty or non-finite control points.
    SplineCurve(int degree, ExactKnotVector knots, Eigen::MatrixXd control_points);

    int degree() const noexcept { return degree_; }
    int dimension() const noexcept { return static_cast<int>(points_.cols()); }
    int control_point_count() const noexcept { return static_cast<int>(points_.rows()); }
    const ExactKnotVector& knots() const noexcept { return knots_; }
    const KnotVector& float_knots() const noexcept { return float_knots_; }
    const Eigen::MatrixXd& control_points() const noexcept { return points_; }

    /// Evaluable domain [t_k, t_{M-k-1}] in floating point.
    std::pair<double, double> domain() const noexcept { return domain_; }

    /// Basis matrices of span j in floating point. Throws IndexError or
    /// DegenerateSpan for spans outside the domain or of zero width.
    const Matrix<double>& span_matrix(SpanIndex span) const;
    const Matrix<double>& span_cumulative_matrix(SpanIndex span) const;

    /// Sum of B_{i,k}(tau) P_i with basis values from the Cox-de Boor recursion.
    Point eval_coxdeboor(double tau) const;

    /// [1 u ... u^k] M^k(j) [P_{j-k} ... P_j]^T.
    Point eval_matrix(double tau) const;

    /// P_{j-k} + sum_c lambda_c(u) (P_{j-k+c} - P_{j-k+c-1}).
    Point eval_cumulative(double tau) const;

    /// d^order P / d tau^order from the differentiated power row and the
    /// span-width chain factor. Orders above the degree give the zero vector.
    /// Throws InvalidArgument for order < 1.
    Point eval_derivative(double tau, int order) const;

    /// n equally spaced evaluations over the domain, both ends included.
    /// Throws InvalidArgument for n < 2.
    std::vector<Sample> sample(int n) const;

private:
    struct SpanLocal
    {
        SpanIndex span;
        double u;
        double width;
    };

    SpanLocal locate(double tau) const;
    Eigen::MatrixXd local_points(SpanIndex span) const;

    int degree_;
    ExactKnotVector knots_;
    KnotVector float_knots_;
    Eigen::MatrixXd points_;
    std::pair<double, double> domain_;
    // Indexed by j - k; empty matrices mark zero-width spans.
    std::vector<Matrix<double>> span_matrices_;
    std::vector<Matrix<double>> cumulative_matrices_;
};

} // namespace bspline
