#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "bspline/curve.hpp"

namespace bspline::cli {

enum class KnotLayout
{
    uniform,    // evenly spaced, exact rational spacing
    clamped,    // end knots repeated k+1 times, uniform interior
    irregular,  // random rational gaps, occasional repeated interior knots
};

/// max_i |a_i - b_i| / max(1, |a|_inf, |b|_inf). Values of order one or
/// below are compared absolutely, larger ones relatively.
double relative_deviation(const Eigen::VectorXd& a, const Eigen::VectorXd& b);
double relative_deviation(const std::vector<double>& a, const std::vector<double>& b);

/// Random exact knot vector for a degree-k spline with `control_points` points.
ExactKnotVector random_knots(std::mt19937_64& rng, int degree, int control_points, KnotLayout layout);

/// Random curve: N in [k+1, k+5], coordinates uniform in [-10, 10].
SplineCurve random_curve(std::mt19937_64& rng, int degree, int dimension, KnotLayout layout);

/// Random parameter in the curve's domain; one draw in eight lands on a knot.
double random_parameter(std::mt19937_64& rng, const SplineCurve& curve);

struct CheckOptions
{
    int degree_max = 3;
    int trials = 100;
    std::uint64_t seed = 0;
    double tolerance = 1e-10;
    /// Test hook: perturbs one entry of every uniform matrix before checking.
    bool inject_fault = false;
};

struct DegreeReport
{
    int degree = 0;
    double max_curve_deviation = 0.0;  // three evaluation paths, pairwise
    double max_basis_deviation = 0.0;  // basis row vs Cox-de Boor
    bool column_sums_exact = true;     // every built matrix sums to (1, 0, ..., 0)
    bool factorial_integral = true;    // k! * uniform entries are integers
    bool passed = true;
};

struct CheckReport
{
    std::vector<DegreeReport> degrees;
    bool passed = true;
};

/// Throws DegreeTooLarge / InvalidArgument for invalid options.
CheckReport run_check(const CheckOptions& options);

void print_report(std::ostream& out, const CheckReport& report);

} // namespace bspline::cli
