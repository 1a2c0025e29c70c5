#include "bspline_cli/check.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "bspline/basis_matrix.hpp"
#include "bspline/coxdeboor.hpp"

namespace bspline::cli {

namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool column_sums_exact(const Matrix<Rational>& m)
{
    const auto sums = m.row_sums();
    for (std::size_t r = 0; r < sums.size(); ++r)
        if (sums[r] != (r == 0 ? 1 : 0))
            return false;
    return true;
}

bool factorial_integral(const Matrix<Rational>& m, int degree)
{
    const Rational scale(factorial(degree));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!is_integer(scale * m(r, c)))
                return false;
    return true;
}

} // namespace

double relative_deviation(const Eigen::VectorXd& a, const Eigen::VectorXd& b)
{
    if (a.size() != b.size())
        throw SizeError("relative_deviation: size mismatch");
    if (a.size() == 0)
        return 0.0;
    const double scale = std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
    return (a - b).cwiseAbs().maxCoeff() / scale;
}

double relative_deviation(const std::vector<double>& a, const std::vector<double>& b)
{
    return relative_deviation(Eigen::Map<const Eigen::VectorXd>(a.data(), static_cast<Eigen::Index>(a.size())),
                              Eigen::Map<const Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(b.size())));
}

ExactKnotVector random_knots(std::mt19937_64& rng, int degree, int control_points, KnotLayout layout)
{
    const int count = control_points + degree + 1;
    switch (layout) {
    case KnotLayout::uniform: {
        const Rational start(uniform_int(rng, -6, 6), uniform_int(rng, 1, 3));
        const Rational delta(uniform_int(rng, 1, 4), uniform_int(rng, 1, 3));
        return ExactKnotVector::uniform(start, delta, static_cast<std::size_t>(count));
    }
    case KnotLayout::clamped: {
        std::vector<Rational> values;
        const int interior = control_points - degree - 1;
        for (int i = 0; i <= degree; ++i)
            values.emplace_back(0);
        for (int i = 1; i <= interior; ++i)
            values.emplace_back(i, interior + 1);
        for (int i = 0; i <= degree; ++i)
            values.emplace_back(1);
        return ExactKnotVector(std::move(values));
    }
    case KnotLayout::irregular:
        break;
    }

    for (;;) {
        std::vector<Rational> values{Rational(uniform_int(rng, -3, 3))};
        for (int i = 1; i < count; ++i) {
            const bool repeat = uniform_int(rng, 0, 4) == 0;
            const Rational gap = repeat ? Rational(0) : Rational(uniform_int(rng, 1, 5), uniform_int(rng, 1, 4));
            values.push_back(values.back() + gap);
        }
        ExactKnotVector kv(std::move(values));
        const auto [lo, hi] = kv.domain(degree);
        if (lo < hi)
            return kv;
    }
}

SplineCurve random_curve(std::mt19937_64& rng, int degree, int dimension, KnotLayout layout)
{
    const int n = degree + 1 + uniform_int(rng, 0, 4);
    auto kv = random_knots(rng, degree, n, layout);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    Eigen::MatrixXd points(n, dimension);
    for (Eigen::Index i = 0; i < points.size(); ++i)
        points(i) = coord(rng);
    return SplineCurve(degree, std::move(kv), std::move(points));
}

double random_parameter(std::mt19937_64& rng, const SplineCurve& curve)
{
    const auto [lo, hi] = curve.domain();
    if (uniform_int(rng, 0, 7) == 0) {
        const auto& kv = curve.float_knots();
        const int k = curve.degree();
        return kv[static_cast<std::size_t>(uniform_int(rng, k, curve.control_point_count()))];
    }
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

CheckReport run_check(const CheckOptions& options)
{
    validate_degree(options.degree_max);
    if (options.trials < 0)
        throw InvalidArgument("trials must be non-negative");

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    CheckReport report;

    for (int k = 0; k <= options.degree_max; ++k) {
        DegreeReport dr;
        dr.degree = k;

        Matrix<Rational> uniform = uniform_basis_matrix(k).entries();
        if (options.inject_fault)
            uniform(0, 0) += Rational(1, 1000);
        dr.column_sums_exact = column_sums_exact(uniform);
        dr.factorial_integral = factorial_integral(uniform, k);

        // Basis row of the uniform matrix against the recursion on knots 0, 1, ..., 2k+1.
        const auto integer_knots = KnotVector::uniform(0.0, 1.0, static_cast<std::size_t>(2 * k + 2));
        const Matrix<double> uniform_d = uniform.map<double>([](const Rational& v) { return to_double(v); });
        for (int t = 0; t < options.trials; ++t) {
            const double u = unit(rng);
            const auto oracle = coxdeboor::basis_functions(integer_knots, k, static_cast<double>(k) + u);
            dr.max_basis_deviation = std::max(dr.max_basis_deviation, relative_deviation(basis_row(uniform_d, u), oracle));
        }

        for (auto layout : {KnotLayout::uniform, KnotLayout::clamped, KnotLayout::irregular}) {
            const int n = k + 1 + uniform_int(rng, 0, 3);
            const auto kv = random_knots(rng, k, n, layout);
            for (int j = k; j < n; ++j) {
                if (kv[static_cast<std::size_t>(j)] == kv[static_cast<std::size_t>(j) + 1])
                    continue;
                if (!column_sums_exact(general_basis_matrix(kv, k, SpanIndex(j)).entries()))
                    dr.column_sums_exact = false;
            }
        }

        for (int t = 0; t < options.trials; ++t) {
            const auto layout = static_cast<KnotLayout>(t % 3);
            const auto curve = random_curve(rng, k, 1 + uniform_int(rng, 0, 2), layout);
            const double tau = random_parameter(rng, curve);
            const Point a = curve.eval_coxdeboor(tau);
            const Point b = curve.eval_matrix(tau);
            const Point c = curve.eval_cumulative(tau);
            dr.max_curve_deviation = std::max(
                {dr.max_curve_deviation, relative_deviation(a, b), relative_deviation(a, c), relative_deviation(b, c)});
        }

        dr.passed = dr.column_sums_exact && dr.factorial_integral && dr.max_basis_deviation <= options.tolerance &&
                    dr.max_curve_deviation <= options.tolerance;
        report.passed = report.passed && dr.passed;
        report.degrees.push_back(dr);
    }
    return report;
}

void print_report(std::ostream& out, const CheckReport& report)
{
    char line[256];
    for (const auto& d : report.degrees) {
        std::snprintf(line, sizeof(line),
                      "degree %2d: three-path max deviation %.3e, basis-row max deviation %.3e, column sums %s, "
                      "k!-integral %s: %s\n",
                      d.degree, d.max_curve_deviation, d.max_basis_deviation, d.column_sums_exact ? "exact" : "WRONG",
                      d.factorial_integral ? "yes" : "NO", d.passed ? "PASS" : "FAIL");
        out << line;
    }
    out << (report.passed ? "check passed" : "check FAILED") << '\n';
}

} // namespace bspline::cli
