#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <thread>

#include <Eigen/QR>

#include "bspline/curve.hpp"
#include "bspline_cli/check.hpp"

using bspline::ExactKnotVector;
using bspline::Point;
using bspline::Rational;
using bspline::SpanIndex;
using bspline::SplineCurve;
using bspline::cli::KnotLayout;

namespace {

SplineCurve ramp_cubic()
{
    Eigen::MatrixXd p(4, 1);
    p << 0, 1, 2, 3;
    return SplineCurve(3, ExactKnotVector::uniform(Rational(0), Rational(1), 8), p);
}

SplineCurve constant_curve(int k, const Eigen::Vector2d& value, int n)
{
    Eigen::MatrixXd p(n, 2);
    for (int i = 0; i < n; ++i)
        p.row(i) = value.transpose();
    return SplineCurve(k, ExactKnotVector::uniform(Rational(1, 2), Rational(1, 3), static_cast<std::size_t>(n + k + 1)),
                       p);
}

double cross(const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b)
{
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

// Andrew's monotone chain; counter-clockwise hull.
std::vector<Eigen::Vector2d> convex_hull(std::vector<Eigen::Vector2d> pts)
{
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y()); });
    std::vector<Eigen::Vector2d> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0)
            --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

double signed_distance_outside(const std::vector<Eigen::Vector2d>& hull, const Eigen::Vector2d& q)
{
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        const Eigen::Vector2d edge = b - a;
        worst = std::max(worst, -cross(a, b, q) / edge.norm());
    }
    return worst;
}

} // namespace

TEST(SplineCurve, RejectsInconsistentInput)
{
    const auto kv = ExactKnotVector::uniform(Rational(0), Rational(1), 8);
    EXPECT_THROW(SplineCurve(3, kv, Eigen::MatrixXd::Zero(5, 1)), bspline::InvalidKnots);
    EXPECT_THROW(SplineCurve(4, kv, Eigen::MatrixXd::Zero(3, 1)), bspline::InvalidKnots);
    EXPECT_THROW(SplineCurve(3, kv, Eigen::MatrixXd::Zero(4, 0)), bspline::InvalidArgument);
    Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(4, 1);
    bad(2, 0) = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(SplineCurve(3, kv, bad), bspline::InvalidArgument);
    EXPECT_THROW(SplineCurve(1, ExactKnotVector({0, 1, 1, 2}), Eigen::MatrixXd::Zero(2, 1)), bspline::InvalidKnots);
}

TEST(SplineCurve, RampCubicAllPaths)
{
    const auto c = ramp_cubic();
    EXPECT_EQ(c.domain(), (std::pair<double, double>{3.0, 4.0}));
    for (auto eval : {&SplineCurve::eval_coxdeboor, &SplineCurve::eval_matrix, &SplineCurve::eval_cumulative}) {
        EXPECT_NEAR((c.*eval)(3.5)(0), 1.5, 1e-15);
        EXPECT_NEAR((c.*eval)(3.0)(0), 1.0, 1e-15);
        EXPECT_NEAR((c.*eval)(4.0)(0), 2.0, 1e-15);
        EXPECT_THROW((c.*eval)(4.5), bspline::DomainError);
        EXPECT_THROW((c.*eval)(2.0), bspline::DomainError);
    }
}

TEST(SplineCurve, ConstantCurveIsConstant)
{
    const Eigen::Vector2d p(1.25, -3.5);
    for (int k : {0, 1, 2, 3, 5}) {
        const auto c = constant_curve(k, p, k + 3);
        const auto [lo, hi] = c.domain();
        for (int s = 0; s <= 10; ++s) {
            const double tau = lo + (hi - lo) * s / 10.0;
            EXPECT_LT((c.eval_coxdeboor(tau) - p).norm(), 1e-13);
            EXPECT_LT((c.eval_matrix(tau) - p).norm(), 1e-13);
            EXPECT_EQ(c.eval_cumulative(tau), p); // every difference is exactly zero
            if (k >= 1)
                EXPECT_LT(c.eval_derivative(tau, 1).norm(), 1e-12);
        }
        for (const auto& s : c.sample(5))
            EXPECT_LT((s.point - p).norm(), 1e-13);
    }
}

TEST(SplineCurve, DerivativeOfRamp)
{
    const auto c = ramp_cubic();
    for (double tau : {3.0, 3.2, 3.5, 3.9, 4.0})
        EXPECT_NEAR(c.eval_derivative(tau, 1)(0), 1.0, 1e-13);
    EXPECT_NEAR(c.eval_derivative(3.5, 2)(0), 0.0, 1e-13);
    EXPECT_EQ(c.eval_derivative(3.5, 4)(0), 0.0);
    EXPECT_EQ(c.eval_derivative(3.5, 7)(0), 0.0);
    EXPECT_THROW(c.eval_derivative(3.5, 0), bspline::InvalidArgument);
    EXPECT_THROW(c.eval_derivative(5.0, 1), bspline::DomainError);
}

TEST(SplineCurve, DerivativesMatchFiniteDifferences)
{
    std::mt19937_64 rng(47);
    const double h = 1e-5;
    for (int trial = 0; trial < 300; ++trial) {
        const int k = 1 + trial % 5;
        const auto c = bspline::cli::random_curve(rng, k, 2, static_cast<KnotLayout>(trial % 3));
        const auto [lo, hi] = c.domain();
        const double tau = std::uniform_real_distribution<double>(lo + 2 * h, hi - 2 * h)(rng);
        // Stay away from knots so the difference quotient does not straddle one.
        const auto& kv = c.float_knots();
        bool near_knot = false;
        for (std::size_t i = 0; i < kv.size(); ++i)
            near_knot = near_knot || std::abs(kv[i] - tau) < 4 * h;
        if (near_knot)
            continue;
        const Point fd1 = (c.eval_matrix(tau + h) - c.eval_matrix(tau - h)) / (2 * h);
        EXPECT_LT((c.eval_derivative(tau, 1) - fd1).norm(), 1e-4 * std::max(1.0, fd1.norm()));
        if (k >= 2) {
            const Point fd2 = (c.eval_derivative(tau + h, 1) - c.eval_derivative(tau - h, 1)) / (2 * h);
            EXPECT_LT((c.eval_derivative(tau, 2) - fd2).norm(), 1e-4 * std::max(1.0, fd2.norm()));
        }
    }
}

TEST(SplineCurve, NonUniformChainFactorUsesSpanWidth)
{
    // Linear spline through P_i at knots: derivative is the slope of each segment.
    Eigen::MatrixXd p(4, 1);
    p << 0, 2, 3, 7;
    const SplineCurve c(1, ExactKnotVector({0, 0, 1, 3, 4, 4}), p);
    EXPECT_NEAR(c.eval_derivative(0.5, 1)(0), 2.0, 1e-14);
    EXPECT_NEAR(c.eval_derivative(2.0, 1)(0), 0.5, 1e-14);
    EXPECT_NEAR(c.eval_derivative(3.5, 1)(0), 4.0, 1e-14);
}

TEST(SplineCurve, Sampling)
{
    const auto c = ramp_cubic();
    const auto two = c.sample(2);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0].tau, 3.0);
    EXPECT_EQ(two[1].tau, 4.0);
    EXPECT_NEAR(two[0].point(0), 1.0, 1e-15);
    EXPECT_NEAR(two[1].point(0), 2.0, 1e-15);
    const auto three = c.sample(3);
    EXPECT_EQ(three[1].tau, 3.5);
    EXPECT_NEAR(three[1].point(0), 1.5, 1e-15);
    EXPECT_THROW(c.sample(1), bspline::InvalidArgument);
}

TEST(SplineCurve, ThreePathAgreement)
{
    std::mt19937_64 rng(53);
    double worst = 0.0;
    for (int trial = 0; trial < 600; ++trial) {
        const int k = std::array{0, 1, 2, 3, 4, 5, 7}[trial % 7];
        const auto c = bspline::cli::random_curve(rng, k, 1 + trial % 3, static_cast<KnotLayout>(trial % 3));
        const double tau = bspline::cli::random_parameter(rng, c);
        const Point a = c.eval_coxdeboor(tau);
        const Point b = c.eval_matrix(tau);
        const Point d = c.eval_cumulative(tau);
        worst = std::max({worst, bspline::cli::relative_deviation(a, b), bspline::cli::relative_deviation(a, d)});
    }
    EXPECT_LE(worst, 1e-10);
}

TEST(SplineCurve, ConvexHullOfActivePoints)
{
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 300; ++trial) {
        const int k = 1 + trial % 4;
        const int dim = 1 + trial % 2;
        const auto c = bspline::cli::random_curve(rng, k, dim, static_cast<KnotLayout>(trial % 3));
        const double tau = bspline::cli::random_parameter(rng, c);
        const int j = bspline::find_span(c.float_knots(), k, tau).value;
        const Eigen::MatrixXd local = c.control_points().middleRows(j - k, k + 1);
        const Point p = c.eval_matrix(tau);
        if (dim == 1) {
            EXPECT_GE(p(0), local.minCoeff() - 1e-9);
            EXPECT_LE(p(0), local.maxCoeff() + 1e-9);
        } else {
            std::vector<Eigen::Vector2d> pts;
            for (Eigen::Index i = 0; i < local.rows(); ++i)
                pts.emplace_back(local(i, 0), local(i, 1));
            const auto hull = convex_hull(pts);
            if (hull.size() >= 3)
                EXPECT_LE(signed_distance_outside(hull, Eigen::Vector2d(p(0), p(1))), 1e-9);
        }
    }
}

TEST(SplineCurve, ContinuityAtInteriorSingleKnots)
{
    std::mt19937_64 rng(61);
    const double h = 1e-5;
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 2 + trial % 4;
        const auto c = bspline::cli::random_curve(rng, k, 3, trial % 2 ? KnotLayout::uniform : KnotLayout::clamped);
        const auto& kv = c.float_knots();
        for (int j = k + 1; j < c.control_point_count(); ++j) {
            if (kv[j - 1] == kv[j] || kv[j] == kv[j + 1])
                continue;
            // Left limit from span j-1 at u = 1, right value from span j at u = 0.
            const auto& left_m = c.span_matrix(SpanIndex(j - 1));
            const auto left_row = bspline::basis_row(left_m, 1.0);
            Point left = Point::Zero(3);
            for (int i = 0; i <= k; ++i)
                left += left_row[i] * c.control_points().row(j - 1 - k + i).transpose();
            EXPECT_LE((left - c.eval_matrix(kv[j])).norm(), 1e-9);

            // Central quotient with the O(h) term cancelled.
            const auto central = [&](double s) -> Point {
                return (c.eval_matrix(kv[j] + s) - c.eval_matrix(kv[j] - s)) / (2 * s);
            };
            const Point fd = 2.0 * central(h / 2) - central(h);
            const Point right = c.eval_derivative(kv[j], 1);
            EXPECT_LE((right - fd).norm(), 1e-6 * std::max(1.0, fd.norm()));

            const auto dpr = bspline::power_row(left_m.rows(), 1.0, 1);
            Point left_d = Point::Zero(3);
            for (int i = 0; i <= k; ++i) {
                double w = 0.0;
                for (std::size_t r = 0; r < left_m.rows(); ++r)
                    w += dpr[r] * left_m(r, static_cast<std::size_t>(i));
                left_d += w * c.control_points().row(j - 1 - k + i).transpose();
            }
            left_d /= kv[j] - kv[j - 1];
            EXPECT_LE((left_d - right).norm(), 1e-6 * std::max(1.0, right.norm()));
            ++checked;
        }
    }
    EXPECT_GT(checked, 50);
}

TEST(SplineCurve, LinearPrecision)
{
    for (int k : {1, 2, 3, 5}) {
        const int n = k + 6;
        Eigen::MatrixXd p(n, 1);
        for (int i = 0; i < n; ++i)
            p(i, 0) = i;
        const SplineCurve c(k, ExactKnotVector::uniform(Rational(0), Rational(1), static_cast<std::size_t>(n + k + 1)), p);
        const auto samples = c.sample(101);
        // Least-squares line through the samples.
        Eigen::MatrixXd a(samples.size(), 2);
        Eigen::VectorXd y(samples.size());
        for (std::size_t i = 0; i < samples.size(); ++i) {
            a(static_cast<Eigen::Index>(i), 0) = 1.0;
            a(static_cast<Eigen::Index>(i), 1) = samples[i].tau;
            y(static_cast<Eigen::Index>(i)) = samples[i].point(0);
        }
        const Eigen::Vector2d fit = a.colPivHouseholderQr().solve(y);
        EXPECT_LE((a * fit - y).cwiseAbs().maxCoeff(), 1e-9) << "k=" << k;
        EXPECT_NEAR(fit(1), 1.0, 1e-9);
    }
}

TEST(SplineCurve, ConcurrentEvaluation)
{
    std::mt19937_64 rng(67);
    const auto c = bspline::cli::random_curve(rng, 4, 3, KnotLayout::irregular);
    const auto [lo, hi] = c.domain();
    std::vector<double> taus;
    for (int i = 0; i < 200; ++i)
        taus.push_back(lo + (hi - lo) * i / 199.0);
    std::vector<Point> expected;
    for (double t : taus)
        expected.push_back(c.eval_matrix(t));

    std::vector<int> mismatches(4, 0);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t)
        threads.emplace_back([&, t] {
            for (std::size_t i = 0; i < taus.size(); ++i)
                if (c.eval_matrix(taus[i]) != expected[i] || c.eval_cumulative(taus[i]).size() != 3)
                    ++mismatches[t];
        });
    for (auto& th : threads)
        th.join();
    for (int m : mismatches)
        EXPECT_EQ(m, 0);
}
