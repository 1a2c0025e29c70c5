#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bspline/errors.hpp"
#include "bspline/rational.hpp"

namespace bspline {

/// Highest supported spline degree. k! overflows nothing here, but every
/// matrix entry carries a k! denominator and the cost grows quickly.
inline constexpr int kMaxDegree = 30;

/// Throws DegreeTooLarge for degree > kMaxDegree, InvalidArgument for negative degree.
void validate_degree(int degree);

/// Index j of a knot span [t_j, t_{j+1}).
struct SpanIndex
{
    int value = 0;

    constexpr explicit SpanIndex(int j) noexcept : value(j) {}
    friend constexpr auto operator<=>(SpanIndex, SpanIndex) = default;
};

/**
 * Non-decreasing sequence of knots t_0 .. t_{M-1}, M >= 2.
 *
 * The scalar type is the storage tag: BasicKnotVector<Rational> holds exact
 * knots and feeds basis-matrix construction, BasicKnotVector<double> is for
 * plain floating-point evaluation.
 */
template <typename T>
class BasicKnotVector
{
public:
    using value_type = T;

    /// Throws InvalidKnots when the sequence is decreasing somewhere, shorter
    /// than two knots, or contains a non-finite value.
    explicit BasicKnotVector(std::vector<T> values);

    /// `count` knots start, start + delta, ...; delta must be positive.
    static BasicKnotVector uniform(const T& start, const T& delta, std::size_t count);

    std::size_t size() const noexcept { return values_.size(); }
    const T& operator[](std::size_t i) const { return values_[i]; }
    const T& at(std::size_t i) const { return values_.at(i); }
    std::span<const T> values() const noexcept { return values_; }

    /// True iff all consecutive differences are equal (exactly for rationals,
    /// within 1e-12 * spacing for doubles).
    bool is_uniform() const noexcept { return spacing_.has_value(); }
    const std::optional<T>& spacing() const noexcept { return spacing_; }

    /// Number of control points a degree-k spline over these knots carries.
    /// Throws InvalidKnots when there are fewer than 2k+2 knots.
    int control_point_count(int degree) const;

    /// Evaluable domain [t_k, t_{M-k-1}].
    std::pair<T, T> domain(int degree) const;

    friend bool operator==(const BasicKnotVector&, const BasicKnotVector&) = default;

private:
    std::vector<T> values_;
    std::optional<T> spacing_;
};

using KnotVector = BasicKnotVector<double>;
using ExactKnotVector = BasicKnotVector<Rational>;

KnotVector to_float(const ExactKnotVector& kv);

/// Span containing tau, half-open [t_j, t_{j+1}). At the right end of the
/// domain the last non-degenerate span is returned. Zero-width spans are
/// never returned.
///
/// Throws DomainError when tau is outside [t_k, t_{M-k-1}] or not finite,
/// InvalidKnots when the knot vector is too short for the degree or the
/// domain has zero width.
template <typename T>
SpanIndex find_span(const BasicKnotVector<T>& kv, int degree, const T& tau);

/// Checks k <= j <= M-k-2 and t_j < t_{j+1}.
template <typename T>
void validate_span(const BasicKnotVector<T>& kv, int degree, SpanIndex span);

/// Affine map of span j onto [0, 1]: u = (tau - t_j) / (t_{j+1} - t_j).
/// Throws DegenerateSpan for a zero-width span and DomainError when tau lies
/// outside the span.
template <typename T>
T normalize(const BasicKnotVector<T>& kv, SpanIndex span, const T& tau);

/// Coefficients rewriting one Cox-de Boor step in the span parameter u:
///   B_{i,k}(u) = (d0 + u d1) B_{i,k-1}(u) + (h0 + u h1) B_{i+1,k-1}(u).
template <typename T>
struct CoxDeBoorCoefficients
{
    T d0, d1, h0, h1;
};

/// d/h coefficients of degree `degree` on span j for i = j-k .. j.
/// Every zero-denominator quotient is taken as 0.
template <typename T>
class LocalCoefficients
{
public:
    LocalCoefficients(int degree, SpanIndex span, std::vector<CoxDeBoorCoefficients<T>> rows)
        : degree_(degree), span_(span), rows_(std::move(rows))
    {
    }

    int degree() const noexcept { return degree_; }
    SpanIndex span() const noexcept { return span_; }
    int first_index() const noexcept { return span_.value - degree_; }
    int last_index() const noexcept { return span_.value; }

    /// Coefficients of basis function i (global index). Throws IndexError.
    const CoxDeBoorCoefficients<T>& at(int i) const;

private:
    int degree_;
    SpanIndex span_;
    std::vector<CoxDeBoorCoefficients<T>> rows_;
};

template <typename T>
LocalCoefficients<T> local_coefficients(const BasicKnotVector<T>& kv, int degree, SpanIndex span);

/// a / b, or 0 when b == 0.
template <typename T>
T ratio_or_zero(const T& a, const T& b)
{
    return b == T(0) ? T(0) : T(a / b);
}

} // namespace bspline
