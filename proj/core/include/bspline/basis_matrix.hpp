#pragma once

#include <optional>
#include <vector>

#include "bspline/knots.hpp"
#include "bspline/matrix.hpp"
#include "bspline/rational.hpp"

namespace bspline {

/**
 * Basis matrix M^k(j) of a degree-k spline on span j.
 *
 * Rows index powers of the span parameter u, columns the active basis
 * functions B_{j-k}, ..., B_j:
 *
 *   [B_{j-k,k}(u) ... B_{j,k}(u)] = [1 u ... u^k] * M^k(j).
 *
 * Every row except the first sums to zero and the first sums to one.
 */
class BasisMatrix
{
public:
    BasisMatrix(int degree, Matrix<Rational> entries, std::optional<SpanIndex> span = std::nullopt);

    int degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return entries_.rows(); }
    const Matrix<Rational>& entries() const noexcept { return entries_; }
    const Rational& operator()(std::size_t power, std::size_t column) const { return entries_(power, column); }

    /// Span the matrix was built for; empty for the span-independent uniform matrix.
    const std::optional<SpanIndex>& span() const noexcept { return span_; }

    Matrix<double> to_double() const;

    friend bool operator==(const BasisMatrix& a, const BasisMatrix& b) { return a.entries_ == b.entries_; }

private:
    int degree_;
    Matrix<Rational> entries_;
    std::optional<SpanIndex> span_;
};

/// Cumulative-form matrix: column c is the suffix sum of basis-matrix columns
/// c..k, so [1 u ... u^k] * C gives the weights of the first local control
/// point (column 0, always 1) and of the successive differences P_c - P_{c-1}.
class CumulativeBasisMatrix
{
public:
    CumulativeBasisMatrix(int degree, Matrix<Rational> entries, std::optional<SpanIndex> span = std::nullopt);

    int degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return entries_.rows(); }
    const Matrix<Rational>& entries() const noexcept { return entries_; }
    const Rational& operator()(std::size_t power, std::size_t column) const { return entries_(power, column); }
    const std::optional<SpanIndex>& span() const noexcept { return span_; }

    Matrix<double> to_double() const;

    friend bool operator==(const CumulativeBasisMatrix& a, const CumulativeBasisMatrix& b)
    {
        return a.entries_ == b.entries_;
    }

private:
    int degree_;
    Matrix<Rational> entries_;
    std::optional<SpanIndex> span_;
};

/// Constant basis matrix of the uniform B-spline of degree k, built by
///
///   M^k = (1/k) ( [M^{k-1}; 0] A + [0; M^{k-1}] B ),   M^0 = [1],
///
/// with A, B of shape k x (k+1): A(r,r) = r+1, A(r,r+1) = k-1-r,
/// B(r,r) = -1, B(r,r+1) = 1. Results are memoized per degree; concurrent
/// callers are safe.
///
/// Throws DegreeTooLarge above kMaxDegree.
const BasisMatrix& uniform_basis_matrix(int degree);

/// Basis matrix of span j over arbitrary exact knots, by the recursion
///
///   M^k(j) = [M^{k-1}(j); 0] D0 + [0; M^{k-1}(j)] D1
///
/// where row r of the k x (k+1) factors holds (1 - d0_i, d0_i) and
/// (-d1_i, d1_i) at columns r, r+1 with i = j-k+r+1.
///
/// Throws IndexError or DegenerateSpan for an invalid span.
BasisMatrix general_basis_matrix(const ExactKnotVector& kv, int degree, SpanIndex span);

CumulativeBasisMatrix cumulative_matrix(const BasisMatrix& m);

enum class Extrapolation
{
    reject,
    allow,
};

/// lambda_c(u) = sum_r u^r C(r, c). lambda_0 is identically 1.
/// Throws DomainError for u outside [0, 1] unless extrapolation is allowed.
template <typename T>
std::vector<T> lambda_weights(const CumulativeBasisMatrix& cm, const T& u,
                              Extrapolation policy = Extrapolation::reject);

/// Values of the k+1 active basis functions: [1 u ... u^k] * M.
template <typename T>
std::vector<T> basis_row(const BasisMatrix& m, const T& u);

/// Same product over an already converted matrix; used on hot paths.
std::vector<double> basis_row(const Matrix<double>& m, double u);

/// Row vector [1 u ... u^k] differentiated `order` times with respect to u.
std::vector<double> power_row(std::size_t size, double u, int order = 0);

} // namespace bspline
