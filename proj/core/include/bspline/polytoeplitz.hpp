#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "bspline/matrix.hpp"
#include "bspline/rational.hpp"

namespace bspline {

/// Polynomial a_0 + a_1 x + ... + a_n x^n with exact coefficients, constant term first.
///
/// The stored length fixes degree() = size - 1 (trailing zeros are kept, so a
/// product's degree is always deg g + deg q). Equality is mathematical:
/// trailing zeros are ignored.
class PowerPoly
{
public:
    /// Throws SizeError on an empty coefficient list; the zero polynomial is {0}.
    explicit PowerPoly(std::vector<Rational> coeffs);
    PowerPoly(std::initializer_list<Rational> coeffs);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    /// Coefficient of x^i, zero beyond the stored length.
    Rational coeff(std::size_t i) const;

    /// Copy with trailing zero coefficients dropped (keeps at least one).
    PowerPoly trimmed() const;

    Rational operator()(const Rational& x) const;
    double operator()(double x) const;

    friend bool operator==(const PowerPoly& a, const PowerPoly& b);

private:
    std::vector<Rational> coeffs_;
};

/**
 * Lower-triangular Toeplitz matrix generated by a polynomial:
 *
 *   T(r, c) = a_{r-c}  for 0 <= r - c <= n,  0 otherwise.
 *
 * Multiplying T by the zero-padded coefficient column of q yields the
 * coefficient column of g * q.
 */
class ToeplitzLT
{
public:
    ToeplitzLT(PowerPoly generator, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    const PowerPoly& generator() const noexcept { return generator_; }

    Rational operator()(std::size_t r, std::size_t c) const;
    Matrix<Rational> to_matrix() const;

    /// T * [q_0 .. q_m 0 .. 0]^T. Throws SizeError if q has more than rows() coefficients.
    PowerPoly apply(const PowerPoly& q) const;

private:
    PowerPoly generator_;
    std::size_t rows_;
};

/// Throws SizeError unless rows >= degree(p) + 1.
ToeplitzLT toeplitz_from_poly(const PowerPoly& p, std::size_t rows);

/// Product by direct convolution.
PowerPoly poly_mul(const PowerPoly& g, const PowerPoly& q);

/// Product computed as toeplitz_from_poly(g, deg g + deg q + 1) applied to q.
PowerPoly poly_mul_toeplitz(const PowerPoly& g, const PowerPoly& q);

PowerPoly operator+(const PowerPoly& a, const PowerPoly& b);

} // namespace bspline
