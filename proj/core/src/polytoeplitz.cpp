#include "bspline/polytoeplitz.hpp"

#include <algorithm>
#include <string>

namespace bspline {

PowerPoly::PowerPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw SizeError("polynomial needs at least one coefficient");
}

PowerPoly::PowerPoly(std::initializer_list<Rational> coeffs) : PowerPoly(std::vector<Rational>(coeffs)) {}

Rational PowerPoly::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

PowerPoly PowerPoly::trimmed() const
{
    std::size_t n = coeffs_.size();
    while (n > 1 && coeffs_[n - 1] == 0)
        --n;
    return PowerPoly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Rational PowerPoly::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

double PowerPoly::operator()(double x) const
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + to_double(*it);
    return acc;
}

bool operator==(const PowerPoly& a, const PowerPoly& b)
{
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.coeff(i) != b.coeff(i))
            return false;
    return true;
}

ToeplitzLT::ToeplitzLT(PowerPoly generator, std::size_t rows) : generator_(std::move(generator)), rows_(rows)
{
    if (rows_ < static_cast<std::size_t>(generator_.degree()) + 1)
        throw SizeError("Toeplitz matrix with " + std::to_string(rows_) + " rows cannot hold a degree-" +
                        std::to_string(generator_.degree()) + " generator");
}

Rational ToeplitzLT::operator()(std::size_t r, std::size_t c) const
{
    if (r < c)
        return 0;
    return generator_.coeff(r - c);
}

Matrix<Rational> ToeplitzLT::to_matrix() const
{
    Matrix<Rational> out(rows_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c <= r; ++c)
            out(r, c) = (*this)(r, c);
    return out;
}

PowerPoly ToeplitzLT::apply(const PowerPoly& q) const
{
    const auto& qc = q.coeffs();
    if (qc.size() > rows_)
        throw SizeError("operand has more coefficients than the Toeplitz matrix has columns");
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c <= r && c < qc.size(); ++c)
            out[r] += (*this)(r, c) * qc[c];
    return PowerPoly(std::move(out));
}

ToeplitzLT toeplitz_from_poly(const PowerPoly& p, std::size_t rows)
{
    return ToeplitzLT(p, rows);
}

PowerPoly poly_mul(const PowerPoly& g, const PowerPoly& q)
{
    const auto& a = g.coeffs();
    const auto& b = q.coeffs();
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t k = 0; k < b.size(); ++k)
            out[i + k] += a[i] * b[k];
    }
    return PowerPoly(std::move(out));
}

PowerPoly poly_mul_toeplitz(const PowerPoly& g, const PowerPoly& q)
{
    const auto rows = static_cast<std::size_t>(g.degree() + q.degree()) + 1;
    return toeplitz_from_poly(g, rows).apply(q);
}

PowerPoly operator+(const PowerPoly& a, const PowerPoly& b)
{
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a.coeff(i) + b.coeff(i);
    return PowerPoly(std::move(out));
}

} // namespace bspline
