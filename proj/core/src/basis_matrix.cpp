#include "bspline/basis_matrix.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <string>

namespace bspline {

namespace {

template <typename T>
T convert(const Rational& value)
{
    if constexpr (std::is_same_v<T, Rational>)
        return value;
    else
        return static_cast<T>(to_double(value));
}

void require_square(const Matrix<Rational>& entries, int degree)
{
    validate_degree(degree);
    const auto n = static_cast<std::size_t>(degree) + 1;
    if (entries.rows() != n || entries.cols() != n)
        throw SizeError("degree-" + std::to_string(degree) + " basis matrix must be " + std::to_string(n) + "x" +
                        std::to_string(n));
}

// [M; 0] when zero_row_last, [0; M] otherwise.
Matrix<Rational> pad_row(const Matrix<Rational>& m, bool zero_row_last)
{
    Matrix<Rational> out(m.rows() + 1, m.cols());
    const std::size_t offset = zero_row_last ? 0 : 1;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r + offset, c) = m(r, c);
    return out;
}

Matrix<Rational> next_uniform(const Matrix<Rational>& prev, int degree)
{
    const auto k = static_cast<std::size_t>(degree);
    Matrix<Rational> a(k, k + 1);
    Matrix<Rational> b(k, k + 1);
    for (std::size_t r = 0; r < k; ++r) {
        a(r, r) = Rational(static_cast<long long>(r) + 1);
        a(r, r + 1) = Rational(static_cast<long long>(k) - 1 - static_cast<long long>(r));
        b(r, r) = -1;
        b(r, r + 1) = 1;
    }
    return Rational(1, degree) * (pad_row(prev, true) * a + pad_row(prev, false) * b);
}

struct UniformCache
{
    std::mutex mutex;
    std::vector<std::unique_ptr<BasisMatrix>> by_degree;
};

UniformCache& uniform_cache()
{
    static UniformCache cache;
    return cache;
}

} // namespace

BasisMatrix::BasisMatrix(int degree, Matrix<Rational> entries, std::optional<SpanIndex> span)
    : degree_(degree), entries_(std::move(entries)), span_(span)
{
    require_square(entries_, degree_);
}

Matrix<double> BasisMatrix::to_double() const
{
    return entries_.map<double>([](const Rational& v) { return bspline::to_double(v); });
}

CumulativeBasisMatrix::CumulativeBasisMatrix(int degree, Matrix<Rational> entries, std::optional<SpanIndex> span)
    : degree_(degree), entries_(std::move(entries)), span_(span)
{
    require_square(entries_, degree_);
}

Matrix<double> CumulativeBasisMatrix::to_double() const
{
    return entries_.map<double>([](const Rational& v) { return bspline::to_double(v); });
}

const BasisMatrix& uniform_basis_matrix(int degree)
{
    validate_degree(degree);
    auto& cache = uniform_cache();
    std::lock_guard lock(cache.mutex);
    auto& table = cache.by_degree;
    if (table.empty())
        table.push_back(std::make_unique<BasisMatrix>(0, Matrix<Rational>::identity(1)));
    while (static_cast<int>(table.size()) <= degree) {
        const int k = static_cast<int>(table.size());
        table.push_back(std::make_unique<BasisMatrix>(k, next_uniform(table.back()->entries(), k)));
    }
    return *table[static_cast<std::size_t>(degree)];
}

BasisMatrix general_basis_matrix(const ExactKnotVector& kv, int degree, SpanIndex span)
{
    validate_span(kv, degree, span);
    const int j = span.value;

    Matrix<Rational> m = Matrix<Rational>::identity(1);
    for (int p = 1; p <= degree; ++p) {
        const auto coeffs = local_coefficients(kv, p, span);
        const auto k = static_cast<std::size_t>(p);
        Matrix<Rational> d0(k, k + 1);
        Matrix<Rational> d1(k, k + 1);
        for (std::size_t r = 0; r < k; ++r) {
            const auto& c = coeffs.at(j - p + static_cast<int>(r) + 1);
            d0(r, r) = 1 - c.d0;
            d0(r, r + 1) = c.d0;
            d1(r, r) = -c.d1;
            d1(r, r + 1) = c.d1;
        }
        m = pad_row(m, true) * d0 + pad_row(m, false) * d1;
    }
    return BasisMatrix(degree, std::move(m), span);
}

CumulativeBasisMatrix cumulative_matrix(const BasisMatrix& m)
{
    const auto& src = m.entries();
    const std::size_t n = src.rows();
    Matrix<Rational> out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        Rational acc = 0;
        for (std::size_t c = n; c-- > 0;) {
            acc += src(r, c);
            out(r, c) = acc;
        }
    }
    return CumulativeBasisMatrix(m.degree(), std::move(out), m.span());
}

namespace {

template <typename T, typename Entries>
std::vector<T> row_times_matrix(const Entries& entries, const T& u)
{
    const std::size_t n = entries.rows();
    std::vector<T> out(n, T(0));
    T power(1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if constexpr (std::is_same_v<T, double> && std::is_same_v<Entries, Matrix<double>>)
                out[c] += power * entries(r, c);
            else
                out[c] += power * convert<T>(entries(r, c));
        }
        power *= u;
    }
    return out;
}

} // namespace

template <typename T>
std::vector<T> lambda_weights(const CumulativeBasisMatrix& cm, const T& u, Extrapolation policy)
{
    if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(u))
            throw DomainError("span parameter is not finite");
    }
    if (policy == Extrapolation::reject && (u < T(0) || u > T(1)))
        throw DomainError("span parameter outside [0, 1]");
    return row_times_matrix(cm.entries(), u);
}

template <typename T>
std::vector<T> basis_row(const BasisMatrix& m, const T& u)
{
    return row_times_matrix(m.entries(), u);
}

std::vector<double> basis_row(const Matrix<double>& m, double u)
{
    return row_times_matrix(m, u);
}

std::vector<double> power_row(std::size_t size, double u, int order)
{
    std::vector<double> out(size, 0.0);
    for (std::size_t r = 0; r < size; ++r) {
        const auto ri = static_cast<int>(r);
        if (ri < order)
            continue;
        double factor = 1.0;
        for (int f = ri - order + 1; f <= ri; ++f)
            factor *= f;
        out[r] = factor * std::pow(u, ri - order);
    }
    return out;
}

template std::vector<double> lambda_weights(const CumulativeBasisMatrix&, const double&, Extrapolation);
template std::vector<Rational> lambda_weights(const CumulativeBasisMatrix&, const Rational&, Extrapolation);
template std::vector<double> basis_row(const BasisMatrix&, const double&);
template std::vector<Rational> basis_row(const BasisMatrix&, const Rational&);

} // namespace bspline
