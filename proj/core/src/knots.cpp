#include "bspline/knots.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bspline {

namespace {

template <typename T>
bool is_finite(const T& v)
{
    if constexpr (std::is_floating_point_v<T>)
        return std::isfinite(v);
    else
        return true;
}

template <typename T>
T abs_value(const T& v)
{
    return v < T(0) ? T(-v) : v;
}

template <typename T>
std::optional<T> detect_spacing(const std::vector<T>& values)
{
    const T delta = values[1] - values[0];
    if (!(delta > T(0)))
        return std::nullopt;
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        const T diff = values[i + 1] - values[i];
        if constexpr (std::is_floating_point_v<T>) {
            if (abs_value(diff - delta) > 1e-12 * delta)
                return std::nullopt;
        } else {
            if (diff != delta)
                return std::nullopt;
        }
    }
    return delta;
}

} // namespace

void validate_degree(int degree)
{
    if (degree < 0)
        throw InvalidArgument("degree must be non-negative, got " + std::to_string(degree));
    if (degree > kMaxDegree)
        throw DegreeTooLarge("degree " + std::to_string(degree) + " exceeds the supported maximum of " +
                             std::to_string(kMaxDegree));
}

template <typename T>
BasicKnotVector<T>::BasicKnotVector(std::vector<T> values) : values_(std::move(values))
{
    if (values_.size() < 2)
        throw InvalidKnots("knot vector needs at least two knots");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!is_finite(values_[i]))
            throw InvalidKnots("knot " + std::to_string(i) + " is not finite");
        if (i > 0 && values_[i] < values_[i - 1])
            throw InvalidKnots("knots must be non-decreasing (knot " + std::to_string(i) + " decreases)");
    }
    spacing_ = detect_spacing(values_);
}

template <typename T>
BasicKnotVector<T> BasicKnotVector<T>::uniform(const T& start, const T& delta, std::size_t count)
{
    if (!(delta > T(0)))
        throw InvalidKnots("uniform knot spacing must be positive");
    std::vector<T> values;
    values.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        values.push_back(start + T(static_cast<long long>(i)) * delta);
    return BasicKnotVector(std::move(values));
}

template <typename T>
int BasicKnotVector<T>::control_point_count(int degree) const
{
    validate_degree(degree);
    const auto m = static_cast<int>(values_.size());
    if (m < 2 * degree + 2)
        throw InvalidKnots("degree " + std::to_string(degree) + " needs at least " + std::to_string(2 * degree + 2) +
                           " knots, got " + std::to_string(m));
    return m - degree - 1;
}

template <typename T>
std::pair<T, T> BasicKnotVector<T>::domain(int degree) const
{
    const int n = control_point_count(degree);
    return {values_[static_cast<std::size_t>(degree)], values_[static_cast<std::size_t>(n)]};
}

KnotVector to_float(const ExactKnotVector& kv)
{
    std::vector<double> values;
    values.reserve(kv.size());
    for (const auto& v : kv.values())
        values.push_back(to_double(v));
    return KnotVector(std::move(values));
}

template <typename T>
SpanIndex find_span(const BasicKnotVector<T>& kv, int degree, const T& tau)
{
    const auto [lo, hi] = kv.domain(degree);
    if (!(lo < hi))
        throw InvalidKnots("evaluable domain has zero width");
    if (!is_finite(tau) || tau < lo || tau > hi)
        throw DomainError("tau outside evaluable domain");

    const auto values = kv.values();
    const auto last = static_cast<int>(values.size()) - degree - 2;
    if (tau == hi) {
        int j = last;
        while (values[static_cast<std::size_t>(j)] == values[static_cast<std::size_t>(j) + 1])
            --j;
        return SpanIndex(j);
    }
    const auto first = values.begin() + degree;
    const auto end = values.begin() + last + 2;
    const auto it = std::upper_bound(first, end, tau);
    return SpanIndex(static_cast<int>(it - values.begin()) - 1);
}

template <typename T>
void validate_span(const BasicKnotVector<T>& kv, int degree, SpanIndex span)
{
    const int n = kv.control_point_count(degree);
    const int j = span.value;
    if (j < degree || j > n - 1)
        throw IndexError("span " + std::to_string(j) + " outside [" + std::to_string(degree) + ", " +
                         std::to_string(n - 1) + "] for degree " + std::to_string(degree));
    if (kv[static_cast<std::size_t>(j)] == kv[static_cast<std::size_t>(j) + 1])
        throw DegenerateSpan("span " + std::to_string(j) + " has zero width");
}

template <typename T>
T normalize(const BasicKnotVector<T>& kv, SpanIndex span, const T& tau)
{
    const int j = span.value;
    if (j < 0 || static_cast<std::size_t>(j) + 1 >= kv.size())
        throw IndexError("span " + std::to_string(j) + " outside the knot vector");
    const T& left = kv[static_cast<std::size_t>(j)];
    const T& right = kv[static_cast<std::size_t>(j) + 1];
    if (left == right)
        throw DegenerateSpan("span " + std::to_string(j) + " has zero width");
    if (!is_finite(tau) || tau < left || tau > right)
        throw DomainError("tau outside span " + std::to_string(j));
    return T((tau - left) / (right - left));
}

template <typename T>
const CoxDeBoorCoefficients<T>& LocalCoefficients<T>::at(int i) const
{
    if (i < first_index() || i > last_index())
        throw IndexError("basis index " + std::to_string(i) + " not active on span " + std::to_string(span_.value));
    return rows_[static_cast<std::size_t>(i - first_index())];
}

template <typename T>
LocalCoefficients<T> local_coefficients(const BasicKnotVector<T>& kv, int degree, SpanIndex span)
{
    validate_span(kv, degree, span);
    const int j = span.value;
    auto t = [&](int idx) -> const T& { return kv[static_cast<std::size_t>(idx)]; };
    const T width = t(j + 1) - t(j);

    std::vector<CoxDeBoorCoefficients<T>> rows;
    rows.reserve(static_cast<std::size_t>(degree) + 1);
    for (int i = j - degree; i <= j; ++i) {
        const T left_den = t(i + degree) - t(i);
        const T right_den = t(i + degree + 1) - t(i + 1);
        rows.push_back({
            ratio_or_zero(T(t(j) - t(i)), left_den),
            ratio_or_zero(width, left_den),
            ratio_or_zero(T(t(i + degree + 1) - t(j)), right_den),
            T(-ratio_or_zero(width, right_den)),
        });
    }
    return LocalCoefficients<T>(degree, span, std::move(rows));
}

template class BasicKnotVector<double>;
template class BasicKnotVector<Rational>;
template class LocalCoefficients<double>;
template class LocalCoefficients<Rational>;

template SpanIndex find_span(const KnotVector&, int, const double&);
template SpanIndex find_span(const ExactKnotVector&, int, const Rational&);
template void validate_span(const KnotVector&, int, SpanIndex);
template void validate_span(const ExactKnotVector&, int, SpanIndex);
template double normalize(const KnotVector&, SpanIndex, const double&);
template Rational normalize(const ExactKnotVector&, SpanIndex, const Rational&);
template LocalCoefficients<double> local_coefficients(const KnotVector&, int, SpanIndex);
template LocalCoefficients<Rational> local_coefficients(const ExactKnotVector&, int, SpanIndex);

} // namespace bspline
