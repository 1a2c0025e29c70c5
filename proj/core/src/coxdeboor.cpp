#include "bspline/coxdeboor.hpp"

#include <cmath>
#include <string>

namespace bspline::coxdeboor {

namespace {

template <typename T>
void require_finite(const T& tau)
{
    if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(tau))
            throw DomainError("tau is not finite");
    }
}

// Span s with t_s <= tau < t_{s+1}; when tau equals knot `closed_end`, the
// last non-degenerate span left of it. -1 when tau hits no span.
template <typename T>
int active_span(const BasicKnotVector<T>& kv, const T& tau, int closed_end)
{
    const auto m = static_cast<int>(kv.size());
    auto t = [&](int idx) -> const T& { return kv[static_cast<std::size_t>(idx)]; };
    if (tau == t(closed_end)) {
        for (int s = closed_end - 1; s >= 0; --s)
            if (t(s) < t(s + 1))
                return s;
        return -1;
    }
    for (int s = 0; s + 1 < m; ++s)
        if (t(s) <= tau && tau < t(s + 1))
            return s;
    return -1;
}

template <typename T>
T recurse(const BasicKnotVector<T>& kv, int i, int degree, const T& tau, int active)
{
    auto t = [&](int idx) -> const T& { return kv[static_cast<std::size_t>(idx)]; };

    // Triangular table: level p holds B_{i,p} .. B_{i+k-p,p}.
    std::vector<T> level(static_cast<std::size_t>(degree) + 1);
    for (int s = 0; s <= degree; ++s)
        level[static_cast<std::size_t>(s)] = (i + s == active) ? T(1) : T(0);

    for (int p = 1; p <= degree; ++p) {
        for (int s = 0; s + p <= degree; ++s) {
            const int g = i + s;
            const T left = ratio_or_zero(T(tau - t(g)), T(t(g + p) - t(g)));
            const T right = ratio_or_zero(T(t(g + p + 1) - tau), T(t(g + p + 1) - t(g + 1)));
            level[static_cast<std::size_t>(s)] =
                left * level[static_cast<std::size_t>(s)] + right * level[static_cast<std::size_t>(s) + 1];
        }
    }
    return level[0];
}

template <typename T>
int basis_count(const BasicKnotVector<T>& kv, int degree)
{
    validate_degree(degree);
    const int n = static_cast<int>(kv.size()) - degree - 1;
    if (n < 1)
        throw InvalidKnots("degree " + std::to_string(degree) + " needs at least " + std::to_string(degree + 2) +
                           " knots");
    return n;
}

} // namespace

template <typename T>
int basis0(const BasicKnotVector<T>& kv, int i, const T& tau)
{
    const auto m = static_cast<int>(kv.size());
    if (i < 0 || i > m - 2)
        throw IndexError("degree-0 basis index " + std::to_string(i) + " outside [0, " + std::to_string(m - 2) + "]");
    require_finite(tau);
    return active_span(kv, tau, m - 1) == i ? 1 : 0;
}

template <typename T>
T basis(const BasicKnotVector<T>& kv, int i, int degree, const T& tau)
{
    const int n = basis_count(kv, degree);
    if (i < 0 || i > n - 1)
        throw IndexError("basis index " + std::to_string(i) + " outside [0, " + std::to_string(n - 1) + "]");
    require_finite(tau);
    return recurse(kv, i, degree, tau, active_span(kv, tau, n));
}

template <typename T>
std::vector<T> basis_functions(const BasicKnotVector<T>& kv, int degree, const T& tau)
{
    const int n = basis_count(kv, degree);
    require_finite(tau);
    const int active = active_span(kv, tau, n);
    std::vector<T> out(static_cast<std::size_t>(n), T(0));
    if (active < 0)
        return out;
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = recurse(kv, i, degree, tau, active);
    return out;
}

template <typename T>
T cumulative_basis(const BasicKnotVector<T>& kv, int i, int degree, const T& tau)
{
    const int n = basis_count(kv, degree);
    if (i < 0 || i > n - 1)
        throw IndexError("basis index " + std::to_string(i) + " outside [0, " + std::to_string(n - 1) + "]");
    T acc(0);
    for (int s = i; s < n; ++s)
        acc += basis(kv, s, degree, tau);
    return acc;
}

template int basis0(const KnotVector&, int, const double&);
template int basis0(const ExactKnotVector&, int, const Rational&);
template double basis(const KnotVector&, int, int, const double&);
template Rational basis(const ExactKnotVector&, int, int, const Rational&);
template std::vector<double> basis_functions(const KnotVector&, int, const double&);
template std::vector<Rational> basis_functions(const ExactKnotVector&, int, const Rational&);
template double cumulative_basis(const KnotVector&, int, int, const double&);
template Rational cumulative_basis(const ExactKnotVector&, int, int, const Rational&);

} // namespace bspline::coxdeboor
