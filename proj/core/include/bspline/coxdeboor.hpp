#pragma once

#include <vector>

#include "bspline/knots.hpp"

// Direct Cox-de Boor evaluation. Slow on purpose: this is the reference the
// matrix paths are checked against.
//
// Degree-0 basis functions are indicators of half-open spans [t_i, t_{i+1}).
// At the right end of the domain the last non-degenerate span is closed, so
// partition of unity holds on the whole closed domain.

namespace bspline::coxdeboor {

/// Indicator of span i, closed on the right only at the last knot.
/// Throws IndexError unless 0 <= i <= M-2.
template <typename T>
int basis0(const BasicKnotVector<T>& kv, int i, const T& tau);

/// B_{i,k}(tau) over arbitrary knots, with 0/0 taken as 0. The right end of
/// the degree-k domain, t_{M-k-1}, is closed. Zero outside [t_i, t_{i+k+1}].
/// Throws IndexError unless 0 <= i <= M-k-2, DomainError for non-finite tau.
template <typename T>
T basis(const BasicKnotVector<T>& kv, int i, int degree, const T& tau);

/// All N = M-k-1 basis values B_{0,k}(tau) .. B_{N-1,k}(tau).
template <typename T>
std::vector<T> basis_functions(const BasicKnotVector<T>& kv, int degree, const T& tau);

/// Suffix sum B_{i,k} + B_{i+1,k} + ... + B_{N-1,k}.
template <typename T>
T cumulative_basis(const BasicKnotVector<T>& kv, int i, int degree, const T& tau);

} // namespace bspline::coxdeboor
