#pragma once

#include <functional>

#include "eulersum/real_with_error.hpp"

namespace eulersum {

/// Double-exponential (tanh-sinh) quadrature of f over (a, b). Endpoint
/// singularities of log type are fine; abscissas are clipped away from the
/// endpoints so integrands like ln(1-t) are never evaluated at the boundary.
/// A non-finite value at an interior node throws "interior singularity".
/// If the level cap is reached first, the result is returned with err > tol.
RealWithError quad_tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol = 1e-11);

}  // namespace eulersum
