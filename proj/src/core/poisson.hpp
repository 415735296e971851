#pragma once

#include <functional>

#include "grid.hpp"

namespace striphardy {

struct QuadratureOptions {
    double rel_tol = 1e-9;
    std::size_t max_nodes = 0;  // 0 = read STRIP_HARDY_MAX_QUAD_NODES (default 2^20)
};

struct QuadratureResult {
    cplx value{0.0, 0.0};
    bool converged = false;
    std::size_t nodes = 0;
};

std::size_t quadrature_node_cap(std::size_t requested);

// Double-exponential trapezoid rule for ∫_R g(u) du, u = sinh(w). The integrand
// must decay at least exponentially in u. Refines dyadically until the relative
// change drops below rel_tol or the node cap is hit.
QuadratureResult de_integrate(const std::function<cplx(double)>& g,
                              const QuadratureOptions& opt = {});

enum class HalfLine { negative, positive };

// ∫_half [1/(s-a) - s/(1+s^2)] logphi(s) ds with logphi(s) = logphi_u(log|s|)
// (even kernels). Valid for interior a (Im a < 0); on the real axis only when
// the pole a lies outside the chosen half-line. A log singularity of the
// kernel at the projection of a is removed by constant subtraction against
// the closed form of the half-line Poisson mass.
QuadratureResult poisson_half_integral(cplx a, const std::function<double(double)>& logphi_u,
                                       HalfLine half, const QuadratureOptions& opt = {});

// Closed forms of ∫_half [1/(s-a) - s/(1+s^2)] ds for Im a < 0.
cplx poisson_mass_negative(cplx a);
cplx poisson_mass_positive(cplx a);

}  // namespace striphardy
