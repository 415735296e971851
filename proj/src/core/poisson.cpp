#include "poisson.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace striphardy {

namespace {

constexpr double kHalfWindow = 5.2;  // sinh(5.2) ~ 90; e^{-90} tails

std::size_t env_node_cap() {
    static const std::size_t cap = [] {
        if (const char* e = std::getenv("STRIP_HARDY_MAX_QUAD_NODES")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(e, &end, 10);
            if (end != e && v >= 64) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1) << 20;
    }();
    return cap;
}

cplx trapezoid_level(const std::function<cplx(double)>& g, std::size_t n) {
    const double d = 2.0 * kHalfWindow / static_cast<double>(n);
    detail::CompensatedSum re, im;
    for (std::size_t i = 0; i <= n; ++i) {
        const double w = -kHalfWindow + d * static_cast<double>(i);
        const double u = std::sinh(w);
        const double du = std::cosh(w);
        cplx v = g(u) * du;
        if (i == 0 || i == n) v *= 0.5;
        re.add(v.real());
        im.add(v.imag());
    }
    return d * cplx(re.value(), im.value());
}

}  // namespace

std::size_t quadrature_node_cap(std::size_t requested) {
    return requested == 0 ? env_node_cap() : requested;
}

QuadratureResult de_integrate(const std::function<cplx(double)>& g, const QuadratureOptions& opt) {
    const std::size_t cap = quadrature_node_cap(opt.max_nodes);
    QuadratureResult res;
    std::size_t n = 128;
    cplx prev = trapezoid_level(g, n);
    while (2 * n <= cap) {
        n *= 2;
        cplx cur = trapezoid_level(g, n);
        const double change = std::abs(cur - prev);
        const double scale = std::abs(cur) + 1e-300;
        prev = cur;
        if (change <= opt.rel_tol * scale || change < 1e-15 * (1.0 + scale)) {
            res.value = cur;
            res.converged = true;
            res.nodes = n + 1;
            return res;
        }
    }
    res.value = prev;
    res.converged = false;
    res.nodes = n + 1;
    return res;
}

cplx poisson_mass_negative(cplx a) { return std::log(-a) - cplx(0.0, std::numbers::pi); }

cplx poisson_mass_positive(cplx a) { return -std::log(-a); }

QuadratureResult poisson_half_integral(cplx a, const std::function<double(double)>& logphi_u,
                                       HalfLine half, const QuadratureOptions& opt) {
    const double sigma = (half == HalfLine::negative) ? -1.0 : 1.0;
    const bool pole_inside = (a.real() * sigma > 0.0);

    if (a.imag() == 0.0 && pole_inside)
        fail(ErrorCode::invalid_parameter,
             "Poisson boundary value on the singular side needs an interior limit");
    if (a.imag() > 0.0)
        fail(ErrorCode::invalid_parameter, "Poisson integral expects Im e^zeta <= 0");

    // kern(s) = 1/(s-a) - s/(1+s^2); substitution s = sigma e^u.
    auto kern = [a](cplx s) { return 1.0 / (s - a) - s / (1.0 + s * s); };

    double c0 = 0.0;
    bool subtract = false;
    if (pole_inside && a.imag() < 0.0) {
        subtract = true;
        c0 = logphi_u(std::log(std::abs(a.real())));
    }

    // s = sigma e^u; for sigma = -1 the orientation of the s-integral flips,
    // so the jacobian is +e^u du on both halves.
    auto g = [&](double u) -> cplx {
        const double s_abs = std::exp(u);
        const cplx s = sigma * s_abs;
        const double lp = logphi_u(u);
        const double weight = subtract ? (lp - c0) : lp;
        if (weight == 0.0) return cplx(0.0, 0.0);
        return kern(s) * s_abs * weight;
    };

    QuadratureResult res = de_integrate(g, opt);
    if (!res.converged)
        fail(ErrorCode::quadrature_nonconvergence,
             "Poisson quadrature did not converge within the node cap");
    if (subtract) {
        res.value += c0 * (half == HalfLine::negative ? poisson_mass_negative(a)
                                                      : poisson_mass_positive(a));
    }
    return res;
}

}  // namespace striphardy
