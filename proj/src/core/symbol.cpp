#include "symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace striphardy {

namespace detail {

cplx clamped_exp(cplx zeta) {
    const double re = std::clamp(zeta.real(), -700.0, 700.0);
    return std::exp(cplx(re, zeta.imag()));
}

cplx exp_i_real(double x) { return cplx(std::cos(x), std::sin(x)); }

}  // namespace detail

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleGuard = 1e-10;

// Catmull-Rom style monotone-index cubic interpolation of the table kernel.
double table_interp(const std::vector<double>& u, const std::vector<double>& y,
                    OuterData::Decay decay, double x) {
    const std::size_t n = u.size();
    auto slope_at = [&](std::size_t i) {
        if (i == 0) return (y[1] - y[0]) / (u[1] - u[0]);
        if (i == n - 1) return (y[n - 1] - y[n - 2]) / (u[n - 1] - u[n - 2]);
        return (y[i + 1] - y[i - 1]) / (u[i + 1] - u[i - 1]);
    };
    if (x <= u.front()) {
        if (decay == OuterData::Decay::zero) return 0.0;
        return y.front() + slope_at(0) * (x - u.front());
    }
    if (x >= u.back()) {
        if (decay == OuterData::Decay::zero) return 0.0;
        return y.back() + slope_at(n - 1) * (x - u.back());
    }
    const std::size_t i =
        static_cast<std::size_t>(std::upper_bound(u.begin(), u.end(), x) - u.begin()) - 1;
    const double h = u[i + 1] - u[i];
    const double t = (x - u[i]) / h;
    const double m0 = slope_at(i) * h;
    const double m1 = slope_at(i + 1) * h;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y[i] + (t3 - 2 * t2 + t) * m0 +
           (-2 * t3 + 3 * t2) * y[i + 1] + (t3 - t2) * m1;
}

cplx blaschke_factor(cplx zeta, cplx alpha) {
    if (zeta.real() > 350.0) {
        const cplx u = detail::clamped_exp(alpha - zeta);
        const cplx v = detail::clamped_exp(std::conj(alpha) - zeta);
        return (1.0 - u) / (1.0 - v);
    }
    const cplx e = detail::clamped_exp(zeta);
    return (e - std::exp(alpha)) / (e - std::exp(std::conj(alpha)));
}

cplx ipow(cplx z, int p) {
    cplx r(1.0, 0.0);
    for (int i = 0; i < p; ++i) r *= z;
    return r;
}

// exponent of the outer factor: (i/pi) * ∫ [1/(s - e^zeta) - s/(1+s^2)] log phi ds
cplx outer_exponent(const OuterData& data, cplx a, const QuadratureOptions& opt) {
    auto lp = [&data](double u) { return data.log_phi_u(u); };
    const cplx neg = poisson_half_integral(a, lp, HalfLine::negative, opt).value;
    const cplx pos = poisson_half_integral(a, lp, HalfLine::positive, opt).value;
    return cplx(0.0, 1.0 / kPi) * (neg + pos);
}

cplx half_exponent(const OuterData& data, cplx a, HalfLine half, const QuadratureOptions& opt) {
    auto lp = [&data](double u) { return data.log_phi_u(u); };
    return cplx(0.0, 1.0 / kPi) * poisson_half_integral(a, lp, half, opt).value;
}

// One-step Richardson extrapolation of an exponent integral to the boundary.
cplx boundary_exponent(const std::function<cplx(double)>& exponent_at, double line) {
    const double eps1 = 1e-4, eps2 = 5e-5;
    const double l1 = (line == 0.0) ? -eps1 : line + eps1;
    const double l2 = (line == 0.0) ? -eps2 : line + eps2;
    return 2.0 * exponent_at(l2) - exponent_at(l1);
}

}  // namespace

int BlaschkeData::total_count() const {
    int n = 0;
    for (const BlaschkeZero& z : zeros) n += z.multiplicity;
    return n;
}

double OuterData::log_phi_u(double u) const {
    double base = 0.0;
    switch (kind) {
        case Kind::constant:
            base = std::log(c);
            break;
        case Kind::sech_alpha: {
            // phi(s) = 1/|cosh(alpha(log|s| + i pi/2))|
            const double sh = std::sinh(alpha * u);
            const double cs = std::cos(alpha * kPi / 2.0);
            base = -0.5 * std::log(sh * sh + cs * cs);
            break;
        }
        case Kind::gauss_strip:
            base = kPi * kPi / 4.0 - u * u;
            break;
        case Kind::table:
            base = table_interp(table_u, table_logphi, decay, u);
            break;
    }
    return static_cast<double>(power) * base;
}

void validate_blaschke(const BlaschkeData& data, double delta_min) {
    constexpr double pair_tol = 1e-9;
    for (const BlaschkeZero& z : data.zeros) {
        if (z.multiplicity < 1)
            fail(ErrorCode::invalid_parameter, "Blaschke multiplicity must be positive");
        const double im = z.alpha.imag();
        if (!(im > -kPi && im < 0.0))
            fail(ErrorCode::invalid_parameter, "Blaschke zero must lie in R + i(-pi,0)");
        if (std::min(-im, kPi + im) < delta_min)
            fail(ErrorCode::invalid_parameter,
                 "Blaschke zero too close to a boundary line (distance < 1e-6)");
    }
    // alpha and conj(alpha) - pi i must pair up (midline zeros are self-paired)
    std::vector<bool> matched(data.zeros.size(), false);
    for (std::size_t i = 0; i < data.zeros.size(); ++i) {
        if (matched[i]) continue;
        const cplx a = data.zeros[i].alpha;
        if (std::abs(a.imag() + kPi / 2.0) <= pair_tol) {
            matched[i] = true;
            continue;
        }
        const cplx want = std::conj(a) - cplx(0.0, kPi);
        bool found = false;
        for (std::size_t j = 0; j < data.zeros.size(); ++j) {
            if (j == i || matched[j]) continue;
            if (std::abs(data.zeros[j].alpha - want) <= pair_tol &&
                data.zeros[j].multiplicity == data.zeros[i].multiplicity) {
                matched[i] = matched[j] = true;
                found = true;
                break;
            }
        }
        if (!found)
            fail(ErrorCode::invalid_parameter,
                 "Blaschke zeros must pair as {alpha, conj(alpha) - pi i} or sit on the midline");
    }
}

void validate_singular(const SingularData& data) {
    if (!(data.a0 >= 0.0) || !std::isfinite(data.a0) || !(data.a_inf >= 0.0) ||
        !std::isfinite(data.a_inf))
        fail(ErrorCode::invalid_parameter, "singular atom weights a0, a_inf must be >= 0");
    for (const SingularAtom& atom : data.finite_atoms) {
        if (atom.s == 0.0 || !std::isfinite(atom.s))
            fail(ErrorCode::invalid_parameter, "finite singular atom must sit at s != 0");
        if (!(atom.w > 0.0) || !std::isfinite(atom.w))
            fail(ErrorCode::invalid_parameter, "finite singular atom weight must be positive");
    }
    std::vector<bool> matched(data.finite_atoms.size(), false);
    for (std::size_t i = 0; i < data.finite_atoms.size(); ++i) {
        if (matched[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < data.finite_atoms.size(); ++j) {
            if (j == i || matched[j]) continue;
            const double rel = std::max({1.0, std::abs(data.finite_atoms[i].s)});
            if (std::abs(data.finite_atoms[j].s + data.finite_atoms[i].s) <= 1e-12 * rel &&
                std::abs(data.finite_atoms[j].w - data.finite_atoms[i].w) <=
                    1e-12 * data.finite_atoms[i].w) {
                matched[i] = matched[j] = true;
                found = true;
                break;
            }
        }
        if (!found)
            fail(ErrorCode::invalid_parameter,
                 "finite singular atoms must be invariant under s -> -s with equal weights");
    }
}

void validate_outer(const OuterData& data) {
    if (data.power < 1 || data.power > 2)
        fail(ErrorCode::invalid_parameter, "outer kernel power must be 1 or 2");
    switch (data.kind) {
        case OuterData::Kind::constant:
            if (!(data.c > 0.0) || !std::isfinite(data.c))
                fail(ErrorCode::invalid_parameter, "constant outer kernel must be positive");
            break;
        case OuterData::Kind::sech_alpha:
            if (!(data.alpha > 0.0 && data.alpha < 1.0))
                fail(ErrorCode::invalid_parameter, "sech_alpha parameter must lie in (0,1)");
            break;
        case OuterData::Kind::gauss_strip:
            break;
        case OuterData::Kind::table: {
            if (data.table_u.size() < 2 || data.table_u.size() != data.table_logphi.size())
                fail(ErrorCode::invalid_parameter, "outer table needs matching u/logphi samples");
            for (std::size_t i = 0; i + 1 < data.table_u.size(); ++i)
                if (!(data.table_u[i] < data.table_u[i + 1]))
                    fail(ErrorCode::invalid_parameter, "outer table u samples must increase");
            for (double v : data.table_logphi)
                if (!std::isfinite(v))
                    fail(ErrorCode::invalid_parameter, "outer table logphi must be finite");
            // L^1 mass of |log phi|/(1+s^2)
            auto g = [&data](double u) -> cplx {
                const double s = std::exp(u);
                return cplx(std::abs(data.log_phi_u(u)) * s / (1.0 + s * s), 0.0);
            };
            QuadratureResult q = de_integrate(g, {});
            if (!q.converged || !std::isfinite(q.value.real()))
                fail(ErrorCode::invalid_parameter, "outer table kernel fails the L1 check");
            break;
        }
    }
}

void validate_spec(const SymbolSpec& spec) {
    if (std::abs(std::abs(spec.phase) - 1.0) > 1e-12)
        fail(ErrorCode::invalid_parameter, "phase must be unimodular");
    validate_blaschke(spec.blaschke);
    validate_singular(spec.singular);
    validate_outer(spec.outer);
}

cplx eval_blaschke(const BlaschkeData& data, cplx zeta) {
    cplx out(1.0, 0.0);
    for (const BlaschkeZero& z : data.zeros) {
        const cplx f = blaschke_factor(zeta, z.alpha);
        for (int m = 0; m < z.multiplicity; ++m) out *= f;
    }
    return out;
}

cplx eval_singular(const SingularData& data, cplx zeta) {
    cplx expo(0.0, 0.0);
    const cplx e = detail::clamped_exp(zeta);
    if (data.a0 > 0.0) expo += cplx(0.0, data.a0) * detail::clamped_exp(-zeta);
    if (data.a_inf > 0.0) expo -= cplx(0.0, data.a_inf) * e;
    for (const SingularAtom& atom : data.finite_atoms) {
        if (std::abs(e - atom.s) < kPoleGuard)
            fail(ErrorCode::pole_proximity, "evaluation point too close to a singular atom");
        expo += cplx(0.0, atom.w / (1.0 + atom.s * atom.s)) * (1.0 + e * atom.s) / (e - atom.s);
    }
    if (expo.real() == 0.0) return detail::exp_i_real(expo.imag());
    return std::exp(expo);
}

cplx eval_outer(const OuterData& data, cplx zeta, const QuadratureOptions& opt) {
    switch (data.kind) {
        case OuterData::Kind::constant:
            return ipow(cplx(data.c, 0.0), data.power);
        case OuterData::Kind::sech_alpha:
            return ipow(1.0 / std::cosh(data.alpha * (zeta + cplx(0.0, kPi / 2.0))), data.power);
        case OuterData::Kind::gauss_strip: {
            const cplx z = zeta + cplx(0.0, kPi / 2.0);
            return std::exp(-static_cast<double>(data.power) * z * z);
        }
        case OuterData::Kind::table: {
            if (!(zeta.imag() > -kPi && zeta.imag() < 0.0))
                fail(ErrorCode::invalid_parameter,
                     "tabulated outer kernels evaluate strictly inside the strip");
            return std::exp(outer_exponent(data, detail::clamped_exp(zeta), opt));
        }
    }
    return cplx(1.0, 0.0);
}

cplx eval_outer_minus(const OuterData& data, cplx zeta, const QuadratureOptions& opt) {
    switch (data.kind) {
        case OuterData::Kind::constant: {
            const double lc = static_cast<double>(data.power) * std::log(data.c);
            return std::exp(cplx(0.0, lc / kPi) * zeta);
        }
        case OuterData::Kind::gauss_strip: {
            const double p = static_cast<double>(data.power);
            const cplx expo =
                cplx(0.0, -p / (3.0 * kPi)) * zeta * zeta * zeta + cplx(0.0, -p * kPi / 12.0) * zeta;
            return std::exp(expo);
        }
        default: {
            const cplx a = detail::clamped_exp(zeta);
            if (zeta.imag() == 0.0) {
                // continuous at the line 0: the kernel support s<0 stays away from e^theta
                const cplx expo = half_exponent(data, a, HalfLine::negative, opt);
                return detail::exp_i_real(expo.imag());
            }
            if (!(zeta.imag() > -kPi && zeta.imag() < 0.0))
                fail(ErrorCode::invalid_parameter,
                     "f_minus on the lower line needs an interior limit");
            return std::exp(half_exponent(data, a, HalfLine::negative, opt));
        }
    }
}

cplx eval_outer_plus(const OuterData& data, cplx zeta, const QuadratureOptions& opt) {
    switch (data.kind) {
        case OuterData::Kind::constant: {
            const double lc = static_cast<double>(data.power) * std::log(data.c);
            return ipow(cplx(data.c, 0.0), data.power) * std::exp(cplx(0.0, -lc / kPi) * zeta);
        }
        case OuterData::Kind::gauss_strip: {
            const double p = static_cast<double>(data.power);
            const cplx z = zeta + cplx(0.0, kPi);
            const cplx expo = cplx(0.0, p / (3.0 * kPi)) * z * z * z + cplx(0.0, p * kPi / 12.0) * z;
            return std::exp(expo);
        }
        default: {
            const cplx a = detail::clamped_exp(zeta);
            if (zeta.imag() == -kPi) {
                // continuous at the lower line: e^zeta < 0 away from the support s>0
                const cplx expo = half_exponent(data, a, HalfLine::positive, opt);
                return detail::exp_i_real(expo.imag());
            }
            if (!(zeta.imag() > -kPi && zeta.imag() < 0.0))
                fail(ErrorCode::invalid_parameter, "f_plus on the line 0 needs an interior limit");
            return std::exp(half_exponent(data, a, HalfLine::positive, opt));
        }
    }
}

cplx eval_symbol(const SymbolSpec& spec, cplx zeta, const QuadratureOptions& opt) {
    return spec.phase * eval_blaschke(spec.blaschke, zeta) * eval_singular(spec.singular, zeta) *
           eval_outer(spec.outer, zeta, opt);
}

BoundaryPair sample_boundary(const SymbolSpec& spec, const StripGrid& grid,
                             const QuadratureOptions& opt) {
    const std::size_t n = grid.size();
    std::vector<cplx> f0(n), fpi(n);

    // outer boundary values: closed form for builtins, interior limit for tables
    std::vector<cplx> out0(n), outpi(n);
    if (spec.outer.is_builtin()) {
        for (std::size_t j = 0; j < n; ++j) {
            out0[j] = eval_outer(spec.outer, cplx(grid.node(j), 0.0), opt);
            outpi[j] = eval_outer(spec.outer, cplx(grid.node(j), -kPi), opt);
        }
    } else {
        for (std::size_t j = 0; j < n; ++j) {
            const double th = grid.node(j);
            auto expo_at = [&](double lam) {
                return outer_exponent(spec.outer, detail::clamped_exp(cplx(th, lam)), opt);
            };
            out0[j] = std::exp(boundary_exponent(expo_at, 0.0));
            outpi[j] = std::exp(boundary_exponent(expo_at, -kPi));
        }
    }

    for (std::size_t j = 0; j < n; ++j) {
        const cplx z0(grid.node(j), 0.0);
        const cplx zpi(grid.node(j), -kPi);
        f0[j] = spec.phase * eval_blaschke(spec.blaschke, z0) * eval_singular(spec.singular, z0) *
                out0[j];
        fpi[j] = spec.phase * eval_blaschke(spec.blaschke, zpi) *
                 eval_singular(spec.singular, zpi) * outpi[j];
    }
    return BoundaryPair{BoundaryVector(grid, std::move(f0), 0.0),
                        BoundaryVector(grid, std::move(fpi), -kPi)};
}

double symmetry_deviation(const BoundaryVector& on_0, const BoundaryVector& on_minus_pi) {
    if (on_0.grid != on_minus_pi.grid)
        fail(ErrorCode::grid_mismatch, "symmetry check requires matching grids");
    double dev = 0.0;
    for (std::size_t j = 0; j < on_0.samples.size(); ++j)
        dev = std::max(dev, std::abs(std::conj(on_0.samples[j]) - on_minus_pi.samples[j]));
    return dev;
}

SymmetryReport check_symmetry(const SymbolSpec& spec, const StripGrid& grid, double tol,
                              const QuadratureOptions& opt) {
    BoundaryPair pair = sample_boundary(spec, grid, opt);
    SymmetryReport rep;
    rep.max_deviation = symmetry_deviation(pair.on_0, pair.on_minus_pi);
    rep.pass = rep.max_deviation <= tol;
    return rep;
}

double inner_modulus_deviation(const SymbolSpec& spec, const StripGrid& grid) {
    double dev = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        for (double line : {0.0, -kPi}) {
            const cplx zeta(grid.node(j), line);
            const double e = detail::clamped_exp(zeta).real();
            bool near_atom = false;
            for (const SingularAtom& atom : spec.singular.finite_atoms)
                if (std::abs(e - atom.s) < 1e-6) near_atom = true;
            if (near_atom) continue;
            const cplx v = eval_blaschke(spec.blaschke, zeta) * eval_singular(spec.singular, zeta);
            dev = std::max(dev, std::abs(std::abs(v) - 1.0));
        }
    }
    return dev;
}

double outer_growth_probe(const OuterData& data, const StripGrid& grid,
                          const QuadratureOptions& opt) {
    OuterData probe = data;
    double mx = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double th = grid.node(j);
        cplx v;
        if (data.is_builtin()) {
            v = eval_outer(probe, cplx(th, 0.0), opt);
        } else {
            auto expo_at = [&](double lam) {
                return outer_exponent(probe, detail::clamped_exp(cplx(th, lam)), opt);
            };
            v = std::exp(boundary_exponent(expo_at, 0.0));
        }
        const double mag = std::max(std::abs(v), 1e-300);
        mx = std::max(mx, -std::log(mag) / std::exp(0.99 * std::abs(th)));
    }
    return mx;
}

OuterSplit split_outer(const OuterData& data, const StripGrid& grid,
                       const QuadratureOptions& opt) {
    const std::size_t n = grid.size();
    std::vector<cplx> m0(n), mpi(n), p0(n), ppi(n);

    const bool closed =
        data.kind == OuterData::Kind::constant || data.kind == OuterData::Kind::gauss_strip;
    for (std::size_t j = 0; j < n; ++j) {
        const double th = grid.node(j);
        if (closed) {
            m0[j] = eval_outer_minus(data, cplx(th, 0.0), opt);
            mpi[j] = eval_outer_minus(data, cplx(th, -kPi), opt);
            p0[j] = eval_outer_plus(data, cplx(th, 0.0), opt);
            ppi[j] = eval_outer_plus(data, cplx(th, -kPi), opt);
        } else {
            const cplx a0 = detail::clamped_exp(cplx(th, 0.0));
            m0[j] = eval_outer_minus(data, cplx(th, 0.0), opt);
            ppi[j] = eval_outer_plus(data, cplx(th, -kPi), opt);
            // singular-side boundary values as interior limits of the exponent
            auto minus_at = [&](double lam) {
                return half_exponent(data, detail::clamped_exp(cplx(th, lam)), HalfLine::negative,
                                     opt);
            };
            auto plus_at = [&](double lam) {
                return half_exponent(data, detail::clamped_exp(cplx(th, lam)), HalfLine::positive,
                                     opt);
            };
            mpi[j] = std::exp(boundary_exponent(minus_at, -kPi));
            p0[j] = std::exp(boundary_exponent(plus_at, 0.0));
            (void)a0;
        }
    }
    return OuterSplit{BoundaryVector(grid, std::move(m0), 0.0),
                      BoundaryVector(grid, std::move(mpi), -kPi),
                      BoundaryVector(grid, std::move(p0), 0.0),
                      BoundaryVector(grid, std::move(ppi), -kPi)};
}

ProfileApproach ProfileApproach::parse(const std::string& text) {
    ProfileApproach ap;
    auto num_after = [&](std::size_t pos) { return std::stod(text.substr(pos)); };
    if (text.rfind("ray:theta=", 0) == 0) {
        ap.kind = Kind::vertical;
        ap.theta0 = num_after(10);
    } else if (text.rfind("theta:", 0) == 0) {
        ap.kind = Kind::vertical;
        ap.theta0 = num_after(6);
    } else if (text.rfind("atom:", 0) == 0) {
        ap.kind = Kind::atom;
        ap.s_atom = num_after(5);
        if (ap.s_atom == 0.0)
            fail(ErrorCode::invalid_parameter, "atom approach needs a nonzero boundary point");
    } else if (text.rfind("ray:lambda=", 0) == 0) {
        ap.kind = Kind::horizontal;
        std::size_t comma = text.find(',');
        ap.lambda0 = std::stod(text.substr(11, comma - 11));
        ap.direction = (comma != std::string::npos && text.find('-', comma) != std::string::npos)
                           ? -1
                           : 1;
    } else {
        fail(ErrorCode::invalid_parameter, "unrecognized profile approach: " + text);
    }
    return ap;
}

std::vector<double> radial_modulus_profile(const SymbolSpec& spec, const ProfileApproach& approach,
                                           const std::vector<double>& params,
                                           const QuadratureOptions& opt) {
    std::vector<double> out;
    out.reserve(params.size());
    for (double p : params) {
        cplx zeta;
        switch (approach.kind) {
            case ProfileApproach::Kind::vertical:
                zeta = cplx(approach.theta0, p);
                break;
            case ProfileApproach::Kind::atom: {
                const double th = std::log(std::abs(approach.s_atom));
                zeta = (approach.s_atom > 0.0) ? cplx(th, p) : cplx(th, -kPi - p);
                break;
            }
            case ProfileApproach::Kind::horizontal:
                zeta = cplx(approach.direction * std::abs(p), approach.lambda0);
                break;
        }
        out.push_back(std::abs(eval_symbol(spec, zeta, opt)));
    }
    return out;
}

}  // namespace striphardy
