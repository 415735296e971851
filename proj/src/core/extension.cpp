#include "extension.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace striphardy {

namespace {

constexpr double kPi = std::numbers::pi;

// u(theta) = h_Bl(theta) h_in(theta) f_-(theta), with f_- taken for the
// doubled outer kernel (f_out = h_out^2).
BoundaryVector unitary_boundary_symbol(const SymbolSpec& h, const StripGrid& grid,
                                       const QuadratureOptions& opt) {
    OuterData doubled = h.outer;
    doubled.power = 2 * doubled.power;
    std::vector<cplx> u(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const cplx z0(grid.node(j), 0.0);
        u[j] = eval_blaschke(h.blaschke, z0) * eval_singular(h.singular, z0) *
               eval_outer_minus(doubled, z0, opt);
    }
    return BoundaryVector(grid, std::move(u), 0.0);
}

}  // namespace

SquareSymbol make_square_symbol(const SymbolSpec& h, const StripGrid& grid, double audit_tol,
                                const QuadratureOptions& opt) {
    validate_spec(h);
    SymmetryReport rep = check_symmetry(h, grid, audit_tol, opt);
    if (!rep.pass)
        fail(ErrorCode::audit_failure,
             "square root h fails the boundary symmetry audit (deviation " +
                 std::to_string(rep.max_deviation) + ")");
    return SquareSymbol{h};
}

CanonicalExtension build_extension(const SquareSymbol& sq, const StripGrid& grid,
                                   const QuadratureOptions& opt) {
    BoundaryVector u = unitary_boundary_symbol(sq.h, grid, opt);
    double dev = 0.0;
    for (const cplx& z : u.samples) dev = std::max(dev, std::abs(std::abs(z) - 1.0));
    if (dev > 1e-8)
        fail(ErrorCode::audit_failure, "extension symbol u is not unimodular on the grid");
    return CanonicalExtension{grid, std::move(u), sq, dev};
}

ExtensionApplyResult apply_extension(const CanonicalExtension& ext, const BoundaryVector& xi,
                                     const MultiplierPolicy& policy) {
    if (xi.grid != ext.grid) fail(ErrorCode::grid_mismatch, "extension and input grids differ");
    std::vector<cplx> w(xi.grid.size());
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = ext.u_on_0.samples[j] * xi.samples[j];
    BoundaryVector uxi(xi.grid, std::move(w), 0.0);

    MembershipResult mem = hardy_membership(uxi, 1e-8, policy);
    ContinuationResult cont = continue_to(uxi, -kPi, policy);
    for (std::size_t j = 0; j < w.size(); ++j)
        cont.output.samples[j] *= std::conj(ext.u_on_0.samples[j]);
    cont.output.line = 0.0;
    return ExtensionApplyResult{std::move(cont.output), mem.member, mem.defect, cont.trusted};
}

SpectralFunction SpectralFunction::parse(const std::string& text) {
    SpectralFunction g;
    if (text == "identity") {
        g.kind = Kind::identity;
    } else if (text == "square") {
        g.kind = Kind::square;
    } else if (text.rfind("indicator:", 0) == 0) {
        g.kind = Kind::indicator;
        const std::size_t comma = text.find(',');
        if (comma == std::string::npos)
            fail(ErrorCode::invalid_parameter, "indicator needs bounds: indicator:a,b");
        g.a = std::stod(text.substr(10, comma - 10));
        g.b = std::stod(text.substr(comma + 1));
        if (!(g.a <= g.b)) fail(ErrorCode::invalid_parameter, "indicator bounds out of order");
    } else if (text.rfind("exp:", 0) == 0) {
        g.kind = Kind::exp_decay;
        g.s = -std::stod(text.substr(4));  // grammar is exp:-s
        if (!(g.s > 0.0))
            fail(ErrorCode::invalid_parameter, "exp spectral function expects exp:-s with s > 0");
    } else {
        fail(ErrorCode::invalid_parameter, "unrecognized spectral function: " + text);
    }
    return g;
}

double SpectralFunction::operator()(double x) const {
    switch (kind) {
        case Kind::identity:
            return x;
        case Kind::square:
            return x * x;
        case Kind::indicator:
            return (x >= a && x <= b) ? 1.0 : 0.0;
        case Kind::exp_decay:
            return std::exp(-s * x);
    }
    return x;
}

std::string SpectralFunction::describe() const {
    switch (kind) {
        case Kind::identity:
            return "identity";
        case Kind::square:
            return "square";
        case Kind::indicator:
            return "indicator[" + std::to_string(a) + "," + std::to_string(b) + "]";
        case Kind::exp_decay:
            return "exp(-" + std::to_string(s) + " x)";
    }
    return "identity";
}

BoundaryVector apply_spectral_function(const CanonicalExtension& ext, const SpectralFunction& g,
                                       const BoundaryVector& xi, const MultiplierPolicy& policy) {
    if (xi.grid != ext.grid) fail(ErrorCode::grid_mismatch, "extension and input grids differ");
    std::vector<cplx> w(xi.grid.size());
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = ext.u_on_0.samples[j] * xi.samples[j];
    BoundaryVector uxi(xi.grid, std::move(w), 0.0);

    // the multiplier lambda only runs on kept (occupied) coefficients, so an
    // overflow here is a genuine overflow of g on the occupied band
    auto mult = [&g](double t) {
        const double x = std::exp(std::min(709.0, kPi * t));
        const double val = g(x);
        if (!std::isfinite(val))
            fail(ErrorCode::overflow, "spectral function overflows on the occupied band near t = " +
                                          std::to_string(t));
        return val;
    };
    ContinuationResult cont = apply_multiplier(uxi, mult, 0.0, policy);
    for (std::size_t j = 0; j < w.size(); ++j)
        cont.output.samples[j] *= std::conj(ext.u_on_0.samples[j]);
    return std::move(cont.output);
}

BoundaryVector random_domain_vector(const StripGrid& grid, std::uint64_t seed, int index) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(index) + 1);
    auto uniform = [&rng]() {
        return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
    };
    auto gaussian = [&]() {
        double u1 = uniform(), u2 = uniform();
        u1 = std::max(u1, 1e-300);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    };

    const long degree = std::min<long>(static_cast<long>(grid.size() / 8), 40);
    std::vector<cplx> coeff(2 * degree + 1);
    for (long m = -degree; m <= degree; ++m) {
        const double t = static_cast<double>(m) * grid.freq_spacing() * 4.0;
        const double damp = std::exp(-kPi * std::max(t, 0.0)) * std::exp(-t * t / 128.0);
        coeff[static_cast<std::size_t>(m + degree)] = damp * cplx(gaussian(), gaussian());
    }

    std::vector<cplx> v(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double th = grid.node(j);
        cplx acc(0.0, 0.0);
        for (long m = -degree; m <= degree; ++m) {
            const double t = static_cast<double>(m) * grid.freq_spacing() * 4.0;
            acc += coeff[static_cast<std::size_t>(m + degree)] * detail::exp_i_real(t * th);
        }
        v[j] = std::exp(-0.5 * th * th) * acc;
    }
    BoundaryVector out(grid, std::move(v), 0.0);
    const double nrm = l2_norm(out);
    if (nrm > 0.0)
        for (cplx& z : out.samples) z /= nrm;
    return out;
}

double symmetry_audit(const CanonicalExtension& ext, int trial_count, std::uint64_t seed,
                      const MultiplierPolicy& policy) {
    double worst = 0.0;
    for (int trial = 0; trial < trial_count; ++trial) {
        BoundaryVector xi = random_domain_vector(ext.grid, seed, 2 * trial);
        BoundaryVector eta = random_domain_vector(ext.grid, seed, 2 * trial + 1);
        ExtensionApplyResult axi = apply_extension(ext, xi, policy);
        ExtensionApplyResult aeta = apply_extension(ext, eta, policy);
        if (!axi.in_domain || !aeta.in_domain) continue;
        const cplx lhs = inner_product(eta, axi.result);
        const cplx rhs = inner_product(aeta.result, xi);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

PolarDecomposition polar_decomposition(const SymbolSpec& spec, const StripGrid& grid) {
    if (!spec.outer.admissible)
        fail(ErrorCode::invalid_parameter,
             "polar decomposition requires the declared outer estimate");
    std::vector<cplx> u(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const cplx z0(grid.node(j), 0.0);
        u[j] = std::conj(spec.phase * eval_blaschke(spec.blaschke, z0) *
                         eval_singular(spec.singular, z0));
    }
    return PolarDecomposition{BoundaryVector(grid, std::move(u), 0.0), spec.outer};
}

}  // namespace striphardy
