#pragma once

#include <cstdint>
#include <string>

#include "deficiency.hpp"
#include "hardy.hpp"
#include "symbol.hpp"

namespace striphardy {

// Square symbol f = h^2: the input is always the root h, squaring is exact.
struct SquareSymbol {
    SymbolSpec h;
};

// Validates the symmetry audit of h on the given grid.
SquareSymbol make_square_symbol(const SymbolSpec& h, const StripGrid& grid, double audit_tol,
                                const QuadratureOptions& opt = {});

// Canonical self-adjoint extension A_f = U* D^{1/2} U with
// U = M_{h_Bl} M_{h_in} M_{f_-}; u is its boundary symbol on the line 0.
struct CanonicalExtension {
    StripGrid grid;
    BoundaryVector u_on_0;
    SquareSymbol provenance;
    double unimodularity_deviation = 0.0;
};

CanonicalExtension build_extension(const SquareSymbol& sq, const StripGrid& grid,
                                   const QuadratureOptions& opt = {});

struct ExtensionApplyResult {
    BoundaryVector result;
    bool in_domain = false;
    double membership_defect = 0.0;
    bool trusted = false;
};

// result = conj(u) . continue(u xi, -pi); in_domain from hardy_membership(u xi).
// Out-of-domain inputs still return data.
ExtensionApplyResult apply_extension(const CanonicalExtension& ext, const BoundaryVector& xi,
                                     const MultiplierPolicy& policy = {});

// Scalar functions g on [0, inf) applied through the multiplier g(e^{pi t}).
struct SpectralFunction {
    enum class Kind { identity, square, indicator, exp_decay };
    Kind kind = Kind::identity;
    double a = 0.0, b = 1.0;  // indicator window
    double s = 1.0;           // exp(-s x)

    static SpectralFunction parse(const std::string& text);
    double operator()(double x) const;
    std::string describe() const;
};

BoundaryVector apply_spectral_function(const CanonicalExtension& ext, const SpectralFunction& g,
                                       const BoundaryVector& xi,
                                       const MultiplierPolicy& policy = {});

// max over seeded random in-domain trials of
// |<eta, A_f xi> - <A_f eta, xi>| / (||xi|| ||eta||).
double symmetry_audit(const CanonicalExtension& ext, int trial_count, std::uint64_t seed,
                      const MultiplierPolicy& policy = {});

struct PolarDecomposition {
    BoundaryVector unitary_symbol;  // conj(f_Bl f_in) on the line 0
    OuterData positive_part;        // the outer data, symbolically
};

PolarDecomposition polar_decomposition(const SymbolSpec& spec, const StripGrid& grid);

// Deterministic in-domain trial vector: Gaussian envelope times a random
// trigonometric polynomial whose coefficients are damped by e^{-pi max(t,0)}
// so that ||D^{1/2} xi|| stays O(||xi||).
BoundaryVector random_domain_vector(const StripGrid& grid, std::uint64_t seed, int index);

}  // namespace striphardy
