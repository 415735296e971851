#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grid.hpp"
#include "poisson.hpp"

namespace striphardy {

struct BlaschkeZero {
    cplx alpha;        // Im alpha in (-pi, 0)
    int multiplicity = 1;
};

struct BlaschkeData {
    std::vector<BlaschkeZero> zeros;
    bool declared_infinite = false;  // listed zeros truncate an infinite symmetric family

    int total_count() const;
    bool empty() const { return zeros.empty(); }
};

struct SingularAtom {
    double s = 0.0;  // nonzero boundary point, e^theta (s>0) or -e^theta (s<0)
    double w = 0.0;  // weight, > 0
};

struct SingularData {
    double a0 = 0.0;     // atom at s=0: factor exp(i a0 e^{-zeta})
    double a_inf = 0.0;  // atom at infinity: factor exp(-i a_inf e^{zeta})
    std::vector<SingularAtom> finite_atoms;

    bool nontrivial() const {
        return a0 > 0.0 || a_inf > 0.0 || !finite_atoms.empty();
    }
};

struct OuterData {
    enum class Kind { constant, sech_alpha, gauss_strip, table };
    enum class Decay { zero, linear };

    Kind kind = Kind::constant;
    double c = 1.0;       // constant kernel
    double alpha = 0.5;   // sech_alpha parameter, in (0,1)
    std::vector<double> table_u;        // log|s| sample points, strictly increasing
    std::vector<double> table_logphi;   // log phi at those points (even extension in s)
    Decay decay = Decay::linear;
    bool admissible = true;  // declared Prop-outer estimate |1/f| <= A exp(B e^{alpha|Re|}), alpha<1
    int power = 1;           // kernel multiplier: log phi_eff = power * log phi

    bool is_builtin() const { return kind != Kind::table; }
    // log phi as a function of u = log|s| (kernels are even in s).
    double log_phi_u(double u) const;
};

struct SymbolSpec {
    cplx phase{1.0, 0.0};
    BlaschkeData blaschke;
    SingularData singular;
    OuterData outer;
};

// Construction-time invariants: zero placement and pairing, atom evenness,
// phase modulus, kernel integrability. Throws Error on violation.
void validate_blaschke(const BlaschkeData& data, double delta_min = 1e-6);
void validate_singular(const SingularData& data);
void validate_outer(const OuterData& data);
void validate_spec(const SymbolSpec& spec);

cplx eval_blaschke(const BlaschkeData& data, cplx zeta);
cplx eval_singular(const SingularData& data, cplx zeta);
// Builtins evaluate by closed form anywhere in the closed strip; tabulated
// kernels by Poisson quadrature, strictly interior.
cplx eval_outer(const OuterData& data, cplx zeta, const QuadratureOptions& opt = {});
cplx eval_symbol(const SymbolSpec& spec, cplx zeta, const QuadratureOptions& opt = {});

// f_minus / f_plus: outer split with the Poisson kernel restricted to the
// negative / positive half-line. Closed forms for constant and gauss_strip.
cplx eval_outer_minus(const OuterData& data, cplx zeta, const QuadratureOptions& opt = {});
cplx eval_outer_plus(const OuterData& data, cplx zeta, const QuadratureOptions& opt = {});

struct BoundaryPair {
    BoundaryVector on_0;
    BoundaryVector on_minus_pi;
};

// Boundary samples on both lines; inner factors by direct formula, outer by
// closed form or interior limit at lambda = -1e-4 with one Richardson step.
BoundaryPair sample_boundary(const SymbolSpec& spec, const StripGrid& grid,
                             const QuadratureOptions& opt = {});

struct SymmetryReport {
    double max_deviation = 0.0;
    bool pass = false;
};

// max_j |conj(f(theta_j)) - f(theta_j - pi i)| from given boundary samples.
double symmetry_deviation(const BoundaryVector& on_0, const BoundaryVector& on_minus_pi);
SymmetryReport check_symmetry(const SymbolSpec& spec, const StripGrid& grid, double tol,
                              const QuadratureOptions& opt = {});

// max over both lines of ||f_Bl f_in| - 1|, skipping nodes within the pole
// guard of a finite atom.
double inner_modulus_deviation(const SymbolSpec& spec, const StripGrid& grid);

// max over grid of log(1/|f_out(theta)|) / e^{0.99 |theta|}; bounded values are
// consistent with the declared outer estimate.
double outer_growth_probe(const OuterData& data, const StripGrid& grid,
                          const QuadratureOptions& opt = {});

struct OuterSplit {
    BoundaryVector f_minus_on_0;
    BoundaryVector f_minus_on_minus_pi;
    BoundaryVector f_plus_on_0;
    BoundaryVector f_plus_on_minus_pi;
};

OuterSplit split_outer(const OuterData& data, const StripGrid& grid,
                       const QuadratureOptions& opt = {});

struct ProfileApproach {
    enum class Kind { vertical, atom, horizontal };
    Kind kind = Kind::vertical;
    double theta0 = 0.0;   // vertical: fixed real part
    double s_atom = 1.0;   // atom: boundary point e^zeta = s
    double lambda0 = -1.5707963267948966;  // horizontal: fixed line
    int direction = 1;     // horizontal: sign of Re zeta

    static ProfileApproach parse(const std::string& text);
};

// |f| along the radial approach; the parameter list supplies distances
// (lambda offsets for vertical/atom approaches, |Re zeta| for horizontal).
std::vector<double> radial_modulus_profile(const SymbolSpec& spec, const ProfileApproach& approach,
                                           const std::vector<double>& params,
                                           const QuadratureOptions& opt = {});

namespace detail {
cplx clamped_exp(cplx zeta);      // e^zeta with Re zeta clamped to +-700
cplx exp_i_real(double x);        // exp(i x), exactly unimodular
}  // namespace detail

}  // namespace striphardy
