#pragma once

#include <optional>
#include <vector>

#include "hardy.hpp"
#include "symbol.hpp"

namespace striphardy {

struct FactorClass {
    std::optional<int> blaschke_count;  // nullopt = declared infinite
    bool singular_nontrivial = false;
    bool outer_admissible = true;
};

struct DeficiencyIndices {
    bool determined = true;  // false when the outer estimate is not declared
    bool infinite = false;
    int n_plus = 0;
    int n_minus = 0;
};

struct DeficiencyVector {
    int k = 0;
    cplx eigenvalue{0.0, 1.0};
    BoundaryVector samples;
    double residual = 0.0;        // ||continue(f v) - eigenvalue v|| / ||v||, multiplier oracle
    bool trusted = false;
    double direct_residual = 0.0; // same identity from the closed forms on the line -pi
    double membership_defect = 0.0;
    bool truncated = false;
};

struct ResidualResult {
    double residual = 0.0;
    bool trusted = false;
    bool membership_ok = false;
    double membership_defect = 0.0;
    bool degenerate = false;  // zero vector: residual 0 by convention
};

struct PerturbationResult {
    bool passes = false;
    bool has_r = false;
    double r = 0.0;
    double worst_point = 0.0;
};

struct ConjugationReport {
    bool commutes = false;
    double max_deviation = 0.0;
};

FactorClass classify(const SymbolSpec& spec);

// Index table: (inf,inf) if the singular part is nontrivial or the Blaschke
// family is infinite; (m,m) for 2m zeros; (m+1,m) for 2m+1 zeros. Requires the
// declared outer estimate, otherwise the indices are reported undetermined.
DeficiencyIndices deficiency_indices(const FactorClass& cls);

// Eigenvalue-equation residual through the multiplier realization:
// w = f v on the line 0, continued to the line -pi, compared against
// eigenvalue * v. Membership of f v is checked, not assumed.
ResidualResult eigenvalue_residual(const SymbolSpec& spec, const BoundaryVector& v,
                                   cplx eigenvalue, const MultiplierPolicy& policy = {},
                                   const QuadratureOptions& opt = {});

// xi_k(theta) = e^{(k+1/2)theta} prod_j 1/(e^theta - e^{alpha_j}), 0 <= k < n,
// eigenvalue (-1)^{n+k+1} i, L2-normalized on the given grid. Residuals are
// computed on a dedicated wide grid with the quad-precision oracle.
std::vector<DeficiencyVector> blaschke_deficiency_basis(const BlaschkeData& data,
                                                        const StripGrid& grid);

// xi_{kappa,n} for an atom at 0 (or the mirrored construction for an atom at
// infinity), eigenvalue (-1)^n i (resp. (-1)^{n+1} i).
std::vector<DeficiencyVector> atomic_singular_deficiency_vectors(const SingularData& data,
                                                                 const StripGrid& grid,
                                                                 const std::vector<int>& n_list);

// Truncated midline family: e^{(k+1/2)theta} prod(-i g+ /(e^theta - i g+)) *
// prod(e^theta/(e^theta - i g-)); residuals are measured against the truncated
// symbol in the symmetric convention, eigenvalue (-1)^{n_plus + k + 1} i.
std::vector<DeficiencyVector> midline_truncated_basis(const BlaschkeData& data,
                                                      const StripGrid& grid,
                                                      const std::vector<int>& k_list);

// Wuest-type criterion: passes iff Re f > 0 wherever f != 0 on the grid, with
// r* = max |f|^2 / (2 Re f).
PerturbationResult perturbation_criterion_samples(const BoundaryVector& f_on_0);
PerturbationResult perturbation_criterion(const SymbolSpec& spec, const StripGrid& grid,
                                          const QuadratureOptions& opt = {});

// conj(f(theta)) = f(-theta) on the grid; commutation with the antilinear
// conjugation J implies equal deficiency indices.
ConjugationReport von_neumann_check(const SymbolSpec& spec, const StripGrid& grid, double tol,
                                    const QuadratureOptions& opt = {});

// (M_fbar D^{1/2} xi)(theta) = conj(f(theta)) xi(theta - pi i).
ContinuationResult apply_symbol_operator(const SymbolSpec& spec, const BoundaryVector& xi,
                                         const MultiplierPolicy& policy = {},
                                         const QuadratureOptions& opt = {});

// Smallest eigenvalue of the Gram matrix of the normalized basis.
double gram_min_eigenvalue(const std::vector<DeficiencyVector>& basis);

// Mollifier for the atomic construction: kappa(x) = b(x/w) - 2 b(2x/w) with
// w = a/4; even, smooth, supported in (-w, w), zero mean by scaling.
class KappaTransform {
public:
    explicit KappaTransform(double atom_weight);
    double support() const { return w_; }
    double hat(double p) const;        // Fourier transform at p (even in p)
    double integral() const;           // trapezoid integral of kappa (should be ~0)

private:
    double w_;
    double dp_;
    std::vector<double> table_;        // hat on a uniform p-grid
    std::vector<double> kappa_x_, kappa_v_;
};

}  // namespace striphardy
