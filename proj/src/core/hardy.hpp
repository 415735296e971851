#pragma once

#include <functional>

#include "grid.hpp"

namespace striphardy {

// Policy for applying amplifying Fourier multipliers. The e^{pi t} band edge
// sits orders of magnitude above machine noise, so coefficients are kept only
// on the detected occupied band (recomputed with compensated sums) and floored
// below the double-precision information level.
struct MultiplierPolicy {
    double detect_rel = 4e-15;     // plain-FFT band detection threshold (rel. to max)
    double noise_safety = 2.0;     // coefficient floor = safety * sample-rounding bound
    double band_extend_frac = 0.25;
    std::size_t band_extend_bins = 16;
    double top_band_frac = 0.10;   // "top 10% of frequencies" per side
    double trust_threshold = 1e-8; // aliasing indicator above this => untrusted
    std::size_t max_precise_band = 8192;  // fall back to plain FFT beyond this
};

struct ContinuationResult {
    BoundaryVector output;
    double aliasing_indicator = 0.0;
    bool trusted = true;
};

struct MembershipResult {
    bool member = false;
    double defect = 0.0;
};

struct PointwiseBoundResult {
    double value = 0.0;
    double bound = 0.0;
    double margin = 0.0;
};

// Applies the multiplier m(t_k) in the Fourier domain with the band policy
// above. The output carries the requested line tag.
ContinuationResult apply_multiplier(const BoundaryVector& v,
                                    const std::function<double(double)>& multiplier,
                                    double out_line,
                                    const MultiplierPolicy& policy = MultiplierPolicy());

// Interior analytic continuation to the line lambda in [-pi, 0]; lambda = -pi
// realizes the operator xi(theta) -> xi(theta - pi i) (multiplier e^{pi t}).
ContinuationResult continue_to(const BoundaryVector& v, double lambda,
                               const MultiplierPolicy& policy = MultiplierPolicy());

// Grid test of membership in H^2(S_{-pi,0}): the amplified spectrum e^{pi t} xi_hat
// must stay finite and carry at most tol of its energy in the top frequency band.
MembershipResult hardy_membership(const BoundaryVector& v, double tol = 1e-8,
                                  const MultiplierPolicy& policy = MultiplierPolicy());

// |xi(theta + i lambda)| against (1/sqrt(-4 pi lambda))||xi|| + (1/sqrt(4 pi (pi+lambda)))||D^{1/2}xi||.
PointwiseBoundResult pointwise_bound_check(const BoundaryVector& v, double theta, double lambda,
                                           const MultiplierPolicy& policy = MultiplierPolicy());

// (J xi)(theta) = conj(xi(-theta)) on the periodized grid.
BoundaryVector j_conjugate(const BoundaryVector& v);

// ||e^{pi t} xi_hat|| on the floored grid spectrum (norm of D^{1/2} xi when it exists).
double continued_norm(const BoundaryVector& v, const MultiplierPolicy& policy = MultiplierPolicy());

// Extended-precision variant for vectors with closed-form samples: the input is
// sampled in quad precision, the occupied band is accumulated with quad twiddles,
// and the information floor drops from ~1e-16 to ~1e-33. This is what makes
// eigenvector residuals of the amplifying multiplier resolvable below 1e-5.
struct QuadSample {
    __float128 re;
    __float128 im;
};
using QuadSampler = std::function<QuadSample(double theta)>;

ContinuationResult continue_to_quad(const QuadSampler& sampler, const StripGrid& grid,
                                    double lambda,
                                    const MultiplierPolicy& policy = MultiplierPolicy());

}  // namespace striphardy
