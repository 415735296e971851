#include "hardy.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace striphardy {

namespace {

struct AmplifiedSpectrum {
    std::vector<cplx> coeff;       // amplified, floored; full grid length
    double indicator = 0.0;        // top-band energy fraction
    bool any_nonfinite = false;
};

// Twiddle e^{2pi i m / N} table.
std::vector<cplx> twiddle_table(std::size_t n) {
    std::vector<cplx> tw(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
        tw[m] = cplx(std::cos(ang), std::sin(ang));
    }
    return tw;
}

std::size_t phase_index(std::size_t n, long long k_centered, std::size_t j) {
    long long m = (k_centered * static_cast<long long>(j)) % static_cast<long long>(n);
    if (m < 0) m += static_cast<long long>(n);
    return static_cast<std::size_t>(m);
}

// Compensated direct evaluation of the dft coefficient at index k.
cplx precise_coefficient(const BoundaryVector& v, const std::vector<cplx>& tw, std::size_t k) {
    const std::size_t n = v.grid.size();
    const long long kc = static_cast<long long>(k) - static_cast<long long>(n / 2);
    detail::CompensatedSum re, im;
    for (std::size_t j = 0; j < n; ++j) {
        // e^{-i t_k theta_j} = (-1)^k * conj(tw[(kc*j) mod N])
        const cplx ph = std::conj(tw[phase_index(n, kc, j)]);
        const cplx t = v.samples[j] * ph;
        re.add(t.real());
        im.add(t.imag());
    }
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    const double scale = sgn * v.grid.spacing() / std::sqrt(2.0 * std::numbers::pi);
    return scale * cplx(re.value(), im.value());
}

AmplifiedSpectrum amplified_spectrum(const BoundaryVector& v,
                                     const std::function<double(double)>& multiplier,
                                     const MultiplierPolicy& policy) {
    const StripGrid& g = v.grid;
    const std::size_t n = g.size();
    AmplifiedSpectrum out;
    out.coeff.assign(n, cplx(0.0, 0.0));

    FourierVector w = dft(v);
    double mx = 0.0;
    for (const cplx& z : w.coeff) mx = std::max(mx, std::abs(z));
    if (mx == 0.0) return out;

    // Occupied band from the plain FFT, extended to cover content that sits
    // between the detection threshold and the information floor.
    std::size_t lo = n, hi = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(w.coeff[k]) >= policy.detect_rel * mx) {
            lo = std::min(lo, k);
            hi = std::max(hi, k);
        }
    }
    const std::size_t width = hi - lo + 1;
    const std::size_t ext =
        static_cast<std::size_t>(policy.band_extend_frac * static_cast<double>(width)) +
        policy.band_extend_bins;
    lo = (lo > ext) ? lo - ext : 0;
    hi = std::min(n - 1, hi + ext);

    std::vector<cplx> band(n, cplx(0.0, 0.0));
    if (hi - lo + 1 <= policy.max_precise_band) {
        // coefficients are determined by the rounded samples only down to
        // (eps/2) * (h/sqrt(2pi)) * sum|v_j| (correlated worst case); floor there
        detail::CompensatedSum abs_sum;
        for (const cplx& z : v.samples) abs_sum.add(std::abs(z));
        const double noise_abs = 0.5 * 2.220446049250313e-16 * g.spacing() /
                                 std::sqrt(2.0 * std::numbers::pi) * abs_sum.value();
        const double floor_abs = policy.noise_safety * noise_abs;
        const std::vector<cplx> tw = twiddle_table(n);
        for (std::size_t k = lo; k <= hi; ++k) {
            cplx c = precise_coefficient(v, tw, k);
            band[k] = (std::abs(c) < floor_abs) ? cplx(0.0, 0.0) : c;
        }
    } else {
        for (std::size_t k = 0; k < n; ++k)
            if (std::abs(w.coeff[k]) >= policy.detect_rel * mx) band[k] = w.coeff[k];
    }

    for (std::size_t k = 0; k < n; ++k) {
        if (band[k] == cplx(0.0, 0.0)) continue;
        const double m = multiplier(g.freq_node(k));
        cplx a = m * band[k];
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            out.any_nonfinite = true;
            a = cplx(0.0, 0.0);
        }
        out.coeff[k] = a;
    }

    // Energy fraction carried by the top band of |t|, overflow-safe.
    double amax = 0.0;
    for (const cplx& z : out.coeff) amax = std::max(amax, std::abs(z));
    if (amax > 0.0) {
        const double t_edge = (1.0 - policy.top_band_frac) * g.freq_spacing() *
                              (static_cast<double>(n) / 2.0);
        detail::CompensatedSum e_top, e_tot;
        for (std::size_t k = 0; k < n; ++k) {
            const double r = std::abs(out.coeff[k]) / amax;
            const double e = r * r;
            e_tot.add(e);
            if (std::abs(g.freq_node(k)) >= t_edge) e_top.add(e);
        }
        out.indicator = (e_tot.value() > 0.0) ? e_top.value() / e_tot.value() : 0.0;
    }
    if (out.any_nonfinite) out.indicator = 1.0;
    return out;
}

BoundaryVector synthesize(const StripGrid& g, const std::vector<cplx>& coeff, double line) {
    const std::size_t n = g.size();
    std::size_t lo = n, hi = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (coeff[k] != cplx(0.0, 0.0)) {
            lo = std::min(lo, k);
            hi = std::max(hi, k);
        }
    }
    std::vector<cplx> out(n, cplx(0.0, 0.0));
    if (lo > hi) return BoundaryVector(g, std::move(out), line);

    const std::vector<cplx> tw = twiddle_table(n);
    const double scale = g.freq_spacing() / std::sqrt(2.0 * std::numbers::pi);
    for (std::size_t j = 0; j < n; ++j) {
        cplx acc(0.0, 0.0);
        for (std::size_t k = lo; k <= hi; ++k) {
            if (coeff[k] == cplx(0.0, 0.0)) continue;
            const long long kc = static_cast<long long>(k) - static_cast<long long>(n / 2);
            const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
            acc += sgn * coeff[k] * tw[phase_index(n, kc, j)];
        }
        out[j] = scale * acc;
    }
    return BoundaryVector(g, std::move(out), line);
}

}  // namespace

ContinuationResult continue_to_quad(const QuadSampler& sampler, const StripGrid& g, double lambda,
                                    const MultiplierPolicy& policy) {
    if (!(lambda >= -std::numbers::pi && lambda <= 0.0))
        fail(ErrorCode::out_of_range, "continuation offset must lie in [-pi, 0]");
    const std::size_t n = g.size();

    const __float128 one = 1.0;
    const __float128 pi_q = 2.0 * acosq(0.0);
    const __float128 eps_q = ldexpq(one, -112);

    std::vector<QuadSample> wq(n);
    std::vector<cplx> wd(n);
    __float128 abs_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        wq[j] = sampler(g.node(j));
        wd[j] = cplx(static_cast<double>(wq[j].re), static_cast<double>(wq[j].im));
        abs_sum += sqrtq(wq[j].re * wq[j].re + wq[j].im * wq[j].im);
    }
    BoundaryVector wdv(g, wd, 0.0);

    FourierVector w = dft(wdv);
    double mx = 0.0;
    for (const cplx& z : w.coeff) mx = std::max(mx, std::abs(z));
    AmplifiedSpectrum spec;
    spec.coeff.assign(n, cplx(0.0, 0.0));
    if (mx > 0.0) {
        std::size_t lo = n, hi = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (std::abs(w.coeff[k]) >= policy.detect_rel * mx) {
                lo = std::min(lo, k);
                hi = std::max(hi, k);
            }
        }
        // the quad floor sits ~17 decades lower; extend the detected band far
        // enough in t to reach it on the amplified side, a little on the other
        const std::size_t ext_hi = static_cast<std::size_t>(13.0 / g.freq_spacing()) + 8;
        const std::size_t ext_lo = static_cast<std::size_t>(2.0 / g.freq_spacing()) + 8;
        lo = (lo > ext_lo) ? lo - ext_lo : 0;
        hi = std::min(n - 1, hi + ext_hi);

        const __float128 scale_q =
            static_cast<__float128>(g.spacing()) / sqrtq(2.0 * pi_q);
        const __float128 floor_q = static_cast<__float128>(policy.noise_safety) *
                                   static_cast<__float128>(0.5) * eps_q * scale_q * abs_sum;

        std::vector<__float128> twre(n), twim(n);
        for (std::size_t m = 0; m < n; ++m) {
            const __float128 ang =
                2.0 * pi_q * static_cast<__float128>(m) / static_cast<__float128>(n);
            twre[m] = cosq(ang);
            twim[m] = sinq(ang);
        }

        for (std::size_t k = lo; k <= hi; ++k) {
            const long long kc = static_cast<long long>(k) - static_cast<long long>(n / 2);
            __float128 are = 0.0, aim = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t m = phase_index(n, kc, j);
                // w_j * conj(tw[m])
                are += wq[j].re * twre[m] + wq[j].im * twim[m];
                aim += wq[j].im * twre[m] - wq[j].re * twim[m];
            }
            const __float128 sgn = (k % 2 == 0) ? 1.0 : -1.0;
            are *= sgn * scale_q;
            aim *= sgn * scale_q;
            if (sqrtq(are * are + aim * aim) < floor_q) continue;
            const __float128 mult = expq(static_cast<__float128>(-lambda * g.freq_node(k)));
            const cplx a(static_cast<double>(are * mult), static_cast<double>(aim * mult));
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
                spec.any_nonfinite = true;
                continue;
            }
            spec.coeff[k] = a;
        }

        double amax = 0.0;
        for (const cplx& z : spec.coeff) amax = std::max(amax, std::abs(z));
        if (amax > 0.0) {
            const double t_edge = (1.0 - policy.top_band_frac) * g.freq_spacing() *
                                  (static_cast<double>(n) / 2.0);
            detail::CompensatedSum e_top, e_tot;
            for (std::size_t k = 0; k < n; ++k) {
                const double r = std::abs(spec.coeff[k]) / amax;
                e_tot.add(r * r);
                if (std::abs(g.freq_node(k)) >= t_edge) e_top.add(r * r);
            }
            spec.indicator = (e_tot.value() > 0.0) ? e_top.value() / e_tot.value() : 0.0;
        }
        if (spec.any_nonfinite) spec.indicator = 1.0;
    }
    return ContinuationResult{synthesize(g, spec.coeff, lambda), spec.indicator,
                              spec.indicator <= policy.trust_threshold};
}

ContinuationResult apply_multiplier(const BoundaryVector& v,
                                    const std::function<double(double)>& multiplier,
                                    double out_line, const MultiplierPolicy& policy) {
    AmplifiedSpectrum spec = amplified_spectrum(v, multiplier, policy);
    ContinuationResult res{synthesize(v.grid, spec.coeff, out_line), spec.indicator,
                           spec.indicator <= policy.trust_threshold};
    return res;
}

ContinuationResult continue_to(const BoundaryVector& v, double lambda,
                               const MultiplierPolicy& policy) {
    if (v.line != 0.0)
        fail(ErrorCode::invalid_parameter, "continuation input must live on the line 0");
    if (!(lambda >= -std::numbers::pi && lambda <= 0.0))
        fail(ErrorCode::out_of_range, "continuation offset must lie in [-pi, 0]");
    if (lambda == 0.0) return ContinuationResult{v, 0.0, true};
    return apply_multiplier(
        v, [lambda](double t) { return std::exp(-lambda * t); }, lambda, policy);
}

MembershipResult hardy_membership(const BoundaryVector& v, double tol,
                                  const MultiplierPolicy& policy) {
    if (v.line != 0.0)
        fail(ErrorCode::invalid_parameter, "membership test expects samples on the line 0");
    MultiplierPolicy plain = policy;
    plain.max_precise_band = 0;  // detection-level flooring is enough here
    AmplifiedSpectrum spec = amplified_spectrum(
        v, [](double t) { return std::exp(std::numbers::pi * t); }, plain);
    MembershipResult res;
    res.defect = spec.indicator;
    res.member = !spec.any_nonfinite && spec.indicator <= tol;
    return res;
}

double continued_norm(const BoundaryVector& v, const MultiplierPolicy& policy) {
    AmplifiedSpectrum spec = amplified_spectrum(
        v, [](double t) { return std::exp(std::numbers::pi * t); }, policy);
    detail::CompensatedSum s;
    for (const cplx& z : spec.coeff) s.add(std::norm(z));
    return std::sqrt(v.grid.freq_spacing() * s.value());
}

PointwiseBoundResult pointwise_bound_check(const BoundaryVector& v, double theta, double lambda,
                                           const MultiplierPolicy& policy) {
    if (!(lambda > -std::numbers::pi && lambda < 0.0))
        fail(ErrorCode::out_of_range, "pointwise bound requires lambda in (-pi, 0)");
    MembershipResult mem = hardy_membership(v, 1e-8, policy);
    const double nrm = l2_norm(v);
    if (!mem.member && nrm > 0.0)
        fail(ErrorCode::membership_failure, "pointwise bound requires a Hardy-class vector");

    PointwiseBoundResult res;
    if (nrm == 0.0) return res;

    ContinuationResult cont = continue_to(v, lambda, policy);
    res.value = std::abs(cont.output.samples[v.grid.nearest_index(theta)]);
    const double pi = std::numbers::pi;
    res.bound = nrm / std::sqrt(-4.0 * pi * lambda) +
                continued_norm(v, policy) / std::sqrt(4.0 * pi * (pi + lambda));
    res.margin = res.bound - res.value;
    return res;
}

BoundaryVector j_conjugate(const BoundaryVector& v) {
    if (v.line != 0.0) fail(ErrorCode::invalid_parameter, "conjugation acts on the line 0");
    const std::size_t n = v.grid.size();
    std::vector<cplx> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = std::conj(v.samples[(n - j) % n]);
    return BoundaryVector(v.grid, std::move(out), 0.0);
}

}  // namespace striphardy
