#include "grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace striphardy {

namespace detail {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_pow2(std::vector<cplx>& data, int sign) {
    const std::size_t n = data.size();
    if (n < 2) return;

    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    // tabulated twiddles; an iterated w *= wlen recurrence drifts by O(len*eps)
    std::vector<cplx> tw(n / 2);
    for (std::size_t m = 0; m < n / 2; ++m) {
        const double ang =
            sign * 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
        tw[m] = cplx(std::cos(ang), std::sin(ang));
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx u = data[i + k];
                cplx v = data[i + k + len / 2] * tw[k * stride];
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
            }
        }
    }
}

}  // namespace detail

StripGrid::StripGrid(double half_width, std::size_t size) : half_width_(half_width), size_(size) {
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        fail(ErrorCode::invalid_parameter, "grid half-width must be positive and finite");
    if (!detail::is_pow2(size) || size < 8)
        fail(ErrorCode::invalid_parameter, "grid size must be a power of two >= 8");
    spacing_ = 2.0 * half_width / static_cast<double>(size);
    freq_spacing_ = std::numbers::pi / half_width;
}

std::size_t StripGrid::nearest_index(double theta) const {
    double x = (theta + half_width_) / spacing_;
    long j = std::lround(x);
    j = std::clamp(j, 0L, static_cast<long>(size_) - 1L);
    return static_cast<std::size_t>(j);
}

StripGrid make_grid(double half_width, std::size_t size) { return StripGrid(half_width, size); }

BoundaryVector::BoundaryVector(const StripGrid& g, std::vector<cplx> v, double line_tag)
    : grid(g), samples(std::move(v)), line(line_tag) {
    if (samples.size() != grid.size())
        fail(ErrorCode::invalid_parameter, "boundary vector length must equal grid size");
    for (const cplx& z : samples)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            fail(ErrorCode::invalid_parameter, "boundary vector samples must be finite");
}

FourierVector::FourierVector(const StripGrid& g, std::vector<cplx> c)
    : grid(g), coeff(std::move(c)) {
    if (coeff.size() != grid.size())
        fail(ErrorCode::invalid_parameter, "fourier vector length must equal grid size");
}

FourierVector dft(const BoundaryVector& v) {
    const StripGrid& g = v.grid;
    const std::size_t n = g.size();
    std::vector<cplx> work = v.samples;
    detail::fft_pow2(work, -1);

    // t_k * theta_j = -(k - N/2)*pi + (k - N/2) * j * 2pi/N, and exp(i(k-N/2)pi) = (-1)^k
    // for N/2 even, so only a sign remains outside the FFT.
    const double scale = g.spacing() / std::sqrt(2.0 * std::numbers::pi);
    std::vector<cplx> coeff(n);
    const std::size_t half = n / 2;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t m = (k + half) % n;  // (k - N/2) mod N
        const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        coeff[k] = scale * sgn * work[m];
    }
    return FourierVector(g, std::move(coeff));
}

BoundaryVector idft(const FourierVector& w, double line_tag) {
    const StripGrid& g = w.grid;
    const std::size_t n = g.size();
    std::vector<cplx> work(n);
    const std::size_t half = n / 2;
    for (std::size_t k = 0; k < n; ++k) {
        const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        work[(k + half) % n] = sgn * w.coeff[k];
    }
    // e^{i t_k theta_j} = (-1)^k e^{2pi i ((k - N/2) mod N) j / N}; the (-1)^k went into
    // work, the rest is an unnormalized inverse FFT.
    detail::fft_pow2(work, +1);
    const double scale = g.freq_spacing() / std::sqrt(2.0 * std::numbers::pi);
    std::vector<cplx> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = scale * work[j];
    return BoundaryVector(g, std::move(out), line_tag);
}

cplx inner_product(const BoundaryVector& a, const BoundaryVector& b) {
    if (a.grid != b.grid) fail(ErrorCode::grid_mismatch, "inner product requires matching grids");
    if (a.line != b.line) fail(ErrorCode::grid_mismatch, "inner product requires matching line tags");
    detail::CompensatedSum re, im;
    for (std::size_t j = 0; j < a.samples.size(); ++j) {
        const cplx t = std::conj(a.samples[j]) * b.samples[j];
        re.add(t.real());
        im.add(t.imag());
    }
    return a.grid.spacing() * cplx(re.value(), im.value());
}

double l2_norm(const BoundaryVector& a) {
    detail::CompensatedSum s;
    for (const cplx& z : a.samples) s.add(std::norm(z));
    return std::sqrt(a.grid.spacing() * s.value());
}

double l2_norm(const FourierVector& a) {
    detail::CompensatedSum s;
    for (const cplx& z : a.coeff) s.add(std::norm(z));
    return std::sqrt(a.grid.freq_spacing() * s.value());
}

}  // namespace striphardy
