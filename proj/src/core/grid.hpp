#pragma once

#include <complex>
#include <vector>

#include "error.hpp"

namespace striphardy {

using cplx = std::complex<double>;

// Uniform sampling of a horizontal boundary line of the strip R + i(-pi,0),
// together with the DFT frequency lattice it induces.
//
// Nodes:      theta_j = -L + j*h,   h = 2L/N,        j = 0..N-1
// Frequencies: t_k    = (k - N/2) * pi/L  (monotone, fftshift-style)
class StripGrid {
public:
    StripGrid(double half_width, std::size_t size);

    double half_width() const noexcept { return half_width_; }
    std::size_t size() const noexcept { return size_; }
    double spacing() const noexcept { return spacing_; }
    double freq_spacing() const noexcept { return freq_spacing_; }

    double node(std::size_t j) const { return -half_width_ + spacing_ * static_cast<double>(j); }
    double freq_node(std::size_t k) const {
        return freq_spacing_ * (static_cast<double>(k) - static_cast<double>(size_) / 2.0);
    }
    double max_freq() const { return freq_node(size_ - 1); }

    // Index of the grid node nearest to theta.
    std::size_t nearest_index(double theta) const;

    bool operator==(const StripGrid& o) const noexcept {
        return half_width_ == o.half_width_ && size_ == o.size_;
    }
    bool operator!=(const StripGrid& o) const noexcept { return !(*this == o); }

private:
    double half_width_;
    std::size_t size_;
    double spacing_;
    double freq_spacing_;
};

// Complex L^2 samples of a function on one horizontal line of the strip.
// line = imaginary offset lambda in [-pi, 0].
struct BoundaryVector {
    StripGrid grid;
    std::vector<cplx> samples;
    double line = 0.0;

    BoundaryVector(const StripGrid& g, std::vector<cplx> v, double line_tag = 0.0);
    BoundaryVector(const StripGrid& g, double line_tag = 0.0)
        : grid(g), samples(g.size(), cplx(0.0, 0.0)), line(line_tag) {}

    BoundaryVector with_line(double line_tag) const {
        BoundaryVector out = *this;
        out.line = line_tag;
        return out;
    }
};

// DFT coefficients indexed by the monotone t_k lattice of the grid.
struct FourierVector {
    StripGrid grid;
    std::vector<cplx> coeff;

    FourierVector(const StripGrid& g, std::vector<cplx> c);
};

StripGrid make_grid(double half_width, std::size_t size);

// Unitary transforms: dft approximates xi_hat(t) = (1/sqrt(2pi)) ∫ e^{-i t theta} xi dtheta
// with the trapezoid weight h; idft is its exact inverse on the grid.
FourierVector dft(const BoundaryVector& v);
BoundaryVector idft(const FourierVector& w, double line_tag = 0.0);

cplx inner_product(const BoundaryVector& a, const BoundaryVector& b);
double l2_norm(const BoundaryVector& a);
double l2_norm(const FourierVector& a);

namespace detail {

// In-place radix-2 FFT, sign = -1 for e^{-2pi i jk/N}, sign = +1 for e^{+2pi i jk/N}.
// No normalization. data.size() must be a power of two.
void fft_pow2(std::vector<cplx>& data, int sign);

// Neumaier-compensated sums.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

bool is_pow2(std::size_t n);

}  // namespace detail

}  // namespace striphardy
