#include <cstdio>
#include <numbers>
#include <vector>
#include <complex>
#include <cmath>

#include "src/core/grid.hpp"

using namespace striphardy;
using std::size_t;
constexpr double PI = std::numbers::pi;

// replicas of the internals in hardy.cpp
static std::vector<cplx> twiddle_table(size_t n) {
    std::vector<cplx> tw(n);
    for (size_t m = 0; m < n; ++m)
        tw[m] = std::polar(1.0, 2.0 * PI * double(m) / double(n));
    return tw;
}
static size_t phase_index(size_t n, long long kc, size_t j) {
    long long m = (kc * (long long)j) % (long long)n;
    if (m < 0) m += (long long)n;
    return (size_t)m;
}

int main() {
    StripGrid g = make_grid(16.0, 2048);
    const size_t n = g.size();
    std::vector<cplx> gv(n);
    for (size_t j = 0; j < n; ++j) gv[j] = std::exp(-0.5 * g.node(j) * g.node(j));
    BoundaryVector gauss(g, gv, 0.0);
    FourierVector w = dft(gauss);
    auto tw = twiddle_table(n);

    for (size_t k : {size_t(1024), size_t(1030), size_t(990), size_t(1063)}) {
        const long long kc = (long long)k - (long long)(n / 2);
        detail::CompensatedSum re, im;
        for (size_t j = 0; j < n; ++j) {
            const cplx ph = std::conj(tw[phase_index(n, kc, j)]);
            const cplx t = gauss.samples[j] * ph;
            re.add(t.real());
            im.add(t.imag());
        }
        const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        const double scale = sgn * g.spacing() / std::sqrt(2.0 * PI);
        cplx precise = scale * cplx(re.value(), im.value());
        printf("k=%zu t=%.4g fft=(%.8g,%.8g) precise=(%.8g,%.8g)\n", k, g.freq_node(k),
               w.coeff[k].real(), w.coeff[k].imag(), precise.real(), precise.imag());
    }

    // synthesize replica vs idft on a narrow test spectrum
    std::vector<cplx> spec(n, cplx(0, 0));
    spec[1024] = 1.0; spec[1030] = cplx(0.3, -0.2); spec[1017] = cplx(-0.1, 0.05);
    BoundaryVector ref = idft(FourierVector(g, spec), 0.0);
    double dmax = 0.0;
    const double scale = g.freq_spacing() / std::sqrt(2.0 * PI);
    for (size_t j = 0; j < n; ++j) {
        cplx acc(0, 0);
        for (size_t k : {size_t(1024), size_t(1030), size_t(1017)}) {
            const long long kc = (long long)k - (long long)(n / 2);
            const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
            acc += sgn * spec[k] * tw[phase_index(n, kc, j)];
        }
        dmax = std::max(dmax, std::abs(scale * acc - ref.samples[j]));
    }
    printf("synthesize vs idft: %.3e\n", dmax);
    return 0;
}
