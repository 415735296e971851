#include <cstdio>
#include <numbers>

#include "src/core/grid.hpp"
#include "src/core/hardy.hpp"

using namespace striphardy;
constexpr double PI = std::numbers::pi;

int main() {
    StripGrid g = make_grid(16.0, 2048);
    std::vector<cplx> gv(g.size());
    for (size_t j = 0; j < g.size(); ++j) gv[j] = std::exp(-0.5 * g.node(j) * g.node(j));
    BoundaryVector gauss(g, gv, 0.0);

    // route A: manual idft(e^{pi t} dft) with flooring at 1e-15
    FourierVector w = dft(gauss);
    double mx = 0.0;
    for (auto& z : w.coeff) mx = std::max(mx, std::abs(z));
    FourierVector amp = w;
    for (size_t k = 0; k < g.size(); ++k) {
        if (std::abs(w.coeff[k]) < 1e-15 * mx) { amp.coeff[k] = 0.0; continue; }
        amp.coeff[k] = w.coeff[k] * std::exp(PI * g.freq_node(k));
    }
    BoundaryVector outA = idft(amp, -PI);

    ContinuationResult c = continue_to(gauss, -PI);

    double numA = 0, numB = 0, den = 0, numAB = 0;
    for (size_t j = 0; j < g.size(); ++j) {
        double th = g.node(j);
        cplx want = std::exp(PI * PI / 2.0) * std::exp(cplx(0.0, PI * th)) * std::exp(-0.5 * th * th);
        numA += std::norm(outA.samples[j] - want);
        numB += std::norm(c.output.samples[j] - want);
        numAB += std::norm(c.output.samples[j] - outA.samples[j]);
        den += std::norm(want);
    }
    printf("route A (plain fft floor): %.3e\n", std::sqrt(numA / den));
    printf("route B (banded):          %.3e\n", std::sqrt(numB / den));
    printf("A vs B:                    %.3e\n", std::sqrt(numAB / den));

    // sample values around theta=0
    size_t j0 = g.nearest_index(0.0);
    for (size_t j = j0; j < j0 + 2; ++j) {
        cplx want = std::exp(PI * PI / 2.0) * std::exp(cplx(0.0, PI * g.node(j))) *
                    std::exp(-0.5 * g.node(j) * g.node(j));
        printf("j=%zu want=(%.6g,%.6g) A=(%.6g,%.6g) B=(%.6g,%.6g)\n", j, want.real(), want.imag(),
               outA.samples[j].real(), outA.samples[j].imag(), c.output.samples[j].real(),
               c.output.samples[j].imag());
    }
    return 0;
}
