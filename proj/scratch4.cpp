#include <cstdio>
#include <numbers>
#include <functional>

#include "src/core/grid.hpp"
#include "src/core/hardy.hpp"

using namespace striphardy;
using std::size_t;
constexpr double PI = std::numbers::pi;

int main() {
    StripGrid g = make_grid(16.0, 2048);
    const size_t n = g.size();
    std::vector<cplx> gv(n);
    for (size_t j = 0; j < n; ++j) gv[j] = std::exp(-0.5 * g.node(j) * g.node(j));
    BoundaryVector gauss(g, gv, 0.0);

    ContinuationResult c = continue_to(gauss, -PI);
    // spectrum of the output should be e^{pi t} e^{-t^2/2} on the kept band
    FourierVector back = dft(c.output.with_line(0.0));
    for (size_t k = 960; k <= 1100; k += 10) {
        double t = g.freq_node(k);
        double want = std::exp(PI * t - 0.5 * t * t);
        printf("k=%zu t=%7.3f back=%.6e want=%.6e\n", k, t, std::abs(back.coeff[k]), want);
    }
    return 0;
}
