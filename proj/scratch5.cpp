#include <cstdio>
#include <numbers>

#include "src/core/grid.hpp"
#include "src/core/hardy.hpp"

using namespace striphardy;
using std::size_t;
constexpr double PI = std::numbers::pi;

// residual of f(.-pi i) v(.-pi i) = lam v for the n-zero midline family, k-th vector
static void residual_for(double L, size_t N, const std::vector<double>& gammas, int k) {
    StripGrid g = make_grid(L, N);
    const size_t n = g.size();
    const int nz = (int)gammas.size();
    std::vector<cplx> vv(n), wv(n);
    for (size_t j = 0; j < n; ++j) {
        double th = g.node(j);
        cplx e = std::exp(th);
        cplx v = std::exp((k + 0.5) * th);
        cplx w = v;
        for (double ga : gammas) {
            v /= (e - cplx(0.0, ga));
            w /= (e + cplx(0.0, ga));  // f*v has poles at conj positions
        }
        vv[j] = v;
        wv[j] = w;
    }
    BoundaryVector v(g, vv, 0.0), w(g, wv, 0.0);
    double nv = l2_norm(v);
    ContinuationResult c = continue_to(w, -PI);
    int nplus = 0;
    for (double ga : gammas) if (ga <= -1.0) nplus++;
    cplx lam = ((nz + k + 1) % 2 == 0) ? cplx(0, 1) : cplx(0, -1);
    double num = 0;
    for (size_t j = 0; j < n; ++j) num += std::norm(c.output.samples[j] - lam * vv[j]);
    num = std::sqrt(num * g.spacing());
    MembershipResult m = hardy_membership(w, 1e-6);
    printf("L=%g N=%zu nz=%d k=%d: residual=%.3e trusted=%d indicator=%.2e member=%d defect=%.2e\n",
           L, N, nz, k, num / nv, c.trusted, c.aliasing_indicator, m.member, m.defect);
}

int main() {
    residual_for(64, 8192, {-1.0}, 0);
    residual_for(64, 8192, {-1.0, -std::exp(1.0)}, 0);
    residual_for(64, 8192, {-1.0, -std::exp(1.0)}, 1);
    residual_for(64, 8192, {-0.5, -1.3, -2.0}, 0);
    residual_for(64, 8192, {-0.5, -1.3, -2.0}, 1);
    residual_for(64, 8192, {-0.5, -1.3, -2.0}, 2);
    residual_for(64, 8192, {-0.4, -0.8, -1.6, -3.1}, 0);
    residual_for(64, 8192, {-0.4, -0.8, -1.6, -3.1}, 3);
    residual_for(96, 8192, {-1.0}, 0);
    residual_for(64, 16384, {-1.0}, 0);
    residual_for(16, 2048, {-1.0}, 0);
    return 0;
}
