// scratch validation of the numeric design; deleted before finalizing
#include <cstdio>
#include <numbers>

#include "src/core/grid.hpp"
#include "src/core/hardy.hpp"
#include "src/core/poisson.hpp"
#include "src/core/symbol.hpp"

using namespace striphardy;
constexpr double PI = std::numbers::pi;

int main() {
    StripGrid g = make_grid(16.0, 2048);
    printf("h=%.10g dt=%.10g tmax=%.6g\n", g.spacing(), g.freq_spacing(), g.max_freq());

    // Gaussian dft closed form
    std::vector<cplx> gv(g.size());
    for (size_t j = 0; j < g.size(); ++j) gv[j] = std::exp(-0.5 * g.node(j) * g.node(j));
    BoundaryVector gauss(g, gv, 0.0);
    FourierVector gh = dft(gauss);
    double dmax = 0.0;
    for (size_t k = 0; k < g.size(); ++k) {
        double t = g.freq_node(k);
        if (std::abs(t) <= 8.0) dmax = std::max(dmax, std::abs(gh.coeff[k] - std::exp(-0.5 * t * t)));
    }
    printf("gauss dft abs err on |t|<=8: %.3e\n", dmax);

    // round trip
    BoundaryVector rt = idft(gh, 0.0);
    double rte = 0.0;
    for (size_t j = 0; j < g.size(); ++j) rte = std::max(rte, std::abs(rt.samples[j] - gv[j]));
    printf("roundtrip err: %.3e  parseval: %.3e\n", rte, std::abs(l2_norm(gh) - l2_norm(gauss)));

    // continuation to -pi vs closed form e^{pi^2/2} e^{i pi theta} e^{-theta^2/2}
    ContinuationResult c = continue_to(gauss, -PI);
    double num = 0.0, den = 0.0;
    for (size_t j = 0; j < g.size(); ++j) {
        double th = g.node(j);
        cplx want = std::exp(PI * PI / 2.0) * std::exp(cplx(0.0, PI * th)) * std::exp(-0.5 * th * th);
        num += std::norm(c.output.samples[j] - want);
        den += std::norm(want);
    }
    printf("gauss continuation relL2: %.3e indicator=%.3e trusted=%d\n", std::sqrt(num / den),
           c.aliasing_indicator, c.trusted);

    // sech continuation on L=128 N=8192
    StripGrid g2 = make_grid(128.0, 8192);
    std::vector<cplx> sv(g2.size());
    for (size_t j = 0; j < g2.size(); ++j) sv[j] = 1.0 / std::cosh(g2.node(j) / 4.0);
    BoundaryVector sech(g2, sv, 0.0);
    ContinuationResult c2 = continue_to(sech, -PI / 2.0);
    num = den = 0.0;
    for (size_t j = 0; j < g2.size(); ++j) {
        cplx want = 1.0 / std::cosh(cplx(g2.node(j), -PI / 2.0) / 4.0);
        num += std::norm(c2.output.samples[j] - want);
        den += std::norm(want);
    }
    printf("sech continuation relL2: %.3e trusted=%d\n", std::sqrt(num / den), c2.trusted);

    // membership
    MembershipResult m1 = hardy_membership(gauss, 1e-8);
    printf("gauss member=%d defect=%.3e\n", m1.member, m1.defect);
    std::vector<cplx> bad(g.size());
    for (size_t j = 0; j < g.size(); ++j) bad[j] = 1.0 / cplx(g.node(j), 0.5);
    MembershipResult m2 = hardy_membership(BoundaryVector(g, bad, 0.0), 1e-8);
    printf("1/(theta+i/2) member=%d defect=%.3e\n", m2.member, m2.defect);

    // midline eigenvector residual physics: v = e^{theta/2}/(e^theta + i), f = (e^z+i)/(e^z-i)
    std::vector<cplx> vv(g.size()), fv(g.size());
    for (size_t j = 0; j < g.size(); ++j) {
        double th = g.node(j);
        cplx e = std::exp(th);
        vv[j] = std::exp(0.5 * th) / (e + cplx(0, 1));
        fv[j] = (e + cplx(0, 1)) / (e - cplx(0, 1)) * vv[j];  // f*v = e^{th/2}/(e^th - i)
    }
    BoundaryVector w(g, fv, 0.0);
    ContinuationResult cw = continue_to(w, -PI);
    num = den = 0.0;
    for (size_t j = 0; j < g.size(); ++j) {
        num += std::norm(cw.output.samples[j] - cplx(0, 1) * vv[j]);
        den += std::norm(vv[j]);
    }
    printf("midline n=1 residual: %.3e indicator=%.3e trusted=%d\n", std::sqrt(num / den),
           cw.aliasing_indicator, cw.trusted);

    // Poisson: constant kernel c=2 -> f_out = 2 at interior points
    OuterData oc;
    oc.kind = OuterData::Kind::constant;
    oc.c = 2.0;
    for (double th : {-3.0, 0.0, 2.5}) {
        for (double lam : {-0.3, -1.5, -3.0}) {
            OuterData tab;  // same kernel through the table path
            tab.kind = OuterData::Kind::table;
            tab.table_u = {-60.0, 0.0, 60.0};
            tab.table_logphi = {std::log(2.0), std::log(2.0), std::log(2.0)};
            tab.decay = OuterData::Decay::linear;
            cplx v = eval_outer(tab, cplx(th, lam));
            if (std::abs(v - 2.0) > 1e-8) printf("  const-kernel MISMATCH at (%g,%g): %g+%gi\n", th, lam, v.real(), v.imag());
        }
    }
    printf("constant-kernel quadrature == 2 checked\n");

    // f_minus of constant c=2 on line 0 via quadrature path vs closed form
    OuterData tab2;
    tab2.kind = OuterData::Kind::table;
    tab2.table_u = {-60.0, 0.0, 60.0};
    tab2.table_logphi = {std::log(2.0), std::log(2.0), std::log(2.0)};
    double fm_err = 0.0;
    for (double th : {-5.0, -1.0, 0.0, 1.0, 5.0}) {
        cplx got = eval_outer_minus(tab2, cplx(th, 0.0));
        cplx want = std::exp(cplx(0.0, th * std::log(2.0) / PI));
        fm_err = std::max(fm_err, std::abs(got - want));
    }
    printf("f_minus(const 2) line0 err: %.3e\n", fm_err);

    // gauss_strip f_minus closed-form vs quadrature at interior point
    OuterData og;
    og.kind = OuterData::Kind::gauss_strip;
    OuterData tg;
    tg.kind = OuterData::Kind::table;
    tg.table_u.resize(401);
    tg.table_logphi.resize(401);
    for (int i = 0; i <= 400; ++i) {
        double u = -20.0 + 0.1 * i;
        tg.table_u[i] = u;
        tg.table_logphi[i] = PI * PI / 4.0 - u * u;
    }
    tg.decay = OuterData::Decay::linear;  // continues -u^2? linear tail; mass beyond |u|=20 tiny
    cplx q1 = eval_outer_minus(og, cplx(0.7, -1.1));
    // quadrature route with builtin kernel directly:
    cplx q2 = eval_outer_minus(tab2, cplx(0.0, 0.0));  // placeholder
    OuterData og_q = og;                               // builtin but force quadrature via half_exponent? not exposed; use sech cross-check instead
    (void)q2;
    OuterData os;
    os.kind = OuterData::Kind::sech_alpha;
    os.alpha = 0.5;
    cplx closed = eval_outer(os, cplx(0.7, -1.1));
    OuterData ts;
    ts.kind = OuterData::Kind::table;
    ts.table_u.resize(801);
    ts.table_logphi.resize(801);
    for (int i = 0; i <= 800; ++i) {
        double u = -40.0 + 0.1 * i;
        ts.table_u[i] = u;
        double sh = std::sinh(0.5 * u), cs = std::cos(0.5 * PI / 2.0);
        ts.table_logphi[i] = -0.5 * std::log(sh * sh + cs * cs);
    }
    cplx quad = eval_outer(ts, cplx(0.7, -1.1));
    printf("sech closed vs table quadrature: %.3e  (closed=%g%+gi)\n", std::abs(closed - quad),
           closed.real(), closed.imag());
    printf("gauss f_minus at (0.7,-1.1) = %g%+gi\n", q1.real(), q1.imag());

    // gauss split identities on line 0: |f_minus|=1, f_plus("-pi") = conj f_minus(0), product = f_out
    double a1 = 0, a2 = 0, a3 = 0;
    StripGrid g3 = make_grid(16.0, 256);
    OuterSplit sp = split_outer(og, g3);
    BoundaryPair dummy{BoundaryVector(g3, 0.0), BoundaryVector(g3, -PI)};
    for (size_t j = 0; j < g3.size(); ++j) {
        double th = g3.node(j);
        a1 = std::max(a1, std::abs(std::abs(sp.f_minus_on_0.samples[j]) - 1.0));
        a2 = std::max(a2, std::abs(sp.f_plus_on_minus_pi.samples[j] -
                                   std::conj(sp.f_minus_on_0.samples[j])));
        cplx fo = eval_outer(og, cplx(th, 0.0));
        a3 = std::max(a3, std::abs(sp.f_plus_on_0.samples[j] * sp.f_minus_on_0.samples[j] - fo));
    }
    printf("gauss split: | |f-|-1 | = %.3e, cross = %.3e, reconstruct = %.3e\n", a1, a2, a3);
    return 0;
}
