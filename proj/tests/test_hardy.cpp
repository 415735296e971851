#include <numbers>

#include "core/hardy.hpp"
#include "core/symbol.hpp"
#include "doctest.h"

using namespace striphardy;
namespace {
constexpr double kPi = std::numbers::pi;

BoundaryVector gaussian(const StripGrid& g) {
    std::vector<cplx> v(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) v[j] = std::exp(-0.5 * g.node(j) * g.node(j));
    return BoundaryVector(g, v, 0.0);
}

// band-limited trial: gaussian envelope times a few damped oscillations
BoundaryVector band_limited(const StripGrid& g, int seed) {
    std::vector<cplx> v(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double th = g.node(j);
        cplx acc(0.0, 0.0);
        for (int m = -6; m <= 6; ++m) {
            const double t = 0.6 * m;
            const double damp = std::exp(-kPi * std::max(t, 0.0));
            const double c = std::cos(0.7 * (m + 3) * (seed + 1));
            acc += damp * c * detail::exp_i_real(t * th);
        }
        v[j] = std::exp(-0.5 * th * th) * acc;
    }
    return BoundaryVector(g, v, 0.0);
}

double rel_l2_error(const BoundaryVector& got, const std::vector<cplx>& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < got.samples.size(); ++j) {
        num += std::norm(got.samples[j] - want[j]);
        den += std::norm(want[j]);
    }
    return std::sqrt(num / den);
}
}  // namespace

TEST_CASE("continuation with lambda = 0 is the identity") {
    StripGrid g = make_grid(16.0, 256);
    BoundaryVector v = gaussian(g);
    ContinuationResult c = continue_to(v, 0.0);
    CHECK(c.trusted);
    for (std::size_t j = 0; j < g.size(); ++j) CHECK(c.output.samples[j] == v.samples[j]);
}

TEST_CASE("gaussian continued to the lower line matches the closed form") {
    StripGrid g = make_grid(16.0, 2048);
    ContinuationResult c = continue_to(gaussian(g), -kPi);
    CHECK(c.trusted);
    std::vector<cplx> want(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double th = g.node(j);
        want[j] = std::exp(kPi * kPi / 2.0) * detail::exp_i_real(kPi * th) *
                  std::exp(-0.5 * th * th);
    }
    CHECK(rel_l2_error(c.output, want) <= 1e-6);
}

TEST_CASE("sech continued to the midline matches the closed form") {
    // 1/cosh(theta/4) decays to ~3.7e-2 at theta = 16; the periodized transform
    // needs the wider window for the 1e-12 edge-decay contract
    StripGrid g = make_grid(128.0, 8192);
    std::vector<cplx> v(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) v[j] = 1.0 / std::cosh(g.node(j) / 4.0);
    ContinuationResult c = continue_to(BoundaryVector(g, v, 0.0), -kPi / 2.0);
    CHECK(c.trusted);
    std::vector<cplx> want(g.size());
    for (std::size_t j = 0; j < g.size(); ++j)
        want[j] = 1.0 / std::cosh(cplx(g.node(j), -kPi / 2.0) / 4.0);
    CHECK(rel_l2_error(c.output, want) <= 1e-6);
}

TEST_CASE("semigroup property of interior continuation") {
    StripGrid g = make_grid(16.0, 1024);
    BoundaryVector v = band_limited(g, 1);
    const double l1 = -0.7, l2 = -2.1;
    ContinuationResult first = continue_to(v, l1);
    ContinuationResult chained = continue_to(first.output.with_line(0.0), l2 - l1);
    ContinuationResult direct = continue_to(v, l2);
    CHECK(rel_l2_error(chained.output, direct.output.samples) <= 1e-8);
}

TEST_CASE("continuation agrees with the multiplier in the Fourier domain") {
    StripGrid g = make_grid(16.0, 1024);
    BoundaryVector v = band_limited(g, 2);
    ContinuationResult c = continue_to(v, -kPi);
    FourierVector out_hat = dft(c.output.with_line(0.0));
    FourierVector in_hat = dft(v);
    double dev = 0.0, scale = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        const double m = std::exp(kPi * g.freq_node(k));
        const cplx want = std::isfinite(m) && std::abs(in_hat.coeff[k]) > 1e-13
                              ? m * in_hat.coeff[k]
                              : out_hat.coeff[k];
        dev = std::max(dev, std::abs(out_hat.coeff[k] - want));
        scale = std::max(scale, std::abs(out_hat.coeff[k]));
    }
    CHECK(dev <= 1e-10 * scale);
}

TEST_CASE("hardy membership verdicts") {
    StripGrid g = make_grid(16.0, 2048);
    MembershipResult gm = hardy_membership(gaussian(g), 1e-8);
    CHECK(gm.member);
    CHECK(gm.defect < 1e-10);

    std::vector<cplx> bad(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) bad[j] = 1.0 / cplx(g.node(j), 0.5);
    MembershipResult bm = hardy_membership(BoundaryVector(g, bad, 0.0), 1e-8);
    CHECK_FALSE(bm.member);
    CHECK(bm.defect > 0.1);

    MembershipResult zm = hardy_membership(BoundaryVector(g, 0.0), 1e-8);
    CHECK(zm.member);
    CHECK(zm.defect == 0.0);
}

TEST_CASE("pointwise interior bound") {
    StripGrid g = make_grid(16.0, 2048);

    PointwiseBoundResult zero = pointwise_bound_check(BoundaryVector(g, 0.0), 0.0, -kPi / 2.0);
    CHECK(zero.value == 0.0);
    CHECK(zero.bound == 0.0);
    CHECK(zero.margin == 0.0);

    BoundaryVector v = gaussian(g);
    PointwiseBoundResult mid = pointwise_bound_check(v, 0.0, -kPi / 2.0);
    CHECK(mid.margin > 0.0);

    // near the upper line the ||xi|| term dominates: bound ~ ||xi||/sqrt(0.04 pi)
    PointwiseBoundResult near = pointwise_bound_check(v, 0.0, -0.01);
    CHECK(near.margin >= 0.0);
    CHECK(near.bound >= l2_norm(v) / std::sqrt(4.0 * kPi * 0.01) * 0.999);

    // sweep: margin >= -1e-8 * bound on every node for the three reference lines
    for (double lam : {-kPi / 4.0, -kPi / 2.0, -3.0 * kPi / 4.0}) {
        ContinuationResult c = continue_to(v, lam);
        const double nrm = l2_norm(v);
        const double dnrm = continued_norm(v);
        const double bound = nrm / std::sqrt(-4.0 * kPi * lam) +
                             dnrm / std::sqrt(4.0 * kPi * (kPi + lam));
        for (std::size_t j = 0; j < g.size(); ++j)
            CHECK(bound - std::abs(c.output.samples[j]) >= -1e-8 * bound);
    }

    CHECK_THROWS_AS((void)pointwise_bound_check(v, 0.0, 0.5), Error);
}

TEST_CASE("conjugation J") {
    StripGrid g = make_grid(16.0, 512);

    // real even vector is a fixed point
    std::vector<cplx> even(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) even[j] = std::exp(-g.node(j) * g.node(j));
    BoundaryVector ev(g, even, 0.0);
    BoundaryVector jev = j_conjugate(ev);
    for (std::size_t j = 0; j < g.size(); ++j)
        CHECK(std::abs(jev.samples[j] - ev.samples[j]) <= 1e-15);

    // xi = e^{i theta} g(theta) with g real even maps to itself
    std::vector<cplx> tw(g.size());
    for (std::size_t j = 0; j < g.size(); ++j)
        tw[j] = detail::exp_i_real(g.node(j)) * std::exp(-g.node(j) * g.node(j));
    BoundaryVector twv(g, tw, 0.0);
    BoundaryVector jtw = j_conjugate(twv);
    for (std::size_t j = 1; j < g.size(); ++j)
        CHECK(std::abs(jtw.samples[j] - twv.samples[j]) <= 1e-14);

    // involution on a generic vector
    BoundaryVector r = band_limited(g, 5);
    BoundaryVector jjr = j_conjugate(j_conjugate(r));
    for (std::size_t j = 0; j < g.size(); ++j)
        CHECK(std::abs(jjr.samples[j] - r.samples[j]) <= 1e-15);
}

TEST_CASE("J commutes with the operator for mirror-symmetric symbols") {
    // f = single midline Blaschke factor: conj f(theta) = f(-theta)
    StripGrid g = make_grid(16.0, 1024);
    BlaschkeData bl;
    bl.zeros.push_back({cplx(0.0, -kPi / 2.0), 1});
    std::vector<cplx> f0(g.size());
    for (std::size_t j = 0; j < g.size(); ++j)
        f0[j] = eval_blaschke(bl, cplx(g.node(j), 0.0));

    BoundaryVector xi = band_limited(g, 7);
    auto op = [&](const BoundaryVector& v) {
        ContinuationResult c = continue_to(v, -kPi);
        BoundaryVector out = c.output.with_line(0.0);
        for (std::size_t j = 0; j < g.size(); ++j) out.samples[j] *= std::conj(f0[j]);
        return out;
    };
    BoundaryVector lhs = j_conjugate(op(xi));
    BoundaryVector rhs = op(j_conjugate(xi));
    double dev = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j)
        dev = std::max(dev, std::abs(lhs.samples[j] - rhs.samples[j]));
    CHECK(dev <= 1e-6 * l2_norm(xi));
}
