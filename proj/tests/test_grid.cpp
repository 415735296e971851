#include <numbers>
#include <random>

#include "core/grid.hpp"
#include "doctest.h"

using namespace striphardy;
namespace {
constexpr double kPi = std::numbers::pi;

BoundaryVector random_vector(const StripGrid& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<cplx> v(g.size());
    for (auto& z : v) {
        const double a = static_cast<double>(rng() >> 11) / 9007199254740992.0;
        const double b = static_cast<double>(rng() >> 11) / 9007199254740992.0;
        z = cplx(2.0 * a - 1.0, 2.0 * b - 1.0);
    }
    return BoundaryVector(g, v, 0.0);
}
}  // namespace

TEST_CASE("grid construction and node layout") {
    StripGrid g = make_grid(16.0, 2048);
    CHECK(g.spacing() == doctest::Approx(0.015625).epsilon(0));
    CHECK(g.freq_spacing() == doctest::Approx(kPi / 16.0));
    CHECK(g.spacing() * static_cast<double>(g.size()) == 32.0);  // h*N = 2L exactly

    StripGrid small = make_grid(1.0, 8);
    for (std::size_t j = 0; j < 8; ++j)
        CHECK(small.node(j) == doctest::Approx(-1.0 + 0.25 * static_cast<double>(j)));
    // strictly increasing, symmetric about 0 up to the endpoint
    CHECK(small.node(4) == 0.0);

    CHECK_THROWS_AS(make_grid(16.0, 1000), Error);
    CHECK_THROWS_AS(make_grid(-1.0, 2048), Error);
    CHECK_THROWS_AS(make_grid(16.0, 4), Error);
}

TEST_CASE("dft of the discrete delta has constant modulus") {
    StripGrid g = make_grid(8.0, 64);
    std::vector<cplx> v(g.size(), cplx(0.0, 0.0));
    v[g.nearest_index(0.0)] = 1.0;
    FourierVector w = dft(BoundaryVector(g, v, 0.0));
    const double m0 = std::abs(w.coeff[0]);
    for (const cplx& c : w.coeff) CHECK(std::abs(c) == doctest::Approx(m0).epsilon(1e-12));
}

TEST_CASE("dft of a gaussian matches the closed-form transform") {
    StripGrid g = make_grid(16.0, 2048);
    std::vector<cplx> v(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) v[j] = std::exp(-0.5 * g.node(j) * g.node(j));
    FourierVector w = dft(BoundaryVector(g, v, 0.0));
    for (std::size_t k = 0; k < g.size(); ++k) {
        const double t = g.freq_node(k);
        if (std::abs(t) > 8.0) continue;
        CHECK(std::abs(w.coeff[k] - std::exp(-0.5 * t * t)) <= 1e-8);
    }
}

TEST_CASE("round trip and Parseval within 1e-12") {
    StripGrid g = make_grid(16.0, 512);
    for (std::uint64_t seed : {7ULL, 8ULL, 9ULL}) {
        BoundaryVector v = random_vector(g, seed);
        FourierVector w = dft(v);
        BoundaryVector back = idft(w, 0.0);
        double dev = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j)
            dev = std::max(dev, std::abs(back.samples[j] - v.samples[j]));
        CHECK(dev <= 1e-12 * l2_norm(v));
        CHECK(std::abs(l2_norm(w) - l2_norm(v)) <= 1e-12 * l2_norm(v));
    }
}

TEST_CASE("inner product conventions") {
    StripGrid g = make_grid(16.0, 2048);
    std::vector<cplx> gv(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) gv[j] = std::exp(-0.5 * g.node(j) * g.node(j));
    BoundaryVector gauss(g, gv, 0.0);

    // <gaussian, gaussian> = integral of e^{-theta^2} = sqrt(pi)
    CHECK(inner_product(gauss, gauss).real() ==
          doctest::Approx(std::sqrt(kPi)).epsilon(1e-10));

    BoundaryVector a = random_vector(g, 3), b = random_vector(g, 4);
    const cplx ab = inner_product(a, b), ba = inner_product(b, a);
    CHECK(std::abs(ab - std::conj(ba)) <= 1e-12 * l2_norm(a) * l2_norm(b));

    // normalized vector has unit norm
    BoundaryVector unit = gauss;
    const double nrm = l2_norm(unit);
    for (cplx& z : unit.samples) z /= nrm;
    CHECK(inner_product(unit, unit).real() == doctest::Approx(1.0).epsilon(1e-12));

    StripGrid other = make_grid(8.0, 2048);
    BoundaryVector mismatch(other, 0.0);
    CHECK_THROWS_AS((void)inner_product(gauss, mismatch), Error);
    CHECK_THROWS_AS((void)inner_product(gauss, gauss.with_line(-kPi)), Error);
}
