#include <numbers>

#include "core/extension.hpp"
#include "doctest.h"

using namespace striphardy;
namespace {
constexpr double kPi = std::numbers::pi;

BoundaryVector gaussian(const StripGrid& g) {
    std::vector<cplx> v(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) v[j] = std::exp(-0.5 * g.node(j) * g.node(j));
    return BoundaryVector(g, v, 0.0);
}

SymbolSpec midline_h() {
    SymbolSpec h;
    h.blaschke.zeros.push_back({cplx(0.0, -kPi / 2.0), 1});
    return h;
}

double rel_dev(const BoundaryVector& a, const std::vector<cplx>& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < a.samples.size(); ++j) {
        num += std::norm(a.samples[j] - b[j]);
        den += std::norm(b[j]);
    }
    return std::sqrt(num / den);
}
}  // namespace

TEST_CASE("trivial square root gives the continuation operator itself") {
    StripGrid g = make_grid(16.0, 2048);
    CanonicalExtension ext = build_extension(make_square_symbol(SymbolSpec{}, g, 1e-8), g);
    for (const cplx& z : ext.u_on_0.samples) CHECK(std::abs(z - 1.0) <= 1e-12);

    BoundaryVector xi = gaussian(g);
    ExtensionApplyResult r = apply_extension(ext, xi);
    CHECK(r.in_domain);
    ContinuationResult direct = continue_to(xi, -kPi);
    double dev = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j)
        dev = std::max(dev, std::abs(r.result.samples[j] - direct.output.samples[j]));
    CHECK(dev <= 1e-10 * l2_norm(direct.output));
}

TEST_CASE("midline blaschke square root") {
    StripGrid g = make_grid(16.0, 2048);
    CanonicalExtension ext = build_extension(make_square_symbol(midline_h(), g, 1e-8), g);

    // u = (e^theta + i)/(e^theta - i), unimodular
    for (std::size_t j = 0; j < g.size(); ++j) {
        const cplx e = std::exp(g.node(j));
        CHECK(std::abs(ext.u_on_0.samples[j] - (e + cplx(0, 1)) / (e - cplx(0, 1))) <= 1e-12);
    }
    CHECK(ext.unimodularity_deviation <= 1e-8);

    // A_f xi on a pole-free gaussian matches f(theta - pi i) xi(theta - pi i)
    BoundaryVector xi = gaussian(g);
    ExtensionApplyResult r = apply_extension(ext, xi);
    CHECK(r.in_domain);
    std::vector<cplx> want(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double th = g.node(j);
        const cplx e = std::exp(th);
        const cplx hpi = (-e + cplx(0, 1)) / (-e - cplx(0, 1));
        const cplx xipi = std::exp(kPi * kPi / 2.0) * detail::exp_i_real(kPi * th) *
                          std::exp(-0.5 * th * th);
        want[j] = hpi * hpi * xipi;
    }
    CHECK(rel_dev(r.result, want) <= 1e-6);

    // pole-profile input: u xi loses membership, the verdict reports it
    std::vector<cplx> polev(g.size());
    for (std::size_t j = 0; j < g.size(); ++j)
        polev[j] = 1.0 / (std::exp(g.node(j)) + cplx(0.0, 1.0));
    ExtensionApplyResult bad = apply_extension(ext, BoundaryVector(g, polev, 0.0));
    CHECK_FALSE(bad.in_domain);
    CHECK(bad.membership_defect > 1e-6);
}

TEST_CASE("unitarity of the boundary symbol") {
    StripGrid g = make_grid(16.0, 1024);
    CanonicalExtension ext = build_extension(make_square_symbol(midline_h(), g, 1e-8), g);
    for (int trial = 0; trial < 10; ++trial) {
        BoundaryVector xi = random_domain_vector(g, 42, trial);
        std::vector<cplx> uxi(g.size());
        for (std::size_t j = 0; j < g.size(); ++j)
            uxi[j] = ext.u_on_0.samples[j] * xi.samples[j];
        CHECK(std::abs(l2_norm(BoundaryVector(g, uxi, 0.0)) - l2_norm(xi)) <=
              1e-10 * l2_norm(xi));
    }
}

TEST_CASE("spectral calculus") {
    StripGrid g = make_grid(16.0, 1024);
    CanonicalExtension ext = build_extension(make_square_symbol(midline_h(), g, 1e-8), g);
    BoundaryVector xi = random_domain_vector(g, 42, 3);

    SUBCASE("identity agrees with apply_extension") {
        BoundaryVector a = apply_spectral_function(ext, SpectralFunction::parse("identity"), xi);
        ExtensionApplyResult b = apply_extension(ext, xi);
        double dev = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j)
            dev = std::max(dev, std::abs(a.samples[j] - b.result.samples[j]));
        CHECK(dev <= 1e-10 * (1.0 + l2_norm(b.result)));
    }

    SUBCASE("square equals identity applied twice") {
        BoundaryVector sq = apply_spectral_function(ext, SpectralFunction::parse("square"), xi);
        ExtensionApplyResult once = apply_extension(ext, xi);
        ExtensionApplyResult twice = apply_extension(ext, once.result);
        double dev = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j)
            dev = std::max(dev, std::abs(sq.samples[j] - twice.result.samples[j]));
        CHECK(dev <= 1e-6 * (1.0 + l2_norm(sq)));
    }

    SUBCASE("spectral projection has one-sided support") {
        BoundaryVector proj =
            apply_spectral_function(ext, SpectralFunction::parse("indicator:0,1"), xi);
        std::vector<cplx> up(g.size());
        for (std::size_t j = 0; j < g.size(); ++j)
            up[j] = ext.u_on_0.samples[j] * proj.samples[j];
        FourierVector w = dft(BoundaryVector(g, up, 0.0));
        double pos = 0.0, total = 0.0;
        for (std::size_t k = 0; k < g.size(); ++k) {
            const double e = std::norm(w.coeff[k]);
            total += e;
            if (g.freq_node(k) > 1e-9) pos += e;
        }
        CHECK(pos <= 1e-10 * total);
    }

    SUBCASE("multiplicative functions compose") {
        SpectralFunction e1 = SpectralFunction::parse("exp:-0.5");
        BoundaryVector a = apply_spectral_function(ext, e1, xi);
        BoundaryVector ab = apply_spectral_function(ext, e1, a);
        BoundaryVector direct = apply_spectral_function(ext, SpectralFunction::parse("exp:-1"), xi);
        double dev = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j)
            dev = std::max(dev, std::abs(ab.samples[j] - direct.samples[j]));
        CHECK(dev <= 1e-8 * (1.0 + l2_norm(direct)));
    }
}

TEST_CASE("symmetry audit") {
    StripGrid g = make_grid(16.0, 1024);

    SUBCASE("h == 1 is self-adjoint at machine precision") {
        CanonicalExtension ext = build_extension(make_square_symbol(SymbolSpec{}, g, 1e-8), g);
        CHECK(symmetry_audit(ext, 20, 42) <= 1e-10);
    }

    SUBCASE("midline blaschke square root audits below 1e-6") {
        CanonicalExtension ext = build_extension(make_square_symbol(midline_h(), g, 1e-8), g);
        CHECK(symmetry_audit(ext, 50, 42) <= 1e-6);
    }

    SUBCASE("fault injection: a non-unimodular u breaks the audit") {
        CanonicalExtension ext = build_extension(make_square_symbol(midline_h(), g, 1e-8), g);
        for (cplx& z : ext.u_on_0.samples) z *= 1.1;
        CHECK(symmetry_audit(ext, 10, 42) > 1e-6);
    }
}

TEST_CASE("domain monotonicity: h xi in H2 implies u xi in H2") {
    StripGrid g = make_grid(16.0, 1024);
    SymbolSpec h = midline_h();
    CanonicalExtension ext = build_extension(make_square_symbol(h, g, 1e-8), g);
    BoundaryPair hb = sample_boundary(h, g);
    for (int trial = 0; trial < 10; ++trial) {
        BoundaryVector xi = random_domain_vector(g, 7, trial);
        std::vector<cplx> hxi(g.size()), uxi(g.size());
        for (std::size_t j = 0; j < g.size(); ++j) {
            hxi[j] = hb.on_0.samples[j] * xi.samples[j];
            uxi[j] = ext.u_on_0.samples[j] * xi.samples[j];
        }
        if (hardy_membership(BoundaryVector(g, hxi, 0.0), 1e-8).member)
            CHECK(hardy_membership(BoundaryVector(g, uxi, 0.0), 1e-8).member);
    }
}

TEST_CASE("constant square root matches the split of f_out = c") {
    StripGrid g = make_grid(16.0, 512);
    SymbolSpec h;
    h.outer.c = std::sqrt(2.0);
    CanonicalExtension ext = build_extension(make_square_symbol(h, g, 1e-8), g);
    // u = f_-(theta) for f = 2: e^{i theta ln 2 / pi}
    for (std::size_t j = 0; j < g.size(); ++j) {
        const cplx want = detail::exp_i_real(g.node(j) * std::log(2.0) / kPi);
        CHECK(std::abs(ext.u_on_0.samples[j] - want) <= 1e-8);
    }
}

TEST_CASE("polar decomposition") {
    StripGrid g = make_grid(16.0, 512);

    SymbolSpec outer_only;
    outer_only.outer.c = 2.0;
    PolarDecomposition p1 = polar_decomposition(outer_only, g);
    for (const cplx& z : p1.unitary_symbol.samples) CHECK(std::abs(z - 1.0) <= 1e-12);
    CHECK(p1.positive_part.c == 2.0);

    SymbolSpec inner_only;
    inner_only.singular.a0 = 1.0;
    PolarDecomposition p2 = polar_decomposition(inner_only, g);
    for (std::size_t j = 0; j < g.size(); ++j) {
        CHECK(std::abs(std::abs(p2.unitary_symbol.samples[j]) - 1.0) <= 1e-10);
        const cplx fin = eval_singular(inner_only.singular, cplx(g.node(j), 0.0));
        CHECK(std::abs(p2.unitary_symbol.samples[j] - std::conj(fin)) <= 1e-12);
    }

    SymbolSpec mixed;
    mixed.blaschke.zeros.push_back({cplx(0.0, -kPi / 2.0), 1});
    mixed.singular.a0 = 0.5;
    mixed.outer.c = 3.0;
    PolarDecomposition p3 = polar_decomposition(mixed, g);
    for (const cplx& z : p3.unitary_symbol.samples)
        CHECK(std::abs(std::abs(z) - 1.0) <= 1e-10);

    SymbolSpec undeclared;
    undeclared.outer.admissible = false;
    CHECK_THROWS_AS((void)polar_decomposition(undeclared, g), Error);
}

TEST_CASE("non-square input is rejected by the square-symbol audit") {
    StripGrid g = make_grid(16.0, 512);
    SymbolSpec broken;
    broken.phase = cplx(0.0, 1.0);  // i-phase violates conj f(theta) = f(theta - pi i)
    CHECK_THROWS_AS((void)make_square_symbol(broken, g, 1e-8), Error);
}
