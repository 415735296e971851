#include <numbers>
#include <random>

#include "core/symbol.hpp"
#include "doctest.h"

using namespace striphardy;
namespace {
constexpr double kPi = std::numbers::pi;

BlaschkeData single_midline() {
    BlaschkeData data;
    data.zeros.push_back({cplx(0.0, -kPi / 2.0), 1});
    return data;
}

cplx random_interior(std::mt19937_64& rng) {
    auto uni = [&rng]() { return static_cast<double>(rng() >> 11) / 9007199254740992.0; };
    return cplx(8.0 * (uni() - 0.5), -kPi * (0.02 + 0.96 * uni()));
}
}  // namespace

TEST_CASE("blaschke factor values") {
    BlaschkeData data = single_midline();
    // (1 + i)/(1 - i) = i at zeta = 0
    CHECK(std::abs(eval_blaschke(data, cplx(0.0, 0.0)) - cplx(0.0, 1.0)) <= 1e-14);
    // vanishes at its zero
    CHECK(std::abs(eval_blaschke(data, cplx(0.0, -kPi / 2.0))) <= 1e-14);
    // unimodular on both boundary lines
    for (double th = -20.0; th <= 20.0; th += 0.7) {
        CHECK(std::abs(std::abs(eval_blaschke(data, cplx(th, 0.0))) - 1.0) <= 1e-12);
        CHECK(std::abs(std::abs(eval_blaschke(data, cplx(th, -kPi))) - 1.0) <= 1e-12);
    }
    // overflow guard: huge real parts stay finite and unimodular
    for (double th : {800.0, -800.0}) {
        const cplx v = eval_blaschke(data, cplx(th, 0.0));
        CHECK(std::isfinite(v.real()));
        CHECK(std::abs(std::abs(v) - 1.0) <= 1e-12);
    }
}

TEST_CASE("blaschke interior contraction") {
    BlaschkeData pair;
    pair.zeros.push_back({cplx(-1.0, -kPi / 4.0), 1});
    pair.zeros.push_back({cplx(-1.0, -3.0 * kPi / 4.0), 1});
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const cplx z = random_interior(rng);
        CHECK(std::abs(eval_blaschke(pair, z)) <= 1.0 + 1e-12);
    }
}

TEST_CASE("blaschke validation") {
    BlaschkeData unpaired;
    unpaired.zeros.push_back({cplx(-1.0, -kPi / 4.0), 1});
    CHECK_THROWS_AS(validate_blaschke(unpaired), Error);

    BlaschkeData too_close;
    too_close.zeros.push_back({cplx(0.0, -1e-8), 1});
    CHECK_THROWS_AS(validate_blaschke(too_close), Error);

    BlaschkeData ok;
    ok.zeros.push_back({cplx(-1.0, -kPi / 4.0), 2});
    ok.zeros.push_back({cplx(-1.0, -3.0 * kPi / 4.0), 2});
    ok.zeros.push_back({cplx(0.3, -kPi / 2.0), 1});
    CHECK_NOTHROW(validate_blaschke(ok));
    CHECK(ok.total_count() == 5);
}

TEST_CASE("singular inner factor") {
    SingularData a0_one;
    a0_one.a0 = 1.0;
    // exp(i e^{-zeta}) at zeta = -pi i/2: e^{-zeta} = i, value e^{-1}
    CHECK(std::abs(eval_singular(a0_one, cplx(0.0, -kPi / 2.0)) - std::exp(-1.0)) <= 1e-14);
    // trivial data evaluates to 1
    CHECK(eval_singular(SingularData{}, cplx(0.3, -1.0)) == cplx(1.0, 0.0));
    // unimodular on the line 0
    for (double th = -10.0; th <= 10.0; th += 0.9)
        CHECK(std::abs(std::abs(eval_singular(a0_one, cplx(th, 0.0))) - 1.0) <= 1e-12);

    SingularData atoms;
    atoms.finite_atoms = {{1.3, 1.0}, {-1.3, 1.0}};
    CHECK_NOTHROW(validate_singular(atoms));
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i)
        CHECK(std::abs(eval_singular(atoms, random_interior(rng))) <= 1.0 + 1e-12);
    // pole guard on the boundary
    CHECK_THROWS_AS((void)eval_singular(atoms, cplx(std::log(1.3), 0.0)), Error);

    SingularData uneven;
    uneven.finite_atoms = {{1.3, 1.0}};
    CHECK_THROWS_AS(validate_singular(uneven), Error);
}

TEST_CASE("outer evaluators: closed forms") {
    OuterData c;
    c.kind = OuterData::Kind::constant;
    c.c = 2.0;
    CHECK(std::abs(eval_outer(c, cplx(1.0, -1.0)) - 2.0) <= 1e-15);

    OuterData sech;
    sech.kind = OuterData::Kind::sech_alpha;
    sech.alpha = 0.5;
    // f(0) = 1/cos(pi/4) = sqrt(2)
    CHECK(std::abs(eval_outer(sech, cplx(0.0, 0.0)) - std::sqrt(2.0)) <= 1e-14);

    OuterData gauss;
    gauss.kind = OuterData::Kind::gauss_strip;
    CHECK(std::abs(eval_outer(gauss, cplx(0.0, -kPi / 2.0)) - 1.0) <= 1e-15);
}

TEST_CASE("outer quadrature against closed forms") {
    // constant kernel through the table path integrates back to c
    OuterData tab;
    tab.kind = OuterData::Kind::table;
    tab.table_u = {-60.0, 0.0, 60.0};
    tab.table_logphi = {std::log(2.0), std::log(2.0), std::log(2.0)};
    CHECK_NOTHROW(validate_outer(tab));
    std::mt19937_64 rng(13);
    for (int i = 0; i < 6; ++i) {
        const cplx z = random_interior(rng);
        CHECK(std::abs(eval_outer(tab, z) - 2.0) <= 1e-8);
    }

    // phi == 1 gives the constant function 1
    OuterData one;
    one.kind = OuterData::Kind::table;
    one.table_u = {-50.0, 50.0};
    one.table_logphi = {0.0, 0.0};
    CHECK(std::abs(eval_outer(one, cplx(0.4, -1.3)) - 1.0) <= 1e-10);

    // sech_alpha kernel tabulated finely reproduces the closed form
    OuterData ts;
    ts.kind = OuterData::Kind::table;
    for (int i = 0; i <= 1600; ++i) {
        const double u = -40.0 + 0.05 * i;
        const double sh = std::sinh(0.5 * u), cs = std::cos(0.25 * kPi);
        ts.table_u.push_back(u);
        ts.table_logphi.push_back(-0.5 * std::log(sh * sh + cs * cs));
    }
    OuterData sech;
    sech.kind = OuterData::Kind::sech_alpha;
    sech.alpha = 0.5;
    const cplx z(0.7, -1.1);
    CHECK(std::abs(eval_outer(ts, z) - eval_outer(sech, z)) <= 1e-6);
}

TEST_CASE("symbol assembly and symmetry audit") {
    SymbolSpec trivial;
    CHECK(std::abs(eval_symbol(trivial, cplx(0.3, -0.8)) - 1.0) <= 1e-15);

    SymbolSpec bl;
    bl.blaschke = single_midline();
    // f(theta) = (e^theta + i)/(e^theta - i), modulus 1
    for (double th : {-2.0, 0.0, 1.5}) {
        const cplx e = std::exp(th);
        CHECK(std::abs(eval_symbol(bl, cplx(th, 0.0)) - (e + cplx(0, 1)) / (e - cplx(0, 1))) <=
              1e-13);
    }

    StripGrid g = make_grid(16.0, 512);
    CHECK(check_symmetry(bl, g, 1e-8).pass);

    SymbolSpec pair;
    pair.blaschke.zeros.push_back({cplx(-1.0, -kPi / 4.0), 1});
    pair.blaschke.zeros.push_back({cplx(-1.0, -3.0 * kPi / 4.0), 1});
    CHECK(check_symmetry(pair, g, 1e-8).pass);

    // phase-only override f = e^{i zeta} violates the symmetry
    std::vector<cplx> f0(g.size()), fpi(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        f0[j] = std::exp(cplx(0.0, 1.0) * cplx(g.node(j), 0.0));
        fpi[j] = std::exp(cplx(0.0, 1.0) * cplx(g.node(j), -kPi));
    }
    CHECK(symmetry_deviation(BoundaryVector(g, f0, 0.0), BoundaryVector(g, fpi, -kPi)) > 1.0);
}

TEST_CASE("inner-modulus audit on inner-only specs") {
    StripGrid g = make_grid(16.0, 512);
    SymbolSpec spec;
    spec.blaschke = single_midline();
    spec.singular.a0 = 1.0;
    CHECK(inner_modulus_deviation(spec, g) <= 1e-10);
}

TEST_CASE("outer split identities") {
    StripGrid g = make_grid(16.0, 256);

    SUBCASE("constant c = 2") {
        OuterData c;
        c.kind = OuterData::Kind::constant;
        c.c = 2.0;
        OuterSplit sp = split_outer(c, g);
        for (std::size_t j = 0; j < g.size(); ++j) {
            const double th = g.node(j);
            const cplx want = detail::exp_i_real(th * std::log(2.0) / kPi);
            CHECK(std::abs(sp.f_minus_on_0.samples[j] - want) <= 1e-8);
            CHECK(std::abs(std::abs(sp.f_minus_on_0.samples[j]) - 1.0) <= 1e-8);
            CHECK(std::abs(sp.f_plus_on_minus_pi.samples[j] -
                           std::conj(sp.f_minus_on_0.samples[j])) <= 1e-6);
            CHECK(std::abs(sp.f_plus_on_0.samples[j] * sp.f_minus_on_0.samples[j] - 2.0) <= 1e-6);
        }
    }

    SUBCASE("gauss strip closed form") {
        OuterData gs;
        gs.kind = OuterData::Kind::gauss_strip;
        OuterSplit sp = split_outer(gs, g);
        for (std::size_t j = 0; j < g.size(); ++j) {
            const double th = g.node(j);
            const cplx want =
                std::exp(cplx(0.0, -th * th * th / (3.0 * kPi) - kPi * th / 12.0));
            CHECK(std::abs(sp.f_minus_on_0.samples[j] - want) <= 1e-6);
        }
    }

    SUBCASE("phi == 1 splits into ones") {
        OuterData one;
        one.kind = OuterData::Kind::constant;
        one.c = 1.0;
        OuterSplit sp = split_outer(one, g);
        for (std::size_t j = 0; j < g.size(); ++j) {
            CHECK(std::abs(sp.f_minus_on_0.samples[j] - 1.0) <= 1e-12);
            CHECK(std::abs(sp.f_plus_on_0.samples[j] - 1.0) <= 1e-12);
        }
    }

    SUBCASE("quadrature split reconstructs the outer function at interior points") {
        OuterData sech;
        sech.kind = OuterData::Kind::sech_alpha;
        sech.alpha = 0.5;
        std::mt19937_64 rng(14);
        for (int i = 0; i < 20; ++i) {
            const cplx z = random_interior(rng);
            const cplx prod = eval_outer_minus(sech, z) * eval_outer_plus(sech, z);
            CHECK(std::abs(prod - eval_outer(sech, z)) <= 1e-6);
        }
    }
}

TEST_CASE("outer admissibility growth probe stays bounded for builtins") {
    StripGrid g = make_grid(16.0, 256);
    for (OuterData::Kind kind : {OuterData::Kind::constant, OuterData::Kind::sech_alpha,
                                 OuterData::Kind::gauss_strip}) {
        OuterData d;
        d.kind = kind;
        d.c = 2.0;
        d.alpha = 0.5;
        CHECK(outer_growth_probe(d, g) <= 1.0);
    }
}

TEST_CASE("radial modulus profiles") {
    SymbolSpec a0;
    a0.singular.a0 = 1.0;

    SUBCASE("atom at zero: closed-form modulus along theta = -5") {
        ProfileApproach ap = ProfileApproach::parse("ray:theta=-5");
        std::vector<double> lams;
        for (int i = 1; i <= 16; ++i) lams.push_back(-kPi / 2.0 * i / 16.0);
        std::vector<double> vals = radial_modulus_profile(a0, ap, lams);
        for (std::size_t i = 0; i < lams.size(); ++i) {
            const double want = std::exp(-std::exp(5.0) * std::abs(std::sin(lams[i])));
            if (want > 1e-280)
                CHECK(vals[i] == doctest::Approx(want).epsilon(1e-10));
            if (i > 0) CHECK(vals[i] <= vals[i - 1]);
        }
        CHECK(vals.back() <= 1e-30);
    }

    SUBCASE("trivial symbol profiles to 1") {
        SymbolSpec one;
        std::vector<double> vals =
            radial_modulus_profile(one, ProfileApproach::parse("ray:theta=0"), {-0.5, -1.0});
        for (double v : vals) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("finite atom pair: modulus decays toward the atom") {
        SymbolSpec atoms;
        atoms.singular.finite_atoms = {{1.0, 1.0}, {-1.0, 1.0}};
        ProfileApproach ap = ProfileApproach::parse("atom:1.0");
        std::vector<double> lams;
        for (int i = 1; i <= 24; ++i) lams.push_back(-0.6 / std::pow(1.6, i));
        std::vector<double> vals = radial_modulus_profile(atoms, ap, lams);
        CHECK(vals.back() < 1e-6);
        for (std::size_t i = 1; i < vals.size(); ++i) CHECK(vals[i] <= vals[i - 1] * 1.0001);
    }
}
