#include "deficiency.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace striphardy {

namespace {

constexpr double kPi = std::numbers::pi;

// Grid used internally for eigenvector residuals. The e^{-|theta|/2} decay of
// the slowest basis vectors makes the periodization seam e^{-L/2}; L = 164
// puts it below the quad-precision coefficient floor.
StripGrid residual_grid() { return StripGrid(164.0, 8192); }
// Atomic vectors carry a chirp; resolve it as far as double precision sees it.
StripGrid atomic_residual_grid() { return StripGrid(16.0, 32768); }

struct QC {
    __float128 re, im;
};
QC qmul(QC a, QC b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
QC qdiv(QC a, QC b) {
    const __float128 d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

QC qexp_c(cplx z) {
    const __float128 m = expq(static_cast<__float128>(z.real()));
    return {m * cosq(static_cast<__float128>(z.imag())),
            m * sinq(static_cast<__float128>(z.imag()))};
}

// roots of the denominator as f128 values
std::vector<QC> exp_roots(const std::vector<cplx>& alphas) {
    std::vector<QC> out;
    out.reserve(alphas.size());
    for (const cplx& a : alphas) out.push_back(qexp_c(a));
    return out;
}

double q_residual_pieces(const StripGrid& g, const BoundaryVector& v,
                         const ContinuationResult& cont, cplx eigenvalue) {
    detail::CompensatedSum num;
    for (std::size_t j = 0; j < g.size(); ++j)
        num.add(std::norm(cont.output.samples[j] - eigenvalue * v.samples[j]));
    return std::sqrt(g.spacing() * num.value()) / l2_norm(v);
}

// Direct evaluation of ||f(.-pi i) v(.-pi i) - eigenvalue v|| / ||v|| from
// closed forms; verifies the sign rule independently of the multiplier oracle.
double direct_residual_rational(const StripGrid& g, double half_power,
                                const std::vector<cplx>& v_roots,
                                const std::vector<cplx>& w_roots, cplx prefactor,
                                cplx eigenvalue) {
    detail::CompensatedSum num, den;
    const cplx rot = std::exp(cplx(0.0, -half_power * kPi));  // e^{(k+1/2)(-pi i)}
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double th = g.node(j);
        const cplx e = detail::clamped_exp(cplx(th, 0.0));
        cplx v = prefactor * std::exp(half_power * th);
        cplx lhs = v * rot;
        for (const cplx& r : v_roots) v /= (e - r);
        for (const cplx& r : w_roots) lhs /= (-e - r);
        num.add(std::norm(lhs - eigenvalue * v));
        den.add(std::norm(v));
    }
    return std::sqrt(num.value() / den.value());
}

std::vector<cplx> all_zero_positions(const BlaschkeData& data) {
    std::vector<cplx> out;
    for (const BlaschkeZero& z : data.zeros)
        for (int m = 0; m < z.multiplicity; ++m) out.push_back(z.alpha);
    return out;
}

}  // namespace

KappaTransform::KappaTransform(double atom_weight) : w_(atom_weight / 4.0) {
    if (!(atom_weight > 0.0))
        fail(ErrorCode::invalid_parameter, "mollifier needs a positive atom weight");
    auto bump = [](double u) {
        const double a = std::abs(u);
        return (a < 1.0) ? std::exp(-1.0 / (1.0 - a * a)) : 0.0;
    };
    const std::size_t m_samples = 1 << 14;
    kappa_x_.resize(m_samples + 1);
    kappa_v_.resize(m_samples + 1);
    for (std::size_t m = 0; m <= m_samples; ++m) {
        kappa_x_[m] = w_ * static_cast<double>(m) / static_cast<double>(m_samples);
        kappa_v_[m] = bump(kappa_x_[m] / w_) - 2.0 * bump(2.0 * kappa_x_[m] / w_);
    }

    // hat(p_k) on a uniform p-grid via one padded FFT of the cosine sum
    const std::size_t pad = 1 << 20;
    const double dx = kappa_x_[1] - kappa_x_[0];
    std::vector<cplx> work(pad, cplx(0.0, 0.0));
    for (std::size_t m = 0; m <= m_samples; ++m) work[m] = kappa_v_[m];
    detail::fft_pow2(work, -1);
    dp_ = 2.0 * kPi / (static_cast<double>(pad) * dx);
    const double p_max = 2.5e4;  // far beyond any representable contribution
    const std::size_t keep = std::min(pad / 2, static_cast<std::size_t>(p_max / dp_) + 4);
    table_.resize(keep);
    const double scale = 2.0 * dx / std::sqrt(2.0 * kPi);
    for (std::size_t k = 0; k < keep; ++k)
        table_[k] = scale * (work[k].real() - 0.5 * kappa_v_[0]);
}

double KappaTransform::hat(double p) const {
    p = std::abs(p);
    const double x = p / dp_;
    const std::size_t n = table_.size();
    if (x >= static_cast<double>(n - 2)) return 0.0;
    const std::size_t i = std::max<std::size_t>(1, static_cast<std::size_t>(x));
    if (i + 2 >= n) return 0.0;
    const double t = x - static_cast<double>(i);
    // Catmull-Rom through the four neighbours
    const double y0 = table_[i - 1], y1 = table_[i], y2 = table_[i + 1], y3 = table_[i + 2];
    const double a = -0.5 * y0 + 1.5 * y1 - 1.5 * y2 + 0.5 * y3;
    const double b = y0 - 2.5 * y1 + 2.0 * y2 - 0.5 * y3;
    const double c = -0.5 * y0 + 0.5 * y2;
    return ((a * t + b) * t + c) * t + y1;
}

double KappaTransform::integral() const {
    detail::CompensatedSum s;
    for (std::size_t m = 0; m < kappa_v_.size(); ++m) {
        double v = kappa_v_[m];
        if (m == 0 || m + 1 == kappa_v_.size()) v *= 0.5;
        s.add(v);
    }
    return 2.0 * s.value() * (kappa_x_[1] - kappa_x_[0]);
}

FactorClass classify(const SymbolSpec& spec) {
    FactorClass cls;
    cls.blaschke_count = spec.blaschke.declared_infinite
                             ? std::nullopt
                             : std::optional<int>(spec.blaschke.total_count());
    cls.singular_nontrivial = spec.singular.nontrivial();
    cls.outer_admissible = spec.outer.admissible;
    return cls;
}

DeficiencyIndices deficiency_indices(const FactorClass& cls) {
    DeficiencyIndices idx;
    if (!cls.outer_admissible) {
        idx.determined = false;
        return idx;
    }
    if (cls.singular_nontrivial || !cls.blaschke_count.has_value()) {
        idx.infinite = true;
        return idx;
    }
    const int n = *cls.blaschke_count;
    idx.n_plus = (n + 1) / 2;
    idx.n_minus = n / 2;
    return idx;
}

ResidualResult eigenvalue_residual(const SymbolSpec& spec, const BoundaryVector& v,
                                   cplx eigenvalue, const MultiplierPolicy& policy,
                                   const QuadratureOptions& opt) {
    ResidualResult res;
    const double nv = l2_norm(v);
    if (nv == 0.0) {
        res.degenerate = true;
        res.membership_ok = true;
        res.trusted = true;
        return res;
    }
    BoundaryPair f = sample_boundary(spec, v.grid, opt);
    std::vector<cplx> w(v.grid.size());
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.on_0.samples[j] * v.samples[j];
    BoundaryVector wv(v.grid, std::move(w), 0.0);

    MembershipResult mem = hardy_membership(wv, 1e-6, policy);
    res.membership_ok = mem.member;
    res.membership_defect = mem.defect;

    ContinuationResult cont = continue_to(wv, -kPi, policy);
    res.trusted = cont.trusted;
    detail::CompensatedSum num;
    for (std::size_t j = 0; j < v.grid.size(); ++j)
        num.add(std::norm(cont.output.samples[j] - eigenvalue * v.samples[j]));
    res.residual = std::sqrt(v.grid.spacing() * num.value()) / nv;
    return res;
}

std::vector<DeficiencyVector> blaschke_deficiency_basis(const BlaschkeData& data,
                                                        const StripGrid& grid) {
    validate_blaschke(data);
    if (data.declared_infinite)
        fail(ErrorCode::invalid_parameter,
             "declared-infinite families use the truncated midline construction");
    const std::vector<cplx> alphas = all_zero_positions(data);
    const int n = static_cast<int>(alphas.size());
    std::vector<DeficiencyVector> basis;
    if (n == 0) return basis;

    std::vector<cplx> v_roots, w_roots;
    for (const cplx& a : alphas) {
        v_roots.push_back(std::exp(a));
        w_roots.push_back(std::exp(std::conj(a)));
    }

    const StripGrid rg = residual_grid();
    const std::vector<QC> w_roots_q = exp_roots([&] {
        std::vector<cplx> c;
        for (const cplx& a : alphas) c.push_back(std::conj(a));
        return c;
    }());

    for (int k = 0; k < n; ++k) {
        const double hp = k + 0.5;
        const cplx eigenvalue = ((n + k + 1) % 2 == 0) ? cplx(0.0, 1.0) : cplx(0.0, -1.0);

        std::vector<cplx> samples(grid.size());
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const cplx e = detail::clamped_exp(cplx(grid.node(j), 0.0));
            cplx val = std::exp(hp * grid.node(j));
            for (const cplx& r : v_roots) val /= (e - r);
            samples[j] = val;
        }
        BoundaryVector vec(grid, std::move(samples), 0.0);
        const double nrm = l2_norm(vec);
        for (cplx& z : vec.samples) z /= nrm;

        // residual on the wide grid with the quad oracle
        std::vector<cplx> v_res(rg.size());
        for (std::size_t j = 0; j < rg.size(); ++j) {
            const cplx e = detail::clamped_exp(cplx(rg.node(j), 0.0));
            cplx val = std::exp(hp * rg.node(j));
            for (const cplx& r : v_roots) val /= (e - r);
            v_res[j] = val;
        }
        BoundaryVector vres(rg, std::move(v_res), 0.0);
        auto sampler = [&](double th) -> QuadSample {
            const __float128 e = expq(static_cast<__float128>(th));
            QC w{expq(static_cast<__float128>(hp) * static_cast<__float128>(th)), 0.0};
            for (const QC& r : w_roots_q) w = qdiv(w, QC{e - r.re, -r.im});
            return {w.re, w.im};
        };
        ContinuationResult cont = continue_to_quad(sampler, rg, -kPi);

        DeficiencyVector dv{k, eigenvalue, std::move(vec), q_residual_pieces(rg, vres, cont, eigenvalue),
                            cont.trusted,
                            direct_residual_rational(rg, hp, v_roots, w_roots, cplx(1.0, 0.0),
                                                     eigenvalue),
                            hardy_membership(BoundaryVector(rg, [&] {
                                                 std::vector<cplx> w(rg.size());
                                                 for (std::size_t j = 0; j < rg.size(); ++j) {
                                                     QuadSample q = sampler(rg.node(j));
                                                     w[j] = cplx(static_cast<double>(q.re),
                                                                 static_cast<double>(q.im));
                                                 }
                                                 return w;
                                             }(),
                                             0.0))
                                .defect,
                            false};
        basis.push_back(std::move(dv));
    }
    return basis;
}

std::vector<DeficiencyVector> atomic_singular_deficiency_vectors(const SingularData& data,
                                                                 const StripGrid& grid,
                                                                 const std::vector<int>& n_list) {
    validate_singular(data);
    if (!(data.a0 > 0.0) && !(data.a_inf > 0.0))
        fail(ErrorCode::invalid_parameter,
             "atomic construction needs an atom at 0 or at infinity");
    const bool mirrored = !(data.a0 > 0.0);
    const double a = mirrored ? data.a_inf : data.a0;
    const KappaTransform kappa(a);

    const StripGrid rg = atomic_residual_grid();
    std::vector<DeficiencyVector> out;
    for (int n : n_list) {
        if (n < 0) fail(ErrorCode::invalid_parameter, "mollifier index must be >= 0");
        // xi(zeta) = kappahat(e^{-zeta}) exp(-i a0 e^{-zeta}/2 + i a_inf e^{zeta}/2) e^{-(n+1/2)zeta},
        // with kappahat(e^{+zeta}) and e^{+(n+1/2)zeta} for the mirrored (a_inf) anchor.
        auto sample_at = [&](double th, double line) -> cplx {
            const double s = mirrored ? -1.0 : 1.0;
            const double anchor = std::exp(std::min(700.0, -s * th));
            const double kh = kappa.hat(anchor);
            if (kh == 0.0) return cplx(0.0, 0.0);
            const double sign_line = (line == 0.0) ? 1.0 : -1.0;  // e^{+-zeta} flips on -pi
            const double p0 = std::exp(std::min(700.0, -th));
            const double pinf = std::exp(std::min(700.0, th));
            const cplx phase =
                detail::exp_i_real(sign_line * (-0.5 * data.a0 * p0 + 0.5 * data.a_inf * pinf));
            const cplx growth = std::exp(-s * (n + 0.5) * cplx(th, line == 0.0 ? 0.0 : -kPi));
            return kh * phase * growth;
        };
        const cplx eigenvalue = [&] {
            const int flip = mirrored ? n + 1 : n;
            return (flip % 2 == 0) ? cplx(0.0, 1.0) : cplx(0.0, -1.0);
        }();

        std::vector<cplx> samples(grid.size());
        for (std::size_t j = 0; j < grid.size(); ++j) samples[j] = sample_at(grid.node(j), 0.0);
        BoundaryVector vec(grid, std::move(samples), 0.0);
        const double nrm = l2_norm(vec);
        if (nrm == 0.0) fail(ErrorCode::invalid_parameter, "mollifier vector vanished on the grid");
        for (cplx& z : vec.samples) z /= nrm;

        // residual grid work
        std::vector<cplx> vres(rg.size()), wres(rg.size());
        detail::CompensatedSum direct_num, direct_den;
        for (std::size_t j = 0; j < rg.size(); ++j) {
            const double th = rg.node(j);
            const cplx v = sample_at(th, 0.0);
            vres[j] = v;
            // f(theta) = exp(i a0 e^{-theta} - i a_inf e^{theta})
            const double p0 = std::exp(std::min(700.0, -th));
            const double pinf = std::exp(std::min(700.0, th));
            const cplx f0 = detail::exp_i_real(data.a0 * p0 - data.a_inf * pinf);
            wres[j] = f0 * v;
            const cplx fpi = detail::exp_i_real(-data.a0 * p0 + data.a_inf * pinf);
            const cplx vpi = sample_at(th, -kPi);
            direct_num.add(std::norm(fpi * vpi - eigenvalue * v));
            direct_den.add(std::norm(v));
        }
        BoundaryVector wv(rg, std::move(wres), 0.0);
        BoundaryVector vv(rg, std::move(vres), 0.0);
        MultiplierPolicy pol;
        MembershipResult mem = hardy_membership(wv, 1e-6, pol);
        ContinuationResult cont = continue_to(wv, -kPi, pol);

        DeficiencyVector dv{n,
                            eigenvalue,
                            std::move(vec),
                            q_residual_pieces(rg, vv, cont, eigenvalue),
                            cont.trusted,
                            std::sqrt(direct_num.value() / direct_den.value()),
                            mem.defect,
                            false};
        out.push_back(std::move(dv));
    }
    return out;
}

std::vector<DeficiencyVector> midline_truncated_basis(const BlaschkeData& data,
                                                      const StripGrid& grid,
                                                      const std::vector<int>& k_list) {
    validate_blaschke(data);
    if (!data.declared_infinite)
        fail(ErrorCode::invalid_parameter, "truncated construction expects declared_infinite");
    std::vector<double> gamma_plus, gamma_minus;
    for (const cplx& a : all_zero_positions(data)) {
        if (std::abs(a.imag() + kPi / 2.0) > 1e-9)
            fail(ErrorCode::invalid_parameter, "truncated construction needs midline zeros only");
        const double gamma = -std::exp(a.real());  // e^{alpha} = i gamma, gamma < 0
        (a.real() >= 0.0 ? gamma_plus : gamma_minus).push_back(gamma);
    }
    const int n_plus = static_cast<int>(gamma_plus.size());
    const int n_minus = static_cast<int>(gamma_minus.size());

    const StripGrid rg = residual_grid();
    std::vector<DeficiencyVector> out;
    for (int k : k_list) {
        if (k < -n_minus || k >= n_plus)
            fail(ErrorCode::invalid_parameter,
                 "truncated index k outside the L2 range [-n_minus, n_plus)");
        const cplx eigenvalue =
            ((n_plus + k + 1) % 2 == 0) ? cplx(0.0, 1.0) : cplx(0.0, -1.0);

        auto value_at = [&](double th) -> cplx {
            const cplx e = detail::clamped_exp(cplx(th, 0.0));
            cplx v = std::exp((k + 0.5) * th);
            for (double gp : gamma_plus) v *= cplx(0.0, -gp) / (e - cplx(0.0, gp));
            for (double gm : gamma_minus) v *= e / (e - cplx(0.0, gm));
            return v;
        };
        std::vector<cplx> samples(grid.size());
        for (std::size_t j = 0; j < grid.size(); ++j) samples[j] = value_at(grid.node(j));
        BoundaryVector vec(grid, std::move(samples), 0.0);
        const double nrm = l2_norm(vec);
        for (cplx& z : vec.samples) z /= nrm;

        std::vector<cplx> vres(rg.size());
        for (std::size_t j = 0; j < rg.size(); ++j) vres[j] = value_at(rg.node(j));
        BoundaryVector vv(rg, std::move(vres), 0.0);
        // w = f v in the symmetric convention: poles move to the mirror points
        auto sampler = [&](double th) -> QuadSample {
            const __float128 e = expq(static_cast<__float128>(th));
            QC w{expq((static_cast<__float128>(k) + static_cast<__float128>(0.5)) *
                      static_cast<__float128>(th)),
                 0.0};
            for (double gp : gamma_plus)
                w = qmul(w, qdiv(QC{0.0, static_cast<__float128>(-gp)},
                                 QC{e, static_cast<__float128>(gp)}));
            for (double gm : gamma_minus)
                w = qmul(w, qdiv(QC{e, 0.0}, QC{e, static_cast<__float128>(gm)}));
            return {w.re, w.im};
        };
        ContinuationResult cont = continue_to_quad(sampler, rg, -kPi);

        // direct check: the truncated product maps onto the finite formula with
        // index k + n_minus up to a constant, so reuse the rational evaluator
        std::vector<cplx> v_roots, w_roots;
        for (double gp : gamma_plus) {
            v_roots.push_back(cplx(0.0, gp));
            w_roots.push_back(cplx(0.0, -gp));
        }
        for (double gm : gamma_minus) {
            v_roots.push_back(cplx(0.0, gm));
            w_roots.push_back(cplx(0.0, -gm));
        }
        const double hp = k + n_minus + 0.5;

        DeficiencyVector dv{k,
                            eigenvalue,
                            std::move(vec),
                            q_residual_pieces(rg, vv, cont, eigenvalue),
                            cont.trusted,
                            direct_residual_rational(rg, hp, v_roots, w_roots, cplx(1.0, 0.0),
                                                     eigenvalue),
                            0.0,
                            true};
        out.push_back(std::move(dv));
    }
    return out;
}

PerturbationResult perturbation_criterion_samples(const BoundaryVector& f_on_0) {
    PerturbationResult res;
    double scale = 0.0;
    for (const cplx& z : f_on_0.samples) scale = std::max(scale, std::abs(z));
    if (scale == 0.0) {  // f = 0: |0 - r| <= r for every r
        res.passes = true;
        res.has_r = false;
        return res;
    }
    const double zero_tol = 1e-12 * scale;
    double worst_ratio = 0.0;
    for (std::size_t j = 0; j < f_on_0.samples.size(); ++j) {
        const cplx z = f_on_0.samples[j];
        if (std::abs(z) <= zero_tol) continue;
        if (z.real() <= zero_tol) {
            res.passes = false;
            res.worst_point = f_on_0.grid.node(j);
            return res;
        }
        const double ratio = std::norm(z) / (2.0 * z.real());
        if (ratio > worst_ratio) {
            worst_ratio = ratio;
            res.worst_point = f_on_0.grid.node(j);
        }
    }
    res.passes = true;
    res.has_r = true;
    res.r = worst_ratio;
    return res;
}

PerturbationResult perturbation_criterion(const SymbolSpec& spec, const StripGrid& grid,
                                          const QuadratureOptions& opt) {
    return perturbation_criterion_samples(sample_boundary(spec, grid, opt).on_0);
}

ConjugationReport von_neumann_check(const SymbolSpec& spec, const StripGrid& grid, double tol,
                                    const QuadratureOptions& opt) {
    BoundaryPair pair = sample_boundary(spec, grid, opt);
    const std::size_t n = grid.size();
    ConjugationReport rep;
    for (std::size_t j = 0; j < n; ++j) {
        const cplx mirrored = pair.on_0.samples[(n - j) % n];
        rep.max_deviation =
            std::max(rep.max_deviation, std::abs(std::conj(pair.on_0.samples[j]) - mirrored));
    }
    rep.commutes = rep.max_deviation <= tol;
    return rep;
}

ContinuationResult apply_symbol_operator(const SymbolSpec& spec, const BoundaryVector& xi,
                                         const MultiplierPolicy& policy,
                                         const QuadratureOptions& opt) {
    BoundaryPair f = sample_boundary(spec, xi.grid, opt);
    ContinuationResult cont = continue_to(xi, -kPi, policy);
    for (std::size_t j = 0; j < xi.grid.size(); ++j)
        cont.output.samples[j] *= std::conj(f.on_0.samples[j]);
    cont.output.line = 0.0;
    return cont;
}

double gram_min_eigenvalue(const std::vector<DeficiencyVector>& basis) {
    const std::size_t n = basis.size();
    if (n == 0) return 1.0;
    std::vector<std::vector<cplx>> gram(n, std::vector<cplx>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            gram[a][b] = inner_product(basis[a].samples, basis[b].samples);

    // Jacobi sweeps for a tiny hermitian matrix
    std::vector<std::vector<cplx>> m = gram;
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(m[p][q]));
        if (off < 1e-14) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = m[p][q];
                if (std::abs(apq) < 1e-18) continue;
                const double app = m[p][p].real(), aqq = m[q][q].real();
                const cplx phase = apq / std::abs(apq);
                const double tau = (aqq - app) / (2.0 * std::abs(apq));
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx s = t * c * phase;
                for (std::size_t r = 0; r < n; ++r) {
                    const cplx mrp = m[r][p], mrq = m[r][q];
                    m[r][p] = c * mrp - std::conj(s) * mrq;
                    m[r][q] = s * mrp + c * mrq;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const cplx mpr = m[p][r], mqr = m[q][r];
                    m[p][r] = c * mpr - s * mqr;
                    m[q][r] = std::conj(s) * mpr + c * mqr;
                }
            }
        }
    }
    double mn = m[0][0].real();
    for (std::size_t p = 1; p < n; ++p) mn = std::min(mn, m[p][p].real());
    return mn;
}

}  // namespace striphardy
