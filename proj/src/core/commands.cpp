#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "deficiency.hpp"
#include "extension.hpp"
#include "specfile.hpp"

namespace striphardy {

namespace {

constexpr double kPi = std::numbers::pi;

std::string header(const std::string& command, const std::string& spec_path,
                   const CommandOptions& opt) {
    std::ostringstream os;
    os << "strip-hardy " << command << " report\n";
    os << "spec: " << spec_path << "\n";
    os << "grid-L: " << fmt17(opt.grid_half_width) << "  grid-N: " << opt.grid_size << "\n";
    os << "tol: " << fmt17(opt.tol) << "  seed: " << opt.seed << "\n";
    os << "----\n";
    return os.str();
}

std::string indices_line(const DeficiencyIndices& idx) {
    if (!idx.determined) return "indices: not determined (outer estimate not declared)";
    if (idx.infinite) return "indices: (inf,inf)";
    std::string line =
        "indices: (" + std::to_string(idx.n_plus) + "," + std::to_string(idx.n_minus) + ")";
    if (idx.n_plus == 0 && idx.n_minus == 0) line += "; essentially self-adjoint";
    return line;
}

std::string eig_str(cplx eigenvalue) { return eigenvalue.imag() > 0.0 ? "+i" : "-i"; }

BoundaryVector read_vector_csv(const std::string& path, const StripGrid& grid) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::io_error, "cannot open input vector: " + path);
    std::vector<cplx> samples;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (first) {
            first = false;
            // header row is mandatory; detect by non-numeric first cell
            char* end = nullptr;
            std::strtod(cells[0].c_str(), &end);
            if (end == cells[0].c_str() || *end != '\0') continue;
        }
        double re = 0.0, im = 0.0;
        if (cells.size() >= 4) {  // theta,re_v,im_v,abs_v layout
            re = std::stod(cells[1]);
            im = std::stod(cells[2]);
        } else if (cells.size() >= 2) {  // bare re,im layout
            re = std::stod(cells[0]);
            im = std::stod(cells[1]);
        } else {
            fail(ErrorCode::parse_error, "input vector row needs at least re,im columns");
        }
        samples.emplace_back(re, im);
    }
    if (samples.size() != grid.size())
        fail(ErrorCode::parse_error,
             "input vector length " + std::to_string(samples.size()) +
                 " does not match grid-N " + std::to_string(grid.size()));
    return BoundaryVector(grid, std::move(samples), 0.0);
}

BoundaryVector unit_gaussian(const StripGrid& grid) {
    std::vector<cplx> v(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j)
        v[j] = std::exp(-0.5 * grid.node(j) * grid.node(j));
    BoundaryVector out(grid, std::move(v), 0.0);
    const double nrm = l2_norm(out);
    for (cplx& z : out.samples) z /= nrm;
    return out;
}

}  // namespace

ReportBundle cmd_analyze(const std::string& spec_path, const CommandOptions& opt) {
    LoadedSpec loaded = load_spec_file(spec_path);
    StripGrid grid = make_grid(opt.grid_half_width, opt.grid_size);

    ReportBundle bundle;
    std::ostringstream os;
    os << header("analyze", spec_path, opt);
    os << "classification: " << spec_summary(loaded.spec) << "\n";

    FactorClass cls = classify(loaded.spec);
    os << indices_line(deficiency_indices(cls)) << "\n";

    BoundaryPair pair = sample_boundary(loaded.spec, grid);
    const double sym_dev = symmetry_deviation(pair.on_0, pair.on_minus_pi);
    const bool sym_pass = sym_dev <= opt.tol;
    os << "symmetry audit: max deviation = " << fmt17(sym_dev) << " -> "
       << (sym_pass ? "pass" : "FAIL") << "\n";

    const double inner_dev = inner_modulus_deviation(loaded.spec, grid);
    const bool inner_pass = inner_dev <= 1e-8;
    os << "inner modulus audit: max deviation = " << fmt17(inner_dev) << " -> "
       << (inner_pass ? "pass" : "FAIL") << "\n";

    PerturbationResult pert = perturbation_criterion_samples(pair.on_0);
    if (pert.passes && pert.has_r)
        os << "perturbation criterion: passes with r* = " << fmt17(pert.r) << "\n";
    else if (pert.passes)
        os << "perturbation criterion: passes (f vanishes on the grid)\n";
    else
        os << "perturbation criterion: fails at theta = " << fmt17(pert.worst_point) << "\n";

    ConjugationReport conj = von_neumann_check(loaded.spec, grid, opt.tol);
    os << "von Neumann conjugation: " << (conj.commutes ? "commutes" : "does not commute")
       << " (max deviation = " << fmt17(conj.max_deviation) << ")\n";
    if (conj.commutes) os << "von Neumann verdict: a self-adjoint extension exists\n";

    os << "outer growth probe: " << fmt17(outer_growth_probe(loaded.spec.outer, grid)) << "\n";

    bundle.tables.push_back(boundary_table("boundary", pair.on_0, pair.on_minus_pi));
    bundle.exit_code = (sym_pass && inner_pass) ? 0 : 2;
    os << "exit: " << bundle.exit_code << "\n";
    bundle.text = os.str();
    return bundle;
}

ReportBundle cmd_deficiency(const std::string& spec_path, const CommandOptions& opt) {
    LoadedSpec loaded = load_spec_file(spec_path);
    StripGrid grid = make_grid(opt.grid_half_width, opt.grid_size);

    ReportBundle bundle;
    std::ostringstream os;
    os << header("deficiency", spec_path, opt);
    os << "classification: " << spec_summary(loaded.spec) << "\n";
    os << indices_line(deficiency_indices(classify(loaded.spec))) << "\n";

    CsvTable basis{"basis", {"k", "eigenvalue", "residual", "trusted"}, {}};
    bool residual_failure = false;

    auto emit = [&](const std::vector<DeficiencyVector>& vectors, const std::string& tag) {
        for (const DeficiencyVector& dv : vectors) {
            basis.add_row({fmt_int(dv.k), eig_str(dv.eigenvalue), fmt17(dv.residual),
                           dv.trusted ? "1" : "0"});
            os << tag << " k=" << dv.k << ": eigenvalue " << eig_str(dv.eigenvalue)
               << ", residual " << fmt17(dv.residual) << (dv.trusted ? " (trusted)" : " (untrusted)")
               << ", direct identity residual " << fmt17(dv.direct_residual)
               << (dv.truncated ? " [truncated symbol]" : "") << "\n";
            if (dv.trusted && dv.residual > opt.tol) residual_failure = true;
            bundle.tables.push_back(
                vector_table("vector_" + tag + "_" + std::to_string(dv.k), dv.samples));
        }
    };

    if (loaded.spec.blaschke.declared_infinite) {
        emit(midline_truncated_basis(loaded.spec.blaschke, grid, opt.k_list), "tr");
        os << "note: residuals measured against the truncated symbol\n";
    } else if (loaded.spec.blaschke.total_count() > 0) {
        emit(blaschke_deficiency_basis(loaded.spec.blaschke, grid), "bl");
    }
    if (loaded.spec.singular.a0 > 0.0 || loaded.spec.singular.a_inf > 0.0)
        emit(atomic_singular_deficiency_vectors(loaded.spec.singular, grid, opt.n_list), "at");

    if (basis.rows.empty()) os << "deficiency basis: empty\n";
    bundle.tables.insert(bundle.tables.begin(), basis);
    bundle.exit_code = residual_failure ? 2 : 0;
    os << "exit: " << bundle.exit_code << "\n";
    bundle.text = os.str();
    return bundle;
}

ReportBundle cmd_split(const std::string& spec_path, const CommandOptions& opt) {
    LoadedSpec loaded = load_spec_file(spec_path);
    StripGrid grid = make_grid(opt.grid_half_width, opt.grid_size);

    ReportBundle bundle;
    std::ostringstream os;
    os << header("split", spec_path, opt);

    OuterSplit split = split_outer(loaded.spec.outer, grid);
    SymbolSpec outer_only;
    outer_only.outer = loaded.spec.outer;
    BoundaryPair fout = sample_boundary(outer_only, grid);

    double a_unimodular = 0.0, a_reconstruct = 0.0, a_cross = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        a_unimodular = std::max(a_unimodular,
                                std::abs(std::abs(split.f_minus_on_0.samples[j]) - 1.0));
        a_reconstruct = std::max(
            a_reconstruct, std::abs(split.f_plus_on_0.samples[j] * split.f_minus_on_0.samples[j] -
                                    fout.on_0.samples[j]));
        a_cross = std::max(a_cross, std::abs(split.f_plus_on_minus_pi.samples[j] -
                                             std::conj(split.f_minus_on_0.samples[j])));
    }
    os << "audit | |f_minus| - 1 | on line 0: " << fmt17(a_unimodular) << "\n";
    os << "audit | f_plus f_minus - f_out | on line 0: " << fmt17(a_reconstruct) << "\n";
    os << "audit | f_plus(theta - pi i) - conj f_minus(theta) |: " << fmt17(a_cross) << "\n";

    bundle.tables.push_back(
        boundary_table("f_minus", split.f_minus_on_0, split.f_minus_on_minus_pi));
    bundle.tables.push_back(boundary_table("f_plus", split.f_plus_on_0, split.f_plus_on_minus_pi));
    bundle.exit_code = 0;
    os << "exit: 0\n";
    bundle.text = os.str();
    return bundle;
}

ReportBundle cmd_extend(const std::string& spec_path, const CommandOptions& opt) {
    LoadedSpec loaded = load_spec_file(spec_path);
    StripGrid grid = make_grid(opt.grid_half_width, opt.grid_size);

    ReportBundle bundle;
    std::ostringstream os;
    os << header("extend", spec_path, opt);

    if (!loaded.square_root) {
        os << "canonical extension requires f = h^2 (set \"square_root\": true)\n";
        os << "exit: 2\n";
        bundle.text = os.str();
        bundle.exit_code = 2;
        return bundle;
    }

    SquareSymbol sq = make_square_symbol(loaded.spec, grid, opt.tol);
    CanonicalExtension ext = build_extension(sq, grid);
    os << "square root: " << spec_summary(loaded.spec) << "\n";
    os << "u unimodularity deviation: " << fmt17(ext.unimodularity_deviation) << "\n";

    BoundaryVector xi = opt.input_path.empty() ? unit_gaussian(grid)
                                               : read_vector_csv(opt.input_path, grid);
    os << "input: " << (opt.input_path.empty() ? "unit gaussian" : opt.input_path) << "\n";

    SpectralFunction g = SpectralFunction::parse(opt.function_spec);
    os << "spectral function: " << g.describe() << "\n";

    ExtensionApplyResult applied = apply_extension(ext, xi);
    os << "in_domain: " << (applied.in_domain ? "true" : "false")
       << " (membership defect " << fmt17(applied.membership_defect) << ")\n";

    BoundaryVector output = (g.kind == SpectralFunction::Kind::identity)
                                ? applied.result
                                : apply_spectral_function(ext, g, xi);

    if (g.kind == SpectralFunction::Kind::square) {
        ExtensionApplyResult twice = apply_extension(ext, applied.result);
        double dev = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j)
            dev = std::max(dev, std::abs(output.samples[j] - twice.result.samples[j]));
        os << "square vs identity-twice max deviation: " << fmt17(dev) << "\n";
    }

    const double audit = symmetry_audit(ext, 50, opt.seed);
    const bool audit_pass = audit <= 1e-6;
    os << "symmetry audit (50 trials): " << fmt17(audit) << " -> "
       << (audit_pass ? "pass" : "FAIL") << "\n";

    bundle.tables.push_back(vector_table("u", ext.u_on_0));
    bundle.tables.push_back(vector_table("output", output));
    bundle.exit_code = audit_pass ? 0 : 2;
    os << "exit: " << bundle.exit_code << "\n";
    bundle.text = os.str();
    return bundle;
}

ReportBundle cmd_profile(const std::string& spec_path, const CommandOptions& opt) {
    LoadedSpec loaded = load_spec_file(spec_path);

    ReportBundle bundle;
    std::ostringstream os;
    os << header("profile", spec_path, opt);
    os << "approach: " << opt.approach << "\n";

    ProfileApproach approach = ProfileApproach::parse(opt.approach);
    std::vector<double> params;
    const int steps = 48;
    for (int i = 1; i <= steps; ++i) {
        if (approach.kind == ProfileApproach::Kind::horizontal)
            params.push_back(static_cast<double>(i) * opt.grid_half_width /
                             static_cast<double>(steps));
        else
            params.push_back(-(kPi / 2.0) * static_cast<double>(i) / static_cast<double>(steps));
    }
    std::vector<double> values = radial_modulus_profile(loaded.spec, approach, params);

    CsvTable t{"profile", {"lambda", "abs_f"}, {}};
    for (std::size_t i = 0; i < params.size(); ++i)
        t.add_row({fmt17(params[i]), fmt17(values[i])});
    bundle.tables.push_back(std::move(t));
    os << "points: " << params.size() << "\n";
    os << "min |f| along the approach: "
       << fmt17(*std::min_element(values.begin(), values.end())) << "\n";
    bundle.exit_code = 0;
    os << "exit: 0\n";
    bundle.text = os.str();
    return bundle;
}

int run_command(const std::string& command, const std::string& spec_path,
                const CommandOptions& opt, std::string* error_message) {
    try {
        ReportBundle bundle;
        if (command == "analyze")
            bundle = cmd_analyze(spec_path, opt);
        else if (command == "deficiency")
            bundle = cmd_deficiency(spec_path, opt);
        else if (command == "split")
            bundle = cmd_split(spec_path, opt);
        else if (command == "extend")
            bundle = cmd_extend(spec_path, opt);
        else if (command == "profile")
            bundle = cmd_profile(spec_path, opt);
        else {
            if (error_message) *error_message = "unknown command: " + command;
            return 3;
        }
        write_bundle(bundle, opt.out_dir);
        return bundle.exit_code;
    } catch (const Error& e) {
        if (error_message) *error_message = e.what();
        switch (e.code()) {
            case ErrorCode::parse_error:
            case ErrorCode::io_error:
                return 3;
            default:
                return 2;
        }
    } catch (const std::exception& e) {
        if (error_message) *error_message = e.what();
        return 3;
    }
}

}  // namespace striphardy
