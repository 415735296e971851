#include "striphardy/striphardy.h"

#include <cstring>
#include <numbers>
#include <sstream>
#include <string>

#include "core/commands.hpp"
#include "core/deficiency.hpp"
#include "core/extension.hpp"
#include "core/specfile.hpp"

namespace sh = striphardy;

namespace {

thread_local std::string g_last_error;

sh_status map_code(sh::ErrorCode code) {
    switch (code) {
        case sh::ErrorCode::ok: return SH_OK;
        case sh::ErrorCode::invalid_parameter: return SH_ERR_INVALID_ARGUMENT;
        case sh::ErrorCode::grid_mismatch: return SH_ERR_GRID_MISMATCH;
        case sh::ErrorCode::out_of_range: return SH_ERR_OUT_OF_RANGE;
        case sh::ErrorCode::pole_proximity: return SH_ERR_POLE_PROXIMITY;
        case sh::ErrorCode::quadrature_nonconvergence: return SH_ERR_QUADRATURE;
        case sh::ErrorCode::membership_failure: return SH_ERR_MEMBERSHIP;
        case sh::ErrorCode::audit_failure: return SH_ERR_AUDIT;
        case sh::ErrorCode::parse_error: return SH_ERR_PARSE;
        case sh::ErrorCode::overflow: return SH_ERR_OVERFLOW;
        case sh::ErrorCode::io_error: return SH_ERR_IO;
    }
    return SH_ERR_INTERNAL;
}

template <typename Fn>
sh_status guarded(Fn&& fn) {
    try {
        fn();
        return SH_OK;
    } catch (const sh::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SH_ERR_INTERNAL;
    }
}

std::vector<int> parse_int_list(const char* text, std::vector<int> fallback) {
    if (!text || !*text) return fallback;
    std::vector<int> out;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(std::stoi(cell));
    return out;
}

}  // namespace

struct sh_grid {
    sh::StripGrid grid;
};
struct sh_symbol {
    sh::LoadedSpec loaded;
};
struct sh_vector {
    sh::BoundaryVector vec;
};
struct sh_basis {
    std::vector<sh::DeficiencyVector> vectors;
};

extern "C" {

const char* sh_last_error(void) { return g_last_error.c_str(); }

sh_status sh_grid_create(double half_width, uint32_t size, sh_grid** out) {
    if (!out) return SH_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new sh_grid{sh::make_grid(half_width, size)}; });
}

void sh_grid_destroy(sh_grid* grid) { delete grid; }

sh_status sh_grid_size(const sh_grid* grid, uint32_t* out) {
    if (!grid || !out) return SH_ERR_INVALID_ARGUMENT;
    *out = static_cast<uint32_t>(grid->grid.size());
    return SH_OK;
}

sh_status sh_grid_spacing(const sh_grid* grid, double* out) {
    if (!grid || !out) return SH_ERR_INVALID_ARGUMENT;
    *out = grid->grid.spacing();
    return SH_OK;
}

sh_status sh_grid_node(const sh_grid* grid, uint32_t index, double* out) {
    if (!grid || !out || index >= grid->grid.size()) return SH_ERR_INVALID_ARGUMENT;
    *out = grid->grid.node(index);
    return SH_OK;
}

sh_status sh_symbol_load_file(const char* path, sh_symbol** out) {
    if (!path || !out) return SH_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new sh_symbol{sh::load_spec_file(path)}; });
}

sh_status sh_symbol_load_json(const char* json_text, sh_symbol** out) {
    if (!json_text || !out) return SH_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new sh_symbol{sh::load_spec_json(json_text)}; });
}

void sh_symbol_destroy(sh_symbol* symbol) { delete symbol; }

sh_status sh_symbol_is_square_root(const sh_symbol* symbol, int* out) {
    if (!symbol || !out) return SH_ERR_INVALID_ARGUMENT;
    *out = symbol->loaded.square_root ? 1 : 0;
    return SH_OK;
}

sh_status sh_symbol_eval(const sh_symbol* symbol, double re, double im, double* out_re,
                         double* out_im) {
    if (!symbol || !out_re || !out_im) return SH_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const sh::cplx v = sh::eval_symbol(symbol->loaded.spec, sh::cplx(re, im));
        *out_re = v.real();
        *out_im = v.imag();
    });
}

sh_status sh_symbol_indices(const sh_symbol* symbol, sh_indices* out) {
    if (!symbol || !out) return SH_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const sh::DeficiencyIndices idx = sh::deficiency_indices(sh::classify(symbol->loaded.spec));
        out->determined = idx.determined ? 1 : 0;
        out->infinite = idx.infinite ? 1 : 0;
        out->n_plus = idx.n_plus;
        out->n_minus = idx.n_minus;
    });
}

sh_status sh_symbol_symmetry_deviation(const sh_symbol* symbol, const sh_grid* grid, double* out) {
    if (!symbol || !grid || !out) return SH_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const sh::BoundaryPair pair = sh::sample_boundary(symbol->loaded.spec, grid->grid);
        *out = sh::symmetry_deviation(pair.on_0, pair.on_minus_pi);
    });
}

sh_status sh_vector_create(const sh_grid* grid, const double* re, const double* im,
                           double line_tag, sh_vector** out) {
    if (!grid || !re || !im || !out) return SH_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        std::vector<sh::cplx> samples(grid->grid.size());
        for (std::size_t j = 0; j < samples.size(); ++j) samples[j] = sh::cplx(re[j], im[j]);
        *out = new sh_vector{sh::BoundaryVector(grid->grid, std::move(samples), line_tag)};
    });
}

void sh_vector_destroy(sh_vector* vec) { delete vec; }

sh_status sh_vector_copy_out(const sh_vector* vec, double* re, double* im) {
    if (!vec || !re || !im) return SH_ERR_INVALID_ARGUMENT;
    for (std::size_t j = 0; j < vec->vec.samples.size(); ++j) {
        re[j] = vec->vec.samples[j].real();
        im[j] = vec->vec.samples[j].imag();
    }
    return SH_OK;
}

sh_status sh_vector_norm(const sh_vector* vec, double* out) {
    if (!vec || !out) return SH_ERR_INVALID_ARGUMENT;
    *out = sh::l2_norm(vec->vec);
    return SH_OK;
}

sh_status sh_continue_to(const sh_vector* vec, double lambda, sh_vector** out,
                         double* aliasing_indicator, int* trusted) {
    if (!vec || !out) return SH_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        sh::ContinuationResult res = sh::continue_to(vec->vec, lambda);
        if (aliasing_indicator) *aliasing_indicator = res.aliasing_indicator;
        if (trusted) *trusted = res.trusted ? 1 : 0;
        *out = new sh_vector{std::move(res.output)};
    });
}

sh_status sh_hardy_membership(const sh_vector* vec, double tol, int* member, double* defect) {
    if (!vec || !member) return SH_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const sh::MembershipResult res = sh::hardy_membership(vec->vec, tol);
        *member = res.member ? 1 : 0;
        if (defect) *defect = res.defect;
    });
}

sh_status sh_eigenvalue_residual(const sh_symbol* symbol, const sh_vector* vec, int eigen_sign,
                                 double* residual, int* trusted) {
    if (!symbol || !vec || !residual) return SH_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const sh::ResidualResult res = sh::eigenvalue_residual(
            symbol->loaded.spec, vec->vec, sh::cplx(0.0, eigen_sign >= 0 ? 1.0 : -1.0));
        *residual = res.residual;
        if (trusted) *trusted = res.trusted ? 1 : 0;
    });
}

sh_status sh_deficiency_basis_create(const sh_symbol* symbol, const sh_grid* grid,
                                     sh_basis** out) {
    if (!symbol || !grid || !out) return SH_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const sh::SymbolSpec& spec = symbol->loaded.spec;
        std::vector<sh::DeficiencyVector> vecs;
        if (spec.blaschke.declared_infinite)
            vecs = sh::midline_truncated_basis(spec.blaschke, grid->grid, {0});
        else if (spec.blaschke.total_count() > 0)
            vecs = sh::blaschke_deficiency_basis(spec.blaschke, grid->grid);
        else if (spec.singular.a0 > 0.0 || spec.singular.a_inf > 0.0)
            vecs = sh::atomic_singular_deficiency_vectors(spec.singular, grid->grid, {0, 1, 2});
        *out = new sh_basis{std::move(vecs)};
    });
}

void sh_basis_destroy(sh_basis* basis) { delete basis; }

sh_status sh_basis_size(const sh_basis* basis, uint32_t* out) {
    if (!basis || !out) return SH_ERR_INVALID_ARGUMENT;
    *out = static_cast<uint32_t>(basis->vectors.size());
    return SH_OK;
}

sh_status sh_basis_info(const sh_basis* basis, uint32_t index, int* k, int* eigen_sign,
                        double* residual, int* trusted) {
    if (!basis || index >= basis->vectors.size()) return SH_ERR_INVALID_ARGUMENT;
    const sh::DeficiencyVector& dv = basis->vectors[index];
    if (k) *k = dv.k;
    if (eigen_sign) *eigen_sign = dv.eigenvalue.imag() > 0.0 ? 1 : -1;
    if (residual) *residual = dv.residual;
    if (trusted) *trusted = dv.trusted ? 1 : 0;
    return SH_OK;
}

sh_status sh_basis_vector(const sh_basis* basis, uint32_t index, sh_vector** out) {
    if (!basis || !out || index >= basis->vectors.size()) return SH_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new sh_vector{basis->vectors[index].samples}; });
}

int sh_run_command(const char* command, const char* spec_path, const sh_run_options* options) {
    if (!command || !spec_path) {
        g_last_error = "command and spec path are required";
        return 3;
    }
    sh::CommandOptions opt;
    if (options) {
        if (options->grid_half_width > 0.0) opt.grid_half_width = options->grid_half_width;
        if (options->grid_size > 0) opt.grid_size = options->grid_size;
        if (options->tol > 0.0) opt.tol = options->tol;
        opt.seed = options->seed;
        if (options->out_dir) opt.out_dir = options->out_dir;
        if (options->input_path) opt.input_path = options->input_path;
        if (options->function_spec) opt.function_spec = options->function_spec;
        if (options->approach) opt.approach = options->approach;
        try {
            opt.n_list = parse_int_list(options->n_list, opt.n_list);
            opt.k_list = parse_int_list(options->k_list, opt.k_list);
        } catch (const std::exception& e) {
            g_last_error = std::string("bad index list: ") + e.what();
            return 3;
        }
    }
    std::string message;
    const int code = sh::run_command(command, spec_path, opt, &message);
    if (!message.empty()) g_last_error = message;
    return code;
}

}  // extern "C"
