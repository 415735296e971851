/* striphardy: strip Hardy-space multiplier analysis behind a C interface.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every call returns sh_status; on failure sh_last_error() carries a
 * thread-local message for the calling thread.
 */
#ifndef STRIPHARDY_H
#define STRIPHARDY_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sh_status {
    SH_OK = 0,
    SH_ERR_INVALID_ARGUMENT = 1,
    SH_ERR_GRID_MISMATCH = 2,
    SH_ERR_OUT_OF_RANGE = 3,
    SH_ERR_POLE_PROXIMITY = 4,
    SH_ERR_QUADRATURE = 5,
    SH_ERR_MEMBERSHIP = 6,
    SH_ERR_AUDIT = 7,
    SH_ERR_PARSE = 8,
    SH_ERR_OVERFLOW = 9,
    SH_ERR_IO = 10,
    SH_ERR_INTERNAL = 11
} sh_status;

typedef struct sh_grid sh_grid;
typedef struct sh_symbol sh_symbol;
typedef struct sh_vector sh_vector;
typedef struct sh_basis sh_basis;

const char* sh_last_error(void);

/* ---- grid ---- */
sh_status sh_grid_create(double half_width, uint32_t size, sh_grid** out);
void sh_grid_destroy(sh_grid* grid);
sh_status sh_grid_size(const sh_grid* grid, uint32_t* out);
sh_status sh_grid_spacing(const sh_grid* grid, double* out);
sh_status sh_grid_node(const sh_grid* grid, uint32_t index, double* out);

/* ---- symbol (Beurling factorization data) ---- */
sh_status sh_symbol_load_file(const char* path, sh_symbol** out);
sh_status sh_symbol_load_json(const char* json_text, sh_symbol** out);
void sh_symbol_destroy(sh_symbol* symbol);
sh_status sh_symbol_is_square_root(const sh_symbol* symbol, int* out);
/* f at zeta = re + i im inside the closed strip */
sh_status sh_symbol_eval(const sh_symbol* symbol, double re, double im, double* out_re,
                         double* out_im);

typedef struct sh_indices {
    int determined; /* 0 when the outer estimate is not declared */
    int infinite;
    int n_plus;
    int n_minus;
} sh_indices;

sh_status sh_symbol_indices(const sh_symbol* symbol, sh_indices* out);
/* max_j |conj f(theta_j) - f(theta_j - pi i)| */
sh_status sh_symbol_symmetry_deviation(const sh_symbol* symbol, const sh_grid* grid, double* out);

/* ---- boundary vectors ---- */
sh_status sh_vector_create(const sh_grid* grid, const double* re, const double* im,
                           double line_tag, sh_vector** out);
void sh_vector_destroy(sh_vector* vec);
sh_status sh_vector_copy_out(const sh_vector* vec, double* re, double* im);
sh_status sh_vector_norm(const sh_vector* vec, double* out);

/* ---- multiplier operations ---- */
sh_status sh_continue_to(const sh_vector* vec, double lambda, sh_vector** out,
                         double* aliasing_indicator, int* trusted);
sh_status sh_hardy_membership(const sh_vector* vec, double tol, int* member, double* defect);
/* eigen_sign +1 for +i, -1 for -i */
sh_status sh_eigenvalue_residual(const sh_symbol* symbol, const sh_vector* vec, int eigen_sign,
                                 double* residual, int* trusted);

/* ---- deficiency basis ---- */
sh_status sh_deficiency_basis_create(const sh_symbol* symbol, const sh_grid* grid,
                                     sh_basis** out);
void sh_basis_destroy(sh_basis* basis);
sh_status sh_basis_size(const sh_basis* basis, uint32_t* out);
sh_status sh_basis_info(const sh_basis* basis, uint32_t index, int* k, int* eigen_sign,
                        double* residual, int* trusted);
sh_status sh_basis_vector(const sh_basis* basis, uint32_t index, sh_vector** out);

/* ---- command orchestration (what the CLI runs) ---- */
typedef struct sh_run_options {
    double grid_half_width; /* <= 0: default 16 */
    uint32_t grid_size;     /* 0: default 2048 */
    double tol;             /* <= 0: default 1e-5 */
    uint64_t seed;
    const char* out_dir;       /* NULL: "." */
    const char* input_path;    /* extend: optional vector CSV */
    const char* function_spec; /* extend: NULL = "identity" */
    const char* approach;      /* profile: NULL = "ray:theta=-5" */
    const char* n_list;        /* deficiency: comma list, NULL = "0,1,2" */
    const char* k_list;        /* deficiency: comma list, NULL = "0" */
} sh_run_options;

/* command is one of analyze|deficiency|split|extend|profile; returns the
 * command exit code (0 ok, 2 audit failure, 3 parse error) */
int sh_run_command(const char* command, const char* spec_path, const sh_run_options* options);

#ifdef __cplusplus
}
#endif

#endif /* STRIPHARDY_H */
