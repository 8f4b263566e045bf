#pragma once

#include <vector>

#include <json.hpp>

#include "pfq/kernels.hpp"

namespace pfq {

struct CorrelationResult {
    double value;          // Re of the Moore-Dyson determinant of the Gram
    double imag_residual;  // |Im| of the same (non-scalar part is invisible to

                           // the Pfaffian route; self-duality defect covers it)
    double gram_defect;    // self-duality defect of the Gram matrix
};

/// R_m(x_1..x_m) = Det_M(K(x_i,x_j)) through the Pfaffian route.
CorrelationResult correlation(const Kernel& k, const std::vector<Point>& pts);

/// Convenience wrapper; throws when the residuals exceed tol.
double correlation_value(const Kernel& k, const std::vector<Point>& pts, double tol = 1e-9);

struct FredholmResult {
    cplx value;
    double tail_abs;  // magnitude of the first truncated term (n = rank + 1);
                      // must be ~0 for a resolved quadrature
};

/// Det_M(I + scale K) = 1 + sum_n (scale^n / n!) int Det_M(K(x_i,x_j)) dmu^n,
/// truncated at n = rank, each n-fold integral by tensorized quadrature
/// (tuples with repeated nodes drop out -- the integrand vanishes there).
/// rank_override substitutes for a missing diagonal form.
FredholmResult fredholm_det(const Kernel& k, cplx scale, const QuadratureRule& quad, int rank_override = -1);

struct CharFnResult {
    cplx product_route;   // prod (1 + (e^it - 1) lambda_k)
    cplx fredholm_route;  // Det_M(I + (e^it - 1) K)
    double discrepancy;
};

CharFnResult char_function_count(const Kernel& k, double t, const QuadratureRule& quad);

/// E prod(1 + f(x_k)) = Det_M(I + sqrt(f(x)) K sqrt(f(y))), principal branch.
FredholmResult expected_product(const Kernel& k, const std::function<cplx(const Point&)>& f,
                                const QuadratureRule& quad);

struct DysonReport {
    double kernel_trace;  // N = int K(x,x) dmu
    double max_rel_deviation;
    std::vector<double> per_probe;
};

/// int R_m dx_m vs (N - m + 1) R_{m-1} at each probe configuration of size
/// m - 1 (m = 1 takes a single empty probe).
DysonReport dyson_integration_check(const Kernel& k, int m, const QuadratureRule& quad,
                                    const std::vector<std::vector<Point>>& probes);

enum class ReproducingForm { Projection, Commutator, Neither };

struct ReproducingReport {
    ReproducingForm form;
    double dev_projection;  // max over pairs of |int K K - K|
    double dev_commutator;  // same for the E-commutator variant
};

/// Tests int K(x,y)K(y,z) dy = K(x,z) and the modified identity
/// phi(int KK) = phi(K) + E phi(K) - phi(K) E, E = ((1,0),(0,0)).
ReproducingReport reproducing_check(const Kernel& k, const QuadratureRule& quad,
                                    const std::vector<std::pair<Point, Point>>& pairs, double tol = 1e-8);

/// Spectrum of the restricted operator 1_D K 1_D, computed as the self-dual
/// eigenvalues of M_kl = sqrt(lambda_k lambda_l) int_D u_k*(x) u_l(x) dmu
/// over the kernel's diagonal form. Nodes are the kernel's native rule
/// clipped to [lo, hi).
std::vector<cplx> restricted_spectrum(const Kernel& k, double lo, double hi);
std::vector<cplx> restricted_spectrum(const Kernel& k, double lo, double hi, const QuadratureRule& quad);

struct DiagonalFormReport {
    bool has_form = false;
    bool is_quasi_real = false;  // real eigenvalues
    bool is_real_form = false;   // real eigenvalues and real-quaternion eigenfunctions
    bool lambdas_in_unit_interval = false;
    double max_imag_lambda = 0.0;
    double min_re_lambda = 0.0, max_re_lambda = 0.0;
    double max_func_imag = 0.0;  // worst imaginary part over probe evaluations
};

DiagonalFormReport diagonal_form_check(const Kernel& k, double tol = 1e-8);

struct PositivityReport {
    double min_value = 0.0;  // most negative Det_M(K_I Gram) found
    double max_imag = 0.0;
    std::vector<int> worst_subset;
    std::vector<Point> worst_config;
};

/// Evaluates Det_M of the K_I = sum_{i in I} u_i u_i* Grams for every
/// nonempty subset I of eigenfunctions and every trial configuration.
/// Rank must be <= 12 (subset enumeration).
PositivityReport complete_positivity_check(const Kernel& k, const std::vector<std::vector<Point>>& trials);

struct CountDistribution {
    std::vector<double> pmf;  // P(N = 0..r)
    double mean = 0.0;
    double variance = 0.0;

    cplx char_function(double t) const;
};

/// Exact law of the point count as a sum of independent Bernoulli(lambda_k).
/// Eigenvalues must be real in [0,1] within tol.
CountDistribution bernoulli_count_distribution(const std::vector<cplx>& lambdas, double tol = 1e-8);
CountDistribution bernoulli_count_distribution(const Kernel& k, double tol = 1e-8);

/// sup_x |F_std(x) - Phi(x)| for the standardized count.
double kolmogorov_to_gaussian(const CountDistribution& d);

struct CltReport {
    std::vector<double> variances;
    std::vector<double> distances;
    bool distances_non_increasing = false;  // in the order given
};

/// Exact standardized count distributions vs the Gaussian, one spectrum per
/// entry. Throws on zero-variance spectra.
CltReport clt_diagnostic(const std::vector<std::vector<double>>& spectra);

/// JSON serialization of the report objects: every payload carries
/// operation, kernel, parameters, values, residuals, tolerances and pass.
nlohmann::json to_json(const DysonReport& r, const std::string& kernel, int m, double tol);
nlohmann::json to_json(const ReproducingReport& r, const std::string& kernel, double tol);
nlohmann::json to_json(const DiagonalFormReport& r, const std::string& kernel, double tol);
nlohmann::json to_json(const PositivityReport& r, const std::string& kernel, double tol);
nlohmann::json to_json(const CltReport& r);

}  // namespace pfq
