#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfq/qmatrix.hpp"
#include "pfq/rng.hpp"

namespace pfq {

/// One retained sample: N angles (circle) or N reals (line).
struct PointConfiguration {
    std::vector<double> points;
    double log_density = 0.0;  // unnormalized log target at retention time
    int chain = 0;
    long step = 0;
};

struct ChainConfig {
    long steps = 200000;   // Metropolis sweeps (one single-site update per coordinate)
    long burnin = 20000;   // sweeps discarded before retention starts
    int thinning = 10;     // retain every thinning-th post-burn-in sweep
    double step_size = 0.5;
    std::uint64_t seed = 1;
    int chains = 1;
    bool autotune = true;  // adapt step_size during burn-in toward 0.44 acceptance
};

struct ChainDiagnostics {
    double acceptance_rate = 0.0;  // post burn-in
    double tuned_step = 0.0;
    bool acceptance_flagged = false;  // outside [0.1, 0.9]
};

struct SampleRun {
    std::vector<PointConfiguration> configs;
    std::vector<ChainDiagnostics> chains;
};

/// Metropolis chains for the CSE eigenvalue angles: density
/// prod_{j<k} |e^{i t_j} - e^{i t_k}|^4 on [-pi, pi)^N, single-coordinate
/// Gaussian proposals wrapped to the circle.
SampleRun mcmc_cse(int N, const ChainConfig& cfg);

/// Same machinery on the line: density prod (x_j - x_k)^4 prod e^{-x_j^2}.
SampleRun mcmc_gse(int N, const ChainConfig& cfg);

/// Self-dual real-quaternion GSE matrix with density exp(-2 Tr H^2):
/// diagonal entries N(0, 1/4), off-diagonal components N(0, 1/8).
QuaternionMatrix sample_gse_matrix(int N, Philox& rng);

/// Eigenvalues of a sampled GSE matrix (via the complex adjoint and Kramers
/// dedupe).
std::vector<double> sample_gse_eigenvalues(int N, Philox& rng);

struct CountStats {
    double mean = 0.0;
    double variance = 0.0;
    double se_mean = 0.0;      // batch-means standard error
    double se_variance = 0.0;  // batch-spread standard error of the variance
    double ess = 0.0;          // effective sample size for the mean
    int batches = 0;
    bool enough_batches = false;  // >= 10
};

/// Counting statistics of #points in [lo, hi) with autocorrelation-corrected
/// errors (batch means).
CountStats estimate_counting(const std::vector<PointConfiguration>& samples, double lo, double hi);

struct BinnedR1 {
    std::vector<double> edges;    // nbins + 1
    std::vector<double> density;  // points per unit measure per configuration
    std::vector<double> se;
    std::vector<long> hits;
};

BinnedR1 estimate_r1(const std::vector<PointConfiguration>& samples, double lo, double hi, int nbins);

struct BinnedR2 {
    std::vector<double> edges;
    std::vector<std::vector<double>> density;  // ordered pairs of distinct points
    std::vector<std::vector<long>> hits;       // empty bins: hits 0, density NaN
};

BinnedR2 estimate_r2(const std::vector<PointConfiguration>& samples, double lo, double hi, int nbins);

void write_jsonl(const std::vector<PointConfiguration>& samples, const std::string& path);
std::vector<PointConfiguration> read_jsonl(const std::string& path);

}  // namespace pfq
