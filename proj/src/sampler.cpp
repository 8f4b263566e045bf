#include "pfq/sampler.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace pfq {

using std::numbers::pi;

namespace {

double wrap_angle(double t) {
    t = std::fmod(t + pi, 2.0 * pi);
    if (t < 0) t += 2.0 * pi;
    return t - pi;
}

// log interaction of coordinate j against the rest; -inf guarded by jitter
double log_pair_energy_circle(const std::vector<double>& x, int j, double xj) {
    double s = 0.0;
    for (size_t k = 0; k < x.size(); ++k) {
        if (int(k) == j) continue;
        s += std::log(std::abs(std::sin(0.5 * (xj - x[k]))));
    }
    return 4.0 * s;
}

double log_pair_energy_line(const std::vector<double>& x, int j, double xj) {
    double s = 0.0;
    for (size_t k = 0; k < x.size(); ++k) {
        if (int(k) == j) continue;
        s += std::log(std::abs(xj - x[k]));
    }
    return 4.0 * s - xj * xj;
}

double full_log_density(const std::vector<double>& x, bool circle) {
    double s = 0.0;
    for (size_t j = 0; j < x.size(); ++j)
        for (size_t k = j + 1; k < x.size(); ++k)
            s += circle ? std::log(std::abs(std::sin(0.5 * (x[j] - x[k])))) : std::log(std::abs(x[j] - x[k]));
    s *= 4.0;
    if (!circle)
        for (double v : x) s -= v * v;
    return s;
}

void run_one_chain(int N, const ChainConfig& cfg, bool circle, int chain,
                   std::vector<PointConfiguration>& configs, ChainDiagnostics& diag) {
    Philox rng(cfg.seed, std::uint64_t(chain) + 1);
    std::vector<double> x(N);
    // spread-out start, jittered to avoid coincident coordinates
    for (int i = 0; i < N; ++i) {
        if (circle) x[i] = wrap_angle(-pi + (2.0 * pi * i) / N + 0.01 * rng.normal());
        else x[i] = (i - 0.5 * (N - 1)) * 2.0 / std::sqrt(double(N)) + 0.01 * rng.normal();
    }

    double step = cfg.step_size;
    long accepted = 0, proposed = 0;
    long tune_accepted = 0, tune_proposed = 0;

    for (long sweep = 0; sweep < cfg.steps; ++sweep) {
        bool burn = sweep < cfg.burnin;
        for (int j = 0; j < N; ++j) {
            double prop = x[j] + step * rng.normal();
            if (circle) prop = wrap_angle(prop);
            double dlog = circle ? log_pair_energy_circle(x, j, prop) - log_pair_energy_circle(x, j, x[j])
                                 : log_pair_energy_line(x, j, prop) - log_pair_energy_line(x, j, x[j]);
            bool accept = dlog >= 0.0 || rng.uniform01() < std::exp(dlog);
            if (accept) x[j] = prop;
            if (burn) {
                tune_accepted += accept;
                ++tune_proposed;
            } else {
                accepted += accept;
                ++proposed;
            }
        }
        if (burn && cfg.autotune && tune_proposed >= 100) {
            double rate = double(tune_accepted) / double(tune_proposed);
            step *= std::exp(rate - 0.44);
            step = std::clamp(step, 1e-4, circle ? pi : 10.0);
            tune_accepted = tune_proposed = 0;
        }
        if (!burn && (sweep - cfg.burnin) % cfg.thinning == 0) {
            configs.push_back({x, full_log_density(x, circle), chain, sweep});
        }
    }

    diag.acceptance_rate = proposed ? double(accepted) / double(proposed) : 0.0;
    diag.tuned_step = step;
    diag.acceptance_flagged = diag.acceptance_rate < 0.1 || diag.acceptance_rate > 0.9;
}

SampleRun run_chains(int N, const ChainConfig& cfg, bool circle) {
    if (N < 2) throw std::invalid_argument("mcmc: N >= 2");
    if (cfg.steps <= cfg.burnin) throw std::invalid_argument("mcmc: steps must exceed burn-in");
    if (cfg.thinning < 1) throw std::invalid_argument("mcmc: thinning >= 1");
    if (cfg.chains < 1) throw std::invalid_argument("mcmc: chains >= 1");

    // one RNG stream per chain; results merge in chain order, so the output
    // does not depend on scheduling
    std::vector<std::vector<PointConfiguration>> per(cfg.chains);
    SampleRun run;
    run.chains.resize(cfg.chains);
    if (cfg.chains == 1) {
        run_one_chain(N, cfg, circle, 0, per[0], run.chains[0]);
    } else {
        std::vector<std::thread> workers;
        for (int c = 0; c < cfg.chains; ++c)
            workers.emplace_back(run_one_chain, N, std::cref(cfg), circle, c, std::ref(per[c]),
                                 std::ref(run.chains[c]));
        for (auto& w : workers) w.join();
    }
    for (auto& block : per)
        run.configs.insert(run.configs.end(), block.begin(), block.end());
    return run;
}

}  // namespace

SampleRun mcmc_cse(int N, const ChainConfig& cfg) { return run_chains(N, cfg, true); }
SampleRun mcmc_gse(int N, const ChainConfig& cfg) { return run_chains(N, cfg, false); }

QuaternionMatrix sample_gse_matrix(int N, Philox& rng) {
    const double diag_sd = 0.5;            // variance 1/4
    const double off_sd = std::sqrt(1.0 / 8.0);  // per component
    QuaternionMatrix h(N, N);
    for (int i = 0; i < N; ++i) {
        h.at(i, i) = Quaternion{diag_sd * rng.normal()};
        for (int j = i + 1; j < N; ++j) {
            Quaternion q{off_sd * rng.normal(), off_sd * rng.normal(), off_sd * rng.normal(),
                         off_sd * rng.normal()};
            h.at(i, j) = q;
            h.at(j, i) = q.conj();
        }
    }
    return h;
}

std::vector<double> sample_gse_eigenvalues(int N, Philox& rng) {
    QuaternionMatrix h = sample_gse_matrix(N, rng);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(psi_adjoint(h), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("sample_gse_eigenvalues: eigensolver failed");
    std::vector<double> out(N);
    for (int i = 0; i < N; ++i) {
        double a = es.eigenvalues()(2 * i), b = es.eigenvalues()(2 * i + 1);
        if (std::abs(a - b) > 1e-6 * (1.0 + std::abs(a)))
            throw std::runtime_error("sample_gse_eigenvalues: Kramers pairing failed");
        out[i] = 0.5 * (a + b);
    }
    return out;
}

namespace {

struct BatchStats {
    double mean, se, ess;
    int batches;
};

BatchStats batch_means(const std::vector<double>& x) {
    const long n = long(x.size());
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= double(n);
    double var = 0.0;
    for (double v : x) var += (v - mean) * (v - mean);
    var /= std::max(1L, n - 1);

    int nb = int(std::floor(std::sqrt(double(n))));
    BatchStats out{mean, 0.0, double(n), nb};
    if (nb < 2) return out;
    long bs = n / nb;
    std::vector<double> bmeans(nb, 0.0);
    for (int b = 0; b < nb; ++b) {
        for (long i = b * bs; i < (b + 1) * bs; ++i) bmeans[b] += x[i];
        bmeans[b] /= double(bs);
    }
    double bvar = 0.0;
    for (double bm : bmeans) bvar += (bm - mean) * (bm - mean);
    bvar /= (nb - 1);
    out.se = std::sqrt(bvar / nb);
    out.ess = var > 0 && out.se > 0 ? var / (out.se * out.se) : double(n);
    return out;
}

}  // namespace

CountStats estimate_counting(const std::vector<PointConfiguration>& samples, double lo, double hi) {
    if (samples.empty()) throw std::invalid_argument("estimate_counting: no samples");
    std::vector<double> counts;
    counts.reserve(samples.size());
    for (const auto& s : samples) {
        int c = 0;
        for (double p : s.points) c += (p >= lo && p < hi);
        counts.push_back(double(c));
    }
    BatchStats ms = batch_means(counts);
    CountStats out;
    out.mean = ms.mean;
    out.se_mean = ms.se;
    out.ess = ms.ess;
    out.batches = ms.batches;
    out.enough_batches = ms.batches >= 10;

    // second moment via batch means as well
    std::vector<double> sq(counts.size());
    for (size_t i = 0; i < counts.size(); ++i) sq[i] = (counts[i] - ms.mean) * (counts[i] - ms.mean);
    BatchStats vs = batch_means(sq);
    out.variance = vs.mean;
    out.se_variance = vs.se;
    return out;
}

BinnedR1 estimate_r1(const std::vector<PointConfiguration>& samples, double lo, double hi, int nbins) {
    if (samples.empty()) throw std::invalid_argument("estimate_r1: no samples");
    if (nbins < 1 || hi <= lo) throw std::invalid_argument("estimate_r1: bad bins");
    BinnedR1 out;
    out.edges.resize(nbins + 1);
    for (int b = 0; b <= nbins; ++b) out.edges[b] = lo + (hi - lo) * b / nbins;
    double width = (hi - lo) / nbins;
    out.hits.assign(nbins, 0);
    out.density.assign(nbins, 0.0);
    out.se.assign(nbins, 0.0);

    // per-sample bin counts feed the batch-means error
    std::vector<std::vector<double>> per(nbins, std::vector<double>(samples.size(), 0.0));
    for (size_t s = 0; s < samples.size(); ++s)
        for (double p : samples[s].points) {
            if (p < lo || p >= hi) continue;
            int b = std::min(nbins - 1, int((p - lo) / width));
            per[b][s] += 1.0;
            ++out.hits[b];
        }
    for (int b = 0; b < nbins; ++b) {
        BatchStats st = batch_means(per[b]);
        out.density[b] = st.mean / width;
        out.se[b] = st.se / width;
    }
    return out;
}

BinnedR2 estimate_r2(const std::vector<PointConfiguration>& samples, double lo, double hi, int nbins) {
    if (samples.empty()) throw std::invalid_argument("estimate_r2: no samples");
    if (nbins < 1 || hi <= lo) throw std::invalid_argument("estimate_r2: bad bins");
    BinnedR2 out;
    out.edges.resize(nbins + 1);
    for (int b = 0; b <= nbins; ++b) out.edges[b] = lo + (hi - lo) * b / nbins;
    double width = (hi - lo) / nbins;
    out.hits.assign(nbins, std::vector<long>(nbins, 0));
    out.density.assign(nbins, std::vector<double>(nbins, 0.0));
    auto bin_of = [&](double p) { return std::min(nbins - 1, int((p - lo) / width)); };
    for (const auto& s : samples)
        for (size_t a = 0; a < s.points.size(); ++a)
            for (size_t b = 0; b < s.points.size(); ++b) {
                if (a == b) continue;
                double pa = s.points[a], pb = s.points[b];
                if (pa < lo || pa >= hi || pb < lo || pb >= hi) continue;
                ++out.hits[bin_of(pa)][bin_of(pb)];
            }
    double norm = double(samples.size()) * width * width;
    for (int i = 0; i < nbins; ++i)
        for (int j = 0; j < nbins; ++j)
            out.density[i][j] = out.hits[i][j] ? double(out.hits[i][j]) / norm
                                               : std::numeric_limits<double>::quiet_NaN();
    return out;
}

void write_jsonl(const std::vector<PointConfiguration>& samples, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    for (const auto& s : samples) {
        nlohmann::json j{{"chain", s.chain}, {"step", s.step}, {"points", s.points}};
        out << j.dump() << "\n";
    }
}

std::vector<PointConfiguration> read_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::vector<PointConfiguration> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        PointConfiguration c;
        c.chain = j.value("chain", 0);
        c.step = j.value("step", 0L);
        c.points = j.at("points").get<std::vector<double>>();
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace pfq
