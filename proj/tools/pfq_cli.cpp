// pfq: batch verification suites, restricted-spectrum surveys, Fredholm
// evaluations and MCMC samplers for Pfaffian point fields.
//
// Exit codes: 0 all checks pass, 1 check failure, 2 usage/config error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfq/pointfield.hpp"
#include "pfq/report.hpp"
#include "pfq/sampler.hpp"
#include "pfq/verify.hpp"

using namespace pfq;
using std::numbers::pi;

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PFAFF_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

void emit_report(const RunReport& rep, const std::string& json_path) {
    std::string text = rep.to_json().dump(2);
    if (json_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(json_path);
        out << text << "\n";
        std::cout << (rep.all_pass() ? "PASS" : "FAIL") << " " << rep.command << " (" << rep.records.size()
                  << " records) -> " << json_path << "\n";
    }
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    for (size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\r\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << "\r\n";
    }
}

std::vector<std::pair<double, double>> parse_arcs(const std::vector<std::string>& arcs) {
    std::vector<std::pair<double, double>> out;
    for (const auto& a : arcs) {
        size_t comma = a.find(',');
        if (comma == std::string::npos) throw CLI::ValidationError("--arc", "expected lo,hi");
        out.push_back({std::stod(a.substr(0, comma)), std::stod(a.substr(comma + 1))});
    }
    return out;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pfaffian point fields: quaternion determinants, kernels, samplers"};
    app.require_subcommand(1);

    std::uint64_t seed = default_seed();
    std::string json_path;
    app.add_option("--json", json_path, "write the run report to this path instead of stdout");

    // verify ----------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run a property suite");
    std::string suite;
    int trials = 100;
    verify->add_option("suite", suite, "algebra|determinants|cauchy-binet|kernels|fredholm|dyson-lemma")
        ->required();
    verify->add_option("--trials", trials, "fuzz budget");
    verify->add_option("--seed", seed, "RNG seed (default: PFAFF_SEED or 1)");

    // spectrum ---------------------------------------------------------------
    auto* spectrum = app.add_subcommand("spectrum", "restricted-kernel spectra over arcs");
    std::string spec_kernel, csv_path = "spectrum.csv";
    std::vector<std::string> arc_args;
    int random_arcs = 0;
    spectrum->add_option("kernel", spec_kernel, "kernel descriptor, e.g. cse:N=4")->required();
    spectrum->add_option("--arc", arc_args, "arc lo,hi (repeatable)");
    spectrum->add_option("--random", random_arcs, "number of random arcs");
    spectrum->add_option("--seed", seed, "RNG seed");
    spectrum->add_option("--csv", csv_path, "output CSV path");

    // sample -----------------------------------------------------------------
    auto* sample = app.add_subcommand("sample", "MCMC / matrix-model sampling");
    std::string ensemble, out_path = "samples.jsonl";
    int sample_n = 4, thin = 10, chains = 1;
    long steps = 200000, burn = 20000;
    double step_size = 0.5;
    sample->add_option("ensemble", ensemble, "cse|gse|gse-matrix")->required();
    sample->add_option("--n", sample_n, "ensemble size N")->required();
    sample->add_option("--steps", steps, "total sweeps");
    sample->add_option("--burn", burn, "burn-in sweeps");
    sample->add_option("--thin", thin, "retain every thin-th sweep");
    sample->add_option("--step-size", step_size, "initial proposal step");
    sample->add_option("--chains", chains, "independent chains");
    sample->add_option("--seed", seed, "RNG seed");
    sample->add_option("-o,--out", out_path, "output JSONL path");

    // compare ----------------------------------------------------------------
    auto* compare = app.add_subcommand("compare", "MC samples vs kernel predictions");
    std::string cmp_kernel, sample_path, cmp_csv = "compare.csv", r2_csv;
    int bins = 32;
    std::vector<std::string> cmp_arcs;
    compare->add_option("kernel", cmp_kernel, "kernel descriptor")->required();
    compare->add_option("samples", sample_path, "JSONL sample file")->required();
    compare->add_option("--bins", bins, "R1 bins");
    compare->add_option("--arc", cmp_arcs, "counting arc lo,hi (repeatable)");
    compare->add_option("--csv", cmp_csv, "binned R1 CSV path");
    compare->add_option("--r2-csv", r2_csv, "binned R2 CSV path (written when set)");

    // clt --------------------------------------------------------------------
    auto* clt = app.add_subcommand("clt", "CLT diagnostic over cse:N");
    std::vector<int> clt_ns{4, 8, 16, 32};
    std::string clt_arc = "-1.5707963267948966,1.5707963267948966";
    std::string clt_csv = "clt.csv";
    clt->add_option("--N", clt_ns, "kernel sizes");
    clt->add_option("--arc", clt_arc, "arc lo,hi");
    clt->add_option("--csv", clt_csv, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // stable usage-error contract
    }

    try {
        if (*verify) {
            RunReport rep = run_suite(suite, trials, seed);
            emit_report(rep, json_path);
            return rep.all_pass() ? 0 : 1;
        }

        if (*spectrum) {
            Timer timer;
            RunReport rep;
            rep.command = "spectrum";
            rep.descriptor = spec_kernel;
            rep.seed = seed;
            Kernel k = parse_kernel(spec_kernel);
            if (!k.diag) throw std::invalid_argument("spectrum: kernel has no diagonal form");
            auto arcs = parse_arcs(arc_args);
            Philox rng(seed, 77);
            // unbounded domains (the line) sample arcs inside the bulk window
            double wlo = std::isfinite(k.lo) ? k.lo : -4.0;
            double whi = std::isfinite(k.hi) ? k.hi : 4.0;
            for (int t = 0; t < random_arcs; ++t) {
                double len = rng.uniform(0.3, whi - wlo - 0.3);
                double lo = rng.uniform(wlo, whi - len);
                arcs.push_back({lo, lo + len});
            }
            if (arcs.empty()) arcs.push_back({k.lo, k.hi});
            rep.parameters = {{"arcs", arcs.size()}};

            std::vector<std::vector<std::string>> rows;
            double max_imag = 0.0, min_re = 0.0, max_re = 1.0;
            for (size_t a = 0; a < arcs.size(); ++a) {
                auto ev = restricted_spectrum(k, arcs[a].first, arcs[a].second);
                for (size_t i = 0; i < ev.size(); ++i) {
                    rows.push_back({std::to_string(arcs[a].first), std::to_string(arcs[a].second),
                                    std::to_string(i), std::to_string(ev[i].real()), std::to_string(ev[i].imag())});
                    max_imag = std::max(max_imag, std::abs(ev[i].imag()));
                    min_re = std::min(min_re, ev[i].real());
                    max_re = std::max(max_re, ev[i].real());
                }
            }
            write_csv(csv_path, {"arc_lo", "arc_hi", "index", "re", "im"}, rows);
            rep.add_residual("spectrum.max_imag", max_imag, 1e-8, "quadrature");
            rep.add_residual("spectrum.below_zero_excursion", std::max(0.0, -min_re), 1e-8, "quadrature");
            rep.add_residual("spectrum.above_one_excursion", std::max(0.0, max_re - 1.0), 1e-8, "quadrature");
            rep.wall_seconds = timer.seconds();
            emit_report(rep, json_path);
            return rep.all_pass() ? 0 : 1;
        }

        if (*sample) {
            Timer timer;
            RunReport rep;
            rep.command = "sample " + ensemble;
            rep.descriptor = ensemble + ":N=" + std::to_string(sample_n);
            rep.seed = seed;
            rep.parameters = {{"steps", steps}, {"burn", burn},   {"thin", thin},
                              {"chains", chains}, {"out", out_path}};
            ChainConfig cfg;
            cfg.steps = steps;
            cfg.burnin = burn;
            cfg.thinning = thin;
            cfg.step_size = step_size;
            cfg.seed = seed;
            cfg.chains = chains;

            if (ensemble == "cse" || ensemble == "gse") {
                SampleRun run = ensemble == "cse" ? mcmc_cse(sample_n, cfg) : mcmc_gse(sample_n, cfg);
                write_jsonl(run.configs, out_path);
                rep.parameters["configs"] = run.configs.size();
                bool flagged = false;
                for (size_t c = 0; c < run.chains.size(); ++c) {
                    rep.add("chain" + std::to_string(c) + ".acceptance", run.chains[c].acceptance_rate, 0.44, 0.46,
                            "MC±SE");
                    flagged = flagged || run.chains[c].acceptance_flagged;
                }
                if (flagged) std::cerr << "warning: acceptance rate outside [0.1, 0.9]\n";
                auto full = estimate_counting(run.configs, -1e308, 1e308);
                rep.add("sample.count_is_N", full.mean, double(sample_n), 1e-12);
                rep.add("sample.ess", full.ess, full.ess, 0.0, "MC±SE");
            } else if (ensemble == "gse-matrix") {
                Philox rng(seed, 999);
                std::vector<PointConfiguration> configs;
                long reps = std::max(1L, (steps - burn) / thin);
                double sum_sq = 0.0;
                for (long i = 0; i < reps; ++i) {
                    auto ev = sample_gse_eigenvalues(sample_n, rng);
                    for (double l : ev) sum_sq += l * l;
                    configs.push_back({ev, 0.0, 0, i});
                }
                write_jsonl(configs, out_path);
                double mean_sq = sum_sq / double(reps);
                double expect = sample_n * (2.0 * sample_n - 1.0) / 4.0;
                rep.parameters["configs"] = configs.size();
                rep.parameters["mean_sum_lambda_sq"] = mean_sq;
                // one-parameter scale fit against a short reference chain of
                // the e^{-x^2} eigenvalue density (the matrix density uses
                // exp(-2 Tr H^2), so sigma lands near sqrt 2)
                ChainConfig ref;
                ref.steps = 60000;
                ref.burnin = 5000;
                ref.thinning = 5;
                ref.seed = seed + 1;
                auto mc = mcmc_gse(sample_n, ref);
                double mc_sq = 0.0;
                for (const auto& cc : mc.configs)
                    for (double p : cc.points) mc_sq += p * p;
                mc_sq /= double(mc.configs.size());
                double sigma_fit = std::sqrt(mc_sq / mean_sq);
                rep.parameters["sigma_fit"] = sigma_fit;
                rep.add("gse_matrix.trace_sq_moment", mean_sq, expect, 0.2 * expect, "MC±SE");
                rep.add("gse_matrix.sigma_fit_near_sqrt2", sigma_fit, std::sqrt(2.0), 0.1, "MC±SE");
            } else {
                throw CLI::ValidationError("ensemble", "expected cse|gse|gse-matrix");
            }
            rep.wall_seconds = timer.seconds();
            emit_report(rep, json_path);
            return rep.all_pass() ? 0 : 1;
        }

        if (*compare) {
            Timer timer;
            RunReport rep;
            rep.command = "compare";
            rep.descriptor = cmp_kernel;
            rep.seed = seed;
            Kernel k = parse_kernel(cmp_kernel);
            auto samples = read_jsonl(sample_path);
            if (samples.empty()) throw std::runtime_error("compare: empty sample file");
            double lo = k.domain == Domain::Circle ? -pi : -4.0;
            double hi = k.domain == Domain::Circle ? pi : 4.0;
            for (const auto& s : samples)
                for (double p : s.points)
                    if (k.domain == Domain::Circle && (p < -pi || p >= pi))
                        throw std::runtime_error("compare: sample point outside the kernel domain");
            rep.parameters = {{"samples", samples.size()}, {"bins", bins}};

            // binned R1 vs the kernel prediction
            BinnedR1 r1 = estimate_r1(samples, lo, hi, bins);
            std::vector<std::vector<std::string>> rows;
            double worst_se_units = 0.0;
            long checked_bins = 0;
            for (int b = 0; b < bins; ++b) {
                double mid = 0.5 * (r1.edges[b] + r1.edges[b + 1]);
                double pred = correlation_value(k, {k.domain == Domain::Circle ? Point::angle(mid) : Point::real(mid)});
                double se_units = r1.se[b] > 0 ? std::abs(r1.density[b] - pred) / r1.se[b] : 0.0;
                rows.push_back({std::to_string(mid), std::to_string(r1.density[b]), std::to_string(r1.se[b]),
                                std::to_string(pred), std::to_string(r1.hits[b]), std::to_string(se_units)});
                if (r1.hits[b] >= 500) {
                    worst_se_units = std::max(worst_se_units, se_units);
                    ++checked_bins;
                }
            }
            write_csv(cmp_csv, {"mid", "density", "se", "kernel_prediction", "hits", "se_units"}, rows);
            rep.parameters["checked_bins"] = checked_bins;
            rep.add_residual("compare.r1_worst_bin_se_units", worst_se_units, 4.0, "MC±SE");

            if (!r2_csv.empty()) {
                BinnedR2 r2 = estimate_r2(samples, lo, hi, bins);
                std::vector<std::vector<std::string>> rows2;
                for (int i = 0; i < bins; ++i)
                    for (int j = 0; j < bins; ++j) {
                        double mi = 0.5 * (r2.edges[i] + r2.edges[i + 1]);
                        double mj = 0.5 * (r2.edges[j] + r2.edges[j + 1]);
                        auto mk = [&](double v) {
                            return k.domain == Domain::Circle ? Point::angle(v) : Point::real(v);
                        };
                        double pred = correlation_value(k, {mk(mi), mk(mj)});
                        rows2.push_back({std::to_string(mi), std::to_string(mj),
                                         r2.hits[i][j] ? std::to_string(r2.density[i][j]) : "",
                                         std::to_string(r2.hits[i][j]), std::to_string(pred)});
                    }
                write_csv(r2_csv, {"mid_i", "mid_j", "density", "hits", "kernel_prediction"}, rows2);
            }

            // counting statistics per arc
            for (const auto& [alo, ahi] : parse_arcs(cmp_arcs)) {
                CountStats cs = estimate_counting(samples, alo, ahi);
                if (!cs.enough_batches) throw std::runtime_error("compare: too few batches");
                double pred_mean = 0.0;
                for (size_t i = 0; i < k.native_quad.size(); ++i) {
                    double x = k.native_quad.nodes[i];
                    if (x >= alo && x < ahi)
                        pred_mean += k.native_quad.weights[i] *
                                     k.eval_core(Point::real(x), Point::real(x)).s.real();
                }
                std::string tag = "arc[" + std::to_string(alo) + "," + std::to_string(ahi) + "]";
                rep.add(tag + ".count_mean_se_units",
                        cs.se_mean > 0 ? std::abs(cs.mean - pred_mean) / cs.se_mean : 0.0, 0.0, 3.0, "MC±SE");
                if (k.diag) {
                    auto mu = restricted_spectrum(k, alo, ahi);
                    double pred_var = 0.0;
                    for (cplx m : mu) pred_var += m.real() * (1.0 - m.real());
                    rep.add(tag + ".count_var_se_units",
                            cs.se_variance > 0 ? std::abs(cs.variance - pred_var) / cs.se_variance : 0.0, 0.0, 4.0,
                            "MC±SE");
                }
            }
            rep.wall_seconds = timer.seconds();
            emit_report(rep, json_path);
            return rep.all_pass() ? 0 : 1;
        }

        if (*clt) {
            Timer timer;
            RunReport rep;
            rep.command = "clt";
            rep.descriptor = "cse";
            rep.seed = seed;
            auto arc = parse_arcs({clt_arc}).at(0);
            rep.parameters = {{"arc_lo", arc.first}, {"arc_hi", arc.second}, {"Ns", clt_ns}};

            std::vector<std::vector<double>> spectra;
            for (int n : clt_ns) {
                Kernel k = circular_symplectic(n);
                auto ev = restricted_spectrum(k, arc.first, arc.second);
                std::vector<double> spec;
                for (cplx l : ev) {
                    if (std::abs(l.imag()) > 1e-8 || l.real() < -1e-8 || l.real() > 1.0 + 1e-8) {
                        std::cerr << "refusal: non-real restricted eigenvalue " << l.real() << "+"
                                  << l.imag() << "i at N=" << n << "\n";
                        return 2;
                    }
                    spec.push_back(std::clamp(l.real(), 0.0, 1.0));
                }
                double var = 0.0;
                for (double l : spec) var += l * (1.0 - l);
                if (var <= 1e-9) {  // deterministic count up to rounding
                    std::cerr << "refusal: zero count variance at N=" << n << " (deterministic count)\n";
                    return 2;
                }
                spectra.push_back(std::move(spec));
            }
            CltReport cr = clt_diagnostic(spectra);
            std::vector<std::vector<std::string>> rows;
            for (size_t i = 0; i < clt_ns.size(); ++i)
                rows.push_back({std::to_string(clt_ns[i]), std::to_string(cr.variances[i]),
                                std::to_string(cr.distances[i])});
            write_csv(clt_csv, {"N", "variance", "kolmogorov_distance"}, rows);
            rep.add_flag("clt.distances_non_increasing", cr.distances_non_increasing);
            rep.wall_seconds = timer.seconds();
            emit_report(rep, json_path);
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
