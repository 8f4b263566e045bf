#include <doctest.h>

#include <cstdio>
#include <numbers>

#include "pfq/pointfield.hpp"
#include "pfq/sampler.hpp"
#include "pfq/verify.hpp"

using namespace pfq;
using std::numbers::pi;

TEST_CASE("chains are reproducible bit for bit and validate their config") {
    ChainConfig cfg;
    cfg.steps = 3000;
    cfg.burnin = 500;
    cfg.thinning = 5;
    cfg.seed = 42;
    auto a = mcmc_cse(3, cfg), b = mcmc_cse(3, cfg);
    REQUIRE(a.configs.size() == b.configs.size());
    CHECK(a.configs.size() == size_t((cfg.steps - cfg.burnin) / cfg.thinning));
    for (size_t i = 0; i < a.configs.size(); ++i)
        for (int j = 0; j < 3; ++j) CHECK(a.configs[i].points[j] == b.configs[i].points[j]);

    ChainConfig bad = cfg;
    bad.burnin = cfg.steps;
    CHECK_THROWS_AS(mcmc_cse(3, bad), std::invalid_argument);
    CHECK_THROWS_AS(mcmc_cse(1, cfg), std::invalid_argument);

    // angles stay in [-pi, pi)
    for (const auto& c : a.configs)
        for (double p : c.points) {
            CHECK(p >= -pi);
            CHECK(p < pi);
        }
}

TEST_CASE("cse N = 2: spacing histogram matches the directly normalized density") {
    // density of d = t1 - t2 (mod 2pi) is proportional to sin^4(d/2);
    // heavy thinning makes the retained samples effectively independent so
    // the chi-square p-value applies
    ChainConfig cfg;
    cfg.steps = 410000;
    cfg.burnin = 10000;
    cfg.thinning = 20;
    cfg.seed = 5;
    auto run = mcmc_cse(2, cfg);
    CHECK(run.chains[0].acceptance_rate > 0.1);
    CHECK(run.chains[0].acceptance_rate < 0.9);

    const int bins = 64;
    std::vector<double> counts(bins, 0.0);
    for (const auto& c : run.configs) {
        double d = std::fmod(c.points[0] - c.points[1] + 4 * pi, 2 * pi);
        counts[std::min(bins - 1, int(d / (2 * pi) * bins))] += 1.0;
    }
    // expected per-bin mass by direct normalization of sin^4 over the bin
    // midpoints (exact per-bin integral differs by O(bins^-2), well below
    // the statistical resolution here)
    double total = 0;
    std::vector<double> expect(bins, 0.0);
    for (int b = 0; b < bins; ++b) {
        double mid = (b + 0.5) * 2 * pi / bins;
        expect[b] = std::pow(std::sin(mid / 2), 4);
        total += expect[b];
    }
    double n = double(run.configs.size());
    double chi2 = 0;
    int dof = -1;  // normalization constraint
    for (int b = 0; b < bins; ++b) {
        double e = n * expect[b] / total;
        if (e < 5) continue;
        chi2 += (counts[b] - e) * (counts[b] - e) / e;
        ++dof;
    }
    // p > 0.001 <=> chi2 below the 0.999 quantile (Wilson-Hilferty)
    double z = 3.0902;  // Phi^{-1}(0.999)
    double h = 2.0 / (9.0 * dof);
    double q999 = dof * std::pow(1.0 - h + z * std::sqrt(h), 3);
    CHECK(chi2 < q999);
}

TEST_CASE("cse marginal R1 is flat and arc counts match the kernel") {
    ChainConfig cfg;
    cfg.steps = 100000;
    cfg.burnin = 5000;
    cfg.thinning = 5;
    cfg.seed = 11;
    int N = 4;
    auto run = mcmc_cse(N, cfg);

    BinnedR1 r1 = estimate_r1(run.configs, -pi, pi, 16);
    double flat = N / (2 * pi);
    for (int b = 0; b < 16; ++b) {
        CHECK(std::abs(r1.density[b] - flat) < 4.0 * r1.se[b]);
    }

    CountStats cs = estimate_counting(run.configs, -pi / 2, pi / 2);
    CHECK(cs.enough_batches);
    CHECK(std::abs(cs.mean - N / 2.0) < 3.0 * cs.se_mean);

    // full-domain count is deterministic
    CountStats full = estimate_counting(run.configs, -pi, pi);
    CHECK(full.mean == doctest::Approx(double(N)));
    CHECK(full.variance == doctest::Approx(0.0));
}

TEST_CASE("gse N = 2: moment of the two-point density against direct quadrature") {
    // quadrature oracle: E[(x1-x2)^2] under c (x1-x2)^4 e^(-x1^2-x2^2),
    // computed with the tensorized Gauss rule (weight absorbed)
    QuadratureRule gh = gauss_hermite(40);
    double num = 0, den = 0;
    for (size_t i = 0; i < gh.size(); ++i)
        for (size_t j = 0; j < gh.size(); ++j) {
            double d = gh.nodes[i] - gh.nodes[j];
            double w = gh.weights[i] * gh.weights[j] * d * d * d * d;
            num += w * d * d;
            den += w;
        }
    double oracle = num / den;
    CHECK(oracle == doctest::Approx(5.0).epsilon(1e-12));  // closed form cross-check

    ChainConfig cfg;
    cfg.steps = 150000;
    cfg.burnin = 10000;
    cfg.thinning = 5;
    cfg.seed = 13;
    auto run = mcmc_gse(2, cfg);
    std::vector<double> sq;
    for (const auto& c : run.configs) {
        double d = c.points[0] - c.points[1];
        sq.push_back(d * d);
    }
    double mean = 0;
    for (double v : sq) mean += v;
    mean /= double(sq.size());
    CountStats proxy = estimate_counting(run.configs, -1e9, 1e9);  // just for ess scale
    double var = 0;
    for (double v : sq) var += (mean - v) * (mean - v);
    var /= double(sq.size());
    double se = std::sqrt(var / double(sq.size())) * 3.0;  // inflate for autocorrelation
    CHECK(std::abs(mean - oracle) < 5.0 * se + 0.05);
    CHECK(proxy.mean == doctest::Approx(2.0));
}

TEST_CASE("hole probability: expected_product against the MC fraction of empty arcs") {
    Kernel k = circular_symplectic(2);
    const double lo = -0.5, hi = 0.7;
    auto hole = expected_product(
        k, [&](const Point& p) { return (p.x0() >= lo && p.x0() < hi) ? cplx(-1.0) : cplx(0.0); },
        circle_trapezoid(64));
    REQUIRE(hole.value.real() > 0.0);
    REQUIRE(hole.value.real() < 1.0);

    ChainConfig cfg;
    cfg.steps = 300000;
    cfg.burnin = 10000;
    cfg.thinning = 10;
    cfg.seed = 37;
    auto run = mcmc_cse(2, cfg);
    std::vector<double> empty;
    for (const auto& c : run.configs) {
        bool any = false;
        for (double p : c.points) any = any || (p >= lo && p < hi);
        empty.push_back(any ? 0.0 : 1.0);
    }
    double frac = 0;
    for (double e : empty) frac += e;
    frac /= double(empty.size());
    double se = std::sqrt(frac * (1 - frac) / double(empty.size())) * 3.0;  // autocorrelation margin
    CHECK(std::abs(frac - hole.value.real()) < 4.0 * se);
}

TEST_CASE("gse R1 from MCMC matches the kernel prediction") {
    ChainConfig cfg;
    cfg.steps = 200000;
    cfg.burnin = 10000;
    cfg.thinning = 5;
    cfg.seed = 17;
    int N = 3;
    auto run = mcmc_gse(N, cfg);
    Kernel k = gse(N);
    BinnedR1 r1 = estimate_r1(run.configs, -3.0, 3.0, 24);
    int checked = 0;
    for (int b = 0; b < 24; ++b) {
        if (r1.hits[b] < 500) continue;
        double mid = 0.5 * (r1.edges[b] + r1.edges[b + 1]);
        double pred = correlation_value(k, {Point::real(mid)});
        CHECK(std::abs(r1.density[b] - pred) < 4.0 * r1.se[b] + 0.01 * pred);
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("gse matrix model") {
    Philox rng(19, 0);
    // entries follow exp(-2 Tr H^2): diagonal variance 1/4, off-diag 1/8
    QuaternionMatrix h = sample_gse_matrix(4, rng);
    CHECK(selfdual_defect(h) == 0.0);
    CHECK(is_real(h));

    // eigenvalues real, N of them after Kramers dedupe
    auto ev = sample_gse_eigenvalues(5, rng);
    CHECK(ev.size() == 5);

    // E[sum lambda^2] = E[Tr H^2] = N(2N-1)/4 from the chosen variances
    int N = 3;
    long reps = 4000;
    double acc = 0;
    std::vector<double> per;
    for (long t = 0; t < reps; ++t) {
        double s = 0;
        for (double l : sample_gse_eigenvalues(N, rng)) s += l * l;
        acc += s;
        per.push_back(s);
    }
    double mean = acc / double(reps);
    double var = 0;
    for (double v : per) var += (v - mean) * (v - mean);
    var /= double(reps - 1);
    double se = std::sqrt(var / double(reps));
    double expect = N * (2.0 * N - 1.0) / 4.0;
    CHECK(std::abs(mean - expect) < 3.0 * se);

    // scale fit against the mcmc oracle: x = sigma lambda with sigma^2
    // fitted by second moments; the fitted sigma should be ~sqrt(2) given
    // the e^{-x^2} eigenvalue weight vs the exp(-2 Tr H^2) matrix density
    ChainConfig cfg;
    cfg.steps = 150000;
    cfg.burnin = 10000;
    cfg.thinning = 5;
    cfg.seed = 23;
    auto run = mcmc_gse(N, cfg);
    double mc_sq = 0;
    for (const auto& c : run.configs)
        for (double p : c.points) mc_sq += p * p;
    mc_sq /= double(run.configs.size());
    double sigma = std::sqrt(mc_sq / mean);
    CHECK(sigma == doctest::Approx(std::sqrt(2.0)).epsilon(0.05));

    // after rescaling, binned R1 of the matrix model matches the mcmc R1
    std::vector<PointConfiguration> scaled;
    for (long t = 0; t < reps; ++t) {
        auto ev2 = sample_gse_eigenvalues(N, rng);
        for (double& l : ev2) l *= sigma;
        scaled.push_back({ev2, 0.0, 0, t});
    }
    BinnedR1 matrix_r1 = estimate_r1(scaled, -3.0, 3.0, 12);
    BinnedR1 mc_r1 = estimate_r1(run.configs, -3.0, 3.0, 12);
    for (int b = 0; b < 12; ++b) {
        if (matrix_r1.hits[b] < 500 || mc_r1.hits[b] < 500) continue;
        double se_c = std::sqrt(matrix_r1.se[b] * matrix_r1.se[b] + mc_r1.se[b] * mc_r1.se[b]);
        CHECK(std::abs(matrix_r1.density[b] - mc_r1.density[b]) < 4.0 * se_c + 0.02);
    }
}

TEST_CASE("counting and r2 estimators") {
    ChainConfig cfg;
    cfg.steps = 60000;
    cfg.burnin = 5000;
    cfg.thinning = 5;
    cfg.seed = 29;
    auto run = mcmc_cse(2, cfg);

    CHECK_THROWS_AS(estimate_counting({}, 0, 1), std::invalid_argument);

    // integrated R2 counts ordered pairs: N(N-1)
    BinnedR2 r2 = estimate_r2(run.configs, -pi, pi, 16);
    double integral = 0;
    double w = 2 * pi / 16;
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j)
            if (r2.hits[i][j] > 0) integral += r2.density[i][j] * w * w;
    CHECK(integral == doctest::Approx(2.0).epsilon(1e-12));  // every pair lands in some bin

    // level repulsion: diagonal bins thin out as bins shrink
    BinnedR2 fine = estimate_r2(run.configs, -pi, pi, 48);
    double diag_fine = 0, off_fine = 0;
    int diag_n = 0, off_n = 0;
    for (int i = 0; i < 48; ++i) {
        if (fine.hits[i][i] >= 0) {
            diag_fine += fine.hits[i][i] ? fine.density[i][i] : 0.0;
            ++diag_n;
        }
        int j = (i + 24) % 48;
        if (fine.hits[i][j] > 0) {
            off_fine += fine.density[i][j];
            ++off_n;
        }
    }
    CHECK(diag_fine / diag_n < 0.2 * (off_fine / std::max(1, off_n)));

    // antipodal R2 vs the kernel value
    Kernel k = circular_symplectic(2);
    double pred = correlation_value(k, {Point::angle(0.0), Point::angle(pi - 1e-9)});
    double mid_density = 0;
    int cnt = 0;
    for (int i = 0; i < 16; ++i) {
        int j = (i + 8) % 16;
        if (r2.hits[i][j] > 0) {
            mid_density += r2.density[i][j];
            ++cnt;
        }
    }
    CHECK(mid_density / cnt == doctest::Approx(pred).epsilon(0.2));
}

TEST_CASE("parallel chains merge deterministically in chain order") {
    ChainConfig cfg;
    cfg.steps = 4000;
    cfg.burnin = 1000;
    cfg.thinning = 10;
    cfg.seed = 31;
    cfg.chains = 3;
    auto a = mcmc_cse(2, cfg), b = mcmc_cse(2, cfg);
    REQUIRE(a.configs.size() == 3 * 300);
    REQUIRE(a.chains.size() == 3);
    for (size_t i = 0; i < a.configs.size(); ++i) {
        CHECK(a.configs[i].chain == b.configs[i].chain);
        CHECK(a.configs[i].points == b.configs[i].points);
    }
    // chain blocks are contiguous and ordered
    for (size_t i = 1; i < a.configs.size(); ++i) CHECK(a.configs[i].chain >= a.configs[i - 1].chain);

    // a single chain with the same seed reproduces the first block
    ChainConfig one = cfg;
    one.chains = 1;
    auto c = mcmc_cse(2, one);
    for (size_t i = 0; i < c.configs.size(); ++i) CHECK(c.configs[i].points == a.configs[i].points);
}

TEST_CASE("jsonl round trip") {
    std::vector<PointConfiguration> configs{{{0.1, -0.5, 2.0}, 0.0, 0, 100}, {{1.0, 1.5, -3.0}, 0.0, 1, 110}};
    std::string path = "/tmp/pfq_test_samples.jsonl";
    write_jsonl(configs, path);
    auto back = read_jsonl(path);
    REQUIRE(back.size() == 2);
    CHECK(back[0].chain == 0);
    CHECK(back[1].chain == 1);
    CHECK(back[1].step == 110);
    for (int i = 0; i < 3; ++i) CHECK(back[0].points[i] == configs[0].points[i]);
    std::remove(path.c_str());
    CHECK_THROWS(read_jsonl("/tmp/definitely_missing_pfq.jsonl"));
}
