#include <doctest.h>

#include <numbers>

#include "pfq/determinants.hpp"
#include "pfq/pointfield.hpp"
#include "pfq/verify.hpp"

using namespace pfq;
using std::numbers::pi;

TEST_CASE("correlation: constant R1 for cse, fixtures on the finite examples") {
    Kernel k = circular_symplectic(3);
    Philox rng(3, 0);
    for (int t = 0; t < 20; ++t) {
        double r1 = correlation_value(k, {Point::angle(rng.uniform(-pi, pi))});
        CHECK(r1 == doctest::Approx(3.0 / (2 * pi)).epsilon(1e-12));
    }

    Kernel neg = finite_kernel(example_negative_r1());
    CHECK(correlation_value(neg, {Point::index(1)}) == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    CHECK(correlation_value(neg, {Point::index(0)}) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));

    // R1 = 1 at both points and R2 = ((0,1),(1,0)) for the a^2 = 0 example
    Kernel det1 = finite_kernel(example_selfdual_det1());
    CHECK(correlation_value(det1, {Point::index(0)}) == doctest::Approx(1.0));
    CHECK(correlation_value(det1, {Point::index(1)}) == doctest::Approx(1.0));
    CHECK(correlation_value(det1, {Point::index(0), Point::index(1)}) == doctest::Approx(1.0));
    CHECK(correlation_value(det1, {Point::index(1), Point::index(0)}) == doctest::Approx(1.0));
    CHECK(std::abs(correlation_value(det1, {Point::index(0), Point::index(0)})) < 1e-12);
    CHECK(std::abs(correlation_value(det1, {Point::index(1), Point::index(1)})) < 1e-12);

    // 1x1 kernel: R1 is the entry itself
    QuaternionMatrix one(1, 1);
    one.at(0, 0) = cplx(0.625);
    CHECK(correlation_value(finite_kernel(one), {Point::index(0)}) == doctest::Approx(0.625));

    // duplicated point: rank-deficient self-dual Gram gives 0 for projections
    double dup = correlation_value(circular_symplectic(2), {Point::angle(0.3), Point::angle(0.3)});
    CHECK(std::abs(dup) < 1e-12);

    // permutation symmetry on random configurations
    for (int t = 0; t < 20; ++t) {
        std::vector<Point> pts;
        for (int i = 0; i < 4; ++i) pts.push_back(Point::angle(rng.uniform(-pi, pi)));
        double base = correlation_value(k, pts);
        std::swap(pts[0], pts[2]);
        std::swap(pts[1], pts[3]);
        CHECK(correlation_value(k, pts) == doctest::Approx(base).epsilon(1e-10));
    }
}

TEST_CASE("correlation matches the cayley route at small orders") {
    Kernel g = gse(2);
    Philox rng(5, 0);
    for (int t = 0; t < 10; ++t) {
        std::vector<Point> pts;
        for (int i = 0; i < 3; ++i) pts.push_back(Point::real(rng.uniform(-1.5, 1.5)));
        QuaternionMatrix gram(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) gram.at(i, j) = g.eval(pts[i], pts[j]);
        Quaternion cay = moore_dyson_cayley(gram);
        CHECK(std::abs(correlation_value(g, pts) - cay.s.real()) < 1e-10 * (1 + std::abs(cay.s.real())));
        CHECK(cay.vector_abs() < 1e-9);
    }
}

TEST_CASE("fredholm determinant") {
    QuadratureRule circle64 = circle_trapezoid(64);

    SUBCASE("scale zero") {
        CHECK(std::abs(fredholm_det(circular_symplectic(2), 0.0, circle64).value - 1.0) < 1e-13);
    }

    SUBCASE("eigenvalue product for cse ranks 1..3") {
        for (int N : {1, 2, 3}) {
            Kernel k = circular_symplectic(N);
            // s = -1 checks the annihilation edge: Det(I - K) = 0 for projections
            for (cplx s : {cplx(-1.0), cplx(0.5), std::exp(cplx(0, 0.7)) - 1.0, cplx(-0.4, 0.2)}) {
                auto f = fredholm_det(k, s, circle64);
                cplx expect = std::pow(1.0 + s, N);
                // the quadrature is exact here; the residual is rounding
                // accumulated over the C(64, n) subset terms
                CHECK(std::abs(f.value - expect) < 1e-7 * (1.0 + std::abs(expect)));
                CHECK(f.tail_abs < 1e-7);
            }
        }
    }

    SUBCASE("finite two-point example: I - K") {
        Kernel fk = finite_kernel(example_nonquasireal());
        auto f = fredholm_det(fk, -1.0, fk.native_quad);
        CHECK(f.value.real() == doctest::Approx(0.3745).epsilon(1e-3));
        CHECK(std::abs(f.value.imag()) < 1e-12);
    }

    SUBCASE("gse rank 2 against the eigenvalue product") {
        Kernel g = gse(2);
        for (cplx s : {cplx(-1.0), cplx(0.5), std::exp(cplx(0, 0.7)) - 1.0}) {
            auto f = fredholm_det(g, s, g.native_quad);
            cplx expect = (1.0 + s) * (1.0 + s);
            CHECK(std::abs(f.value - expect) < 1e-7 * (1.0 + std::abs(expect)));
        }
    }

    SUBCASE("missing rank") {
        Kernel k = restrict_kernel(circular_symplectic(2), -1.0, 1.0);
        CHECK_THROWS_AS(fredholm_det(k, 1.0, circle64), std::invalid_argument);
        CHECK_NOTHROW(fredholm_det(k, 1.0, circle64, 2));
    }
}

TEST_CASE("characteristic function of the count") {
    QuadratureRule circle64 = circle_trapezoid(64);
    Kernel k = circular_symplectic(2);

    auto c0 = char_function_count(k, 0.0, circle64);
    CHECK(std::abs(c0.product_route - 1.0) < 1e-14);
    CHECK(std::abs(c0.fredholm_route - 1.0) < 1e-12);

    for (double t : {0.3, 1.1, 2.9}) {
        auto c = char_function_count(k, t, circle64);
        CHECK(std::abs(c.product_route - std::exp(cplx(0, 2 * t))) < 1e-12);  // deterministic count
        CHECK(c.discrepancy < 1e-9);
    }

    CountDistribution half = bernoulli_count_distribution(std::vector<cplx>{0.5});
    CHECK(std::abs(half.char_function(pi)) < 1e-15);
    CHECK(std::abs(half.char_function(0.0) - 1.0) < 1e-15);
}

TEST_CASE("expected product") {
    QuadratureRule circle64 = circle_trapezoid(64);
    Kernel k = circular_symplectic(2);

    auto zero = expected_product(k, [](const Point&) { return cplx(0.0); }, circle64);
    CHECK(std::abs(zero.value - 1.0) < 1e-13);

    double t = 0.7;
    cplx s = std::exp(cplx(0, t)) - 1.0;
    auto ep = expected_product(k, [s](const Point&) { return s; }, circle64);
    auto cf = char_function_count(k, t, circle64);
    CHECK(std::abs(ep.value - cf.product_route) < 1e-8);

    // hole probability for a small arc lies in (0,1); sqrt branch exercises
    // f = -1
    auto hole = expected_product(k, [](const Point& p) { return (p.x0() >= -0.4 && p.x0() < 0.4) ? cplx(-1.0) : cplx(0.0); },
                                 circle64);
    CHECK(hole.value.real() > 0.0);
    CHECK(hole.value.real() < 1.0);
    CHECK(std::abs(hole.value.imag()) < 1e-9);

    // sqrt-branch invariance: on a finite kernel the unsymmetrized f(x) K
    // variant is computable through the plain matrix determinant route
    Kernel fk = finite_kernel(example_nonquasireal());
    cplx fval(0.35, 0.6);
    auto sym = expected_product(fk, [fval](const Point&) { return fval; }, fk.native_quad);
    cplx direct = 1.0;
    for (cplx l : fk.diag->lambdas) direct *= 1.0 + fval * l;
    CHECK(std::abs(sym.value - direct) < 1e-10);
}

TEST_CASE("dyson integration lemma") {
    Philox rng(7, 0);

    SUBCASE("cse m = 1: total mass") {
        Kernel k = circular_symplectic(2);
        auto r = dyson_integration_check(k, 1, k.native_quad, {});
        CHECK(r.kernel_trace == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(r.max_rel_deviation < 1e-10);
    }

    SUBCASE("cse m = 2") {
        for (int N : {2, 3}) {
            Kernel k = circular_symplectic(N);
            std::vector<std::vector<Point>> probes;
            for (int t = 0; t < 10; ++t) probes.push_back({Point::angle(rng.uniform(-pi, pi))});
            auto r = dyson_integration_check(k, 2, k.native_quad, probes);
            CHECK(r.max_rel_deviation < 1e-6);
        }
    }

    SUBCASE("cse m = 3") {
        Kernel k = circular_symplectic(2);
        std::vector<std::vector<Point>> probes;
        for (int t = 0; t < 3; ++t)
            probes.push_back({Point::angle(rng.uniform(-pi, pi)), Point::angle(rng.uniform(-pi, pi))});
        auto r = dyson_integration_check(k, 3, k.native_quad, probes);
        CHECK(r.max_rel_deviation < 1e-6);
    }

    SUBCASE("gse m = 2") {
        Kernel g = gse(2);
        std::vector<std::vector<Point>> probes;
        for (int t = 0; t < 5; ++t) probes.push_back({Point::real(rng.uniform(-2, 2))});
        auto r = dyson_integration_check(g, 2, g.native_quad, probes);
        CHECK(r.max_rel_deviation < 1e-5);
    }
}

TEST_CASE("reproducing check") {
    Philox rng(11, 0);
    Kernel k = circular_symplectic(3);
    std::vector<std::pair<Point, Point>> pairs;
    for (int t = 0; t < 10; ++t)
        pairs.push_back({Point::angle(rng.uniform(-pi, pi)), Point::angle(rng.uniform(-pi, pi))});

    auto r = reproducing_check(k, k.native_quad, pairs);
    CHECK(r.form == ReproducingForm::Projection);
    CHECK(r.dev_projection < 1e-10);

    Kernel zero = k;
    zero.eval_core = [](const Point&, const Point&) { return Quaternion{}; };
    CHECK(reproducing_check(zero, k.native_quad, pairs).form == ReproducingForm::Projection);

    Kernel halfk = k;
    halfk.eval_core = [base = k.eval_core](const Point& x, const Point& y) { return 0.5 * base(x, y); };
    CHECK(reproducing_check(halfk, k.native_quad, pairs).form == ReproducingForm::Neither);

    Kernel g = gse(2);
    std::vector<std::pair<Point, Point>> lp;
    for (int t = 0; t < 10; ++t) lp.push_back({Point::real(rng.uniform(-2, 2)), Point::real(rng.uniform(-2, 2))});
    auto rg = reproducing_check(g, g.native_quad, lp);
    CHECK(rg.form == ReproducingForm::Projection);  // orthonormal chi make it a true projection
}

TEST_CASE("restricted spectrum") {
    SUBCASE("full domain returns the diagonal-form eigenvalues") {
        Kernel k = circular_symplectic(3);
        auto ev = restricted_spectrum(k, -pi, pi);
        REQUIRE(ev.size() == 3);
        for (cplx l : ev) CHECK(std::abs(l - 1.0) < 1e-12);
    }

    SUBCASE("cse:2 half circle: real eigenvalues inside [0,1] (the proved case)") {
        Kernel k = circular_symplectic(2);
        auto ev = restricted_spectrum(k, -pi / 2, pi / 2);
        for (cplx l : ev) {
            CHECK(std::abs(l.imag()) < 1e-8);
            CHECK(l.real() > -1e-8);
            CHECK(l.real() < 1.0 + 1e-8);
        }
        // mean count over the half circle is N/2
        double sum = 0;
        for (cplx l : ev) sum += l.real();
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    }

    SUBCASE("random-arc survey at N in {3,4,6}") {
        Philox rng(13, 0);
        for (int N : {3, 4, 6}) {
            Kernel k = circular_symplectic(N);
            for (int t = 0; t < 10; ++t) {
                double len = rng.uniform(0.3, 2 * pi - 0.3);
                double lo = rng.uniform(-pi, pi - len);
                for (cplx l : restricted_spectrum(k, lo, lo + len)) {
                    CHECK(std::abs(l.imag()) <= 1e-8);
                    CHECK(l.real() >= -1e-8);
                    CHECK(l.real() <= 1.0 + 1e-8);
                }
            }
        }
    }

    SUBCASE("N x N gram route coincides with the 2N x 2N K G K factor route") {
        int N = 2;
        double lo = -pi / 2, hi = pi / 2;
        Kernel k = circular_symplectic(N);
        auto small = restricted_spectrum(k, lo, hi);

        // basis gram over the arc with the same clipped rule
        QuadratureRule d = clip(k.native_quad, lo, hi);
        auto f = [](int idx, double ang) {
            double p = idx / 2 + 0.5;
            return (idx % 2 ? std::sin(p * ang) : std::cos(p * ang)) / std::sqrt(pi);
        };
        QuaternionMatrix gram(2 * N, 2 * N);
        for (int a = 0; a < 2 * N; ++a)
            for (int b = 0; b < 2 * N; ++b) {
                double s = 0;
                for (size_t i = 0; i < d.size(); ++i) s += d.weights[i] * f(a, d.nodes[i]) * f(b, d.nodes[i]);
                gram.at(a, b) = s;
            }
        QuaternionMatrix kb = circular_symplectic_block_matrix(N);
        auto big = selfdual_eigenvalues(kb * gram * kb);
        std::sort(big.begin(), big.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
        std::sort(small.begin(), small.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
        // of the 2N values, N are structural zeros and N match the gram route
        for (int i = 0; i < N; ++i) CHECK(std::abs(big[i]) < 1e-10);
        for (int i = 0; i < N; ++i) CHECK(std::abs(big[N + i] - small[i]) < 1e-9);
    }
}

TEST_CASE("diagonal form check classifications") {
    auto gq = diagonal_form_check(ginibre_quaternion(3));
    CHECK(gq.has_form);
    CHECK(gq.is_quasi_real);
    CHECK(gq.is_real_form);

    auto cse = diagonal_form_check(circular_symplectic(2));
    CHECK(cse.has_form);
    CHECK(cse.is_quasi_real);
    CHECK(!cse.is_real_form);  // a_p has a complex bi coefficient

    auto nq = diagonal_form_check(finite_kernel(example_nonquasireal()));
    CHECK(nq.has_form);
    CHECK(!nq.is_quasi_real);

    auto none = diagonal_form_check(restrict_kernel(circular_symplectic(2), -1, 1));
    CHECK(!none.has_form);

    auto gse_rep = diagonal_form_check(gse(2));
    CHECK(gse_rep.has_form);
    CHECK(gse_rep.is_quasi_real);
    CHECK(gse_rep.lambdas_in_unit_interval);
}

TEST_CASE("complete positivity check") {
    Philox rng(17, 0);

    // cse:2 over random configurations: no negative subset determinant
    {
        Kernel k = circular_symplectic(2);
        std::vector<std::vector<Point>> trials;
        for (int t = 0; t < 200; ++t) {
            std::vector<Point> cfg;
            int m = 1 + int(rng.next_below(4));
            for (int i = 0; i < m; ++i) cfg.push_back(Point::angle(rng.uniform(-pi, pi)));
            trials.push_back(cfg);
        }
        auto rep = complete_positivity_check(k, trials);
        CHECK(rep.min_value >= -1e-9);
    }

    // the third example fails at the singleton subset, point 2
    {
        Kernel neg = finite_kernel(example_negative_r1());
        REQUIRE(neg.diag.has_value());
        std::vector<std::vector<Point>> trials{{Point::index(0)}, {Point::index(1)}, {Point::index(0), Point::index(1)}};
        auto rep = complete_positivity_check(neg, trials);
        CHECK(rep.min_value == doctest::Approx(-1.0 / 3.0).epsilon(1e-9));
        REQUIRE(rep.worst_subset.size() == 1);
        CHECK(rep.worst_config.size() == 1);
        CHECK(int(rep.worst_config[0].x0() + 0.5) == 1);
    }

    // a rank-1 real-form kernel keeps every subset determinant nonnegative
    {
        QuaternionMatrix m(2, 2);
        Quaternion u0{0.8}, u1{0.3, 0.2, -0.4, 0.1};
        m.at(0, 0) = u0 * u0.conj();
        m.at(0, 1) = u0 * u1.conj();
        m.at(1, 0) = u1 * u0.conj();
        m.at(1, 1) = u1 * u1.conj();
        Kernel k = finite_kernel(m);
        REQUIRE(k.diag.has_value());
        std::vector<std::vector<Point>> trials{{Point::index(0)}, {Point::index(1)}, {Point::index(0), Point::index(1)}};
        auto rep = complete_positivity_check(k, trials);
        CHECK(rep.min_value >= -1e-10);
    }
}

TEST_CASE("bernoulli count distribution") {
    auto ones = bernoulli_count_distribution(std::vector<cplx>{1.0, 1.0, 1.0, 1.0});
    REQUIRE(ones.pmf.size() == 5);
    CHECK(ones.pmf[4] == doctest::Approx(1.0));
    CHECK(ones.mean == doctest::Approx(4.0));
    CHECK(ones.variance == doctest::Approx(0.0));

    auto coins = bernoulli_count_distribution(std::vector<cplx>{0.5, 0.5});
    CHECK(coins.pmf[0] == doctest::Approx(0.25));
    CHECK(coins.pmf[1] == doctest::Approx(0.5));
    CHECK(coins.pmf[2] == doctest::Approx(0.25));

    CHECK_THROWS_AS(bernoulli_count_distribution(std::vector<cplx>{1.2}), std::invalid_argument);
    CHECK_THROWS_AS(bernoulli_count_distribution(std::vector<cplx>{cplx(0.5, 0.3)}), std::invalid_argument);

    // characteristic function matches the eigenvalue product
    Kernel k = circular_symplectic(3);
    auto spec = restricted_spectrum(k, -pi / 2, pi / 2);
    auto d = bernoulli_count_distribution(spec);
    for (double t : {0.3, 1.1, 2.9}) {
        cplx prod = 1.0;
        for (cplx l : spec) prod *= 1.0 + (std::exp(cplx(0, t)) - 1.0) * l;
        CHECK(std::abs(prod - d.char_function(t)) < 1e-10);
    }
    // moment identities E N = sum l, Var = sum l (1-l)
    double mean_pmf = 0, var_pmf = 0;
    for (size_t i = 0; i < d.pmf.size(); ++i) mean_pmf += double(i) * d.pmf[i];
    for (size_t i = 0; i < d.pmf.size(); ++i) var_pmf += (double(i) - mean_pmf) * (double(i) - mean_pmf) * d.pmf[i];
    CHECK(mean_pmf == doctest::Approx(d.mean).epsilon(1e-12));
    CHECK(var_pmf == doctest::Approx(d.variance).epsilon(1e-10));
}

TEST_CASE("counting identities by quadrature: EN and EN(N-1) on the circle") {
    for (int N : {2, 3}) {
        Kernel k = circular_symplectic(N);
        const auto& q = k.native_quad;
        double en = 0;
        for (size_t i = 0; i < q.size(); ++i)
            en += q.weights[i] * correlation_value(k, {Point::angle(q.nodes[i])});
        CHECK(en == doctest::Approx(double(N)).epsilon(1e-10));

        // E N(N-1) = double integral of R2 (64-node grid keeps it exact)
        QuadratureRule c64 = circle_trapezoid(64);
        double enn = 0;
        for (size_t i = 0; i < c64.size(); ++i)
            for (size_t j = 0; j < c64.size(); ++j)
                enn += c64.weights[i] * c64.weights[j] *
                       correlation_value(k, {Point::angle(c64.nodes[i]), Point::angle(c64.nodes[j])});
        CHECK(enn == doctest::Approx(double(N) * (N - 1)).epsilon(1e-8));
    }
}

TEST_CASE("scalarity residual stays small on every shipped kernel") {
    Philox rng(23, 0);
    auto probe = [&](const Kernel& k, auto make_point) {
        for (int m = 1; m <= 3; ++m)
            for (int t = 0; t < 10; ++t) {
                std::vector<Point> pts;
                for (int i = 0; i < m; ++i) pts.push_back(make_point());
                CorrelationResult r = correlation(k, pts);
                double scale = 1.0 + std::abs(r.value);
                CHECK(r.gram_defect <= 1e-10 * scale);
                CHECK(r.imag_residual <= 1e-9 * scale);
            }
    };
    probe(circular_symplectic(3), [&] { return Point::angle(rng.uniform(-pi, pi)); });
    probe(gse(2), [&] { return Point::real(rng.uniform(-2, 2)); });
    probe(ginibre_quaternion(3), [&] {
        return Point::quat(0.5 * rng.normal(), 0.5 * rng.normal(), 0.5 * rng.normal(), 0.5 * rng.normal());
    });
    probe(bergman_quaternion(3), [&] {
        return Point::quat(0.4 * rng.uniform01(), 0.4 * rng.uniform01(), 0.4 * rng.uniform01(),
                           0.4 * rng.uniform01());
    });
    probe(finite_kernel(example_nonquasireal()), [&] { return Point::index(int(rng.next_below(2))); });
}

TEST_CASE("restricted spectrum requires a diagonal form; probes validate size") {
    Kernel bare = restrict_kernel(circular_symplectic(2), -1.0, 1.0);
    CHECK_THROWS_AS(restricted_spectrum(bare, -0.5, 0.5), std::invalid_argument);
    Kernel k = circular_symplectic(2);
    CHECK_THROWS_AS(dyson_integration_check(k, 2, k.native_quad, {{Point::angle(0.1), Point::angle(0.2)}}),
                    std::invalid_argument);
}

TEST_CASE("report objects serialize with the full field set") {
    Kernel k = circular_symplectic(2);
    Philox rng(19, 0);
    std::vector<std::vector<Point>> probes{{Point::angle(0.4)}};
    auto dy = dyson_integration_check(k, 2, k.native_quad, probes);
    auto j = to_json(dy, k.descriptor, 2, 1e-6);
    for (const char* field : {"operation", "kernel", "parameters", "values", "residuals", "tolerances", "pass"})
        CHECK(j.contains(field));
    CHECK(j["pass"] == true);

    std::vector<std::pair<Point, Point>> pairs{{Point::angle(0.1), Point::angle(-0.7)}};
    auto rj = to_json(reproducing_check(k, k.native_quad, pairs), k.descriptor, 1e-8);
    CHECK(rj["values"]["form"] == "projection");

    auto dj = to_json(diagonal_form_check(k), k.descriptor, 1e-8);
    CHECK(dj["values"]["is_quasi_real"] == true);
    CHECK(dj["values"]["is_real_form"] == false);

    auto pj = to_json(complete_positivity_check(finite_kernel(example_negative_r1()),
                                                {{Point::index(1)}}),
                      "finite:n=2", 1e-9);
    CHECK(pj["pass"] == false);
    CHECK(double(pj["values"]["min_value"]) < -0.3);
}

TEST_CASE("clt diagnostic") {
    // restricted cse spectra: distances decrease as the variance grows
    std::vector<std::vector<double>> spectra;
    for (int N : {4, 8, 16, 32}) {
        auto ev = restricted_spectrum(circular_symplectic(N), -pi / 2, pi / 2);
        std::vector<double> s;
        for (cplx l : ev) s.push_back(std::clamp(l.real(), 0.0, 1.0));
        spectra.push_back(s);
    }
    auto rep = clt_diagnostic(spectra);
    CHECK(rep.distances_non_increasing);
    for (size_t i = 1; i < rep.variances.size(); ++i) CHECK(rep.variances[i] > rep.variances[i - 1]);

    // zero-variance spectrum is rejected
    CHECK_THROWS_AS(clt_diagnostic({{1.0}}), std::invalid_argument);

    // binomial Berry-Esseen-rate sanity: KS ~ O(r^{-1/2}) for fair coins
    std::vector<double> ks;
    for (int r : {4, 16, 64}) {
        auto d = bernoulli_count_distribution(std::vector<cplx>(r, cplx(0.5)));
        ks.push_back(kolmogorov_to_gaussian(d));
    }
    CHECK(ks[1] < ks[0]);
    CHECK(ks[2] < ks[1]);
    CHECK(ks[1] == doctest::Approx(ks[0] / 2.0).epsilon(0.35));  // halves when r quadruples
    CHECK(ks[2] == doctest::Approx(ks[1] / 2.0).epsilon(0.35));
}
