#include "pfq/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pfq/cauchy_binet.hpp"
#include "pfq/determinants.hpp"
#include "pfq/kernels.hpp"
#include "pfq/pointfield.hpp"

namespace pfq {

using std::numbers::pi;

Quaternion random_quaternion(Philox& rng, bool real_coeffs) {
    auto coeff = [&]() { return real_coeffs ? cplx(rng.uniform(-1, 1)) : cplx(rng.uniform(-1, 1), rng.uniform(-1, 1)); };
    return {coeff(), coeff(), coeff(), coeff()};
}

QuaternionMatrix random_matrix(Philox& rng, int rows, int cols, bool real_coeffs) {
    QuaternionMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = random_quaternion(rng, real_coeffs);
    return m;
}

QuaternionMatrix random_selfdual(Philox& rng, int n, bool real_coeffs) {
    QuaternionMatrix m = random_matrix(rng, n, n, real_coeffs);
    return (m + dual(m)).scaled(0.5);
}

ComplexMatrix random_skew(Philox& rng, int n) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            m(i, j) = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
            m(j, i) = -m(i, j);
        }
    return m;
}

QuaternionMatrix example_selfdual_det0() {
    Quaternion a{0.0, cplx(0.0, 0.75), -1.25, 0.0};  // (3i bi - 5 bj) / 4
    QuaternionMatrix k(2, 2);
    k.at(0, 0) = 0.5;
    k.at(0, 1) = -0.5 * a;
    k.at(1, 0) = 0.5 * a;
    k.at(1, 1) = 0.5;
    return k;
}

QuaternionMatrix example_selfdual_det1() {
    Quaternion a{0.0, cplx(0.0, 1.0), -1.0, 0.0};  // i bi - bj
    QuaternionMatrix k(2, 2);
    k.at(0, 0) = 1.0;
    k.at(0, 1) = a;
    k.at(1, 0) = -a;
    k.at(1, 1) = 1.0;
    return k;
}

QuaternionMatrix example_negative_r1() {
    QuaternionMatrix k(2, 2);
    k.at(0, 0) = cplx(4.0 / 3.0);
    k.at(0, 1) = cplx(0.0, 2.0 / 3.0);
    k.at(1, 0) = cplx(0.0, 2.0 / 3.0);
    k.at(1, 1) = cplx(-1.0 / 3.0);
    return k;
}

QuaternionMatrix example_nonquasireal() {
    Quaternion a{cplx(1.0, 2.0), cplx(1.9, -20.0 / 19.0), 0.0, 0.0};
    QuaternionMatrix k(2, 2);
    k.at(0, 0) = 0.5;
    k.at(0, 1) = 0.5 * a;
    k.at(1, 0) = 0.5 * a.conj();
    k.at(1, 1) = 0.5;
    return k;
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

double rel_dev(cplx a, cplx b) { return std::abs(a - b) / (1.0 + std::abs(a)); }

}  // namespace

RunReport verify_algebra(int trials, std::uint64_t seed) {
    Timer timer;
    RunReport rep;
    rep.command = "verify algebra";
    rep.seed = seed;
    rep.parameters = {{"trials", trials}};
    Philox rng(seed, 0);

    const Quaternion qi = Quaternion::unit_i(), qj = Quaternion::unit_j(), qk = Quaternion::unit_k();
    rep.add_residual("unit_table.ij=k", (qi * qj - qk).max_abs(), 0.0);
    rep.add_residual("unit_table.jk=i", (qj * qk - qi).max_abs(), 0.0);
    rep.add_residual("unit_table.ki=j", (qk * qi - qj).max_abs(), 0.0);
    rep.add_residual("unit_table.ji=-k", (qj * qi + qk).max_abs(), 0.0);
    rep.add_residual("unit_table.kj=-i", (qk * qj + qi).max_abs(), 0.0);
    rep.add_residual("unit_table.ik=-j", (qi * qk + qj).max_abs(), 0.0);
    rep.add_residual("unit_table.squares=-1",
                     std::max({(qi * qi + Quaternion{1.0}).max_abs(), (qj * qj + Quaternion{1.0}).max_abs(),
                               (qk * qk + Quaternion{1.0}).max_abs()}),
                     0.0);

    Quaternion ap = cse_a(0.5);
    rep.add_residual("fixture.a_half_squared_plus_one", (ap * ap + Quaternion{1.0}).max_abs(), 1e-15);
    Quaternion half_i{cplx(0.0, 0.5)};
    rep.add_residual("fixture.scalar_i_half_selfconj", (half_i.conj() - half_i).max_abs(), 0.0);
    const cplx im(0.0, 1.0);
    Complex2x2 pk = phi(qk);
    rep.add_residual("fixture.phi_k", (pk - Complex2x2{im, 0.0, 0.0, -im}).max_abs(), 0.0);
    rep.add_residual("fixture.phi_one", (phi(Quaternion{1.0}) - Complex2x2::identity()).max_abs(), 0.0);

    double conj_dev = 0, anti_dev = 0, hom_dev = 0, adj_dev = 0, round_dev = 0, norm_dev = 0, id_dev = 0;
    for (int t = 0; t < trials; ++t) {
        Quaternion p = random_quaternion(rng, false), q = random_quaternion(rng, false);
        conj_dev = std::max(conj_dev, (q.conj().conj() - q).max_abs());
        anti_dev = std::max(anti_dev, ((p * q).conj() - q.conj() * p.conj()).max_abs());
        hom_dev = std::max(hom_dev, (phi(p * q) - phi(p) * phi(q)).max_abs());
        adj_dev = std::max(adj_dev, (phi(q.conj()) - phi(q).adjugate()).max_abs());
        round_dev = std::max(round_dev, (phi_inv(phi(q)) - q).max_abs());
        id_dev = std::max(id_dev, (Quaternion{1.0} * q - q).max_abs());
        Quaternion r = random_quaternion(rng, true);
        Quaternion nrm = r * r.conj();
        Quaternion expect{r.s * r.s + r.x * r.x + r.y * r.y + r.z * r.z};
        norm_dev = std::max(norm_dev, (nrm - expect).max_abs());
    }
    rep.add_residual("property.conj_involution", conj_dev, 0.0);
    rep.add_residual("property.conj_antihomomorphism", anti_dev, 1e-14);
    rep.add_residual("property.phi_homomorphism", hom_dev, 1e-12);
    rep.add_residual("property.phi_conj_adjugate", adj_dev, 1e-13);
    rep.add_residual("property.phi_roundtrip", round_dev, 1e-14);
    rep.add_residual("property.identity_element", id_dev, 0.0);
    rep.add_residual("property.real_norm_scalar", norm_dev, 1e-14);

    rep.wall_seconds = timer.seconds();
    return rep;
}

RunReport verify_determinants(int trials, std::uint64_t seed) {
    Timer timer;
    RunReport rep;
    rep.command = "verify determinants";
    rep.seed = seed;
    rep.parameters = {{"trials", trials}};
    Philox rng(seed, 1);

    // the four worked 2x2 examples
    rep.add_residual("fixture.det0.cayley", moore_dyson_cayley(example_selfdual_det0()).max_abs(), 1e-12);
    rep.add_residual("fixture.det0.pfaffian", std::abs(moore_dyson_pfaffian(example_selfdual_det0())), 1e-12);
    rep.add("fixture.det1.cayley", moore_dyson_cayley(example_selfdual_det1()).s.real(), 1.0, 1e-12);
    rep.add("fixture.det1.pfaffian", moore_dyson_pfaffian(example_selfdual_det1()).real(), 1.0, 1e-12);
    const double det4 = 0.3745083102493075;  // (1 - Re(s^2 + x^2)) / 4 for the fourth example
    rep.add("fixture.detM_0.3745", moore_dyson_pfaffian(example_nonquasireal()).real(), det4, 1e-3);
    rep.add_residual("fixture.detM_0.3745.exact_dev",
                     std::abs(moore_dyson_pfaffian(example_nonquasireal()) - cplx(det4)), 1e-12);

    {
        auto ev = selfdual_eigenvalues(example_negative_r1());
        std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
        rep.add("fixture.eigs_1_0.low", ev[0].real(), 0.0, 1e-10);
        rep.add("fixture.eigs_1_0.high", ev[1].real(), 1.0, 1e-10);
        QuaternionMatrix sub(1, 1);
        sub.at(0, 0) = example_negative_r1().at(1, 1);
        rep.add("fixture.R1_point2", moore_dyson_cayley(sub).s.real(), -1.0 / 3.0, 1e-12);
    }
    {
        auto ev = selfdual_eigenvalues(example_nonquasireal());
        std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) { return a.imag() < b.imag(); });
        rep.add("fixture.eigs_complex.re", ev[0].real(), 0.5, 1e-3);
        rep.add("fixture.eigs_complex.im", std::abs(ev[0].imag()), 0.3529, 1e-3);
        rep.add("fixture.eigs_complex.conjugate_pair", ev[0].imag() + ev[1].imag(), 0.0, 1e-10);
    }

    // identity: eigenvalues all one
    {
        auto ev = selfdual_eigenvalues(QuaternionMatrix::identity(4));
        double dev = 0;
        for (auto l : ev) dev = std::max(dev, std::abs(l - cplx(1.0)));
        rep.add_residual("fixture.identity_eigenvalues", dev, 1e-12);
    }

    double scal_dev = 0, route_cayley_pf = 0, route_pf_psi = 0, route_pf_eig = 0, study_dev = 0, mult_dev = 0;
    for (int t = 0; t < trials; ++t) {
        int n = 2 + int(rng.next_below(4));  // 2..5
        QuaternionMatrix xc = random_selfdual(rng, n, false);
        Quaternion cay = moore_dyson_cayley(xc);
        scal_dev = std::max(scal_dev, cay.vector_abs());
        route_cayley_pf = std::max(route_cayley_pf, rel_dev(cay.s, moore_dyson_pfaffian(xc)));

        QuaternionMatrix xr = random_selfdual(rng, n, true);
        cplx pf = moore_dyson_pfaffian(xr);
        route_cayley_pf = std::max(route_cayley_pf, rel_dev(moore_dyson_cayley(xr).s, pf));
        route_pf_psi = std::max(route_pf_psi, rel_dev(pf, moore_dyson_psi(xr)));
        cplx prod = 1.0;
        for (cplx l : selfdual_eigenvalues(xr)) prod *= l;
        route_pf_eig = std::max(route_pf_eig, rel_dev(pf, prod));

        QuaternionMatrix a = random_matrix(rng, n, n, false);
        study_dev = std::max(study_dev, rel_dev(study_det(a), moore_dyson_pfaffian(dual(a) * a)));
        QuaternionMatrix b = random_matrix(rng, n, n, false);
        mult_dev = std::max(mult_dev, rel_dev(study_det(a * b), study_det(a) * study_det(b)));
    }
    rep.add_residual("property.selfdual_scalarity", scal_dev, 1e-10);
    rep.add_residual("property.route.cayley_vs_pfaffian", route_cayley_pf, 1e-8);
    rep.add_residual("property.route.pfaffian_vs_psi", route_pf_psi, 1e-8);
    rep.add_residual("property.route.pfaffian_vs_eigenproduct", route_pf_eig, 1e-8);
    rep.add_residual("property.study_equals_detM_gram", study_dev, 1e-9);
    rep.add_residual("property.study_multiplicative", mult_dev, 1e-9);

    // Pfaffian: base cases and elimination-vs-combinatorial conformance
    {
        ComplexMatrix base(2, 2);
        base << 0.0, 1.0, -1.0, 0.0;
        rep.add("fixture.pf_base", pfaffian(base).real(), 1.0, 1e-15);
        cplx c(0.7, -0.3);
        ComplexMatrix blocks = ComplexMatrix::Zero(6, 6);
        for (int b = 0; b < 3; ++b) {
            blocks(2 * b, 2 * b + 1) = c;
            blocks(2 * b + 1, 2 * b) = -c;
        }
        rep.add_residual("fixture.pf_blockdiag_c_cubed", std::abs(pfaffian(blocks) - c * c * c), 1e-14);
        rep.add_residual("fixture.pf_1x1_scalar",
                         std::abs(moore_dyson_pfaffian([] {
                             QuaternionMatrix m(1, 1);
                             m.at(0, 0) = cplx(0.25, -2.0);
                             return m;
                         }()) - cplx(0.25, -2.0)),
                         1e-15);
        double elim_dev = 0, sq_dev = 0;
        for (int n : {2, 4, 6, 8}) {
            int reps = std::max(1, trials / 4);
            for (int t = 0; t < reps; ++t) {
                ComplexMatrix m = random_skew(rng, n);
                elim_dev = std::max(elim_dev, rel_dev(pfaffian_combinatorial(m), pfaffian(m)));
                cplx pf = pfaffian(m);
                sq_dev = std::max(sq_dev, rel_dev(m.determinant(), pf * pf));
            }
        }
        rep.add_residual("property.pf_elimination_vs_combinatorial", elim_dev, 1e-10);
        rep.add_residual("property.pf_squared_is_det", sq_dev, 1e-9);
    }

    rep.wall_seconds = timer.seconds();
    return rep;
}

RunReport verify_cauchy_binet(int trials, std::uint64_t seed) {
    Timer timer;
    RunReport rep;
    rep.command = "verify cauchy-binet";
    rep.seed = seed;
    rep.parameters = {{"trials", trials}};
    Philox rng(seed, 2);

    {
        QuaternionMatrix c = random_matrix(rng, 3, 3, false);
        auto s = cauchy_binet_sides(c);
        rep.add_residual("fixture.n_equals_m_single_subset", rel_dev(s.lhs, s.rhs), 1e-10);

        QuaternionMatrix zr = random_matrix(rng, 3, 2, false);
        zr.at(1, 0) = zr.at(1, 1) = Quaternion{};
        auto sz = cauchy_binet_sides(zr);
        rep.add_residual("fixture.zero_row", rel_dev(sz.lhs, sz.rhs), 1e-9);

        QuaternionMatrix c42 = random_matrix(rng, 4, 2, true);
        auto s42 = cauchy_binet_sides(c42);
        rep.add_residual("fixture.real_4x2", rel_dev(s42.lhs, s42.rhs), 1e-9);

        // weighted fixtures
        auto sw = cauchy_binet_weighted_sides(c42, {1.0, 1.0, 1.0, 1.0});
        rep.add_residual("fixture.weights_all_one_lhs", rel_dev(sw.lhs, s42.lhs), 1e-10);
        rep.add_residual("fixture.weights_all_one_rhs", rel_dev(sw.rhs, s42.rhs), 1e-10);

        QuaternionMatrix c1 = random_matrix(rng, 3, 1, false);
        auto s1 = cauchy_binet_weighted_sides(c1, {cplx(0.8, 0.1), 0.0, 0.0});
        QuaternionMatrix first(1, 1);
        first.at(0, 0) = c1.at(0, 0);
        cplx expect = cplx(0.8, 0.1) * moore_dyson_pfaffian(dual(first) * first);
        rep.add_residual("fixture.single_surviving_term", rel_dev(s1.lhs, expect), 1e-10);
        rep.add_residual("fixture.single_surviving_term_rhs", rel_dev(s1.rhs, expect), 1e-10);

        QuaternionMatrix c52 = random_matrix(rng, 5, 2, false);
        std::vector<cplx> lam5;
        for (int i = 0; i < 5; ++i) lam5.push_back(rng.uniform(-1, 1));
        auto s52 = cauchy_binet_weighted_sides(c52, lam5);
        rep.add_residual("fixture.weighted_5x2_real_weights", rel_dev(s52.lhs, s52.rhs), 1e-9);

        // permutation invariance of both sides
        QuaternionMatrix perm = c42.select_rows({2, 0, 3, 1});
        auto sp = cauchy_binet_sides(perm);
        rep.add_residual("fixture.row_permutation_lhs", rel_dev(s42.lhs, sp.lhs), 1e-9);
        rep.add_residual("fixture.row_permutation_rhs", rel_dev(s42.rhs, sp.rhs), 1e-9);
    }

    double plain_dev = 0, weighted_dev = 0;
    for (int t = 0; t < trials; ++t) {
        int n = 2 + int(rng.next_below(5));                        // 2..6
        int m = 1 + int(rng.next_below(std::min(n, 4)));           // 1..min(n,4)
        QuaternionMatrix c = random_matrix(rng, n, m, false);
        auto s = cauchy_binet_sides(c);
        plain_dev = std::max(plain_dev, rel_dev(s.lhs, s.rhs));

        std::vector<cplx> lam;
        for (int i = 0; i < n; ++i) lam.push_back(cplx(rng.uniform(-1, 1), rng.uniform(-1, 1)));
        auto w = cauchy_binet_weighted_sides(c, lam);
        weighted_dev = std::max(weighted_dev, rel_dev(w.lhs, w.rhs));
    }
    rep.add_residual("property.cauchy_binet", plain_dev, 1e-8);
    rep.add_residual("property.cauchy_binet_weighted", weighted_dev, 1e-8);

    rep.wall_seconds = timer.seconds();
    return rep;
}

namespace {

Point random_point(Philox& rng, const Kernel& k) {
    switch (k.domain) {
        case Domain::Circle: return Point::angle(rng.uniform(-pi, pi));
        case Domain::Line: return Point::real(rng.uniform(-3, 3));
        case Domain::Finite: return Point::index(int(rng.next_below(std::uint64_t(k.hi))));
        case Domain::ComplexPlane: return Point::complex_z({rng.normal(), rng.normal()});
        case Domain::QuaternionSpace: return Point::quat(rng.normal(), rng.normal(), rng.normal(), rng.normal());
        case Domain::QuaternionBall: {
            Point p = Point::quat(rng.normal(), rng.normal(), rng.normal(), rng.normal());
            double r = p.abs4();
            double target = std::pow(rng.uniform01(), 0.25);
            for (auto& v : p.v) v *= target / r;
            return p;
        }
    }
    throw std::logic_error("random_point");
}

double selfduality_sample(const Kernel& k, Philox& rng, int pairs) {
    double dev = 0;
    for (int t = 0; t < pairs; ++t) {
        Point x = random_point(rng, k), y = random_point(rng, k);
        Quaternion kxy = k.eval(x, y);
        dev = std::max(dev, (k.eval(y, x) - kxy.conj()).max_abs() / (1.0 + kxy.max_abs()));
    }
    return dev;
}

}  // namespace

RunReport verify_kernels(int trials, std::uint64_t seed) {
    Timer timer;
    RunReport rep;
    rep.command = "verify kernels";
    rep.seed = seed;
    rep.parameters = {{"trials", trials}};
    Philox rng(seed, 3);
    const int pairs = std::max(100, trials);

    // self-duality sampling across every constructor
    for (const char* desc : {"cse:N=3", "gse:N=2", "ginibre-q:n=4", "bergman-q:n=4", "pfaffian-ginibre-c:N=3"}) {
        Kernel k = parse_kernel(desc);
        rep.add_residual(std::string("selfdual.") + desc, selfduality_sample(k, rng, pairs), 1e-10);
    }
    rep.add_residual("selfdual.finite_example4", selfduality_sample(finite_kernel(example_nonquasireal()), rng, 20), 1e-12);

    // sigma_N4 facts
    {
        int N = 4;
        Quaternion s0 = sigma_n4(N, 0.0);
        rep.add("fixture.sigma0_scalar", s0.s.real(), N / (2.0 * pi), 1e-12);
        rep.add_residual("fixture.sigma0_vector_part", s0.vector_abs(), 1e-14);
        double conj_dev = 0;
        for (int t = 0; t < 50; ++t) {
            double th = rng.uniform(-pi, pi);
            conj_dev = std::max(conj_dev, (sigma_n4(N, -th) - sigma_n4(N, th).conj()).max_abs());
        }
        rep.add_residual("property.sigma_reflection_conj", conj_dev, 1e-13);
        Quaternion a_half = cse_a(0.5);
        Quaternion expect{0.0, cplx(0.0, -0.75), 1.25, 0.0};
        rep.add_residual("fixture.a_half_value", (a_half - expect).max_abs(), 1e-15);

        QuaternionMatrix K = circular_symplectic_block_matrix(N);
        rep.add_residual("fixture.block_selfdual", selfdual_defect(K), 1e-15);
        rep.add_residual("fixture.block_idempotent", [&] {
            QuaternionMatrix d = K * K - K;
            double dev = 0;
            for (int i = 0; i < d.rows(); ++i)
                for (int j = 0; j < d.cols(); ++j) dev = std::max(dev, d.at(i, j).max_abs());
            return dev;
        }(), 1e-10);
        double bdet = 0;
        for (int j = 0; j < N; ++j) {
            QuaternionMatrix blk(2, 2);
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) blk.at(a, b) = K.at(2 * j + a, 2 * j + b);
            bdet = std::max(bdet, std::abs(moore_dyson_pfaffian(blk)));
        }
        rep.add_residual("fixture.block_det_zero", bdet, 1e-14);
        auto ev = selfdual_eigenvalues(K);
        std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
        double evdev = 0;
        for (int i = 0; i < N; ++i) evdev = std::max(evdev, std::abs(ev[i]));
        for (int i = N; i < 2 * N; ++i) evdev = std::max(evdev, std::abs(ev[i] - cplx(1.0)));
        rep.add_residual("fixture.block_eigen_N_ones_N_zeros", evdev, 1e-10);

        // kernel value vs the basis-function contraction of the block matrix
        double rep_dev = 0;
        for (int t = 0; t < 20; ++t) {
            double th = rng.uniform(-pi, pi), tp = rng.uniform(-pi, pi);
            Quaternion sum{};
            for (int j = 0; j < 2 * N; ++j)
                for (int l = 0; l < 2 * N; ++l) {
                    auto f = [&](int idx, double ang) {
                        double p = idx / 2 + 0.5;
                        return (idx % 2 ? std::sin(p * ang) : std::cos(p * ang)) / std::sqrt(pi);
                    };
                    sum += f(j, tp) * f(l, th) * K.at(j, l);
                }
            rep_dev = std::max(rep_dev, (sum - sigma_n4(N, th - tp)).max_abs());
        }
        rep.add_residual("property.block_matrix_represents_sigma", rep_dev, 1e-10, "identity");
    }

    // diagonal-form orthonormality + reconstruction on the native rules
    for (const char* desc : {"cse:N=3", "gse:N=2"}) {
        Kernel k = parse_kernel(desc);
        const auto& d = *k.diag;
        double gram_dev = 0;
        for (int a = 0; a < d.rank(); ++a)
            for (int b = 0; b < d.rank(); ++b) {
                Quaternion s{};
                for (size_t i = 0; i < k.native_quad.size(); ++i) {
                    Point p = Point::real(k.native_quad.nodes[i]);
                    s += k.native_quad.weights[i] * (d.funcs[a](p).conj() * d.funcs[b](p));
                }
                gram_dev = std::max(gram_dev, (s - Quaternion{a == b ? 1.0 : 0.0}).max_abs());
            }
        rep.add_residual(std::string("diag.orthonormal.") + desc, gram_dev, 1e-6, "quadrature");

        double rec_dev = 0;
        for (int t = 0; t < 25; ++t) {
            Point x = random_point(rng, k), y = random_point(rng, k);
            Quaternion s{};
            for (int a = 0; a < d.rank(); ++a) s += d.lambdas[a] * (d.funcs[a](x) * d.funcs[a](y).conj());
            rec_dev = std::max(rec_dev, (k.sw(x) * k.sw(y) * s - k.eval(x, y)).max_abs());
        }
        rep.add_residual(std::string("diag.reconstruction.") + desc, rec_dev, 1e-8, "identity");
    }

    // skew-orthogonal polynomials
    {
        int N = 4;
        auto q = skew_orthogonal_polys(N);
        bool deg_ok = true;
        for (int j = 0; j < 2 * N; ++j) deg_ok = deg_ok && q[j].degree() == j;
        rep.add_flag("skewpoly.degrees", deg_ok);
        double pair_dev = 0, zero_dev = 0;
        for (int j = 0; j < 2 * N; ++j)
            for (int l = 0; l < 2 * N; ++l) {
                double v = skew_inner(q[j], q[l]);
                if (j / 2 == l / 2 && j != l) pair_dev = std::max(pair_dev, std::abs(v - (j < l ? 1.0 : -1.0)));
                else if (j != l) zero_dev = std::max(zero_dev, std::abs(v));
            }
        rep.add_residual("skewpoly.symplectic_pairs", pair_dev, 1e-8);
        rep.add_residual("skewpoly.cross_pairs_zero", zero_dev, 1e-8);

        // quadrature oracle for <Q0,Q1> and <Q0,Q2>
        QuadratureRule gh = gauss_hermite(40);
        auto skew_quad = [&](const Polynomial& f, const Polynomial& g) {
            Polynomial fd = f.derivative(), gd = g.derivative();
            double s = 0;
            for (size_t i = 0; i < gh.size(); ++i) {
                double x = gh.nodes[i];
                s += gh.weights[i] * (f(x) * gd(x) - fd(x) * g(x));
            }
            return s;
        };
        rep.add("skewpoly.quadrature_Q0Q1", skew_quad(q[0], q[1]), 1.0, 1e-9, "quadrature");
        rep.add("skewpoly.quadrature_Q0Q2", skew_quad(q[0], q[2]), 0.0, 1e-9, "quadrature");
        rep.add("skewpoly.quadrature_Q1Q0", skew_quad(q[1], q[0]), -1.0, 1e-9, "quadrature");
    }

    // GSE kernel: trace integral and invariance under Q_{2j+1} += c Q_{2j}
    {
        Kernel k2 = gse(2);
        double tr = 0;
        for (size_t i = 0; i < k2.native_quad.size(); ++i) {
            Point p = Point::real(k2.native_quad.nodes[i]);
            tr += k2.native_quad.weights[i] * k2.eval_core(p, p).s.real();
        }
        rep.add("gse.trace_is_N", tr, 2.0, 1e-8, "quadrature");
    }

    // pfaffian Ginibre on C
    {
        int N = 3;
        double anti_dev = 0, diag_dev = 0;
        for (int t = 0; t < 50; ++t) {
            cplx u(rng.normal(), rng.normal()), v(rng.normal(), rng.normal());
            anti_dev = std::max(anti_dev, std::abs(pfaffian_ginibre_phi(N, u, v) + pfaffian_ginibre_phi(N, v, u)));
            diag_dev = std::max(diag_dev, std::abs(pfaffian_ginibre_phi(N, u, u)));
        }
        rep.add_residual("pfginibre.antisymmetry", anti_dev, 1e-12);
        rep.add_residual("pfginibre.diagonal_zero", diag_dev, 1e-14);
    }

    // Ginibre / Bergman moments
    {
        // eval(0,0) fixtures
        rep.add("ginibre.eval00", ginibre_quaternion(5).eval(Point{}, Point{}).s.real(), 1.0, 1e-14);
        rep.add("bergman.eval00", bergman_quaternion(5).eval(Point{}, Point{}).s.real(), 2.0, 1e-14);

        // positivity of R1 for ginibre at random points
        Kernel g = ginibre_quaternion(4);
        double min_r1 = std::numeric_limits<double>::infinity();
        for (int t = 0; t < pairs; ++t) {
            Point z = random_point(rng, g);
            min_r1 = std::min(min_r1, g.eval(z, z).s.real());
        }
        rep.add_flag("ginibre.diagonal_nonnegative", min_r1 >= 0.0);

        // Gram moments E[(z*)^k z^l] under the Gaussian background measure.
        // z and z* commute, so the value reduces to complex moments with the
        // chi_3 radial density: diagonal (k+1)!, and the same-parity
        // off-diagonals do NOT vanish -- E[z^2] = -1, E[z* z^3] = -3 exactly.
        // The monomial system is normalized but not orthogonal on Q.
        const long samples = std::max(200000L, long(trials) * 400L);
        double max_fail_se = 0.0;
        std::vector<std::vector<Quaternion>> acc(4, std::vector<Quaternion>(4));
        std::vector<std::vector<double>> acc2(4, std::vector<double>(4, 0.0));
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        for (long s = 0; s < samples; ++s) {
            Quaternion z{inv_sqrt2 * rng.normal(), inv_sqrt2 * rng.normal(), inv_sqrt2 * rng.normal(),
                         inv_sqrt2 * rng.normal()};
            Quaternion zc = z.conj();
            Quaternion zp[4], zcp[4];
            zp[0] = zcp[0] = Quaternion{1.0};
            for (int d = 1; d < 4; ++d) {
                zp[d] = zp[d - 1] * z;
                zcp[d] = zcp[d - 1] * zc;
            }
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    Quaternion v = zcp[a] * zp[b];
                    acc[a][b] += v;
                    acc2[a][b] += v.max_abs() * v.max_abs();
                }
        }
        const double gram_exact[4][4] = {{1, 0, -1, 0},   {0, 2, 0, -3},  // (k+1)! on the diagonal
                                         {-1, 0, 6, 0},   {0, -3, 0, 24}};
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                Quaternion mean = (1.0 / double(samples)) * acc[a][b];
                double m2 = acc2[a][b] / double(samples);
                double se = std::sqrt(std::max(0.0, m2 - mean.max_abs() * mean.max_abs()) / double(samples));
                double err = (mean - Quaternion{gram_exact[a][b]}).max_abs();
                max_fail_se = std::max(max_fail_se, err / std::max(se, 1e-12));
            }
        rep.add_residual("ginibre.mc_gram_moments_in_se_units", max_fail_se, 5.0, "MC±SE");

        // Bergman radial integral against Gauss-Legendre quadrature
        QuadratureRule gl = gauss_legendre01(24);
        double rad_dev = 0;
        for (int kk = 0; kk <= 4; ++kk) {
            double integral = 0;
            for (size_t i = 0; i < gl.size(); ++i)
                integral += gl.weights[i] * 2.0 * std::pow(gl.nodes[i], 2 * kk + 3);
            rad_dev = std::max(rad_dev, std::abs(integral - 1.0 / (kk + 2)));
        }
        rep.add_residual("bergman.radial_normalization", rad_dev, 1e-12, "quadrature");

        bool threw = false;
        try {
            bergman_quaternion(2).eval(Point::quat(1.2, 0, 0, 0), Point{});
        } catch (const std::domain_error&) {
            threw = true;
        }
        rep.add_flag("bergman.rejects_outside_ball", threw);
    }

    // restriction
    {
        Kernel k = circular_symplectic(2);
        Kernel full = restrict_kernel(k, -pi, pi);
        Kernel half = restrict_kernel(k, -pi / 2, pi / 2);
        double dev = 0;
        for (int t = 0; t < 30; ++t) {
            Point x = random_point(rng, k), y = random_point(rng, k);
            dev = std::max(dev, (full.eval(x, y) - k.eval(x, y)).max_abs());
        }
        rep.add_residual("restrict.full_domain_identity", dev, 0.0);
        rep.add_residual("restrict.outside_zero",
                         half.eval(Point::angle(2.0), Point::angle(0.1)).max_abs(), 0.0);
        double tr = 0;
        for (size_t i = 0; i < k.native_quad.size(); ++i) {
            Point p = Point::angle(k.native_quad.nodes[i]);
            tr += k.native_quad.weights[i] * half.eval(p, p).s.real();
        }
        rep.add("restrict.half_circle_trace", tr, 1.0, 1e-9, "quadrature");
    }

    rep.wall_seconds = timer.seconds();
    return rep;
}

RunReport verify_fredholm(int trials, std::uint64_t seed) {
    Timer timer;
    RunReport rep;
    rep.command = "verify fredholm";
    rep.seed = seed;
    rep.parameters = {{"trials", trials}};

    QuadratureRule circle64 = circle_trapezoid(64);

    {
        Kernel k = circular_symplectic(2);
        rep.add_residual("fredholm.scale_zero_is_one", std::abs(fredholm_det(k, 0.0, circle64).value - 1.0), 1e-12);
        // eigenvalue product over {1,1}: Det(I + sK) = (1+s)^2
        for (cplx s : {cplx(-1.0), cplx(0.5), std::exp(cplx(0, 0.7)) - 1.0}) {
            auto f = fredholm_det(k, s, circle64);
            cplx expect = (1.0 + s) * (1.0 + s);
            rep.add_residual("fredholm.cse2_eigenproduct_s=" + std::to_string(s.real()),
                             std::abs(f.value - expect), 1e-7, "quadrature");
            rep.add_residual("fredholm.cse2_tail_s=" + std::to_string(s.real()), f.tail_abs, 1e-8, "quadrature");
        }
    }

    {
        // two-point example: Det_M(I - K) = 1 - tr + Det_M(K)
        Kernel fk = finite_kernel(example_nonquasireal());
        auto f = fredholm_det(fk, -1.0, fk.native_quad, 2);
        rep.add("fredholm.finite_example4_I_minus_K", f.value.real(), 0.3745083102493075, 1e-12);
    }

    {
        Kernel k = circular_symplectic(2);
        auto c0 = char_function_count(k, 0.0, circle64);
        rep.add_residual("charfn.t0_is_one", std::abs(c0.product_route - 1.0), 1e-14);
        auto c = char_function_count(k, 0.7, circle64);
        // projection kernel: count is deterministic, phi(t) = e^{iNt}
        rep.add_residual("charfn.projection_phase", std::abs(c.product_route - std::exp(cplx(0, 2 * 0.7))), 1e-12);
        rep.add_residual("charfn.route_discrepancy", c.discrepancy, 1e-7, "quadrature");

        // lambda = 1/2: fair Bernoulli
        CountDistribution half = bernoulli_count_distribution(std::vector<cplx>{0.5});
        rep.add_residual("charfn.fair_coin_at_pi", std::abs(half.char_function(pi)), 1e-14);

        // constant f reproduces the characteristic function
        double t = 0.7;
        cplx s = std::exp(cplx(0, t)) - 1.0;
        auto ep = expected_product(k, [s](const Point&) { return s; }, circle64);
        rep.add_residual("expected_product.constant_f_matches_charfn", std::abs(ep.value - c.product_route), 1e-7,
                         "quadrature");

        auto e0 = expected_product(k, [](const Point&) { return cplx(0.0); }, circle64);
        rep.add_residual("expected_product.f_zero", std::abs(e0.value - 1.0), 1e-12);

        // hole probability on a small arc lands in (0,1)
        auto hole = expected_product(k, [](const Point& p) { return p.x0() >= 0.0 && p.x0() < 0.6 ? cplx(-1.0) : cplx(0.0); },
                                     circle64);
        rep.add_flag("expected_product.hole_probability_in_unit_interval",
                     hole.value.real() > 0.0 && hole.value.real() < 1.0 && std::abs(hole.value.imag()) < 1e-8);
    }

    {
        // Bernoulli count distribution fixtures
        CountDistribution ones = bernoulli_count_distribution(std::vector<cplx>{1.0, 1.0, 1.0});
        rep.add("count.point_mass_at_rank", ones.pmf.back(), 1.0, 1e-14);
        CountDistribution coins = bernoulli_count_distribution(std::vector<cplx>{0.5, 0.5});
        rep.add_residual("count.two_fair_coins",
                         std::abs(coins.pmf[0] - 0.25) + std::abs(coins.pmf[1] - 0.5) + std::abs(coins.pmf[2] - 0.25),
                         1e-14);
        Kernel k3 = circular_symplectic(3);
        auto spec = restricted_spectrum(k3, -pi / 2, pi / 2);
        std::vector<cplx> lam(spec.begin(), spec.end());
        CountDistribution d = bernoulli_count_distribution(lam);
        double four_dev = 0;
        for (double t : {0.3, 1.1, 2.9}) {
            cplx prod = 1.0;
            for (cplx l : lam) prod *= 1.0 + (std::exp(cplx(0, t)) - 1.0) * l;
            four_dev = std::max(four_dev, std::abs(prod - d.char_function(t)));
        }
        rep.add_residual("count.fourier_cross_check", four_dev, 1e-10);
    }

    rep.wall_seconds = timer.seconds();
    return rep;
}

RunReport verify_dyson_lemma(int trials, std::uint64_t seed) {
    Timer timer;
    RunReport rep;
    rep.command = "verify dyson-lemma";
    rep.seed = seed;
    rep.parameters = {{"trials", trials}};
    Philox rng(seed, 4);

    // reproducing forms
    {
        Kernel k = circular_symplectic(3);
        std::vector<std::pair<Point, Point>> pairs;
        for (int t = 0; t < 10; ++t) pairs.push_back({Point::angle(rng.uniform(-pi, pi)), Point::angle(rng.uniform(-pi, pi))});
        auto r = reproducing_check(k, k.native_quad, pairs);
        rep.add_flag("reproducing.cse_satisfies_projection", r.form == ReproducingForm::Projection, "quadrature");

        Kernel zero = k;
        zero.eval_core = [](const Point&, const Point&) { return Quaternion{}; };
        auto rz = reproducing_check(zero, k.native_quad, pairs);
        rep.add_flag("reproducing.zero_kernel_projection", rz.form == ReproducingForm::Projection, "quadrature");

        Kernel halfk = k;
        halfk.eval_core = [base = k.eval_core](const Point& x, const Point& y) { return 0.5 * base(x, y); };
        auto rh = reproducing_check(halfk, k.native_quad, pairs);
        rep.add_flag("reproducing.scaled_projection_fails_both", rh.form == ReproducingForm::Neither, "quadrature");

        Kernel g = gse(2);
        std::vector<std::pair<Point, Point>> lpairs;
        for (int t = 0; t < 10; ++t) lpairs.push_back({Point::real(rng.uniform(-2, 2)), Point::real(rng.uniform(-2, 2))});
        auto rg = reproducing_check(g, g.native_quad, lpairs);
        rep.add_flag("reproducing.gse_satisfies_one_form", rg.form != ReproducingForm::Neither, "quadrature");
    }

    {
        Kernel k = circular_symplectic(2);
        auto m1 = dyson_integration_check(k, 1, k.native_quad, {});
        rep.add("dyson.cse2_total_mass", m1.kernel_trace, 2.0, 1e-10, "quadrature");
        rep.add_residual("dyson.cse2_m1", m1.max_rel_deviation, 1e-8, "quadrature");

        for (int N : {2, 3}) {
            Kernel kn = circular_symplectic(N);
            std::vector<std::vector<Point>> probes;
            for (int t = 0; t < 10; ++t) probes.push_back({Point::angle(rng.uniform(-pi, pi))});
            auto m2 = dyson_integration_check(kn, 2, kn.native_quad, probes);
            rep.add_residual("dyson.cse" + std::to_string(N) + "_m2", m2.max_rel_deviation, 1e-6, "quadrature");
        }

        Kernel g = gse(2);
        std::vector<std::vector<Point>> probes;
        for (int t = 0; t < 5; ++t) probes.push_back({Point::real(rng.uniform(-2, 2))});
        auto m2 = dyson_integration_check(g, 2, g.native_quad, probes);
        rep.add_residual("dyson.gse2_m2", m2.max_rel_deviation, 1e-5, "quadrature");
    }

    rep.wall_seconds = timer.seconds();
    return rep;
}

RunReport run_suite(const std::string& name, int trials, std::uint64_t seed) {
    if (name == "algebra") return verify_algebra(trials, seed);
    if (name == "determinants") return verify_determinants(trials, seed);
    if (name == "cauchy-binet") return verify_cauchy_binet(trials, seed);
    if (name == "kernels") return verify_kernels(trials, seed);
    if (name == "fredholm") return verify_fredholm(trials, seed);
    if (name == "dyson-lemma") return verify_dyson_lemma(trials, seed);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace pfq
