#include <doctest.h>

#include "pfq/quaternion.hpp"
#include "pfq/rng.hpp"
#include "pfq/verify.hpp"

using namespace pfq;

TEST_CASE("quaternion unit table") {
    const Quaternion i = Quaternion::unit_i(), j = Quaternion::unit_j(), k = Quaternion::unit_k();
    CHECK((i * j - k).max_abs() == 0.0);
    CHECK((j * k - i).max_abs() == 0.0);
    CHECK((k * i - j).max_abs() == 0.0);
    CHECK((j * i + k).max_abs() == 0.0);
    CHECK((k * j + i).max_abs() == 0.0);
    CHECK((i * k + j).max_abs() == 0.0);
    CHECK((i * i + Quaternion{1.0}).max_abs() == 0.0);
    CHECK((j * j + Quaternion{1.0}).max_abs() == 0.0);
    CHECK((k * k + Quaternion{1.0}).max_abs() == 0.0);
}

TEST_CASE("identity element and scalar embedding") {
    Philox rng(7, 0);
    for (int t = 0; t < 20; ++t) {
        Quaternion q = random_quaternion(rng, false);
        CHECK(approx_eq(Quaternion{1.0} * q, q, 0.0));
        CHECK(approx_eq(q * Quaternion{1.0}, q, 0.0));
    }
    // scalars commute with everything
    Quaternion q = random_quaternion(rng, false);
    cplx c(0.3, -1.7);
    CHECK(approx_eq(Quaternion{c} * q, q * Quaternion{c}, 0.0));
}

TEST_CASE("a_p squares to -1 at p = 1/2") {
    Quaternion a{0.0, cplx(0.0, (0.25 - 1.0)), cplx(0.25 + 1.0), 0.0};
    CHECK((a * a + Quaternion{1.0}).max_abs() < 1e-15);
}

TEST_CASE("conjugation") {
    // scalar with complex coefficient is fixed
    Quaternion ih{cplx(0.0, 0.5)};
    CHECK(approx_eq(ih.conj(), ih, 0.0));
    CHECK(approx_eq(Quaternion::unit_i().conj(), -Quaternion::unit_i(), 0.0));

    Philox rng(11, 0);
    for (int t = 0; t < 200; ++t) {
        Quaternion p = random_quaternion(rng, false), q = random_quaternion(rng, false);
        CHECK((q.conj().conj() - q).max_abs() == 0.0);
        CHECK(((p * q).conj() - q.conj() * p.conj()).max_abs() < 1e-14);
    }
    // q q* is the scalar s^2+x^2+y^2+z^2 for real quaternions
    for (int t = 0; t < 50; ++t) {
        Quaternion q = random_quaternion(rng, true);
        Quaternion n = q * q.conj();
        CHECK(n.vector_abs() < 1e-15);
        CHECK(std::abs(n.s - (q.s * q.s + q.x * q.x + q.y * q.y + q.z * q.z)) < 1e-14);
    }
}

TEST_CASE("phi embedding fixtures") {
    const cplx I(0, 1);
    Complex2x2 pi_ = phi(Quaternion::unit_i());
    CHECK(pi_.a == cplx(0.0));
    CHECK(pi_.b == I);
    CHECK(pi_.c == I);
    CHECK(pi_.d == cplx(0.0));
    Complex2x2 pj = phi(Quaternion::unit_j());
    CHECK(pj.b == cplx(-1.0));
    CHECK(pj.c == cplx(1.0));
    Complex2x2 pk = phi(Quaternion::unit_k());
    CHECK(pk.a == I);
    CHECK(pk.d == -I);
    CHECK((phi(Quaternion{1.0}) - Complex2x2::identity()).max_abs() == 0.0);
}

TEST_CASE("phi is a ring homomorphism; phi_inv inverts; conj maps to adjugate") {
    Philox rng(13, 0);
    double hom = 0, adj = 0, rt = 0;
    for (int t = 0; t < 500; ++t) {
        Quaternion p = random_quaternion(rng, false), q = random_quaternion(rng, false);
        hom = std::max(hom, (phi(p * q) - phi(p) * phi(q)).max_abs());
        adj = std::max(adj, (phi(q.conj()) - phi(q).adjugate()).max_abs());
        rt = std::max(rt, (phi_inv(phi(q)) - q).max_abs());
    }
    CHECK(hom <= 1e-12);
    CHECK(adj <= 1e-13);
    CHECK(rt <= 1e-14);
    for (int t = 0; t < 100; ++t) {
        Complex2x2 m{cplx(rng.uniform(-1, 1), rng.uniform(-1, 1)), cplx(rng.uniform(-1, 1), rng.uniform(-1, 1)),
                     cplx(rng.uniform(-1, 1), rng.uniform(-1, 1)), cplx(rng.uniform(-1, 1), rng.uniform(-1, 1))};
        CHECK((phi(phi_inv(m)) - m).max_abs() <= 1e-15);
    }
}

TEST_CASE("philox determinism and stream independence") {
    Philox a(42, 0), b(42, 0), c(42, 1);
    for (int t = 0; t < 100; ++t) {
        auto va = a.next_u64();
        CHECK(va == b.next_u64());
    }
    // different stream gives a different sequence
    Philox a2(42, 0);
    int same = 0;
    for (int t = 0; t < 64; ++t) same += (a2.next_u64() == c.next_u64());
    CHECK(same < 4);
    // uniform01 in range
    for (int t = 0; t < 1000; ++t) {
        double u = c.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}
