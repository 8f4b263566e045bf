#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pfq/qmatrix.hpp"
#include "pfq/quadrature.hpp"
#include "pfq/skew_poly.hpp"

namespace pfq {

enum class Domain { Circle, Line, ComplexPlane, QuaternionSpace, QuaternionBall, Finite };

/// Domain point. Component usage: circle/line/finite -> v[0] (angle, real,
/// index); complex plane -> v[0] + i v[1]; quaternion spaces -> all four.
struct Point {
    std::array<double, 4> v{0.0, 0.0, 0.0, 0.0};

    static Point angle(double t) { return {{t, 0, 0, 0}}; }
    static Point real(double x) { return {{x, 0, 0, 0}}; }
    static Point index(int i) { return {{double(i), 0, 0, 0}}; }
    static Point complex_z(cplx z) { return {{z.real(), z.imag(), 0, 0}}; }
    static Point quat(double s, double x, double y, double z) { return {{s, x, y, z}}; }

    double x0() const { return v[0]; }
    cplx as_complex() const { return {v[0], v[1]}; }
    Quaternion as_quaternion() const { return {v[0], v[1], v[2], v[3]}; }
    double abs4() const { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]); }
};

/// K(x,y) = sum_k lambda_k u_k(x) u_k*(y) with orthonormal u_k. The stored
/// functions are weight-stripped like Kernel::eval_core: the full
/// eigenfunction is sqrt_weight(x) * func[k](x).
struct DiagonalForm {
    std::vector<cplx> lambdas;
    std::vector<std::function<Quaternion(const Point&)>> funcs;

    int rank() const { return int(lambdas.size()); }
};

/// Self-dual quaternion kernel over a measure space. The background measure
/// is w(x) dm(x); quadrature rules embed w together with any square-root
/// factor the kernel carries, so integral operations evaluate eval_core at
/// the nodes and let the rule weights account for the rest:
///
///   K(x,y) = sqrt_weight(x) * eval_core(x,y) * sqrt_weight(y),
///   sum_i w_i f(x_i) ~ integral f(x) sqrt_weight(x)^2 w(x) dm(x).
///
/// For the circle kernels both factors are 1 and the rule is plain trapezoid;
/// for the GSE kernel sqrt_weight = e^(-x^2/2) and the rule is Gauss-Hermite.
struct Kernel {
    Domain domain = Domain::Circle;
    std::string descriptor;
    std::function<Quaternion(const Point&, const Point&)> eval_core;
    std::function<double(const Point&)> sqrt_weight;    // null means identically 1
    std::function<double(const Point&)> measure_weight; // w(x) of the background w(x) dm; null means 1
    std::optional<DiagonalForm> diag;
    QuadratureRule native_quad;  // empty for the 4-space / complex-plane kernels
    double lo = 0.0, hi = 0.0;   // interval domains: circle [-pi,pi), finite [0,n)

    double sw(const Point& p) const { return sqrt_weight ? sqrt_weight(p) : 1.0; }
    double mw(const Point& p) const { return measure_weight ? measure_weight(p) : 1.0; }
    Quaternion eval(const Point& x, const Point& y) const { return sw(x) * sw(y) * eval_core(x, y); }
    int rank() const { return diag ? diag->rank() : -1; }
};

/// a_p = (1/2p) [ (p^2 - 1) i bi + (p^2 + 1) bj ]; satisfies a_p^2 = -1.
Quaternion cse_a(double p);

/// sigma_N4(theta) = (1/2pi) sum over half-integers p of
/// (cos p theta + a_p sin p theta). The trigonometric sum is authoritative.
Quaternion sigma_n4(int N, double theta);

/// Translation-invariant circular symplectic kernel, eval = sigma_N4(t - t').
Kernel circular_symplectic(int N, int quad_nodes = 512);

/// 2N x 2N block-diagonal representation of sigma_N4 in the basis
/// {cos(p t)/sqrt(pi), sin(p t)/sqrt(pi)}, blocks (1/2)((1,a_p),(-a_p,1)).
QuaternionMatrix circular_symplectic_block_matrix(int N);

/// The rank-N factor vectors v_p (columns, 2N-dimensional) with
/// K = sum_p v_p v_p*.
std::vector<std::vector<Quaternion>> circular_symplectic_factors(int N);

/// Gaussian symplectic ensemble kernel from the skew-orthogonal polynomials;
/// chi-sum with upper limit N-1, weight folded in via sqrt(w) factors so the
/// background measure is Lebesgue.
Kernel gse(int N, int quad_nodes = 80);

/// quaternion Ginibre: sum_{k<=n} z^k (w*)^k / (k+1)! against
/// pi^-2 e^(-|z|^2) dm on real quaternions.
Kernel ginibre_quaternion(int n);

/// Bergman kernel sum_{k<=n} (k+2) z^k (w*)^k on the unit 4-ball against
/// pi^-2 dm. Throws on evaluation outside the closed ball.
Kernel bergman_quaternion(int n);

/// Pfaffian Ginibre on C, defined through the 2x2 representation built from
/// phi_N; evaluation only (signed background measure).
Kernel pfaffian_ginibre_complex(int N);
cplx pfaffian_ginibre_phi(int N, cplx u, cplx v);

/// Finite point set {0,...,n-1} with counting measure. Attempts to compute a
/// diagonal form from the complex embedding; silently omits it when the
/// matrix has none (reconstruction is verified before attaching).
Kernel finite_kernel(const QuaternionMatrix& entries);

/// 1_D(x) K(x,y) 1_D(y) for an interval sub-domain [lo, hi); drops the
/// diagonal form.
Kernel restrict_kernel(const Kernel& k, double lo, double hi);

/// Parse "name:key=value,..." descriptors: cse:N=4, gse:N=3, ginibre-q:n=5,
/// bergman-q:n=5, pfaffian-ginibre-c:N=4, finite:<path-to-matrix-JSON>.
/// Unknown names or keys throw.
Kernel parse_kernel(const std::string& descriptor);

QuaternionMatrix load_matrix_json(const std::string& path);
void save_matrix_json(const QuaternionMatrix& m, const std::string& path);

}  // namespace pfq
