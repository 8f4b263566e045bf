#pragma once

#include <vector>

#include "pfq/qmatrix.hpp"

namespace pfq {

/// Moore-Dyson determinant by Cayley's ordered-cycle permutation expansion.
/// Cycles are keyed on their largest element and multiplied in decreasing key
/// order; within a cycle, factors start at the largest element and follow the
/// permutation. Sign is (-1)^(n - #cycles). Returns the raw quaternion; for
/// self-dual input the vector part vanishes (Dyson).
/// Cost is n! -- limited to n <= 9.
Quaternion moore_dyson_cayley(const QuaternionMatrix& x);

/// Pfaffian of a skew-symmetric complex matrix by skew elimination with
/// partial pivoting (O(n^3)). A pivot column with no candidate above `tol`
/// short-circuits to 0. Throws on odd dimension or skew-symmetry defect > tol.
cplx pfaffian(const ComplexMatrix& m, double tol = 1e-9);

/// Textbook sum over all (2m)! permutations with the 1/(2^m m!) prefactor.
/// Oracle for n <= 8.
cplx pfaffian_combinatorial(const ComplexMatrix& m, double tol = 1e-9);

double skew_defect(const ComplexMatrix& m);

/// Det_M(X) = Pf(-J phi(X)) for self-dual X; J is block-diagonal with
/// ((0,-1),(1,0)) blocks. Scales past the factorial limit of the expansion.
cplx moore_dyson_pfaffian(const QuaternionMatrix& x, double tol = 1e-9);

/// Det_M via the complex adjoint: sign * Pf(-Jt psi(X)) with
/// Jt = ((0,-I),(I,0)) and sign = (-1)^(n(n-1)/2). Real-quaternion self-dual
/// input only. The blocked layout of psi makes the sign n-dependent, unlike
/// the interleaved phi route.
cplx moore_dyson_psi(const QuaternionMatrix& x, double tol = 1e-9);

/// Study determinant det(phi(X)). Multiplicative.
cplx study_det(const QuaternionMatrix& x);

/// Right eigenvalues of a self-dual matrix: the 2n eigenvalues of phi(X)
/// split into n nearly-equal pairs; returns the pair means. Throws if the
/// sorted spectrum does not pair within pair_tol * (1 + |lambda|).
std::vector<cplx> selfdual_eigenvalues(const QuaternionMatrix& x, double pair_tol = 1e-6);

}  // namespace pfq
