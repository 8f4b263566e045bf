#pragma once

#include "pfq/qmatrix.hpp"
#include "pfq/report.hpp"
#include "pfq/rng.hpp"

namespace pfq {

/// Property suites behind `pfq verify <suite>`. The fixed worked examples always
/// run; `trials` sets the fuzz budget on top.
RunReport verify_algebra(int trials, std::uint64_t seed);
RunReport verify_determinants(int trials, std::uint64_t seed);
RunReport verify_cauchy_binet(int trials, std::uint64_t seed);
RunReport verify_kernels(int trials, std::uint64_t seed);
RunReport verify_fredholm(int trials, std::uint64_t seed);
RunReport verify_dyson_lemma(int trials, std::uint64_t seed);

RunReport run_suite(const std::string& name, int trials, std::uint64_t seed);

/// Worked two-point fixture matrices covering the determinant and
/// positivity edge cases.
QuaternionMatrix example_selfdual_det0();    // (1/2)((1,-a),(a,1)), a = (3i bi - 5 bj)/4
QuaternionMatrix example_selfdual_det1();    // ((1,a),(-a,1)), a = i bi - bj
QuaternionMatrix example_negative_r1();      // (4/3)((1,i/2),(i/2,-1/4))
QuaternionMatrix example_nonquasireal();     // (1/2)((1,a),(a*,1)), a = (1+2i)+(19/10-20i/19) bi

/// Random matrix helpers shared by the suites and the tests.
Quaternion random_quaternion(Philox& rng, bool real_coeffs);
QuaternionMatrix random_matrix(Philox& rng, int rows, int cols, bool real_coeffs);
QuaternionMatrix random_selfdual(Philox& rng, int n, bool real_coeffs);
ComplexMatrix random_skew(Philox& rng, int n);

}  // namespace pfq
