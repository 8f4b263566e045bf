#pragma once

#include <Eigen/Dense>
#include <vector>

#include "pfq/quaternion.hpp"

namespace pfq {

using ComplexMatrix = Eigen::MatrixXcd;

/// Dense rectangular matrix of complexified quaternions, row-major.
class QuaternionMatrix {
  public:
    QuaternionMatrix() = default;
    QuaternionMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static QuaternionMatrix identity(int n) {
        QuaternionMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Quaternion{1.0};
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Quaternion& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Quaternion& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    QuaternionMatrix operator+(const QuaternionMatrix& o) const;
    QuaternionMatrix operator-(const QuaternionMatrix& o) const;
    QuaternionMatrix operator*(const QuaternionMatrix& o) const;
    QuaternionMatrix scaled(const cplx& t) const;

    /// Rows with indices in `idx`, in the given order.
    QuaternionMatrix select_rows(const std::vector<int>& idx) const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Quaternion> a_;
};

/// (X*)_{lk} = (X_{kl})*.
QuaternionMatrix dual(const QuaternionMatrix& x);

/// max_{kl} |X_{kl} - (X*)_{kl}| over all coefficients; 0 means self-dual.
double selfdual_defect(const QuaternionMatrix& x);
bool is_selfdual(const QuaternionMatrix& x, double tol = 1e-10);
bool is_real(const QuaternionMatrix& x, double tol = 1e-10);

/// Entrywise replacement by the 2x2 block phi(X_kl); result is 2r x 2c,
/// interleaved layout (block (k,l) occupies rows 2k..2k+1, cols 2l..2l+1).
ComplexMatrix phi_embed(const QuaternionMatrix& x);

/// Complex adjoint ((A,B),(-conj B, conj A)) with A = X1 + X2 i, B = X3 + X4 i.
/// Only defined for real-quaternion matrices.
ComplexMatrix psi_adjoint(const QuaternionMatrix& x, double tol = 1e-10);

}  // namespace pfq
