#include "pfq/qmatrix.hpp"

#include <ostream>
#include <stdexcept>

namespace pfq {

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    os << q.s << " + " << q.x << " i + " << q.y << " j + " << q.z << " k";
    return os;
}

QuaternionMatrix QuaternionMatrix::operator+(const QuaternionMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    QuaternionMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

QuaternionMatrix QuaternionMatrix::operator-(const QuaternionMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    QuaternionMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

QuaternionMatrix QuaternionMatrix::operator*(const QuaternionMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
    QuaternionMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Quaternion& lik = at(i, k);
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += lik * o.at(k, j);
        }
    return r;
}

QuaternionMatrix QuaternionMatrix::scaled(const cplx& t) const {
    QuaternionMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = t * a_[i];
    return r;
}

QuaternionMatrix QuaternionMatrix::select_rows(const std::vector<int>& idx) const {
    QuaternionMatrix r(int(idx.size()), cols_);
    for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= rows_) throw std::out_of_range("row index");
        for (int j = 0; j < cols_; ++j) r.at(int(i), j) = at(idx[i], j);
    }
    return r;
}

QuaternionMatrix dual(const QuaternionMatrix& x) {
    QuaternionMatrix r(x.cols(), x.rows());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) r.at(j, i) = x.at(i, j).conj();
    return r;
}

double selfdual_defect(const QuaternionMatrix& x) {
    if (x.rows() != x.cols()) return std::numeric_limits<double>::infinity();
    double d = 0;
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) d = std::max(d, (x.at(i, j) - x.at(j, i).conj()).max_abs());
    return d;
}

bool is_selfdual(const QuaternionMatrix& x, double tol) { return selfdual_defect(x) <= tol; }

bool is_real(const QuaternionMatrix& x, double tol) {
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            if (!x.at(i, j).is_real(tol)) return false;
    return true;
}

ComplexMatrix phi_embed(const QuaternionMatrix& x) {
    ComplexMatrix m(2 * x.rows(), 2 * x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) {
            Complex2x2 b = phi(x.at(i, j));
            m(2 * i, 2 * j) = b.a;
            m(2 * i, 2 * j + 1) = b.b;
            m(2 * i + 1, 2 * j) = b.c;
            m(2 * i + 1, 2 * j + 1) = b.d;
        }
    return m;
}

ComplexMatrix psi_adjoint(const QuaternionMatrix& x, double tol) {
    if (!is_real(x, tol)) throw std::invalid_argument("psi_adjoint requires real-quaternion entries");
    const int r = x.rows(), c = x.cols();
    ComplexMatrix m(2 * r, 2 * c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            const Quaternion& q = x.at(i, j);
            cplx a(q.s.real(), q.x.real());  // A = X1 + X2 i
            cplx b(q.y.real(), q.z.real());  // B = X3 + X4 i
            m(i, j) = a;
            m(i, j + c) = b;
            m(i + r, j) = -std::conj(b);
            m(i + r, j + c) = std::conj(a);
        }
    return m;
}

}  // namespace pfq
