#include "pfq/determinants.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pfq {

namespace {

// Ordered cycle product for one permutation, per the Cayley expansion.
Quaternion cycle_term(const QuaternionMatrix& x, const std::vector<int>& perm, int& n_cycles) {
    const int n = int(perm.size());
    std::vector<bool> seen(n, false);
    Quaternion term{1.0};
    n_cycles = 0;
    // Largest unseen element is the key of the next cycle; scanning from n-1
    // downward yields the keys in decreasing order automatically.
    for (int start = n - 1; start >= 0; --start) {
        if (seen[start]) continue;
        ++n_cycles;
        seen[start] = true;
        int i = start;
        while (perm[i] != start) {
            term = term * x.at(i, perm[i]);
            i = perm[i];
            seen[i] = true;
        }
        term = term * x.at(i, start);
    }
    return term;
}

}  // namespace

Quaternion moore_dyson_cayley(const QuaternionMatrix& x) {
    const int n = x.rows();
    if (n != x.cols()) throw std::invalid_argument("moore_dyson_cayley: square matrix required");
    if (n > 9) throw std::invalid_argument("moore_dyson_cayley: n > 9 exceeds the expansion limit");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Quaternion det{};
    do {
        int r = 0;
        Quaternion t = cycle_term(x, perm, r);
        if ((n - r) % 2) det -= t;
        else det += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

double skew_defect(const ComplexMatrix& m) {
    return (m + m.transpose()).cwiseAbs().maxCoeff();
}

cplx pfaffian(const ComplexMatrix& m, double tol) {
    const Eigen::Index n = m.rows();
    if (n != m.cols() || n % 2) throw std::invalid_argument("pfaffian: even-dimensional square matrix required");
    if (n == 0) return 1.0;
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (skew_defect(m) > tol * scale) throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");

    ComplexMatrix a = m;
    cplx pf = 1.0;
    for (Eigen::Index k = 0; k + 1 < n; k += 2) {
        Eigen::Index best = k + 1;
        double best_abs = std::abs(a(k, k + 1));
        for (Eigen::Index i = k + 2; i < n; ++i) {
            if (std::abs(a(k, i)) > best_abs) {
                best_abs = std::abs(a(k, i));
                best = i;
            }
        }
        if (best_abs <= tol * scale) return 0.0;
        if (best != k + 1) {
            a.row(k + 1).swap(a.row(best));
            a.col(k + 1).swap(a.col(best));
            pf = -pf;
        }
        const cplx pivot = a(k, k + 1);
        pf *= pivot;
        for (Eigen::Index i = k + 2; i < n; ++i)
            for (Eigen::Index j = k + 2; j < n; ++j)
                a(i, j) -= (a(k, i) * a(k + 1, j) - a(k, j) * a(k + 1, i)) / pivot;
    }
    return pf;
}

cplx pfaffian_combinatorial(const ComplexMatrix& m, double tol) {
    const Eigen::Index n = m.rows();
    if (n != m.cols() || n % 2) throw std::invalid_argument("pfaffian: even-dimensional square matrix required");
    if (n == 0) return 1.0;
    if (n > 8) throw std::invalid_argument("pfaffian_combinatorial: n > 8");
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (skew_defect(m) > tol * scale) throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    cplx sum = 0.0;
    do {
        // sign via explicit cycle count
        std::vector<bool> seen(n, false);
        int cycles = 0;
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
        }
        double sgn = ((int(n) - cycles) % 2) ? -1.0 : 1.0;
        cplx prod = 1.0;
        for (Eigen::Index i = 0; i < n / 2; ++i) prod *= m(perm[2 * i], perm[2 * i + 1]);
        sum += sgn * prod;
    } while (std::next_permutation(perm.begin(), perm.end()));

    double denom = 1.0;
    for (Eigen::Index i = 1; i <= n / 2; ++i) denom *= 2.0 * double(i);
    return sum / denom;
}

namespace {

ComplexMatrix minus_j_phi(const QuaternionMatrix& x) {
    // -J has ((0,1),(-1,0)) blocks; left-multiplying swaps row pairs with a sign.
    ComplexMatrix p = phi_embed(x);
    ComplexMatrix r(p.rows(), p.cols());
    for (Eigen::Index k = 0; 2 * k < p.rows(); ++k) {
        r.row(2 * k) = p.row(2 * k + 1);
        r.row(2 * k + 1) = -p.row(2 * k);
    }
    return r;
}

}  // namespace

cplx moore_dyson_pfaffian(const QuaternionMatrix& x, double tol) {
    if (x.rows() != x.cols()) throw std::invalid_argument("moore_dyson_pfaffian: square matrix required");
    if (selfdual_defect(x) > tol) throw std::invalid_argument("moore_dyson_pfaffian: input is not self-dual");
    return pfaffian(minus_j_phi(x), tol);
}

cplx moore_dyson_psi(const QuaternionMatrix& x, double tol) {
    const int n = x.rows();
    if (n != x.cols()) throw std::invalid_argument("moore_dyson_psi: square matrix required");
    if (selfdual_defect(x) > tol) throw std::invalid_argument("moore_dyson_psi: input is not self-dual");
    ComplexMatrix p = psi_adjoint(x, tol);
    ComplexMatrix m(2 * n, 2 * n);
    m.topRows(n) = p.bottomRows(n);
    m.bottomRows(n) = -p.topRows(n);
    double sign = ((n * (n - 1) / 2) % 2) ? -1.0 : 1.0;
    return sign * pfaffian(m, tol);
}

cplx study_det(const QuaternionMatrix& x) {
    if (x.rows() != x.cols()) throw std::invalid_argument("study_det: square matrix required");
    return phi_embed(x).determinant();
}

std::vector<cplx> selfdual_eigenvalues(const QuaternionMatrix& x, double pair_tol) {
    if (x.rows() != x.cols()) throw std::invalid_argument("selfdual_eigenvalues: square matrix required");
    Eigen::ComplexEigenSolver<ComplexMatrix> es(phi_embed(x), false);
    if (es.info() != Eigen::Success) throw std::runtime_error("selfdual_eigenvalues: eigensolver failed");
    std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(ev.begin(), ev.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::vector<cplx> out;
    out.reserve(ev.size() / 2);
    for (size_t i = 0; i + 1 < ev.size(); i += 2) {
        if (std::abs(ev[i] - ev[i + 1]) > pair_tol * (1.0 + std::abs(ev[i])))
            throw std::runtime_error("selfdual_eigenvalues: spectrum does not pair (input not self-dual?)");
        out.push_back(0.5 * (ev[i] + ev[i + 1]));
    }
    return out;
}

}  // namespace pfq
