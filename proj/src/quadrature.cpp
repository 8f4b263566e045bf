#include "pfq/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pfq {

QuadratureRule circle_trapezoid(int n) {
    if (n < 1) throw std::invalid_argument("circle_trapezoid: n >= 1");
    QuadratureRule r;
    r.nodes.resize(n);
    r.weights.assign(n, 2.0 * std::numbers::pi / n);
    for (int i = 0; i < n; ++i) r.nodes[i] = -std::numbers::pi + 2.0 * std::numbers::pi * i / n;
    return r;
}

namespace {

// Golub-Welsch from the three-term recurrence: nodes are eigenvalues of the
// symmetric tridiagonal Jacobi matrix, weights are mu0 * (first eigenvector
// component)^2.
QuadratureRule golub_welsch(const std::vector<double>& alpha, const std::vector<double>& beta, double mu0) {
    const int n = int(alpha.size());
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        j(i, i) = alpha[i];
        if (i + 1 < n) j(i, i + 1) = j(i + 1, i) = std::sqrt(beta[i + 1]);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
    QuadratureRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = es.eigenvalues()(i);
        double v0 = es.eigenvectors()(0, i);
        r.weights[i] = mu0 * v0 * v0;
    }
    return r;
}

}  // namespace

QuadratureRule gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: n >= 1");
    std::vector<double> alpha(n, 0.0), beta(n, 0.0);
    for (int k = 1; k < n; ++k) beta[k] = k / 2.0;
    return golub_welsch(alpha, beta, std::sqrt(std::numbers::pi));
}

QuadratureRule gauss_legendre01(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre01: n >= 1");
    std::vector<double> alpha(n, 0.0), beta(n, 0.0);
    for (int k = 1; k < n; ++k) {
        double kk = double(k);
        beta[k] = kk * kk / ((2 * kk - 1) * (2 * kk + 1));
    }
    QuadratureRule r = golub_welsch(alpha, beta, 2.0);  // [-1,1], weight 1
    for (auto& x : r.nodes) x = 0.5 * (x + 1.0);
    for (auto& w : r.weights) w *= 0.5;
    return r;
}

QuadratureRule counting_rule(int n) {
    QuadratureRule r;
    r.nodes.resize(n);
    r.weights.assign(n, 1.0);
    for (int i = 0; i < n; ++i) r.nodes[i] = double(i);
    return r;
}

QuadratureRule clip(const QuadratureRule& rule, double lo, double hi) {
    QuadratureRule r;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        if (rule.nodes[i] >= lo && rule.nodes[i] < hi) {
            r.nodes.push_back(rule.nodes[i]);
            r.weights.push_back(rule.weights[i]);
        }
    }
    return r;
}

}  // namespace pfq
