#pragma once

#include <vector>

namespace pfq {

/// Nodes and weights with the convention sum_i w_i f(x_i) ~ integral of f
/// against the rule's embedded measure: plain dx for the circle and
/// Gauss-Legendre rules, e^(-x^2) dx for the Hermite rule, counting measure
/// for finite rules.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

/// Uniform trapezoid on [-pi, pi); spectrally exact for trigonometric
/// polynomials of degree < n.
QuadratureRule circle_trapezoid(int n = 512);

/// Gauss rule for the weight e^(-x^2) on the real line (Golub-Welsch).
QuadratureRule gauss_hermite(int n = 80);

/// Gauss-Legendre on [0, 1].
QuadratureRule gauss_legendre01(int n);

/// Counting measure on {0, ..., n-1}.
QuadratureRule counting_rule(int n);

/// Keep only nodes in [lo, hi).
QuadratureRule clip(const QuadratureRule& rule, double lo, double hi);

}  // namespace pfq
