#pragma once

#include <vector>

namespace pfq {

/// Real polynomial in the monomial basis, c[i] * x^i.
struct Polynomial {
    std::vector<double> c;

    int degree() const;
    double operator()(double x) const;
    Polynomial derivative() const;
};

/// <f,g> = integral (f g' - f' g) e^(-x^2) dx, evaluated with exact Gaussian
/// moments.
double skew_inner(const Polynomial& f, const Polynomial& g);

/// Q_0 .. Q_{2N-1} with deg Q_j = j, <Q_2j, Q_2j+1> = 1, <Q_2j+1, Q_2j> = -1
/// and all other pairings zero, built by skew Gram-Schmidt over monomials.
/// Even-index polynomials come out monic and even, odd-index ones odd, which
/// fixes the Q_{2j+1} -> Q_{2j+1} + c Q_{2j} freedom by zeroing the x^(2j)
/// coefficient. Throws on skew pivot or conditioning breakdown; the
/// monomial-basis process stays below the 1e-8 orthogonality gate up to
/// N = 10 (the degree cap admits N <= 12).
std::vector<Polynomial> skew_orthogonal_polys(int N);

}  // namespace pfq
