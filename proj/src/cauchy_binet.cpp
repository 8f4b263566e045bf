#include "pfq/cauchy_binet.hpp"

#include <stdexcept>

#include "pfq/determinants.hpp"

namespace pfq {

void for_each_subset(int n, int m, const std::function<void(const std::vector<int>&)>& fn) {
    if (m < 0 || m > n) return;
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int i = m - 1;
        while (i >= 0 && idx[i] == n - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
}

CauchyBinetSides cauchy_binet_sides(const QuaternionMatrix& c) {
    const int n = c.rows(), m = c.cols();
    if (n < m) throw std::invalid_argument("cauchy_binet_sides: need n >= m");
    CauchyBinetSides r{};
    r.lhs = moore_dyson_pfaffian(dual(c) * c);
    r.rhs = 0.0;
    for_each_subset(n, m, [&](const std::vector<int>& idx) {
        QuaternionMatrix ci = c.select_rows(idx);
        r.rhs += moore_dyson_pfaffian(dual(ci) * ci);
    });
    return r;
}

CauchyBinetSides cauchy_binet_weighted_sides(const QuaternionMatrix& c, const std::vector<cplx>& lambda) {
    const int n = c.rows(), m = c.cols();
    if (n < m) throw std::invalid_argument("cauchy_binet_weighted_sides: need n >= m");
    if (int(lambda.size()) != n) throw std::invalid_argument("cauchy_binet_weighted_sides: need n weights");
    QuaternionMatrix lc(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) lc.at(i, j) = lambda[i] * c.at(i, j);
    CauchyBinetSides r{};
    r.lhs = moore_dyson_pfaffian(dual(c) * lc);
    r.rhs = 0.0;
    for_each_subset(n, m, [&](const std::vector<int>& idx) {
        QuaternionMatrix ci = c.select_rows(idx);
        cplx w = 1.0;
        for (int i : idx) w *= lambda[i];
        r.rhs += w * moore_dyson_pfaffian(dual(ci) * ci);
    });
    return r;
}

}  // namespace pfq
