#include "pfq/pointfield.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pfq/cauchy_binet.hpp"
#include "pfq/determinants.hpp"
#include "pfq/rng.hpp"

namespace pfq {

namespace {

const Complex2x2 kJ0{0.0, 1.0, -1.0, 0.0};  // the -J block

// Skew 2m x 2m matrix -J phi(Gram) assembled from per-pair blocks.
ComplexMatrix skew_from_blocks(const std::vector<Complex2x2>& blocks, int m) {
    ComplexMatrix mat(2 * m, 2 * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Complex2x2& b = blocks[size_t(i) * m + j];
            mat(2 * i, 2 * j) = b.a;
            mat(2 * i, 2 * j + 1) = b.b;
            mat(2 * i + 1, 2 * j) = b.c;
            mat(2 * i + 1, 2 * j + 1) = b.d;
        }
    return mat;
}

}  // namespace

CorrelationResult correlation(const Kernel& k, const std::vector<Point>& pts) {
    const int m = int(pts.size());
    QuaternionMatrix g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g.at(i, j) = k.eval(pts[i], pts[j]);
    CorrelationResult r{};
    r.gram_defect = selfdual_defect(g);
    std::vector<Complex2x2> blocks(size_t(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) blocks[size_t(i) * m + j] = kJ0 * phi(g.at(i, j));
    cplx det = pfaffian(skew_from_blocks(blocks, m), 1e-7);
    r.value = det.real();
    r.imag_residual = std::abs(det.imag());
    return r;
}

double correlation_value(const Kernel& k, const std::vector<Point>& pts, double tol) {
    CorrelationResult r = correlation(k, pts);
    if (r.gram_defect > tol) throw std::runtime_error("correlation: kernel Gram is not self-dual");
    return r.value;
}

FredholmResult fredholm_det(const Kernel& k, cplx scale, const QuadratureRule& quad, int rank_override) {
    int r = rank_override >= 0 ? rank_override : k.rank();
    if (r < 0) throw std::invalid_argument("fredholm_det: kernel rank unknown (no diagonal form)");
    const int nn = int(quad.size());

    // node table of -J phi(K_core) blocks; rule weights absorb the measure
    std::vector<Complex2x2> blk(size_t(nn) * nn);
    std::vector<Point> nodes(nn);
    for (int i = 0; i < nn; ++i) nodes[i] = Point::real(quad.nodes[i]);
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j) blk[size_t(i) * nn + j] = kJ0 * phi(k.eval_core(nodes[i], nodes[j]));

    FredholmResult out{cplx(1.0), 0.0};
    std::vector<Complex2x2> sub;
    for (int n = 1; n <= r + 1; ++n) {
        cplx term = 0.0;
        sub.assign(size_t(n) * n, {});
        for_each_subset(nn, n, [&](const std::vector<int>& idx) {
            double w = 1.0;
            for (int i = 0; i < n; ++i) w *= quad.weights[idx[i]];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) sub[size_t(i) * n + j] = blk[size_t(idx[i]) * nn + idx[j]];
            term += w * pfaffian(skew_from_blocks(sub, n), 1e-9);
        });
        term *= std::pow(scale, n);
        if (n <= r) out.value += term;
        else out.tail_abs = std::abs(term);
    }
    return out;
}

CharFnResult char_function_count(const Kernel& k, double t, const QuadratureRule& quad) {
    if (!k.diag) throw std::invalid_argument("char_function_count: diagonal form required");
    cplx s = std::exp(cplx(0.0, t)) - 1.0;
    CharFnResult r{};
    r.product_route = 1.0;
    for (const cplx& l : k.diag->lambdas) r.product_route *= 1.0 + s * l;
    r.fredholm_route = fredholm_det(k, s, quad).value;
    r.discrepancy = std::abs(r.product_route - r.fredholm_route);
    return r;
}

FredholmResult expected_product(const Kernel& k, const std::function<cplx(const Point&)>& f,
                                const QuadratureRule& quad) {
    int r = k.rank();
    if (r < 0) throw std::invalid_argument("expected_product: kernel rank unknown (no diagonal form)");
    Kernel sym = k;
    sym.diag.reset();
    auto base = k.eval_core;
    sym.eval_core = [base, f](const Point& x, const Point& y) {
        return std::sqrt(f(x)) * base(x, y) * std::sqrt(f(y));
    };
    return fredholm_det(sym, 1.0, quad, r);
}

namespace {

Quaternion eval_mixed(const Kernel& k, const Point& x, const Point& y, bool strip_x, bool strip_y) {
    double s = (strip_x ? 1.0 : k.sw(x)) * (strip_y ? 1.0 : k.sw(y));
    return s * k.eval_core(x, y);
}

double correlation_mixed(const Kernel& k, const std::vector<Point>& pts, int node_pos) {
    const int m = int(pts.size());
    std::vector<Complex2x2> blocks(size_t(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            blocks[size_t(i) * m + j] = kJ0 * phi(eval_mixed(k, pts[i], pts[j], i == node_pos, j == node_pos));
    return pfaffian(skew_from_blocks(blocks, m), 1e-9).real();
}

}  // namespace

DysonReport dyson_integration_check(const Kernel& k, int m, const QuadratureRule& quad,
                                    const std::vector<std::vector<Point>>& probes) {
    if (m < 1) throw std::invalid_argument("dyson_integration_check: m >= 1");
    DysonReport rep{};
    double trace = 0.0;
    for (size_t i = 0; i < quad.size(); ++i) {
        Point p = Point::real(quad.nodes[i]);
        trace += quad.weights[i] * k.eval_core(p, p).s.real();
    }
    rep.kernel_trace = trace;

    std::vector<std::vector<Point>> probe_list = probes;
    if (m == 1 && probe_list.empty()) probe_list.push_back({});
    for (const auto& probe : probe_list) {
        if (int(probe.size()) != m - 1)
            throw std::invalid_argument("dyson_integration_check: probe size must be m-1");
        std::vector<Point> pts(probe);
        pts.push_back(Point{});
        double lhs = 0.0;
        for (size_t i = 0; i < quad.size(); ++i) {
            pts.back() = Point::real(quad.nodes[i]);
            lhs += quad.weights[i] * correlation_mixed(k, pts, m - 1);
        }
        double rhs = (trace - m + 1) * (m == 1 ? 1.0 : correlation(k, probe).value);
        double dev = std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
        rep.per_probe.push_back(dev);
        rep.max_rel_deviation = std::max(rep.max_rel_deviation, dev);
    }
    return rep;
}

ReproducingReport reproducing_check(const Kernel& k, const QuadratureRule& quad,
                                    const std::vector<std::pair<Point, Point>>& pairs, double tol) {
    ReproducingReport rep{ReproducingForm::Neither, 0.0, 0.0};
    for (const auto& [x, z] : pairs) {
        Complex2x2 acc{};
        for (size_t i = 0; i < quad.size(); ++i) {
            Point y = Point::real(quad.nodes[i]);
            acc = acc + phi(eval_mixed(k, x, y, false, true) * eval_mixed(k, y, z, true, false)) * cplx(quad.weights[i]);
        }
        Complex2x2 kxz = phi(k.eval(x, z));
        rep.dev_projection = std::max(rep.dev_projection, (acc - kxz).max_abs());
        // E phi(K) - phi(K) E with E = ((1,0),(0,0)) replaces the diagonal by
        // zero and flips the sign of the lower-left entry
        Complex2x2 comm{0.0, kxz.b, -kxz.c, 0.0};
        rep.dev_commutator = std::max(rep.dev_commutator, (acc - (kxz + comm)).max_abs());
    }
    if (rep.dev_projection <= tol) rep.form = ReproducingForm::Projection;
    else if (rep.dev_commutator <= tol) rep.form = ReproducingForm::Commutator;
    return rep;
}

std::vector<cplx> restricted_spectrum(const Kernel& k, double lo, double hi) {
    return restricted_spectrum(k, lo, hi, k.native_quad);
}

std::vector<cplx> restricted_spectrum(const Kernel& k, double lo, double hi, const QuadratureRule& quad) {
    if (!k.diag) throw std::invalid_argument("restricted_spectrum: diagonal form required");
    const int r = k.diag->rank();
    QuadratureRule d = clip(quad, lo, hi);
    std::vector<Quaternion> u(size_t(d.size()) * r);
    for (size_t i = 0; i < d.size(); ++i) {
        Point p = Point::real(d.nodes[i]);
        for (int a = 0; a < r; ++a) u[i * r + a] = k.diag->funcs[a](p);
    }
    QuaternionMatrix m(r, r);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            Quaternion s{};
            for (size_t i = 0; i < d.size(); ++i) s += d.weights[i] * (u[i * r + a].conj() * u[i * r + b]);
            m.at(a, b) = std::sqrt(k.diag->lambdas[a] * k.diag->lambdas[b]) * s;
        }
    return selfdual_eigenvalues(m);
}

namespace {

std::vector<Point> probe_points(const Kernel& k) {
    std::vector<Point> pts;
    switch (k.domain) {
        case Domain::Finite:
            for (int i = 0; i < int(k.hi); ++i) pts.push_back(Point::index(i));
            break;
        case Domain::Circle:
            for (int i = 0; i < 16; ++i) pts.push_back(Point::angle(-std::numbers::pi + i * std::numbers::pi / 8.0));
            break;
        case Domain::Line:
            for (int i = 0; i < 16; ++i) pts.push_back(Point::real(-3.0 + 6.0 * i / 15.0));
            break;
        case Domain::ComplexPlane:
        case Domain::QuaternionSpace:
        case Domain::QuaternionBall: {
            Philox rng(20130518, 0);
            for (int i = 0; i < 12; ++i) {
                Point p;
                for (int t = 0; t < 4; ++t) p.v[t] = 0.4 * rng.normal();
                if (k.domain == Domain::QuaternionBall && p.abs4() > 1.0)
                    for (int t = 0; t < 4; ++t) p.v[t] /= 2.0 * p.abs4();
                if (k.domain == Domain::ComplexPlane) p.v[2] = p.v[3] = 0.0;
                pts.push_back(p);
            }
            break;
        }
    }
    return pts;
}

}  // namespace

DiagonalFormReport diagonal_form_check(const Kernel& k, double tol) {
    DiagonalFormReport rep{};
    if (!k.diag) return rep;
    rep.has_form = true;
    rep.min_re_lambda = std::numeric_limits<double>::infinity();
    rep.max_re_lambda = -rep.min_re_lambda;
    for (const cplx& l : k.diag->lambdas) {
        rep.max_imag_lambda = std::max(rep.max_imag_lambda, std::abs(l.imag()));
        rep.min_re_lambda = std::min(rep.min_re_lambda, l.real());
        rep.max_re_lambda = std::max(rep.max_re_lambda, l.real());
    }
    rep.is_quasi_real = rep.max_imag_lambda <= tol;
    rep.lambdas_in_unit_interval =
        rep.is_quasi_real && rep.min_re_lambda >= -tol && rep.max_re_lambda <= 1.0 + tol;
    for (const Point& p : probe_points(k))
        for (const auto& f : k.diag->funcs) {
            const Quaternion q = f(p);
            rep.max_func_imag = std::max({rep.max_func_imag, std::abs(q.s.imag()), std::abs(q.x.imag()),
                                          std::abs(q.y.imag()), std::abs(q.z.imag())});
        }
    rep.is_real_form = rep.is_quasi_real && rep.max_func_imag <= tol;
    return rep;
}

PositivityReport complete_positivity_check(const Kernel& k, const std::vector<std::vector<Point>>& trials) {
    if (!k.diag) throw std::invalid_argument("complete_positivity_check: diagonal form required");
    const int r = k.diag->rank();
    if (r > 12) throw std::invalid_argument("complete_positivity_check: rank > 12");
    PositivityReport rep{};
    rep.min_value = std::numeric_limits<double>::infinity();
    for (const auto& config : trials) {
        const int m = int(config.size());
        if (m == 0) continue;
        // cache full eigenfunction values at the configuration points
        std::vector<Quaternion> u(size_t(m) * r);
        for (int a = 0; a < m; ++a) {
            double s = k.sw(config[a]);
            for (int i = 0; i < r; ++i) u[size_t(a) * r + i] = s * k.diag->funcs[i](config[a]);
        }
        for (unsigned mask = 1; mask < (1u << r); ++mask) {
            std::vector<Complex2x2> blocks(size_t(m) * m);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    Quaternion s{};
                    for (int i = 0; i < r; ++i)
                        if (mask & (1u << i)) s += u[size_t(a) * r + i] * u[size_t(b) * r + i].conj();
                    blocks[size_t(a) * m + b] = kJ0 * phi(s);
                }
            cplx det = pfaffian(skew_from_blocks(blocks, m), 1e-9);
            rep.max_imag = std::max(rep.max_imag, std::abs(det.imag()));
            if (det.real() < rep.min_value) {
                rep.min_value = det.real();
                rep.worst_subset.clear();
                for (int i = 0; i < r; ++i)
                    if (mask & (1u << i)) rep.worst_subset.push_back(i);
                rep.worst_config = config;
            }
        }
    }
    return rep;
}

cplx CountDistribution::char_function(double t) const {
    cplx s = 0.0;
    for (size_t k = 0; k < pmf.size(); ++k) s += pmf[k] * std::exp(cplx(0.0, t * double(k)));
    return s;
}

CountDistribution bernoulli_count_distribution(const std::vector<cplx>& lambdas, double tol) {
    CountDistribution d;
    d.pmf = {1.0};
    for (const cplx& lc : lambdas) {
        if (std::abs(lc.imag()) > tol || lc.real() < -tol || lc.real() > 1.0 + tol)
            throw std::invalid_argument("bernoulli_count_distribution: eigenvalue outside [0,1]");
        double l = std::clamp(lc.real(), 0.0, 1.0);
        std::vector<double> next(d.pmf.size() + 1, 0.0);
        // Kahan-compensated convolution with (1-l, l)
        std::vector<double> comp(d.pmf.size() + 1, 0.0);
        auto add = [&](size_t i, double v) {
            double y = v - comp[i];
            double t2 = next[i] + y;
            comp[i] = (t2 - next[i]) - y;
            next[i] = t2;
        };
        for (size_t i = 0; i < d.pmf.size(); ++i) {
            add(i, d.pmf[i] * (1.0 - l));
            add(i + 1, d.pmf[i] * l);
        }
        d.pmf = std::move(next);
        d.mean += l;
        d.variance += l * (1.0 - l);
    }
    double total = 0.0;
    for (double p : d.pmf) total += p;
    for (double& p : d.pmf) p /= total;
    return d;
}

CountDistribution bernoulli_count_distribution(const Kernel& k, double tol) {
    if (!k.diag) throw std::invalid_argument("bernoulli_count_distribution: diagonal form required");
    return bernoulli_count_distribution(k.diag->lambdas, tol);
}

namespace {

double gaussian_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

}  // namespace

double kolmogorov_to_gaussian(const CountDistribution& d) {
    if (d.variance <= 0.0) throw std::invalid_argument("kolmogorov_to_gaussian: zero variance");
    double sd = std::sqrt(d.variance);
    double dist = 0.0, cum = 0.0;
    for (size_t k = 0; k < d.pmf.size(); ++k) {
        double phi_k = gaussian_cdf((double(k) - d.mean) / sd);
        dist = std::max(dist, std::abs(cum - phi_k));  // left limit at the atom
        cum += d.pmf[k];
        dist = std::max(dist, std::abs(cum - phi_k));
    }
    return dist;
}

CltReport clt_diagnostic(const std::vector<std::vector<double>>& spectra) {
    CltReport rep{};
    for (const auto& spec : spectra) {
        std::vector<cplx> l(spec.begin(), spec.end());
        CountDistribution d = bernoulli_count_distribution(l);
        if (d.variance <= 0.0) throw std::invalid_argument("clt_diagnostic: zero-variance spectrum");
        rep.variances.push_back(d.variance);
        rep.distances.push_back(kolmogorov_to_gaussian(d));
    }
    rep.distances_non_increasing = true;
    for (size_t i = 1; i < rep.distances.size(); ++i)
        if (rep.distances[i] > rep.distances[i - 1] + 1e-3) rep.distances_non_increasing = false;
    return rep;
}

nlohmann::json to_json(const DysonReport& r, const std::string& kernel, int m, double tol) {
    return {{"operation", "dyson_integration_check"},
            {"kernel", kernel},
            {"parameters", {{"m", m}}},
            {"values", {{"kernel_trace", r.kernel_trace}, {"per_probe", r.per_probe}}},
            {"residuals", {{"max_rel_deviation", r.max_rel_deviation}}},
            {"tolerances", {{"max_rel_deviation", tol}}},
            {"pass", r.max_rel_deviation <= tol}};
}

nlohmann::json to_json(const ReproducingReport& r, const std::string& kernel, double tol) {
    const char* form = r.form == ReproducingForm::Projection ? "projection"
                       : r.form == ReproducingForm::Commutator ? "commutator"
                                                               : "neither";
    return {{"operation", "reproducing_check"},
            {"kernel", kernel},
            {"parameters", nlohmann::json::object()},
            {"values", {{"form", form}}},
            {"residuals", {{"projection", r.dev_projection}, {"commutator", r.dev_commutator}}},
            {"tolerances", {{"form", tol}}},
            {"pass", r.form != ReproducingForm::Neither}};
}

nlohmann::json to_json(const DiagonalFormReport& r, const std::string& kernel, double tol) {
    return {{"operation", "diagonal_form_check"},
            {"kernel", kernel},
            {"parameters", nlohmann::json::object()},
            {"values",
             {{"has_form", r.has_form},
              {"is_quasi_real", r.is_quasi_real},
              {"is_real_form", r.is_real_form},
              {"lambdas_in_unit_interval", r.lambdas_in_unit_interval},
              {"eigenvalue_range", {r.min_re_lambda, r.max_re_lambda}}}},
            {"residuals", {{"max_imag_lambda", r.max_imag_lambda}, {"max_func_imag", r.max_func_imag}}},
            {"tolerances", {{"realness", tol}}},
            {"pass", r.has_form}};
}

nlohmann::json to_json(const PositivityReport& r, const std::string& kernel, double tol) {
    std::vector<double> worst_pts;
    for (const Point& p : r.worst_config) worst_pts.push_back(p.x0());
    return {{"operation", "complete_positivity_check"},
            {"kernel", kernel},
            {"parameters", nlohmann::json::object()},
            {"values", {{"min_value", r.min_value}, {"worst_subset", r.worst_subset}, {"worst_config", worst_pts}}},
            {"residuals", {{"max_imag", r.max_imag}}},
            {"tolerances", {{"min_value", -tol}}},
            {"pass", r.min_value >= -tol}};
}

nlohmann::json to_json(const CltReport& r) {
    return {{"operation", "clt_diagnostic"},
            {"kernel", "per-spectrum"},
            {"parameters", {{"spectra", r.variances.size()}}},
            {"values", {{"variances", r.variances}, {"kolmogorov_distances", r.distances}}},
            {"residuals", nlohmann::json::object()},
            {"tolerances", {{"monotonicity_slack", 1e-3}}},
            {"pass", r.distances_non_increasing}};
}

}  // namespace pfq
