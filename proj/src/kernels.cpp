#include "pfq/kernels.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "pfq/determinants.hpp"

namespace pfq {

using std::numbers::pi;

Quaternion cse_a(double p) {
    return {0.0, cplx(0.0, (p * p - 1.0) / (2.0 * p)), cplx((p * p + 1.0) / (2.0 * p)), 0.0};
}

Quaternion sigma_n4(int N, double theta) {
    Quaternion sum{};
    for (int k = 0; k < N; ++k) {
        double p = k + 0.5;
        sum += Quaternion{std::cos(p * theta)} + std::sin(p * theta) * cse_a(p);
    }
    return (1.0 / (2.0 * pi)) * sum;
}

Kernel circular_symplectic(int N, int quad_nodes) {
    if (N < 1) throw std::invalid_argument("circular_symplectic: N >= 1");
    Kernel k;
    k.domain = Domain::Circle;
    k.descriptor = "cse:N=" + std::to_string(N);
    k.lo = -pi;
    k.hi = pi;
    k.native_quad = circle_trapezoid(quad_nodes);
    k.eval_core = [N](const Point& x, const Point& y) { return sigma_n4(N, x.x0() - y.x0()); };
    DiagonalForm d;
    const double c = 1.0 / std::sqrt(2.0 * pi);
    for (int j = 0; j < N; ++j) {
        double p = j + 0.5;
        d.lambdas.push_back(1.0);
        Quaternion ap = cse_a(p);
        d.funcs.push_back([p, ap, c](const Point& t) {
            return c * (Quaternion{std::cos(p * t.x0())} + std::sin(p * t.x0()) * ap);
        });
    }
    k.diag = std::move(d);
    return k;
}

QuaternionMatrix circular_symplectic_block_matrix(int N) {
    QuaternionMatrix m(2 * N, 2 * N);
    for (int j = 0; j < N; ++j) {
        Quaternion ap = cse_a(j + 0.5);
        m.at(2 * j, 2 * j) = 0.5;
        m.at(2 * j, 2 * j + 1) = 0.5 * ap;
        m.at(2 * j + 1, 2 * j) = -0.5 * ap;
        m.at(2 * j + 1, 2 * j + 1) = 0.5;
    }
    return m;
}

std::vector<std::vector<Quaternion>> circular_symplectic_factors(int N) {
    std::vector<std::vector<Quaternion>> vs(N, std::vector<Quaternion>(2 * N));
    const double c = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < N; ++j) {
        vs[j][2 * j] = Quaternion{c};
        vs[j][2 * j + 1] = -c * cse_a(j + 0.5);  // dual entry of a_p
    }
    return vs;
}

namespace {

struct GsePolys {
    std::vector<Polynomial> q, dq;
};

// phi(chi_k) without the sqrt(w) factor.
Complex2x2 chi_core(const GsePolys& g, int k, double x) {
    return {g.q[2 * k](x), -g.dq[2 * k](x), -g.q[2 * k + 1](x), g.dq[2 * k + 1](x)};
}

}  // namespace

Kernel gse(int N, int quad_nodes) {
    if (N < 1) throw std::invalid_argument("gse: N >= 1");
    auto polys = std::make_shared<GsePolys>();
    polys->q = skew_orthogonal_polys(N);
    for (const auto& p : polys->q) polys->dq.push_back(p.derivative());

    Kernel k;
    k.domain = Domain::Line;
    k.descriptor = "gse:N=" + std::to_string(N);
    k.lo = -std::numeric_limits<double>::infinity();
    k.hi = std::numeric_limits<double>::infinity();
    k.native_quad = gauss_hermite(quad_nodes);
    k.sqrt_weight = [](const Point& p) { return std::exp(-0.5 * p.x0() * p.x0()); };
    k.eval_core = [polys, N](const Point& x, const Point& y) {
        Complex2x2 sum{};
        for (int j = 0; j < N; ++j)
            sum = sum + chi_core(*polys, j, x.x0()).adjugate() * chi_core(*polys, j, y.x0());
        return phi_inv(sum);
    };
    DiagonalForm d;
    for (int j = 0; j < N; ++j) {
        d.lambdas.push_back(1.0);
        d.funcs.push_back([polys, j](const Point& p) { return phi_inv(chi_core(*polys, j, p.x0()).adjugate()); });
    }
    k.diag = std::move(d);
    return k;
}

Kernel ginibre_quaternion(int n) {
    if (n < 0) throw std::invalid_argument("ginibre_quaternion: n >= 0");
    Kernel k;
    k.domain = Domain::QuaternionSpace;
    k.descriptor = "ginibre-q:n=" + std::to_string(n);
    k.measure_weight = [](const Point& p) {
        double r2 = p.v[0] * p.v[0] + p.v[1] * p.v[1] + p.v[2] * p.v[2] + p.v[3] * p.v[3];
        return std::exp(-r2) / (pi * pi);
    };
    k.eval_core = [n](const Point& x, const Point& y) {
        Quaternion z = x.as_quaternion(), wc = y.as_quaternion().conj();
        Quaternion sum{}, zp{1.0}, wp{1.0};
        double fact = 1.0;  // (k+1)!
        for (int j = 0; j <= n; ++j) {
            fact *= j + 1;
            sum += (1.0 / fact) * (zp * wp);
            zp = zp * z;
            wp = wp * wc;
        }
        return sum;
    };
    DiagonalForm d;
    double fact = 1.0;
    for (int j = 0; j <= n; ++j) {
        fact *= j + 1;
        double c = 1.0 / std::sqrt(fact);
        d.lambdas.push_back(1.0);
        d.funcs.push_back([j, c](const Point& p) { return c * pow(p.as_quaternion(), j); });
    }
    k.diag = std::move(d);
    return k;
}

Kernel bergman_quaternion(int n) {
    if (n < 0) throw std::invalid_argument("bergman_quaternion: n >= 0");
    auto check = [](const Point& p) {
        if (p.abs4() > 1.0 + 1e-12) throw std::domain_error("bergman_quaternion: point outside the unit ball");
    };
    Kernel k;
    k.domain = Domain::QuaternionBall;
    k.descriptor = "bergman-q:n=" + std::to_string(n);
    k.measure_weight = [](const Point&) { return 1.0 / (pi * pi); };
    k.eval_core = [n, check](const Point& x, const Point& y) {
        check(x);
        check(y);
        Quaternion z = x.as_quaternion(), wc = y.as_quaternion().conj();
        Quaternion sum{}, zp{1.0}, wp{1.0};
        for (int j = 0; j <= n; ++j) {
            sum += double(j + 2) * (zp * wp);
            zp = zp * z;
            wp = wp * wc;
        }
        return sum;
    };
    DiagonalForm d;
    for (int j = 0; j <= n; ++j) {
        double c = std::sqrt(double(j + 2));
        d.lambdas.push_back(1.0);
        d.funcs.push_back([j, c, check](const Point& p) {
            check(p);
            return c * pow(p.as_quaternion(), j);
        });
    }
    k.diag = std::move(d);
    return k;
}

cplx pfaffian_ginibre_phi(int N, cplx u, cplx v) {
    cplx sum = 0.0;
    for (int j = 0; j < N; ++j) {
        // 2^j j! / (2j+1)!
        double cj = 1.0;
        for (int t = 1; t <= j; ++t) cj *= 2.0 * t;
        for (int t = 1; t <= 2 * j + 1; ++t) cj /= t;
        double ci = 1.0;  // 1 / (2^i i!)
        cplx u2 = u * u, v2 = v * v;
        cplx upow = 1.0, vpow = 1.0;
        for (int i = 0; i <= j; ++i) {
            sum += cj * ci * (upow * std::pow(v, 2 * j + 1) - vpow * std::pow(u, 2 * j + 1));
            ci /= 2.0 * (i + 1);
            upow *= u2;
            vpow *= v2;
        }
    }
    return sum / (2.0 * pi);
}

Kernel pfaffian_ginibre_complex(int N) {
    if (N < 1) throw std::invalid_argument("pfaffian_ginibre_complex: N >= 1");
    Kernel k;
    k.domain = Domain::ComplexPlane;
    k.descriptor = "pfaffian-ginibre-c:N=" + std::to_string(N);
    k.eval_core = [N](const Point& x, const Point& y) {
        cplx z = x.as_complex(), w = y.as_complex();
        Complex2x2 rep{pfaffian_ginibre_phi(N, w, std::conj(z)), pfaffian_ginibre_phi(N, std::conj(w), std::conj(z)),
                       pfaffian_ginibre_phi(N, z, w), pfaffian_ginibre_phi(N, z, std::conj(w))};
        return phi_inv(rep);
    };
    return k;
}

namespace {

using QVec = std::vector<Quaternion>;

Quaternion dot(const QVec& u, const QVec& v) {
    Quaternion s{};
    for (size_t i = 0; i < u.size(); ++i) s += u[i].conj() * v[i];
    return s;
}

// Diagonal form of a finite self-dual kernel from the eigendecomposition of
// phi(K). Returns empty when the matrix has no (numerically recoverable)
// diagonal form; the caller verifies reconstruction before trusting it.
std::optional<DiagonalForm> finite_diagonal_form(const QuaternionMatrix& m) {
    const int n = m.rows();
    Eigen::ComplexEigenSolver<ComplexMatrix> es(phi_embed(m), true);
    if (es.info() != Eigen::Success) return std::nullopt;

    std::vector<int> order(2 * n);
    for (int i = 0; i < 2 * n; ++i) order[i] = i;
    auto ev = es.eigenvalues();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (ev(a).real() != ev(b).real()) return ev(a).real() < ev(b).real();
        return ev(a).imag() < ev(b).imag();
    });

    // pair columns 2t, 2t+1 into quaternion vectors; only the nonzero
    // eigenvalues enter the form (zero modes may be isotropic and are
    // irrelevant to sum lambda u u*)
    std::vector<QVec> vecs;
    std::vector<cplx> lams;
    for (int t = 0; t < n; ++t) {
        cplx l1 = ev(order[2 * t]), l2 = ev(order[2 * t + 1]);
        if (std::abs(l1 - l2) > 1e-7 * (1.0 + std::abs(l1))) return std::nullopt;
        if (std::abs(0.5 * (l1 + l2)) < 1e-10) continue;
        QVec v(n);
        auto c1 = es.eigenvectors().col(order[2 * t]);
        auto c2 = es.eigenvectors().col(order[2 * t + 1]);
        for (int l = 0; l < n; ++l) v[l] = phi_inv({c1(2 * l), c2(2 * l), c1(2 * l + 1), c2(2 * l + 1)});
        vecs.push_back(std::move(v));
        lams.push_back(0.5 * (l1 + l2));
    }

    // right-module Gram-Schmidt, mixing only within (numerically) equal
    // eigenvalues so K = sum lambda u u* is preserved
    const int r = int(vecs.size());
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < i; ++j) {
            if (std::abs(lams[i] - lams[j]) > 1e-6 * (1.0 + std::abs(lams[i]))) continue;
            Quaternion g = dot(vecs[j], vecs[i]);
            for (int l = 0; l < n; ++l) vecs[i][l] -= vecs[j][l] * g;
        }
        Quaternion nrm = dot(vecs[i], vecs[i]);
        if (!nrm.is_scalar(1e-8)) return std::nullopt;
        cplx ns = nrm.s;
        if (std::abs(ns) < 1e-10) return std::nullopt;  // isotropic eigenvector
        cplx inv = 1.0 / std::sqrt(ns);
        for (int l = 0; l < n; ++l) vecs[i][l] = vecs[i][l] * inv;
    }

    DiagonalForm d;
    for (int i = 0; i < r; ++i) {
        auto col = std::make_shared<QVec>(vecs[i]);
        d.lambdas.push_back(lams[i]);
        d.funcs.push_back([col](const Point& p) { return (*col)[size_t(p.x0() + 0.5)]; });
    }
    return d;
}

bool diagonal_form_reconstructs(const QuaternionMatrix& m, const DiagonalForm& d, double tol) {
    const int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Quaternion s{};
            for (int k = 0; k < d.rank(); ++k)
                s += d.lambdas[k] * (d.funcs[k](Point::index(i)) * d.funcs[k](Point::index(j)).conj());
            if (!approx_eq(s, m.at(i, j), tol)) return false;
        }
    // orthonormality under counting measure
    for (int k = 0; k < d.rank(); ++k)
        for (int l = 0; l < d.rank(); ++l) {
            Quaternion s{};
            for (int i = 0; i < n; ++i) s += d.funcs[k](Point::index(i)).conj() * d.funcs[l](Point::index(i));
            if (!approx_eq(s, Quaternion{k == l ? 1.0 : 0.0}, tol)) return false;
        }
    return true;
}

}  // namespace

Kernel finite_kernel(const QuaternionMatrix& entries) {
    if (entries.rows() != entries.cols()) throw std::invalid_argument("finite_kernel: square matrix required");
    if (selfdual_defect(entries) > 1e-9) throw std::invalid_argument("finite_kernel: entries must be self-dual");
    const int n = entries.rows();
    auto m = std::make_shared<QuaternionMatrix>(entries);
    Kernel k;
    k.domain = Domain::Finite;
    k.descriptor = "finite:n=" + std::to_string(n);
    k.lo = 0.0;
    k.hi = double(n);
    k.native_quad = counting_rule(n);
    k.eval_core = [m, n](const Point& x, const Point& y) {
        int i = int(x.x0() + 0.5), j = int(y.x0() + 0.5);
        if (i < 0 || i >= n || j < 0 || j >= n) throw std::out_of_range("finite_kernel: point index");
        return m->at(i, j);
    };
    if (auto d = finite_diagonal_form(entries); d && diagonal_form_reconstructs(entries, *d, 1e-7)) k.diag = std::move(d);
    return k;
}

Kernel restrict_kernel(const Kernel& k, double lo, double hi) {
    if (lo < k.lo - 1e-12 || hi > k.hi + 1e-12) throw std::invalid_argument("restrict_kernel: sub-domain exceeds the kernel domain");
    Kernel r = k;
    r.descriptor = k.descriptor + "|restricted";
    r.diag.reset();  // restriction destroys the diagonal form
    auto base = k.eval_core;
    r.eval_core = [base, lo, hi](const Point& x, const Point& y) {
        if (x.x0() < lo || x.x0() >= hi || y.x0() < lo || y.x0() >= hi) return Quaternion{};
        return base(x, y);
    };
    return r;
}

namespace {

std::map<std::string, std::string> parse_params(const std::string& s) {
    std::map<std::string, std::string> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string kv = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t eq = kv.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("kernel descriptor: expected key=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int single_int_param(const std::string& params, const std::string& key, const std::string& name) {
    auto kv = parse_params(params);
    for (const auto& [k, v] : kv)
        if (k != key) throw std::invalid_argument("kernel '" + name + "': unknown key '" + k + "'");
    if (!kv.count(key)) throw std::invalid_argument("kernel '" + name + "': missing key '" + key + "'");
    return std::stoi(kv.at(key));
}

}  // namespace

Kernel parse_kernel(const std::string& descriptor) {
    size_t colon = descriptor.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("kernel descriptor: expected name:params");
    std::string name = descriptor.substr(0, colon);
    std::string rest = descriptor.substr(colon + 1);
    if (name == "cse") return circular_symplectic(single_int_param(rest, "N", name));
    if (name == "gse") return gse(single_int_param(rest, "N", name));
    if (name == "ginibre-q") return ginibre_quaternion(single_int_param(rest, "n", name));
    if (name == "bergman-q") return bergman_quaternion(single_int_param(rest, "n", name));
    if (name == "pfaffian-ginibre-c") return pfaffian_ginibre_complex(single_int_param(rest, "N", name));
    if (name == "finite") return finite_kernel(load_matrix_json(rest));
    throw std::invalid_argument("unknown kernel name '" + name + "'");
}

QuaternionMatrix load_matrix_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    nlohmann::json j;
    in >> j;
    int n = j.at("n").get<int>();
    const auto& e = j.at("entries");
    if (int(e.size()) != n * n) throw std::runtime_error("matrix file: expected n*n entries");
    QuaternionMatrix m(n, n);
    for (int i = 0; i < n * n; ++i) {
        const auto& q = e.at(i);
        if (q.size() != 4) throw std::runtime_error("matrix file: quaternion needs 4 complex pairs");
        std::array<cplx, 4> comp;
        for (int t = 0; t < 4; ++t) comp[t] = cplx(q.at(t).at(0).get<double>(), q.at(t).at(1).get<double>());
        m.at(i / n, i % n) = {comp[0], comp[1], comp[2], comp[3]};
    }
    return m;
}

void save_matrix_json(const QuaternionMatrix& m, const std::string& path) {
    if (m.rows() != m.cols()) throw std::invalid_argument("save_matrix_json: square matrix required");
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Quaternion& q = m.at(i, j);
            entries.push_back({{q.s.real(), q.s.imag()},
                               {q.x.real(), q.x.imag()},
                               {q.y.real(), q.y.imag()},
                               {q.z.real(), q.z.imag()}});
        }
    nlohmann::json j{{"n", m.rows()}, {"entries", entries}};
    std::ofstream out(path);
    out << j.dump(1) << "\n";
}

}  // namespace pfq
