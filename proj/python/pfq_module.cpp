#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pfq/cauchy_binet.hpp"
#include "pfq/determinants.hpp"
#include "pfq/pointfield.hpp"
#include "pfq/sampler.hpp"
#include "pfq/verify.hpp"

namespace py = pybind11;
using namespace pfq;

namespace {

QuadratureRule quad_for(const Kernel& k, int nodes) {
    switch (k.domain) {
        case Domain::Line: return gauss_hermite(nodes);
        case Domain::Finite: return k.native_quad;
        case Domain::Circle: return circle_trapezoid(nodes);
        default: throw std::invalid_argument("no 1D quadrature for this kernel domain");
    }
}

QuaternionMatrix matrix_from_list(const std::vector<std::vector<Quaternion>>& rows) {
    if (rows.empty()) return {};
    QuaternionMatrix m(int(rows.size()), int(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw std::invalid_argument("ragged rows");
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(int(i), int(j)) = rows[i][j];
    }
    return m;
}

Point point_from_seq(const std::vector<double>& v) {
    Point p;
    for (size_t i = 0; i < v.size() && i < 4; ++i) p.v[i] = v[i];
    return p;
}

std::vector<Point> points_from_seq(const std::vector<std::vector<double>>& pts) {
    std::vector<Point> out;
    for (const auto& p : pts) out.push_back(point_from_seq(p));
    return out;
}

}  // namespace

PYBIND11_MODULE(_pfq, m) {
    m.doc() = "Quaternion determinants, Pfaffian point field kernels and Monte Carlo oracles";

    py::class_<Quaternion>(m, "Quaternion")
        .def(py::init<>())
        .def(py::init<cplx>(), py::arg("s"))
        .def(py::init<cplx, cplx, cplx, cplx>(), py::arg("s"), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("s", &Quaternion::s)
        .def_readwrite("x", &Quaternion::x)
        .def_readwrite("y", &Quaternion::y)
        .def_readwrite("z", &Quaternion::z)
        .def("conj", &Quaternion::conj)
        .def("is_scalar", &Quaternion::is_scalar, py::arg("tol") = 1e-10)
        .def("is_real", &Quaternion::is_real, py::arg("tol") = 1e-10)
        .def("max_abs", &Quaternion::max_abs)
        .def(-py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def("__mul__", [](const Quaternion& q, cplx t) { return q * t; })
        .def("__rmul__", [](const Quaternion& q, cplx t) { return t * q; })
        .def("__repr__", [](const Quaternion& q) {
            std::ostringstream os;
            os << "Quaternion(" << q.s << ", " << q.x << ", " << q.y << ", " << q.z << ")";
            return os.str();
        });

    m.def("quat_i", &Quaternion::unit_i);
    m.def("quat_j", &Quaternion::unit_j);
    m.def("quat_k", &Quaternion::unit_k);

    py::class_<QuaternionMatrix>(m, "QuaternionMatrix")
        .def(py::init(&matrix_from_list), py::arg("rows"))
        .def_property_readonly("rows", &QuaternionMatrix::rows)
        .def_property_readonly("cols", &QuaternionMatrix::cols)
        .def("at", [](const QuaternionMatrix& m_, int i, int j) { return m_.at(i, j); })
        .def("__matmul__", [](const QuaternionMatrix& a, const QuaternionMatrix& b) { return a * b; });

    m.def("dual", &dual);
    m.def("is_selfdual", &is_selfdual, py::arg("x"), py::arg("tol") = 1e-10);
    m.def("phi_embed", &phi_embed);
    m.def("psi_adjoint", &psi_adjoint, py::arg("x"), py::arg("tol") = 1e-10);

    m.def("moore_dyson_cayley", &moore_dyson_cayley);
    m.def("moore_dyson_pfaffian", &moore_dyson_pfaffian, py::arg("x"), py::arg("tol") = 1e-9);
    m.def("moore_dyson_psi", &moore_dyson_psi, py::arg("x"), py::arg("tol") = 1e-9);
    m.def("study_det", &study_det);
    m.def("pfaffian", &pfaffian, py::arg("m"), py::arg("tol") = 1e-9);
    m.def("pfaffian_combinatorial", &pfaffian_combinatorial, py::arg("m"), py::arg("tol") = 1e-9);
    m.def("selfdual_eigenvalues", &selfdual_eigenvalues, py::arg("x"), py::arg("pair_tol") = 1e-6);

    m.def("cauchy_binet_sides", [](const QuaternionMatrix& c) {
        auto s = cauchy_binet_sides(c);
        return py::make_tuple(s.lhs, s.rhs);
    });
    m.def("cauchy_binet_weighted_sides", [](const QuaternionMatrix& c, const std::vector<cplx>& lam) {
        auto s = cauchy_binet_weighted_sides(c, lam);
        return py::make_tuple(s.lhs, s.rhs);
    });

    py::class_<Kernel>(m, "Kernel")
        .def_property_readonly("descriptor", [](const Kernel& k) { return k.descriptor; })
        .def_property_readonly("rank", &Kernel::rank)
        .def_property_readonly("lambdas",
                               [](const Kernel& k) {
                                   return k.diag ? k.diag->lambdas : std::vector<cplx>{};
                               })
        .def("eval", [](const Kernel& k, const std::vector<double>& x, const std::vector<double>& y) {
            return k.eval(point_from_seq(x), point_from_seq(y));
        });

    m.def("kernel", &parse_kernel, py::arg("descriptor"));
    m.def("circular_symplectic", &circular_symplectic, py::arg("N"), py::arg("quad_nodes") = 512);
    m.def("circular_symplectic_block_matrix", &circular_symplectic_block_matrix);
    m.def("gse", &gse, py::arg("N"), py::arg("quad_nodes") = 80);
    m.def("ginibre_quaternion", &ginibre_quaternion);
    m.def("bergman_quaternion", &bergman_quaternion);
    m.def("pfaffian_ginibre_complex", &pfaffian_ginibre_complex);
    m.def("finite_kernel", &finite_kernel);
    m.def("restrict_kernel", &restrict_kernel);
    m.def("sigma_n4", &sigma_n4);
    m.def("cse_a", &cse_a);

    m.def("correlation", [](const Kernel& k, const std::vector<std::vector<double>>& pts) {
        return correlation_value(k, points_from_seq(pts));
    });
    m.def("fredholm_det", [](const Kernel& k, cplx scale, int nodes) {
        auto f = fredholm_det(k, scale, quad_for(k, nodes));
        return py::make_tuple(f.value, f.tail_abs);
    }, py::arg("kernel"), py::arg("scale"), py::arg("nodes") = 64);
    m.def("char_function_count", [](const Kernel& k, double t, int nodes) {
        auto c = char_function_count(k, t, quad_for(k, nodes));
        return py::make_tuple(c.product_route, c.fredholm_route);
    }, py::arg("kernel"), py::arg("t"), py::arg("nodes") = 64);
    m.def("restricted_spectrum",
          [](const Kernel& k, double lo, double hi) { return restricted_spectrum(k, lo, hi); });
    m.def("expected_product", [](const Kernel& k, const std::function<cplx(double)>& f, int nodes) {
        auto r = expected_product(k, [&f](const Point& p) { return f(p.x0()); }, quad_for(k, nodes));
        return py::make_tuple(r.value, r.tail_abs);
    }, py::arg("kernel"), py::arg("f"), py::arg("nodes") = 64);
    m.def("count_distribution", [](const Kernel& k) {
        auto d = bernoulli_count_distribution(k);
        return py::make_tuple(d.pmf, d.mean, d.variance);
    });
    m.def("count_distribution_from_spectrum", [](const std::vector<cplx>& lam) {
        auto d = bernoulli_count_distribution(lam);
        return py::make_tuple(d.pmf, d.mean, d.variance);
    });
    m.def("kolmogorov_to_gaussian", [](const std::vector<cplx>& lam) {
        return kolmogorov_to_gaussian(bernoulli_count_distribution(lam));
    });

    py::class_<DiagonalFormReport>(m, "DiagonalFormReport")
        .def_readonly("has_form", &DiagonalFormReport::has_form)
        .def_readonly("is_quasi_real", &DiagonalFormReport::is_quasi_real)
        .def_readonly("is_real_form", &DiagonalFormReport::is_real_form)
        .def_readonly("lambdas_in_unit_interval", &DiagonalFormReport::lambdas_in_unit_interval);
    m.def("diagonal_form_check", &diagonal_form_check, py::arg("kernel"), py::arg("tol") = 1e-8);

    py::class_<ChainConfig>(m, "ChainConfig")
        .def(py::init<>())
        .def_readwrite("steps", &ChainConfig::steps)
        .def_readwrite("burnin", &ChainConfig::burnin)
        .def_readwrite("thinning", &ChainConfig::thinning)
        .def_readwrite("step_size", &ChainConfig::step_size)
        .def_readwrite("seed", &ChainConfig::seed)
        .def_readwrite("chains", &ChainConfig::chains);

    m.def("mcmc_cse", [](int N, const ChainConfig& cfg) {
        auto run = mcmc_cse(N, cfg);
        std::vector<std::vector<double>> pts;
        for (auto& c : run.configs) pts.push_back(c.points);
        return pts;
    });
    m.def("mcmc_gse", [](int N, const ChainConfig& cfg) {
        auto run = mcmc_gse(N, cfg);
        std::vector<std::vector<double>> pts;
        for (auto& c : run.configs) pts.push_back(c.points);
        return pts;
    });
    m.def("sample_gse_eigenvalues", [](int N, std::uint64_t seed) {
        Philox rng(seed, 0);
        return sample_gse_eigenvalues(N, rng);
    });

    m.def("example_selfdual_det0", &example_selfdual_det0);
    m.def("example_selfdual_det1", &example_selfdual_det1);
    m.def("example_negative_r1", &example_negative_r1);
    m.def("example_nonquasireal", &example_nonquasireal);

    m.def("run_suite", [](const std::string& name, int trials, std::uint64_t seed) {
        RunReport rep = run_suite(name, trials, seed);
        return py::make_tuple(rep.all_pass(), rep.to_json().dump());
    }, py::arg("suite"), py::arg("trials") = 100, py::arg("seed") = 1);

    m.attr("__version__") = "0.1.0";
}
