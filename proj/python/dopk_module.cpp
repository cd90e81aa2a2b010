// Python bindings for the rational-backend operations: values cross the
// boundary as exact "p/q" strings, reports as plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "dopk/classical.hpp"
#include "dopk/ensembles.hpp"
#include "dopk/io.hpp"

namespace py = pybind11;
using namespace dopk;

namespace {

Rational parse_obj(const py::handle& h) {
    return parse_rational(py::str(h).cast<std::string>());
}

std::vector<Rational> parse_list(const py::iterable& xs) {
    std::vector<Rational> out;
    for (const py::handle& h : xs) out.push_back(parse_obj(h));
    return out;
}

std::vector<std::string> to_strings(const std::vector<Rational>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const Rational& x : xs) out.push_back(x.to_string());
    return out;
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

std::pair<Grid<Rational>, WeightTable<Rational>> grid_weights(const py::iterable& points,
                                                              const py::iterable& weights) {
    GridWeightInput in{parse_list(points), parse_list(weights)};
    if (in.points.size() != in.weights.size())
        throw std::invalid_argument("points and weights must have the same length");
    return to_grid_weights(in);
}

std::vector<std::vector<std::string>> matrix_strings(const Matrix<Rational>& m) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

PYBIND11_MODULE(dopk, m) {
    m.doc() = "Exact orthogonal polynomial duality and determinantal kernels on finite grids. "
              "Scalars are exact rationals passed as 'p/q' (or decimal) strings.";

    py::class_<Grid<Rational>>(m, "Grid")
        .def("__len__", [](const Grid<Rational>& g) { return g.size(); })
        .def("points", [](const Grid<Rational>& g) { return to_strings(g.points()); })
        .def("node_products",
             [](const Grid<Rational>& g) { return to_strings(g.node_products()); })
        .def("epsilons", [](const Grid<Rational>& g) { return g.epsilons(); });

    py::class_<OrthoSystem<Rational>>(m, "OrthoSystem")
        .def("degree_count", &OrthoSystem<Rational>::degree_count)
        .def("leading", [](const OrthoSystem<Rational>& s) { return to_strings(s.leading); })
        .def("norms", [](const OrthoSystem<Rational>& s) { return to_strings(s.norms); })
        .def("values",
             [](const OrthoSystem<Rational>& s) {
                 std::vector<std::vector<std::string>> rows;
                 for (const auto& row : s.values) rows.push_back(to_strings(row));
                 return rows;
             })
        .def("evaluate", [](const OrthoSystem<Rational>& s, std::size_t i, const py::handle& x) {
            return evaluate(s, i, parse_obj(x)).to_string();
        });

    m.def("make_grid", [](const py::iterable& pts) { return Grid<Rational>(parse_list(pts)); },
          py::arg("points"));

    m.def(
        "dual_weight",
        [](const py::iterable& pts, const py::iterable& ws) {
            auto [g, u] = grid_weights(pts, ws);
            return to_strings(dual_weight(g, u).values());
        },
        py::arg("points"), py::arg("weights"));

    m.def(
        "orthogonalize",
        [](const py::iterable& pts, const py::iterable& ws) {
            auto [g, u] = grid_weights(pts, ws);
            return orthogonalize(g, u);
        },
        py::arg("points"), py::arg("weights"));

    m.def(
        "verify_duality",
        [](const py::iterable& pts, const py::iterable& ws) {
            auto [g, u] = grid_weights(pts, ws);
            return json_to_py(verify_duality(dual_system(orthogonalize(g, u))).to_json());
        },
        py::arg("points"), py::arg("weights"));

    m.def(
        "kernel",
        [](const py::iterable& pts, const py::iterable& ws, std::size_t order) {
            auto [g, u] = grid_weights(pts, ws);
            return matrix_strings(kernel(orthogonalize(g, u), order).entries);
        },
        py::arg("points"), py::arg("weights"), py::arg("m"),
        "Conjugated-form correlation kernel K^(m) as exact rational strings.");

    m.def(
        "correlation",
        [](const py::iterable& pts, const py::iterable& ws, std::size_t order,
           const std::vector<std::size_t>& subset, bool complement) {
            auto [g, u] = grid_weights(pts, ws);
            SubsetMeasure<Rational> mu = ensemble(g, u, order);
            KernelMatrix<Rational> K = kernel(orthogonalize(g, u), order);
            if (complement) {
                mu = complement_measure(mu);
                K = complement_kernel(K);
            }
            py::dict out;
            out["bruteforce"] = correlation_bruteforce(mu, subset).to_string();
            out["determinantal"] = correlation_determinantal(K, subset).to_string();
            return out;
        },
        py::arg("points"), py::arg("weights"), py::arg("m"), py::arg("subset"),
        py::arg("complement") = false,
        "Probability that the m-point ensemble (or its complement) covers the subset, "
        "by direct summation and as a kernel minor.");

    m.def(
        "verify_measure_identity",
        [](const py::iterable& pts, const py::iterable& ws, std::size_t order) {
            auto [g, u] = grid_weights(pts, ws);
            return json_to_py(verify_measure_identity(g, u, order).to_json());
        },
        py::arg("points"), py::arg("weights"), py::arg("m"));

    m.def(
        "verify_kernel_duality",
        [](const py::iterable& pts, const py::iterable& ws, std::size_t order) {
            auto [g, u] = grid_weights(pts, ws);
            return json_to_py(verify_kernel_duality(dual_system(orthogonalize(g, u)), order).to_json());
        },
        py::arg("points"), py::arg("weights"), py::arg("m"));

    m.def(
        "pochhammer",
        [](const py::handle& a, unsigned long n) { return pochhammer(parse_obj(a), n).to_string(); },
        py::arg("a"), py::arg("n"), "Rising factorial a(a+1)...(a+n-1).");

    m.def(
        "hyp2f1",
        [](const py::handle& a, const py::handle& b, const py::handle& c, const py::handle& z) {
            return eval_terminating(hyp2f1(parse_obj(a), parse_obj(b), parse_obj(c), parse_obj(z)))
                .to_string();
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"),
        "Terminating 2F1 sum; the first upper parameter must be a non-positive integer.");

    m.def(
        "hyp3f2",
        [](const py::handle& a, const py::handle& b, const py::handle& c, const py::handle& d,
           const py::handle& e) {
            return eval_terminating(hyp3f2(parse_obj(a), parse_obj(b), parse_obj(c), parse_obj(d),
                                           parse_obj(e)))
                .to_string();
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("e"),
        "Terminating 3F2 sum at unit argument.");

    m.def(
        "pfaff_transform_rhs",
        [](const py::handle& a, const py::handle& b, const py::handle& c, const py::handle& z) {
            return pfaff_transform_rhs(parse_obj(a), parse_obj(b), parse_obj(c), parse_obj(z))
                .to_string();
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));

    m.def(
        "thomae_transform_rhs",
        [](const py::handle& a, const py::handle& b, const py::handle& c, const py::handle& d,
           const py::handle& e) {
            return thomae_transform_rhs(parse_obj(a), parse_obj(b), parse_obj(c), parse_obj(d),
                                        parse_obj(e))
                .to_string();
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("e"));

    m.def(
        "elementary_symmetric",
        [](const py::iterable& pts) {
            return to_strings(elementary_symmetric(Grid<Rational>(parse_list(pts))).full());
        },
        py::arg("points"), "E_0..E_{M+1} of the grid points.");

    m.def(
        "interpolation_coefficients",
        [](const py::iterable& pts, const py::iterable& values) {
            return to_strings(
                interpolation_coefficients(Grid<Rational>(parse_list(pts)), parse_list(values)));
        },
        py::arg("points"), py::arg("values"),
        "Monomial coefficients (ascending) of the interpolant through the nodes.");

    m.def(
        "cd_kernel_offdiag",
        [](const py::iterable& pts, const py::iterable& ws, std::size_t order, std::size_t j,
           std::size_t k) {
            auto [g, u] = grid_weights(pts, ws);
            return cd_kernel_offdiag(orthogonalize(g, u), order, j, k).to_string();
        },
        py::arg("points"), py::arg("weights"), py::arg("m"), py::arg("j"), py::arg("k"),
        "Christoffel-Darboux closed form of sum_{i<m} P_i(x_j)P_i(x_k)/p_i, j != k.");

    m.def(
        "krawtchouk_value",
        [](long n, long x, const py::handle& p, long n_max) {
            return krawtchouk_value(n, x, KrawtchoukParams(parse_obj(p), n_max)).to_string();
        },
        py::arg("n"), py::arg("x"), py::arg("p"), py::arg("N"));

    m.def(
        "hahn_value",
        [](long n, long x, const py::handle& alpha, const py::handle& beta, long n_max) {
            return hahn_value(n, x, HahnParams(parse_obj(alpha), parse_obj(beta), n_max))
                .to_string();
        },
        py::arg("n"), py::arg("x"), py::arg("alpha"), py::arg("beta"), py::arg("N"));

    m.def(
        "verify_krawtchouk",
        [](const py::handle& p, long n_max) {
            return json_to_py(verify_krawtchouk_reflection(KrawtchoukParams(parse_obj(p), n_max)).to_json());
        },
        py::arg("p"), py::arg("N"));

    m.def(
        "verify_hahn",
        [](const py::handle& alpha, const py::handle& beta, long n_max) {
            return json_to_py(
                verify_hahn_reflection(HahnParams(parse_obj(alpha), parse_obj(beta), n_max)).to_json());
        },
        py::arg("alpha"), py::arg("beta"), py::arg("N"));

    m.def(
        "limit_check",
        [](const py::handle& p, long n_max, const py::iterable& ts) {
            return json_to_py(limit_transition_check(parse_obj(p), n_max, parse_list(ts)).to_json());
        },
        py::arg("p"), py::arg("N"), py::arg("t_values"));

    m.attr("__version__") = "0.1.0";
}
