#include "scy/acceptance.hpp"
#include "scy/calculators.hpp"
#include "scy/local.hpp"
#include "scy/symplectic.hpp"
#include "scy/theta.hpp"
#include "scy/variety.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace scy;

namespace {

// JSON values cross the boundary as Python objects through the json module.
py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(scy, m)
{
    m.doc() = "Group, theta, variety and quotient calculators over Q(zeta8)";

    m.def("group_orders", [] {
        return py::dict(py::arg("linear") = linear_group().order(), py::arg("projective") = projective_group().order(),
                        py::arg("G") = local_groups().G.order(), py::arg("H") = local_groups().H.order(),
                        py::arg("H0") = local_groups().H0.size());
    });
    m.def("indices", [] {
        IndexReport r = gamma_prime_indices();
        return py::dict(py::arg("Gamma20[2]") = r.gamma20_2, py::arg("Gamma20[2]n") = r.gamma20_2n,
                        py::arg("HatGamma20[2]") = r.hat, py::arg("HatGamma20[2]n") = r.hat_n);
    });
    m.def("phi", [](const std::array<long long, 16>& matrix, bool fricke) {
        return phi(SpElement::from_ints(matrix, fricke)).str();
    }, py::arg("matrix"), py::arg("fricke") = false);

    m.def("theta", [](int a, int b, std::complex<double> z0, std::complex<double> z1, std::complex<double> z2) {
        return theta_eval(a, b, SiegelPoint{z0, z1, z2}).value;
    }, py::arg("a"), py::arg("b"), py::arg("z0"), py::arg("z1"), py::arg("z2"));
    m.def("verify_relations", &verify_relations, py::arg("samples") = 20, py::arg("seed") = 7);

    m.def("nodes", [] {
        std::vector<std::vector<std::string>> out;
        for (auto& p : nodes().nodes) {
            std::vector<std::string> row;
            for (auto& c : p) row.push_back(c.pretty());
            out.push_back(row);
        }
        return out;
    });
    m.def("subgroup_count", [] { return classify_all_subgroups().size(); });

    m.def("fixed_census", [](int i) { return fixed_census(fixed_locus(involution_transform(i))); }, py::arg("involution"));
    m.def("report", [](int i, const std::string& cache) {
        const PicardData& pd = [&]() -> const PicardData& {
            static PicardData held = picard_load_or_build(cache);
            return held;
        }();
        return to_python(report_to_json(i == 0 ? trivial_report(pd) : involution_report(i, pd)));
    }, py::arg("involution"), py::arg("cache") = "picard_cache.json",
       "Quotient report; involution 0 is the trivial group.");

    m.def("verify", [](std::vector<int> only) {
        AcceptanceOptions opt;
        opt.only = std::move(only);
        py::list out;
        for (auto& r : run_acceptance(opt))
            out.append(py::dict(py::arg("id") = r.id, py::arg("title") = r.title, py::arg("passed") = r.passed,
                                py::arg("checks") = r.checks, py::arg("seconds") = r.seconds));
        return out;
    }, py::arg("only") = std::vector<int>{});
}
