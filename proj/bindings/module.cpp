#include <optional>
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qss/classical.hpp"
#include "qss/encoding.hpp"
#include "qss/harness.hpp"

namespace py = pybind11;
using namespace qss;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null:
            return py::none();
        case nlohmann::json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer:
            return py::int_(j.get<std::int64_t>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<std::uint64_t>());
        case nlohmann::json::value_t::number_float:
            return py::float_(j.get<double>());
        case nlohmann::json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) {
                out[py::str(key)] = json_to_py(value);
            }
            return out;
        }
        default:
            return py::none();
    }
}

}  // namespace

PYBIND11_MODULE(qss, m) {
    m.doc() = "state-vector quantum subset-sum solver";
    m.attr("__version__") = kVersion;

    py::class_<ProblemInstance>(m, "ProblemInstance")
        .def(py::init([](std::vector<std::uint64_t> elements, std::uint64_t target) {
                 return ProblemInstance{std::move(elements), target};
             }),
             py::arg("elements"), py::arg("target"))
        .def_readwrite("elements", &ProblemInstance::elements)
        .def_readwrite("target", &ProblemInstance::target)
        .def_property_readonly("n", &ProblemInstance::n)
        .def("element_sum", &ProblemInstance::element_sum)
        .def("validate", &ProblemInstance::validate,
             py::arg("max_elements") = ProblemInstance::kDefaultMaxElements)
        .def("__repr__", [](const ProblemInstance& inst) {
            std::ostringstream out;
            out << "ProblemInstance(elements=[";
            for (std::size_t i = 0; i < inst.elements.size(); ++i) {
                if (i) out << ", ";
                out << inst.elements[i];
            }
            out << "], target=" << inst.target << ")";
            return out.str();
        });

    py::class_<ScaledInstance>(m, "ScaledInstance")
        .def_readonly("numerators", &ScaledInstance::numerators)
        .def_readonly("phase_bits", &ScaledInstance::phase_bits)
        .def_readonly("scaled_target", &ScaledInstance::scaled_target)
        .def_property_readonly("n", &ScaledInstance::n)
        .def("denominator", &ScaledInstance::denominator)
        .def("numerator_sum", &ScaledInstance::numerator_sum);

    py::class_<DiagonalUnitary>(m, "DiagonalUnitary")
        .def_readonly("numerators", &DiagonalUnitary::numerators)
        .def_readonly("phase_bits", &DiagonalUnitary::phase_bits)
        .def("__len__", &DiagonalUnitary::size)
        .def("angle", &DiagonalUnitary::angle, py::arg("subset_index"));

    m.def("scale_instance", &scale_instance, py::arg("instance"),
          py::arg("t") = std::nullopt,
          "Pick the phase-register width t and express every subset sum as an "
          "exact t-bit fraction.");
    m.def("phase_of", &phase_of, py::arg("scaled"), py::arg("subset_index"),
          "Exact phase numerator (denominator 2^t) of one subset.");
    m.def("build_diagonal", &build_diagonal, py::arg("scaled"),
          "All 2^n eigenphase numerators of the diagonal unitary.");

    py::class_<OracleAnswer>(m, "OracleAnswer")
        .def_readonly("decision", &OracleAnswer::decision)
        .def_readonly("witness", &OracleAnswer::witness)
        .def_readonly("max_reachable", &OracleAnswer::max_reachable)
        .def_readonly("good_count", &OracleAnswer::good_count);

    m.def("brute_force", &brute_force, py::arg("instance"), py::arg("max_n") = 20);
    m.def("dp_solve", &dp_solve, py::arg("instance"));
    m.def("verify", &verify, py::arg("instance"), py::arg("subset"));

    py::enum_<AmplifyMode>(m, "AmplifyMode")
        .value("ExactCount", AmplifyMode::ExactCount)
        .value("Blind", AmplifyMode::Blind);

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("instance", &RunConfig::instance)
        .def_readwrite("t_override", &RunConfig::t_override)
        .def_readwrite("mode", &RunConfig::mode)
        .def_readwrite("retries", &RunConfig::retries)
        .def_readwrite("seed", &RunConfig::seed)
        .def_readwrite("trace_stages", &RunConfig::trace_stages)
        .def_readwrite("max_restarts", &RunConfig::max_restarts)
        .def_readwrite("oracle_cap", &RunConfig::oracle_cap)
        .def("validate", &RunConfig::validate);

    m.def(
        "solve",
        [](const RunConfig& config, bool include_timings) {
            return json_to_py(solve(config).to_json(include_timings));
        },
        py::arg("config"), py::arg("include_timings") = true,
        "Run the full pipeline (QPE, amplification, per-qubit max search) and "
        "return the report as a dict.");

    m.def(
        "solve_instance",
        [](std::vector<std::uint64_t> elements, std::uint64_t target,
           std::uint64_t seed) {
            RunConfig config;
            config.instance = {std::move(elements), target};
            config.seed = seed;
            return json_to_py(solve(config).to_json(false));
        },
        py::arg("elements"), py::arg("target"), py::arg("seed") = 0,
        "Convenience wrapper: solve with default settings.");

    m.def(
        "bench",
        [](int n_from, int n_to, int element_bits, std::uint64_t seed) {
            py::list rows;
            for (const auto& row : bench(n_from, n_to, element_bits, seed).rows) {
                py::dict d;
                d["n"] = row.n;
                d["t"] = row.t;
                d["aa_iterations"] = row.aa_iterations;
                d["total_ms"] = row.total_ms;
                d["phase_type_total"] = row.gate_counts.phase_type_total();
                rows.append(d);
            }
            return rows;
        },
        py::arg("n_from"), py::arg("n_to"), py::arg("element_bits") = 8,
        py::arg("seed") = 0);
}
