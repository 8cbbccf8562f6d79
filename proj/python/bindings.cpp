// Python bindings for the main raclab operations. Matrices and kets cross
// the boundary as nested lists of complex numbers; reports as JSON strings
// the caller can feed to json.loads.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "raclab/classical.hpp"
#include "raclab/concat.hpp"
#include "raclab/earac.hpp"
#include "raclab/errors.hpp"
#include "raclab/povm_sdp.hpp"
#include "raclab/qcrac.hpp"
#include "raclab/reports.hpp"
#include "raclab/seesaw.hpp"
#include "raclab/version.hpp"

namespace py = pybind11;
using namespace raclab;

namespace {

std::vector<std::vector<Complex>> matrix_to_lists(const ComplexMatrix& m) {
    std::vector<std::vector<Complex>> rows(m.rows, std::vector<Complex>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) rows[i][j] = m(i, j);
    return rows;
}

}  // namespace

PYBIND11_MODULE(raclab, m) {
    m.doc() = "Random access code benchmarks: classical brute force, prepare-and-measure "
              "protocols, and see-saw optimized Bell strategies";
    m.attr("__version__") = kVersion;

    py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
    py::register_exception<InstanceTooLarge>(m, "InstanceTooLarge", PyExc_RuntimeError);

    m.def("qcrac_analytic", &qcrac_analytic, py::arg("d"),
          "Closed-form two-dit prepare-and-measure optimum 1/2 + 1/(2 sqrt d)");
    m.def(
        "qcrac_protocol_success",
        [](std::size_t d) { return sequential_success(explicit_qcrac_protocol(d)); }, py::arg("d"),
        "Evaluate the explicit two-dit protocol");

    m.def(
        "classical_optimum",
        [](std::size_t n, std::size_t d) {
            ClassicalOptimum best = classical_optimum(Scenario{n, d});
            return py::make_tuple(best.value.num, best.value.den, best.value.value());
        },
        py::arg("n"), py::arg("d"),
        "Exact brute-force classical optimum as (numerator, denominator, float)");
    m.def(
        "classical_analytic_n2",
        [](std::size_t d) {
            Rational r = classical_analytic_n2(d);
            return py::make_tuple(r.num, r.den, r.value());
        },
        py::arg("d"));

    m.def("earac_23_success", &earac_23_success,
          "Success probability of the explicit 2^(3)->1 Bell strategy (exactly 7/9)");
    m.def("explicit_a00", [] { return matrix_to_lists(explicit_a00()); },
          "Seed measurement operator of the explicit strategy");

    m.def(
        "seesaw",
        [](std::size_t n, std::size_t d, std::size_t restarts, std::uint64_t seed,
           std::size_t max_sweeps) {
            BellRacInstance inst = bell_rac_instance(n, d);
            SeesawConfig cfg;
            cfg.scenario = inst.scenario;
            cfg.restarts = restarts;
            cfg.max_sweeps = max_sweeps;
            cfg.seed = seed;
            SeesawResult result = seesaw(inst, cfg);
            py::dict out;
            out["best_value"] = result.best_value;
            out["best_restart"] = result.best_restart;
            out["trace"] = result.trace;
            out["restarts_summary"] = result.restarts_summary;
            return out;
        },
        py::arg("n"), py::arg("d"), py::arg("restarts") = 20, py::arg("seed") = 1,
        py::arg("max_sweeps") = 200, "See-saw lower bound on the Bell RAC value");

    m.def(
        "solve_povm",
        [](const std::vector<std::vector<std::vector<Complex>>>& rewards) {
            PovmSubproblem p;
            p.dim = rewards.empty() ? 0 : rewards.front().size();
            for (const auto& reward : rewards) {
                ComplexMatrix r(reward.size(), reward.size());
                for (std::size_t i = 0; i < reward.size(); ++i)
                    for (std::size_t j = 0; j < reward[i].size(); ++j) r(i, j) = reward[i][j];
                p.reward_operators.push_back(std::move(r));
            }
            PovmSolution sol = solve_povm(p);
            CertifyReport rep = certify(sol, p);
            py::dict out;
            out["primal_value"] = sol.primal_value;
            out["dual_value"] = sol.dual_value;
            out["duality_gap"] = rep.duality_gap;
            out["certified"] = rep.ok;
            std::vector<std::vector<std::vector<Complex>>> povm;
            for (const auto& element : sol.povm) povm.push_back(matrix_to_lists(element));
            out["povm"] = povm;
            return out;
        },
        py::arg("reward_operators"),
        "Maximize sum_a Tr(A^a R^a) over POVMs; returns the certified solution");

    m.def("concat_17_27", [] {
        BellRacInstance inst = bell_rac_instance(2, 3);
        OutcomeDistribution code = extract_outcome_distribution(explicit_earac_strategy(), inst);
        return concat_success(code, code);
    });

    m.def(
        "report_json",
        [](const std::string& command, std::size_t n, std::size_t d, std::size_t restarts,
           std::uint64_t seed) {
            if (command == "qcrac") return to_json(report_qcrac(d)).dump();
            if (command == "classical") return to_json(report_classical(n, d)).dump();
            if (command == "earac-explicit") return to_json(report_earac_explicit()).dump();
            if (command == "seesaw") return to_json(report_seesaw(n, d, restarts, seed)).dump();
            if (command == "concat") return to_json(report_concat()).dump();
            throw ContractViolation("unknown report command: " + command);
        },
        py::arg("command"), py::arg("n") = 2, py::arg("d") = 3, py::arg("restarts") = 20,
        py::arg("seed") = 1, "Machine-readable report, same schema as the CLI");
}
