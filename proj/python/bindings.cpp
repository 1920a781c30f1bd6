#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "netmate/compiler.hpp"
#include "netmate/harness.hpp"
#include "netmate/partition.hpp"
#include "netmate/serialize.hpp"
#include "netmate/solver.hpp"

namespace py = pybind11;
using namespace netmate;

namespace {

std::string compile(const std::vector<std::int64_t>& values, int mate) {
  const PartitionInstance inst(values);
  const auto sc = mate == 1 ? compile_runner_mate1(inst) : compile_corp_mate2(inst);
  return serialize(StateDocument{sc.state, sc.manifest});
}

py::dict solve(const std::string& state_text, int mate, bool memo) {
  const auto doc = parse_state_document(state_text);
  SolverOptions opts;
  opts.memo = memo;
  SolveResult r;
  {
    py::gil_scoped_release release;
    r = mate == 1 ? solve_runner_mate1(doc.state, opts) : solve_corp_mate2(doc.state, opts);
  }
  py::dict out;
  out["winnable"] = r.winnable;
  out["claimed"] = std::string(to_string(r.claimed));
  out["line"] = r.winnable ? py::object(py::str(serialize(LineDocument{mate, r.claimed, r.witness}))) : py::none();
  out["nodes"] = r.nodes_explored;
  out["seconds"] = r.elapsed_seconds;
  return out;
}

py::dict run_replay(const std::string& state_text, const std::string& line_text) {
  const auto start = parse_state_document(state_text).state;
  const auto line = parse_line_document(line_text);
  const auto rep = replay(start, line.actions);
  py::dict out;
  out["final_status"] = rep.final_status();
  out["failed_step"] = rep.failed_step ? py::object(py::int_(*rep.failed_step)) : py::none();
  out["error"] = rep.error;
  out["ledger"] = format_ledger(rep);
  out["steps"] = rep.rows.size();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Netrunner mate-in-k reduction lab";

  py::register_exception<InstanceError>(m, "InstanceError", PyExc_ValueError);
  py::register_exception<SerializationError>(m, "SerializationError", PyExc_ValueError);
  py::register_exception<SolverPreconditionError>(m, "SolverPreconditionError", PyExc_ValueError);

  m.attr("SCHEMA_VERSION") = kSchemaVersion;
  m.def("compile", &compile, py::arg("values"), py::arg("mate") = 1,
        "Compile a 2-Partition instance for mate 1 or 2; returns a state document as JSON text.");
  m.def("solve", &solve, py::arg("state"), py::arg("mate"), py::arg("memo") = true);
  m.def("replay", &run_replay, py::arg("state"), py::arg("line"));
  m.def("render", [](const std::string& state_text) { return render(parse_state_document(state_text).state); },
        py::arg("state"));
  m.def(
      "balanced_partition",
      [](const std::vector<std::int64_t>& values) {
        const auto a = balanced_partition(PartitionInstance(values));
        return py::make_tuple(a.exists, a.witness ? py::cast(*a.witness) : py::none());
      },
      py::arg("values"));
  m.def(
      "balanced_partition_by_table",
      [](const std::vector<std::int64_t>& values) { return balanced_partition_by_table(PartitionInstance(values)); },
      py::arg("values"));
}
