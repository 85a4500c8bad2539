#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bhk/errors.hpp"
#include "bhk/milnor.hpp"
#include "bhk/verifier.hpp"

namespace py = pybind11;
using namespace bhk;

namespace {

RunOptions options_from(const InputSpec& spec, const std::optional<std::string>& engine, std::optional<long> margin,
                        std::optional<long> degree_bound, std::optional<unsigned> threads) {
  RunOptions o = spec.options;
  if (engine) o.engine = parse_engine(*engine);
  if (margin) o.window_margin = *margin;
  if (degree_bound) o.degree_bound = *degree_bound;
  if (threads) o.threads = *threads;
  return o;
}

// Reports cross the boundary as JSON text; the Python wrapper decodes them.
std::string analyze(const std::string& text) { return run_analyze(parse_input(text)).dump(); }

std::string rings(const std::string& text, const std::string& side, const std::optional<std::string>& engine,
                  std::optional<long> margin, std::optional<unsigned> threads) {
  if (side != "A" && side != "B") throw InputError("side must be \"A\" or \"B\"");
  InputSpec spec = parse_input(text);
  return run_rings(spec, side == "A" ? RingSide::A : RingSide::B,
                   options_from(spec, engine, margin, std::nullopt, threads))
      .dump();
}

std::string verify(const std::string& text, const std::optional<std::string>& engine, std::optional<long> margin,
                   std::optional<long> degree_bound, std::optional<unsigned> threads) {
  InputSpec spec = parse_input(text);
  return run_verify(spec, options_from(spec, engine, margin, degree_bound, threads)).dump();
}

std::string check_unified(const std::string& text, std::optional<long> degree_bound) {
  InputSpec spec = parse_input(text);
  return run_check_unified(spec, options_from(spec, std::nullopt, std::nullopt, degree_bound, std::nullopt)).dump();
}

std::string dual(const std::string& text) { return run_dual(parse_input(text)).dump(); }

std::vector<std::pair<std::string, std::size_t>> milnor(const std::string& text) {
  BhDatum d = make_datum(parse_input(text));
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const auto& [deg, dim] : milnor_dims(d.potential).graded()) out.emplace_back(to_string(deg), dim);
  return out;
}

}  // namespace

PYBIND11_MODULE(_bhk, m) {
  m.doc() = "Exact Hodge tables and mirror checks for invertible Landau-Ginzburg orbifolds";

  auto base = py::register_exception<Error>(m, "BhkError");
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<NotCalabiYau>(m, "NotCalabiYau", base.ptr());
  py::register_exception<DegeneratePotential>(m, "DegeneratePotential", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

  m.def("analyze", &analyze, py::arg("text"));
  m.def("rings", &rings, py::arg("text"), py::arg("side") = "B", py::arg("engine") = py::none(),
        py::arg("window_margin") = py::none(), py::arg("threads") = py::none());
  m.def("verify", &verify, py::arg("text"), py::arg("engine") = py::none(), py::arg("window_margin") = py::none(),
        py::arg("degree_bound") = py::none(), py::arg("threads") = py::none());
  m.def("check_unified", &check_unified, py::arg("text"), py::arg("degree_bound") = py::none());
  m.def("dual", &dual, py::arg("text"));
  m.def("milnor_dims", &milnor, py::arg("text"));
  m.def("exit_code", [](const std::string& report) { return verdict_exit_code(Json::parse(report)); });
  m.def("render_text", [](const std::string& report) { return render_text(Json::parse(report)); });
}
