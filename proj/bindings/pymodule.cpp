#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "exalg/counterexample.hpp"
#include "exalg/extensions.hpp"
#include "exalg/generator.hpp"
#include "exalg/json_io.hpp"
#include "exalg/regtools.hpp"

namespace py = pybind11;
using namespace exalg;

namespace {

// the module speaks JSON strings; the python package decodes them
std::string analyze_algebra(const std::string& algebra_json) {
  FDAlgebra a = io::algebra_from_json(Json::parse(algebra_json));
  WedderburnReport rep = structure::wedderburn(a);
  Json j = io::wedderburn_to_json(a, rep);
  MatricialResult mr = structure::is_matricial(a);
  j["matricial"] = mr.matricial;
  if (!mr.matricial) j["matricial_reason"] = mr.reason;
  return j.dump();
}

std::string radical_basis(const std::string& algebra_json) {
  FDAlgebra a = io::algebra_from_json(Json::parse(algebra_json));
  auto rad = structure::radical(a);
  Json j;
  j["radical_dim"] = rad.dim();
  j["radical"] = io::subspace_to_json(rad);
  return j.dump();
}

std::string quasi_inverse_py(const std::string& algebra_json, const std::string& element_json) {
  FDAlgebra a = io::algebra_from_json(Json::parse(algebra_json));
  auto x = io::element_from_json(a.field(), Json::parse(element_json));
  auto y = regtools::quasi_inverse(a, x);
  return io::element_to_json(a.field(), y).dump();
}

std::string unit_regular_witness_py(const std::string& algebra_json,
                                    const std::string& element_json) {
  FDAlgebra a = io::algebra_from_json(Json::parse(algebra_json));
  auto x = io::element_from_json(a.field(), Json::parse(element_json));
  auto wit = regtools::unit_regular_witness(a, x);
  Json j;
  j["x"] = io::element_to_json(a.field(), wit.x);
  j["y"] = io::element_to_json(a.field(), wit.y);
  j["u"] = io::element_to_json(a.field(), *wit.unit);
  j["u_inv"] = io::element_to_json(a.field(), *wit.unit_inv);
  return j.dump();
}

std::string matrix_algebra_py(const std::string& field_json, int n) {
  FieldRef f = make_field(io::field_desc_from_json(Json::parse(field_json)));
  return io::algebra_to_json(algcore::matrix_algebra(f, n)).dump();
}

std::string generate_extension(uint64_t seed, const std::string& field_json,
                               const std::vector<int>& ideal_sizes,
                               const std::vector<int>& quotient_sizes) {
  FieldRef f = make_field(io::field_desc_from_json(Json::parse(field_json)));
  ExtensionProfile prof;
  for (int n : ideal_sizes) prof.ideal_blocks.push_back({n, {}});
  for (int n : quotient_sizes) prof.quotient_blocks.push_back({n, {}});
  return io::extension_to_json(gen::generate_random_extension(seed, f, prof).inst).dump();
}

std::string lift_subalgebra_py(const std::string& extension_json) {
  ExtensionInstance ext = io::extension_from_json(Json::parse(extension_json));
  auto full = linalg::subspace_full(ext.q.ambient.field(), ext.q.quotient.dim());
  auto [t, trace] = extensions::lift_subalgebra(ext, full);
  Json j;
  j["t_dim"] = t.dim();
  j["t"] = io::subspace_to_json(t);
  j["f"] = io::element_to_json(ext.q.ambient.field(), trace.f);
  return j.dump();
}

std::string envelope_py(const std::string& extension_json, const std::string& kind) {
  ExtensionInstance ext = io::extension_from_json(Json::parse(extension_json));
  std::vector<std::vector<Scalar>> xs;
  for (int i = 0; i < ext.q.ambient.dim(); ++i) xs.push_back(ext.q.ambient.basis_element(i));
  Json j;
  if (kind == "matricial") {
    auto [s, units] = extensions::matricial_envelope(ext, xs);
    j["envelope_dim"] = s.dim();
    j["envelope"] = io::subspace_to_json(s);
  } else if (kind == "fdss") {
    auto [s, rep] = extensions::fdss_envelope(ext, xs);
    j["envelope_dim"] = s.dim();
    j["envelope"] = io::subspace_to_json(s);
    j["semisimple"] = rep.semisimple;
  } else {
    fail(Err::UnsupportedParameters, "kind must be matricial or fdss");
  }
  return j.dump();
}

std::string counterexample_py(uint64_t p, int n, bool sanity) {
  auto verdict = cx::counterexample_verify(p, n, sanity);
  Json j;
  j["p"] = p;
  j["n"] = n;
  j["sanity_nu_zero"] = sanity;
  j["verdict"] = verdict.feasible ? "Feasible" : "Infeasible";
  j["has_certificate"] = verdict.certificate.has_value();
  return j.dump();
}

std::string scalar_arith(const std::string& field_json, const std::string& a,
                         const std::string& b, const std::string& op) {
  FieldRef f = make_field(io::field_desc_from_json(Json::parse(field_json)));
  Scalar x = f->parse(a), y = f->parse(b);
  Scalar r = f->zero();
  if (op == "add")
    r = f->add(x, y);
  else if (op == "sub")
    r = f->sub(x, y);
  else if (op == "mul")
    r = f->mul(x, y);
  else if (op == "div")
    r = f->div(x, y);
  else
    fail(Err::UnsupportedParameters, "op must be add/sub/mul/div");
  return f->to_string(r);
}

}  // namespace

PYBIND11_MODULE(_exalg, m) {
  m.doc() = "exact structure theory for finite dimensional associative algebras";

  py::register_exception<Error>(m, "ExalgError");

  m.def("analyze_algebra", &analyze_algebra, py::arg("algebra_json"),
        "Wedderburn analysis of an algebra (JSON in, JSON out)");
  m.def("radical_basis", &radical_basis, py::arg("algebra_json"));
  m.def("quasi_inverse", &quasi_inverse_py, py::arg("algebra_json"), py::arg("element_json"));
  m.def("unit_regular_witness", &unit_regular_witness_py, py::arg("algebra_json"),
        py::arg("element_json"));
  m.def("matrix_algebra", &matrix_algebra_py, py::arg("field_json"), py::arg("n"));
  m.def("generate_extension", &generate_extension, py::arg("seed"), py::arg("field_json"),
        py::arg("ideal_sizes"), py::arg("quotient_sizes"));
  m.def("lift_subalgebra", &lift_subalgebra_py, py::arg("extension_json"));
  m.def("envelope", &envelope_py, py::arg("extension_json"), py::arg("kind"));
  m.def("counterexample", &counterexample_py, py::arg("p"), py::arg("n"),
        py::arg("sanity") = false);
  m.def("scalar_arith", &scalar_arith, py::arg("field_json"), py::arg("a"), py::arg("b"),
        py::arg("op"));
}
