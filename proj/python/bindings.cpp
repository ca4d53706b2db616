#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "askw/error.hpp"
#include "askw/serialize.hpp"
#include "askw/verify.hpp"

namespace py = pybind11;
using namespace askw;

namespace {

// JSON crosses the boundary as text; the Python wrapper decodes it.
std::string dumps(const Json& j) { return j.dump(); }

std::vector<Rational> to_rationals(const std::vector<std::string>& values) {
  std::vector<Rational> out;
  for (const auto& v : values) out.push_back(parse_rational(v));
  return out;
}

std::string info(long p, long q, long ell) {
  const auto params = validate_params(p, q, ell);
  Json j;
  j["schema"] = kInfoSchema;
  j["params"] = params_json(params);
  j["counts"] = count_report_json(check_counting_lemmas(params));
  return dumps(j);
}

std::string generators(long p, long q, long ell, const std::string& fibre, const std::string& tie, bool all_pairs) {
  const auto params = validate_params(p, q, ell);
  const Fibre f = parse_fibre(fibre);
  const TieBreak t = parse_tie_break(tie);
  const IndexData data(params, t);
  switch (f) {
    case Fibre::Generic:
      return dumps(generators_document(params, f, t, build_G1<Cyclo>(data, f, all_pairs), build_G2_generic(data)));
    case Fibre::Special:
      return dumps(generators_document(params, f, t, build_G1<Fp>(data, f, all_pairs), build_G2_special(data)));
    case Fibre::Relative:
      break;
  }
  return dumps(generators_document(params, f, t, build_G1<Cyclo>(data, f, all_pairs), build_G2_relative(data)));
}

std::string certify(long p, long q, long ell, bool oracle, const std::string& tie, std::uint64_t seed,
                    std::optional<std::vector<std::string>> spec, bool corrupt_one) {
  const auto params = validate_params(p, q, ell);
  CertifyOptions o;
  o.tie_break = parse_tie_break(tie);
  o.oracle = oracle;
  o.seed = seed;
  o.corrupt_one = corrupt_one;
  if (spec) o.specialization = to_rationals(*spec);
  return dumps(certificate_json(certify_relative(params, o), false));
}

std::string oracle(long p, long q, long ell, const std::string& fibre, std::optional<std::vector<std::string>> spec) {
  const auto params = validate_params(p, q, ell);
  const IndexData data(params);
  const auto values = spec ? to_rationals(*spec) : default_specialization(params);
  return dumps(oracle_json(kernel_oracle(data, parse_fibre(fibre), values)));
}

}  // namespace

PYBIND11_MODULE(_askw, m) {
  m.doc() = "Exact canonical-ideal computations for a family of cyclic p-covers";

  // Messages carry the error kind as a "Kind: " prefix.
  static py::exception<Error> error(m, "AskwError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("genus", [](long p, long q, long ell) { return validate_params(p, q, ell).genus; }, py::arg("p"),
        py::arg("q"), py::arg("ell"));

  m.def(
      "index_set",
      [](long p, long q, long ell) {
        std::vector<std::pair<int, int>> out;
        for (const auto& v : build_A(validate_params(p, q, ell))) out.emplace_back(v.N, v.mu);
        return out;
      },
      py::arg("p"), py::arg("q"), py::arg("ell"), "A as (N, mu) pairs.");

  m.def(
      "minkowski_sum",
      [](long p, long q, long ell) {
        std::vector<std::pair<int, int>> out;
        for (const auto& pt : minkowski_closed(validate_params(p, q, ell))) out.emplace_back(pt.rho, pt.T);
        return out;
      },
      py::arg("p"), py::arg("q"), py::arg("ell"), "A+A as (rho, T) pairs.");

  m.def(
      "anchors",
      [](long p, long q, long ell, int i) {
        std::vector<std::pair<int, int>> out;
        for (const auto& pt : build_C(validate_params(p, q, ell), i)) out.emplace_back(pt.rho, pt.T);
        return out;
      },
      py::arg("p"), py::arg("q"), py::arg("ell"), py::arg("i") = 0, "C(i) as (rho, T) pairs.");

  m.def(
      "sigma",
      [](long p, long q, long ell, int rho, int T, const std::string& tie) {
        return to_string(sigma(validate_params(p, q, ell), {rho, T}, parse_tie_break(tie)));
      },
      py::arg("p"), py::arg("q"), py::arg("ell"), py::arg("rho"), py::arg("T"), py::arg("tie_break") = "default");

  m.def("_info", &info, py::arg("p"), py::arg("q"), py::arg("ell"), py::call_guard<py::gil_scoped_release>());
  m.def("_generators", &generators, py::arg("p"), py::arg("q"), py::arg("ell"), py::arg("fibre") = "relative",
        py::arg("tie_break") = "default", py::arg("all_pairs") = false, py::call_guard<py::gil_scoped_release>());
  m.def("_certify", &certify, py::arg("p"), py::arg("q"), py::arg("ell"), py::arg("oracle") = false,
        py::arg("tie_break") = "default", py::arg("seed") = 1, py::arg("specialization") = py::none(),
        py::arg("corrupt_one") = false, py::call_guard<py::gil_scoped_release>());
  m.def("_oracle", &oracle, py::arg("p"), py::arg("q"), py::arg("ell"), py::arg("fibre") = "generic",
        py::arg("specialization") = py::none(), py::call_guard<py::gil_scoped_release>());
}
