// Python bindings for the zerosquare core. Matrices cross the boundary as
// sequences of rows whose entries are ints or element-text strings;
// results mirror the CLI's JSON shapes as plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "json.hpp"
#include "zerosquare/io.hpp"
#include "zerosquare/normalform.hpp"
#include "zerosquare/oracle.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace zsq;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const json& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

Matrix matrix_from_py(const py::sequence& rows, const std::string& ring_sel) {
  Ring ring = Ring::parse_selector(ring_sel);
  std::vector<std::vector<RingElem>> data;
  for (const py::handle& row : rows) {
    std::vector<RingElem> r;
    for (const py::handle& cell : py::cast<py::sequence>(row))
      r.push_back(ring.parse_elem(py::cast<std::string>(py::str(cell))));
    data.push_back(std::move(r));
  }
  return Matrix::from_rows(ring, std::move(data));
}

py::object matrix_entries_py(const Matrix& m) {
  py::list rows;
  for (int i = 0; i < m.rows(); ++i) {
    py::list row;
    for (int j = 0; j < m.cols(); ++j)
      row.append(py::str(m.ring().to_string(m.at(i, j))));
    rows.append(row);
  }
  return rows;
}

py::dict py_check(const py::sequence& rows, const std::string& ring_sel) {
  Matrix t = matrix_from_py(rows, ring_sel);
  if (!t.is_square()) fail(Errc::ContractViolation, "check needs a square matrix");
  const Ring& ring = t.ring();
  json report{{"ring", ring.selector()},
              {"n", t.rows()},
              {"zero_square", is_zero_square(t)},
              {"trace_zero", ring.is_zero(t.trace())},
              {"det_zero", ring.is_zero(t.det())}};
  std::optional<MinorIndex> minor = t.first_nonzero_minor();
  report["minors_all_zero"] = !minor.has_value();
  if (minor)
    report["minor_witness"] = json{{"rows", {minor->row_a, minor->row_b}},
                                   {"cols", {minor->col_c, minor->col_d}},
                                   {"value", ring.to_string(t.minor2(*minor))}};
  return py::cast<py::dict>(json_to_py(report));
}

py::dict py_normalize(const py::sequence& rows, const std::string& ring_sel) {
  Matrix t = matrix_from_py(rows, ring_sel);
  SimilarityCertificate cert = normalize(t);
  return py::cast<py::dict>(json_to_py(certificate_to_json(t, cert)));
}

py::dict py_verify(const py::sequence& rows, const py::dict& cert_dict,
                   const std::string& ring_sel) {
  Matrix t = matrix_from_py(rows, ring_sel);
  json cj = json::parse(py::cast<std::string>(
      py::module_::import("json").attr("dumps")(cert_dict)));
  SimilarityCertificate cert = certificate_from_json(cj);
  CertCheck result = check_certificate(t, cert);
  py::dict out;
  out["verified"] = result == CertCheck::Ok;
  out["reason"] = cert_check_name(result);
  return out;
}

py::object py_obstruction(const py::sequence& rows, const std::string& ring_sel) {
  Matrix t = matrix_from_py(rows, ring_sel);
  std::optional<ObstructionWitness> w = obstruction_witness(t);
  if (!w) return py::none();
  json out{{"rows", {w->minor.row_a, w->minor.row_b}},
           {"cols", {w->minor.col_c, w->minor.col_d}},
           {"value", t.ring().to_string(w->value)}};
  return json_to_py(out);
}

bool py_is_zero_square(const py::sequence& rows, const std::string& ring_sel) {
  return is_zero_square(matrix_from_py(rows, ring_sel));
}

py::object py_counterexample(int n, const std::string& ring_sel) {
  return matrix_entries_py(counterexample(Ring::parse_selector(ring_sel), n));
}

py::list py_generate(long long count, int n, long long bound,
                     std::uint64_t seed, int shears) {
  if (count < 1) fail(Errc::ContractViolation, "count must be >= 1");
  py::list out;
  for (long long i = 0; i < count; ++i) {
    GenConfig cfg{n, bound, seed + static_cast<std::uint64_t>(i), shears};
    out.append(matrix_entries_py(random_zero_square(cfg)));
  }
  return out;
}

py::dict py_oracle_summary(std::uint32_t p, int n) {
  if (n != 3) fail(Errc::ContractViolation, "the oracle runs 3x3 only");
  std::vector<Matrix> all = enumerate_zero_square_fp(n, p);
  long long verified = 0, brute_found = 0, mismatches = 0;
  for (const Matrix& t : all) {
    bool ok_cert = verify_certificate(t, normalize_3x3(t));
    bool ok_brute = brute_force_similarity_fp(t, p).has_value();
    if (ok_cert) ++verified;
    if (ok_brute) ++brute_found;
    if (!ok_cert || !ok_brute) ++mismatches;
  }
  py::dict out;
  out["p"] = p;
  out["n"] = n;
  out["zero_square_count"] = all.size();
  out["verified"] = verified;
  out["brute_force_found"] = brute_found;
  out["mismatches"] = mismatches;
  return out;
}

py::tuple py_xgcd(const std::string& a, const std::string& b,
                  const std::string& ring_sel) {
  Ring ring = Ring::parse_selector(ring_sel);
  Xgcd x = ring.xgcd(ring.parse_elem(a), ring.parse_elem(b));
  return py::make_tuple(ring.to_string(x.g), ring.to_string(x.s),
                        ring.to_string(x.t));
}

py::tuple py_gcd_list(const std::vector<std::string>& values,
                      const std::string& ring_sel) {
  Ring ring = Ring::parse_selector(ring_sel);
  std::vector<RingElem> v;
  for (const std::string& s : values) v.push_back(ring.parse_elem(s));
  GcdList g = ring.gcd_list(v);
  py::list coeffs;
  for (const RingElem& c : g.coeffs) coeffs.append(py::str(ring.to_string(c)));
  return py::make_tuple(ring.to_string(g.g), coeffs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact zero-square matrix tools: T^2 = 0 diagnostics, similarity "
      "certificates T*U = U*(r*E_1n) over Bezout domains, and rank "
      "obstructions for n >= 4.";

  py::register_exception<Error>(m, "Error");

  m.def("check", &py_check, py::arg("matrix"), py::arg("ring") = "int",
        "Diagnostic report: zero_square, trace_zero, det_zero, 2x2 minors.");
  m.def("normalize", &py_normalize, py::arg("matrix"), py::arg("ring") = "int",
        "Similarity certificate for a zero-square 2x2/3x3 matrix.");
  m.def("verify", &py_verify, py::arg("matrix"), py::arg("certificate"),
        py::arg("ring") = "int",
        "Check a certificate dict; returns {'verified', 'reason'}.");
  m.def("obstruction", &py_obstruction, py::arg("matrix"), py::arg("ring") = "int",
        "First nonzero 2x2 minor with its value, or None.");
  m.def("is_zero_square", &py_is_zero_square, py::arg("matrix"),
        py::arg("ring") = "int");
  m.def("counterexample", &py_counterexample, py::arg("n"), py::arg("ring") = "int",
        "Rank-2 zero-square matrix: 4x4 block, zero-padded to n.");
  m.def("generate", &py_generate, py::arg("count"), py::arg("n") = 3,
        py::arg("bound") = 10, py::arg("seed") = 0, py::arg("shears") = 0,
        "Deterministic random zero-square integer matrices.");
  m.def("oracle_summary", &py_oracle_summary, py::arg("p"), py::arg("n") = 3,
        "Exhaustive F_p cross-check of certificates vs brute-force search.");
  m.def("xgcd", &py_xgcd, py::arg("a"), py::arg("b"), py::arg("ring") = "int",
        "Extended gcd: (g, s, t) with g = s*a + t*b.");
  m.def("gcd_list", &py_gcd_list, py::arg("values"), py::arg("ring") = "int",
        "Gcd of a list with Bezout coefficients: (g, coeffs).");

#ifdef ZEROSQUARE_VERSION
  m.attr("__version__") = ZEROSQUARE_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
