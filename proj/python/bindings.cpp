#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "expdioph/arith.hpp"
#include "expdioph/aux.hpp"
#include "expdioph/equation.hpp"
#include "expdioph/filters.hpp"
#include "expdioph/linform.hpp"
#include "expdioph/report.hpp"
#include "expdioph/search.hpp"

namespace py = pybind11;
using namespace expdioph;

namespace {

// Python ints cross the boundary as decimal strings.
BigInt to_big(const py::int_& v) { return parse_bigint(py::str(py::handle(v)).cast<std::string>()); }

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::string ordering_name(Ordering o) {
  switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
  }
  return "";
}

Range to_range(const std::pair<std::uint64_t, std::uint64_t>& r) { return Range{r.first, r.second}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact checks, bounds and searches for (2am+1)^x + (2m)^y = (2am-1)^z";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::invalid_argument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("check", [](std::uint64_t a, std::uint64_t mm, std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    return check_family(Instance(a, mm), ExponentTriple(x, y, z));
  }, py::arg("a"), py::arg("m"), py::arg("x"), py::arg("y"), py::arg("z"));

  m.def("check_generic", [](const py::int_& A, const py::int_& B, const py::int_& C, std::uint64_t x, std::uint64_t y,
                            std::uint64_t z) {
    return check_generic(PowerSumEquation(to_big(A), to_big(B), to_big(C)), ExponentTriple(x, y, z));
  });

  m.def("cmp_powersum", [](const py::int_& A, std::uint64_t x, const py::int_& B, std::uint64_t y, const py::int_& C,
                           std::uint64_t z) {
    return ordering_name(cmp_powersum(to_big(A), x, to_big(B), y, to_big(C), z));
  }, "'less', 'equal' or 'greater' for A^x + B^y against C^z");

  m.def("filters", [](std::uint64_t a, std::uint64_t mm, std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    py::list out;
    for (const auto& v : run_pipeline(a, mm, x, y, z)) out.append(py::make_tuple(v.filter, v.passed(), v.reason));
    return out;
  }, "Filter verdicts as (name, passed, reason) tuples.");

  m.def("bounds", []() { return json_to_py(bounds_to_json(build_bound_set())); });

  m.def("small_case_survivors", []() {
    std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> out;
    for (const auto& s : small_case_survivors()) out.emplace_back(s.m, s.z, s.x);
    return out;
  });

  m.def("identity_scan", [](const std::string& id, std::pair<std::uint64_t, std::uint64_t> a,
                            std::pair<std::uint64_t, std::uint64_t> mm, std::pair<std::uint64_t, std::uint64_t> y) {
    std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> out;
    for (const auto& h : identity_scan(parse_identity(id), to_range(a), to_range(mm), to_range(y)))
      out.emplace_back(h.a, h.m, h.y);
    return out;
  }, py::arg("id"), py::arg("a"), py::arg("m") = std::make_pair(0, 0), py::arg("y"));

  m.def("oracle_search", [](std::uint64_t a_max, std::uint64_t m_max, std::uint64_t exp_max) {
    const SearchBox box{{2, a_max}, {1, m_max}, {1, exp_max}, {1, exp_max}, {1, exp_max}};
    std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>> out;
    {
      py::gil_scoped_release nogil;
      for (const auto& s : oracle_search(box)) out.emplace_back(s.a(), s.m(), s.x(), s.y(), s.z());
    }
    return out;
  }, py::arg("a_max"), py::arg("m_max"), py::arg("exp_max"));

  m.def("corollary_search", [](std::uint64_t b_max, std::uint64_t exp_cap) {
    py::gil_scoped_release nogil;
    return corollary_search(b_max, exp_cap);
  }, py::arg("b_max"), py::arg("exp_max") = 60);

  m.def("theorem_search", [](std::uint64_t y, unsigned threads, std::optional<std::string> checkpoint) {
    SearchOptions opts;
    opts.threads = threads;
    opts.checkpoint = std::move(checkpoint);
    SearchReport rep;
    {
      py::gil_scoped_release nogil;
      rep = theorem_search(build_bound_set(), y, opts);
    }
    return json_to_py(report_to_json(rep));
  }, py::arg("y"), py::arg("threads") = 1, py::arg("checkpoint") = py::none(),
     "Region search for one y; returns the report as a dict.");

  m.def("verify_aux", [](const std::string& id) {
    const AuxId aid = parse_aux_id(id);
    AuxResult r;
    {
      py::gil_scoped_release nogil;
      r = verify_aux(aid, default_aux_box(aid));
    }
    py::dict d;
    d["id"] = id;
    d["solutions"] = r.solutions;
    d["expected"] = r.expected;
    d["unclassified"] = r.unclassified;
    d["passed"] = r.pass;
    return d;
  });
}
