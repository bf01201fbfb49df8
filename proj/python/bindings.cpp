#include "crystcoh/catalog.hpp"
#include "crystcoh/cohomology.hpp"
#include "crystcoh/errors.hpp"
#include "crystcoh/io.hpp"
#include "crystcoh/koszul.hpp"
#include "crystcoh/oracle.hpp"
#include "crystcoh/smith.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace crystcoh;

namespace {

py::int_ to_py(const Int& x) {
  return py::reinterpret_steal<py::int_>(
    PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

Int from_py(const py::handle& h) {
  return Int(py::str(h).cast<std::string>());
}

IntMatrix matrix_from_py(const py::sequence& rows) {
  const std::size_t r = rows.size();
  std::size_t c = r ? py::len(rows[0]) : 0;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    py::sequence row = rows[i];
    if (row.size() != c)
      throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = from_py(row[j]);
  }
  return m;
}

py::list matrix_to_py(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.append(to_py(m(i, j)));
    rows.append(row);
  }
  return rows;
}

py::list torsion_to_py(const AbelianGroup& g) {
  py::list out;
  for (const Int& d : g.torsion())
    out.append(to_py(d));
  return out;
}

py::dict comparison_to_py(const ComparisonRow& r) {
  py::dict d;
  d["k"] = r.k;
  d["formula"] = r.formula;
  d["oracle"] = r.oracle;
  d["match"] = r.match;
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Integral cohomology of split crystallographic groups Z^n x| Z/N";

  py::register_exception<InternalInconsistency>(m, "InternalInconsistency");

  py::class_<AbelianGroup>(m, "AbelianGroup")
    .def(py::init([](int free_rank, const std::vector<py::int_>& orders) {
           std::vector<Int> o;
           for (const auto& x : orders)
             o.push_back(from_py(x));
           return AbelianGroup(free_rank, o);
         }),
         py::arg("free_rank") = 0, py::arg("orders") = std::vector<py::int_>{})
    .def_property_readonly("free_rank", &AbelianGroup::free_rank)
    .def_property_readonly("torsion", &torsion_to_py)
    .def("primary", &AbelianGroup::to_primary_string)
    .def_static("parse", &AbelianGroup::parse)
    .def("__str__", &AbelianGroup::to_string)
    .def("__repr__", [](const AbelianGroup& g) { return "AbelianGroup('" + g.to_string() + "')"; })
    .def("__eq__", [](const AbelianGroup& a, const AbelianGroup& b) { return a == b; })
    .def("__add__", [](const AbelianGroup& a, const AbelianGroup& b) { return a + b; });

  py::class_<Lattice>(m, "Lattice")
    .def(py::init([](const py::sequence& T, std::int64_t N, const std::string& label) {
           Lattice L(matrix_from_py(T), N, label);
           validate_lattice(L);
           return L;
         }),
         py::arg("T"), py::arg("N"), py::arg("label") = "")
    .def_property_readonly("T", [](const Lattice& L) { return matrix_to_py(L.T); })
    .def_readonly("N", &Lattice::N)
    .def_readonly("label", &Lattice::label)
    .def_property_readonly("n", &Lattice::rank)
    .def("to_json", &lattice_to_json)
    .def_static("from_json", &lattice_from_json)
    .def("__eq__", [](const Lattice& a, const Lattice& b) { return a == b; })
    .def("__repr__", [](const Lattice& L) {
      return "Lattice(" + (L.label.empty() ? std::string("?") : L.label) + ", n=" +
             std::to_string(L.rank()) + ", N=" + std::to_string(L.N) + ")";
    });

  m.def("preset", [](const std::string& name) { return preset(name).lattice; },
        "Catalog lattice by name, e.g. 'rho6', 'z8_4', 'ig(5)'.");
  m.def("catalog_names", &catalog_names);
  m.def("assemble", [](const std::string& expr) {
    Assembly a = assemble(expr);
    return py::make_tuple(a.lattice, a.summands);
  }, "Direct sum 'a+b+...' of catalog entries; returns (lattice, summands).");
  m.def("dual", &dual);
  m.def("exterior_power", &exterior_power);
  m.def("direct_sum", &direct_sum);
  m.def("restrict_to_sylow", &restrict_to_sylow);
  m.def("companion_from_v", [](std::int64_t N, const std::vector<long>& v) {
    return companion_from_v(N, v);
  });

  m.def("smith_invariants", [](const py::sequence& A) {
    py::list out;
    for (const Int& d : invariant_factors(matrix_from_py(A)))
      out.append(to_py(d));
    return out;
  }, "Diagonal of the Smith normal form.");
  m.def("homology", [](const py::sequence& d_in, const py::sequence& d_out) {
    return homology_at(matrix_from_py(d_in), matrix_from_py(d_out));
  });

  m.def("cyclic_cohomology", &cyclic_cohomology);
  m.def("e2_page", [](const Lattice& L, int kmax) {
    E2Page p = e2_page(L, kmax);
    return p.rows;
  }, py::arg("lattice"), py::arg("kmax"), "rows[j][i] = H^i(G, Lambda^j L*).");

  auto result_dict = [](const CohomologyResult& r) {
    py::dict d;
    d["groups"] = r.groups;
    d["proved"] = r.status.proved;
    d["reason"] = r.status.reason;
    d["periodic_from"] = r.periodic_from;
    return d;
  };
  m.def("total_cohomology",
        [result_dict](const Lattice& L, std::optional<int> kmax,
                      std::optional<Recipe> recipe) {
          return result_dict(total_cohomology(L, kmax ? *kmax : default_kmax(L), recipe));
        },
        py::arg("lattice"), py::arg("kmax") = py::none(), py::arg("recipe") = py::none());
  m.def("cohomology",
        [result_dict](const std::string& expr, std::optional<int> kmax) {
          Assembly a = assemble(expr);
          int k = kmax ? *kmax : default_kmax(a.lattice);
          return result_dict(total_cohomology(a.lattice, k, a.summands));
        },
        py::arg("expression"), py::arg("kmax") = py::none(),
        "Total cohomology of a catalog expression, with status from its summands.");
  m.def("bieberbach_cohomology",
        [result_dict](const Lattice& L, int kmax) {
          return result_dict(bieberbach_cohomology(L, kmax));
        });
  m.def("gerbe_group", [](const std::string& expr) {
    Assembly a = assemble(expr);
    GerbeResult g = gerbe_group(a.lattice, a.summands);
    return py::make_tuple(g.group, g.status.proved, g.status.reason);
  });

  m.def("decompose_p_type", [](const Lattice& L) {
    PTypeDecomposition d = decompose_p_type(L);
    return py::make_tuple(d.r, d.s, d.t);
  }, "(r, s, t) with L ~ Z^r + (ZG)^s + (IG)^t over Z_(p); N must be prime.");

  m.def("calabi_yau_check", [](const Lattice& L) {
    CalabiYauReport r = calabi_yau_check(L);
    return py::make_tuple(r.ok, r.diagnostic);
  });

  m.def("verify_preset", [](const std::string& name) {
    CompatiblePreset p = tau_preset(name);
    CompatibilityReport r = verify_compatibility(p.tau.lattice, p.tau, p.tau.rank());
    py::dict d;
    d["passed"] = r.passed;
    d["axiom"] = r.failed_axiom;
    d["degree"] = r.degree;
    d["witness"] = r.witness;
    d["tau_json"] = tau_to_json(p.tau);
    return d;
  }, "Run the compatibility checks on a named action.");
  m.def("oracle_compare", [](const std::string& name, int kmax) {
    CompatiblePreset p = tau_preset(name);
    py::list rows;
    for (const ComparisonRow& r : compare(p.tau.lattice, p.tau, kmax).rows)
      rows.append(comparison_to_py(r));
    return rows;
  }, py::arg("preset"), py::arg("kmax"),
  "Per-degree comparison of the formula with the brute-force resolution.");
}
