#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latkit/claims.hpp"
#include "latkit/error.hpp"
#include "latkit/fqf.hpp"
#include "latkit/k3fam.hpp"
#include "latkit/lattice.hpp"
#include "latkit/normal_form.hpp"
#include "latkit/shortvec.hpp"

namespace py = pybind11;
using namespace latkit;

namespace {

py::object to_py(const Integer& z) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

// Accepts int, fractions.Fraction or strings such as "1/2".
Rat rat_from_py(const py::handle& h) { return Rat::parse(py::str(h).cast<std::string>()); }

py::list to_py(const ZMat& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
    rows.append(row);
  }
  return rows;
}

py::list to_py(const IntVec& v) {
  py::list out;
  for (const auto& z : v) out.append(to_py(z));
  return out;
}

py::object fraction(const Rat& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(to_py(r.num()), to_py(r.den()));
}

Mat rat_matrix(const py::sequence& rows) {
  const std::size_t n = rows.size();
  std::size_t cols = n ? py::len(rows[0]) : 0;
  Mat m(n, cols);
  for (std::size_t i = 0; i < n; ++i) {
    py::sequence row = rows[i];
    if (row.size() != cols) throw InputError("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rat_from_py(row[j]);
  }
  return m;
}

ZMat int_matrix(const py::sequence& rows) { return to_integer(rat_matrix(rows)); }

py::dict discriminant_dict(const IntegralLattice& l) {
  FiniteQuadraticForm f = discriminant_group(l);
  py::dict d;
  d["invariant_factors"] = to_py(f.invariant_factors);
  d["order"] = to_py(f.order());
  d["primary"] = f.primary_string();
  py::list q;
  for (const auto& v : f.q_values) q.append(fraction(v));
  d["q"] = q;
  return d;
}

py::list claims_to_py(const std::vector<ClaimResult>& results) {
  py::list out;
  for (const auto& r : results) {
    py::dict d;
    d["id"] = r.id;
    d["tag"] = r.tag;
    d["expected"] = r.expected;
    d["computed"] = r.computed;
    d["status"] = to_string(r.status());
    d["note"] = r.note;
    out.append(d);
  }
  return out;
}

K3Family family_by_name(const std::string& name) {
  if (name == "p3") return family_p3();
  if (name == "p4") return family_p4();
  if (name == "p5") return family_p5();
  if (name == "p2") return family_p2();
  throw InputError("unknown family '" + name + "' (expected p3, p4, p5 or p2)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact lattice and projective-family computations.";

  // Translators run newest first, so the base class goes in before its subclasses.
  auto base = py::register_exception<Error>(m, "LatkitError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<GlueError>(m, "GlueError", base.ptr());

  m.def("snf", [](const py::sequence& rows) {
    SmithForm s = snf(int_matrix(rows));
    py::dict d;
    d["u"] = to_py(s.u);
    d["d"] = to_py(s.d);
    d["v"] = to_py(s.v);
    d["diagonal"] = to_py(s.diagonal());
    return d;
  }, py::arg("matrix"), "Smith normal form as a dict with u, d, v and diagonal (U M V = D).");

  m.def("hnf", [](const py::sequence& rows) { return to_py(hnf(int_matrix(rows))); }, py::arg("matrix"),
        "Row Hermite normal form; zero rows are dropped.");

  py::class_<IntegralLattice>(m, "Lattice")
      .def(py::init([](const py::sequence& gram) { return make_lattice(int_matrix(gram)); }), py::arg("gram"))
      .def_property_readonly("rank", &IntegralLattice::rank)
      .def_property_readonly("det", [](const IntegralLattice& l) { return to_py(l.det()); })
      .def_property_readonly("gram", [](const IntegralLattice& l) { return to_py(l.gram()); })
      .def_property_readonly("signature",
                             [](const IntegralLattice& l) { return py::make_tuple(l.signature().positive, l.signature().negative); })
      .def_property_readonly("is_even", &IntegralLattice::is_even)
      .def("discriminant", &discriminant_dict)
      .def("short_vectors", [](const IntegralLattice& l, const py::object& bound, unsigned threads) {
        EnumerationOptions opts;
        opts.threads = threads;
        ShortVectorReport r;
        {
          Integer b = parse_integer(py::str(bound).cast<std::string>());
          py::gil_scoped_release release;
          r = short_vectors(l, b, opts);
        }
        py::list out;
        for (const auto& v : r.vectors) out.append(py::make_tuple(to_py(v.coords), to_py(v.norm)));
        return out;
      }, py::arg("bound"), py::arg("threads") = 1,
           "Nonzero vectors of norm <= bound up to sign, as (coords, norm); norms in the positive convention.")
      .def("minimum", [](const IntegralLattice& l) { return to_py(minimum(l)); })
      .def("rescale", [](const IntegralLattice& l, long s) { return rescale(l, s); })
      .def("__repr__", [](const IntegralLattice& l) {
        return "<Lattice rank " + std::to_string(l.rank()) + " det " + to_string(l.det()) + ">";
      });

  m.def("overlattice", [](const IntegralLattice& base, const py::sequence& glue) {
    std::vector<GlueVector> g;
    for (std::size_t i = 0; i < glue.size(); ++i) {
      py::sequence row = glue[i];
      GlueVector v{"glue" + std::to_string(i + 1), {}};
      for (const auto& x : row) v.coords.push_back(rat_from_py(x));
      g.push_back(std::move(v));
    }
    Overlattice ov = overlattice(base, g);
    return py::make_tuple(ov.lattice, to_py(ov.index));
  }, py::arg("base"), py::arg("glue"), "Adjoin glue vectors (base coordinates); returns (lattice, index).");

  m.def("repro", [](const std::vector<std::string>& tags, const std::vector<std::string>& faults) {
    ReproOptions opts;
    opts.tags.insert(tags.begin(), tags.end());
    opts.faults.active.insert(faults.begin(), faults.end());
    return claims_to_py(repro_all(opts));
  }, py::arg("tags") = std::vector<std::string>{}, py::arg("faults") = std::vector<std::string>{});

  m.def("known_tags", [] { return known_tags(); });

  m.def("family", [](const std::string& name) {
    K3Family k = family_by_name(name);
    py::dict d;
    d["name"] = k.name;
    d["params"] = k.params();
    d["commutant"] = commutant_dim(k.moduli_sigma);
    d["moduli"] = moduli_count(k.params(), static_cast<int>(commutant_dim(k.moduli_sigma)), k.redundancy);
    d["dihedral"] = dihedral_in_pgl(k.sigma, k.iota);
    FixedPointCount fc = fixed_point_count(k.sample_polynomials(), k.iota);
    d["fixed_points_finite"] = fc.finite;
    d["fixed_points"] = fc.finite ? py::object(py::int_(fc.total)) : py::object(py::none());
    return d;
  }, py::arg("name"), "Checks for one of the families p3, p4, p5, p2.");
}
