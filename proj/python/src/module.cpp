#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "heckd/error.hpp"
#include "heckd/hecke.hpp"
#include "heckd/io.hpp"
#include "heckd/kl.hpp"
#include "heckd/oracle.hpp"
#include "heckd/weyl.hpp"

namespace py = pybind11;
using namespace heckd;

namespace {

py::object int_to_py(const Int& n) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(n.str().c_str(), nullptr, 10));
}

Int int_from_py(const py::object& o) {
  return Int(py::str(o).cast<std::string>());
}

py::list laurent_pairs(const Laurent& p) {
  py::list out;
  for (const auto& [k, c] : p.terms()) {
    py::tuple t(2);
    t[0] = py::int_(k);
    t[1] = int_to_py(c);
    out.append(t);
  }
  return out;
}

Laurent laurent_from_pairs(const py::iterable& pairs) {
  std::vector<Laurent::Term> terms;
  for (py::handle item : pairs) {
    auto seq = py::cast<py::sequence>(item);
    if (seq.size() != 2) throw Error(Errc::Parse, "term must be (k, c)");
    terms.emplace_back(seq[0].cast<long long>(),
                       int_from_py(py::reinterpret_borrow<py::object>(seq[1])));
  }
  return Laurent::from_terms(std::move(terms));
}

}  // namespace

PYBIND11_MODULE(_heckd, m) {
  m.doc() = "Exact engine for the extended affine Hecke algebra of type D";

  static py::exception<Error> exc(m, "HeckdError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_steal<py::object>(
          PyObject_CallFunction(exc.ptr(), "s", e.what()));
      if (inst) {
        inst.attr("kind") = e.kind();
        inst.attr("index") = e.index();
        PyErr_SetObject(exc.ptr(), inst.ptr());
      } else {
        PyErr_SetString(exc.ptr(), e.what());
      }
    }
  });

  m.attr("RHO") = py::int_(static_cast<int>(kRho));

  py::class_<Laurent>(m, "Laurent")
      .def(py::init([](const py::iterable& pairs) {
             return laurent_from_pairs(pairs);
           }),
           py::arg("terms"))
      .def_static("zero", &Laurent::zero)
      .def_static("one", &Laurent::one)
      .def_static(
          "monomial",
          [](const py::object& c, long long k) {
            return Laurent::monomial(int_from_py(c), k);
          },
          py::arg("c"), py::arg("k") = 0)
      .def_static("v", &Laurent::v_pow, py::arg("k") = 1)
      .def("terms", &laurent_pairs)
      .def("bar", &Laurent::bar)
      .def("eval_one", [](const Laurent& p) { return int_to_py(p.eval_one()); })
      .def("is_nonneg", &Laurent::is_nonneg)
      .def("in_vinv", &Laurent::in_vinv)
      .def("is_zero", &Laurent::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__str__", &Laurent::str)
      .def("__repr__",
           [](const Laurent& p) { return "Laurent(" + p.str() + ")"; });

  py::class_<ReducedWord>(m, "ReducedWord")
      .def_readonly("rho_prefix", &ReducedWord::rho_prefix)
      .def_readonly("letters", &ReducedWord::letters)
      .def("__repr__", [](const ReducedWord& w) {
        std::ostringstream os;
        os << "ReducedWord(rho_prefix=" << (w.rho_prefix ? "True" : "False")
           << ", letters=[";
        for (size_t i = 0; i < w.letters.size(); ++i)
          os << (i ? "," : "") << w.letters[i];
        os << "])";
        return os.str();
      });

  py::class_<AffinePerm>(m, "AffinePerm")
      .def(py::init(&AffinePerm::from_window), py::arg("d"), py::arg("window"))
      .def_static("identity", &AffinePerm::identity)
      .def_static("generator", &AffinePerm::generator, py::arg("d"),
                  py::arg("g"))
      .def_property_readonly("d", &AffinePerm::rank)
      .def_property_readonly("window", &AffinePerm::window)
      .def("apply", &AffinePerm::apply)
      .def("compose", &AffinePerm::compose)
      .def("inverse", &AffinePerm::inverse)
      .def("length", &AffinePerm::length)
      .def("parity", &AffinePerm::parity)
      .def("rho_coset", &AffinePerm::rho_coset)
      .def("descent", &AffinePerm::descent)
      .def("apply_move", &AffinePerm::apply_move)
      .def("reduced_word", &AffinePerm::reduced_word)
      .def("bruhat_leq", &AffinePerm::bruhat_leq)
      .def("dominance_leq", &AffinePerm::dominance_leq)
      .def_static("parity_of_window", &AffinePerm::parity_of_window,
                  py::arg("d"), py::arg("window"))
      .def(py::self == py::self)
      .def("__lt__", [](const AffinePerm& a, const AffinePerm& b) {
        return a < b;
      })
      .def("__hash__",
           [](const AffinePerm& w) {
             size_t h = std::hash<int>()(w.rank());
             for (long long v : w.window())
               h = h * 1000003 + std::hash<long long>()(v);
             return h;
           })
      .def("__str__", &AffinePerm::str)
      .def("__repr__", &AffinePerm::str);

  m.def("replay_word",
        [](int d, bool rho_prefix, const std::vector<int>& letters) {
          return replay_word(d, ReducedWord{rho_prefix, letters});
        },
        py::arg("d"), py::arg("rho_prefix"), py::arg("letters"));
  m.def("enumerate_up_to_length", &enumerate_up_to_length, py::arg("d"),
        py::arg("max_length"));
  m.def("enumerate_compositions",
        [](int n, int d) {
          py::list out;
          for (const auto& c : enumerate_compositions(n, d))
            out.append(c.lambda);
          return out;
        },
        py::arg("n"), py::arg("d"));

  py::class_<HeckeElt>(m, "HeckeElt")
      .def(py::init<int>(), py::arg("d"))
      .def_static("basis", &HeckeElt::basis)
      .def_property_readonly("d", &HeckeElt::rank)
      .def("is_zero", &HeckeElt::is_zero)
      .def("coeff", &HeckeElt::coeff)
      .def("terms",
           [](const HeckeElt& x) {
             py::list out;
             for (const auto& [w, c] : x.terms()) {
               py::tuple t(2);
               t[0] = py::cast(w);
               t[1] = py::cast(c);
               out.append(t);
             }
             return out;
           })
      .def("add_term", &HeckeElt::add_term)
      .def("scaled", &HeckeElt::scaled)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__str__", &HeckeElt::str)
      .def("__repr__", &HeckeElt::str)
      .def("to_json", [](const HeckeElt& x) { return hecke_to_json(x).dump(); })
      .def_static("from_json", [](const std::string& s) {
        return hecke_from_json(Json::parse(s));
      });

  m.def("mult_gen", &mult_gen, py::arg("g"), py::arg("a"));
  m.def("mult", &mult, py::arg("a"), py::arg("b"));
  m.def("bar", &bar, py::arg("a"));
  m.def("specialize_one", [](const HeckeElt& a) {
    py::dict out;
    for (const auto& [w, n] : specialize_one(a)) out[py::cast(w)] = int_to_py(n);
    return out;
  });
  m.def("parse_element_expr", &parse_element_expr, py::arg("d"),
        py::arg("expr"));

  m.def("verify_relations", [](int d) {
    py::list out;
    for (const auto& c : verify_relations(d).checks) {
      py::tuple t(2);
      t[0] = py::str(c.name);
      t[1] = py::bool_(c.ok);
      out.append(t);
    }
    return out;
  });

  py::class_<KLTable>(m, "KLTable")
      .def(py::init<int>(), py::arg("d"))
      .def_property_readonly("d", &KLTable::rank)
      .def("entries", [](const KLTable& t) {
        py::list out;
        for (const auto& [key, p] : t.entries()) {
          py::tuple row(3);
          row[0] = py::cast(key.first);
          row[1] = py::cast(key.second);
          row[2] = py::cast(p);
          out.append(row);
        }
        return out;
      });

  m.def("kl_canonical", &kl_canonical, py::arg("w"), py::arg("table"));
  m.def("kl_polynomial", &kl_polynomial, py::arg("y"), py::arg("w"),
        py::arg("table"));
  m.def("kl_mu", [](const AffinePerm& y, const AffinePerm& w, KLTable& t) {
    return int_to_py(kl_mu(y, w, t));
  });
  m.def("canonical_expand", [](const HeckeElt& x, KLTable& t) {
    py::dict out;
    for (const auto& [w, c] : canonical_expand(x, t)) out[py::cast(w)] = c;
    return out;
  });
  m.def("kl_structure_positivity", [](int d, long long L, KLTable& t) {
    const auto report = kl_structure_positivity(d, L, t);
    py::dict out;
    out["d"] = report.d;
    out["max_length"] = report.max_length;
    out["pairs_checked"] = report.pairs_checked;
    out["coeffs_checked"] = report.coeffs_checked;
    py::list violations;
    for (const auto& v : report.violations) {
      py::dict item;
      item["x"] = py::cast(v.x);
      item["y"] = py::cast(v.y);
      item["z"] = py::cast(v.z);
      item["coeff"] = py::cast(v.coeff);
      violations.append(item);
    }
    out["violations"] = violations;
    out["ok"] = report.ok();
    return out;
  });
  m.def("kl_cache_save", &kl_cache_save_file, py::arg("table"),
        py::arg("path"));
  m.def("kl_cache_load", &kl_cache_load_file, py::arg("path"));
  m.def("kl_cache_merge", &kl_cache_merge, py::arg("into"), py::arg("other"));

  auto oracle_mod = m.def_submodule("oracle", "brute-force reference routes");
  oracle_mod.def("length", &oracle::oracle_length);
  oracle_mod.def("bruhat", &oracle::oracle_bruhat);
  oracle_mod.def("mult", &oracle::oracle_mult);
  oracle_mod.def("canonical", &oracle::oracle_canonical, py::arg("w"),
                 py::arg("max_interval") = oracle::kDefaultMaxInterval);
}
