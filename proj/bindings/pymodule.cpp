// Python bindings for the exact Killing-form engine. Rationals cross the
// boundary as strings ("3/2") or ints; forms render through the canonical
// <...> + kH grammar.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kf/chevalley.hpp"
#include "kf/indexfile.hpp"
#include "kf/killing.hpp"

namespace py = pybind11;
using namespace kf;

namespace {

Rat rat_from_obj(const py::object& obj) {
  if (py::isinstance<py::int_>(obj)) return Rat(obj.cast<long>());
  return Rat(obj.cast<std::string>());
}

std::map<std::string, Rat> inst_from_dict(const py::dict& d) {
  std::map<std::string, Rat> out;
  for (auto item : d) out[item.first.cast<std::string>()] = rat_from_obj(py::reinterpret_borrow<py::object>(item.second));
  return out;
}

std::vector<std::vector<std::string>> gram_to_strings(const GramMatrix& g) {
  std::vector<std::vector<std::string>> out(g.size());
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) out[i].push_back(g(i, j).get_str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_kfcore, m) {
  m.doc() = "Exact Killing forms of isotropic simple Lie algebras";

  py::class_<FormEntry>(m, "FormEntry")
      .def_static("parse", &FormEntry::parse)
      .def("__str__", &FormEntry::str)
      .def("__repr__", [](const FormEntry& e) { return "FormEntry(" + e.str() + ")"; })
      .def("__eq__", [](const FormEntry& a, const FormEntry& b) { return a == b; })
      .def("__mul__", &FormEntry::operator*);

  py::class_<QuadForm>(m, "QuadForm")
      .def_static("parse", &QuadForm::parse)
      .def_property_readonly("dim", &QuadForm::dim)
      .def_property_readonly("hyperbolic_count", &QuadForm::hyperbolic_count)
      .def("has_symbols", &QuadForm::has_symbols)
      .def("__str__", &QuadForm::str)
      .def("__repr__", [](const QuadForm& q) { return "QuadForm(" + q.str() + ")"; })
      .def("__eq__", [](const QuadForm& a, const QuadForm& b) { return a == b; });

  m.def("orth_sum", &orth_sum);
  m.def("scale", [](const std::string& c, const QuadForm& q) {
    return scale(FormEntry::parse(c), q);
  });
  m.def("lambda2", &lambda2);
  m.def("pfister", [](const std::vector<std::string>& gens) {
    std::vector<FormEntry> g;
    for (const auto& s : gens) g.push_back(FormEntry::parse(s));
    return pfister(g);
  });
  m.def("pfister_pure", [](const std::vector<std::string>& gens) {
    std::vector<FormEntry> g;
    for (const auto& s : gens) g.push_back(FormEntry::parse(s));
    return pfister_pure(g);
  });
  m.def("killing_of_so", &killing_of_so);
  m.def("instantiate", [](const QuadForm& q, const py::dict& values) {
    return instantiate(q, inst_from_dict(values));
  });
  m.def("isometric_numeric", &isometric_numeric);
  m.def("signature_numeric", &signature_numeric);
  m.def("hilbert_symbol", [](const py::object& a, const py::object& b, long p) {
    return hilbert_symbol(rat_from_obj(a), rat_from_obj(b), Int(p));
  });
  m.def("diagonalize", [](const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Rat>> m_;
    for (const auto& r : rows) {
      m_.emplace_back();
      for (const auto& v : r) m_.back().push_back(Rat(v));
    }
    return diagonalize(GramMatrix(m_));
  });

  py::class_<RootSystem>(m, "RootSystem")
      .def_static("build", py::overload_cast<const std::string&>(&RootSystem::build))
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("name", &RootSystem::name)
      .def_property_readonly("dim", &RootSystem::dim)
      .def_property_readonly("cartan", [](const RootSystem& rs) { return rs.cartan(); })
      .def("positive_root_count",
           [](const RootSystem& rs) { return rs.positive_roots().size(); })
      .def("positive_roots",
           [](const RootSystem& rs) {
             std::vector<std::vector<int>> out;
             for (const auto& r : rs.positive_roots()) out.push_back(r.coeffs);
             return out;
           })
      .def("coxeter_number", &RootSystem::coxeter_number)
      .def("dual_coxeter_number", &RootSystem::dual_coxeter_number)
      .def("connection_index",
           [](const RootSystem& rs) { return rs.connection_index().get_si(); })
      .def("coweight", [](const RootSystem& rs, int j) {
        CoweightElement cw = rs.coweight(j);
        std::vector<long> coeffs;
        for (const auto& x : cw.coeffs) coeffs.push_back(x.get_si());
        return py::make_tuple(cw.c.get_si(), coeffs);
      })
      .def("__repr__", [](const RootSystem& rs) { return "RootSystem(" + rs.name() + ")"; });

  m.def("weyl_dim", [](const RootSystem& rs, const std::vector<int>& J,
                       const std::vector<long>& hw) {
    std::vector<Rat> w;
    for (long x : hw) w.push_back(Rat(x));
    return weyl_dim(rs, J, w).get_str();
  });
  m.def("gram_zha_coeffs", [](const RootSystem& rs, const std::vector<int>& dp, long c) {
    return gram_to_strings(gram_zha_coeffs(rs, dp, Int(c)));
  });
  m.def("gram_zha_reps", [](const RootSystem& rs, const std::vector<int>& dp, long c) {
    return gram_to_strings(gram_zha_reps(rs, dp, Int(c)));
  });
  m.def("split_killing_form", &split_killing_form);

  m.def("oracle_trace", [](const std::string& type, int i, int j) {
    RootSystem rs = RootSystem::build(type);
    ChevalleyAlgebra alg = build_chevalley(rs);
    return alg
        .trace_form(alg.torus_element(rs.coweight(i)), alg.torus_element(rs.coweight(j)))
        .get_str();
  });

  m.def("catalog", [](const std::string& case_name, const py::kwargs& kw) {
    CatalogParams params;
    if (kw.contains("q0")) params.q0 = kw["q0"].cast<QuadForm>();
    if (kw.contains("q3")) params.q3 = kw["q3"].cast<QuadForm>();
    if (kw.contains("q5")) params.q5 = kw["q5"].cast<QuadForm>();
    if (kw.contains("a")) params.a = FormEntry::parse(kw["a"].cast<std::string>());
    return catalog(catalog_case_from_string(case_name), params);
  });
  m.def("symbolic_q0", &symbolic_q0);
  m.def("symbolic_pfister_q0", &symbolic_pfister_q0);

  m.def("compute_from_text", [](const std::string& text) {
    IndexFile f = parse_index_file(text);
    validate_or_throw(f.index);
    KillingFormResult r = assemble(f.index, f.spec);
    py::dict out;
    out["form"] = r.total;
    out["hyperbolic"] = r.hyperbolic;
    py::list terms;
    for (const auto& t : r.terms) {
      py::dict td;
      td["label"] = t.label;
      td["scalar"] = t.scalar.str();
      td["form"] = t.form;
      terms.append(td);
    }
    out["terms"] = terms;
    return out;
  });
  m.def("signature_from_text", [](const std::string& text) {
    IndexFile f = parse_index_file(text);
    validate_or_throw(f.index);
    return real_signature(f.index);
  });
  m.def("verify_from_text", [](const std::string& text, const py::dict& inst) {
    IndexFile f = parse_index_file(text);
    validate_or_throw(f.index);
    CatalogParams params;
    params.q0 = f.q0;
    params.a = f.index.extension_param;
    VerifyReport vr = verify(f.index, f.spec, inst_from_dict(inst), infer_catalog_case(f), params);
    py::list out;
    for (const auto& c : vr.checks) {
      py::dict cd;
      cd["name"] = c.name;
      cd["pass"] = c.pass;
      cd["detail"] = c.detail;
      out.append(cd);
    }
    return out;
  });

  py::register_exception<error>(m, "KfError");
}
