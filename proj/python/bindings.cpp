#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "elp/harness.hpp"

namespace py = pybind11;
using namespace elp;

namespace {

Semantics semantics_from(const std::string& name) {
  if (name == "g91") return Semantics::G91;
  if (name == "feel") return Semantics::Feel;
  if (name == "faeel") return Semantics::Faeel;
  if (name == "eel") return Semantics::Eel;
  if (name == "eel_g91") return Semantics::EelG91;
  throw std::invalid_argument("unknown semantics: " + name);
}

// A view becomes a list of sorted atom-name lists.
std::vector<std::vector<std::string>> view_out(const TotalView& w,
                                               const Signature& sig) {
  std::vector<std::vector<std::string>> out;
  out.reserve(w.size());
  for (Interp i : w) out.push_back(interp_names(i, sig));
  return out;
}

std::vector<std::vector<std::vector<std::string>>> views_out(
    const std::vector<TotalView>& vs, const Signature& sig) {
  std::vector<std::vector<std::vector<std::string>>> out;
  out.reserve(vs.size());
  for (const auto& w : vs) out.push_back(view_out(w, sig));
  return out;
}

Interp mask_from(const Program& p, const std::vector<std::string>& atoms) {
  Interp m = 0;
  for (const auto& a : atoms) {
    const int idx = p.sig.index_of(a);
    if (idx < 0) throw std::invalid_argument("unknown atom: " + a);
    m |= Interp(1) << idx;
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(pyelp, m) {
  m.doc() = "world-view solver for epistemic logic programs";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<CapExceeded>(m, "CapExceeded");

  py::class_<Program>(m, "Program")
      .def_property_readonly("atoms",
                             [](const Program& p) {
                               std::vector<std::string> out;
                               for (int i = 0; i < p.sig.size(); ++i)
                                 out.push_back(p.sig.name(i));
                               return out;
                             })
      .def_property_readonly(
          "rule_count", [](const Program& p) { return p.rules.size(); })
      .def("__str__", [](const Program& p) { return print_program(p); });

  m.def(
      "parse_program",
      [](const std::string& src, const std::vector<std::string>& extra) {
        return parse_program(src, extra);
      },
      py::arg("src"), py::arg("extra_atoms") = std::vector<std::string>{});

  m.def(
      "world_views",
      [](const Program& p, const std::string& semantics, int cap) {
        return views_out(world_views(p, semantics_from(semantics), cap), p.sig);
      },
      py::arg("program"), py::arg("semantics") = "faeel",
      py::arg("cap") = kDefaultEpistemicCap);

  m.def(
      "is_world_view",
      [](const Program& p, const std::string& semantics,
         const std::vector<std::vector<std::string>>& view) {
        TotalView w;
        for (const auto& interp : view) w.push_back(mask_from(p, interp));
        return is_world_view(theory_of(p), semantics_from(semantics),
                             canonical(std::move(w)));
      },
      py::arg("program"), py::arg("semantics"), py::arg("view"));

  m.def(
      "split",
      [](const Program& p, const std::vector<std::string>& u) {
        const SplitResult s = split(p, mask_from(p, u));
        return py::make_tuple(print_program(s.bottom), print_program(s.top));
      },
      py::arg("program"), py::arg("u"));

  m.def(
      "solutions",
      [](const Program& p, const std::vector<std::string>& u,
         const std::string& semantics, int cap) {
        std::vector<py::tuple> out;
        for (const auto& [wb, wt] :
             solutions(p, mask_from(p, u), semantics_from(semantics), cap))
          out.push_back(
              py::make_tuple(view_out(wb, p.sig), view_out(wt, p.sig)));
        return out;
      },
      py::arg("program"), py::arg("u"), py::arg("semantics") = "faeel",
      py::arg("cap") = kDefaultEpistemicCap);

  m.def(
      "world_views_via_splitting",
      [](const Program& p, const std::vector<std::string>& u,
         const std::string& semantics, int cap) {
        return views_out(world_views_via_splitting(
                             p, mask_from(p, u), semantics_from(semantics), cap),
                         p.sig);
      },
      py::arg("program"), py::arg("u"), py::arg("semantics") = "faeel",
      py::arg("cap") = kDefaultEpistemicCap);

  auto layers_out = [](const Program& p,
                       const std::optional<LayerAssignment>& l)
      -> py::object {
    if (!l) return py::none();
    py::dict d;
    for (int i = 0; i < p.sig.size(); ++i)
      d[py::str(p.sig.name(i))] = (*l)[i];
    return d;
  };
  m.def("stratify", [layers_out](const Program& p) {
    return layers_out(p, stratify(p));
  });
  m.def("tight_stratify", [layers_out](const Program& p) {
    return layers_out(p, tight_stratify(p));
  });

  m.def("property_names", [] { return property_names(); });
  m.def(
      "check_property",
      [](const std::string& name, const Program& p,
         const std::string& semantics) {
        PropertyParams params;
        params.semantics = semantics_from(semantics);
        std::string detail;
        const bool ok = check_property_once(name, p, params, &detail);
        return py::make_tuple(ok, detail);
      },
      py::arg("name"), py::arg("program"), py::arg("semantics") = "faeel");
}
