#include "elp/errors.hpp"
#include "elp/semantics.hpp"
#include "elp/splitting.hpp"
#include "elp/stratify.hpp"
#include "elp/syntax.hpp"
#include "elp/topdown.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;

namespace {

using namespace elp;

std::vector<std::string> to_py(const Interpretation& i) {
    std::vector<std::string> out;
    for (const auto& a : i) out.push_back(a.to_string());
    return out;
}

std::vector<std::vector<std::string>> to_py(const WorldView& w) {
    std::vector<std::vector<std::string>> out;
    for (const auto& i : w) out.push_back(to_py(i));
    return out;
}

std::vector<std::vector<std::vector<std::string>>> to_py(const std::set<WorldView>& c) {
    std::vector<std::vector<std::vector<std::string>>> out;
    for (const auto& w : c) out.push_back(to_py(w));
    return out;
}

std::vector<std::string> to_py(const std::set<SubjectiveLiteral>& e) {
    std::vector<std::string> out;
    for (const auto& l : e) out.push_back(l.to_string());
    return out;
}

std::set<Atom> atoms_from_py(const std::vector<std::string>& names) {
    std::set<Atom> out;
    for (const auto& n : names) out.insert(parse_atom(n));
    return out;
}

SemanticsId semantics_from_py(const std::string& name) {
    auto s = semantics_from_string(name);
    if (!s) throw py::value_error("unknown semantics '" + name + "'");
    return *s;
}

SubsetPolicy policy_from_py(const std::string& name) {
    if (name == "maximal") return SubsetPolicy::maximal;
    if (name == "all") return SubsetPolicy::all;
    throw py::value_error("unknown subset policy '" + name + "'");
}

} // namespace

PYBIND11_MODULE(elpsplit, m) {
    m.doc() = "Answer sets, world views and epistemic splitting for logic programs";

    py::register_exception<ParseError>(m, "ElpParseError", PyExc_ValueError);
    py::register_exception<InvalidSplittingError>(m, "InvalidSplittingError", PyExc_ValueError);
    py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_RuntimeError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<UnsatisfiableError>(m, "UnsatisfiableError", PyExc_RuntimeError);

    py::class_<Program>(m, "Program")
        .def("__str__", &Program::to_string)
        .def("__eq__", [](const Program& a, const Program& b) { return a == b; })
        .def("__len__", [](const Program& p) { return p.rules.size(); })
        .def_property_readonly("is_ground", &Program::is_ground)
        .def_property_readonly("is_objective", &Program::is_objective)
        .def("atoms", [](const Program& p) {
            std::vector<std::string> out;
            for (const auto& a : p.atom_universe()) out.push_back(a.to_string());
            return out;
        });

    m.def("parse", [](const std::string& text) { return parse_program(text); },
          py::arg("text"), "Parse program text into a Program.");
    m.def("ground", [](const Program& p) { return ground(p); }, py::arg("program"));
    m.def("validate", [](const Program& p) {
              std::vector<std::string> out;
              for (const auto& d : validate_elp(p)) out.push_back(d.message);
              return out;
          },
          py::arg("program"), "Diagnostics for indirectly subjective constraints.");

    m.def("answer_sets",
          [](const Program& p) { return to_py(answer_sets(p)); },
          py::arg("program"), "Answer sets of a ground objective program.");

    m.def("world_views",
          [](const Program& p, const std::string& semantics, int max_subjective) {
              return to_py(world_views(p, semantics_from_py(semantics),
                                       WorldViewOptions{max_subjective}));
          },
          py::arg("program"), py::arg("semantics") = "g91", py::arg("max_subjective") = 10);

    m.def("is_splitting_set",
          [](const std::vector<std::string>& u, const Program& p) {
              return is_splitting_set(atoms_from_py(u), p);
          },
          py::arg("u"), py::arg("program"));

    m.def("split",
          [](const std::vector<std::string>& u, const Program& p) {
              Splitting sp = split(atoms_from_py(u), p);
              return py::make_tuple(sp.bottom, sp.top);
          },
          py::arg("u"), py::arg("program"), "Returns the (bottom, top) pair.");

    m.def("enumerate_splitting_sets",
          [](const Program& p, int max_atoms) {
              std::vector<std::vector<std::string>> out;
              for (const auto& u : enumerate_splitting_sets(p, SplittingOptions{max_atoms})) {
                  std::vector<std::string> names;
                  for (const auto& a : u) names.push_back(a.to_string());
                  out.push_back(names);
              }
              return out;
          },
          py::arg("program"), py::arg("max_atoms") = 16);

    m.def("esp_world_views",
          [](const Program& p, const std::vector<std::string>& u, const std::string& semantics,
             int max_subjective) {
              return to_py(esp_world_views(p, atoms_from_py(u), semantics_from_py(semantics),
                                           WorldViewOptions{max_subjective}));
          },
          py::arg("program"), py::arg("u"), py::arg("semantics") = "g91",
          py::arg("max_subjective") = 10);

    m.def("tdespb_candidates",
          [](const Program& p, const std::vector<std::string>& u, const std::string& semantics,
             int max_subjective) {
              return to_py(tdespb_candidates(p, atoms_from_py(u), semantics_from_py(semantics),
                                             WorldViewOptions{max_subjective}));
          },
          py::arg("program"), py::arg("u"), py::arg("semantics") = "g91",
          py::arg("max_subjective") = 10);

    m.def("tdesp_candidates",
          [](const Program& p, const std::vector<std::string>& u, const std::string& semantics,
             const std::string& subsets, int max_subjective) {
              return to_py(tdesp_candidates(p, atoms_from_py(u), semantics_from_py(semantics),
                                            policy_from_py(subsets),
                                            WorldViewOptions{max_subjective}));
          },
          py::arg("program"), py::arg("u"), py::arg("semantics") = "g91",
          py::arg("subsets") = "maximal", py::arg("max_subjective") = 10);

    m.def("stratify", [](const Program& p) {
        StratificationResult r = stratify(p);
        py::dict out;
        out["stratified"] = r.stratified;
        if (r.stratified) {
            py::dict lam;
            for (const auto& [a, lv] : r.lambda) lam[py::str(a.to_string())] = lv;
            out["lambda"] = lam;
        } else {
            std::vector<std::string> v;
            for (const auto& a : r.violation) v.push_back(a.to_string());
            out["violation"] = v;
        }
        return out;
    });

    m.def("check_equivalence",
          [](const Program& p, const std::vector<std::string>& u, const std::string& semantics,
             const std::string& subsets, int max_subjective) {
              EquivalenceReport rep =
                  check_equivalence(p, atoms_from_py(u), semantics_from_py(semantics),
                                    policy_from_py(subsets), WorldViewOptions{max_subjective});
              py::dict out;
              out["direct"] = to_py(rep.direct);
              out["esp"] = to_py(rep.esp);
              out["tdespb"] = to_py(rep.tdespb);
              out["tdesp"] = to_py(rep.tdesp);
              py::dict verdicts;
              verdicts["esp_eq_direct"] = rep.esp_eq_direct();
              verdicts["tdespb_eq_direct"] = rep.tdespb_eq_direct();
              verdicts["tdesp_eq_direct"] = rep.tdesp_eq_direct();
              verdicts["tdespb_eq_esp"] = rep.tdespb_eq_esp();
              out["verdicts"] = verdicts;
              py::list traces;
              for (const auto& t : rep.traces) {
                  py::dict tr;
                  tr["top_world_view"] = to_py(t.top_wv);
                  tr["es"] = to_py(t.req.es);
                  tr["ec"] = to_py(t.req.ec);
                  tr["rq"] = to_py(t.req.rq);
                  traces.append(tr);
              }
              out["traces"] = traces;
              return out;
          },
          py::arg("program"), py::arg("u"), py::arg("semantics") = "g91",
          py::arg("subsets") = "maximal", py::arg("max_subjective") = 10);
}
