// Python bindings for the core operations. Rationals cross the boundary as
// canonical "p/q" strings; states and events as name lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seff/charrel.hpp"
#include "seff/compose.hpp"
#include "seff/json_io.hpp"
#include "seff/logic.hpp"

namespace py = pybind11;
using namespace seff;

namespace {

// pybind11 cannot hold shared_ptr<const T>; the binding layer passes spaces
// around inside a small value wrapper instead.
struct PySpace {
  SpacePtr ptr;
};

Rational rat(const std::string& text) { return parse_rational(text); }

std::vector<Rational> rats(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(rat(t));
  return out;
}

std::vector<std::string> strs(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

SubProb make_subprob(const PySpace& space, const std::vector<std::string>& weights) {
  return SubProb(space.ptr, rats(weights));
}

Generator make_generator(const std::string& kind, const PySpace& space,
                         const std::vector<std::vector<std::string>>& points) {
  std::vector<SubProb> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(make_subprob(space, p));
  if (kind == "points") return Generator::points(std::move(pts));
  if (kind == "hull") return Generator::hull(std::move(pts));
  throw Error("generator kind must be 'points' or 'hull'");
}

ThresholdQuery make_query(const Subset& event, const std::string& rel,
                          const std::string& bound) {
  return ThresholdQuery(event, parse_rel(rel), rat(bound));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact finite stochastic effectivity functions";

  py::register_exception<Error>(m, "SeffError");

  py::class_<PySpace>(m, "FinSpace")
      .def(py::init([](const std::vector<std::string>& states) {
        return PySpace{make_space(states)};
      }))
      .def_property_readonly("states",
                             [](const PySpace& s) { return s.ptr->states(); })
      .def("__len__", [](const PySpace& s) { return s.ptr->size(); })
      .def("__repr__", [](const PySpace& s) {
        std::string out = "FinSpace([";
        for (std::size_t i = 0; i < s.ptr->size(); ++i)
          out += (i ? ", " : "") + std::string("'") + s.ptr->name(i) + "'";
        return out + "])";
      });

  py::class_<Subset>(m, "Subset")
      .def(py::init([](const PySpace& space, const std::vector<std::string>& members) {
        return Subset(space.ptr, members);
      }))
      .def_property_readonly("members", &Subset::members)
      .def("__eq__", [](const Subset& a, const Subset& b) { return a == b; })
      .def("__repr__", &Subset::to_string);

  py::class_<SubProb>(m, "SubProb")
      .def(py::init(&make_subprob))
      .def_property_readonly("weights", [](const SubProb& p) { return strs(p.weights()); })
      .def_property_readonly("mass", [](const SubProb& p) { return to_string(p.total_mass()); })
      .def("measure", [](const SubProb& p, const Subset& a) { return to_string(measure_of(p, a)); })
      .def("__eq__", [](const SubProb& a, const SubProb& b) { return a == b; })
      .def("__repr__", &SubProb::to_string);

  py::class_<MeasMap>(m, "MeasMap")
      .def(py::init([](const PySpace& dom, const PySpace& cod,
                       const std::map<std::string, std::string>& assignment) {
        std::vector<std::pair<std::string, std::string>> pairs(assignment.begin(),
                                                               assignment.end());
        return MeasMap(dom.ptr, cod.ptr, pairs);
      }))
      .def("apply", [](const MeasMap& f, const std::string& s) { return f.apply_name(s); })
      .def_property_readonly("surjective", &MeasMap::is_surjective);

  py::class_<Partition>(m, "Partition")
      .def(py::init([](const PySpace& space,
                       const std::vector<std::vector<std::string>>& blocks) {
        return Partition(space.ptr, blocks);
      }))
      .def("__repr__", &Partition::to_string);

  py::class_<Kernel>(m, "Kernel")
      .def(py::init([](const PySpace& dom, const PySpace& cod,
                       const std::map<std::string, std::vector<std::string>>& rows) {
        std::vector<SubProb> parsed;
        parsed.reserve(dom.ptr->size());
        for (const auto& name : dom.ptr->states()) {
          const auto it = rows.find(name);
          if (it == rows.end()) throw Error("kernel row for state '" + name + "' is missing");
          parsed.push_back(make_subprob(cod, it->second));
        }
        return Kernel(dom.ptr, cod.ptr, std::move(parsed));
      }))
      .def_static("identity", [](const PySpace& space) { return Kernel::identity(space.ptr); })
      .def("row", [](const Kernel& k, const std::string& s) {
        return k.row(k.dom()->index_of(s));
      })
      .def("__eq__", [](const Kernel& a, const Kernel& b) { return a == b; });

  py::class_<Generator>(m, "Generator").def(py::init(&make_generator));

  py::class_<Filter>(m, "Filter")
      .def(py::init([](const PySpace& space, const std::vector<Generator>& gens) {
        return Filter(space.ptr, gens);
      }))
      .def_property_readonly("empty", &Filter::is_empty);

  py::class_<EffFn>(m, "EffFn").def(py::init(
      [](const PySpace& dom, const PySpace& cod, const std::map<std::string, Filter>& pf) {
        std::vector<Filter> portfolio;
        portfolio.reserve(dom.ptr->size());
        for (const auto& name : dom.ptr->states()) {
          const auto it = pf.find(name);
          if (it == pf.end()) throw Error("portfolio for state '" + name + "' is missing");
          portfolio.push_back(it->second);
        }
        return EffFn(dom.ptr, cod.ptr, std::move(portfolio));
      }));

  py::class_<Congruence>(m, "Congruence")
      .def(py::init([](const Partition& alpha, const Partition& beta) {
        return Congruence{alpha, beta};
      }))
      .def_property_readonly("alpha", [](const Congruence& c) { return c.alpha; })
      .def_property_readonly("beta", [](const Congruence& c) { return c.beta; });

  // finspace operations
  m.def("measure_of",
        [](const SubProb& mu, const Subset& a) { return to_string(measure_of(mu, a)); });
  m.def("pushforward", &pushforward);
  m.def("query_holds", [](const Subset& event, const std::string& rel,
                          const std::string& bound, const SubProb& mu) {
    return query_holds(make_query(event, rel, bound), mu);
  });
  m.def("choquet_area", [](const std::vector<std::string>& f_vals, const SubProb& mu) {
    return to_string(choquet_area(rats(f_vals), mu));
  });

  // kernels
  m.def("kleisli", &kleisli);
  m.def("is_kernel_morphism", &is_kernel_morphism);

  // effectivity
  m.def("lift_kernel", &lift_kernel);
  m.def("lift_family_exists",
        [](const std::vector<Kernel>& ks) { return lift_family_exists(ks); });
  m.def("lift_family_forall", &lift_family_forall);
  m.def("lift_convex_family", &lift_convex_family);
  m.def("lift_transition_system",
        [](const PySpace& space,
           const std::vector<std::pair<std::string, std::string>>& edges) {
          return lift_transition_system(space.ptr, edges);
        });
  m.def("lift_nlmp", [](const PySpace& dom, const std::vector<Generator>& kappa) {
    return lift_nlmp(dom.ptr, kappa);
  });
  m.def("member", [](const EffFn& p, const std::string& state, const Subset& event,
                     const std::string& rel, const std::string& bound) {
    return member(p, state, make_query(event, rel, bound));
  });
  m.def("profile", [](const EffFn& p, const Subset& event, const std::string& rel) {
    const Profile prof = profile(p, event, parse_rel(rel));
    std::map<std::string, std::optional<std::string>> out;
    for (std::size_t s = 0; s < p.dom()->size(); ++s) {
      const auto& e = prof.entries[s];
      out[p.dom()->name(s)] =
          e.empty ? std::nullopt : std::optional<std::string>(to_string(e.critical));
    }
    return out;
  });
  m.def("detect_pointed", &detect_pointed);

  // compose
  m.def("averaging_threshold", [](const EffFn& q, const Subset& event) {
    return strs(averaging_threshold(q, event));
  });
  m.def("convolve", [](const EffFn& p, const EffFn& q, const Subset& event,
                       const std::string& bound) {
    return convolve(p, q, event, rat(bound));
  });
  m.def("check_conv_ok", &check_conv_ok);

  // equiv
  m.def("apply_vau", &apply_vau);
  m.def("filters_equal", &filters_equal);
  m.def("is_morphism", [](const EffFn& p, const EffFn& q, const MeasMap& f, const MeasMap& g) {
    return is_morphism(p, q, {f, g});
  });
  m.def("is_strong",
        [](const MeasMap& f, const MeasMap& g) { return is_strong({f, g}); });
  m.def("is_congruence", &is_congruence);
  m.def("quotient", &quotient);
  m.def("kernel_congruence",
        [](const EffFn& p, const EffFn& q, const MeasMap& f, const MeasMap& g) {
          return kernel_congruence(p, q, {f, g});
        });
  m.def("logically_equivalent",
        [](const EffFn& p, const EffFn& q, std::uint64_t max_search) {
          const SearchResult r = logically_equivalent(p, q, max_search);
          py::dict out;
          out["status"] = r.status == SearchStatus::Found        ? "found"
                          : r.status == SearchStatus::NoWitness ? "no-witness"
                                                                 : "bound-exceeded";
          if (r.witness) {
            out["alpha_p"] = r.witness->cp.alpha.to_string();
            out["beta_p"] = r.witness->cp.beta.to_string();
            out["alpha_q"] = r.witness->cq.alpha.to_string();
            out["beta_q"] = r.witness->cq.beta.to_string();
          }
          return out;
        },
        py::arg("p"), py::arg("q"), py::arg("max_search") = 1000000);

  // charrel
  py::class_<CharRel>(m, "CharRel");
  m.def("canonical_charrel", &canonical_charrel);
  m.def("check_rules", [](const CharRel& r) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& v : check_rules(r)) out.emplace_back(v.rule, v.witness);
    return out;
  });
  m.def("extract_measure", [](const CharRel& r) {
    const auto result = extract_measure(r);
    py::dict out;
    out["valid"] = result.valid;
    out["detail"] = result.detail;
    if (result.measure) out["measure"] = *result.measure;
    return out;
  });
  m.def("satisfies", &satisfies);
  m.def("implements",
        [](const Filter& q, const SubProb& mu, bool strict) {
          return implements(q, mu,
                            strict ? ImplementsReading::Strict : ImplementsReading::AtLeast);
        },
        py::arg("q"), py::arg("mu"), py::arg("strict") = false);

  // logic
  py::class_<StochModel>(m, "StochModel")
      .def(py::init([](const EffFn& p, const std::map<std::string, Subset>& valuation) {
        return StochModel(p, valuation);
      }));
  py::class_<NeighborhoodModel>(m, "NeighborhoodModel")
      .def(py::init([](const PySpace& space,
                       const std::map<std::string, std::vector<std::vector<Subset>>>& prims) {
        return NeighborhoodModel(space.ptr, prims);
      }));
  m.def("eval_formula", [](const StochModel& model, const std::string& text) {
    return eval_formula(model, parse_formula(text));
  });
  m.def("eval_game",
        [](const NeighborhoodModel& model, const std::string& text, const Subset& target) {
          return eval_game(model, parse_game(text), target);
        });
  m.def("pretty_formula",
        [](const std::string& text) { return pretty(parse_formula(text)); });
  m.def("pretty_game", [](const std::string& text) { return pretty(parse_game(text)); });

  // model files
  m.def("load_kernel", [](const std::string& path) {
    return std::get<Kernel>(load_model(path));
  });
  m.def("load_effectivity", [](const std::string& path) {
    const auto doc = std::get<EffectivityDoc>(load_model(path));
    return py::make_tuple(doc.eff, doc.valuation);
  });
  m.def("save_kernel_file", [](const Kernel& k, const std::string& path) {
    write_file(path, save_kernel(k));
  });
  m.def("save_effectivity_file",
        [](const EffFn& eff, const std::map<std::string, Subset>& valuation,
           const std::string& path) {
          write_file(path, save_effectivity({eff, valuation}));
        });
}
