#include "seff/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace seff {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(message); }

const Json& field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) fail(std::string(what) + " must contain only strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

SpacePtr space_from(const Json& j, const char* what) {
  return make_space(string_list(j, what));
}

Json space_to(const SpacePtr& s) {
  Json out = Json::array();
  for (const auto& name : s->states()) out.push_back(name);
  return out;
}

SubProb subprob_from(const Json& j, const SpacePtr& space, const std::string& where) {
  const auto parts = string_list(j, where.c_str());
  if (parts.size() != space->size())
    fail(where + ": expected " + std::to_string(space->size()) + " weights");
  std::vector<Rational> w;
  w.reserve(parts.size());
  for (const auto& p : parts) w.push_back(parse_rational(p));
  try {
    return SubProb(space, std::move(w));
  } catch (const Error& e) {
    fail(where + ": " + e.what());
  }
}

Json subprob_to(const SubProb& mu) {
  Json out = Json::array();
  for (const auto& w : mu.weights()) out.push_back(to_string(w));
  return out;
}

Generator generator_from(const Json& j, const SpacePtr& space, const std::string& where) {
  const std::string kind = field(j, "kind").get<std::string>();
  GenKind k;
  if (kind == "points") k = GenKind::Points;
  else if (kind == "hull") k = GenKind::Hull;
  else fail(where + ": generator kind must be 'points' or 'hull'");
  const Json& pts = field(j, "points");
  if (!pts.is_array() || pts.empty()) fail(where + ": generator needs a nonempty point list");
  std::vector<SubProb> points;
  points.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    points.push_back(subprob_from(pts[i], space, where + " point " + std::to_string(i)));
  return Generator(k, std::move(points));
}

Json generator_to(const Generator& g) {
  Json out;
  out["kind"] = g.kind() == GenKind::Points ? "points" : "hull";
  Json pts = Json::array();
  for (const auto& p : g.point_list()) pts.push_back(subprob_to(p));
  out["points"] = std::move(pts);
  return out;
}

Subset subset_from(const Json& j, const SpacePtr& space, const char* what) {
  return Subset(space, string_list(j, what));
}

Json subset_to(const Subset& s) {
  Json out = Json::array();
  for (const auto& m : s.members()) out.push_back(m);
  return out;
}

Kernel kernel_from(const Json& j) {
  const SpacePtr dom = space_from(field(j, "dom"), "dom");
  const SpacePtr cod = space_from(field(j, "cod"), "cod");
  const Json& rows = field(j, "rows");
  std::vector<SubProb> parsed;
  parsed.reserve(dom->size());
  for (const auto& name : dom->states()) {
    const auto it = rows.find(name);
    if (it == rows.end()) fail("kernel row for state '" + name + "' is missing");
    parsed.push_back(subprob_from(*it, cod, "kernel row for state '" + name + "'"));
  }
  return Kernel(dom, cod, std::move(parsed));
}

EffectivityDoc effectivity_from(const Json& j) {
  const SpacePtr dom = space_from(field(j, "dom"), "dom");
  const SpacePtr cod = space_from(field(j, "cod"), "cod");
  const Json& portfolio = field(j, "portfolio");
  std::vector<Filter> filters;
  filters.reserve(dom->size());
  for (const auto& name : dom->states()) {
    const auto it = portfolio.find(name);
    if (it == portfolio.end()) fail("portfolio for state '" + name + "' is missing");
    if (!it->is_array()) fail("portfolio for state '" + name + "' must be an array");
    std::vector<Generator> gens;
    gens.reserve(it->size());
    for (std::size_t i = 0; i < it->size(); ++i)
      gens.push_back(generator_from((*it)[i], cod,
                                    "generator " + std::to_string(i) + " of state '" +
                                        name + "'"));
    filters.emplace_back(cod, std::move(gens));
  }
  EffectivityDoc doc{EffFn(dom, cod, std::move(filters)), {}};
  if (j.contains("valuation")) {
    for (const auto& [atom, members] : j.at("valuation").items())
      doc.valuation.emplace(atom, subset_from(members, dom, "valuation"));
  }
  return doc;
}

NeighborhoodModel nbhd_from(const Json& j) {
  const SpacePtr space = space_from(field(j, "states"), "states");
  std::map<std::string, std::vector<std::vector<Subset>>> prims;
  for (const auto& [game, per_state] : field(j, "primitives").items()) {
    std::vector<std::vector<Subset>> lists;
    lists.reserve(space->size());
    for (const auto& name : space->states()) {
      const auto it = per_state.find(name);
      if (it == per_state.end())
        fail("primitive '" + game + "' misses state '" + name + "'");
      std::vector<Subset> gens;
      for (const auto& members : *it)
        gens.push_back(subset_from(members, space, "neighborhood generator"));
      lists.push_back(std::move(gens));
    }
    prims.emplace(game, std::move(lists));
  }
  return NeighborhoodModel(space, std::move(prims));
}

CharRel charrel_from(const Json& j) {
  const SpacePtr space = space_from(field(j, "states"), "states");
  const Json& sections = field(j, "sections");
  std::vector<DownSet> parsed(1ull << space->size(), DownSet::empty_set());
  std::vector<bool> seen(parsed.size(), false);
  if (!sections.is_array()) fail("sections must be an array");
  for (const auto& sec : sections) {
    const Subset event = subset_from(field(sec, "event"), space, "section event");
    if (seen.at(event.bits())) fail("duplicate section for event " + event.to_string());
    seen[event.bits()] = true;
    const std::string shape = field(sec, "shape").get<std::string>();
    if (shape == "empty") {
      parsed[event.bits()] = DownSet::empty_set();
    } else if (shape == "upto") {
      const Rational bound = parse_rational(field(sec, "bound").get<std::string>());
      const bool closed = field(sec, "closed").get<bool>();
      parsed[event.bits()] = DownSet::up_to(bound, closed);
    } else {
      fail("section shape must be 'empty' or 'upto'");
    }
  }
  for (std::size_t mask = 0; mask < seen.size(); ++mask)
    if (!seen[mask]) fail("missing section for event " + Subset(space, mask).to_string());
  return CharRel(space, std::move(parsed));
}

CongruenceDoc congruence_from(const Json& j) {
  const SpacePtr dom = space_from(field(j, "dom"), "dom");
  const SpacePtr cod = space_from(field(j, "cod"), "cod");
  const auto blocks_from = [](const Json& b, const SpacePtr& space, const char* what) {
    if (!b.is_array()) fail(std::string(what) + " must be an array of blocks");
    std::vector<std::vector<std::string>> blocks;
    for (const auto& blk : b) blocks.push_back(string_list(blk, what));
    return Partition(space, blocks);
  };
  return CongruenceDoc{dom, cod,
                       Congruence{blocks_from(field(j, "alpha"), dom, "alpha"),
                                  blocks_from(field(j, "beta"), cod, "beta")}};
}

TransitionSystemDoc ts_from(const Json& j) {
  const SpacePtr space = space_from(field(j, "states"), "states");
  TransitionSystemDoc doc{space, {}};
  for (const auto& edge : field(j, "edges")) {
    const auto pair = string_list(edge, "edge");
    if (pair.size() != 2) fail("edges must be [from, to] pairs");
    space->index_of(pair[0]);
    space->index_of(pair[1]);
    doc.edges.emplace_back(pair[0], pair[1]);
  }
  return doc;
}

NlmpDoc nlmp_from(const Json& j) {
  const SpacePtr dom = space_from(field(j, "dom"), "dom");
  const SpacePtr cod = space_from(field(j, "cod"), "cod");
  const Json& kappa = field(j, "kappa");
  std::vector<Generator> gens;
  gens.reserve(dom->size());
  for (const auto& name : dom->states()) {
    const auto it = kappa.find(name);
    if (it == kappa.end()) fail("kappa for state '" + name + "' is missing");
    gens.push_back(generator_from(*it, cod, "kappa for state '" + name + "'"));
  }
  return NlmpDoc{dom, cod, std::move(gens)};
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("malformed JSON document");
  if (!j.is_object()) fail("model document must be a JSON object");
  const auto format = field(j, "format");
  if (!format.is_number_integer() || format.get<int>() != 1)
    fail("unsupported format version");
  return j;
}

std::string dump(Json j) { return j.dump(2) + "\n"; }

Json header(const char* kind) {
  Json j;
  j["format"] = 1;
  j["kind"] = kind;
  return j;
}

}  // namespace

ModelDoc parse_model(const std::string& json_text) {
  const Json j = parse_json(json_text);
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "space") return space_from(field(j, "states"), "states");
  if (kind == "kernel") return kernel_from(j);
  if (kind == "effectivity") return effectivity_from(j);
  if (kind == "nbhd-model") return nbhd_from(j);
  if (kind == "charrel") return charrel_from(j);
  if (kind == "congruence") return congruence_from(j);
  if (kind == "transition-system") return ts_from(j);
  if (kind == "nlmp") return nlmp_from(j);
  fail("unknown model kind '" + kind + "'");
}

ModelDoc load_model(const std::string& path) {
  try {
    return parse_model(read_file(path));
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

std::string save_space(const SpacePtr& space) {
  Json j = header("space");
  j["states"] = space_to(space);
  return dump(std::move(j));
}

std::string save_kernel(const Kernel& k) {
  Json j = header("kernel");
  j["dom"] = space_to(k.dom());
  j["cod"] = space_to(k.cod());
  Json rows;
  for (std::size_t s = 0; s < k.dom()->size(); ++s)
    rows[k.dom()->name(s)] = subprob_to(k.row(s));
  j["rows"] = std::move(rows);
  return dump(std::move(j));
}

std::string save_effectivity(const EffectivityDoc& doc) {
  Json j = header("effectivity");
  j["dom"] = space_to(doc.eff.dom());
  j["cod"] = space_to(doc.eff.cod());
  Json portfolio;
  for (std::size_t s = 0; s < doc.eff.dom()->size(); ++s) {
    Json gens = Json::array();
    for (const auto& g : doc.eff.at(s).generators()) gens.push_back(generator_to(g));
    portfolio[doc.eff.dom()->name(s)] = std::move(gens);
  }
  j["portfolio"] = std::move(portfolio);
  if (!doc.valuation.empty()) {
    Json valuation;
    for (const auto& [atom, set] : doc.valuation) valuation[atom] = subset_to(set);
    j["valuation"] = std::move(valuation);
  }
  return dump(std::move(j));
}

std::string save_nbhd_model(const NeighborhoodModel& m) {
  Json j = header("nbhd-model");
  j["states"] = space_to(m.space());
  Json prims;
  for (const auto& [game, per_state] : m.primitives()) {
    Json states;
    for (std::size_t s = 0; s < m.space()->size(); ++s) {
      Json gens = Json::array();
      for (const auto& g : per_state[s]) gens.push_back(subset_to(g));
      states[m.space()->name(s)] = std::move(gens);
    }
    prims[game] = std::move(states);
  }
  j["primitives"] = std::move(prims);
  return dump(std::move(j));
}

std::string save_charrel(const CharRel& r) {
  Json j = header("charrel");
  j["states"] = space_to(r.space());
  Json sections = Json::array();
  for (const auto& event : all_subsets(r.space())) {
    const DownSet& d = r.section(event);
    Json sec;
    sec["event"] = subset_to(event);
    if (d.is_empty()) {
      sec["shape"] = "empty";
    } else {
      sec["shape"] = "upto";
      sec["bound"] = to_string(d.bound());
      sec["closed"] = d.closed();
    }
    sections.push_back(std::move(sec));
  }
  j["sections"] = std::move(sections);
  return dump(std::move(j));
}

std::string save_congruence(const CongruenceDoc& c) {
  Json j = header("congruence");
  j["dom"] = space_to(c.dom);
  j["cod"] = space_to(c.cod);
  const auto blocks_to = [](const Partition& p) {
    Json out = Json::array();
    for (const auto& b : p.blocks()) {
      Json blk = Json::array();
      for (const auto& m : b.members()) blk.push_back(m);
      out.push_back(std::move(blk));
    }
    return out;
  };
  j["alpha"] = blocks_to(c.congruence.alpha);
  j["beta"] = blocks_to(c.congruence.beta);
  return dump(std::move(j));
}

std::string save_transition_system(const TransitionSystemDoc& ts) {
  Json j = header("transition-system");
  j["states"] = space_to(ts.space);
  Json edges = Json::array();
  for (const auto& [from, to] : ts.edges) edges.push_back(Json::array({from, to}));
  j["edges"] = std::move(edges);
  return dump(std::move(j));
}

std::string save_nlmp(const NlmpDoc& doc) {
  Json j = header("nlmp");
  j["dom"] = space_to(doc.dom);
  j["cod"] = space_to(doc.cod);
  Json kappa;
  for (std::size_t s = 0; s < doc.dom->size(); ++s)
    kappa[doc.dom->name(s)] = generator_to(doc.kappa.at(s));
  j["kappa"] = std::move(kappa);
  return dump(std::move(j));
}

std::string save_model(const ModelDoc& doc) {
  return std::visit(
      [](const auto& value) -> std::string {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, SpacePtr>) return save_space(value);
        else if constexpr (std::is_same_v<T, Kernel>) return save_kernel(value);
        else if constexpr (std::is_same_v<T, EffectivityDoc>) return save_effectivity(value);
        else if constexpr (std::is_same_v<T, NeighborhoodModel>) return save_nbhd_model(value);
        else if constexpr (std::is_same_v<T, CharRel>) return save_charrel(value);
        else if constexpr (std::is_same_v<T, CongruenceDoc>) return save_congruence(value);
        else if constexpr (std::is_same_v<T, TransitionSystemDoc>)
          return save_transition_system(value);
        else return save_nlmp(value);
      },
      doc);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace seff
