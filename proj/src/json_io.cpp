#include "tn2/json_io.hpp"

namespace tn2 {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Scalar coeff_field(const Json& j) {
  const Json& v = field(j, "coeff");
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (!v.is_string()) throw ParseError("coeff must be a \"p/q\" string");
  try {
    return Scalar::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

template <std::size_t N>
Json tensor_to_json(const Combination<Slots<N>>& t) {
  Json out = Json::array();
  for (const auto& [slots, c] : t) {
    Json s = Json::array();
    for (const auto& g : slots) s.push_back(to_json(g));
    out.push_back({{"slots", s}, {"coeff", c.to_string()}});
  }
  return out;
}

template <std::size_t N>
Combination<Slots<N>> tensor_from_json(const Json& j, const AlgebraSpec& algebra) {
  if (!j.is_array()) throw ParseError("tensor must be a JSON array of terms");
  Combination<Slots<N>> out(&algebra);
  for (const auto& term : j) {
    const Json& slots = field(term, "slots");
    if (!slots.is_array() || slots.size() != N) {
      throw ParseError("tensor term needs exactly " + std::to_string(N) + " slots");
    }
    Slots<N> key;
    for (std::size_t i = 0; i < N; ++i) key[i] = generator_from_json(slots[i], algebra);
    out.add(key, coeff_field(term));
  }
  return out;
}

Json parity_json(Parity p) { return p ? "odd" : "even"; }

Parity parity_from_json(const Json& j) {
  if (j == "even" || j == 0) return 0;
  if (j == "odd" || j == 1) return 1;
  throw ParseError("parity must be \"even\" or \"odd\"");
}

const AlgebraSpec& algebra_named(const Json& j) {
  if (!j.is_string()) throw ParseError("algebra must be a string");
  const AlgebraSpec* a = find_algebra(j.get<std::string>());
  if (!a) throw ParseError("unknown algebra '" + j.get<std::string>() + "'");
  return *a;
}

}  // namespace

Json to_json(const Generator& g) { return {{"family", std::string(1, family_symbol(g.family))}, {"index", g.index}}; }

Generator generator_from_json(const Json& j, const AlgebraSpec& algebra) {
  const Json& f = field(j, "family");
  if (!f.is_string()) throw ParseError("family must be a string");
  const auto family = family_from_symbol(f.get<std::string>());
  if (!family) throw ParseError("unknown family '" + f.get<std::string>() + "'");
  const Generator g{*family, int_field(j, "index")};
  if (!algebra.contains(g)) throw ParseError(to_string(g) + " is not a generator of " + algebra.name());
  return g;
}

Json to_json(const Element& e) {
  Json out = Json::array();
  for (const auto& [g, c] : e) {
    Json term = to_json(g);
    term["coeff"] = c.to_string();
    out.push_back(term);
  }
  return out;
}

Element element_from_json(const Json& j, const AlgebraSpec& algebra) {
  if (!j.is_array()) throw ParseError("element must be a JSON array of terms");
  Element out(&algebra);
  for (const auto& term : j) out.add(generator_from_json(term, algebra), coeff_field(term));
  return out;
}

Json to_json(const Tensor2& t) { return tensor_to_json(t); }
Json to_json(const Tensor3& t) { return tensor_to_json(t); }
Tensor2 tensor2_from_json(const Json& j, const AlgebraSpec& algebra) { return tensor_from_json<2>(j, algebra); }
Tensor3 tensor3_from_json(const Json& j, const AlgebraSpec& algebra) { return tensor_from_json<3>(j, algebra); }

Json to_json(const IndexRange& r) { return Json::array({r.lo, r.hi}); }

IndexRange range_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw ParseError("range must be [lo, hi]");
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

Json to_json(const AxiomReport& r) {
  Json out{{"check", r.check}, {"range", to_json(r.range)}, {"cases", r.cases}, {"passed", r.passed()}};
  out["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
  return out;
}

Json to_json(const CheckReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json gens = Json::array();
    for (const auto& g : v) gens.push_back(to_json(g));
    violations.push_back(gens);
  }
  return {{"check", r.check},
          {"window", to_json(r.window)},
          {"violations", violations},
          {"defect_terms", r.defect_terms},
          {"passed", r.passed()}};
}

Json to_json(const WindowConfig& c, const AlgebraSpec& algebra) {
  return {{"algebra", algebra.name()},
          {"gen_window", to_json(c.gen_window)},
          {"value_window", to_json(c.value_window)},
          {"relation_window", to_json(c.relation_window)},
          {"degree", c.degree},
          {"parity", parity_json(c.parity)},
          {"margin", c.margin}};
}

std::pair<WindowConfig, const AlgebraSpec*> window_config_from_json(const Json& j) {
  const AlgebraSpec& algebra = algebra_named(field(j, "algebra"));
  WindowConfig c;
  c.gen_window = range_from_json(field(j, "gen_window"));
  c.value_window = range_from_json(field(j, "value_window"));
  c.relation_window = j.contains("relation_window") ? range_from_json(j.at("relation_window")) : c.gen_window;
  c.degree = int_field(j, "degree");
  c.parity = parity_from_json(field(j, "parity"));
  c.margin = j.contains("margin") ? int_field(j, "margin") : 1;
  return {c, &algebra};
}

Json to_json(const CohomologyReport& r) {
  const AlgebraSpec* algebra = find_algebra(r.algebra);
  return {{"config", algebra ? to_json(r.config, *algebra) : Json(nullptr)},
          {"unknowns", r.unknowns},
          {"rows", r.rows},
          {"nullspace_dim", r.nullspace_dim},
          {"inner_dim", r.inner_dim},
          {"quotient_dim", r.quotient_dim},
          {"full_nullspace_dim", r.full_nullspace_dim},
          {"full_inner_dim", r.full_inner_dim},
          {"inner_window", to_json(inner_window(r.config))},
          {"containment", r.containment},
          {"witness_failures", r.witness_failures},
          {"passed", r.passed()}};
}

Json to_json(const ProbeConfig& c, const AlgebraSpec& algebra) {
  Json families = Json::array();
  for (Family f : c.acting_families) families.push_back(std::string(1, family_symbol(f)));
  return {{"algebra", algebra.name()},
          {"gen_window", to_json(c.gen_window)},
          {"value_window", to_json(c.value_window)},
          {"degrees", c.degrees ? to_json(*c.degrees) : Json(nullptr)},
          {"acting_families", families},
          {"margin", c.margin}};
}

namespace {

Json degrees_json(const std::vector<DegreeDims>& dims) {
  Json out = Json::array();
  for (const auto& d : dims) out.push_back({{"degree", d.degree}, {"unknowns", d.unknowns}, {"dim", d.dim}});
  return out;
}

}  // namespace

Json to_json(const KernelReport& r, const AlgebraSpec& algebra) {
  Json basis = Json::array();
  for (const auto& t : r.basis) basis.push_back(to_json(t));
  return {{"config", to_json(r.config, algebra)},
          {"reported_degrees", to_json(r.reported_degrees)},
          {"degrees", degrees_json(r.degrees)},
          {"basis", basis},
          {"passed", r.basis.empty()}};
}

Json to_json(const SkewProbeReport& r, const AlgebraSpec& algebra) {
  Json violations = Json::array();
  for (const auto& t : r.violations) violations.push_back(to_json(t));
  return {{"config", to_json(r.config, algebra)},
          {"reported_degrees", to_json(r.reported_degrees)},
          {"degrees", degrees_json(r.degrees)},
          {"violations", violations},
          {"passed", r.passed()}};
}

}  // namespace tn2
