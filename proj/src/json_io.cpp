#include "pita/json_io.hpp"

#include <sstream>

namespace pita {

Json to_json(const FinMap& f) {
  return Json{{"dom", f.dom()}, {"cod", f.cod()}, {"values", f.to_vector()}};
}

FinMap finmap_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cod") || !j.contains("values")) {
    throw std::invalid_argument("FinMap JSON needs \"cod\" and \"values\"");
  }
  const std::vector<int> values = j.at("values").get<std::vector<int>>();
  if (j.contains("dom") && j.at("dom").get<int>() != static_cast<int>(values.size())) {
    throw std::invalid_argument("FinMap JSON: dom does not match values");
  }
  return FinMap(j.at("cod").get<int>(), values);
}

Json to_json(const Chain& c) {
  Json objs = Json::array();
  Json maps = Json::array();
  for (int k = c.length(); k >= 0; --k) objs.push_back(c.T(k));
  for (int k = c.length(); k >= 1; --k) maps.push_back(to_json(c.f(k)));
  return Json{{"objects", objs}, {"maps", maps}};
}

Chain chain_from_json(const OperadicInstance& inst, const Json& j) {
  std::vector<Mor> maps;
  for (const Json& m : j.at("maps")) maps.push_back(finmap_from_json(m));
  if (maps.empty()) {
    const Json& objs = j.at("objects");
    if (objs.size() != 1) throw std::invalid_argument("0-chain needs one object");
    return Chain(objs.front().get<int>());
  }
  Chain c = Chain::from_top(inst, maps);
  if (j.contains("objects")) {
    std::vector<int> objs = j.at("objects").get<std::vector<int>>();
    std::vector<int> want(c.objects_bottom_up().rbegin(), c.objects_bottom_up().rend());
    if (objs != want) throw std::invalid_argument("chain objects do not match maps");
  }
  return c;
}

Json to_json(const Ladder& l) {
  Json rungs = Json::array();
  for (std::size_t k = l.sigma.size(); k-- > 0;) rungs.push_back(to_json(l.sigma[k]));
  return Json{{"source", to_json(l.source)}, {"target", to_json(l.target)},
              {"sigma", rungs}};
}

Json to_json(const Report& r) {
  Json vs = Json::array();
  for (const Violation& v : r.violations) {
    Json w = Json::array();
    for (const FinMap& f : v.witnesses) w.push_back(to_json(f));
    vs.push_back(Json{{"axiom", v.check}, {"witnesses", w}, {"lhs", v.lhs},
                      {"rhs", v.rhs}});
  }
  return Json{{"name", r.name},        {"ok", r.ok()},
              {"checked", r.checked},  {"violations", vs},
              {"skipped", r.skipped},  {"notes", r.notes}};
}

Json to_json(const CoalgebraElement& t) {
  if (t.arity() != 2) throw std::invalid_argument("JSON terms need arity 2");
  Json terms = Json::array();
  for (const Tensor::Key& k : t.ordered_keys()) {
    terms.push_back(Json{{"left", Json::array({k[0]})},
                         {"right", k[1]},
                         {"coeff", t.coeff(k)}});
  }
  return Json{{"terms", terms}};
}

std::vector<int> parse_values(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (ch == '[' || ch == ']') continue;
    s += ch == ',' ? ' ' : ch;
  }
  std::istringstream is(s);
  std::vector<int> out;
  int v = 0;
  while (is >> v) out.push_back(v);
  if (!is.eof()) throw std::invalid_argument("cannot parse map values: " + text);
  return out;
}

}  // namespace pita
