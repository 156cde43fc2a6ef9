#include "nilalg/interchange.hpp"

#include "nilalg/errors.hpp"

#include <fstream>
#include <sstream>

namespace nilalg {

namespace {

int get_index(const nlohmann::json &obj, const char *key, const std::string &where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer())
    throw ParseError(where + ": field \"" + key + "\" must be an integer");
  return it->get<int>();
}

Rational get_rational(const nlohmann::json &v, const std::string &where) {
  if (v.is_string())
    return Rational::parse(v.get<std::string>());
  if (v.is_number_integer())
    return Rational(v.get<long long>());
  throw ParseError(where + ": coefficient must be a \"p/q\" string or an integer");
}

} // namespace

StructureTensor tensor_from_json(const nlohmann::json &doc) {
  if (!doc.is_object())
    throw ParseError("algebra document must be a JSON object");
  auto dim_it = doc.find("dim");
  if (dim_it == doc.end() || !dim_it->is_number_integer() || dim_it->get<long long>() < 0)
    throw ParseError("field \"dim\" must be a non-negative integer");
  const int n = dim_it->get<int>();
  std::string name;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string())
      throw ParseError("field \"name\" must be a string");
    name = it->get<std::string>();
  }
  std::vector<BracketSpec> specs;
  if (auto it = doc.find("brackets"); it != doc.end()) {
    if (!it->is_array())
      throw ParseError("field \"brackets\" must be an array");
    for (const auto &b : *it) {
      if (!b.is_object())
        throw ParseError("bracket entry must be an object");
      BracketSpec s;
      s.i = get_index(b, "i", "bracket");
      s.j = get_index(b, "j", "bracket");
      const std::string where = "bracket [X" + std::to_string(s.i) + ",X" + std::to_string(s.j) + "]";
      if (s.i < 1 || s.j > n || s.i >= s.j)
        throw ParseError(where + ": need 1 <= i < j <= dim");
      auto rhs = b.find("rhs");
      if (rhs == b.end() || !rhs->is_array())
        throw ParseError(where + ": field \"rhs\" must be an array");
      for (const auto &t : *rhs) {
        if (!t.is_object() || !t.contains("c"))
          throw ParseError(where + ": term must be an object with \"k\" and \"c\"");
        Term term{get_index(t, "k", where), get_rational(t["c"], where)};
        if (term.k < 1 || term.k > n)
          throw ParseError(where + ": output index " + std::to_string(term.k) + " out of range");
        s.rhs.push_back(std::move(term));
      }
      specs.push_back(std::move(s));
    }
  }
  return StructureTensor(static_cast<std::size_t>(n), specs, name);
}

StructureTensor parse_tensor(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return tensor_from_json(doc);
}

StructureTensor read_tensor_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_tensor(ss.str());
}

nlohmann::ordered_json tensor_to_json(const StructureTensor &g) {
  nlohmann::ordered_json doc;
  if (!g.name().empty())
    doc["name"] = g.name();
  doc["dim"] = g.dim();
  auto arr = nlohmann::ordered_json::array();
  for (const auto &b : g.brackets()) {
    nlohmann::ordered_json e;
    e["i"] = b.i;
    e["j"] = b.j;
    auto rhs = nlohmann::ordered_json::array();
    for (const auto &t : b.rhs)
      rhs.push_back({{"k", t.k}, {"c", t.c.str()}});
    e["rhs"] = std::move(rhs);
    arr.push_back(std::move(e));
  }
  doc["brackets"] = std::move(arr);
  return doc;
}

} // namespace nilalg
