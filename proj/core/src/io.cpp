#include "settop/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace settop {

using nlohmann::ordered_json;

namespace {

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("malformed json: ") + e.what());
  }
}

ordered_json space_to_json(const PointTopology& t) {
  ordered_json j;
  j["points"] = t.points();
  ordered_json closed = ordered_json::array();
  for (const auto& c : t.closed()) closed.push_back(c.indices());
  j["closed"] = std::move(closed);
  return j;
}

PointTopology space_from_json(const ordered_json& j) {
  if (!j.contains("points") || !j.contains("closed"))
    throw std::invalid_argument("space file: missing points/closed");
  const int n = j.at("points").get<int>();
  std::vector<PointSet> family;
  for (const auto& arr : j.at("closed"))
    family.push_back(PointSet::from_indices(n, arr.get<std::vector<int>>()));
  if (!is_topology(n, family))
    throw std::invalid_argument("space file: family is not a topology");
  return PointTopology(n, std::move(family));
}

}  // namespace

PointTopology load_space(const std::string& json_text) {
  return space_from_json(parse_json(json_text));
}

std::string save_space(const PointTopology& t) { return space_to_json(t).dump(2) + "\n"; }

std::string save_hyperspace(const HyperSpace& h) {
  ordered_json j;
  j["base"] = space_to_json(h.base);
  ordered_json pts = ordered_json::array();
  for (const auto& p : h.points) pts.push_back(p.indices());
  j["points"] = std::move(pts);
  j["topology"] = space_to_json(h.topology);
  return j.dump(2) + "\n";
}

std::vector<int> load_map(const std::string& json_text, int* from, int* to) {
  const ordered_json j = parse_json(json_text);
  if (!j.contains("from") || !j.contains("to") || !j.contains("table"))
    throw std::invalid_argument("map file: missing from/to/table");
  const int n = j.at("from").get<int>();
  const int m = j.at("to").get<int>();
  const auto table = j.at("table").get<std::vector<int>>();
  if (static_cast<int>(table.size()) != n)
    throw std::invalid_argument("map file: table length does not match the domain");
  for (int v : table)
    if (v < 0 || v >= m) throw std::invalid_argument("map file: value outside the codomain");
  if (from) *from = n;
  if (to) *to = m;
  return table;
}

MembershipStructure load_structure(const std::string& json_text) {
  const ordered_json j = parse_json(json_text);
  if (!j.contains("nodes") || !j.contains("atom") || !j.contains("edges"))
    throw std::invalid_argument("structure file: missing nodes/atom/edges");
  const int n = j.at("nodes").get<int>();
  const auto atom = j.at("atom").get<std::vector<bool>>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    const auto pair = e.get<std::vector<int>>();
    if (pair.size() != 2) throw std::invalid_argument("structure file: edge is not a pair");
    edges.emplace_back(pair[0], pair[1]);
  }
  return MembershipStructure::create(n, atom, edges);
}

std::string save_structure(const MembershipStructure& m) {
  ordered_json j;
  j["nodes"] = m.nodes;
  j["atom"] = m.atom;
  ordered_json edges = ordered_json::array();
  for (int i = 0; i < m.nodes; ++i)
    for (int e : m.elements_of[static_cast<std::size_t>(i)])
      edges.push_back(std::vector<int>{i, e});
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

namespace {

std::string subset_key(std::uint32_t mask, int carrier) {
  std::string key = "[";
  bool first = true;
  for (int i = 0; i < carrier; ++i) {
    if (!((mask >> i) & 1u)) continue;
    if (!first) key += ",";
    key += std::to_string(i);
    first = false;
  }
  return key + "]";
}

std::uint32_t parse_subset_key(const std::string& key, int carrier) {
  if (key.size() < 2 || key.front() != '[' || key.back() != ']')
    throw std::invalid_argument("choice file: bad subset key " + key);
  std::uint32_t mask = 0;
  std::string inner = key.substr(1, key.size() - 2);
  std::stringstream ss(inner);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    const int idx = std::stoi(part);
    if (idx < 0 || idx >= carrier)
      throw std::invalid_argument("choice file: index out of range in " + key);
    mask |= 1u << idx;
  }
  return mask;
}

}  // namespace

ChoiceFunction load_choice(const std::string& json_text) {
  const ordered_json j = parse_json(json_text);
  if (!j.contains("carrier") || !j.contains("choice"))
    throw std::invalid_argument("choice file: missing carrier/choice");
  const int carrier = j.at("carrier").get<int>();
  std::map<std::uint32_t, int> pick;
  for (const auto& [key, value] : j.at("choice").items())
    pick[parse_subset_key(key, carrier)] = value.get<int>();
  return ChoiceFunction::create(carrier, std::move(pick));
}

std::string save_choice(const ChoiceFunction& f) {
  ordered_json j;
  j["carrier"] = f.carrier;
  ordered_json choice = ordered_json::object();
  for (const auto& [mask, value] : f.pick) choice[subset_key(mask, f.carrier)] = value;
  j["choice"] = std::move(choice);
  return j.dump(2) + "\n";
}

std::vector<FormulaPtr> load_formulas(const std::string& text) {
  std::vector<FormulaPtr> out;
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    const auto comment = line.find(';');
    if (comment != std::string::npos) line = line.substr(0, comment);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    try {
      out.push_back(parse_formula(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

}  // namespace settop
