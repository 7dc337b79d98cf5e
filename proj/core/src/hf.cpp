#include "settop/hf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace settop {

struct HfObject::Node {
  bool atom;
  std::string name;                 // atoms only
  std::vector<HfObject> elements;   // sets only, canonical
  std::size_t hash;
  int rank;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

HfObject HfObject::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("HfObject: empty atom name");
  auto n = std::make_shared<Node>();
  n->atom = true;
  n->name = std::move(name);
  n->hash = mix(0x61, std::hash<std::string>{}(n->name));
  n->rank = 0;
  return HfObject(std::move(n));
}

HfObject HfObject::set(std::vector<HfObject> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  auto n = std::make_shared<Node>();
  n->atom = false;
  n->rank = 1;
  std::size_t h = 0x7b;
  for (const auto& e : elements) {
    h = mix(h, e.hash());
    n->rank = std::max(n->rank, e.rank() + 1);
  }
  n->hash = h;
  n->elements = std::move(elements);
  return HfObject(std::move(n));
}

HfObject HfObject::kuratowski_pair(const HfObject& a, const HfObject& b) {
  return set({singleton(a), unordered_pair(a, b)});
}

HfObject HfObject::tuple(const std::vector<HfObject>& parts) {
  if (parts.empty()) throw std::invalid_argument("HfObject: empty tuple");
  HfObject acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = kuratowski_pair(acc, parts[i]);
  return acc;
}

bool HfObject::is_atom() const { return node_->atom; }
bool HfObject::is_set() const { return !node_->atom; }

const std::string& HfObject::atom_name() const {
  if (!node_->atom) throw std::logic_error("HfObject: not an atom");
  return node_->name;
}

const std::vector<HfObject>& HfObject::elements() const {
  static const std::vector<HfObject> none;
  return node_->atom ? none : node_->elements;
}

std::size_t HfObject::hash() const { return node_->hash; }
int HfObject::rank() const { return node_->rank; }

bool HfObject::contains(const HfObject& x) const {
  for (const auto& e : elements())
    if (e == x) return true;
  return false;
}

bool HfObject::subset_of(const HfObject& other) const {
  for (const auto& e : elements())
    if (!other.contains(e)) return false;
  return true;
}

std::optional<std::pair<HfObject, HfObject>> HfObject::as_pair() const {
  if (is_atom()) return std::nullopt;
  const auto& es = elements();
  if (es.size() == 1) {
    // {{x}} is the degenerate pair <x, x>
    if (es[0].is_set() && es[0].elements().size() == 1)
      return std::make_pair(es[0].elements()[0], es[0].elements()[0]);
    return std::nullopt;
  }
  if (es.size() == 2) {
    // canonical order puts the singleton {x} before the doubleton {x,y}
    const HfObject& s = es[0];
    const HfObject& d = es[1];
    if (s.is_set() && d.is_set() && s.elements().size() == 1 && d.elements().size() == 2) {
      const HfObject& x = s.elements()[0];
      if (d.contains(x)) {
        const HfObject& y = d.elements()[0] == x ? d.elements()[1] : d.elements()[0];
        return std::make_pair(x, y);
      }
    }
    return std::nullopt;
  }
  return std::nullopt;
}

int HfObject::compare(const HfObject& a, const HfObject& b) {
  if (a.node_ == b.node_) return 0;
  if (a.is_atom() != b.is_atom()) return a.is_atom() ? -1 : 1;
  if (a.is_atom()) {
    const int c = a.node_->name.compare(b.node_->name);
    return c < 0 ? -1 : c > 0 ? 1 : 0;
  }
  const auto& ea = a.node_->elements;
  const auto& eb = b.node_->elements;
  if (ea.size() != eb.size()) return ea.size() < eb.size() ? -1 : 1;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    const int c = compare(ea[i], eb[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string HfObject::to_string() const {
  if (is_atom()) return "#" + node_->name;
  if (auto p = as_pair(); p && !(p->first == p->second))
    return "<" + p->first.to_string() + ", " + p->second.to_string() + ">";
  std::string out = "{";
  bool first = true;
  for (const auto& e : elements()) {
    if (!first) out += ", ";
    out += e.to_string();
    first = false;
  }
  return out + "}";
}

HfObject hf_union(const HfObject& a, const HfObject& b) {
  if (a.is_atom() || b.is_atom()) throw std::invalid_argument("hf_union: atom argument");
  std::vector<HfObject> out = a.elements();
  for (const auto& e : b.elements()) out.push_back(e);
  return HfObject::set(std::move(out));
}

HfObject hf_intersection(const HfObject& a, const HfObject& b) {
  if (a.is_atom() || b.is_atom()) throw std::invalid_argument("hf_intersection: atom argument");
  std::vector<HfObject> out;
  for (const auto& e : a.elements())
    if (b.contains(e)) out.push_back(e);
  return HfObject::set(std::move(out));
}

HfObject hf_big_union(const HfObject& a) {
  if (a.is_atom()) throw std::invalid_argument("hf_big_union: atom argument");
  std::vector<HfObject> out;
  for (const auto& e : a.elements())
    for (const auto& x : e.elements()) out.push_back(x);  // atoms contribute nothing
  return HfObject::set(std::move(out));
}

HfObject hf_difference(const HfObject& a, const HfObject& b) {
  if (a.is_atom() || b.is_atom()) throw std::invalid_argument("hf_difference: atom argument");
  std::vector<HfObject> out;
  for (const auto& e : a.elements())
    if (!b.contains(e)) out.push_back(e);
  return HfObject::set(std::move(out));
}

namespace {

struct HfParser {
  const std::string& text;
  std::size_t pos = 0;

  explicit HfParser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("hf parse error at " + std::to_string(pos) + ": " + why);
  }
  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == '\r'))
      ++pos;
  }
  char peek() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    return text[pos];
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  HfObject parse_value() {
    const char c = peek();
    if (c == '#') {
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '_' || text[pos] == '-'))
        ++pos;
      if (pos == start) fail("empty atom name");
      return HfObject::atom(text.substr(start, pos - start));
    }
    if (c == '{') {
      ++pos;
      std::vector<HfObject> elems;
      if (peek() == '}') {
        ++pos;
        return HfObject::set({});
      }
      while (true) {
        elems.push_back(parse_value());
        const char d = peek();
        if (d == ',') {
          ++pos;
          continue;
        }
        if (d == '}') {
          ++pos;
          return HfObject::set(std::move(elems));
        }
        fail("expected ',' or '}'");
      }
    }
    if (c == '<') {
      ++pos;
      HfObject a = parse_value();
      expect(',');
      HfObject b = parse_value();
      expect('>');
      return HfObject::kuratowski_pair(a, b);
    }
    fail("expected '#', '{' or '<'");
  }

  HfObject parse_all() {
    HfObject v = parse_value();
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return v;
  }
};

}  // namespace

HfObject parse_hf(const std::string& text) { return HfParser(text).parse_all(); }

std::vector<HfObject> hierarchy(int rank) {
  return relative_hierarchy(HfObject::empty_set(), {}, rank);
}

std::vector<HfObject> relative_hierarchy(const HfObject& z, const std::vector<HfObject>& b,
                                         int rank) {
  if (z.is_atom()) throw std::invalid_argument("relative_hierarchy: zero must be a set");
  if (rank < 0 || rank > 5)
    throw std::invalid_argument("relative_hierarchy: rank out of range (0..5)");
  std::set<HfObject, HfLess> level;  // accumulates, levels are nested
  for (int r = 1; r <= rank; ++r) {
    std::vector<HfObject> ground(b.begin(), b.end());
    for (const auto& x : level) ground.push_back(x);
    std::sort(ground.begin(), ground.end());
    ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
    if (ground.size() > 20)
      throw std::runtime_error("relative_hierarchy: level too large to enumerate subsets");
    const std::size_t g = ground.size();
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << g); ++m) {
      std::vector<HfObject> elems = z.elements();
      for (std::size_t i = 0; i < g; ++i)
        if ((m >> i) & 1u) elems.push_back(ground[i]);
      level.insert(HfObject::set(std::move(elems)));
    }
  }
  return std::vector<HfObject>(level.begin(), level.end());
}

}  // namespace settop
