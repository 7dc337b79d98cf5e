#ifndef SETTOP_HF_HPP
#define SETTOP_HF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace settop {

// Immutable hereditarily finite set over named atoms, canonical by
// construction: children are deduplicated and sorted by the structural
// order (atoms before sets, atoms by name, sets length-lexicographically),
// so extensional equality is structural equality.
class HfObject {
public:
  HfObject() : HfObject(set({})) {}

  static HfObject atom(std::string name);
  static HfObject set(std::vector<HfObject> elements);
  static HfObject empty_set() { return set({}); }
  static HfObject singleton(HfObject x) { return set({std::move(x)}); }
  static HfObject unordered_pair(HfObject a, HfObject b) {
    return set({std::move(a), std::move(b)});
  }
  // Kuratowski pair {{a},{a,b}}; left-nested tuples are built by folding.
  static HfObject kuratowski_pair(const HfObject& a, const HfObject& b);
  static HfObject tuple(const std::vector<HfObject>& parts);

  bool is_atom() const;
  bool is_set() const;
  const std::string& atom_name() const;
  const std::vector<HfObject>& elements() const;  // empty for atoms
  std::size_t hash() const;
  int rank() const;  // atoms 0, empty set 1, sets 1 + max child rank

  bool contains(const HfObject& x) const;
  bool subset_of(const HfObject& other) const;  // atoms have empty extension

  // Decompose a Kuratowski pair {{x}} or {{x},{x,y}}; nullopt otherwise.
  std::optional<std::pair<HfObject, HfObject>> as_pair() const;

  static int compare(const HfObject& a, const HfObject& b);
  bool operator==(const HfObject& o) const { return compare(*this, o) == 0; }
  bool operator!=(const HfObject& o) const { return !(*this == o); }
  bool operator<(const HfObject& o) const { return compare(*this, o) < 0; }

  // Text format: atoms "#name", sets "{e1, e2, ...}" in canonical order;
  // proper pairs {{x},{x,y}} with x != y print as "<x, y>".
  std::string to_string() const;

private:
  struct Node;
  explicit HfObject(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct HfLess {
  bool operator()(const HfObject& a, const HfObject& b) const { return a < b; }
};
struct HfHash {
  std::size_t operator()(const HfObject& a) const { return a.hash(); }
};

// Set algebra on extensions (arguments must be sets).
HfObject hf_union(const HfObject& a, const HfObject& b);
HfObject hf_intersection(const HfObject& a, const HfObject& b);
HfObject hf_big_union(const HfObject& a);
HfObject hf_difference(const HfObject& a, const HfObject& b);

// Parse the text format; accepts "<a, b>" pair sugar with exact Kuratowski
// expansion.  Throws std::invalid_argument with a position on bad input.
HfObject parse_hf(const std::string& text);

// Cumulative hierarchy U_0 = {}, U_{r+1} = (nonempty subsets of U_r) u {0}:
// returns the elements of U_rank in canonical order.  U_3 has 4 elements,
// U_4 has 16.
std::vector<HfObject> hierarchy(int rank);

// Relative hierarchy over a zero set z with extra atoms-of-the-model b:
// level 1 is {z}, level r+1 holds z u S for every S drawn from b and the
// previous level.  With z empty and b empty this is exactly `hierarchy`.
std::vector<HfObject> relative_hierarchy(const HfObject& z,
                                         const std::vector<HfObject>& b, int rank);

}  // namespace settop

#endif  // SETTOP_HF_HPP
