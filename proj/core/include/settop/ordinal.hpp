#ifndef SETTOP_ORDINAL_HPP
#define SETTOP_ORDINAL_HPP

#include <vector>

#include "settop/hf.hpp"

namespace settop {

// A zero: an object none of whose elements is a superset of it; the
// empty-set surrogate the ordinal machinery is parameterised by.
class Zero {
public:
  explicit Zero(HfObject value);

  const HfObject& value() const { return value_; }

  // x minus the zero's elements.
  HfObject oplus(const HfObject& x) const;
  // a is a member of b's oplus part and b extends the zero.
  bool member0(const HfObject& a, const HfObject& b) const;

  static Zero empty() { return Zero(HfObject::empty_set()); }
  // The two-atom zero {{#x},{#y}}.
  static Zero atom_pair(const std::string& x = "x", const std::string& y = "y");

private:
  HfObject value_;
};

// Literal check of the zero condition on a candidate object.
bool is_zero(const HfObject& candidate);

// 0-transitivity: c in0 a for all c in0 b in0 a.
bool is_zero_transitive(const Zero& z, const HfObject& a);

// 0-pristineness of a 0-transitive candidate: every c in0 (a u {a}) extends
// the zero and is not an atom.
bool is_zero_pristine(const Zero& z, const HfObject& a);

// 0-transitive, 0-pristine, and oplus strictly linearly ordered by the in0
// relation (linear suffices for well-order at finite scale).
bool is_zero_ordinal(const Zero& z, const HfObject& a);

// a u {a}; rejects non-ordinal input.
HfObject successor(const Zero& z, const HfObject& a);

// First `limit` 0-ordinals by iterated successor from the zero itself.
std::vector<HfObject> enumerate_zero_ordinals(const Zero& z, int limit);

}  // namespace settop

#endif  // SETTOP_ORDINAL_HPP
