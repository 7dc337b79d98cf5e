#include "settop/ordinal.hpp"

#include <stdexcept>

namespace settop {

bool is_zero(const HfObject& candidate) {
  if (candidate.is_atom()) return true;  // atoms have no elements
  for (const auto& e : candidate.elements()) {
    if (e.is_atom()) continue;  // an atom's extension is empty
    if (candidate.subset_of(e)) return false;
  }
  // Degenerate corner: an element equal to the candidate itself cannot
  // occur in well-founded objects, so the check above is complete.
  return true;
}

Zero::Zero(HfObject value) : value_(std::move(value)) {
  if (!is_zero(value_)) throw std::invalid_argument("Zero: an element is a superset of the zero");
  if (value_.is_atom()) throw std::invalid_argument("Zero: atoms are not usable as zeros here");
}

Zero Zero::atom_pair(const std::string& x, const std::string& y) {
  return Zero(HfObject::set({HfObject::singleton(HfObject::atom(x)),
                             HfObject::singleton(HfObject::atom(y))}));
}

HfObject Zero::oplus(const HfObject& x) const {
  if (x.is_atom()) return HfObject::empty_set();
  return hf_difference(x, value_);
}

bool Zero::member0(const HfObject& a, const HfObject& b) const {
  if (b.is_atom()) return false;
  return value_.subset_of(b) && b.contains(a) && !value_.contains(a);
}

bool is_zero_transitive(const Zero& z, const HfObject& a) {
  const HfObject plus = z.oplus(a);
  for (const auto& b : plus.elements()) {
    if (!z.member0(b, a)) continue;
    if (b.is_atom()) continue;
    for (const auto& c : b.elements())
      if (z.member0(c, b) && !z.member0(c, a)) return false;
  }
  return true;
}

bool is_zero_pristine(const Zero& z, const HfObject& a) {
  const HfObject closure = a.is_atom() ? HfObject::singleton(a) : hf_union(a, HfObject::singleton(a));
  for (const auto& c : closure.elements()) {
    if (!z.member0(c, closure)) continue;
    if (c.is_atom() || !z.value().subset_of(c)) return false;
  }
  return true;
}

bool is_zero_ordinal(const Zero& z, const HfObject& a) {
  if (a.is_atom()) return false;
  if (!z.value().subset_of(a)) return false;
  if (!is_zero_transitive(z, a)) return false;
  if (!is_zero_pristine(z, a)) return false;
  // Strict linear order of the oplus part under the in0 relation; on a
  // finite carrier this is exactly a strict well-order.
  const auto members = z.oplus(a).elements();
  for (const auto& u : members) {
    if (z.member0(u, u)) return false;
    for (const auto& v : members) {
      if (u == v) continue;
      const bool uv = z.member0(u, v), vu = z.member0(v, u);
      if (uv == vu) return false;  // trichotomy
      for (const auto& w : members)
        if (z.member0(u, v) && z.member0(v, w) && !z.member0(u, w)) return false;
    }
  }
  return true;
}

HfObject successor(const Zero& z, const HfObject& a) {
  if (!is_zero_ordinal(z, a)) throw std::invalid_argument("successor: not an ordinal");
  return hf_union(a, HfObject::singleton(a));
}

std::vector<HfObject> enumerate_zero_ordinals(const Zero& z, int limit) {
  if (limit < 0 || limit > 8)
    throw std::invalid_argument("enumerate_zero_ordinals: limit out of range (0..8)");
  std::vector<HfObject> out;
  if (limit == 0) return out;
  HfObject cur = z.value();
  out.push_back(cur);
  for (int i = 1; i < limit; ++i) {
    cur = successor(z, cur);
    out.push_back(cur);
  }
  return out;
}

}  // namespace settop
