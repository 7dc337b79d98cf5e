#ifndef SETTOP_COMBINATOR_HPP
#define SETTOP_COMBINATOR_HPP

#include <memory>
#include <string>
#include <vector>

#include "settop/hf.hpp"

namespace settop {

// Closed terms over the primitive operation algebra: lifted constants, the
// hypothesis operations (big union, unordered pair, Cartesian product), the
// diagonal and membership filters, the forall selector, the two triple
// permutations, and the derived operations (domain, inverse, the shifted
// product, binary intersection and union).  Terms form DAGs because the
// compiler shares argument subterms; evaluation memoises on node identity.
enum class TermKind {
  Lift,
  BigUnion,
  Pair,
  Product,
  DeltaCap,
  ECap,
  ForallSelector,
  Perm312,  // <x,y,z> -> <y,x,z>
  Perm231,  // <x,y,z> -> <z,x,y>
  Domain,
  Inverse,
  Product2,  // a x2 b = {<a0,b1,b2> : a0 in a, <b1,b2> in b}
  Intersect,
  UnionOf,
};

struct TermNode;
using TermPtr = std::shared_ptr<const TermNode>;

struct TermNode {
  TermKind kind;
  HfObject value;  // Lift only
  TermPtr first;
  TermPtr second;
};

TermPtr lift(HfObject v);
TermPtr big_union(TermPtr t);
TermPtr pair_of(TermPtr t, TermPtr u);
TermPtr product(TermPtr t, TermPtr u);
TermPtr delta_cap(TermPtr t);
TermPtr e_cap(TermPtr t);
TermPtr forall_selector(TermPtr a, TermPtr b);
TermPtr perm312(TermPtr t);
TermPtr perm231(TermPtr t);
TermPtr domain(TermPtr t);
TermPtr inverse(TermPtr t);
TermPtr product2(TermPtr t, TermPtr u);
TermPtr intersect(TermPtr t, TermPtr u);
TermPtr union_of(TermPtr t, TermPtr u);

// Bottom-up evaluation over canonical hereditarily finite sets.  Relation
// operations silently skip members that do not decode as Kuratowski pairs
// (they contribute nothing, mirroring the intersection with the universal
// relation).
HfObject eval_term(const TermPtr& t);

// Number of distinct nodes in the DAG.
std::size_t term_dag_size(const TermPtr& t);

std::string term_to_string(const TermPtr& t);

}  // namespace settop

#endif  // SETTOP_COMBINATOR_HPP
