#ifndef SETTOP_COMPILE_HPP
#define SETTOP_COMPILE_HPP

#include <vector>

#include "settop/combinator.hpp"
#include "settop/formula.hpp"

namespace settop {

// Compilation template for a positive formula of arity m: instantiating it
// with values for a1..am and the class parameters yields a closed term
// computing the graph
//   A = { <x1,...,xm> in a1 x ... x am  |  phi(x1,...,xm, B1,...,Bn) }
// with left-nested Kuratowski tuples.  Compilation itself is total on
// positive ASTs; instantiation rejects arity mismatches and empty class
// parameters.
struct CompiledTemplate {
  FormulaPtr formula;
  int arity;

  TermPtr instantiate(const std::vector<HfObject>& args,
                      const std::vector<std::vector<HfObject>>& classes) const;
  TermPtr instantiate(const std::vector<HfObject>& args) const {
    return instantiate(args, {});
  }
};

// Validates that the free variables lie among x1..xm.
CompiledTemplate compile_formula(const FormulaPtr& formula, int arity);

// Independent satisfaction-based route to the same graph; the oracle the
// compiler is checked against.
HfObject formula_graph_brute_force(const FormulaPtr& formula, int arity,
                                   const std::vector<HfObject>& args,
                                   const std::vector<std::vector<HfObject>>& classes);

// { x in c | phi(x, b2,...,bm, B1,...,Bn) }, computed both by brute force
// and by compile + evaluate + iterated domain; throws std::runtime_error if
// the two routes disagree.
HfObject specification_set(const FormulaPtr& formula, const HfObject& c,
                           const std::vector<HfObject>& sets,
                           const std::vector<std::vector<HfObject>>& classes);

// Both sides of the distributive law
//   U_i  n_{j in J_i} j   =   n_{f in prod J_i}  U_i f(i)
// evaluated by full enumeration of the choice functions; J_i must be
// nonempty.  Returns whether the two sides are equal.
bool check_distributivity(const std::vector<std::vector<HfObject>>& j_families);

}  // namespace settop

#endif  // SETTOP_COMPILE_HPP
