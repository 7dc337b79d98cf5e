#ifndef SETTOP_FORMULA_HPP
#define SETTOP_FORMULA_HPP

#include <memory>
#include <string>
#include <vector>

#include "settop/hf.hpp"

namespace settop {

// Generalized positive formulas.  Variables are 1-based indices: the free
// variables of a formula of arity m are x1..xm and every quantifier binds a
// fresh higher index, so no shadowing can occur.  Class parameters are
// 1-based as well (B1..Bn).  Negation and implication do not exist in this
// AST; the parser rejects them.
enum class FormulaKind { Member, Equal, And, Or, ExistsIn, ForallIn, ForallParam };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
public:
  FormulaKind kind;
  int lhs = 0;    // Member/Equal: left variable
  int rhs = 0;    // Member/Equal: right variable; quantifiers: range variable
  int bound = 0;  // quantifiers: the bound variable index
  int param = 0;  // ForallParam: class parameter index
  FormulaPtr left;   // And/Or left, quantifier body
  FormulaPtr right;  // And/Or right

  static FormulaPtr member(int i, int j);
  static FormulaPtr equal(int i, int j);
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr exists_in(int bound, int range, FormulaPtr body);
  static FormulaPtr forall_in(int bound, int range, FormulaPtr body);
  static FormulaPtr forall_param(int bound, int param, FormulaPtr body);

  // Total node count: atomic formulas weigh 3 (operator and two variable
  // references), quantifiers 3 + body, connectives 1 + both sides.
  int size() const;
  bool is_bpf() const;  // no ForallParam anywhere
  int max_variable() const;
  int max_param() const;
  bool uses_variable(int v) const;

  bool equals(const Formula& o) const;
  std::string to_string() const;  // canonical s-expression
};

// Set and class parameters a formula is evaluated against.
struct Universe {
  std::vector<HfObject> sets;                      // a1..am
  std::vector<std::vector<HfObject>> classes;      // B1..Bn, finite extensions
};

// S-expression grammar: (in xi xj), (= xi xj), (and f g), (or f g),
// (some z xj f), (all z xj f), (allp z Bp f).  Bound variable names are
// arbitrary symbols and map onto fresh indices above the free variables.
FormulaPtr parse_formula(const std::string& text);

// Satisfaction by structural recursion.  env[i-1] holds the value of xi;
// bounded quantifiers range over the extension of their range variable
// (atoms have no elements, so they quantify over nothing); ForallParam
// ranges over the class parameter's extension.
bool eval_formula(const Formula& f, std::vector<HfObject>& env, const Universe& u);

// Convenience for a fixed assignment of the free variables.
bool eval_formula(const FormulaPtr& f, const std::vector<HfObject>& assignment,
                  const Universe& u);

// Every positive formula of total AST size <= max_size whose free variables
// lie among x1..x_free_vars.  Nested binders take consecutive indices above
// the free variables (siblings may share an index; their scopes are
// disjoint).  max_params = 0 restricts to bounded positive formulas.
std::vector<FormulaPtr> enumerate_positive_formulas(int max_size, int free_vars, int max_params);

}  // namespace settop

#endif  // SETTOP_FORMULA_HPP
