#include <doctest.h>

#include "settop/formula.hpp"

using namespace settop;

TEST_CASE("parsing the worked examples") {
  const FormulaPtr f = parse_formula("(some z x1 (in z x2))");
  CHECK(f->kind == FormulaKind::ExistsIn);
  CHECK(f->rhs == 1);
  CHECK(f->bound == 3);  // above both free variables
  CHECK(f->left->kind == FormulaKind::Member);
  CHECK(f->is_bpf());

  const FormulaPtr g = parse_formula("(allp z B1 (in z x1))");
  CHECK(g->kind == FormulaKind::ForallParam);
  CHECK(!g->is_bpf());

  bool rejected = false;
  try {
    parse_formula("(not (in x1 x1))");
  } catch (const std::invalid_argument& e) {
    rejected = std::string(e.what()).find("unknown head: not") != std::string::npos;
  }
  CHECK(rejected);
  CHECK_THROWS_AS(parse_formula("(in x1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("(in x1 x2) extra"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("(=> (in x1 x1) (in x1 x1))"), std::invalid_argument);
}

TEST_CASE("bound variables never collide with later free variables") {
  const FormulaPtr f = parse_formula("(some z x1 (and (in z x1) (in x2 x1)))");
  CHECK(f->bound == 3);
  CHECK(f->left->left->lhs == 3);
  CHECK(f->left->right->lhs == 2);
}

TEST_CASE("printing round-trips through the parser") {
  for (const std::string text :
       {"(in x1 x2)", "(= x1 x1)", "(and (in x1 x2) (or (= x1 x2) (in x2 x1)))",
        "(some z x1 (all w z (in w x2)))", "(allp u B2 (some v x1 (in u v)))"}) {
    const FormulaPtr f = parse_formula(text);
    const FormulaPtr again = parse_formula(f->to_string());
    CHECK(again->equals(*f));
    CHECK(again->to_string() == f->to_string());
  }
}

TEST_CASE("ast size counts operator and variable nodes") {
  CHECK(parse_formula("(in x1 x2)")->size() == 3);
  CHECK(parse_formula("(and (in x1 x2) (= x1 x1))")->size() == 7);
  CHECK(parse_formula("(some z x1 (in z x2))")->size() == 6);
}

TEST_CASE("evaluating the worked examples") {
  Universe u;
  const HfObject empty = HfObject::empty_set();
  const HfObject one = HfObject::singleton(empty);
  const HfObject two = HfObject::set({empty, one});

  CHECK(eval_formula(parse_formula("(= x1 x1)"), {two}, u));
  CHECK(eval_formula(parse_formula("(in x1 x2)"), {empty, one}, u));
  CHECK(!eval_formula(parse_formula("(all z x1 (in z x2))"), {two, one}, u));
  CHECK(eval_formula(parse_formula("(all z x1 (in z x2))"), {one, one}, u));
  // quantifying over an atom ranges over nothing
  CHECK(!eval_formula(parse_formula("(some z x1 (= z z))"), {HfObject::atom("a")}, u));
  CHECK(eval_formula(parse_formula("(all z x1 (in z z))"), {HfObject::atom("a")}, u));
}

TEST_CASE("class parameters bound the last quantifier form") {
  Universe u;
  const HfObject empty = HfObject::empty_set();
  const HfObject one = HfObject::singleton(empty);
  u.classes.push_back({empty});
  // every member of B1 is an element of x1
  const FormulaPtr f = parse_formula("(allp z B1 (in z x1))");
  CHECK(eval_formula(f, {one}, u));
  CHECK(!eval_formula(f, {empty}, u));
  Universe missing;
  CHECK_THROWS_AS(eval_formula(f, {one}, missing), std::invalid_argument);
}

TEST_CASE("formula enumeration counts stay pinned") {
  CHECK(enumerate_positive_formulas(7, 2, 1).size() == 226);
  CHECK(enumerate_positive_formulas(7, 1, 1).size() == 34);
  CHECK(enumerate_positive_formulas(3, 1, 0).size() == 2);
  for (const auto& f : enumerate_positive_formulas(7, 2, 1)) {
    CHECK(f->size() <= 7);
    // printing reaches a parse fixpoint (bound indices may be renumbered on
    // the first pass when not every free variable occurs)
    const FormulaPtr reparsed = parse_formula(f->to_string());
    CHECK(parse_formula(reparsed->to_string())->equals(*reparsed));
  }
}
