#include <doctest.h>

#include "settop/compile.hpp"
#include "settop/rng.hpp"

using namespace settop;

namespace {

const HfObject kEmpty = HfObject::empty_set();
const HfObject kOne = HfObject::singleton(kEmpty);
const HfObject kTwo = HfObject::set({kEmpty, kOne});

FormulaPtr random_positive(Rng& rng, int budget, int visible, int max_params) {
  if (budget < 6 || rng.below(3) == 0) {
    const int i = 1 + static_cast<int>(rng.below(visible));
    const int j = 1 + static_cast<int>(rng.below(visible));
    return rng.coin() ? Formula::member(i, j) : Formula::equal(i, j);
  }
  if (budget >= 7 && rng.coin()) {
    FormulaPtr l = random_positive(rng, budget - 4, visible, max_params);
    FormulaPtr r = random_positive(rng, budget - 1 - l->size(), visible, max_params);
    return rng.coin() ? Formula::conj(l, r) : Formula::disj(l, r);
  }
  FormulaPtr body = random_positive(rng, budget - 3, visible + 1, max_params);
  const int options = 2 * visible + (max_params > 0 ? 1 : 0);
  const int pick = static_cast<int>(rng.below(options));
  if (pick < visible) return Formula::exists_in(visible + 1, pick + 1, body);
  if (pick < 2 * visible) return Formula::forall_in(visible + 1, pick - visible + 1, body);
  return Formula::forall_param(visible + 1, 1, body);
}

}  // namespace

TEST_CASE("the compiled terms of the base table") {
  // x1 = x1 compiles to the lifted argument itself
  const TermPtr reflexive = compile_formula(parse_formula("(= x1 x1)"), 1).instantiate({kTwo});
  CHECK(reflexive->kind == TermKind::Lift);
  CHECK(eval_term(reflexive) == kTwo);

  // x1 in x2 at arity two is the membership filter over the product
  const TermPtr member =
      compile_formula(parse_formula("(in x1 x2)"), 2).instantiate({kOne, kTwo});
  CHECK(member->kind == TermKind::ECap);
  CHECK(member->first->kind == TermKind::Product);
  CHECK(eval_term(member) ==
        HfObject::singleton(HfObject::kuratowski_pair(kEmpty, kOne)));
}

TEST_CASE("self-membership compiles through the diagonal, not the bare domain") {
  const FormulaPtr f = parse_formula("(in x1 x1)");
  const TermPtr t = compile_formula(f, 1).instantiate({kTwo});
  CHECK(t->kind == TermKind::Domain);
  CHECK(t->first->kind == TermKind::DeltaCap);
  CHECK(t->first->first->kind == TermKind::ECap);
  CHECK(eval_term(t) == kEmpty);
  CHECK(formula_graph_brute_force(f, 1, {kTwo}, {}) == kEmpty);

  // the bare-domain variant demonstrably computes a different class: on
  // {0,{0}} it yields {0}, the members that belong to some member
  const TermPtr bare = domain(e_cap(product(lift(kTwo), lift(kTwo))));
  CHECK(eval_term(bare) == HfObject::singleton(kEmpty));
  CHECK(!(eval_term(bare) == eval_term(t)));
}

TEST_CASE("quantifier compilation matches satisfaction on the worked cases") {
  Universe u;
  // exists: some member of x1 lies in x2
  const FormulaPtr ex = parse_formula("(some z x1 (in z x2))");
  for (const auto& a1 : hierarchy(3))
    for (const auto& a2 : hierarchy(3)) {
      const HfObject compiled = eval_term(compile_formula(ex, 2).instantiate({a1, a2}));
      CHECK(compiled == formula_graph_brute_force(ex, 2, {a1, a2}, {}));
    }
  // forall with an elementless witness set in range: the membership filter
  // still pins the witness
  const FormulaPtr all = parse_formula("(all z x1 (in z z))");
  const HfObject a1 = kTwo;  // contains the empty set and {0}
  CHECK(eval_term(compile_formula(all, 1).instantiate({a1})) ==
        formula_graph_brute_force(all, 1, {a1}, {}));
  CHECK(formula_graph_brute_force(all, 1, {a1}, {}) == HfObject::singleton(kEmpty));
}

TEST_CASE("class parameters compile to finite intersections") {
  const FormulaPtr f = parse_formula("(allp z B1 (in z x1))");
  const std::vector<std::vector<HfObject>> classes = {{kEmpty}};
  const HfObject c = HfObject::set({kEmpty, kOne, HfObject::singleton(kOne)});
  const HfObject got = specification_set(f, c, {}, classes);
  // { x in c : 0 in x } = { {0} }
  CHECK(got == HfObject::singleton(kOne));

  CHECK_THROWS_AS(compile_formula(f, 1).instantiate({kTwo}, {{}}), std::invalid_argument);
  CHECK_THROWS_AS(compile_formula(f, 1).instantiate({kTwo}, {}), std::invalid_argument);
}

TEST_CASE("arity validation") {
  CHECK_THROWS_AS(compile_formula(parse_formula("(in x1 x3)"), 2), std::invalid_argument);
  CHECK_THROWS_AS(compile_formula(parse_formula("(in x1 x2)"), 0), std::invalid_argument);
  // bound variables above the arity are fine
  CHECK_NOTHROW(compile_formula(parse_formula("(some z x1 (in z x1))"), 2));
}

TEST_CASE("specification set on the worked examples") {
  // { x in c : x in b2 }
  const HfObject c = kTwo;
  CHECK(specification_set(parse_formula("(in x1 x2)"), c, {kOne}, {}) ==
        HfObject::singleton(kEmpty));
  CHECK(specification_set(parse_formula("(= x1 x1)"), c, {}, {}) == c);
  // { x in c : every member of B1 is a member of x }
  const HfObject big = HfObject::set({kEmpty, kOne, HfObject::singleton(kOne)});
  CHECK(specification_set(parse_formula("(allp z B1 (in z x1))"), big, {}, {{kEmpty}}) ==
        HfObject::singleton(kOne));
}

TEST_CASE("oracle equivalence on deeper random formulas") {
  Rng rng(4242);
  const std::vector<HfObject> u3 = hierarchy(3);
  std::size_t max_dag = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const int m = 1 + static_cast<int>(rng.below(3));
    const FormulaPtr f = random_positive(rng, 11, m, 1);
    std::vector<HfObject> args;
    for (int i = 0; i < m; ++i) args.push_back(u3[rng.below(u3.size())]);
    std::vector<std::vector<HfObject>> classes;
    classes.push_back({u3[rng.below(u3.size())], u3[rng.below(u3.size())]});
    const TermPtr term = compile_formula(f, m).instantiate(args, classes);
    max_dag = std::max(max_dag, term_dag_size(term));
    CHECK(eval_term(term) == formula_graph_brute_force(f, m, args, classes));
  }
  // term growth stays within the pinned envelope (distinct DAG nodes)
  CHECK(max_dag <= 700);
}

TEST_CASE("positive formulas are monotone in the argument sets") {
  Rng rng(77);
  const std::vector<HfObject> u3 = hierarchy(3);
  for (int trial = 0; trial < 400; ++trial) {
    const int m = 1 + static_cast<int>(rng.below(2));
    const FormulaPtr f = random_positive(rng, 9, m, 1);
    std::vector<std::vector<HfObject>> classes = {{u3[rng.below(u3.size())]}};
    // choose nested argument sets: small[i] is a subset of large[i]
    std::vector<HfObject> small, large;
    for (int i = 0; i < m; ++i) {
      const HfObject big = u3[rng.below(u3.size())];
      std::vector<HfObject> kept;
      for (const auto& e : big.elements())
        if (rng.coin()) kept.push_back(e);
      small.push_back(HfObject::set(std::move(kept)));
      large.push_back(big);
    }
    const HfObject graph_small = formula_graph_brute_force(f, m, small, classes);
    const HfObject graph_large = formula_graph_brute_force(f, m, large, classes);
    // with fixed parameters, the small graph is the restriction of the
    // large one to the small product
    const HfObject product_small =
        formula_graph_brute_force(parse_formula("(= x1 x1)"), m, small, classes);
    CHECK(graph_small == hf_intersection(graph_large, product_small));

    // enlarging a class parameter can only shrink the graph
    std::vector<std::vector<HfObject>> wider = classes;
    wider[0].push_back(u3[rng.below(u3.size())]);
    const HfObject graph_wider = formula_graph_brute_force(f, m, large, wider);
    CHECK(graph_wider.subset_of(graph_large));
  }
}

TEST_CASE("the distributive law on the worked examples") {
  CHECK(check_distributivity({{kTwo}}));
  CHECK(check_distributivity({{kOne}, {kOne, kTwo}}));
  CHECK_THROWS_AS(check_distributivity({{kOne}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(check_distributivity({}), std::invalid_argument);
}

TEST_CASE("specification faults surface as exceptions, not wrong values") {
  // a healthy instance returns; the internal agreement is exercised via the
  // acceptance run as well
  CHECK_NOTHROW(specification_set(parse_formula("(some z x1 (= z x2))"), kTwo, {kEmpty}, {}));
}
