#include "settop/compile.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace settop {

namespace {

// Free variables with respect to an enclosing set of bound indices.
void free_variables(const Formula& f, std::set<int>& bound, std::set<int>& out) {
  switch (f.kind) {
    case FormulaKind::Member:
    case FormulaKind::Equal:
      if (!bound.count(f.lhs)) out.insert(f.lhs);
      if (!bound.count(f.rhs)) out.insert(f.rhs);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
      free_variables(*f.left, bound, out);
      free_variables(*f.right, bound, out);
      return;
    case FormulaKind::ExistsIn:
    case FormulaKind::ForallIn:
      if (!bound.count(f.rhs)) out.insert(f.rhs);
      bound.insert(f.bound);
      free_variables(*f.left, bound, out);
      bound.erase(f.bound);
      return;
    case FormulaKind::ForallParam:
      bound.insert(f.bound);
      free_variables(*f.left, bound, out);
      bound.erase(f.bound);
      return;
  }
}

// Rename free occurrences of `from` to `to`.  Quantifiers binding `from`
// cannot occur below a point where `from` is free, and capture is prevented
// by the avoid() pass that precedes every substitution.
FormulaPtr subst(const FormulaPtr& f, int from, int to) {
  auto var = [&](int v) { return v == from ? to : v; };
  switch (f->kind) {
    case FormulaKind::Member:
      return Formula::member(var(f->lhs), var(f->rhs));
    case FormulaKind::Equal:
      return Formula::equal(var(f->lhs), var(f->rhs));
    case FormulaKind::And:
      return Formula::conj(subst(f->left, from, to), subst(f->right, from, to));
    case FormulaKind::Or:
      return Formula::disj(subst(f->left, from, to), subst(f->right, from, to));
    case FormulaKind::ExistsIn:
      return Formula::exists_in(f->bound, var(f->rhs), subst(f->left, from, to));
    case FormulaKind::ForallIn:
      return Formula::forall_in(f->bound, var(f->rhs), subst(f->left, from, to));
    case FormulaKind::ForallParam:
      return Formula::forall_param(f->bound, f->param, subst(f->left, from, to));
  }
  return nullptr;
}

// Alpha-rename any quantifier binding `idx` so that a later substitution
// targeting `idx` cannot capture.
FormulaPtr avoid(const FormulaPtr& f, int idx, int& fresh) {
  switch (f->kind) {
    case FormulaKind::Member:
    case FormulaKind::Equal:
      return f;
    case FormulaKind::And:
      return Formula::conj(avoid(f->left, idx, fresh), avoid(f->right, idx, fresh));
    case FormulaKind::Or:
      return Formula::disj(avoid(f->left, idx, fresh), avoid(f->right, idx, fresh));
    case FormulaKind::ExistsIn:
    case FormulaKind::ForallIn: {
      int b = f->bound;
      FormulaPtr body = f->left;
      if (b == idx) {
        const int nb = fresh++;
        body = subst(body, b, nb);
        b = nb;
      }
      body = avoid(body, idx, fresh);
      return f->kind == FormulaKind::ExistsIn ? Formula::exists_in(b, f->rhs, body)
                                              : Formula::forall_in(b, f->rhs, body);
    }
    case FormulaKind::ForallParam: {
      int b = f->bound;
      FormulaPtr body = f->left;
      if (b == idx) {
        const int nb = fresh++;
        body = subst(body, b, nb);
        b = nb;
      }
      body = avoid(body, idx, fresh);
      return Formula::forall_param(b, f->param, body);
    }
  }
  return nullptr;
}

class Compiler {
public:
  Compiler(const std::vector<std::vector<HfObject>>& classes, int fresh_base)
      : classes_(classes), fresh_(fresh_base) {}

  // slots[i] computes the value of the i+1-th argument set.
  TermPtr graph(const FormulaPtr& f, std::vector<TermPtr> slots) {
    const int m = static_cast<int>(slots.size());
    switch (f->kind) {
      case FormulaKind::And:
        return intersect(graph(f->left, slots), graph(f->right, slots));
      case FormulaKind::Or:
        return union_of(graph(f->left, slots), graph(f->right, slots));
      case FormulaKind::ExistsIn: {
        const int i = f->rhs;
        require(i >= 1 && i <= m, "quantifier range is not in scope");
        FormulaPtr body = avoid(f->left, m + 1, fresh_);
        body = subst(body, f->bound, m + 1);
        FormulaPtr widened = Formula::conj(body, Formula::member(m + 1, i));
        std::vector<TermPtr> next = slots;
        next.push_back(big_union(slots[i - 1]));
        return domain(graph(widened, std::move(next)));
      }
      case FormulaKind::ForallIn: {
        const int i = f->rhs;
        require(i >= 1 && i <= m, "quantifier range is not in scope");
        FormulaPtr body = avoid(f->left, m + 1, fresh_);
        body = avoid(body, m + 2, fresh_);
        body = subst(body, f->bound, m + 2);
        FormulaPtr rho = Formula::conj(body, Formula::equal(m + 1, i));
        std::vector<TermPtr> next = slots;
        next.push_back(slots[i - 1]);
        next.push_back(big_union(slots[i - 1]));
        TermPtr inner = graph(rho, std::move(next));
        TermPtr selector_base = product(product_of(slots), slots[i - 1]);
        TermPtr selected = forall_selector(inner, selector_base);
        // The equality of the witness coordinate with the range coordinate
        // is only visible inside the selector when the witness has
        // elements; an elementless witness passes vacuously.  Intersecting
        // with the equality graph pins the witness in every case.
        std::vector<TermPtr> eq_slots = slots;
        eq_slots.push_back(slots[i - 1]);
        TermPtr eq_graph = graph(Formula::equal(m + 1, i), std::move(eq_slots));
        return domain(intersect(selected, eq_graph));
      }
      case FormulaKind::ForallParam: {
        const int p = f->param;
        require(p >= 1 && static_cast<std::size_t>(p) <= classes_.size(),
                "class parameter is not bound");
        const auto& extension = classes_[static_cast<std::size_t>(p) - 1];
        require(!extension.empty(), "class parameter must be nonempty");
        FormulaPtr body = avoid(f->left, m + 1, fresh_);
        body = subst(body, f->bound, m + 1);
        TermPtr acc;
        for (const auto& x : extension) {
          std::vector<TermPtr> next = slots;
          TermPtr sing = pair_of(lift(x), lift(x));
          next.push_back(std::move(sing));
          TermPtr piece = domain(graph(body, std::move(next)));
          acc = acc ? intersect(acc, piece) : piece;
        }
        return acc;
      }
      case FormulaKind::Member:
      case FormulaKind::Equal:
        return atomic(f, std::move(slots));
    }
    throw std::logic_error("compile: unknown formula node");
  }

private:
  static void require(bool ok, const char* why) {
    if (!ok) throw std::invalid_argument(std::string("compile: ") + why);
  }

  static TermPtr product_of(const std::vector<TermPtr>& slots) {
    TermPtr acc = slots[0];
    for (std::size_t i = 1; i < slots.size(); ++i) acc = product(acc, slots[i]);
    return acc;
  }

  TermPtr atomic(const FormulaPtr& f, std::vector<TermPtr> slots) {
    const int m = static_cast<int>(slots.size());
    require(f->lhs <= m && f->rhs <= m, "atomic formula mentions a variable beyond the arity");
    if (m >= 2 && !f->uses_variable(m)) {
      TermPtr last = slots.back();
      slots.pop_back();
      return product(atomic(f, std::move(slots)), last);
    }
    if (m >= 2 && !f->uses_variable(m - 1)) {
      // Move the last coordinate down, compile, then swap the two top
      // coordinates back (the pair inverse at arity two, the composed
      // triple permutations above).
      FormulaPtr swapped = subst(f, m, m - 1);
      TermPtr last = slots[static_cast<std::size_t>(m) - 1];
      TermPtr second_last = slots[static_cast<std::size_t>(m) - 2];
      std::vector<TermPtr> reduced(slots.begin(), slots.end() - 2);
      reduced.push_back(last);
      TermPtr crossed = product(atomic(swapped, std::move(reduced)), second_last);
      return m == 2 ? inverse(crossed) : perm312(perm231(crossed));
    }
    if (m == 1) {
      if (f->kind == FormulaKind::Equal) return slots[0];  // x1 = x1
      // x1 in x1: the diagonal of the membership relation, then its domain.
      return domain(delta_cap(e_cap(product(slots[0], slots[0]))));
    }
    // Both of the two top variables occur, so the atomic formula is over
    // exactly x_{m-1} and x_m.
    TermPtr second_last = slots[static_cast<std::size_t>(m) - 2];
    TermPtr last = slots[static_cast<std::size_t>(m) - 1];
    TermPtr pairs;
    if (f->kind == FormulaKind::Equal) {
      pairs = delta_cap(product(second_last, last));
    } else if (f->lhs == m - 1) {  // x_{m-1} in x_m
      pairs = e_cap(product(second_last, last));
    } else {  // x_m in x_{m-1}
      pairs = inverse(e_cap(product(last, second_last)));
    }
    if (m == 2) return pairs;
    std::vector<TermPtr> prefix(slots.begin(), slots.end() - 2);
    return product2(product_of(prefix), pairs);
  }

  const std::vector<std::vector<HfObject>>& classes_;
  int fresh_;
};

}  // namespace

TermPtr CompiledTemplate::instantiate(const std::vector<HfObject>& args,
                                      const std::vector<std::vector<HfObject>>& classes) const {
  if (static_cast<int>(args.size()) != arity)
    throw std::invalid_argument("instantiate: argument count does not match the arity");
  for (const auto& a : args)
    if (a.is_atom()) throw std::invalid_argument("instantiate: argument sets must be sets");
  // Fresh indices must clear every variable the recursion can introduce:
  // the arity grows by at most two per formula node.
  const int fresh_base = std::max(arity, formula->max_variable()) + 2 * formula->size() + 8;
  Compiler c(classes, fresh_base);
  std::vector<TermPtr> slots;
  slots.reserve(args.size());
  for (const auto& a : args) slots.push_back(lift(a));
  return c.graph(formula, std::move(slots));
}

CompiledTemplate compile_formula(const FormulaPtr& formula, int arity) {
  if (!formula) throw std::invalid_argument("compile_formula: null formula");
  if (arity < 1) throw std::invalid_argument("compile_formula: arity must be at least 1");
  std::set<int> bound, free;
  free_variables(*formula, bound, free);
  for (int v : free)
    if (v > arity)
      throw std::invalid_argument("compile_formula: free variable x" + std::to_string(v) +
                                  " exceeds the arity");
  return CompiledTemplate{formula, arity};
}

HfObject formula_graph_brute_force(const FormulaPtr& formula, int arity,
                                   const std::vector<HfObject>& args,
                                   const std::vector<std::vector<HfObject>>& classes) {
  if (static_cast<int>(args.size()) != arity)
    throw std::invalid_argument("brute force: argument count does not match the arity");
  Universe u;
  u.classes = classes;
  std::vector<HfObject> tuple_parts(static_cast<std::size_t>(arity), HfObject::empty_set());
  std::vector<HfObject> graph;
  // Odometer over the product of the argument extensions.
  std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
  for (const auto& a : args)
    if (a.elements().empty()) return HfObject::empty_set();
  while (true) {
    for (int i = 0; i < arity; ++i)
      tuple_parts[static_cast<std::size_t>(i)] =
          args[static_cast<std::size_t>(i)].elements()[idx[static_cast<std::size_t>(i)]];
    if (eval_formula(formula, tuple_parts, u)) graph.push_back(HfObject::tuple(tuple_parts));
    int pos = arity - 1;
    while (pos >= 0) {
      if (++idx[static_cast<std::size_t>(pos)] <
          args[static_cast<std::size_t>(pos)].elements().size())
        break;
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return HfObject::set(std::move(graph));
}

HfObject specification_set(const FormulaPtr& formula, const HfObject& c,
                           const std::vector<HfObject>& sets,
                           const std::vector<std::vector<HfObject>>& classes) {
  if (c.is_atom()) throw std::invalid_argument("specification_set: c must be a set");
  const int m = 1 + static_cast<int>(sets.size());
  CompiledTemplate tmpl = compile_formula(formula, m);

  std::vector<HfObject> args;
  args.push_back(c);
  for (const auto& b : sets) args.push_back(HfObject::singleton(b));
  TermPtr term = tmpl.instantiate(args, classes);
  for (int i = 1; i < m; ++i) term = domain(term);
  const HfObject compiled = eval_term(term);

  Universe u;
  u.classes = classes;
  std::vector<HfObject> env(static_cast<std::size_t>(m), HfObject::empty_set());
  for (std::size_t i = 0; i < sets.size(); ++i) env[i + 1] = sets[i];
  std::vector<HfObject> picked;
  for (const auto& x : c.elements()) {
    env[0] = x;
    std::vector<HfObject> scratch = env;
    if (eval_formula(*formula, scratch, u)) picked.push_back(x);
  }
  const HfObject brute = HfObject::set(std::move(picked));

  if (!(compiled == brute))
    throw std::runtime_error("specification_set: compiled route disagrees with brute force");
  return compiled;
}

bool check_distributivity(const std::vector<std::vector<HfObject>>& j_families) {
  if (j_families.empty()) throw std::invalid_argument("check_distributivity: empty index set");
  for (const auto& family : j_families)
    if (family.empty())
      throw std::invalid_argument("check_distributivity: class families must be nonempty");

  HfObject lhs = HfObject::empty_set();
  for (const auto& family : j_families) {
    HfObject inter = family[0];
    for (std::size_t j = 1; j < family.size(); ++j) inter = hf_intersection(inter, family[j]);
    lhs = hf_union(lhs, inter);
  }

  std::vector<std::size_t> idx(j_families.size(), 0);
  bool first = true;
  HfObject rhs = HfObject::empty_set();
  while (true) {
    HfObject uni = HfObject::empty_set();
    for (std::size_t i = 0; i < j_families.size(); ++i)
      uni = hf_union(uni, j_families[i][idx[i]]);
    rhs = first ? uni : hf_intersection(rhs, uni);
    first = false;
    std::size_t pos = j_families.size();
    while (pos > 0) {
      if (++idx[pos - 1] < j_families[pos - 1].size()) break;
      idx[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return lhs == rhs;
}

}  // namespace settop
