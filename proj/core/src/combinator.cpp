#include "settop/combinator.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace settop {

namespace {

TermPtr node(TermKind k, TermPtr a = nullptr, TermPtr b = nullptr) {
  auto n = std::make_shared<TermNode>();
  n->kind = k;
  n->first = std::move(a);
  n->second = std::move(b);
  return n;
}

}  // namespace

TermPtr lift(HfObject v) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Lift;
  n->value = std::move(v);
  return n;
}
TermPtr big_union(TermPtr t) { return node(TermKind::BigUnion, std::move(t)); }
TermPtr pair_of(TermPtr t, TermPtr u) { return node(TermKind::Pair, std::move(t), std::move(u)); }
TermPtr product(TermPtr t, TermPtr u) {
  return node(TermKind::Product, std::move(t), std::move(u));
}
TermPtr delta_cap(TermPtr t) { return node(TermKind::DeltaCap, std::move(t)); }
TermPtr e_cap(TermPtr t) { return node(TermKind::ECap, std::move(t)); }
TermPtr forall_selector(TermPtr a, TermPtr b) {
  return node(TermKind::ForallSelector, std::move(a), std::move(b));
}
TermPtr perm312(TermPtr t) { return node(TermKind::Perm312, std::move(t)); }
TermPtr perm231(TermPtr t) { return node(TermKind::Perm231, std::move(t)); }
TermPtr domain(TermPtr t) { return node(TermKind::Domain, std::move(t)); }
TermPtr inverse(TermPtr t) { return node(TermKind::Inverse, std::move(t)); }
TermPtr product2(TermPtr t, TermPtr u) {
  return node(TermKind::Product2, std::move(t), std::move(u));
}
TermPtr intersect(TermPtr t, TermPtr u) {
  return node(TermKind::Intersect, std::move(t), std::move(u));
}
TermPtr union_of(TermPtr t, TermPtr u) {
  return node(TermKind::UnionOf, std::move(t), std::move(u));
}

namespace {

// Decode a left-nested triple <<x,y>,z>; the first component must itself be
// a pair.
struct Triple {
  HfObject x, y, z;
};

std::vector<Triple> triples_of(const HfObject& a) {
  std::vector<Triple> out;
  for (const auto& m : a.elements()) {
    auto outer = m.as_pair();
    if (!outer) continue;
    auto inner = outer->first.as_pair();
    if (!inner) continue;
    out.push_back({inner->first, inner->second, outer->second});
  }
  return out;
}

struct Evaluator {
  std::unordered_map<const TermNode*, HfObject> memo;

  HfObject eval(const TermPtr& t) {
    auto it = memo.find(t.get());
    if (it != memo.end()) return it->second;
    HfObject v = compute(t);
    memo.emplace(t.get(), v);
    return v;
  }

  HfObject compute(const TermPtr& t) {
    switch (t->kind) {
      case TermKind::Lift:
        return t->value;
      case TermKind::BigUnion:
        return hf_big_union(eval(t->first));
      case TermKind::Pair:
        return HfObject::unordered_pair(eval(t->first), eval(t->second));
      case TermKind::Product: {
        const HfObject a = eval(t->first), b = eval(t->second);
        std::vector<HfObject> out;
        for (const auto& x : a.elements())
          for (const auto& y : b.elements())
            out.push_back(HfObject::kuratowski_pair(x, y));
        return HfObject::set(std::move(out));
      }
      case TermKind::DeltaCap: {
        const HfObject arg = eval(t->first);
        std::vector<HfObject> out;
        for (const auto& m : arg.elements())
          if (auto p = m.as_pair(); p && p->first == p->second) out.push_back(m);
        return HfObject::set(std::move(out));
      }
      case TermKind::ECap: {
        const HfObject arg = eval(t->first);
        std::vector<HfObject> out;
        for (const auto& m : arg.elements())
          if (auto p = m.as_pair(); p && p->second.contains(p->first)) out.push_back(m);
        return HfObject::set(std::move(out));
      }
      case TermKind::ForallSelector: {
        // {<x,y> in b : forall z in y, <x,y,z> in a}; the triple <x,y,z> is
        // <<x,y>,z>, and m already is <x,y>.
        const HfObject a = eval(t->first), b = eval(t->second);
        std::vector<HfObject> out;
        for (const auto& m : b.elements()) {
          auto p = m.as_pair();
          if (!p) continue;
          bool all = true;
          for (const auto& z : p->second.elements()) {
            if (!a.contains(HfObject::kuratowski_pair(m, z))) {
              all = false;
              break;
            }
          }
          if (all) out.push_back(m);
        }
        return HfObject::set(std::move(out));
      }
      case TermKind::Perm312: {
        std::vector<HfObject> out;
        for (const auto& tr : triples_of(eval(t->first)))
          out.push_back(HfObject::tuple({tr.y, tr.x, tr.z}));
        return HfObject::set(std::move(out));
      }
      case TermKind::Perm231: {
        std::vector<HfObject> out;
        for (const auto& tr : triples_of(eval(t->first)))
          out.push_back(HfObject::tuple({tr.z, tr.x, tr.y}));
        return HfObject::set(std::move(out));
      }
      case TermKind::Domain: {
        const HfObject arg = eval(t->first);
        std::vector<HfObject> out;
        for (const auto& m : arg.elements())
          if (auto p = m.as_pair()) out.push_back(p->first);
        return HfObject::set(std::move(out));
      }
      case TermKind::Inverse: {
        const HfObject arg = eval(t->first);
        std::vector<HfObject> out;
        for (const auto& m : arg.elements())
          if (auto p = m.as_pair()) out.push_back(HfObject::kuratowski_pair(p->second, p->first));
        return HfObject::set(std::move(out));
      }
      case TermKind::Product2: {
        const HfObject a = eval(t->first), b = eval(t->second);
        std::vector<HfObject> out;
        for (const auto& x : a.elements())
          for (const auto& m : b.elements())
            if (auto p = m.as_pair())
              out.push_back(HfObject::tuple({x, p->first, p->second}));
        return HfObject::set(std::move(out));
      }
      case TermKind::Intersect:
        return hf_intersection(eval(t->first), eval(t->second));
      case TermKind::UnionOf:
        return hf_union(eval(t->first), eval(t->second));
    }
    throw std::logic_error("eval_term: unknown node");
  }
};

void collect(const TermPtr& t, std::unordered_set<const TermNode*>& seen) {
  if (!t || !seen.insert(t.get()).second) return;
  collect(t->first, seen);
  collect(t->second, seen);
}

}  // namespace

HfObject eval_term(const TermPtr& t) {
  if (!t) throw std::invalid_argument("eval_term: null term");
  Evaluator e;
  return e.eval(t);
}

std::size_t term_dag_size(const TermPtr& t) {
  std::unordered_set<const TermNode*> seen;
  collect(t, seen);
  return seen.size();
}

std::string term_to_string(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Lift:
      return "(lift " + t->value.to_string() + ")";
    case TermKind::BigUnion:
      return "(big-union " + term_to_string(t->first) + ")";
    case TermKind::Pair:
      return "(pair " + term_to_string(t->first) + " " + term_to_string(t->second) + ")";
    case TermKind::Product:
      return "(product " + term_to_string(t->first) + " " + term_to_string(t->second) + ")";
    case TermKind::DeltaCap:
      return "(delta-cap " + term_to_string(t->first) + ")";
    case TermKind::ECap:
      return "(e-cap " + term_to_string(t->first) + ")";
    case TermKind::ForallSelector:
      return "(forall-sel " + term_to_string(t->first) + " " + term_to_string(t->second) + ")";
    case TermKind::Perm312:
      return "(perm-312 " + term_to_string(t->first) + ")";
    case TermKind::Perm231:
      return "(perm-231 " + term_to_string(t->first) + ")";
    case TermKind::Domain:
      return "(dom " + term_to_string(t->first) + ")";
    case TermKind::Inverse:
      return "(inv " + term_to_string(t->first) + ")";
    case TermKind::Product2:
      return "(product2 " + term_to_string(t->first) + " " + term_to_string(t->second) + ")";
    case TermKind::Intersect:
      return "(cap " + term_to_string(t->first) + " " + term_to_string(t->second) + ")";
    case TermKind::UnionOf:
      return "(cup " + term_to_string(t->first) + " " + term_to_string(t->second) + ")";
  }
  return "";
}

}  // namespace settop
