#include "settop/inner_model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace settop {

HfObject trcl(const Zero& z, const HfObject& a) {
  if (a.is_atom()) throw std::invalid_argument("trcl: argument must be a set");
  if (!z.value().subset_of(a)) return a;  // nothing is a Z-member of it
  std::set<HfObject, HfLess> elems(a.elements().begin(), a.elements().end());
  std::vector<HfObject> work(a.elements().begin(), a.elements().end());
  while (!work.empty()) {
    HfObject b = work.back();
    work.pop_back();
    if (z.value().contains(b)) continue;  // zero material has no Z-members here
    if (b.is_atom() || !z.value().subset_of(b)) continue;
    for (const auto& c : b.elements()) {
      if (z.value().contains(c)) continue;
      if (elems.insert(c).second) work.push_back(c);
    }
  }
  return HfObject::set(std::vector<HfObject>(elems.begin(), elems.end()));
}

bool is_z_transitive(const Zero& z, const HfObject& a) {
  if (a.is_atom()) return false;
  if (!z.value().subset_of(a)) return true;
  for (const auto& b : a.elements()) {
    if (!z.member0(b, a)) continue;
    if (b.is_atom() || !z.value().subset_of(b)) continue;
    for (const auto& c : b.elements())
      if (z.member0(c, b) && !z.member0(c, a)) return false;
  }
  return true;
}

namespace {

bool in_collection_z(const Zero& z, const std::vector<HfObject>& b, const HfObject& x) {
  // x inZ B for a collection B: the zero's elements all lie in B, x is in B
  // and x is not zero material.
  for (const auto& e : z.value().elements())
    if (std::find(b.begin(), b.end(), e) == b.end()) return false;
  if (z.value().contains(x)) return false;
  return std::find(b.begin(), b.end(), x) != b.end();
}

}  // namespace

bool is_pristine(const Zero& z, const std::vector<HfObject>& b, const HfObject& a) {
  if (in_collection_z(z, b, a)) return true;
  if (a.is_atom() || !z.value().subset_of(a)) return false;
  const HfObject closure = trcl(z, a);
  for (const auto& c : closure.elements()) {
    if (!z.member0(c, closure)) continue;
    const bool good_set = !c.is_atom() && z.value().subset_of(c);
    if (!good_set && !in_collection_z(z, b, c)) return false;
  }
  return true;
}

bool is_wellfounded(const Zero& z, const HfObject& a) {
  // Depth-first search over the inZ relation; a cycle is exactly an
  // infinite descending chain at finite scale.
  enum class Mark { Open, Done };
  std::map<HfObject, Mark, HfLess> marks;
  std::function<bool(const HfObject&)> visit = [&](const HfObject& x) -> bool {
    auto it = marks.find(x);
    if (it != marks.end()) return it->second == Mark::Done;
    marks.emplace(x, Mark::Open);
    if (x.is_set() && z.value().subset_of(x)) {
      for (const auto& c : x.elements())
        if (z.member0(c, x) && !visit(c)) return false;
    }
    marks[x] = Mark::Done;
    return true;
  };
  return visit(a);
}

InterpretationContext build_w3(const Zero& z, const std::vector<HfObject>& b, int rank_bound) {
  for (const auto& e : z.value().elements())
    if (std::find(b.begin(), b.end(), e) == b.end())
      throw std::invalid_argument("build_w3: B must contain the zero's elements");
  for (const auto& x : b)
    if (x.is_set() && z.value().subset_of(x))
      throw std::invalid_argument("build_w3: an element of B is a superset of the zero");
  if (rank_bound < 1 || rank_bound > 5)
    throw std::invalid_argument("build_w3: rank bound out of range (1..5)");

  std::vector<HfObject> b_plus;  // B minus the zero's elements
  for (const auto& x : b)
    if (!z.value().contains(x)) b_plus.push_back(x);
  std::sort(b_plus.begin(), b_plus.end());
  b_plus.erase(std::unique(b_plus.begin(), b_plus.end()), b_plus.end());

  const std::vector<HfObject> members = relative_hierarchy(z.value(), b_plus, rank_bound);
  for (const auto& m : members) {
    if (!is_pristine(z, b, m) || !is_wellfounded(z, m))
      throw std::logic_error("build_w3: constructed member fails the defining predicates");
  }

  InterpretationContext ctx;
  ctx.zero = z;
  ctx.atoms_b = b;
  ctx.rank_bound = rank_bound;
  ctx.w_members = b;
  for (const auto& m : members) ctx.w_members.push_back(m);
  ctx.phi_dom = members;  // identity on W minus B
  ctx.phi_img = members;
  return ctx;
}

bool InterpretationReport::all_in_bound_pass() const {
  for (const auto& c : preconditions)
    if (!c.ok()) return false;
  for (const auto& c : conditions)
    if (!c.ok()) return false;
  return true;
}

long InterpretationReport::total_out_of_bound() const {
  long total = 0;
  for (const auto& c : conditions) total += c.out_of_bound;
  return total;
}

namespace {

// Mask algebra over the ground universe of every object that can occur as
// an element of a condition result.
struct Ground {
  std::vector<HfObject> objects;
  std::unordered_map<HfObject, int, HfHash> index;
  std::uint64_t z_mask = 0;
  std::uint64_t good_mask = 0;  // B-plus and T members, as elements
  std::map<std::uint64_t, int> t_by_mask;

  int bit(const HfObject& x) const {
    auto it = index.find(x);
    if (it == index.end()) throw std::logic_error("conditions: object escapes the ground set");
    return it->second;
  }
  std::uint64_t mask_of_set(const HfObject& s) const {
    std::uint64_t m = 0;
    for (const auto& e : s.elements()) m |= std::uint64_t(1) << bit(e);
    return m;
  }
  HfObject decode(std::uint64_t m) const {
    std::vector<HfObject> elems;
    for (std::size_t i = 0; i < objects.size(); ++i)
      if ((m >> i) & 1u) elems.push_back(objects[i]);
    return HfObject::set(std::move(elems));
  }
};

enum class Outcome { Pass, Fail, OutOfBound };

}  // namespace

InterpretationReport check_interpretation_conditions(const InterpretationContext& ctx,
                                                     const KBound& k) {
  InterpretationReport report;
  const Zero& z = ctx.zero;
  const auto& t_family = ctx.phi_img;

  auto precondition = [&](const std::string& name, bool ok, const std::string& witness) {
    ConditionReport c;
    c.name = name;
    (ok ? c.pass : c.fail) = 1;
    if (!ok) c.failure_witnesses.push_back(witness);
    report.preconditions.push_back(std::move(c));
  };

  // phi injective
  {
    bool injective = ctx.phi_dom.size() == ctx.phi_img.size();
    std::string witness;
    std::set<HfObject, HfLess> seen;
    for (const auto& img : ctx.phi_img) {
      if (!seen.insert(img).second) {
        injective = false;
        witness = img.to_string();
      }
    }
    precondition("phi-injective", injective, witness);
  }
  // zero's elements inside B inside W
  {
    bool chain = true;
    std::string witness;
    for (const auto& e : z.value().elements()) {
      if (std::find(ctx.atoms_b.begin(), ctx.atoms_b.end(), e) == ctx.atoms_b.end()) {
        chain = false;
        witness = e.to_string();
      }
    }
    for (const auto& x : ctx.atoms_b) {
      if (std::find(ctx.w_members.begin(), ctx.w_members.end(), x) == ctx.w_members.end()) {
        chain = false;
        witness = x.to_string();
      }
    }
    precondition("zero-in-b-in-w", chain, witness);
  }
  // no element of B is a superset of the zero
  {
    bool ok = true;
    std::string witness;
    for (const auto& x : ctx.atoms_b) {
      if (x.is_set() && z.value().subset_of(x)) {
        ok = false;
        witness = x.to_string();
      }
    }
    precondition("b-not-superset-of-zero", ok, witness);
  }

  if (t_family.size() > 20)
    throw std::invalid_argument(
        "check_interpretation_conditions: T too large for subfamily enumeration");

  // Ground universe: zero material, B-plus, and the T members themselves.
  Ground g;
  auto add_object = [&](const HfObject& x) {
    if (g.index.emplace(x, static_cast<int>(g.objects.size())).second) g.objects.push_back(x);
  };
  for (const auto& e : z.value().elements()) add_object(e);
  std::vector<HfObject> b_plus;
  for (const auto& x : ctx.atoms_b)
    if (!z.value().contains(x)) {
      b_plus.push_back(x);
      add_object(x);
    }
  for (const auto& t : t_family) add_object(t);
  for (const auto& s : ctx.phi_dom) add_object(s);  // condition-8 results hold these
  // Elements of T members must be covered too (they feed intersections).
  for (const auto& t : t_family)
    for (const auto& e : t.elements()) add_object(e);
  if (g.objects.size() > 60)
    throw std::invalid_argument("check_interpretation_conditions: ground universe too large");

  for (const auto& e : z.value().elements()) g.z_mask |= std::uint64_t(1) << g.bit(e);
  for (const auto& x : b_plus) g.good_mask |= std::uint64_t(1) << g.bit(x);
  for (const auto& t : t_family) g.good_mask |= std::uint64_t(1) << g.bit(t);
  for (const auto& s : ctx.phi_dom) g.good_mask |= std::uint64_t(1) << g.bit(s);

  std::vector<std::uint64_t> t_masks;
  for (std::size_t i = 0; i < t_family.size(); ++i) {
    const std::uint64_t m = g.mask_of_set(t_family[i]);
    g.t_by_mask.emplace(m, static_cast<int>(i));
    t_masks.push_back(m);
  }

  auto classify = [&](std::uint64_t result, bool z_allowed) -> Outcome {
    if (g.t_by_mask.count(result)) return Outcome::Pass;
    if (z_allowed && result == g.z_mask) return Outcome::Pass;
    const bool extends_zero = (g.z_mask & ~result) == 0;
    const bool in_horizon = (result & ~g.z_mask & ~g.good_mask) == 0;
    if (extends_zero && in_horizon) return Outcome::OutOfBound;
    return Outcome::Fail;
  };

  auto run = [&](const std::string& name, auto&& body) {
    ConditionReport c;
    c.name = name;
    body(c);
    report.conditions.push_back(std::move(c));
  };

  auto record = [&](ConditionReport& c, Outcome o, const std::uint64_t* result,
                    const std::string& instance) {
    switch (o) {
      case Outcome::Pass:
        ++c.pass;
        break;
      case Outcome::OutOfBound:
        ++c.out_of_bound;
        break;
      case Outcome::Fail:
        ++c.fail;
        if (c.failure_witnesses.size() < 8)
          c.failure_witnesses.push_back(instance +
                                        (result ? " -> " + g.decode(*result).to_string() : ""));
        break;
    }
  };

  // W-plus: members of W that are not zero material.
  std::vector<HfObject> w_plus;
  for (const auto& w : ctx.w_members)
    if (!z.value().contains(w)) w_plus.push_back(w);
  std::sort(w_plus.begin(), w_plus.end());
  w_plus.erase(std::unique(w_plus.begin(), w_plus.end()), w_plus.end());

  // (1) nontriviality of the interpreted universe
  run("w-plus-has-two-elements", [&](ConditionReport& c) {
    record(c, w_plus.size() > 1 ? Outcome::Pass : Outcome::Fail, nullptr,
           "|W+| = " + std::to_string(w_plus.size()));
  });

  // (2) T members are inner classes, B members are not
  run("t-inner-b-not-inner", [&](ConditionReport& c) {
    auto is_inner = [&](const HfObject& x) {
      if (x.is_atom()) return false;
      if (!z.value().subset_of(x)) return false;
      for (const auto& e : x.elements())
        if (std::find(ctx.w_members.begin(), ctx.w_members.end(), e) == ctx.w_members.end())
          return false;
      return true;
    };
    for (const auto& t : t_family)
      record(c, is_inner(t) ? Outcome::Pass : Outcome::Fail, nullptr, t.to_string());
    for (const auto& b : ctx.atoms_b)
      record(c, !is_inner(b) ? Outcome::Pass : Outcome::Fail, nullptr, b.to_string());
  });

  // (3) zero-extended singletons
  run("singletons-in-t", [&](ConditionReport& c) {
    for (const auto& x : w_plus) {
      const std::uint64_t result = g.z_mask | (std::uint64_t(1) << g.bit(x));
      record(c, classify(result, false), &result, "x = " + x.to_string());
    }
  });

  // (4) nonempty intersections are the zero or in T
  run("intersections-closed", [&](ConditionReport& c) {
    const std::size_t n = t_family.size();
    for (std::uint64_t sel = 1; sel < (std::uint64_t(1) << n); ++sel) {
      std::uint64_t inter = ~std::uint64_t(0);
      for (std::size_t i = 0; i < n; ++i)
        if ((sel >> i) & 1u) inter &= t_masks[i];
      record(c, classify(inter, true), &inter, "subfamily " + std::to_string(sel));
    }
  });

  // (5) binary unions
  run("binary-unions-closed", [&](ConditionReport& c) {
    for (std::size_t i = 0; i < t_family.size(); ++i)
      for (std::size_t j = 0; j < t_family.size(); ++j) {
        const std::uint64_t uni = t_masks[i] | t_masks[j];
        record(c, classify(uni, false), &uni,
               t_family[i].to_string() + " u " + t_family[j].to_string());
      }
  });

  // (6) co-singleton-closed members have K-small positive part
  run("discreteness-bound", [&](ConditionReport& c) {
    if (k.is_unbounded()) {
      c.vacuous = true;
      return;
    }
    for (std::size_t i = 0; i < t_family.size(); ++i) {
      const std::uint64_t plus = t_masks[i] & ~g.z_mask;
      bool premise = true;
      for (std::size_t bitpos = 0; bitpos < g.objects.size() && premise; ++bitpos) {
        if (!((plus >> bitpos) & 1u)) continue;
        const std::uint64_t without = t_masks[i] & ~(std::uint64_t(1) << bitpos);
        premise = g.t_by_mask.count(without) != 0;
      }
      if (!premise) continue;
      record(c,
             k.small(static_cast<std::size_t>(__builtin_popcountll(plus))) ? Outcome::Pass
                                                                           : Outcome::Fail,
             &t_masks[i], t_family[i].to_string());
    }
  });

  // (7) K-small unions stay in T
  run("small-unions-closed", [&](ConditionReport& c) {
    const std::size_t n = t_family.size();
    for (std::uint64_t sel = 1; sel < (std::uint64_t(1) << n); ++sel) {
      if (!k.small(static_cast<std::size_t>(__builtin_popcountll(sel)))) continue;
      std::uint64_t uni = 0;
      for (std::size_t i = 0; i < n; ++i)
        if ((sel >> i) & 1u) uni |= t_masks[i];
      record(c, classify(uni, false), &uni, "subfamily " + std::to_string(sel));
    }
  });

  // (8) the exponential condition
  run("exponential-closed", [&](ConditionReport& c) {
    std::vector<std::uint64_t> img_masks;
    std::vector<int> img_bits;
    for (std::size_t i = 0; i < ctx.phi_dom.size(); ++i) {
      img_masks.push_back(g.mask_of_set(ctx.phi_img[i]));
      img_bits.push_back(g.bit(ctx.phi_dom[i]));
    }
    for (const auto& a : t_family)
      for (const auto& b : t_family) {
        const std::uint64_t am = g.mask_of_set(a), bm = g.mask_of_set(b);
        std::uint64_t result = g.z_mask;
        for (std::size_t i = 0; i < img_masks.size(); ++i) {
          const bool inside = (img_masks[i] & ~am) == 0;
          const bool meets_beyond_zero = (img_masks[i] & bm & ~g.z_mask) != 0;
          if (inside && meets_beyond_zero) result |= std::uint64_t(1) << img_bits[i];
        }
        record(c, classify(result, true), &result,
               "a = " + a.to_string() + ", b = " + b.to_string());
      }
  });

  return report;
}

}  // namespace settop
