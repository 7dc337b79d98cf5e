#include "settop/acceptance.hpp"

#include <algorithm>
#include <stdexcept>

#include "settop/compile.hpp"
#include "settop/hyperspace.hpp"
#include "settop/hyperuniverse.hpp"
#include "settop/inner_model.hpp"
#include "settop/ordinal.hpp"
#include "settop/rng.hpp"
#include "settop/topology.hpp"
#include "settop/wellorder.hpp"

namespace settop::acceptance {

namespace {

// Nonempty subsets of the pool with at most max_size elements.
std::vector<std::vector<HfObject>> small_subsets(const std::vector<HfObject>& pool,
                                                 std::size_t max_size) {
  std::vector<std::vector<HfObject>> out;
  const std::size_t n = pool.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > max_size) continue;
    std::vector<HfObject> subset;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) subset.push_back(pool[i]);
    out.push_back(std::move(subset));
  }
  return out;
}

CriterionResult compiler_oracle_equivalence() {
  CriterionResult r{1, "compiler-oracle-equivalence", false, ""};
  const std::vector<HfObject> u3 = hierarchy(3);
  const auto param_options = small_subsets(u3, 2);
  long instances = 0;
  for (int m = 1; m <= 2; ++m) {
    const auto formulas = enumerate_positive_formulas(7, m, 1);
    for (const auto& f : formulas) {
      const CompiledTemplate tmpl = compile_formula(f, m);
      const bool needs_param = f->max_param() >= 1;
      std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
      while (true) {
        std::vector<HfObject> args;
        for (int i = 0; i < m; ++i) args.push_back(u3[idx[static_cast<std::size_t>(i)]]);
        const std::size_t param_count = needs_param ? param_options.size() : 1;
        for (std::size_t p = 0; p < param_count; ++p) {
          std::vector<std::vector<HfObject>> classes;
          if (needs_param) classes.push_back(param_options[p]);
          const HfObject compiled = eval_term(tmpl.instantiate(args, classes));
          const HfObject brute = formula_graph_brute_force(f, m, args, classes);
          ++instances;
          if (!(compiled == brute)) {
            r.detail = "mismatch on " + f->to_string();
            return r;
          }
        }
        int pos = m - 1;
        while (pos >= 0) {
          if (++idx[static_cast<std::size_t>(pos)] < u3.size()) break;
          idx[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
    }
  }
  r.pass = true;
  r.detail = std::to_string(instances) + " formula instances, all exact";
  return r;
}

CriterionResult separation_transfer() {
  CriterionResult r{2, "separation-transfer", false, ""};
  long spaces = 0, t0_spaces = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& base : enumerate_topologies(n)) {
      const SeparationProfile bp = separation_profile(base);
      const HyperSpace exp = exp_space(base, KBound::unbounded());
      const SeparationProfile ep = separation_profile(exp.topology);
      ++spaces;
      if (bp.t1 && !ep.t1) {
        r.detail = "t1 transfer failed on a " + std::to_string(n) + "-point base";
        return r;
      }
      // The biconditionals hold on the distinguishable-point spaces the
      // transfer lemma speaks about.
      if (!bp.t0) continue;
      ++t0_spaces;
      if (bp.t3 != ep.t2) {
        r.detail = "t3/t2 biconditional failed on a " + std::to_string(n) + "-point base";
        return r;
      }
      if (bp.t4 != ep.t3) {
        r.detail = "t4/t3 biconditional failed on a " + std::to_string(n) + "-point base";
        return r;
      }
    }
  }
  r.pass = true;
  r.detail = std::to_string(spaces) + " spaces (" + std::to_string(t0_spaces) +
             " distinguishable), zero exceptions";
  return r;
}

CriterionResult distributivity(std::uint64_t seed) {
  CriterionResult r{3, "distributivity-law", false, ""};
  const std::vector<HfObject> u3 = hierarchy(3);
  Rng rng(seed ^ 0xd15ULL);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t d = 1 + rng.below(3);
    std::vector<std::vector<HfObject>> j_families(d);
    for (auto& family : j_families) {
      const std::size_t size = 1 + rng.below(3);
      for (std::size_t k = 0; k < size; ++k) family.push_back(u3[rng.below(u3.size())]);
    }
    if (!check_distributivity(j_families)) {
      r.detail = "counterexample at trial " + std::to_string(trial);
      return r;
    }
  }
  r.pass = true;
  r.detail = "1000 seeded instances, both sides equal";
  return r;
}

bool ordinal_block(const Zero& z, std::string& why) {
  const auto ords = enumerate_zero_ordinals(z, 6);
  for (std::size_t i = 0; i < ords.size(); ++i) {
    const HfObject& a = ords[i];
    if (a.contains(a)) {
      why = "an ordinal contains itself";
      return false;
    }
    // every positive-part member is an enumerated ordinal, and the ordinal
    // is the zero joined with them
    std::vector<HfObject> plus_members;
    for (const auto& e : a.elements())
      if (!z.value().contains(e)) {
        plus_members.push_back(e);
        if (!is_zero_ordinal(z, e)) {
          why = "a positive-part member is not an ordinal";
          return false;
        }
      }
    if (!(hf_union(z.value(), HfObject::set(plus_members)) == a)) {
      why = "ordinal is not the zero joined with its predecessors";
      return false;
    }
  }
  // the membership order coincides with strict inclusion, and is linear
  for (std::size_t i = 0; i < ords.size(); ++i)
    for (std::size_t j = 0; j < ords.size(); ++j) {
      const bool mem = z.member0(ords[i], ords[j]);
      const bool strict_subset =
          !(ords[i] == ords[j]) && ords[i].subset_of(ords[j]);
      if (mem != strict_subset) {
        why = "membership and strict inclusion disagree";
        return false;
      }
      if (i < j && !mem) {
        why = "enumeration is not increasing";
        return false;
      }
    }
  // successor: next in the enumeration, and nothing sits strictly between
  for (std::size_t i = 0; i + 1 < ords.size(); ++i) {
    if (!(successor(z, ords[i]) == ords[i + 1])) {
      why = "successor mismatch";
      return false;
    }
    for (const auto& g : ords)
      if (ords[i].subset_of(g) && !(ords[i] == g) && g.subset_of(ords[i + 1]) &&
          !(g == ords[i + 1])) {
        why = "a third ordinal sits between consecutive ones";
        return false;
      }
  }
  // unions of nonempty subcollections are ordinals and least upper bounds
  for (std::uint32_t mask = 1; mask < (1u << ords.size()); ++mask) {
    HfObject uni = z.value();
    HfObject largest = z.value();
    for (std::size_t i = 0; i < ords.size(); ++i)
      if ((mask >> i) & 1u) {
        uni = hf_union(uni, ords[i]);
        largest = ords[i];  // enumeration is increasing
      }
    if (!is_zero_ordinal(z, uni) || !(uni == largest)) {
      why = "union of a subcollection is not the least upper bound";
      return false;
    }
  }
  return true;
}

CriterionResult ordinal_structure() {
  CriterionResult r{4, "zero-ordinal-structure", false, ""};
  const Zero empty = Zero::empty();
  const Zero pair = Zero::atom_pair();
  std::string why;
  if (!ordinal_block(empty, why)) {
    r.detail = "empty zero: " + why;
    return r;
  }
  if (!ordinal_block(pair, why)) {
    r.detail = "two-atom zero: " + why;
    return r;
  }
  const auto a = enumerate_zero_ordinals(empty, 6);
  const auto b = enumerate_zero_ordinals(pair, 6);
  // order isomorphism by position
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      const bool left = !(a[i] == a[j]) && a[i].subset_of(a[j]);
      const bool right = !(b[i] == b[j]) && b[i].subset_of(b[j]);
      if (left != right) {
        r.detail = "the two ordinal sequences are not order isomorphic";
        return r;
      }
    }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].elements().size() != i + 2) {
      r.detail = "two-atom ordinal " + std::to_string(i) + " does not have " +
                 std::to_string(i + 2) + " elements";
      return r;
    }
  }
  r.pass = true;
  r.detail = "both zeros, 6 ordinals each, full order structure";
  return r;
}

struct FrozenConditionCounts {
  std::string name;
  long pass;
  long out_of_bound;
  bool vacuous;
};

// Regression pins for the two audited interpretation contexts; the
// out-of-bound totals come from the rank horizon and must not drift.
const std::vector<FrozenConditionCounts> kFrozenRank4Empty = {
    {"w-plus-has-two-elements", 1, 0, false},
    {"t-inner-b-not-inner", 16, 0, false},
    {"singletons-in-t", 4, 12, false},
    {"intersections-closed", 65535, 0, false},
    {"binary-unions-closed", 256, 0, false},
    {"discreteness-bound", 0, 0, true},
    {"small-unions-closed", 65535, 0, false},
    {"exponential-closed", 109, 147, false},
};

const std::vector<FrozenConditionCounts> kFrozenRank3Pair = {
    {"w-plus-has-two-elements", 1, 0, false},
    {"t-inner-b-not-inner", 6, 0, false},
    {"singletons-in-t", 2, 2, false},
    {"intersections-closed", 15, 0, false},
    {"binary-unions-closed", 16, 0, false},
    {"discreteness-bound", 0, 0, true},
    {"small-unions-closed", 15, 0, false},
    {"exponential-closed", 11, 5, false},
};

bool check_frozen(const InterpretationReport& report,
                  const std::vector<FrozenConditionCounts>& frozen, std::string& why) {
  if (!report.all_in_bound_pass()) {
    why = "an in-bound instance failed";
    return false;
  }
  if (report.conditions.size() != frozen.size()) {
    why = "condition count drifted";
    return false;
  }
  for (std::size_t i = 0; i < frozen.size(); ++i) {
    const auto& got = report.conditions[i];
    const auto& want = frozen[i];
    if (got.name != want.name || got.pass != want.pass ||
        got.out_of_bound != want.out_of_bound || got.vacuous != want.vacuous) {
      why = "regression drift on " + want.name + ": pass " + std::to_string(got.pass) +
            ", out-of-bound " + std::to_string(got.out_of_bound);
      return false;
    }
  }
  return true;
}

CriterionResult inner_model_audit() {
  CriterionResult r{5, "inner-model-conditions", false, ""};
  const InterpretationContext ctx1 = build_w3(Zero::empty(), {}, 4);
  const Zero pair = Zero::atom_pair();
  const InterpretationContext ctx2 = build_w3(pair, pair.value().elements(), 3);
  std::string why;
  const auto rep1 = check_interpretation_conditions(ctx1, KBound::unbounded());
  if (!check_frozen(rep1, kFrozenRank4Empty, why)) {
    r.detail = "empty zero at rank 4: " + why;
    return r;
  }
  const auto rep2 = check_interpretation_conditions(ctx2, KBound::unbounded());
  if (!check_frozen(rep2, kFrozenRank3Pair, why)) {
    r.detail = "two-atom zero at rank 3: " + why;
    return r;
  }
  r.pass = true;
  r.detail = "all eight conditions pass in-bound; out-of-bound counts " +
             std::to_string(rep1.total_out_of_bound()) + " and " +
             std::to_string(rep2.total_out_of_bound()) + " as pinned";
  return r;
}

CriterionResult hyperuniverse_search() {
  CriterionResult r{6, "hyperuniverse-search", false, ""};
  const auto witnesses = search_hyperuniverses(4);
  if (witnesses.size() != 1) {
    r.detail = "expected exactly one witness, found " + std::to_string(witnesses.size());
    return r;
  }
  const auto& w = witnesses[0];
  if (w.space.points() != 1 || !w.atom_part.empty_set() || w.phi != std::vector<int>{0}) {
    r.detail = "unexpected witness " + w.to_string();
    return r;
  }
  const auto again = search_hyperuniverses(4);
  if (again.size() != 1 || !(again[0].to_string() == w.to_string())) {
    r.detail = "witness list is not deterministic";
    return r;
  }
  r.pass = true;
  r.detail = "exactly the one-point witness, deterministic";
  return r;
}

// All choice functions on carriers up to 3; odometer order.
std::vector<ChoiceFunction> all_choice_functions(int carrier) {
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t m = 1; m < (1u << carrier); ++m) subsets.push_back(m);
  std::vector<ChoiceFunction> out;
  std::vector<int> pick_idx(subsets.size(), 0);
  auto member = [](std::uint32_t mask, int k) {
    int seen = -1;
    for (int i = 0; i < 31; ++i)
      if ((mask >> i) & 1u && ++seen == k) return i;
    return -1;
  };
  while (true) {
    std::map<std::uint32_t, int> pick;
    for (std::size_t s = 0; s < subsets.size(); ++s)
      pick[subsets[s]] = member(subsets[s], pick_idx[s]);
    out.push_back(ChoiceFunction::create(carrier, std::move(pick)));
    std::size_t pos = 0;
    while (pos < subsets.size()) {
      if (++pick_idx[pos] < __builtin_popcount(subsets[pos])) break;
      pick_idx[pos] = 0;
      ++pos;
    }
    if (pos == subsets.size()) break;
  }
  return out;
}

ChoiceFunction random_choice_function(int carrier, Rng& rng) {
  std::map<std::uint32_t, int> pick;
  for (std::uint32_t m = 1; m < (1u << carrier); ++m) {
    const int size = __builtin_popcount(m);
    int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(size)));
    for (int i = 0; i < carrier; ++i)
      if ((m >> i) & 1u && k-- == 0) {
        pick[m] = i;
        break;
      }
  }
  return ChoiceFunction::create(carrier, std::move(pick));
}

bool wellorder_instance(const ChoiceFunction& f, std::string& why) {
  ApproximationChain chain;
  const FiniteOrder order = wellorder_from_choice(f, &chain);
  const int n = f.carrier;
  if (static_cast<int>(chain.sets.size()) != n || chain.sets.front() != PointSet::full(n) ||
      chain.sets.back().size() != 1) {
    why = "chain shape";
    return false;
  }
  for (std::size_t i = 1; i < chain.sets.size(); ++i)
    if (!chain.sets[i].subset_of(chain.sets[i - 1]) ||
        chain.sets[i].size() + 1 != chain.sets[i - 1].size()) {
      why = "chain is not strictly shrinking by the chosen member";
      return false;
    }
  // the choice restricted to the chain is a bijection onto the carrier
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (const auto& s : chain.sets) {
    const int x = f(s.mask());
    if (hit[static_cast<std::size_t>(x)]) {
      why = "choice repeats along the chain";
      return false;
    }
    hit[static_cast<std::size_t>(x)] = true;
  }
  for (bool h : hit)
    if (!h) {
      why = "choice misses a carrier member";
      return false;
    }
  // total-order invariants via the relation constructor
  std::vector<std::vector<bool>> le(static_cast<std::size_t>(n),
                                    std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          i == j || order.less(i, j);
  const FiniteOrder round_trip = FiniteOrder::from_relation(n, le);
  if (!(round_trip == order)) {
    why = "relation round trip";
    return false;
  }
  return true;
}

CriterionResult wellorder_from_choice_criterion(std::uint64_t seed) {
  CriterionResult r{7, "wellorder-from-choice", false, ""};
  long instances = 0;
  std::string why;
  for (int carrier = 1; carrier <= 3; ++carrier) {
    for (const auto& f : all_choice_functions(carrier)) {
      ++instances;
      if (!wellorder_instance(f, why)) {
        r.detail = "carrier " + std::to_string(carrier) + ": " + why;
        return r;
      }
    }
  }
  Rng rng(seed ^ 0x7e11ULL);
  for (int carrier = 4; carrier <= 5; ++carrier) {
    for (int trial = 0; trial < 100; ++trial) {
      ++instances;
      const ChoiceFunction f = random_choice_function(carrier, rng);
      if (!wellorder_instance(f, why)) {
        r.detail = "carrier " + std::to_string(carrier) + ": " + why;
        return r;
      }
    }
  }
  r.pass = true;
  r.detail = std::to_string(instances) +
             " choice functions (exhaustive to carrier 3, 100 sampled each above)";
  return r;
}

FormulaPtr random_positive_formula(Rng& rng, int size_budget, int visible, int max_params) {
  if (size_budget < 6 || rng.below(3) == 0) {
    const int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(visible)));
    const int j = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(visible)));
    return rng.coin() ? Formula::member(i, j) : Formula::equal(i, j);
  }
  if (size_budget >= 7 && rng.coin()) {
    const int left_budget = 3 + static_cast<int>(rng.below(
                                    static_cast<std::uint64_t>(size_budget - 1 - 3 - 3 + 1)));
    FormulaPtr l = random_positive_formula(rng, left_budget, visible, max_params);
    FormulaPtr rr = random_positive_formula(rng, size_budget - 1 - l->size(), visible, max_params);
    return rng.coin() ? Formula::conj(l, rr) : Formula::disj(l, rr);
  }
  FormulaPtr body = random_positive_formula(rng, size_budget - 3, visible + 1, max_params);
  const int choices = 2 * visible + (max_params > 0 ? 1 : 0);
  const int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(choices)));
  if (c < visible) return Formula::exists_in(visible + 1, c + 1, body);
  if (c < 2 * visible) return Formula::forall_in(visible + 1, c - visible + 1, body);
  return Formula::forall_param(visible + 1, 1, body);
}

CriterionResult specification_two_path(std::uint64_t seed) {
  CriterionResult r{8, "specification-two-path", false, ""};
  const std::vector<HfObject> pool = hierarchy(4);
  const std::vector<HfObject> u3 = hierarchy(3);
  Rng rng(seed ^ 0x5bec1fULL);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 1 + static_cast<int>(rng.below(3));
    const FormulaPtr f = random_positive_formula(rng, 9, m, 1);
    std::vector<std::vector<HfObject>> classes;
    std::vector<HfObject> param;
    const std::size_t param_size = 1 + rng.below(2);
    for (std::size_t i = 0; i < param_size; ++i) param.push_back(u3[rng.below(u3.size())]);
    classes.push_back(std::move(param));
    const HfObject c = pool[rng.below(pool.size())];
    std::vector<HfObject> sets;
    for (int i = 2; i <= m; ++i) sets.push_back(pool[rng.below(pool.size())]);
    try {
      specification_set(f, c, sets, classes);
    } catch (const std::exception& e) {
      r.detail = "trial " + std::to_string(trial) + ": " + e.what();
      return r;
    }
  }
  r.pass = true;
  r.detail = "1000 seeded instances, both routes agree";
  return r;
}

CriterionResult kuratowski_containment() {
  CriterionResult r{9, "kuratowski-square-containment", false, ""};
  long instances = 0;
  for (int n = 2; n <= 3; ++n) {
    std::vector<PointSet> family;
    for (std::uint32_t m = 1; m < (1u << n); ++m) family.emplace_back(n, m);
    const PointTopology discrete(n, family);
    for (const auto& a : discrete.closed()) {
      ++instances;
      if (!kuratowski_check(discrete, a)) {
        r.detail = "failed for a = " + a.to_string() + " on " + std::to_string(n) + " points";
        return r;
      }
    }
    ++instances;
    if (!kuratowski_check(discrete, PointSet::empty(n))) {
      r.detail = "failed for the empty set on " + std::to_string(n) + " points";
      return r;
    }
  }
  r.pass = true;
  r.detail = std::to_string(instances) + " closed sets, squares contained and closed";
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  switch (id) {
    case 1:
      return compiler_oracle_equivalence();
    case 2:
      return separation_transfer();
    case 3:
      return distributivity(seed);
    case 4:
      return ordinal_structure();
    case 5:
      return inner_model_audit();
    case 6:
      return hyperuniverse_search();
    case 7:
      return wellorder_from_choice_criterion(seed);
    case 8:
      return specification_two_path(seed);
    case 9:
      return kuratowski_containment();
    default:
      throw std::invalid_argument("run_criterion: no such criterion");
  }
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 9; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

}  // namespace settop::acceptance
