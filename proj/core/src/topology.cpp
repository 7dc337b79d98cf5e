#include "settop/topology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace settop {

namespace {

void check_range(int n, const std::vector<PointSet>& family) {
  for (const auto& a : family)
    if (a.space_size() != n)
      throw std::invalid_argument("topology: family member not over the ambient space");
}

std::vector<PointSet> sorted_unique(std::vector<PointSet> family) {
  std::sort(family.begin(), family.end(), lex_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

}  // namespace

bool is_topology(int n, const std::vector<PointSet>& family) {
  check_range(n, family);
  if (n < 1) return false;
  const bool flat = n <= 20;
  std::vector<std::uint8_t> table(flat ? (std::size_t(1) << n) : 0, 0);
  std::unordered_set<std::uint32_t> members;
  for (const auto& a : family) {
    if (a.empty_set()) return false;
    if (flat)
      table[a.mask()] = 1;
    else
      members.insert(a.mask());
  }
  auto in_family = [&](std::uint32_t m) {
    return flat ? table[m] != 0 : members.count(m) != 0;
  };
  if (!in_family(PointSet::full(n).mask())) return false;
  // Pairwise checks suffice for finite families: any subfamily intersection
  // is a fold of binary ones, and empties stay empty.
  for (const auto& a : family) {
    for (const auto& b : family) {
      const std::uint32_t inter = a.mask() & b.mask();
      if (inter != 0 && !in_family(inter)) return false;
      if (!in_family(a.mask() | b.mask())) return false;
    }
  }
  return true;
}

PointTopology::PointTopology(int n, std::vector<PointSet> closed) : n_(n) {
  closed_ = sorted_unique(std::move(closed));
  if (!is_topology(n_, closed_))
    throw std::invalid_argument("PointTopology: family violates the closure conditions");
  if (n_ <= 20) {
    member_.assign(std::size_t(1) << n_, 0);
    for (const auto& a : closed_) member_[a.mask()] = 1;
  } else {
    member_masks_.reserve(closed_.size());
    for (const auto& a : closed_) member_masks_.push_back(a.mask());
    std::sort(member_masks_.begin(), member_masks_.end());
  }
}

bool PointTopology::in_family(const PointSet& a) const {
  if (a.space_size() != n_) throw std::invalid_argument("topology: set not over the ambient space");
  if (!member_.empty()) return member_[a.mask()] != 0;
  return std::binary_search(member_masks_.begin(), member_masks_.end(), a.mask());
}

bool PointTopology::is_closed(const PointSet& a) const {
  return a.empty_set() || in_family(a);
}

PointSet closure(const PointTopology& t, const PointSet& a) {
  if (a.space_size() != t.points())
    throw std::invalid_argument("closure: set not over the ambient space");
  if (a.empty_set()) return a;
  PointSet acc = PointSet::full(t.points());
  for (const auto& c : t.closed())
    if (a.subset_of(c)) acc = acc.intersect(c);
  return acc;
}

PointSet interior(const PointTopology& t, const PointSet& a) {
  return closure(t, a.complement()).complement();
}

namespace {

// f[S] = union of all family members contained in S, for every mask S.
// Superset DP; linear in n * 2^n.
std::vector<std::uint32_t> union_of_contained(const PointTopology& t) {
  const int n = t.points();
  std::vector<std::uint32_t> f(std::size_t(1) << n, 0);
  for (const auto& c : t.closed()) f[c.mask()] = c.mask();
  for (std::uint32_t s = 0; s < f.size(); ++s)
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1u) f[s] |= f[s & ~(1u << i)];
  return f;
}

}  // namespace

SeparationProfile separation_profile(const PointTopology& t) {
  const int n = t.points();
  if (n > 20)
    throw std::invalid_argument("separation_profile: space too large for the mask tables");
  const std::uint32_t full = PointSet::full(n).mask();
  SeparationProfile p;
  const auto f = union_of_contained(t);

  p.t0 = true;
  for (int x = 0; x < n && p.t0; ++x)
    for (int y = x + 1; y < n && p.t0; ++y) {
      bool distinguishable = false;
      for (const auto& c : t.closed()) {
        if (c.contains(x) != c.contains(y)) {
          distinguishable = true;
          break;
        }
      }
      p.t0 = distinguishable;
    }

  p.t1 = true;
  for (int x = 0; x < n && p.t1; ++x)
    p.t1 = t.in_family(PointSet::of(n, {x}));

  // Disjoint open separation of x and y exists iff the maximal closed sets
  // avoiding each jointly cover the space.
  p.t2 = true;
  for (int x = 0; x < n && p.t2; ++x)
    for (int y = x + 1; y < n && p.t2; ++y)
      p.t2 = (f[full & ~(1u << x)] | f[full & ~(1u << y)]) == full;

  p.regular = true;
  for (const auto& a : t.closed()) {
    for (int x = 0; x < n && p.regular; ++x) {
      if (a.contains(x)) continue;
      p.regular = (f[full & ~a.mask()] | f[full & ~(1u << x)]) == full;
    }
    if (!p.regular) break;
  }

  // h[S] = intersection of f[complement(B)] over family members B inside S.
  std::vector<std::uint32_t> h(std::size_t(1) << n, full);
  for (std::uint32_t s = 0; s < h.size(); ++s) {
    if (t.in_family(PointSet(n, s))) h[s] = f[full & ~s];
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1u) h[s] &= h[s & ~(1u << i)];
  }
  p.normal = true;
  for (const auto& a : t.closed()) {
    const std::uint32_t rest = full & ~a.mask();
    if ((full & ~f[rest] & ~h[rest]) != 0) {
      p.normal = false;
      break;
    }
  }

  p.t3 = p.regular && p.t1;
  p.t4 = p.normal && p.t1;
  return p;
}

bool is_discrete_subset(const PointTopology& t, const PointSet& a) {
  if (a.space_size() != t.points())
    throw std::invalid_argument("is_discrete_subset: set not over the ambient space");
  if (a.size() <= 1) return true;
  for (int x : a.indices()) {
    bool found = false;
    for (const auto& b : t.closed()) {
      if (!b.contains(x) && a.minus(b).subset_of(PointSet::of(a.space_size(), {x}))) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

struct CocoverSearch {
  const std::vector<PointSet>* family;
  std::uint32_t full;
  int n;
  int best = 0;

  // chosen members plus, for each, its private region: points in every other
  // chosen member but not in it.  A minimal cocover keeps all regions
  // nonempty until the running intersection empties out.
  void dfs(std::size_t next, std::uint32_t inter, std::vector<std::uint32_t>& priv,
           std::vector<std::uint32_t>& chosen) {
    if (inter == 0) {
      best = std::max(best, static_cast<int>(chosen.size()));
      return;
    }
    if (static_cast<int>(chosen.size()) >= n) return;
    for (std::size_t i = next; i < family->size(); ++i) {
      const std::uint32_t c = (*family)[i].mask();
      const std::uint32_t priv_new = inter & ~c;
      if (priv_new == 0) continue;  // c would be redundant
      bool ok = true;
      for (std::size_t j = 0; j < chosen.size() && ok; ++j)
        ok = (priv[j] & c) != 0;
      if (!ok) continue;
      std::vector<std::uint32_t> priv2(chosen.size() + 1);
      for (std::size_t j = 0; j < chosen.size(); ++j) priv2[j] = priv[j] & c;
      priv2[chosen.size()] = priv_new;
      chosen.push_back(c);
      dfs(i + 1, inter & c, priv2, chosen);
      chosen.pop_back();
    }
  }
};

}  // namespace

int max_irredundant_cocover(const PointTopology& t) {
  CocoverSearch s;
  s.family = &t.closed();
  s.n = t.points();
  s.full = PointSet::full(t.points()).mask();
  std::vector<std::uint32_t> priv, chosen;
  s.dfs(0, s.full, priv, chosen);
  return s.best;
}

bool is_k_compact(const PointTopology& t, const KBound& k) {
  if (k.is_unbounded()) return true;
  // Every cocover contains an irredundant subcocover, and an irredundant
  // cocover is its own only minimal one; so compactness is decided by the
  // largest irredundant cocover.
  const int worst = max_irredundant_cocover(t);
  return worst == 0 || k.small(static_cast<std::size_t>(worst));
}

PointTopology generate_topology(int n, const std::vector<PointSet>& subbase, const KBound& k,
                                std::size_t max_family) {
  (void)k;  // every K-small union is a fold of binary unions at finite scale
  check_range(n, subbase);
  for (const auto& s : subbase)
    if (s.empty_set()) throw std::invalid_argument("generate_topology: empty subbase member");
  const bool flat = n <= 20;
  std::vector<std::uint8_t> table(flat ? (std::size_t(1) << n) : 0, 0);
  std::unordered_set<std::uint32_t> members;
  std::vector<std::uint32_t> work;
  auto add = [&](std::uint32_t m) {
    if (m == 0) return;
    const bool fresh = flat ? table[m] == 0 : members.insert(m).second;
    if (flat && fresh) table[m] = 1;
    if (fresh) {
      work.push_back(m);
      if (work.size() > max_family)
        throw std::runtime_error("generate_topology: family exceeds the size cap");
    }
  };
  add(PointSet::full(n).mask());
  for (const auto& s : subbase) add(s.mask());
  for (std::size_t i = 0; i < work.size(); ++i) {
    const std::uint32_t a = work[i];
    // combining with everything discovered so far (including later finds)
    // still reaches the fixpoint: every pair gets visited from its second
    // member's turn
    for (std::size_t j = 0; j <= i; ++j) {
      add(a | work[j]);
      add(a & work[j]);
    }
  }
  std::vector<PointSet> family;
  family.reserve(work.size());
  for (auto m : work) family.emplace_back(n, m);
  return PointTopology(n, std::move(family));
}

namespace {

// Preorders on n points, encoded as pred[y] = bitmask of x with x <= y.
// Finite topologies are exactly the families of down-sets of a preorder.
void preorder_topologies(int n, std::vector<std::vector<PointSet>>& out) {
  const int off_diag = n * (n - 1);
  std::vector<std::pair<int, int>> slots;
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if (x != y) slots.emplace_back(x, y);
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << off_diag); ++bits) {
    std::vector<std::uint32_t> pred(n);
    for (int y = 0; y < n; ++y) pred[y] = 1u << y;
    for (int s = 0; s < off_diag; ++s)
      if ((bits >> s) & 1u) pred[slots[s].second] |= 1u << slots[s].first;
    bool transitive = true;
    for (int z = 0; z < n && transitive; ++z)
      for (int y = 0; y < n && transitive; ++y)
        if ((pred[z] >> y) & 1u) transitive = (pred[y] & ~pred[z]) == 0;
    if (!transitive) continue;
    std::vector<PointSet> family;
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
      bool down = true;
      for (int y = 0; y < n && down; ++y)
        if ((m >> y) & 1u) down = (pred[y] & ~m) == 0;
      if (down) family.emplace_back(n, m);
    }
    out.push_back(std::move(family));
  }
}

std::uint64_t family_pattern(const std::vector<PointSet>& family) {
  std::uint64_t pattern = 0;
  for (const auto& a : family) pattern |= std::uint64_t(1) << (a.mask() - 1);
  return pattern;
}

}  // namespace

std::vector<PointTopology> enumerate_topologies(int n, int guard) {
  if (n < 1) throw std::invalid_argument("enumerate_topologies: need at least one point");
  if (n > guard || n > 5)
    throw std::invalid_argument("enumerate_topologies: refusing more than 5 points");
  std::vector<PointTopology> out;
  if (n <= 4) {
    // Direct filter in characteristic-pattern order: bit i of the pattern is
    // the subset with mask i+1.
    const int subsets = (1 << n) - 1;
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t(1) << subsets); ++pattern) {
      std::vector<PointSet> family;
      for (int i = 0; i < subsets; ++i)
        if ((pattern >> i) & 1u) family.emplace_back(n, std::uint32_t(i + 1));
      if (is_topology(n, family)) out.emplace_back(n, std::move(family));
    }
    return out;
  }
  std::vector<std::vector<PointSet>> families;
  preorder_topologies(n, families);
  std::sort(families.begin(), families.end(),
            [](const std::vector<PointSet>& a, const std::vector<PointSet>& b) {
              return family_pattern(a) < family_pattern(b);
            });
  out.reserve(families.size());
  for (auto& f : families) out.emplace_back(n, std::move(f));
  return out;
}

bool closed_in_generated(const BitVec& t, const std::vector<BitVec>& subbase) {
  const std::size_t n = t.size();
  for (std::size_t p = 0; p < n; ++p) {
    if (t.test(p)) continue;
    BitVec u(n);
    for (const auto& s : subbase)
      if (!s.test(p)) u |= s;
    if (!t.subset_of(u)) return false;
  }
  return true;
}

}  // namespace settop
