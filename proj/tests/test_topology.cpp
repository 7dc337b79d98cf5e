#include <doctest.h>

#include <algorithm>

#include "settop/topology.hpp"

using namespace settop;

namespace {

PointTopology chain3() {
  return PointTopology(
      3, {PointSet::of(3, {0}), PointSet::of(3, {0, 1}), PointSet::of(3, {0, 1, 2})});
}

PointTopology discrete(int n) {
  std::vector<PointSet> family;
  for (std::uint32_t m = 1; m < (1u << n); ++m) family.emplace_back(n, m);
  return PointTopology(n, family);
}

// Oracle: the full subfamily scan of the intersection condition.
bool is_topology_oracle(int n, const std::vector<PointSet>& family) {
  for (const auto& a : family)
    if (a.empty_set()) return false;
  auto member = [&](const PointSet& s) {
    return std::find(family.begin(), family.end(), s) != family.end();
  };
  if (!member(PointSet::full(n))) return false;
  const std::size_t f = family.size();
  for (std::uint32_t sel = 1; sel < (1u << f); ++sel) {
    PointSet inter = PointSet::full(n);
    for (std::size_t i = 0; i < f; ++i)
      if ((sel >> i) & 1u) inter = inter.intersect(family[i]);
    if (!inter.empty_set() && !member(inter)) return false;
  }
  for (const auto& a : family)
    for (const auto& b : family)
      if (!member(a.unite(b))) return false;
  return true;
}

// Oracle: closure by enumerating all closed supersets.
PointSet closure_oracle(const PointTopology& t, const PointSet& a) {
  if (a.empty_set()) return a;
  PointSet acc = PointSet::full(t.points());
  for (const auto& c : t.closed())
    if (a.subset_of(c)) acc = acc.intersect(c);
  return acc;
}

// Oracle: separation flags by quantifying over all open sets directly.
SeparationProfile separation_oracle(const PointTopology& t) {
  const int n = t.points();
  std::vector<PointSet> opens;
  opens.push_back(PointSet::full(n));  // complement of the empty class
  for (const auto& c : t.closed()) opens.push_back(c.complement());
  SeparationProfile p;
  auto separated = [&](const PointSet& a, const PointSet& b) {
    for (const auto& u : opens)
      for (const auto& v : opens)
        if (a.subset_of(u) && b.subset_of(v) && !u.meets(v)) return true;
    return false;
  };
  p.t0 = true;
  p.t1 = true;
  p.t2 = true;
  for (int x = 0; x < n; ++x) {
    bool singleton_closed = t.in_family(PointSet::of(n, {x}));
    p.t1 = p.t1 && singleton_closed;
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      bool distinguishable = false;
      for (const auto& u : opens)
        if (u.contains(x) != u.contains(y)) distinguishable = true;
      p.t0 = p.t0 && distinguishable;
      if (x < y)
        p.t2 = p.t2 && separated(PointSet::of(n, {x}), PointSet::of(n, {y}));
    }
  }
  p.regular = true;
  for (const auto& a : t.closed())
    for (int x = 0; x < n; ++x)
      if (!a.contains(x)) p.regular = p.regular && separated(a, PointSet::of(n, {x}));
  p.normal = true;
  for (const auto& a : t.closed())
    for (const auto& b : t.closed())
      if (!a.meets(b)) p.normal = p.normal && separated(a, b);
  p.t3 = p.regular && p.t1;
  p.t4 = p.normal && p.t1;
  return p;
}

bool profiles_equal(const SeparationProfile& a, const SeparationProfile& b) {
  return a.t0 == b.t0 && a.t1 == b.t1 && a.t2 == b.t2 && a.regular == b.regular &&
         a.t3 == b.t3 && a.normal == b.normal && a.t4 == b.t4;
}

}  // namespace

TEST_CASE("is_topology on the worked examples") {
  CHECK(is_topology(3, {PointSet::of(3, {0}), PointSet::of(3, {0, 1}),
                        PointSet::of(3, {0, 1, 2})}));
  // oracle: all subfamilies
  CHECK(is_topology_oracle(3, {PointSet::of(3, {0}), PointSet::of(3, {0, 1}),
                               PointSet::of(3, {0, 1, 2})}));
  // {0} u {1} = {0,1} = X is missing
  CHECK(!is_topology(2, {PointSet::of(2, {0}), PointSet::of(2, {1})}));
  CHECK(is_topology(1, {PointSet::of(1, {0})}));
  CHECK(!is_topology(2, {PointSet::of(2, {0}), PointSet::empty(2), PointSet::full(2)}));
  CHECK_THROWS_AS(is_topology(2, {PointSet::of(3, {0}), PointSet::full(2)}),
                  std::invalid_argument);
}

TEST_CASE("is_topology agrees with the subfamily oracle on all 3-point families") {
  for (std::uint32_t pattern = 0; pattern < (1u << 7); ++pattern) {
    std::vector<PointSet> family;
    for (int i = 0; i < 7; ++i)
      if ((pattern >> i) & 1u) family.emplace_back(3, std::uint32_t(i + 1));
    CHECK(is_topology(3, family) == is_topology_oracle(3, family));
  }
}

TEST_CASE("closure and interior on the worked examples") {
  const PointTopology t = chain3();
  CHECK(closure(t, PointSet::of(3, {1})) == PointSet::of(3, {0, 1}));
  CHECK(closure(t, PointSet::of(3, {1})) == closure_oracle(t, PointSet::of(3, {1})));
  CHECK(closure(t, PointSet::empty(3)) == PointSet::empty(3));
  CHECK(closure(t, PointSet::full(3)) == PointSet::full(3));
  // the largest open subclass of {1,2}: its complement {0} is closed, so
  // {1,2} is already open (oracle: enumerate the four open sets)
  CHECK(interior(t, PointSet::of(3, {1, 2})) == PointSet::of(3, {1, 2}));
  CHECK(interior(t, PointSet::of(3, {2})) == PointSet::of(3, {2}));
  CHECK(interior(t, PointSet::of(3, {0, 1})) == PointSet::empty(3));
  CHECK(interior(t, PointSet::full(3)) == PointSet::full(3));
  CHECK(interior(t, PointSet::empty(3)) == PointSet::empty(3));
}

TEST_CASE("closure is extensive, idempotent and monotone over all small topologies") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_topologies(n)) {
      for (std::uint32_t am = 0; am < (1u << n); ++am) {
        const PointSet a(n, am);
        const PointSet cl = closure(t, a);
        CHECK(a.subset_of(cl));
        CHECK(closure(t, cl) == cl);
        CHECK(t.is_closed(cl));
        for (std::uint32_t bm = 0; bm < (1u << n); ++bm) {
          const PointSet b(n, bm);
          if (a.subset_of(b)) CHECK(cl.subset_of(closure(t, b)));
        }
        // interior agrees with its complement formulation by construction;
        // check both computations coincide
        CHECK(interior(t, a) == closure(t, a.complement()).complement());
      }
    }
  }
}

TEST_CASE("separation profile on the worked examples") {
  const SeparationProfile d2 = separation_profile(discrete(2));
  CHECK(d2.t0);
  CHECK(d2.t1);
  CHECK(d2.t2);
  CHECK(d2.regular);
  CHECK(d2.t3);
  CHECK(d2.normal);
  CHECK(d2.t4);

  const PointTopology sierpinski(2, {PointSet::of(2, {0}), PointSet::full(2)});
  const SeparationProfile sp = separation_profile(sierpinski);
  CHECK(sp.t0);
  CHECK(!sp.t1);

  const SeparationProfile cp = separation_profile(chain3());
  CHECK(cp.t0);
  CHECK(!cp.t1);
}

TEST_CASE("separation profile agrees with the open-set oracle on all small topologies") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& t : enumerate_topologies(n))
      CHECK(profiles_equal(separation_profile(t), separation_oracle(t)));
}

TEST_CASE("t1 implies discrete at finite scale") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_topologies(n)) {
      if (!separation_profile(t).t1) continue;
      CHECK(t.closed_count() == (std::size_t(1) << n) - 1);
    }
}

TEST_CASE("discreteness of subsets, both characterisations") {
  const PointTopology t = chain3();
  CHECK(!is_discrete_subset(t, PointSet::of(3, {0, 1})));
  CHECK(is_discrete_subset(t, PointSet::of(3, {1})));
  CHECK(is_discrete_subset(discrete(3), PointSet::full(3)));

  // oracle: every nonempty subset is relatively closed
  for (int n = 1; n <= 3; ++n)
    for (const auto& topo : enumerate_topologies(n))
      for (std::uint32_t am = 0; am < (1u << n); ++am) {
        const PointSet a(n, am);
        bool all_relative = true;
        for (std::uint32_t sm = 1; sm < (1u << n); ++sm) {
          const PointSet s(n, sm);
          if (!s.subset_of(a)) continue;
          bool relative = false;
          for (const auto& c : topo.closed())
            if (a.intersect(c) == s) relative = true;
          if (a.intersect(PointSet::empty(n)) == s) relative = true;
          all_relative = all_relative && relative;
        }
        CHECK(is_discrete_subset(topo, a) == all_relative);
      }
}

TEST_CASE("k-compactness on the worked examples") {
  CHECK(is_k_compact(chain3(), KBound::unbounded()));
  CHECK(!is_k_compact(discrete(3), KBound::of(2)));
  CHECK(is_k_compact(PointTopology(1, {PointSet::full(1)}), KBound::of(1)));

  // oracle: scan every subfamily for the worst minimal subcocover
  for (int n = 1; n <= 3; ++n)
    for (const auto& t : enumerate_topologies(n)) {
      const std::size_t f = t.closed_count();
      for (std::uint32_t k = 1; k <= 5; ++k) {
        bool oracle = true;
        for (std::uint32_t sel = 1; sel < (1u << f); ++sel) {
          PointSet inter = PointSet::full(n);
          for (std::size_t i = 0; i < f; ++i)
            if ((sel >> i) & 1u) inter = inter.intersect(t.closed()[i]);
          if (!inter.empty_set()) continue;
          // the subfamily sel is a cocover; find its smallest subcocover
          int best = n + 1;
          for (std::uint32_t sub = 1; sub < (1u << f); ++sub) {
            if ((sub & sel) != sub) continue;
            PointSet si = PointSet::full(n);
            for (std::size_t i = 0; i < f; ++i)
              if ((sub >> i) & 1u) si = si.intersect(t.closed()[i]);
            if (si.empty_set()) best = std::min(best, __builtin_popcount(sub));
          }
          if (static_cast<std::uint32_t>(best) >= k) oracle = false;
        }
        CHECK(is_k_compact(t, KBound::of(k)) == oracle);
      }
    }
}

TEST_CASE("generate_topology on the worked examples") {
  const PointTopology d = generate_topology(2, {PointSet::of(2, {0}), PointSet::of(2, {1})},
                                            KBound::unbounded());
  CHECK(d.closed_count() == 3);

  const PointTopology g =
      generate_topology(3, {PointSet::of(3, {0, 1}), PointSet::of(3, {1, 2})},
                        KBound::unbounded());
  CHECK(g.closed_count() == 4);
  CHECK(g.in_family(PointSet::of(3, {1})));
  CHECK(g.in_family(PointSet::of(3, {0, 1})));
  CHECK(g.in_family(PointSet::of(3, {1, 2})));
  CHECK(g.in_family(PointSet::full(3)));

  const PointTopology lone = generate_topology(1, {}, KBound::unbounded());
  CHECK(lone.closed_count() == 1);

  CHECK_THROWS_AS(generate_topology(2, {PointSet::empty(2)}, KBound::unbounded()),
                  std::invalid_argument);
}

TEST_CASE("generated topology is the least one containing the subbase") {
  for (int n = 1; n <= 3; ++n) {
    // a few deterministic subbases per n
    std::vector<std::vector<PointSet>> subbases;
    for (std::uint32_t a = 1; a < (1u << n); ++a)
      for (std::uint32_t b = a; b < (1u << n); ++b)
        subbases.push_back({PointSet(n, a), PointSet(n, b)});
    for (const auto& sb : subbases) {
      const PointTopology g = generate_topology(n, sb, KBound::unbounded());
      for (const auto& s : sb) CHECK(g.in_family(s));
      // no proper subfamily containing the subbase is a topology
      const auto& family = g.closed();
      const std::size_t f = family.size();
      REQUIRE(f <= 12);
      for (std::uint32_t sel = 0; sel < (1u << f); ++sel) {
        if (sel == (1u << f) - 1) continue;
        std::vector<PointSet> candidate;
        for (std::size_t i = 0; i < f; ++i)
          if ((sel >> i) & 1u) candidate.push_back(family[i]);
        bool covers_subbase = true;
        for (const auto& s : sb)
          covers_subbase = covers_subbase &&
                           std::find(candidate.begin(), candidate.end(), s) != candidate.end();
        if (covers_subbase) CHECK(!is_topology(n, candidate));
      }
      // base property: every member is an intersection of unions of
      // subbase members
      for (const auto& member : g.closed()) {
        PointSet inter = PointSet::full(n);
        for (std::uint32_t sel = 1; sel < (1u << sb.size()); ++sel) {
          PointSet uni = PointSet::empty(n);
          for (std::size_t i = 0; i < sb.size(); ++i)
            if ((sel >> i) & 1u) uni = uni.unite(sb[i]);
          if (member.subset_of(uni)) inter = inter.intersect(uni);
        }
        CHECK(inter == member);
      }
    }
  }
}

TEST_CASE("topology enumeration counts") {
  CHECK(enumerate_topologies(1).size() == 1);
  CHECK(enumerate_topologies(2).size() == 4);
  CHECK(enumerate_topologies(3).size() == 29);
  CHECK(enumerate_topologies(4).size() == 355);
  CHECK(enumerate_topologies(5).size() == 6942);  // regression
  CHECK_THROWS_AS(enumerate_topologies(6), std::invalid_argument);
  for (const auto& t : enumerate_topologies(3)) CHECK(is_topology(3, t.closed()));
}

TEST_CASE("five point enumeration agrees with the filter on a sample") {
  // every preorder-derived family passes is_topology, and the enumeration
  // is strictly ordered by characteristic pattern
  const auto all = enumerate_topologies(5);
  auto pattern = [](const PointTopology& t) {
    std::uint64_t p = 0;
    for (const auto& c : t.closed()) p |= std::uint64_t(1) << (c.mask() - 1);
    return p;
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(is_topology(5, all[i].closed()));
    if (i > 0) CHECK(pattern(all[i - 1]) < pattern(all[i]));
  }
}

TEST_CASE("closedness in a generated topology without materialising") {
  // cross-check against the materialised family on 3-point subbases
  for (std::uint32_t a = 1; a < 8; ++a)
    for (std::uint32_t b = 1; b < 8; ++b) {
      const std::vector<PointSet> sb = {PointSet(3, a), PointSet(3, b)};
      const PointTopology g = generate_topology(3, sb, KBound::unbounded());
      std::vector<BitVec> subbase_bits;
      for (const auto& s : sb) {
        BitVec v(3);
        for (int i : s.indices()) v.set(static_cast<std::size_t>(i));
        subbase_bits.push_back(v);
      }
      for (std::uint32_t tm = 0; tm < 8; ++tm) {
        BitVec t(3);
        for (int i = 0; i < 3; ++i)
          if ((tm >> i) & 1u) t.set(static_cast<std::size_t>(i));
        const bool expected = tm == 0 || g.in_family(PointSet(3, tm));
        CHECK(closed_in_generated(t, subbase_bits) == expected);
      }
    }
}
