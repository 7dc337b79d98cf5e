#include "settop/hyperspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace settop {

int HyperSpace::index_of(const PointSet& closed_set) const {
  auto it = std::lower_bound(points.begin(), points.end(), closed_set, lex_less);
  if (it == points.end() || !(*it == closed_set))
    throw std::invalid_argument("HyperSpace: not a hyperpoint");
  return static_cast<int>(it - points.begin());
}

std::vector<PointSet> box(const PointTopology& base, const PointSet& a) {
  if (a.space_size() != base.points())
    throw std::invalid_argument("box: set not over the base space");
  std::vector<PointSet> out;
  for (const auto& b : base.closed())
    if (b.subset_of(a)) out.push_back(b);
  return out;
}

std::vector<PointSet> diamond(const PointTopology& base, const PointSet& a) {
  if (a.space_size() != base.points())
    throw std::invalid_argument("diamond: set not over the base space");
  std::vector<PointSet> out;
  for (const auto& b : base.closed())
    if (b.meets(a)) out.push_back(b);
  return out;
}

HyperSpace exp_space(const PointTopology& base, const KBound& k, std::size_t max_family) {
  HyperSpace h;
  h.base = base;
  h.points = base.closed();  // already lex-sorted
  const int m = static_cast<int>(h.points.size());
  if (m > PointSet::kMaxPoints)
    throw std::runtime_error("exp_space: too many hyperpoints to materialise");

  auto as_index_set = [&](const std::vector<PointSet>& sets) {
    PointSet s = PointSet::empty(m);
    for (const auto& c : sets) s = s.with(h.index_of(c));
    return s;
  };

  std::vector<PointSet> subbase;
  for (const auto& a : base.closed()) {
    const PointSet box_a = as_index_set(box(base, a));
    for (const auto& b : base.closed()) {
      const PointSet dia_b = as_index_set(diamond(base, b));
      const PointSet s = box_a.intersect(dia_b);
      if (!s.empty_set()) subbase.push_back(s);
    }
  }
  h.topology = generate_topology(m, subbase, k, max_family);
  return h;
}

bool is_continuous(const std::vector<int>& base_f, const PointTopology& x,
                   const PointTopology& y) {
  if (static_cast<int>(base_f.size()) != x.points())
    throw std::invalid_argument("exp_map: table size does not match the domain");
  for (int v : base_f)
    if (v < 0 || v >= y.points())
      throw std::invalid_argument("exp_map: table value outside the codomain");
  for (const auto& c : y.closed()) {
    PointSet pre = PointSet::empty(x.points());
    for (int p = 0; p < x.points(); ++p)
      if (c.contains(base_f[p])) pre = pre.with(p);
    if (!x.is_closed(pre)) return false;
  }
  return true;
}

PointSet exp_map(const std::vector<int>& base_f, const PointTopology& x,
                 const PointTopology& y, const PointSet& a) {
  if (!is_continuous(base_f, x, y))
    throw std::invalid_argument("exp_map: base map is not continuous");
  if (!x.in_family(a)) throw std::invalid_argument("exp_map: argument is not a hyperpoint");
  PointSet image = PointSet::empty(y.points());
  for (int p : a.indices()) image = image.with(base_f[p]);
  if (!y.in_family(image))
    throw std::runtime_error("exp_map: image of a closed set is not closed in the codomain");
  return image;
}

namespace {

// Hyperpoints of the double exponential are the nonempty closed sets of
// Exp(base).  They are handled as indices into that family; collections of
// them live in BitVecs.
struct DoubleExp {
  HyperSpace exp;                 // Exp(base), materialised
  std::vector<PointSet> points2;  // closed sets of exp.topology = Exp^2 points

  explicit DoubleExp(const PointTopology& base)
      : exp(exp_space(base, KBound::unbounded())) {
    points2 = exp.topology.closed();
  }

  int index2(const PointSet& c) const {
    auto it = std::lower_bound(points2.begin(), points2.end(), c, lex_less);
    if (it == points2.end() || !(*it == c))
      throw std::invalid_argument("double exponential: not a point");
    return static_cast<int>(it - points2.begin());
  }

  std::vector<BitVec> subbase2() const {
    std::vector<BitVec> out;
    const std::size_t n2 = points2.size();
    for (const auto& a : points2) {
      for (const auto& b : points2) {
        BitVec s(n2);
        bool nonempty = false;
        for (std::size_t i = 0; i < n2; ++i) {
          if (points2[i].subset_of(a) && points2[i].meets(b)) {
            s.set(i);
            nonempty = true;
          }
        }
        if (nonempty) out.push_back(std::move(s));
      }
    }
    return out;
  }
};

}  // namespace

bool kuratowski_check(const PointTopology& base, const PointSet& a) {
  if (!separation_profile(base).t2)
    throw std::invalid_argument("kuratowski_check: base space must be Hausdorff");
  if (!base.is_closed(a)) throw std::invalid_argument("kuratowski_check: a must be closed");
  if (a.empty_set()) return true;

  DoubleExp d(base);
  const std::size_t n2 = d.points2.size();
  const int m = static_cast<int>(d.exp.points.size());

  // Encode a^2 as Kuratowski pairs {{x},{x,y}} over hyperpoint indices.
  BitVec a_sq(n2);
  for (int x : a.indices()) {
    for (int y : a.indices()) {
      const int sx = d.exp.index_of(PointSet::of(base.points(), {x}));
      PointSet pair_point = PointSet::of(m, {sx});
      if (y != x) {
        const PointSet xy = PointSet::of(base.points(), {x}).with(y);
        pair_point = pair_point.with(d.exp.index_of(xy));
      }
      a_sq.set(static_cast<std::size_t>(d.index2(pair_point)));
    }
  }

  // s = box_{<=2} box_{<=2} a n diamond box_{<=1} a inside Exp^2.
  BitVec s(n2);
  for (std::size_t i = 0; i < n2; ++i) {
    const PointSet& c = d.points2[i];
    if (c.size() > 2) continue;
    bool all_small_subsets = true;
    bool has_singleton_subset = false;
    for (int idx : c.indices()) {
      const PointSet& member = d.exp.points[idx];
      if (!(member.subset_of(a) && member.size() <= 2)) {
        all_small_subsets = false;
        break;
      }
      if (member.subset_of(a) && member.size() <= 1) has_singleton_subset = true;
    }
    if (all_small_subsets && has_singleton_subset) s.set(i);
  }

  if (!a_sq.subset_of(s)) return false;
  return closed_in_generated(a_sq, d.subbase2());
}

}  // namespace settop
