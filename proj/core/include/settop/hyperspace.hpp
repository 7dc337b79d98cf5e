#ifndef SETTOP_HYPERSPACE_HPP
#define SETTOP_HYPERSPACE_HPP

#include <vector>

#include "settop/point_set.hpp"
#include "settop/topology.hpp"

namespace settop {

// Exponential space of a finite base topology.  Hyperpoints are the
// nonempty closed sets of the base, in lexicographic order, so the same
// topology engine serves both levels and Exp(Exp(X)) needs no new machinery.
// At finite scale every closed set is K-compact, so Exp and its compact
// subspace coincide.
struct HyperSpace {
  PointTopology base;
  std::vector<PointSet> points;  // hyperpoint i denotes this closed set
  PointTopology topology;       // over hyperpoint indices

  int index_of(const PointSet& closed_set) const;
};

// All nonempty closed subsets of a (the box operator), lex-sorted.
std::vector<PointSet> box(const PointTopology& base, const PointSet& a);

// All closed sets meeting a (the diamond operator), lex-sorted.
std::vector<PointSet> diamond(const PointTopology& base, const PointSet& a);

// Topology generated by the subbase of box(a) n diamond(b) over closed a, b;
// empty subbase members are dropped.  max_family guards the fixpoint.
HyperSpace exp_space(const PointTopology& base, const KBound& k,
                     std::size_t max_family = (std::size_t(1) << 20));

// Image of a hyperpoint under a continuous point map.  Throws if the map is
// not continuous, or if the image fails to be closed in the codomain.
PointSet exp_map(const std::vector<int>& base_f, const PointTopology& x,
                 const PointTopology& y, const PointSet& a);

bool is_continuous(const std::vector<int>& base_f, const PointTopology& x,
                   const PointTopology& y);

// Kuratowski-square containment: encodes a^2 (pairs over a) inside
// Exp(Exp(base)) and checks that it sits inside
// box_{<=2} box_{<=2} a n diamond box_{<=1} a and is closed there.  The
// double exponential is never materialised; closedness is decided against
// the generating subbase.  Requires a Hausdorff base and closed a.
bool kuratowski_check(const PointTopology& base, const PointSet& a);

}  // namespace settop

#endif  // SETTOP_HYPERSPACE_HPP
