#ifndef SETTOP_TOPOLOGY_HPP
#define SETTOP_TOPOLOGY_HPP

#include <cstdint>
#include <vector>

#include "settop/point_set.hpp"

namespace settop {

// A finite topology in the closed-set formulation: a family of nonempty
// closed subsets of an n-point space that contains the whole space and is
// closed under nonempty intersections and binary unions.  "T-closed" means
// empty or a member of the family.
class PointTopology {
public:
  PointTopology() = default;
  // Validates the three closure conditions; throws on out-of-range members,
  // returns an invalid topology only through is_topology() == false paths.
  PointTopology(int n, std::vector<PointSet> closed);

  int points() const { return n_; }
  const std::vector<PointSet>& closed() const { return closed_; }
  std::size_t closed_count() const { return closed_.size(); }
  bool is_closed(const PointSet& a) const;   // T-closed: empty or in the family
  bool in_family(const PointSet& a) const;   // strictly a member

  bool operator==(const PointTopology& o) const {
    return n_ == o.n_ && closed_ == o.closed_;
  }

private:
  int n_ = 0;
  std::vector<PointSet> closed_;           // sorted by lex_less
  std::vector<std::uint8_t> member_;       // indexed by mask when n <= 20
  std::vector<std::uint32_t> member_masks_;  // sorted masks otherwise
};

struct SeparationProfile {
  bool t0 = false;
  bool t1 = false;
  bool t2 = false;
  bool regular = false;
  bool t3 = false;
  bool normal = false;
  bool t4 = false;
};

// The three closure conditions on a candidate family (members nonempty, the
// space itself present, nonempty intersections closed-or-empty, binary
// unions closed).  Out-of-range members are malformed input and throw.
bool is_topology(int n, const std::vector<PointSet>& family);

// Least T-closed superset of a; empty iff a is empty.
PointSet closure(const PointTopology& t, const PointSet& a);

// Largest T-open subclass of a: complement of the closure of the complement.
PointSet interior(const PointTopology& t, const PointSet& a);

SeparationProfile separation_profile(const PointTopology& t);

// A is discrete when it has at most one point or every x in A admits a
// closed b with A <= b u {x} and x not in b.
bool is_discrete_subset(const PointTopology& t, const PointSet& a);

// Every cocover (subfamily with empty intersection) has a K-small
// subcocover.  Searches irredundant cocovers instead of scanning all
// subfamilies; an irredundant cocover of an n-point space has at most n
// members.
bool is_k_compact(const PointTopology& t, const KBound& k);

// Size of the largest irredundant cocover, or 0 when no cocover exists.
int max_irredundant_cocover(const PointTopology& t);

// Smallest topology containing the subbase (plus the space itself), closed
// under nonempty intersections and K-small unions.  With finite families the
// binary-union closure already subsumes every K-small union, so the bound
// only matters for interface fidelity.  max_family caps the fixpoint as a
// memory guard.
PointTopology generate_topology(int n, const std::vector<PointSet>& subbase,
                                const KBound& k,
                                std::size_t max_family = (std::size_t(1) << 20));

// All topologies on n points, each family ordered by its characteristic bit
// pattern over the canonical (ascending mask) subset ordering.  n <= 5 by
// default; the guard can be raised to 7.
std::vector<PointTopology> enumerate_topologies(int n, int guard = 5);

// Decide whether t is closed in the topology K-generated by the subbase
// without materialising the family: t is closed iff every point outside t is
// missed by some union of subbase members covering t.  Sets are index sets
// over an arbitrary ground universe.
bool closed_in_generated(const BitVec& t, const std::vector<BitVec>& subbase);

}  // namespace settop

#endif  // SETTOP_TOPOLOGY_HPP
