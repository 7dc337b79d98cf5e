#ifndef SETTOP_HYPERUNIVERSE_HPP
#define SETTOP_HYPERUNIVERSE_HPP

#include <string>
#include <vector>

#include "settop/topology.hpp"

namespace settop {

// A finite candidate for a space homeomorphic to its own exponential: the
// space, an open atom part B, and the bijection from the remaining points
// onto the hyperpoints.
struct HyperuniverseWitness {
  PointTopology space;
  PointSet atom_part;
  std::vector<int> phi;  // point of W minus B (by ascending index) -> hyperpoint

  std::string to_string() const;
};

// Exhaustive search over all compact Hausdorff topologies on up to
// max_points points, all open atom parts and all candidate point
// bijections, keeping exactly the homeomorphisms.  Deterministic order.
std::vector<HyperuniverseWitness> search_hyperuniverses(int max_points);

}  // namespace settop

#endif  // SETTOP_HYPERUNIVERSE_HPP
