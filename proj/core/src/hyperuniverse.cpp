#include "settop/hyperuniverse.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "settop/hyperspace.hpp"

namespace settop {

std::string HyperuniverseWitness::to_string() const {
  std::string s = "points=" + std::to_string(space.points()) + " closed={";
  bool first = true;
  for (const auto& c : space.closed()) {
    if (!first) s += ",";
    s += c.to_string();
    first = false;
  }
  s += "} atoms=" + atom_part.to_string() + " phi=[";
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(phi[i]);
  }
  return s + "]";
}

namespace {

// The subspace family on carrier: nonempty traces of closed sets.
std::vector<PointSet> subspace_family(const PointTopology& t, const PointSet& carrier) {
  std::set<std::uint32_t> seen;
  std::vector<PointSet> out;
  for (const auto& c : t.closed()) {
    const PointSet trace = c.intersect(carrier);
    if (!trace.empty_set() && seen.insert(trace.mask()).second) out.push_back(trace);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace

std::vector<HyperuniverseWitness> search_hyperuniverses(int max_points) {
  if (max_points < 1 || max_points > 4)
    throw std::invalid_argument("search_hyperuniverses: point budget out of range (1..4)");
  std::vector<HyperuniverseWitness> witnesses;
  for (int n = 1; n <= max_points; ++n) {
    for (const auto& t : enumerate_topologies(n)) {
      if (!separation_profile(t).t2) continue;
      if (!is_k_compact(t, KBound::unbounded())) continue;
      const HyperSpace exp = exp_space(t, KBound::unbounded());
      const int hyper_count = static_cast<int>(exp.points.size());
      // Every subset is a candidate atom part as long as it is open.
      for (std::uint32_t bmask = 0; bmask < (1u << n); ++bmask) {
        const PointSet b(n, bmask);
        if (!t.is_closed(b.complement())) continue;  // B must be open
        const PointSet carrier = b.complement();
        if (carrier.size() != hyper_count) continue;
        const std::vector<int> carrier_points = carrier.indices();
        const std::vector<PointSet> dom_family = subspace_family(t, carrier);

        std::vector<int> perm(static_cast<std::size_t>(hyper_count));
        for (int i = 0; i < hyper_count; ++i) perm[static_cast<std::size_t>(i)] = i;
        do {
          // perm maps the k-th carrier point to hyperpoint perm[k];
          // a homeomorphism carries the subspace family exactly onto the
          // exponential family.
          std::set<std::uint32_t> image_family;
          for (const auto& s : dom_family) {
            PointSet img = PointSet::empty(hyper_count);
            for (int k = 0; k < hyper_count; ++k)
              if (s.contains(carrier_points[static_cast<std::size_t>(k)]))
                img = img.with(perm[static_cast<std::size_t>(k)]);
            image_family.insert(img.mask());
          }
          std::set<std::uint32_t> exp_family;
          for (const auto& c : exp.topology.closed()) exp_family.insert(c.mask());
          if (image_family == exp_family) {
            HyperuniverseWitness w;
            w.space = t;
            w.atom_part = b;
            w.phi = perm;
            witnesses.push_back(std::move(w));
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
  return witnesses;
}

}  // namespace settop
