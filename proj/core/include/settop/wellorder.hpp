#ifndef SETTOP_WELLORDER_HPP
#define SETTOP_WELLORDER_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "settop/point_set.hpp"

namespace settop {

// Total choice on the nonempty subsets of a carrier 0..n-1.
struct ChoiceFunction {
  int carrier = 0;
  std::map<std::uint32_t, int> pick;  // subset mask -> chosen member

  // Validates totality and membership.
  static ChoiceFunction create(int carrier, std::map<std::uint32_t, int> pick);
  int operator()(std::uint32_t mask) const;
};

// A finite total order on carrier indices, kept as the ranking from least
// to greatest.
struct FiniteOrder {
  std::vector<int> ranking;

  int size() const { return static_cast<int>(ranking.size()); }
  bool less(int a, int b) const;  // strict
  static FiniteOrder identity(int n);
  // Validates that the relation matrix is a total order and extracts it.
  static FiniteOrder from_relation(int n, const std::vector<std::vector<bool>>& le);

  bool operator==(const FiniteOrder& o) const { return ranking == o.ranking; }
};

struct ApproximationChain {
  std::vector<PointSet> sets;  // strictly shrinking from the full carrier
};

// Runs the shrinking chain a, a minus its choice, ... and ranks carrier
// members by the step at which they were chosen.  The chain is returned for
// inspection; it always ends at a singleton and the choice map restricted
// to it is a bijection onto the carrier.
FiniteOrder wellorder_from_choice(const ChoiceFunction& f, ApproximationChain* chain = nullptr);

// Functional subrelation with the same domain, picking the least second
// component in the canonical order of B.
template <typename A, typename B>
std::vector<std::pair<A, B>> uniformize(std::vector<std::pair<A, B>> relation) {
  std::sort(relation.begin(), relation.end());
  relation.erase(std::unique(relation.begin(), relation.end()), relation.end());
  std::vector<std::pair<A, B>> out;
  for (const auto& p : relation)
    if (out.empty() || !(out.back().first == p.first)) out.push_back(p);
  return out;
}

FiniteOrder order_sum(const FiniteOrder& a, const FiniteOrder& b);
FiniteOrder order_product(const FiniteOrder& a, const FiniteOrder& b);
FiniteOrder order_sup(const std::vector<FiniteOrder>& orders);

// Initial segments (-inf, x] of the order, one per element, forming a
// strictly increasing chain under inclusion.
std::vector<PointSet> chain_embedding(const FiniteOrder& w);

}  // namespace settop

#endif  // SETTOP_WELLORDER_HPP
