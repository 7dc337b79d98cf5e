#include "settop/wellorder.hpp"

namespace settop {

ChoiceFunction ChoiceFunction::create(int carrier, std::map<std::uint32_t, int> pick) {
  if (carrier < 1 || carrier > 20)
    throw std::invalid_argument("ChoiceFunction: carrier size out of range (1..20)");
  ChoiceFunction f;
  f.carrier = carrier;
  f.pick = std::move(pick);
  const std::uint32_t full = (1u << carrier) - 1u;
  for (std::uint32_t m = 1; m <= full; ++m) {
    auto it = f.pick.find(m);
    if (it == f.pick.end())
      throw std::invalid_argument("ChoiceFunction: missing a nonempty subset");
    if (it->second < 0 || it->second >= carrier || !((m >> it->second) & 1u))
      throw std::invalid_argument("ChoiceFunction: chosen value is not a member");
  }
  return f;
}

int ChoiceFunction::operator()(std::uint32_t mask) const {
  auto it = pick.find(mask);
  if (it == pick.end()) throw std::invalid_argument("ChoiceFunction: not a nonempty subset");
  return it->second;
}

bool FiniteOrder::less(int a, int b) const {
  const auto pa = std::find(ranking.begin(), ranking.end(), a);
  const auto pb = std::find(ranking.begin(), ranking.end(), b);
  if (pa == ranking.end() || pb == ranking.end())
    throw std::invalid_argument("FiniteOrder: not a carrier element");
  return pa < pb;
}

FiniteOrder FiniteOrder::identity(int n) {
  FiniteOrder w;
  w.ranking.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w.ranking[static_cast<std::size_t>(i)] = i;
  return w;
}

FiniteOrder FiniteOrder::from_relation(int n, const std::vector<std::vector<bool>>& le) {
  if (static_cast<int>(le.size()) != n)
    throw std::invalid_argument("FiniteOrder: relation size mismatch");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(le[i].size()) != n)
      throw std::invalid_argument("FiniteOrder: relation size mismatch");
    if (!le[i][i]) throw std::invalid_argument("FiniteOrder: not reflexive");
    for (int j = 0; j < n; ++j) {
      if (i != j && le[i][j] && le[j][i])
        throw std::invalid_argument("FiniteOrder: not antisymmetric");
      if (!le[i][j] && !le[j][i]) throw std::invalid_argument("FiniteOrder: not total");
      for (int k = 0; k < n; ++k)
        if (le[i][j] && le[j][k] && !le[i][k])
          throw std::invalid_argument("FiniteOrder: not transitive");
    }
  }
  FiniteOrder w;
  w.ranking.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int below = 0;
    for (int j = 0; j < n; ++j)
      if (j != i && le[j][i]) ++below;
    w.ranking[static_cast<std::size_t>(below)] = i;
  }
  return w;
}

FiniteOrder wellorder_from_choice(const ChoiceFunction& f, ApproximationChain* chain) {
  const int n = f.carrier;
  FiniteOrder order;
  if (chain) chain->sets.clear();
  std::uint32_t current = (1u << n) - 1u;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  while (current != 0) {
    if (chain) chain->sets.push_back(PointSet(n, current));
    const int x = f(current);
    if (seen[static_cast<std::size_t>(x)])
      throw std::logic_error("wellorder_from_choice: choice repeated a member");
    seen[static_cast<std::size_t>(x)] = true;
    order.ranking.push_back(x);
    current &= ~(1u << x);
  }
  if (static_cast<int>(order.ranking.size()) != n)
    throw std::logic_error("wellorder_from_choice: chain did not exhaust the carrier");
  return order;
}

FiniteOrder order_sum(const FiniteOrder& a, const FiniteOrder& b) {
  FiniteOrder w;
  w.ranking = a.ranking;
  for (int x : b.ranking) w.ranking.push_back(a.size() + x);
  return w;
}

FiniteOrder order_product(const FiniteOrder& a, const FiniteOrder& b) {
  // b-many copies of a, laid out lexicographically: the pair (x in a, y in
  // b) becomes index y * |a| + x ordered by (y, x).
  FiniteOrder w;
  for (int y : b.ranking)
    for (int x : a.ranking) w.ranking.push_back(y * a.size() + x);
  return w;
}

FiniteOrder order_sup(const std::vector<FiniteOrder>& orders) {
  if (orders.empty()) throw std::invalid_argument("order_sup: empty collection");
  int best = 0;
  for (const auto& o : orders) best = std::max(best, o.size());
  return FiniteOrder::identity(best);
}

std::vector<PointSet> chain_embedding(const FiniteOrder& w) {
  const int n = w.size();
  std::vector<PointSet> out;
  PointSet acc = PointSet::empty(n);
  for (int x : w.ranking) {
    acc = acc.with(x);
    out.push_back(acc);
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (!out[i - 1].subset_of(out[i]) || out[i - 1] == out[i])
      throw std::logic_error("chain_embedding: segments are not strictly increasing");
  }
  return out;
}

}  // namespace settop
