#ifndef SETTOP_STRUCTURE_HPP
#define SETTOP_STRUCTURE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "settop/formula.hpp"
#include "settop/inner_model.hpp"

namespace settop {

// A finite membership digraph: nodes are sets or atoms, an edge from i to j
// says node i has node j as an element.  Cycles are allowed; atoms have no
// outgoing edges.
struct MembershipStructure {
  int nodes = 0;
  std::vector<bool> atom;
  std::vector<std::vector<int>> elements_of;  // per node, sorted, unique
  std::optional<int> atoms_class_node;        // designated class of atoms, if any

  static MembershipStructure create(int nodes, std::vector<bool> atom,
                                    const std::vector<std::pair<int, int>>& edges);

  bool has_element(int container, int element) const;
};

// The zero condition over the digraph: no element of the node is a
// superset of it (extensions compared through edges; cycles allowed).
bool is_zero_node(const MembershipStructure& m, int node);

struct AuditReport {
  std::vector<ConditionReport> checks;
  bool all_in_bound_pass() const;
};

// When a missing witness may merely exceed the structure's horizon (for
// digraphs cut out of a rank-bounded universe), the classifier decides
// whether an absent extension counts as out-of-bound; without one, absence
// is failure.
using OobClassifier = std::function<bool(const std::vector<int>& extension)>;

// Instance-exhaustive audit of the class axioms and the finite topology /
// exponential axioms, plus specification instances for every bounded
// positive formula up to the given total AST size.
AuditReport audit_axioms(const MembershipStructure& m, int depth,
                         const OobClassifier& oob = nullptr);

// The membership digraph of an interpretation context, together with an
// out-of-bound classifier for its horizon.
MembershipStructure structure_of_context(const InterpretationContext& ctx);
OobClassifier context_horizon(const InterpretationContext& ctx);

}  // namespace settop

#endif  // SETTOP_STRUCTURE_HPP
