#ifndef SETTOP_INNER_MODEL_HPP
#define SETTOP_INNER_MODEL_HPP

#include <functional>
#include <string>
#include <vector>

#include "settop/hf.hpp"
#include "settop/ordinal.hpp"
#include "settop/point_set.hpp"

namespace settop {

// Least Z-transitive superset of a: the fixpoint adding c whenever
// c inZ b inZ result.  A set that does not extend the zero is vacuously
// Z-transitive and is returned unchanged.
HfObject trcl(const Zero& z, const HfObject& a);

bool is_z_transitive(const Zero& z, const HfObject& a);

// Z-B-pristine: a member of B via the inZ relation, or a non-atom extending
// the zero whose Z-transitive closure contains only B-members and non-atom
// zero-supersets.
bool is_pristine(const Zero& z, const std::vector<HfObject>& b, const HfObject& a);

// Z-well-foundedness, decided as acyclicity of the inZ relation on the part
// reachable downward from a.  Canonical HF objects always satisfy it; the
// check matters for structure-derived inputs.
bool is_wellfounded(const Zero& z, const HfObject& a);

// The data of an inner-model interpretation at desk scale: the ignored
// zero Z, the atoms-of-the-model B, the universe collection W and the
// injection phi on W minus B.  S-plus is the phi domain; T its image.
struct InterpretationContext {
  Zero zero = Zero::empty();
  std::vector<HfObject> atoms_b;   // B, must contain the zero's elements
  std::vector<HfObject> w_members; // W = B plus the interpreted sets
  std::vector<HfObject> phi_dom;   // S-plus, sorted canonically
  std::vector<HfObject> phi_img;   // phi(phi_dom[i]) = phi_img[i]
  int rank_bound = 0;

  std::vector<HfObject> t_family() const { return phi_img; }
};

// All Z-well-founded Z-B-pristine objects of relative rank <= rank_bound,
// with phi the identity.  Requires that no element of B is a superset of
// the zero and that B covers the zero's elements.
InterpretationContext build_w3(const Zero& z, const std::vector<HfObject>& b, int rank_bound);

enum class Verdict { Pass, Fail, Vacuous, OutOfBound };

struct ConditionReport {
  std::string name;
  long pass = 0;
  long fail = 0;
  long out_of_bound = 0;
  bool vacuous = false;
  std::vector<std::string> failure_witnesses;

  bool ok() const { return fail == 0; }
};

struct InterpretationReport {
  std::vector<ConditionReport> preconditions;
  std::vector<ConditionReport> conditions;  // the eight conditions, in order

  bool all_in_bound_pass() const;
  long total_out_of_bound() const;
};

// Evaluates the eight interpretation conditions instance-exhaustively.
// Instances whose result escapes the rank bound (the result is a pristine
// object built from in-universe material but absent from T) count as
// out-of-bound rather than failures.  K-smallness side conditions are
// vacuous under an unbounded bound and are labelled so.
InterpretationReport check_interpretation_conditions(const InterpretationContext& ctx,
                                                     const KBound& k);

}  // namespace settop

#endif  // SETTOP_INNER_MODEL_HPP
