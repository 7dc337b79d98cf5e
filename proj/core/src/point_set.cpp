#include "settop/point_set.hpp"

namespace settop {

bool lex_less(const PointSet& a, const PointSet& b) {
  const std::uint32_t ma = a.mask(), mb = b.mask();
  if (ma == mb) return false;
  // Compare ascending index sequences without materialising them: the first
  // differing index decides; a set that is a strict prefix comes first.
  std::uint32_t diff = ma ^ mb;
  int first_diff = __builtin_ctz(diff);
  // Indices below first_diff agree.  If a has first_diff, then b's sequence
  // either ends here (prefix, b first) or continues with a larger index.
  if ((ma >> first_diff) & 1u) {
    // b lacks first_diff: b has no further index below first_diff; if b has
    // anything above, its next index is larger, so a < b; if b is a prefix,
    // b < a.
    return (mb >> first_diff) != 0;
  }
  return (ma >> first_diff) == 0;
}

}  // namespace settop
