#ifndef SETTOP_IO_HPP
#define SETTOP_IO_HPP

#include <string>
#include <vector>

#include "settop/formula.hpp"
#include "settop/hyperspace.hpp"
#include "settop/structure.hpp"
#include "settop/topology.hpp"
#include "settop/wellorder.hpp"

namespace settop {

// Space files: {"points": n, "closed": [[indices...], ...]} with ascending
// indices and families sorted lexicographically; serialisation is
// byte-stable.
PointTopology load_space(const std::string& json_text);
std::string save_space(const PointTopology& t);

// Hyperspace export: the base space, the hyperpoint table and the topology
// over hyperpoint indices.
std::string save_hyperspace(const HyperSpace& h);

// Point maps: {"from": n, "to": m, "table": [y0, y1, ...]}.
std::vector<int> load_map(const std::string& json_text, int* from = nullptr, int* to = nullptr);

// Structure files: {"nodes": n, "atom": [...], "edges": [[container,
// element], ...]}.
MembershipStructure load_structure(const std::string& json_text);
std::string save_structure(const MembershipStructure& m);

// Choice function files: {"carrier": n, "choice": {"[0,1]": 0, ...}}; keys
// are the bracketed ascending index lists of the nonempty subsets.
ChoiceFunction load_choice(const std::string& json_text);
std::string save_choice(const ChoiceFunction& f);

// Formula files: one s-expression per line, ';' comments, blank lines
// ignored.
std::vector<FormulaPtr> load_formulas(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace settop

#endif  // SETTOP_IO_HPP
