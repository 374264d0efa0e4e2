#pragma once

#include "modlp/algebra.hpp"
#include "modlp/core.hpp"

namespace modlp {

// The component-induced splitting of a module: a constraint carrier plus one
// module per block of components. Blocks are maximal unions of components
// forced together by shared hidden atoms; with nothing hidden every block is
// a single component.
struct decomposition {
  dlp_function constraint_module;
  std::vector<std::pair<atom_set, dlp_function>> parts;  // (block atoms, module)
};

// Unordered component pairs whose per-component modules would not respect
// each other's hidden atoms: a hidden atom of one read by the other, or
// hidden atoms of both sharing an integrity constraint.
std::vector<std::pair<atom_set, atom_set>> hidden_conflicts(const dlp_function& fn);

decomposition decompose(const dlp_function& fn);

// Folds the parts back together; equals the decomposed module.
dlp_function reconstruct(const decomposition& d);

}  // namespace modlp
