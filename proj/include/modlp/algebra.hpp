#pragma once

#include "modlp/completion.hpp"
#include "modlp/core.hpp"
#include "modlp/semantics.hpp"

namespace modlp {

// One entry per violated interface condition (numbered 1-5):
//   1/2  hidden atoms of one side leak into the other
//   3    outputs overlap
//   4/5  a side does not carry all defining rules of its own outputs
struct interface_diagnostic {
  int condition = 0;
  atom_set witnesses;
};

struct interface_report {
  bool ok = true;
  std::vector<interface_diagnostic> violations;
  std::string describe(const atom_table& tbl) const;
};

interface_report respects_interfaces(const dlp_function& a, const dlp_function& b);

// Π1 ⊕ Π2. Requires mutual interface respect; inputs satisfied by the other
// side's outputs are rewired.
dlp_function compose(const dlp_function& a, const dlp_function& b);

// True when some strongly connected component of the composition meets both
// output signatures.
bool mutually_dependent(const dlp_function& a, const dlp_function& b);

// Π1 ⊔ Π2: the composition, defined only for mutually independent operands.
dlp_function join(const dlp_function& a, const dlp_function& b);
dlp_function join_all(const std::vector<dlp_function>& parts);

// Do two interpretations agree on the joint visible atoms?
bool compatible(const interpretation& m1, const dlp_function& f1,
                const interpretation& m2, const dlp_function& f2);

// A1 ⋈ A2: unions of compatible pairs. By default the module join must be
// defined (the hypothesis of the results this operation feeds); raw=true
// computes the plain relational join for diagnostic purposes.
model_set natural_join(const model_set& a1, const dlp_function& f1,
                       const model_set& a2, const dlp_function& f2,
                       bool raw = false);

dlp_function reveal(const dlp_function& fn, const atom_set& atoms);
dlp_function hide(const dlp_function& fn, const atom_set& atoms);

// All U ⊆ O closed under rule heads: A ∩ U ≠ ∅ forces A ∪ B ∪ C ⊆ U.
// Defined for modules of shape ⟨R, ∅, O, ∅⟩ only.
std::vector<atom_set> splitting_sets(const dlp_function& fn, unsigned cap = k_enum_cap);

// Bottom ⟨b_U(R), ∅, U, ∅⟩ and top ⟨t_U(R), U, O \ U, ∅⟩; their join is the
// original module.
std::pair<dlp_function, dlp_function> split(const dlp_function& fn, const atom_set& u);

}  // namespace modlp
