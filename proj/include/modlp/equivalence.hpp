#pragma once

#include <optional>

#include "modlp/algebra.hpp"
#include "modlp/core.hpp"

namespace modlp {

inline constexpr unsigned k_eva_cap = 16;

// Πh = ⟨Def_R(H), I ∪ O, H, ∅⟩: the rules that may derive hidden atoms, with
// everything visible promoted to input.
dlp_function hidden_part(const dlp_function& fn);

struct eva_result {
  bool has_eva = false;
  // first visible interpretation (canonical order) without a unique stable
  // model of the instantiated hidden part
  std::optional<atom_set> counterexample;
};

// Enough visible atoms: the hidden part has exactly one stable model for
// every visible input.
eva_result has_eva(const dlp_function& fn, unsigned cap = k_eva_cap);

// Fresh names for the verification translation: a* carries the hidden part
// evaluation, a•/a° drive the subset guess, four control atoms summarize the
// verdict.
struct rename_scheme {
  std::unordered_map<atom_id, atom_id> star;    // hidden
  std::unordered_map<atom_id, atom_id> bullet;  // output ∪ hidden
  std::unordered_map<atom_id, atom_id> circle;  // output ∪ hidden
  atom_id unsat = 0, unsat_b = 0, diff = 0, ok = 0;
};

rename_scheme make_rename_scheme(const dlp_function& against);

// Starred copy of the hidden-defining rules, evaluated against the visible
// interface.
dlp_function build_hidden(const dlp_function& fn, const rename_scheme& rs);

// Minimality check: satisfaction of the candidate, a guessed proper subset,
// satisfaction of the reduct by the subset, and the verdict wiring.
dlp_function build_tr(const dlp_function& fn, const rename_scheme& rs);

// EQT(Π1, Π2) = Π1 ⊔ hidden(Π2) ⊔ TR(Π2); stable models are counterexamples
// to Π1's stable models being matched by Π2.
dlp_function eqt(const dlp_function& a, const dlp_function& b, unsigned eva_cap = k_eva_cap);

enum class eq_method { direct, translate };

struct eq_result {
  bool equivalent = false;
  // side (1 or 2) owning the unmatched stable model, and that model
  std::optional<std::pair<int, interpretation>> witness;
};

// Same interface plus matching stable-model sets up to hidden atoms: the
// visible projections must agree as multisets.
eq_result modularly_equivalent(const dlp_function& a, const dlp_function& b,
                               eq_method method, unsigned cap = k_enum_cap);

// Equivalence of the two context joins, checked through the joined
// translations without requiring the context to have enough visible atoms.
eq_result equivalent_in_context(const dlp_function& a, const dlp_function& b,
                                const dlp_function& context, unsigned cap = k_enum_cap);

}  // namespace modlp
