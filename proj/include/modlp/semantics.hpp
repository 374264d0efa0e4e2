#pragma once

#include "modlp/core.hpp"

namespace modlp {

// Enumeration bounds. Everything here is exhaustive over subsets of the
// signature; the caps keep accidental blow-ups from hanging a session and can
// be raised explicitly where the exponential cost is understood.
inline constexpr unsigned k_enum_cap = 24;
inline constexpr unsigned k_minimal_cap = 20;

bool is_classical_model(const dlp_function& fn, const interpretation& m);

// CM(Π): every subset of At(Π) satisfying all rules classically.
model_set classical_models(const dlp_function& fn, unsigned cap = k_enum_cap);

// Π/Mi: partial evaluation against a fixed input interpretation. Rules whose
// input part is falsified disappear; input atoms vanish from the rest.
dlp_function instantiate(const dlp_function& fn, const atom_set& actual_input);

// Π^M: negative bodies resolved against M.
dlp_function gl_reduct(const dlp_function& fn, const interpretation& m);

// MM(Π): models with no smaller model over the same input part.
model_set minimal_models(const dlp_function& fn, unsigned cap = k_minimal_cap);

// SM(Π): interpretations that are input-minimal models of their own reduct.
model_set stable_models(const dlp_function& fn, unsigned cap = k_enum_cap);

bool is_stable(const dlp_function& fn, const interpretation& m);

bool has_stable_model(const dlp_function& fn, unsigned cap = k_enum_cap);
std::optional<interpretation> first_stable_model(const dlp_function& fn,
                                                 unsigned cap = k_enum_cap);

}  // namespace modlp
