#include "modlp/semantics.hpp"

#include <algorithm>
#include <unordered_map>

#include "dense.hpp"

namespace modlp {

namespace detail {

dense_module dense_module::build(const dlp_function& fn, unsigned cap, const char* what) {
  const atom_set sig = fn.atoms();
  if (sig.size() > cap || sig.size() > 30)
    fail(errc::signature_too_large,
         std::string(what) + ": " + std::to_string(sig.size()) +
             " atoms exceed the enumeration cap of " + std::to_string(std::min(cap, 30u)));
  dense_module d;
  std::vector<std::pair<std::string, atom_id>> named;
  named.reserve(sig.size());
  for (atom_id id : sig) named.emplace_back(fn.table().name(id), id);
  std::sort(named.begin(), named.end());
  for (auto& [name, id] : named) d.atoms.push_back(id);
  d.all = d.width() == 32 ? ~mask{0} : (mask{1} << d.width()) - 1;
  d.input = d.mask_of(fn.input());
  d.defined = d.mask_of(fn.defined());
  d.rules.reserve(fn.rules().size());
  for (const auto& r : fn.rules())
    d.rules.push_back({d.mask_of(r.head), d.mask_of(r.pos_body), d.mask_of(r.neg_body)});
  return d;
}

mask dense_module::bit_of(atom_id id) const {
  for (unsigned i = 0; i < atoms.size(); ++i)
    if (atoms[i] == id) return mask{1} << i;
  return 0;
}

mask dense_module::mask_of(const atom_set& s) const {
  mask m = 0;
  for (atom_id id : s) m |= bit_of(id);
  return m;
}

atom_set dense_module::set_of(mask m) const {
  atom_set s;
  while (m) {
    unsigned b = static_cast<unsigned>(std::countr_zero(m));
    s.insert(atoms[b]);
    m &= m - 1;
  }
  return s;
}

}  // namespace detail

using detail::dense_module;
using detail::mask;

bool is_classical_model(const dlp_function& fn, const interpretation& m) {
  if (!m.subset_of(fn.atoms()))
    fail(errc::out_of_signature,
         "interpretation mentions " + show_atoms(fn.table(), m - fn.atoms()));
  for (const auto& r : fn.rules()) {
    if (!r.pos_body.subset_of(m)) continue;
    if (r.neg_body.intersects(m)) continue;
    if (!r.head.intersects(m)) return false;
  }
  return true;
}

model_set classical_models(const dlp_function& fn, unsigned cap) {
  dense_module d = dense_module::build(fn, cap, "classical_models");
  std::vector<interpretation> out;
  for (mask m = 0;; ++m) {
    if (detail::satisfies(d, m)) out.push_back(d.set_of(m));
    if (m == d.all) break;
  }
  return model_set(fn.ws(), std::move(out));
}

dlp_function instantiate(const dlp_function& fn, const atom_set& actual_input) {
  if (!actual_input.subset_of(fn.input()))
    fail(errc::not_an_input,
         show_atoms(fn.table(), actual_input - fn.input()) + " not in the input signature");
  const atom_set in = fn.input();
  std::vector<rule> reduced;
  for (const auto& r : fn.rules()) {
    if ((r.head & in).intersects(actual_input)) continue;
    if (!(r.pos_body & in).subset_of(actual_input)) continue;
    if ((r.neg_body & in).intersects(actual_input)) continue;
    reduced.push_back({r.head - in, r.pos_body - in, r.neg_body - in});
  }
  return dlp_function::validate(fn.ws(), std::move(reduced), {}, fn.output(), fn.hidden(),
                                /*allow_reserved=*/true);
}

dlp_function gl_reduct(const dlp_function& fn, const interpretation& m) {
  if (!m.subset_of(fn.atoms()))
    fail(errc::out_of_signature,
         "interpretation mentions " + show_atoms(fn.table(), m - fn.atoms()));
  std::vector<rule> reduced;
  for (const auto& r : fn.rules()) {
    if (r.neg_body.intersects(m)) continue;
    reduced.push_back({r.head, r.pos_body, {}});
  }
  return dlp_function::validate(fn.ws(), std::move(reduced), fn.input(), fn.output(),
                                fn.hidden(), /*allow_reserved=*/true);
}

model_set minimal_models(const dlp_function& fn, unsigned cap) {
  dense_module d = dense_module::build(fn, cap, "minimal_models");
  // bucket the models per input part, then keep the ⊆-minimal ones
  std::unordered_map<mask, std::vector<mask>> per_input;
  for (mask m = 0;; ++m) {
    if (detail::satisfies(d, m)) per_input[m & d.input].push_back(m);
    if (m == d.all) break;
  }
  std::vector<interpretation> out;
  for (auto& [in, models] : per_input) {
    std::sort(models.begin(), models.end(), [](mask a, mask b) {
      return std::popcount(a) < std::popcount(b);
    });
    for (std::size_t i = 0; i < models.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < i && minimal; ++j)
        if ((models[j] & models[i]) == models[j] && models[j] != models[i]) minimal = false;
      if (minimal) out.push_back(d.set_of(models[i]));
    }
  }
  return model_set(fn.ws(), std::move(out));
}

model_set stable_models(const dlp_function& fn, unsigned cap) {
  dense_module d = dense_module::build(fn, cap, "stable_models");
  std::vector<interpretation> out;
  for (mask m = 0;; ++m) {
    if (detail::stable(d, m)) out.push_back(d.set_of(m));
    if (m == d.all) break;
  }
  return model_set(fn.ws(), std::move(out));
}

bool is_stable(const dlp_function& fn, const interpretation& m) {
  if (!m.subset_of(fn.atoms()))
    fail(errc::out_of_signature,
         "interpretation mentions " + show_atoms(fn.table(), m - fn.atoms()));
  dense_module d = dense_module::build(fn, 30, "is_stable");
  return detail::stable(d, d.mask_of(m));
}

bool has_stable_model(const dlp_function& fn, unsigned cap) {
  return first_stable_model(fn, cap).has_value();
}

std::optional<interpretation> first_stable_model(const dlp_function& fn, unsigned cap) {
  dense_module d = dense_module::build(fn, cap, "stable_models");
  for (mask m = 0;; ++m) {
    if (detail::stable(d, m)) return d.set_of(m);
    if (m == d.all) break;
  }
  return std::nullopt;
}

}  // namespace modlp
